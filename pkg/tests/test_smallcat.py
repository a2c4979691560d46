import pytest

from dihoto import poset as P
from dihoto import smallcat as C


FIG = P.fig_poset()


def test_order_complex_two_chain():
    p = P.closure(["0", "1"], [("0", "1")])
    assert set(C.order_complex(p)) == {("0",), ("1",), ("0", "1")}


def test_order_complex_fig_contains_triple_chain():
    assert ("0", "a", "b", "1") in C.order_complex(FIG)


def test_order_complex_chain_counts():
    # a k-element chain has 2^k - 1 nonempty subsets, all of them chains
    for k in (2, 3, 4, 5):
        p = P.chain_poset(k)
        assert len(C.order_complex(p)) == 2 ** k - 1


def test_full_chain_category_fig():
    cat = C.full_chain_category(FIG)
    assert set(cat.objects) == {
        ("0", "a", "b", "1"), ("0", "a", "1"), ("0", "b", "1"),
        ("0", "c", "1"), ("0", "1"),
    }
    assert cat.is_thin()
    # ("0","1") terminal: exactly one arrow from every object
    for o in cat.objects:
        assert len(cat.hom(o, ("0", "1"))) == 1


def test_full_chain_category_two_chain():
    p = P.closure(["0", "1"], [("0", "1")])
    cat = C.full_chain_category(p)
    assert len(cat.objects) == 1
    assert all(cat.is_identity_arrow(a) for a in cat.arrows)


def test_degree_values_fig():
    assert C.degree(FIG, ("0", "a", "b", "1")) == 3
    assert C.degree(FIG, ("0", "1")) == 9
    assert C.degree(FIG, ("0", "c", "1")) == 2
    assert C.degree(FIG, ("0", "b", "1")) == 5
    assert C.degree(FIG, ("0", "a", "1")) == 5


def test_verify_direct_fig_and_corpus():
    assert C.verify_direct(FIG).ok
    for p in P.enumerate_bounded_posets(5):
        report = C.verify_direct(p)
        assert report.ok, report.violations


def test_interior_square_inequality():
    for p in P.enumerate_bounded_posets(5):
        assert not C.interior_square_inequality_violations(p)


def test_latching_category_fig_top_pair():
    lat = C.latching_category(FIG, ("0", "1"))
    assert len(lat.objects) == 4
    # two components: the a/b block and the isolated c chain
    assert not C.is_connected(lat)


def test_latching_category_maximal_chain_empty():
    lat = C.latching_category(FIG, ("0", "a", "b", "1"))
    assert len(lat.objects) == 0


def test_latching_category_three_chain():
    p = P.chain_poset(3)
    lat = C.latching_category(p, ("0", "1"))
    assert [tuple(o) for o in lat.objects] == [("0", "m1", "1")]


def test_latching_empty_iff_maximal():
    for p in P.enumerate_bounded_posets(5):
        cat = C.full_chain_category(p)
        for chain in cat.objects:
            lat = C.latching_category(p, chain)
            is_maximal = all(
                not (p.lt(a, z) and p.lt(z, b))
                for a, b in zip(chain, chain[1:]) for z in p.names
            )
            assert (len(lat.objects) == 0) == is_maximal


def test_matching_categories_empty():
    for p in P.enumerate_bounded_posets(5):
        for chain in C.full_chains(p):
            assert len(C.matching_category(p, chain).objects) == 0


def test_is_final_identity():
    cat = C.full_chain_category(FIG)
    assert C.is_final_functor(C.inclusion_functor(cat, cat))


def test_is_final_terminal_object_inclusion():
    cat = C.full_chain_category(FIG)
    sub = cat.full_subcategory([("0", "1")])
    assert C.is_final_functor(C.inclusion_functor(sub, cat))


def test_is_final_negative():
    two = C.discrete_category(["x", "y"])
    one = C.discrete_category(["x"])
    inc = C.FinFunctor(one, two, {"x": "x"}, {("x", "x"): ("x", "x")})
    assert not C.is_final_functor(inc)


def test_composition_tables_validated():
    with pytest.raises(C.CatError):
        C.thin_category(["x", "y", "z"],
                        lambda a, b: (a, b) in {("x", "x"), ("y", "y"), ("z", "z"),
                                                ("x", "y"), ("y", "z")})


def test_product_category():
    a = C.full_chain_category(P.chain_poset(3))
    b = C.discrete_category(["u", "v"])
    prod = C.product_category(a, b)
    assert len(prod.objects) == len(a.objects) * 2
    prod._validate()


def test_dot_exports():
    assert "digraph" in C.dot_chain_category(FIG)
    assert '"0" -> "a"' in C.dot_hasse(FIG)

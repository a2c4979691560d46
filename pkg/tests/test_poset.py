import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dihoto import poset as P


def two_chain():
    return P.closure(["0", "1"], [("0", "1")])


# -- oracles -----------------------------------------------------------------


def all_chains(p, a, b):
    """Exhaustive enumeration of strict chains from a to b (the ell oracle)."""
    out = []

    def grow(chain):
        last = chain[-1]
        if last == b:
            out.append(tuple(chain))
            return
        for nxt in p.names:
            if p.lt(last, nxt) and p.leq(nxt, b):
                grow(chain + [nxt])

    grow([a])
    return out


def ell_oracle(p, a, b):
    return max(len(c) - 1 for c in all_chains(p, a, b))


# -- closure -------------------------------------------------------------------


def test_closure_two_chain():
    p = two_chain()
    assert p.bottom == "0" and p.top == "1"
    assert p.leq("0", "1") and not p.leq("1", "0")


def test_closure_fig_poset():
    p = P.fig_poset()
    assert len(p) == 5
    assert p.leq("0", "b") and p.leq("a", "1") and not p.leq("a", "c")
    assert set(p.covers()) == {("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")}


def test_closure_cycle_detected():
    with pytest.raises(P.CycleDetected):
        P.closure(["0", "1"], [("0", "1"), ("1", "0")])


def test_closure_not_bounded():
    with pytest.raises(P.NotBounded):
        P.closure(["a", "b", "c"], [("a", "b")])
    with pytest.raises(P.NotBounded):
        P.closure(["a"], [])


# -- chain length ----------------------------------------------------------------


def test_chain_length_fig_poset_examples():
    p = P.fig_poset()
    assert p.chain_length("0", "1") == ell_oracle(p, "0", "1") == 3
    assert p.chain_length("a", "1") == ell_oracle(p, "a", "1") == 2
    for (a, b) in p.covers():
        assert p.chain_length(a, b) == 1


def test_chain_length_not_comparable():
    p = P.fig_poset()
    with pytest.raises(P.NotComparable):
        p.chain_length("a", "c")
    with pytest.raises(P.NotComparable):
        p.chain_length("1", "0")
    with pytest.raises(P.NotComparable):
        p.chain_length("a", "a")


def test_chain_length_matches_oracle_on_corpus():
    for p in P.enumerate_bounded_posets(6):
        for (a, b) in p.strict_pairs():
            assert p.chain_length(a, b) == ell_oracle(p, a, b)


def test_chain_length_bounds():
    for p in P.enumerate_bounded_posets(6):
        for (a, b) in p.strict_pairs():
            ell = p.chain_length(a, b)
            halfopen = len(p.interval_elements(a, b)) - 1
            assert 1 <= ell <= halfopen


def test_superadditivity_up_to_7():
    for p in P.enumerate_bounded_posets(7):
        for a, b in p.strict_pairs():
            for c in p.names:
                if p.lt(b, c):
                    assert p.chain_length(a, b) + p.chain_length(b, c) <= p.chain_length(a, c)


# -- intervals ---------------------------------------------------------------------


def test_interval_examples():
    p = P.fig_poset()
    sub = p.interval("0", "b")
    assert set(sub.names) == {"0", "a", "b"}
    assert sub.bottom == "0" and sub.top == "b"
    whole = p.interval("0", "1")
    assert set(whole.names) == set(p.names)
    for (a, b) in p.covers():
        assert len(p.interval(a, b)) == 2


def test_interval_idempotent():
    p = P.fig_poset()
    once = p.interval("0", "b")
    twice = once.interval("0", "b")
    assert once.names == twice.names
    assert [once.leq(a, b) for a in once.names for b in once.names] == \
        [twice.leq(a, b) for a in twice.names for b in twice.names]


# -- refinement morphisms -------------------------------------------------------------


def test_validate_refinement_inclusion():
    src = two_chain()
    tgt = P.chain_poset(3)
    f = P.PosetMorphism(src, tgt, {"0": "0", "1": "1"})
    assert P.validate_refinement(f).ok


def test_validate_refinement_constant_fails():
    p = P.fig_poset()
    f = P.PosetMorphism(p, p, {nm: "0" for nm in p.names})
    report = P.validate_refinement(f)
    assert not report.ok
    assert "injective" in report.failures and "top_preserved" in report.failures


def test_validate_refinement_identity():
    p = P.fig_poset()
    f = P.PosetMorphism(p, p, {nm: nm for nm in p.names})
    assert P.validate_refinement(f).ok


def test_morphism_rejects_non_monotone():
    src = P.chain_poset(3)
    with pytest.raises(P.PosetError):
        P.PosetMorphism(src, src, {"0": "1", "m1": "m1", "1": "0"})


# -- enumeration ------------------------------------------------------------------------


def test_enumeration_counts():
    # middle posets on k unlabelled points: 1, 1, 2, 5, 16, 63
    expected = {2: 1, 3: 1, 4: 2, 5: 5, 6: 16, 7: 63}
    seen = {}
    for p in P.enumerate_bounded_posets(7):
        seen[len(p)] = seen.get(len(p), 0) + 1
    assert seen == expected


def test_enumeration_no_isomorphic_duplicates():
    keys = [p.canonical_key() for p in P.enumerate_bounded_posets(6)]
    assert len(keys) == len(set(keys))


def test_enumeration_contains_diamond():
    diamonds = [p for p in P.enumerate_bounded_posets(4)
                if p.isomorphic(P.diamond_poset())]
    assert len(diamonds) == 1


def test_enumeration_deterministic():
    a = [p.canonical_key() for p in P.enumerate_bounded_posets(6)]
    b = [p.canonical_key() for p in P.enumerate_bounded_posets(6)]
    assert a == b


# -- text format --------------------------------------------------------------------------


def test_parse_roundtrip():
    p = P.fig_poset()
    q = P.parse_poset(P.format_poset(p))
    assert q.names == p.names and q.covers() == p.covers()


def test_parse_rejects_duplicates_and_unknown():
    with pytest.raises(P.PosetParseError):
        P.parse_poset("elem a\nelem a\n")
    with pytest.raises(P.PosetParseError):
        P.parse_poset("elem a\ncover a b\n")
    with pytest.raises(P.PosetParseError):
        P.parse_poset("wat\n")


def test_parse_comments_and_blank_lines():
    text = "# header\nelem 0\n\nelem 1  # trailing\ncover 0 1\n"
    p = P.parse_poset(text)
    assert p.bottom == "0" and p.top == "1"


# -- randomized closure properties ----------------------------------------------------------


@st.composite
def random_cover_sets(draw):
    k = draw(st.integers(min_value=0, max_value=3))
    mids = [f"m{i}" for i in range(k)]
    pairs = [(a, b) for i, a in enumerate(mids) for b in mids[i + 1:]]
    chosen = [p for p in pairs if draw(st.booleans())]
    return mids, chosen


@given(random_cover_sets())
@settings(max_examples=60, deadline=None)
def test_closure_invariants_random(data):
    mids, rel = data
    elems = ["0", "1", *mids]
    covers = [("0", m) for m in mids] + [(m, "1") for m in mids] + rel
    if not mids:
        covers = [("0", "1")]
    p = P.closure(elems, covers)
    # reflexive, antisymmetric, transitive; bounds sandwich everything
    for a in p.names:
        assert p.leq(a, a)
        assert p.leq("0", a) and p.leq(a, "1")
    for a, b in itertools.permutations(p.names, 2):
        if p.leq(a, b) and p.leq(b, a):
            raise AssertionError("antisymmetry violated")
    for a in p.names:
        for b in p.names:
            for c in p.names:
                if p.leq(a, b) and p.leq(b, c):
                    assert p.leq(a, c)

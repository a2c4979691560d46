import random

import pytest

from dihoto import colim as CL
from dihoto import poset as P
from dihoto import sset as S
from dihoto import smallcat as C


def constant_point_diagram(shape):
    pt = S.point()
    idm = S.identity_smap(pt)
    return CL.Diagram(shape, {o: pt for o in shape.objects},
                      {a: idm for a in shape.arrows})


def test_colimit_single_object():
    shape = C.discrete_category(["x"])
    iv = S.interval()
    d = CL.Diagram(shape, {"x": iv}, {("x", "x"): S.identity_smap(iv)})
    apex, cocone = CL.colimit(d)
    assert S.is_isomorphic(apex, iv)
    assert cocone.commutes_with(d)


def test_colimit_pushout_of_points_over_empty():
    # pushout of (point <- empty -> point) has two points
    shape = C.thin_category(["w", "u", "v"],
                            lambda a, b: a == b or a == "w")
    e, p1, p2 = S.empty(), S.point(), S.point()
    d = CL.Diagram(shape, {"w": e, "u": p1, "v": p2},
                   {("w", "w"): S.identity_smap(e),
                    ("u", "u"): S.identity_smap(p1),
                    ("v", "v"): S.identity_smap(p2),
                    ("w", "u"): S.SMap(e, p1, {}),
                    ("w", "v"): S.SMap(e, p2, {})})
    apex, _ = CL.colimit(d)
    assert apex.count(0) == 2 and apex.dim == 0


def test_colimit_constant_point_counts_components():
    # over the latching shape of the top pair of the example poset the shape
    # has two components, so the constant-point colimit is two points
    fig = P.fig_poset()
    lat = C.latching_category(fig, ("0", "1"))
    apex, _ = CL.colimit(constant_point_diagram(lat))
    assert apex.count(0) == 2
    # over a connected shape it is a single point
    lat3 = C.latching_category(P.chain_poset(3), ("0", "1"))
    apex3, _ = CL.colimit(constant_point_diagram(lat3))
    assert apex3.count(0) == 1


def test_colimit_universal_property_randomized():
    rng = random.Random(7)
    fig = P.fig_poset()
    lat = C.latching_category(fig, ("0", "1"))
    d = constant_point_diagram(lat)
    dc = CL.DiagramColimit(d)
    # competing cocone into a 3-point discrete sset: legs constant per component
    pts, _ = S.disjoint_union([S.point(), S.point(), S.point()])
    for _ in range(10):
        comp_val = {}
        legs = {}
        ok_choice = {}
        # assign each component of the shape a random vertex
        for o in lat.objects:
            root = min(q for q in lat.objects if _connected(lat, o, q))
            if root not in ok_choice:
                ok_choice[root] = rng.choice([0, 1, 2])
            legs[o] = S.SMap(d.objects[o], pts, {0: (ok_choice[root], (0,))})
        med = dc.mediate(pts, legs)
        for o in lat.objects:
            assert S.compose_smaps(med, dc.legs[o]).mapping == legs[o].mapping


def _connected(cat, a, b):
    seen = {a}
    frontier = [a]
    while frontier:
        x = frontier.pop()
        for ar in cat.arrows:
            for (s, t) in ((cat.src[ar], cat.tgt[ar]), (cat.tgt[ar], cat.src[ar])):
                if s == x and t not in seen:
                    seen.add(t)
                    frontier.append(t)
    return b in seen


# -- pushout products -------------------------------------------------------------


def empty_to_point():
    return S.SMap(S.empty(), S.point(), {})


def point_into_interval():
    return S.interval_endpoint(0)


def test_pushout_product_empty_to_point():
    f = empty_to_point()
    g = empty_to_point()
    pp = CL.pushout_product(f, g)
    assert pp.source.is_empty
    assert pp.target.count(0) == 1


def test_pushout_product_disk_boundary_square():
    f = S.boundary_inclusion(1)
    g = S.boundary_inclusion(1)
    pp = CL.pushout_product(f, g)
    h = S.homology(pp.source)
    assert h.betti == (1, 1)  # boundary of the square
    assert S.homology(pp.target).reduced_trivial()


def test_pushout_product_unit_law():
    # the unit for the pushout product is (empty -> point): f box unit == f
    f = S.boundary_inclusion(1)
    pp = CL.pushout_product(f, empty_to_point())
    assert S.is_isomorphic(pp.source, f.source)
    assert S.is_isomorphic(pp.target, f.target)
    assert S.homology(pp.source).betti == S.homology(f.source).betti


def test_pushout_product_with_identity_is_iso():
    # boxing with an identity map yields an isomorphism onto the target product
    f = S.boundary_inclusion(1)
    pp = CL.pushout_product(f, S.identity_smap(S.point()))
    assert pp.is_iso()


def test_iterated_three_disk_boundaries_gives_sphere2():
    maps = [S.boundary_inclusion(1) for _ in range(3)]
    ipp = CL.IteratedPushoutProduct(maps)
    h = S.homology(ipp.source)
    assert h.betti == (1, 0, 1)  # boundary of the cube


def test_iterated_with_unit_factor_reduces():
    f = S.boundary_inclusion(1)
    g = point_into_interval()
    maps = [f, g, empty_to_point()]
    ipp = CL.IteratedPushoutProduct(maps)
    two = CL.pushout_product(f, g)
    assert S.is_isomorphic(ipp.source, two.source)


def test_iterated_three_empties():
    maps = [empty_to_point() for _ in range(3)]
    ipp = CL.IteratedPushoutProduct(maps)
    assert ipp.source.is_empty
    assert ipp.map.target.count(0) == 1


# -- cube formula -----------------------------------------------------------------------


def test_cube_p0():
    f = point_into_interval()
    src, cmap = CL.cube_formula_source([f])
    assert S.is_isomorphic(src, f.source)
    assert cmap.target is CL._corner_nprod([f], frozenset([0])).sset


def test_cube_p1_empties():
    maps = [empty_to_point(), empty_to_point()]
    src, _ = CL.cube_formula_source(maps)
    assert src.is_empty


GENERATORS = ["empty_to_point", "disk_boundary", "point_into_interval", "identity_interval"]


def make_generator(name):
    if name == "empty_to_point":
        return empty_to_point()
    if name == "disk_boundary":
        return S.boundary_inclusion(1)
    if name == "point_into_interval":
        return point_into_interval()
    if name == "identity_interval":
        return S.identity_smap(S.interval())
    raise ValueError(name)


def test_cube_matches_iterated_exhaustive_p1():
    for a in GENERATORS:
        for b in GENERATORS:
            cube = CL.CubeSource([make_generator(a), make_generator(b)])
            ok, _ = cube.compare_with_iterated()
            assert ok, (a, b)


def test_cube_matches_iterated_random_p2():
    rng = random.Random(2024)
    for _ in range(12):
        names = [rng.choice(GENERATORS) for _ in range(3)]
        cube = CL.CubeSource([make_generator(nm) for nm in names])
        ok, _ = cube.compare_with_iterated()
        assert ok, names


# -- latching objects ----------------------------------------------------------------------


def test_latching_object_empty_over_maximal():
    fig = P.fig_poset()
    cat = C.full_chain_category(fig)
    pt = S.point()
    idm = S.identity_smap(pt)
    d = CL.Diagram(cat, {o: pt for o in cat.objects}, {a: idm for a in cat.arrows})
    src, cmp = CL.latching_object(d, ("0", "a", "b", "1"))
    assert src.is_empty
    src2, cmp2 = CL.latching_object(d, ("0", "1"))
    assert src2.count(0) == 2  # two components of the latching shape


# -- product interchange ----------------------------------------------------------------------


def span_shape():
    return C.thin_category(["w", "u", "v"], lambda a, b: a == b or a == "w")


def random_small_sset(rng):
    choice = rng.randrange(4)
    return [S.point(), S.sphere(0), S.interval(), S.sphere(1)][choice]


def random_map(rng, src, tgt):
    # graded random simplicial map built dimension by dimension
    mapping = {}
    for d in range(src.dim + 1):
        for x in src.ids_of_dim(d):
            if d == 0:
                mapping[x] = (rng.choice(tgt.ids_of_dim(0)), (0,))
            else:
                candidates = []
                for full in tgt.fulls(d):
                    good = all(
                        tgt.face_full(full, i) == mapping_face(src, tgt, mapping, x, i)
                        for i in range(d + 1)
                    )
                    if good:
                        candidates.append(full)
                if not candidates:
                    return None
                mapping[x] = rng.choice(candidates)
    return S.SMap(src, tgt, mapping)


def mapping_face(src, tgt, mapping, x, i):
    t, s = src.face_full((x, S.identity_map(src.dim_of[x])), i)
    y, w = mapping[t]
    return tgt.evaluate(y, S.compose_maps(w, s))


def random_span_diagram(rng):
    shape = span_shape()
    w = random_small_sset(rng)
    u = random_small_sset(rng)
    v = random_small_sset(rng)
    fu = fv = None
    while fu is None:
        u = random_small_sset(rng)
        fu = random_map(rng, w, u)
    while fv is None:
        v = random_small_sset(rng)
        fv = random_map(rng, w, v)
    return CL.Diagram(shape, {"w": w, "u": u, "v": v},
                      {("w", "w"): S.identity_smap(w),
                       ("u", "u"): S.identity_smap(u),
                       ("v", "v"): S.identity_smap(v),
                       ("w", "u"): fu, ("w", "v"): fv})


def test_product_interchange_randomized():
    rng = random.Random(99)
    for _ in range(8):
        d = random_span_diagram(rng)
        e = random_span_diagram(rng)
        cmp_map = CL.product_interchange_map(d, e)
        assert cmp_map.is_iso()

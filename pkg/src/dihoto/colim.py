"""Colimits of finite diagrams of simplicial sets, pushout products, the
subset-cube source formula, and latching objects of chain-shaped diagrams.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import sset as S
from .smallcat import FinCat, thin_category, product_category


class DiagramError(Exception):
    pass


class Diagram:
    """A functor from a finite category to simplicial sets.

    Functoriality is checked exhaustively: identities land on identities and
    the arrow assignment respects every composite.
    """

    __slots__ = ("shape", "objects", "arrows")

    def __init__(self, shape: FinCat, objects: dict, arrows: dict, validate: bool = True):
        self.shape = shape
        self.objects = objects
        self.arrows = arrows
        if validate:
            self._validate()

    def _validate(self):
        for o in self.shape.objects:
            if o not in self.objects:
                raise DiagramError(f"diagram misses object {o!r}")
        for a in self.shape.arrows:
            if a not in self.arrows:
                raise DiagramError(f"diagram misses arrow {a!r}")
            m = self.arrows[a]
            if m.source is not self.objects[self.shape.src[a]] or \
                    m.target is not self.objects[self.shape.tgt[a]]:
                raise DiagramError(f"arrow {a!r} has wrong endpoints")
        for o in self.shape.objects:
            ia = self.shape.ident[o]
            if self.arrows[ia].mapping != S.identity_smap(self.objects[o]).mapping:
                raise DiagramError(f"identity arrow of {o!r} is not the identity map")
        for f in self.shape.arrows:
            for g in self.shape.arrows:
                if self.shape.src[g] != self.shape.tgt[f]:
                    continue
                h = self.shape.comp[(g, f)]
                got = S.compose_smaps(self.arrows[g], self.arrows[f])
                if got.mapping != self.arrows[h].mapping:
                    raise DiagramError(f"functoriality fails on {g!r} after {f!r}")

    def restrict(self, objects) -> "Diagram":
        sub = self.shape.full_subcategory(objects)
        return Diagram(sub,
                       {o: self.objects[o] for o in sub.objects},
                       {a: self.arrows[a] for a in sub.arrows},
                       validate=False)


@dataclass(frozen=True)
class Cocone:
    apex: S.SSet
    legs: dict

    def commutes_with(self, diagram: Diagram) -> bool:
        for a in diagram.shape.arrows:
            src, tgt = diagram.shape.src[a], diagram.shape.tgt[a]
            via = S.compose_smaps(self.legs[tgt], diagram.arrows[a])
            if via.mapping != self.legs[src].mapping:
                return False
        return True


class DiagramColimit:
    """Colimit apex with its cocone and mediator to competing cocones."""

    __slots__ = ("diagram", "sset", "legs", "_raw", "_order")

    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        order = list(diagram.shape.objects)
        objs = [diagram.objects[o] for o in order]
        idx = {o: i for i, o in enumerate(order)}
        arrows = []
        for a in diagram.shape.arrows:
            if diagram.shape.is_identity_arrow(a):
                continue
            arrows.append((idx[diagram.shape.src[a]], idx[diagram.shape.tgt[a]],
                           diagram.arrows[a]))
        raw = S.colimit_of(objs, arrows)
        self._raw = raw
        self._order = order
        self.sset = raw.sset
        self.legs = {o: raw.legs[idx[o]] for o in order}

    def cocone(self) -> Cocone:
        return Cocone(apex=self.sset, legs=dict(self.legs))

    def mediate(self, target: S.SSet, legs: dict) -> S.SMap:
        """The unique factorization through a competing cocone."""
        by_index = [legs[o] for o in self._order]
        return self._raw.mediate(target, by_index)


def colimit(diagram: Diagram) -> tuple[S.SSet, Cocone]:
    dc = DiagramColimit(diagram)
    return dc.sset, dc.cocone()


# -- binary product maps ----------------------------------------------------------------


def binary_prod_map(fa: S.SMap, fb: S.SMap, src: S.Prod, tgt: S.Prod) -> S.SMap:
    mapping = {}
    for x, d in src.sset.dim_of.items():
        ca, cb = src.comp[x]
        mapping[x] = tgt.pair(fa.apply_full(ca), fb.apply_full(cb))
    return S.SMap(src.sset, tgt.sset, mapping)


# -- pushout products --------------------------------------------------------------------


def pushout_product(f: S.SMap, g: S.SMap) -> S.SMap:
    """The induced map (U x X) cup_{U x W} (V x W) -> V x X."""
    u, v = f.source, f.target
    w, x = g.source, g.target
    ux, uw = S.Prod(u, x), S.Prod(u, w)
    vw, vx = S.Prod(v, w), S.Prod(v, x)
    a = binary_prod_map(S.identity_smap(u), g, uw, ux)
    b = binary_prod_map(f, S.identity_smap(w), uw, vw)
    po = S.pushout(a, b, tag="ppsrc")
    on_u = binary_prod_map(f, S.identity_smap(x), ux, vx)
    on_v = binary_prod_map(S.identity_smap(v), g, vw, vx)
    return po.mediate(vx.sset, on_u, on_v)


class IteratedPushoutProduct:
    """Left-nested pushout product of a list of maps.

    Alongside the induced map into the product of the targets, the corner
    inclusions from every proper mixed product are maintained; they express
    the source as the cube-shaped colimit and drive the latching comparisons.
    """

    def __init__(self, maps):
        if not maps:
            raise DiagramError("need at least one map")
        self.maps = list(maps)
        p = len(maps) - 1
        self.bprod = _corner_nprod(maps, frozenset(range(p + 1)))
        w = maps[0].source
        j = maps[0]
        legs = {frozenset(): S.identity_smap(w)}
        bk = _corner_nprod(maps[:1], frozenset([0]))
        for k in range(1, p + 1):
            w, j, legs, bk = self._step(k, w, j, legs, bk)
        self.source = w
        self.map = j
        self.corner = dict(legs)

    def _step(self, k, w, j, legs, bk):
        f = self.maps[k]
        a, b = f.source, f.target
        p1 = S.Prod(bk.sset, a)
        p2 = S.Prod(w, a)
        p3 = S.Prod(w, b)
        to_p1 = binary_prod_map(j, S.identity_smap(a), p2, p1)
        to_p3 = binary_prod_map(S.identity_smap(w), f, p2, p3)
        po = S.pushout(to_p1, to_p3, tag="ppstep")
        bk1 = _corner_nprod(self.maps[: k + 1], frozenset(range(k + 1)))

        def flatten_u(xid, d):
            fb, fa = p1.comp[xid]
            comps = bk.components(fb)
            return bk1.pair(list(comps) + [f.apply_full(fa)], dim=d)

        def flatten_v(xid, d):
            fw, fbn = p3.comp[xid]
            comps = bk.components(j.apply_full(fw))
            return bk1.pair(list(comps) + [fbn], dim=d)

        on_u = S.SMap(p1.sset, bk1.sset,
                      {xid: flatten_u(xid, d) for xid, d in p1.sset.dim_of.items()})
        on_v = S.SMap(p3.sset, bk1.sset,
                      {xid: flatten_v(xid, d) for xid, d in p3.sset.dim_of.items()})
        j1 = po.mediate(bk1.sset, on_u, on_v)

        new_legs = {}
        prev_indices = frozenset(range(k))
        for raw in itertools.chain.from_iterable(
                itertools.combinations(range(k + 1), r) for r in range(k + 1)):
            sub = frozenset(raw)
            cs = _corner_nprod(self.maps[: k + 1], sub)
            if k not in sub:
                if sub == prev_indices:
                    def leg_map(xid, d, cs=cs):
                        comps = cs.components((xid, S.identity_map(d)))
                        fb = bk.pair(list(comps[:-1]), dim=d)
                        return po.leg_u.apply_full(p1.pair(fb, comps[-1]))
                else:
                    lam = legs[sub]
                    prev = _corner_nprod(self.maps[:k], sub)

                    def leg_map(xid, d, cs=cs, lam=lam, prev=prev):
                        comps = cs.components((xid, S.identity_map(d)))
                        fw = lam.apply_full(prev.pair(list(comps[:-1]), dim=d))
                        return po.leg_w.apply_full(p2.pair(fw, comps[-1]))
            else:
                core = sub - {k}
                lam = legs[core]
                prev = _corner_nprod(self.maps[:k], core)

                def leg_map(xid, d, cs=cs, lam=lam, prev=prev):
                    comps = cs.components((xid, S.identity_map(d)))
                    fw = lam.apply_full(prev.pair(list(comps[:-1]), dim=d))
                    return po.leg_v.apply_full(p3.pair(fw, comps[-1]))
            new_legs[sub] = S.SMap(
                cs.sset, po.sset,
                {xid: leg_map(xid, d) for xid, d in cs.sset.dim_of.items()})
        return po.sset, j1, new_legs, bk1


def _corner_nprod(maps, subset) -> S.NProd:
    factors = tuple(m.target if i in subset else m.source for i, m in enumerate(maps))
    return S.cached_nprod(factors)


def iterated_pushout_product(maps) -> S.SMap:
    """Left-nested pushout product; returns the induced map."""
    return IteratedPushoutProduct(maps).map


# -- subset-cube formula ----------------------------------------------------------------------


class CubeSource:
    """Colimit over proper subsets S of the mixed products; the alternative
    route to the source of an iterated pushout product."""

    def __init__(self, maps):
        if not maps:
            raise DiagramError("need at least one map")
        self.maps = list(maps)
        p = len(maps) - 1
        indices = list(range(p + 1))
        subsets = [frozenset(c) for r in range(p + 1)
                   for c in itertools.combinations(indices, r)]
        shape = thin_category(tuple(sorted(subsets, key=sorted)),
                              lambda a, b: a <= b)
        self.corners = {sub: _corner_nprod(self.maps, sub) for sub in subsets}
        objects = {sub: self.corners[sub].sset for sub in subsets}
        arrows = {}
        for a in shape.arrows:
            sub, sup = a
            step = [self.maps[i] if i in (sup - sub)
                    else S.identity_smap(self.corners[sub].factors[i])
                    for i in indices]
            arrows[a] = S.nprod_map(step, self.corners[sub], self.corners[sup])
        self.diagram = Diagram(shape, objects, arrows)
        self.colim = DiagramColimit(self.diagram)
        self.sset = self.colim.sset
        self.bprod = _corner_nprod(maps, frozenset(indices))
        legs = {}
        for sub in subsets:
            step = [self.maps[i] if i not in sub else S.identity_smap(self.maps[i].target)
                    for i in indices]
            legs[sub] = S.nprod_map(step, self.corners[sub], self.bprod)
        self.map = self.colim.mediate(self.bprod.sset, legs)

    def compare_with_iterated(self) -> tuple[bool, S.SMap | None]:
        """Mediate onto the iterated source; True iff it is an iso and the
        triangle over the product of targets commutes."""
        ipp = IteratedPushoutProduct(self.maps)
        legs = {sub: ipp.corner[sub] for sub in self.corners}
        med = self.colim.mediate(ipp.source, legs)
        if not med.is_iso():
            return False, med
        lhs = S.compose_smaps(ipp.map, med)
        return lhs.mapping == self.map.mapping, med


def cube_formula_source(maps) -> tuple[S.SSet, S.SMap]:
    """The subset-colimit source and its canonical map to the target product."""
    cube = CubeSource(maps)
    return cube.sset, cube.map


# -- latching objects ---------------------------------------------------------------------------


def latching_object(diagram: Diagram, chain) -> tuple[S.SSet, S.SMap]:
    """Colimit of the diagram over the strictly finer chains, with its
    comparison map into the value at ``chain``."""
    finer = [o for o in diagram.shape.objects if set(chain) < set(o)]
    sub = diagram.restrict(finer)
    dc = DiagramColimit(sub)
    target = diagram.objects[chain]
    legs = {}
    for o in finer:
        arrow = (o, chain)
        legs[o] = diagram.arrows[arrow]
    med = dc.mediate(target, legs)
    return dc.sset, med


def latching_colimit(diagram: Diagram, chain) -> DiagramColimit:
    finer = [o for o in diagram.shape.objects if set(chain) < set(o)]
    return DiagramColimit(diagram.restrict(finer))


# -- colimit/product interchange -----------------------------------------------------------------


def pointwise_product(d: Diagram, e: Diagram):
    """The pointwise product diagram over the product shape, with its Prods."""
    shape = product_category(d.shape, e.shape)
    prods = {}
    objects = {}
    for (x, y) in shape.objects:
        pr = S.Prod(d.objects[x], e.objects[y])
        prods[(x, y)] = pr
        objects[(x, y)] = pr.sset
    arrows = {}
    for (a, b) in shape.arrows:
        src = (d.shape.src[a], e.shape.src[b])
        tgt = (d.shape.tgt[a], e.shape.tgt[b])
        arrows[(a, b)] = binary_prod_map(d.arrows[a], e.arrows[b], prods[src], prods[tgt])
    return Diagram(shape, objects, arrows, validate=False), prods


def product_interchange_map(d: Diagram, e: Diagram) -> S.SMap:
    """Canonical map colim(D x E) -> colim(D) x colim(E); an iso when the
    interchange law holds (always, in this cartesian-closed setting)."""
    de, prods = pointwise_product(d, e)
    dc_d, dc_e, dc_de = DiagramColimit(d), DiagramColimit(e), DiagramColimit(de)
    target = S.Prod(dc_d.sset, dc_e.sset)
    legs = {}
    for (x, y) in de.shape.objects:
        legs[(x, y)] = binary_prod_map(dc_d.legs[x], dc_e.legs[y], prods[(x, y)], target)
    return dc_de.mediate(target.sset, legs)

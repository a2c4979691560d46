"""Explicit finite categories: chain categories of bounded posets, degrees,
latching/matching subcategories, comma categories and finality.

The category of interest has the bottom-to-top chains of a poset as objects
and one arrow from a chain to each coarser chain (delete interior elements).
It is thin, so arrows are stored as source/target pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .poset import BoundedPoset


class CatError(Exception):
    pass


class FinCat:
    """A finite category given by objects, arrows and a composition table.

    Arrows are opaque keys; ``src``/``tgt`` give endpoints and ``comp`` maps a
    composable pair ``(g, f)`` (g after f) to its composite.  Associativity
    and unit laws are checked exhaustively at construction.
    """

    __slots__ = ("objects", "arrows", "src", "tgt", "comp", "ident")

    def __init__(self, objects, arrows, src, tgt, comp, ident, validate=True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.comp = dict(comp)
        self.ident = dict(ident)
        if validate:
            self._validate()

    def _validate(self):
        objs = set(self.objects)
        for a in self.arrows:
            if self.src[a] not in objs or self.tgt[a] not in objs:
                raise CatError(f"arrow {a!r} has missing endpoints")
        for o in self.objects:
            i = self.ident[o]
            if self.src[i] != o or self.tgt[i] != o:
                raise CatError(f"identity of {o!r} is not an endomorphism")
        for f in self.arrows:
            for g in self.arrows:
                if self.src[g] == self.tgt[f]:
                    if (g, f) not in self.comp:
                        raise CatError(f"missing composite {g!r} after {f!r}")
                    h = self.comp[(g, f)]
                    if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                        raise CatError("composite has wrong endpoints")
        for f in self.arrows:
            if self.comp[(f, self.ident[self.src[f]])] != f:
                raise CatError("right unit law fails")
            if self.comp[(self.ident[self.tgt[f]], f)] != f:
                raise CatError("left unit law fails")
        for f in self.arrows:
            for g in self.arrows:
                if self.src[g] != self.tgt[f]:
                    continue
                for h in self.arrows:
                    if self.src[h] != self.tgt[g]:
                        continue
                    if self.comp[(h, self.comp[(g, f)])] != self.comp[(self.comp[(h, g)], f)]:
                        raise CatError("associativity fails")

    def is_identity_arrow(self, a) -> bool:
        return self.ident[self.src[a]] == a

    def hom(self, x, y):
        return tuple(a for a in self.arrows if self.src[a] == x and self.tgt[a] == y)

    def is_thin(self) -> bool:
        return all(len(self.hom(x, y)) <= 1 for x in self.objects for y in self.objects)

    def full_subcategory(self, objects) -> "FinCat":
        keep = set(objects)
        arrows = [a for a in self.arrows if self.src[a] in keep and self.tgt[a] in keep]
        comp = {k: v for k, v in self.comp.items()
                if k[0] in set(arrows) and k[1] in set(arrows)}
        ident = {o: self.ident[o] for o in keep}
        return FinCat(tuple(o for o in self.objects if o in keep), arrows,
                      {a: self.src[a] for a in arrows}, {a: self.tgt[a] for a in arrows},
                      comp, ident, validate=False)

    def __repr__(self):
        return f"FinCat({len(self.objects)} objects, {len(self.arrows)} arrows)"


def thin_category(objects, relation) -> FinCat:
    """The thin category with one arrow x -> y whenever relation(x, y).

    ``relation`` must be reflexive and transitive on ``objects``.
    """
    objects = tuple(objects)
    arrows = []
    for x in objects:
        for y in objects:
            if relation(x, y):
                arrows.append((x, y))
    src = {a: a[0] for a in arrows}
    tgt = {a: a[1] for a in arrows}
    comp = {}
    aset = set(arrows)
    for (x, y) in arrows:
        for (y2, z) in arrows:
            if y2 == y:
                if (x, z) not in aset:
                    raise CatError("relation is not transitive")
                comp[((y, z), (x, y))] = (x, z)
    ident = {x: (x, x) for x in objects}
    for x in objects:
        if (x, x) not in aset:
            raise CatError("relation is not reflexive")
    return FinCat(objects, arrows, src, tgt, comp, ident)


def discrete_category(objects) -> FinCat:
    return thin_category(objects, lambda x, y: x == y)


def product_category(c: FinCat, d: FinCat) -> FinCat:
    objects = [(x, y) for x in c.objects for y in d.objects]
    arrows = [(a, b) for a in c.arrows for b in d.arrows]
    src = {(a, b): (c.src[a], d.src[b]) for (a, b) in arrows}
    tgt = {(a, b): (c.tgt[a], d.tgt[b]) for (a, b) in arrows}
    comp = {}
    for (a2, b2) in arrows:
        for (a1, b1) in arrows:
            if c.src[a2] == c.tgt[a1] and d.src[b2] == d.tgt[b1]:
                comp[((a2, b2), (a1, b1))] = (c.comp[(a2, a1)], d.comp[(b2, b1)])
    ident = {(x, y): (c.ident[x], d.ident[y]) for (x, y) in objects}
    return FinCat(objects, arrows, src, tgt, comp, ident, validate=False)


@dataclass(frozen=True)
class FinFunctor:
    source: FinCat
    target: FinCat
    on_objects: dict
    on_arrows: dict

    def __post_init__(self):
        c, d = self.source, self.target
        for o in c.objects:
            if self.on_objects[o] not in set(d.objects):
                raise CatError(f"functor misses object {o!r}")
        for a in c.arrows:
            fa = self.on_arrows[a]
            if d.src[fa] != self.on_objects[c.src[a]] or d.tgt[fa] != self.on_objects[c.tgt[a]]:
                raise CatError(f"functor breaks endpoints on {a!r}")
        for o in c.objects:
            if self.on_arrows[c.ident[o]] != d.ident[self.on_objects[o]]:
                raise CatError("functor breaks identities")
        for f in c.arrows:
            for g in c.arrows:
                if c.src[g] == c.tgt[f]:
                    lhs = self.on_arrows[c.comp[(g, f)]]
                    rhs = d.comp[(self.on_arrows[g], self.on_arrows[f])]
                    if lhs != rhs:
                        raise CatError("functor breaks composition")


def inclusion_functor(sub: FinCat, whole: FinCat) -> FinFunctor:
    return FinFunctor(sub, whole,
                      {o: o for o in sub.objects},
                      {a: a for a in sub.arrows})


# -- chains of a bounded poset ------------------------------------------------------


def order_complex(p: BoundedPoset):
    """All strict chains of the poset, every length, as name tuples."""
    out = []

    def grow(chain):
        out.append(tuple(chain))
        last = chain[-1]
        for nxt in p.names:
            if p.lt(last, nxt):
                grow(chain + [nxt])

    for a in p.names:
        grow([a])
    return sorted(out, key=lambda c: (len(c), c))


def full_chains(p: BoundedPoset):
    """Chains that start at the bottom and end at the top element."""
    return tuple(c for c in order_complex(p) if c[0] == p.bottom and c[-1] == p.top)


def full_chain_category(p: BoundedPoset) -> FinCat:
    """Bottom-to-top chains; one arrow from each chain to each coarser chain.

    Thin by construction: the free face-map presentation collapses onto the
    refinement relation between chains.
    """
    chains = full_chains(p)
    return thin_category(chains, lambda s, t: set(t) <= set(s))


def degree(p: BoundedPoset, chain) -> int:
    """Sum of squared chain lengths over consecutive pairs.

    Values are exact Python integers, so there is no overflow policy to pick.
    """
    return sum(p.chain_length(a, b) ** 2 for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class DirectnessReport:
    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok


def verify_direct(p: BoundedPoset) -> DirectnessReport:
    """Check every non-identity arrow of the chain category strictly raises degree."""
    cat = full_chain_category(p)
    bad = []
    for a in cat.arrows:
        if cat.is_identity_arrow(a):
            continue
        s, t = cat.src[a], cat.tgt[a]
        if not degree(p, s) < degree(p, t):
            bad.append((s, t, degree(p, s), degree(p, t)))
    return DirectnessReport(ok=not bad, violations=tuple(bad))


def interior_square_inequality_violations(p: BoundedPoset):
    """Triples a < b < c where ell(a,b)^2 + ell(b,c)^2 fails to be < ell(a,c)^2."""
    bad = []
    for a, b in p.strict_pairs():
        for c in p.names:
            if p.lt(b, c):
                lo = p.chain_length(a, b) ** 2 + p.chain_length(b, c) ** 2
                if not lo < p.chain_length(a, c) ** 2:
                    bad.append((a, b, c))
    return tuple(bad)


def latching_category(p: BoundedPoset, chain) -> FinCat:
    """Full subcategory of the chain category on strictly finer chains."""
    cat = full_chain_category(p)
    finer = [c for c in cat.objects if set(chain) < set(c)]
    return cat.full_subcategory(finer)


def matching_category(p: BoundedPoset, chain) -> FinCat:
    """Matching candidates computed from the would-be inverse subcategory.

    The inverse part consists of the non-identity arrows that fail to raise
    the degree; with the squared-length degree there are none, so the result
    is empty.  The construction stays honest: it filters rather than assumes.
    """
    cat = full_chain_category(p)
    downward = [a for a in cat.arrows
                if not cat.is_identity_arrow(a)
                and not degree(p, cat.src[a]) < degree(p, cat.tgt[a])]
    objs = [cat.tgt[a] for a in downward if cat.src[a] == chain]
    return cat.full_subcategory(objs)


# -- comma categories and finality -----------------------------------------------------


def comma_category(k, functor: FinFunctor) -> FinCat:
    """The comma category (k === L), for k an object of the functor's target."""
    j, target = functor.source, functor.target
    objects = []
    for o in j.objects:
        for a in target.hom(k, functor.on_objects[o]):
            objects.append((o, a))
    arrows = []
    for (o1, a1) in objects:
        for m in j.arrows:
            if j.src[m] != o1:
                continue
            o2 = j.tgt[m]
            a2 = target.comp[(functor.on_arrows[m], a1)]
            arrows.append(((o1, a1), (o2, a2), m))
    src = {t: t[0] for t in arrows}
    tgt = {t: t[1] for t in arrows}
    comp = {}
    for t1 in arrows:
        for t2 in arrows:
            if t2[0] == t1[1]:
                comp[(t2, t1)] = (t1[0], t2[1], j.comp[(t2[2], t1[2])])
    ident = {(o, a): ((o, a), (o, a), j.ident[o]) for (o, a) in objects}
    return FinCat(objects, arrows, src, tgt, comp, ident, validate=False)


def is_connected(cat: FinCat) -> bool:
    if not cat.objects:
        return False
    parent = {o: o for o in cat.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in cat.arrows:
        ra, rb = find(cat.src[a]), find(cat.tgt[a])
        if ra != rb:
            parent[ra] = rb
    return len({find(o) for o in cat.objects}) == 1


def is_final_functor(functor: FinFunctor) -> bool:
    """True iff every comma category (k === L) is non-empty and connected."""
    return all(is_connected(comma_category(k, functor)) for k in functor.target.objects)


# -- DOT export --------------------------------------------------------------------------


def dot_chain_category(p: BoundedPoset) -> str:
    cat = full_chain_category(p)
    lines = ["digraph chains {"]
    names = {c: "(" + ",".join(c) + ")" for c in cat.objects}
    for c in cat.objects:
        lines.append(f'  "{names[c]}";')
    for a in cat.arrows:
        if cat.is_identity_arrow(a):
            continue
        s, t = cat.src[a], cat.tgt[a]
        if len(s) - len(t) == 1:  # draw the generating deletions only
            lines.append(f'  "{names[s]}" -> "{names[t]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_hasse(p: BoundedPoset) -> str:
    lines = ["digraph hasse {"]
    for nm in p.names:
        lines.append(f'  "{nm}";')
    for a, b in p.covers():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

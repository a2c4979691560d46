"""Finite simplicial sets in normalized form, with products, colimits and homology.

A simplicial set is stored by its nondegenerate simplices.  Every face of a
nondegenerate simplex is recorded as a *full simplex*: a pair ``(id, surj)``
of a nondegenerate target and an order-preserving surjection encoding the
degeneracy word (the Eilenberg-Zilber normal form).  Operators are
order-preserving maps represented as tuples of images, so all simplicial
identities reduce to composition of tuples.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import _snf


class SSetError(Exception):
    pass


class UnsupportedDimension(SSetError):
    """Constructor asked for a sphere/disk dimension above the supported cap."""


# -- order maps ----------------------------------------------------------------


def identity_map(n: int) -> tuple:
    return tuple(range(n + 1))


@lru_cache(maxsize=None)
def delta_map(i: int, n: int) -> tuple:
    """The injection [n-1] -> [n] skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n))


@lru_cache(maxsize=None)
def sigma_map(i: int, n: int) -> tuple:
    """The surjection [n+1] -> [n] repeating i."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def compose_maps(f: tuple, g: tuple) -> tuple:
    """f after g, both order-preserving maps given by image tuples."""
    return tuple(f[x] for x in g)


def is_identity(f: tuple) -> bool:
    return all(v == i for i, v in enumerate(f))


@lru_cache(maxsize=None)
def surjections(n: int, m: int):
    """All order-preserving surjections [n] ->> [m], as image tuples."""
    if m > n or m < 0:
        return ()
    out = []
    for repeats in itertools.combinations(range(n), n - m):
        rep = set(repeats)
        vals = [0]
        for i in range(n):
            vals.append(vals[-1] if i in rep else vals[-1] + 1)
        out.append(tuple(vals))
    return tuple(out)


# -- simplicial sets -------------------------------------------------------------


class SSet:
    """Immutable normalized simplicial set.

    ``faces[x]`` lists the full-simplex faces ``(d_0 x, ..., d_n x)`` of each
    nondegenerate simplex ``x``.
    """

    __slots__ = ("dim_of", "faces", "_by_dim", "tag")

    def __init__(self, dim_of: dict, faces: dict, tag: str = "", validate: bool = True):
        self.dim_of = dim_of
        self.faces = faces
        self.tag = tag
        by_dim = {}
        for x in sorted(dim_of):
            by_dim.setdefault(dim_of[x], []).append(x)
        self._by_dim = {d: tuple(v) for d, v in by_dim.items()}
        if validate:
            self._validate()

    # construction helper
    @staticmethod
    def build(simplices, tag: str = "") -> "SSet":
        """simplices: list of (dim, faces) with faces a list of ids or fulls."""
        dim_of, faces = {}, {}
        for i, (d, fs) in enumerate(simplices):
            dim_of[i] = d
            if d > 0:
                norm = []
                for f in fs:
                    if isinstance(f, tuple):
                        norm.append(f)
                    else:
                        norm.append((f, identity_map(d - 1)))
                faces[i] = tuple(norm)
        return SSet(dim_of, faces, tag=tag)

    def _validate(self):
        for x, d in self.dim_of.items():
            if d == 0:
                continue
            fs = self.faces[x]
            if len(fs) != d + 1:
                raise SSetError(f"simplex {x} needs {d + 1} faces")
            for (t, s) in fs:
                if t not in self.dim_of or len(s) != d or s[-1] != self.dim_of[t] or s[0] != 0:
                    raise SSetError(f"bad face ({t}, {s}) on simplex {x}")
        for x, d in self.dim_of.items():
            if d < 2:
                continue
            top = (x, identity_map(d))
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.face_full(self.face_full(top, j), i)
                    rhs = self.face_full(self.face_full(top, i), j - 1)
                    if lhs != rhs:
                        raise SSetError(f"simplicial identity fails at {x} (i={i}, j={j})")

    # -- queries

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def ids(self):
        return sorted(self.dim_of)

    def ids_of_dim(self, n: int):
        return self._by_dim.get(n, ())

    def count(self, n: int) -> int:
        return len(self._by_dim.get(n, ()))

    @property
    def is_empty(self) -> bool:
        return not self.dim_of

    def size(self) -> int:
        return len(self.dim_of)

    def __repr__(self):
        counts = [f"{len(self._by_dim.get(d, ()))}" for d in range(self.dim + 1)]
        label = f" {self.tag}" if self.tag else ""
        return f"SSet{label}({'/'.join(counts) or 'empty'})"

    # -- full-simplex calculus

    def evaluate(self, x: int, h: tuple):
        """The full simplex x . h for an order map h: [k] -> [dim x]."""
        dx = self.dim_of[x]
        while True:
            image = set(h)
            if len(image) == dx + 1:
                return (x, h)
            j = max(v for v in range(dx + 1) if v not in image)
            t, w = self.faces[x][j]
            h = compose_maps(w, tuple(v if v < j else v - 1 for v in h))
            x, dx = t, self.dim_of[t]

    def face_full(self, full, i: int):
        x, s = full
        n = len(s) - 1
        return self.evaluate(x, compose_maps(s, delta_map(i, n)))

    def degen_full(self, full, i: int):
        x, s = full
        n = len(s) - 1
        return (x, compose_maps(s, sigma_map(i, n)))

    def fulls(self, n: int):
        """All full simplices of dimension n, deterministic order."""
        out = []
        for m in range(min(n, self.dim) + 1):
            for x in self._by_dim.get(m, ()):
                for s in surjections(n, m):
                    out.append((x, s))
        return out

    def vertex_full(self, v: int, n: int):
        return (v, (0,) * (n + 1))

    # -- dump

    def dump(self) -> str:
        """One line per nondegenerate simplex: `dim id : face0 face1 ...`.

        Degeneracy words are printed in brackets as the repeat positions of
        the face's surjection; stable across runs.
        """
        lines = []
        for d in range(self.dim + 1):
            for x in self._by_dim.get(d, ()):
                if d == 0:
                    lines.append(f"0 {x} :")
                    continue
                parts = []
                for (t, s) in self.faces[x]:
                    reps = [str(i) for i in range(len(s) - 1) if s[i + 1] == s[i]]
                    parts.append(f"{t}[{' '.join(reps)}]" if reps else str(t))
                lines.append(f"{d} {x} : " + " ".join(parts))
        return "\n".join(lines) + ("\n" if lines else "")


# -- simplicial maps -------------------------------------------------------------


class SMap:
    """A simplicial map, stored on nondegenerate simplices of the source."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source: SSet, target: SSet, mapping: dict, validate: bool = True):
        self.source = source
        self.target = target
        self.mapping = mapping
        if validate:
            self._validate()

    def _validate(self):
        src, tgt = self.source, self.target
        for x, d in src.dim_of.items():
            if x not in self.mapping:
                raise SSetError(f"map misses simplex {x}")
            (y, s) = self.mapping[x]
            if y not in tgt.dim_of or len(s) != d + 1 or s[-1] != tgt.dim_of[y] or s[0] != 0:
                raise SSetError(f"bad image ({y}, {s}) of simplex {x}")
        for x, d in src.dim_of.items():
            if d == 0:
                continue
            top = (x, identity_map(d))
            for i in range(d + 1):
                lhs = self.apply_full(src.face_full(top, i))
                rhs = tgt.face_full(self.apply_full(top), i)
                if lhs != rhs:
                    raise SSetError(f"map does not commute with d_{i} at simplex {x}")

    def apply_full(self, full):
        x, s = full
        y, t = self.mapping[x]
        return self.target.evaluate(y, compose_maps(t, s))

    def __eq__(self, other):
        return (isinstance(other, SMap) and self.source is other.source
                and self.target is other.target and self.mapping == other.mapping)

    def __hash__(self):
        return id(self.source) ^ id(self.target)

    def is_iso(self) -> bool:
        if self.source.size() != self.target.size():
            return False
        seen = set()
        for x in self.source.dim_of:
            (y, s) = self.mapping[x]
            if not is_identity(s) or y in seen:
                return False
            seen.add(y)
        return True

    def __repr__(self):
        return f"SMap({self.source!r} -> {self.target!r})"


def identity_smap(x: SSet) -> SMap:
    return SMap(x, x, {i: (i, identity_map(d)) for i, d in x.dim_of.items()}, validate=False)


def compose_smaps(g: SMap, f: SMap) -> SMap:
    """g after f."""
    if f.target is not g.source:
        raise SSetError("composition mismatch")
    mapping = {x: g.apply_full(f.mapping[x]) for x in f.source.dim_of}
    return SMap(f.source, g.target, mapping, validate=False)


def empty_smap(target: SSet) -> SMap:
    return SMap(empty(), target, {}, validate=False)


# -- basic constructors -----------------------------------------------------------


def empty() -> SSet:
    return SSet.build([], tag="empty")


def point() -> SSet:
    return SSet.build([(0, [])], tag="pt")


def interval() -> SSet:
    """Two vertices 0,1 and one edge 2 from 0 to 1."""
    return SSet.build([(0, []), (0, []), (1, [1, 0])], tag="interval")


def sphere(n: int) -> SSet:
    """Combinatorial n-sphere for n in {-1, 0, 1}; sphere(-1) is empty."""
    if n == -1:
        return empty()
    if n == 0:
        return SSet.build([(0, []), (0, [])], tag="S0")
    if n == 1:
        # boundary of a triangle: vertices 0,1,2; edges [01]=3, [02]=4, [12]=5
        return SSet.build(
            [(0, []), (0, []), (0, []),
             (1, [1, 0]), (1, [2, 0]), (1, [2, 1])],
            tag="S1",
        )
    raise UnsupportedDimension(f"sphere({n}) not supported")


def disk(n: int) -> SSet:
    """Contractible n-disk for n in {0, 1, 2} whose boundary is sphere(n-1)."""
    if n == 0:
        return point()
    if n == 1:
        return interval()
    if n == 2:
        s = [(0, []), (0, []), (0, []),
             (1, [1, 0]), (1, [2, 0]), (1, [2, 1]),
             (2, [5, 4, 3])]
        return SSet.build(s, tag="D2")
    raise UnsupportedDimension(f"disk({n}) not supported")


def boundary_inclusion(n: int) -> SMap:
    """The inclusion sphere(n-1) -> disk(n); simplex ids line up by construction."""
    s, d = sphere(n - 1), disk(n)
    return SMap(s, d, {x: (x, identity_map(s.dim_of[x])) for x in s.dim_of})


def interval_endpoint(which: int = 0) -> SMap:
    """point -> interval hitting vertex 0 or 1."""
    return SMap(point(), interval(), {0: (which, (0,))})


# -- disjoint unions ---------------------------------------------------------------


def disjoint_union(parts) -> tuple[SSet, list]:
    """Coproduct; returns (sset, legs)."""
    dim_of, faces = {}, {}
    offsets = []
    off = 0
    for p in parts:
        offsets.append(off)
        for x in sorted(p.dim_of):
            dim_of[off + x] = p.dim_of[x]
            if p.dim_of[x] > 0:
                faces[off + x] = tuple((t + off, s) for (t, s) in p.faces[x])
        off += (max(p.dim_of) + 1) if p.dim_of else 0
    total = SSet(dim_of, faces, tag="cup", validate=False)
    legs = [
        SMap(p, total, {x: (x + offsets[k], identity_map(p.dim_of[x])) for x in p.dim_of},
             validate=False)
        for k, p in enumerate(parts)
    ]
    return total, legs


# -- colimits (engine) ---------------------------------------------------------------


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self):
        self.parent = {}

    def find(self, k):
        p = self.parent
        if k not in p:
            p[k] = k
            return k
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class ColimitResult:
    """Colimit of a finite diagram of SSets, with cocone legs and mediators."""

    __slots__ = ("sset", "legs", "reps", "_objects", "_class_of", "_nf", "_newid")

    def __init__(self, sset, legs, reps, objects, class_of, nf, newid):
        self.sset = sset
        self.legs = legs
        self.reps = reps
        self._objects = objects
        self._class_of = class_of
        self._nf = nf
        self._newid = newid

    def leg_full(self, obj_idx: int, full):
        return self.legs[obj_idx].apply_full(full)

    def mediate(self, target: SSet, cocone_legs) -> SMap:
        """The unique map out of the colimit agreeing with the given cocone."""
        mapping = {}
        for new_id, (i, full) in self.reps.items():
            mapping[new_id] = cocone_legs[i].apply_full(full)
        return SMap(self.sset, target, mapping)


def colimit_of(objects, arrows, tag: str = "colim") -> ColimitResult:
    """Colimit of SSets.  ``arrows`` is a list of (src_idx, tgt_idx, SMap).

    Computed pointwise on all simplices up to the maximal object dimension,
    then renormalized to nondegenerate form.
    """
    uf = _UnionFind()
    top = max((o.dim for o in objects), default=-1)
    fulls_cache = [{} for _ in objects]
    for n in range(top + 1):
        for i, obj in enumerate(objects):
            fulls_cache[i][n] = obj.fulls(n)
        for (i, j, f) in arrows:
            for full in fulls_cache[i][n]:
                uf.union((n, i) + full, (n, j) + f.apply_full(full))
        for i, obj in enumerate(objects):
            for full in fulls_cache[i][n]:
                uf.find((n, i) + full)

    def key_of(n, i, full):
        return uf.find((n, i) + full)

    # degenerate classes and witnesses
    witness = {}
    classes_by_dim = {}
    for key in uf.parent:
        classes_by_dim.setdefault(key[0], set()).add(uf.find(key))
    for n in range(1, top + 1):
        for cls in sorted(classes_by_dim.get(n - 1, ())):
            (_, i, x, s) = cls
            for k in range(n):
                degen = (x, compose_maps(s, sigma_map(k, n - 1)))
                dcls = key_of(n, i, degen)
                if dcls not in witness:
                    witness[dcls] = (k, cls)

    nf_memo = {}

    def nf(cls):
        if cls in nf_memo:
            return nf_memo[cls]
        if cls not in witness:
            out = (cls, identity_map(cls[0]))
        else:
            k, sub = witness[cls]
            core, w = nf(sub)
            out = (core, compose_maps(w, sigma_map(k, cls[0] - 1)))
        nf_memo[cls] = out
        return out

    nondeg = sorted(
        cls for dim_classes in classes_by_dim.values() for cls in dim_classes
        if cls not in witness
    )
    newid = {cls: k for k, cls in enumerate(sorted(nondeg, key=lambda c: (c[0], c)))}

    dim_of, faces, reps = {}, {}, {}
    for cls, k in newid.items():
        n, i, x, s = cls
        dim_of[k] = n
        reps[k] = (i, (x, s))
        if n > 0:
            fs = []
            for t in range(n + 1):
                sub = objects[i].face_full((x, s), t)
                core, w = nf(key_of(n - 1, i, sub))
                fs.append((newid[core], w))
            faces[k] = tuple(fs)
    result = SSet(dim_of, faces, tag=tag, validate=True)

    legs = []
    for i, obj in enumerate(objects):
        mapping = {}
        for x, d in obj.dim_of.items():
            core, w = nf(key_of(d, i, (x, identity_map(d))))
            mapping[x] = (newid[core], w)
        legs.append(SMap(obj, result, mapping, validate=False))

    class_of = {}
    return ColimitResult(result, legs, reps, objects, class_of, nf, newid)


class PushoutResult:
    """Pushout of (U <- W -> V); corners are addressed as 'U' / 'V'."""

    __slots__ = ("sset", "leg_u", "leg_v", "leg_w", "_colim", "_f", "_g")

    def __init__(self, colim: ColimitResult, f: SMap, g: SMap):
        self._colim = colim
        self._f = f
        self._g = g
        self.sset = colim.sset
        self.leg_w, self.leg_u, self.leg_v = colim.legs

    def decode(self, full):
        """A representative of the class of ``full`` in corner U or V."""
        x, s = full
        i, rep = self._colim.reps[x]
        if i == 0:  # W representative: push into U
            i, rep = 1, self._f.apply_full(rep)
        tag = "U" if i == 1 else "V"
        y, t = rep
        return tag, (y, compose_maps(t, s))

    def mediate(self, target: SSet, on_u: SMap, on_v: SMap) -> SMap:
        return self._colim.mediate(target, [compose_smaps(on_u, self._f), on_u, on_v])


def pushout(f: SMap, g: SMap, tag: str = "po") -> PushoutResult:
    """Pushout of U <-f- W -g-> V."""
    if f.source is not g.source:
        raise SSetError("pushout legs must share their source")
    colim = colimit_of([f.source, f.target, g.target],
                       [(0, 1, f), (0, 2, g)], tag=tag)
    return PushoutResult(colim, f, g)


# -- products -------------------------------------------------------------------------


def _jointly_nondeg(sa: tuple, sb: tuple) -> bool:
    return all(sa[i + 1] != sa[i] or sb[i + 1] != sb[i] for i in range(len(sa) - 1))


class Prod:
    """Binary product with pairing/projection calculus."""

    __slots__ = ("a", "b", "sset", "comp", "index", "proj_a", "proj_b")

    def __init__(self, a: SSet, b: SSet):
        self.a, self.b = a, b
        comp = {}
        index = {}
        counter = 0
        entries = []
        for n in range(a.dim + b.dim + 1):
            for fa in a.fulls(n):
                for fb in b.fulls(n):
                    if _jointly_nondeg(fa[1], fb[1]):
                        entries.append((n, fa, fb))
        entries.sort(key=lambda e: (e[0], e[1], e[2]))
        dim_of = {}
        for (n, fa, fb) in entries:
            comp[counter] = (fa, fb)
            index[(fa, fb)] = counter
            dim_of[counter] = n
            counter += 1
        faces = {}
        for x, (fa, fb) in comp.items():
            n = dim_of[x]
            if n == 0:
                continue
            fs = []
            for i in range(n + 1):
                fs.append(self._normalize(a.face_full(fa, i), b.face_full(fb, i), index))
            faces[x] = tuple(fs)
        self.comp = comp
        self.index = index
        self.sset = SSet(dim_of, faces, tag="prod", validate=True)
        self.proj_a = SMap(self.sset, a, {x: comp[x][0] for x in comp}, validate=False)
        self.proj_b = SMap(self.sset, b, {x: comp[x][1] for x in comp}, validate=False)

    @staticmethod
    def _normalize(fa, fb, index):
        sa, sb = fa[1], fb[1]
        n = len(sa) - 1
        keep = [0] + [i + 1 for i in range(n) if sa[i + 1] != sa[i] or sb[i + 1] != sb[i]]
        core_a = (fa[0], tuple(sa[i] for i in keep))
        core_b = (fb[0], tuple(sb[i] for i in keep))
        u = []
        r = -1
        for i in range(n + 1):
            if i in keep:
                r += 1
            u.append(r)
        return (index[(core_a, core_b)], tuple(u))

    def pair(self, fa, fb):
        """The full product simplex with the given components (equal dims)."""
        if len(fa[1]) != len(fb[1]):
            raise SSetError("pairing needs equal dimensions")
        return self._normalize(fa, fb, self.index)

    def components(self, full):
        x, s = full
        fa, fb = self.comp[x]
        return (self.a.evaluate(fa[0], compose_maps(fa[1], s)),
                self.b.evaluate(fb[0], compose_maps(fb[1], s)))


class NProd:
    """n-ary product as a left-nested fold of binary products.

    Zero factors give a point; one factor is the factor itself.  Components
    and pairing work against the flat factor list.
    """

    __slots__ = ("factors", "sset", "_tree")

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not factors:
            self.sset = point()
            self._tree = None
            return
        if len(factors) == 1:
            self.sset = factors[0]
            self._tree = None
            return
        tree = [None]  # tree[k] pairs factor k onto the product of factors < k
        acc = factors[0]
        for k in range(1, len(factors)):
            p = Prod(acc, factors[k])
            tree.append(p)
            acc = p.sset
        self._tree = tree
        self.sset = acc

    def projection(self, j: int) -> SMap:
        k = len(self.factors)
        if k == 1:
            return identity_smap(self.sset)
        cur = None
        for level in range(k - 1, j, -1):
            step = self._tree[level].proj_a
            cur = step if cur is None else compose_smaps(step, cur)
        if j > 0:
            step = self._tree[j].proj_b
            cur = step if cur is None else compose_smaps(step, cur)
        return cur

    def pair(self, fulls, dim: int | None = None):
        if not self.factors:
            if dim is None:
                raise SSetError("empty product pairing needs a dimension")
            return (0, (0,) * (dim + 1))
        if len(fulls) != len(self.factors):
            raise SSetError("component count mismatch")
        if len(fulls) == 1:
            return fulls[0]
        acc = fulls[0]
        for k in range(1, len(fulls)):
            acc = self._tree[k].pair(acc, fulls[k])
        return acc

    def components(self, full):
        if not self.factors:
            return ()
        if len(self.factors) == 1:
            return (full,)
        out = []
        acc = full
        for k in range(len(self.factors) - 1, 0, -1):
            fa = self._tree[k].components(acc)
            out.append(fa[1])
            acc = fa[0]
        out.append(acc)
        out.reverse()
        return tuple(out)


def nprod(factors) -> NProd:
    return NProd(factors)


_NPROD_CACHE: dict = {}


def cached_nprod(factors) -> NProd:
    """Shared NProd per factor-object tuple.

    The cache holds the factors alive, so id() keys can never collide with
    dead objects; a hit is an exact object match.
    """
    factors = tuple(factors)
    key = tuple(id(f) for f in factors)
    hit = _NPROD_CACHE.get(key)
    if hit is None:
        hit = NProd(factors)
        _NPROD_CACHE[key] = hit
    return hit


def nprod_map(maps, src: NProd, tgt: NProd) -> SMap:
    """The product map; maps[k] sends src factor k to tgt factor k."""
    if len(maps) != len(src.factors) or len(maps) != len(tgt.factors):
        raise SSetError("factor count mismatch")
    mapping = {}
    for x, d in src.sset.dim_of.items():
        comps = src.components((x, identity_map(d)))
        images = [maps[k].apply_full(c) for k, c in enumerate(comps)]
        mapping[x] = tgt.pair(images, dim=d)
    return SMap(src.sset, tgt.sset, mapping)


def nprod_transport(src: NProd, tgt: NProd) -> SMap:
    """Canonical iso between two products of the same factor objects."""
    for fa, fb in zip(src.factors, tgt.factors):
        if fa is not fb:
            raise SSetError("transport needs identical factor objects")
    return nprod_map([identity_smap(f) for f in src.factors], src, tgt)


# -- globes ---------------------------------------------------------------------------


class GlobeData:
    """Suspension-style globe of a space, with its two marked pole vertices."""

    __slots__ = ("space", "sset", "bottom", "top", "_po", "_prod")

    def __init__(self, space, sset, bottom, top, po, prod):
        self.space = space
        self.sset = sset
        self.bottom = bottom
        self.top = top
        self._po = po
        self._prod = prod


def globe(z: SSet) -> GlobeData:
    """The globe of ``z``: quotient of z x interval collapsing each end to a pole.

    For empty ``z`` this is the two-point set; otherwise the unreduced
    suspension.
    """
    iv = interval()
    prod = Prod(z, iv)
    ends, end_legs = disjoint_union([z, z])
    poles, pole_legs = disjoint_union([point(), point()])
    to_prod = {}
    for x, d in z.dim_of.items():
        f0 = prod.pair((x, identity_map(d)), iv.vertex_full(0, d))
        f1 = prod.pair((x, identity_map(d)), iv.vertex_full(1, d))
        to_prod[end_legs[0].mapping[x][0]] = f0
        to_prod[end_legs[1].mapping[x][0]] = f1
    f = SMap(ends, prod.sset, to_prod, validate=False)
    g_map = {}
    for x, d in z.dim_of.items():
        g_map[end_legs[0].mapping[x][0]] = (0, (0,) * (d + 1))
        g_map[end_legs[1].mapping[x][0]] = (1, (0,) * (d + 1))
    g = SMap(ends, poles, g_map, validate=False)
    po = pushout(f, g, tag="globe")
    bottom = po.leg_v.mapping[0][0]
    top = po.leg_v.mapping[1][0]
    return GlobeData(z, po.sset, bottom, top, po, prod if not z.is_empty else None)


def globe_smap(f: SMap, ga: GlobeData, gb: GlobeData) -> SMap:
    """The globe of a map f: functorial on suspensions, fixing the poles."""
    if ga.space is not f.source or gb.space is not f.target:
        raise SSetError("globe_smap sources mismatch")
    mapping = {}
    for c, d in ga.sset.dim_of.items():
        tag, rep = ga._po.decode((c, identity_map(d)))
        if tag == "V":
            mapping[c] = gb._po.leg_v.apply_full(rep)
        else:
            fa, fb = ga._prod.components(rep)
            image = gb._prod.pair(f.apply_full(fa), fb)
            mapping[c] = gb._po.leg_u.apply_full(image)
    return SMap(ga.sset, gb.sset, mapping)


# -- homology --------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyResult:
    """Integral homology: Betti numbers and torsion coefficients per dimension."""

    betti: tuple
    torsion: tuple

    def reduced_trivial(self) -> bool:
        if not self.betti:
            return False
        return (self.betti[0] == 1 and all(b == 0 for b in self.betti[1:])
                and all(not t for t in self.torsion))

    def as_dict(self):
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def boundary_matrix(x: SSet, n: int):
    """Matrix of the normalized boundary C_n -> C_{n-1}; degenerate faces drop out."""
    rows = list(x.ids_of_dim(n - 1))
    cols = list(x.ids_of_dim(n))
    row_pos = {r: i for i, r in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for jc, c in enumerate(cols):
        for i, (t, s) in enumerate(x.faces[c]):
            if is_identity(s):
                mat[row_pos[t]][jc] += -1 if i % 2 else 1
    return mat, len(rows), len(cols)


def homology(x: SSet) -> HomologyResult:
    """Integral homology via Smith normal form of the normalized complex."""
    if x.is_empty:
        return HomologyResult(betti=(), torsion=())
    top = x.dim
    ranks = {}
    torsion_of = {}
    for n in range(1, top + 1):
        mat, r, c = boundary_matrix(x, n)
        rk, tors = _snf.rank_and_torsion(mat, r, c)
        ranks[n] = rk
        torsion_of[n] = tors
    betti = []
    torsion = []
    for n in range(top + 1):
        cn = x.count(n)
        betti.append(cn - ranks.get(n, 0) - ranks.get(n + 1, 0))
        torsion.append(tuple(torsion_of.get(n + 1, ())))
    while len(betti) > 1 and betti[-1] == 0 and not torsion[-1]:
        betti.pop()
        torsion.pop()
    return HomologyResult(betti=tuple(betti), torsion=tuple(torsion))


def is_homology_contractible(x: SSet) -> bool:
    """Nonempty, connected, and vanishing reduced integral homology.

    This is the workbench's computable stand-in for weak contractibility; it
    is weaker than the notion it replaces and is reported as such.
    """
    return homology(x).reduced_trivial()


def euler_characteristic(x: SSet) -> int:
    return sum((-1) ** n * x.count(n) for n in range(x.dim + 1))


# -- isomorphism search ------------------------------------------------------------------


def _iso_signature(x: SSet):
    sig = {}
    used_as_face = {i: [] for i in x.dim_of}
    for c, fs in x.faces.items():
        for (t, s) in fs:
            used_as_face[t].append((x.dim_of[c], s))
    for i, d in x.dim_of.items():
        words = tuple(s for (_, s) in x.faces.get(i, ()))
        sig[i] = (d, words, tuple(sorted(used_as_face[i])))
    return sig


def sset_isomorphisms(a: SSet, b: SSet):
    """Yield isomorphisms a -> b as id dicts (backtracking on invariants)."""
    if a.size() != b.size() or a.dim != b.dim:
        return
    if any(a.count(n) != b.count(n) for n in range(a.dim + 1)):
        return
    sig_a, sig_b = _iso_signature(a), _iso_signature(b)
    order = sorted(a.dim_of, key=lambda i: (a.dim_of[i], i))
    candidates = {}
    for i in order:
        candidates[i] = [j for j in b.dim_of if sig_b[j] == sig_a[i]]
        if not candidates[i]:
            return

    assign = {}
    used = set()

    def compatible(i, j):
        if a.dim_of[i] == 0:
            return True
        for (fa, fb) in zip(a.faces[i], b.faces[j]):
            if fa[1] != fb[1] or assign[fa[0]] != fb[0]:
                return False
        return True

    def backtrack(k):
        if k == len(order):
            yield dict(assign)
            return
        i = order[k]
        for j in candidates[i]:
            if j in used or not compatible(i, j):
                continue
            assign[i] = j
            used.add(j)
            yield from backtrack(k + 1)
            used.discard(j)
            del assign[i]

    yield from backtrack(0)


def is_isomorphic(a: SSet, b: SSet) -> bool:
    return next(sset_isomorphisms(a, b), None) is not None

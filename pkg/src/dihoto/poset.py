"""Finite bounded posets: closure, chain lengths, intervals, refinement morphisms.

A bounded poset has a unique bottom and a unique top element, and those two
are distinct.  Elements are interned to dense integer identifiers; every
iteration runs in ascending identifier order so all derived data is
deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class PosetError(Exception):
    pass


class CycleDetected(PosetError):
    """The cover relation contains a directed cycle."""


class NotBounded(PosetError):
    """No unique bottom/top, or bottom equals top."""


class NotComparable(PosetError):
    """Operation requires a strictly comparable pair."""


class PosetParseError(PosetError):
    """Malformed poset text input."""


class BoundedPoset:
    """Immutable finite poset with unique bottom and top.

    Construct via :func:`closure`, :func:`interval` or the parser; the raw
    constructor trusts its arguments.
    """

    __slots__ = ("names", "_idx", "_up", "_down", "_ell_memo", "_covers", "_key")

    def __init__(self, names: tuple[str, ...], up: tuple[frozenset, ...]):
        self.names = names
        self._idx = {nm: i for i, nm in enumerate(names)}
        self._up = up  # up[i] = frozenset of j with i <= j (reflexive)
        down = [set() for _ in names]
        for i, ups in enumerate(up):
            for j in ups:
                down[j].add(i)
        self._down = tuple(frozenset(d) for d in down)
        self._ell_memo = {}
        self._covers = None
        self._key = None

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._idx

    def index(self, name: str) -> int:
        try:
            return self._idx[name]
        except KeyError:
            raise PosetError(f"unknown element {name!r}") from None

    def leq(self, a: str, b: str) -> bool:
        return self.index(b) in self._up[self.index(a)]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    @property
    def bottom(self) -> str:
        return self.names[self._bottom_idx()]

    @property
    def top(self) -> str:
        return self.names[self._top_idx()]

    def _bottom_idx(self):
        return next(i for i in range(len(self.names)) if len(self._up[i]) == len(self.names))

    def _top_idx(self):
        return next(i for i in range(len(self.names)) if len(self._down[i]) == len(self.names))

    def strict_pairs(self):
        """All (a, b) with a < b, ascending by identifier."""
        n = len(self.names)
        for i in range(n):
            for j in sorted(self._up[i]):
                if j != i:
                    yield (self.names[i], self.names[j])

    def covers(self):
        """The covering pairs (a, b): a < b with nothing strictly between."""
        if self._covers is None:
            out = []
            for i in range(len(self.names)):
                for j in sorted(self._up[i]):
                    if j == i:
                        continue
                    between = (self._up[i] & self._down[j]) - {i, j}
                    if not between:
                        out.append((self.names[i], self.names[j]))
            self._covers = tuple(out)
        return self._covers

    def upset(self, a: str):
        return tuple(self.names[j] for j in sorted(self._up[self.index(a)]))

    def downset(self, a: str):
        return tuple(self.names[j] for j in sorted(self._down[self.index(a)]))

    def __repr__(self):
        return f"BoundedPoset({list(self.names)}, covers={list(self.covers())})"

    # -- chain lengths -----------------------------------------------------

    def chain_length(self, a: str, b: str) -> int:
        """Length of the longest chain a = x0 < ... < xp = b.

        Computed by longest-path dynamic programming over the Hasse diagram.
        """
        ia, ib = self.index(a), self.index(b)
        if ia == ib or ib not in self._up[ia]:
            raise NotComparable(f"{a!r} < {b!r} does not hold")
        return self._ell(ia, ib)

    def _ell(self, ia, ib):
        memo = self._ell_memo
        key = (ia, ib)
        if key in memo:
            return memo[key]
        best = 0
        for (u, v) in self.covers():
            iu, iv = self.index(u), self.index(v)
            if iu == ia and (iv == ib or ib in self._up[iv]):
                tail = 0 if iv == ib else self._ell(iv, ib)
                best = max(best, 1 + tail)
        memo[key] = best
        return best

    # -- intervals ----------------------------------------------------------

    def interval(self, a: str, b: str) -> "BoundedPoset":
        """The sub-poset [a, b] = {z : a <= z <= b} with the induced order."""
        ia, ib = self.index(a), self.index(b)
        if ia == ib or ib not in self._up[ia]:
            raise NotComparable(f"{a!r} < {b!r} does not hold")
        return self.induced(self.interval_elements(a, b))

    def interval_elements(self, a: str, b: str) -> tuple[str, ...]:
        ia, ib = self.index(a), self.index(b)
        keep = sorted(self._up[ia] & self._down[ib])
        return tuple(self.names[k] for k in keep)

    def induced(self, names) -> "BoundedPoset":
        keep = [self.index(nm) for nm in names]
        sub_names = tuple(self.names[k] for k in keep)
        pos = {k: i for i, k in enumerate(keep)}
        up = tuple(frozenset(pos[j] for j in self._up[k] if j in pos) for k in keep)
        return _checked(sub_names, up)

    # -- isomorphism --------------------------------------------------------

    def canonical_key(self):
        """Canonical encoding shared by exactly the isomorphic posets."""
        if self._key is not None:
            return self._key
        n = len(self.names)
        labels = [0] * n
        for _ in range(n):
            sig = []
            for i in range(n):
                ups = sorted(labels[j] for j in self._up[i] if j != i)
                downs = sorted(labels[j] for j in self._down[i] if j != i)
                sig.append((len(ups), len(downs), tuple(ups), tuple(downs), labels[i]))
            ranking = {s: r for r, s in enumerate(sorted(set(sig)))}
            new = [ranking[s] for s in sig]
            if new == labels:
                break
            labels = new
        groups = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        blocks = [groups[lab] for lab in sorted(groups)]
        best = None
        for perm in _block_permutations(blocks):
            bits = tuple(
                1 if perm[j] in self._up[perm[i]] else 0
                for i in range(n) for j in range(n)
            )
            if best is None or bits < best:
                best = bits
        self._key = (n, best)
        return self._key

    def isomorphic(self, other: "BoundedPoset") -> bool:
        return self.canonical_key() == other.canonical_key()

    def order_isomorphisms(self, other: "BoundedPoset"):
        """Yield all order isomorphisms self -> other as name dicts."""
        if len(self) != len(other):
            return
        n = len(self)
        for perm in itertools.permutations(range(n)):
            ok = True
            for i in range(n):
                if {perm[j] for j in self._up[i]} != set(other._up[perm[i]]):
                    ok = False
                    break
            if ok:
                yield {self.names[i]: other.names[perm[i]] for i in range(n)}


def _block_permutations(blocks):
    per_block = [list(itertools.permutations(b)) for b in blocks]
    for combo in itertools.product(*per_block):
        yield [i for blk in combo for i in blk]


def _checked(names, up) -> BoundedPoset:
    n = len(names)
    if n < 2:
        raise NotBounded("a bounded poset needs at least two elements")
    # bottom: below everything; top: above everything
    minima = [i for i in range(n) if len(up[i]) == n]
    maxima = [i for i in range(n) if sum(1 for j in range(n) if i in up[j]) == n]
    if len(minima) != 1 or len(maxima) != 1 or minima[0] == maxima[0]:
        raise NotBounded("need exactly one bottom and one top, distinct")
    return BoundedPoset(tuple(names), tuple(up))


def closure(elements, covers) -> BoundedPoset:
    """Build a bounded poset from elements and covering pairs.

    The order is the reflexive-transitive closure of the covers.  Raises
    ``CycleDetected`` on a directed cycle and ``NotBounded`` when the result
    lacks a unique bottom/top.
    """
    names = tuple(sorted(set(elements)))
    idx = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    for (a, b) in covers:
        if a not in idx or b not in idx:
            raise PosetError(f"cover mentions unknown element {a!r} or {b!r}")
    succ = [set() for _ in range(n)]
    for (a, b) in covers:
        succ[idx[a]].add(idx[b])
    up = [set([i]) for i in range(n)]
    # transitive closure by repeated relaxation; n is tiny
    changed = True
    while changed:
        changed = False
        for i in range(n):
            add = set()
            for j in up[i]:
                add |= succ[j]
                for k in succ[j]:
                    add |= up[k]
            if not add <= up[i]:
                up[i] |= add
                changed = True
    for i in range(n):
        for j in up[i]:
            if j != i and i in up[j]:
                raise CycleDetected(f"{names[i]!r} and {names[j]!r} lie on a cycle")
    return _checked(names, tuple(frozenset(u) for u in up))


def chain_length(p: BoundedPoset, a: str, b: str) -> int:
    return p.chain_length(a, b)


def interval(p: BoundedPoset, a: str, b: str) -> BoundedPoset:
    return p.interval(a, b)


# -- morphisms --------------------------------------------------------------


@dataclass(frozen=True)
class PosetMorphism:
    """A monotone map between bounded posets; monotonicity is checked."""

    source: BoundedPoset
    target: BoundedPoset
    mapping: dict

    def __post_init__(self):
        for nm in self.source.names:
            if nm not in self.mapping:
                raise PosetError(f"mapping misses element {nm!r}")
            if self.mapping[nm] not in self.target:
                raise PosetError(f"mapping hits unknown element {self.mapping[nm]!r}")
        for a, b in self.source.strict_pairs():
            if not self.target.leq(self.mapping[a], self.mapping[b]):
                raise PosetError(f"mapping is not monotone on ({a!r}, {b!r})")

    def __call__(self, name: str) -> str:
        return self.mapping[name]


@dataclass(frozen=True)
class RefinementReport:
    ok: bool
    clauses: dict = field(default_factory=dict)

    @property
    def failures(self):
        return tuple(k for k, v in self.clauses.items() if not v)


def validate_refinement(f: PosetMorphism) -> RefinementReport:
    """Check the clauses qualifying f as a refinement morphism.

    Required: injectivity, bottom goes to bottom, top goes to top, and strict
    monotonicity on strict pairs (which injectivity plus monotonicity forces,
    but the clause is reported separately for diagnostics).
    """
    src, tgt, m = f.source, f.target, f.mapping
    values = [m[nm] for nm in src.names]
    clauses = {
        "injective": len(set(values)) == len(values),
        "bottom_preserved": m[src.bottom] == tgt.bottom,
        "top_preserved": m[src.top] == tgt.top,
        "strictly_monotone": all(tgt.lt(m[a], m[b]) for a, b in src.strict_pairs()),
    }
    return RefinementReport(ok=all(clauses.values()), clauses=clauses)


# -- enumeration --------------------------------------------------------------


def _middle_posets(k):
    """All posets on k labelled points, as strict-order pair sets.

    Only orders compatible with the integer order are generated (every finite
    poset admits such a labelling), so isomorphism filtering downstream sees
    every class.
    """
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    seen = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[t] for t in range(len(pairs)) if mask >> t & 1}
        if all((i, l) in rel for (i, j) in rel for (jj, l) in rel if jj == j):
            seen.append(rel)
    return seen


_MIDDLE_NAMES = "abcdefghij"


def enumerate_bounded_posets(n: int):
    """One representative per isomorphism class of bounded posets with <= n elements.

    Deterministic order: ascending size, then by canonical key.
    """
    if n < 2:
        raise PosetError("need n >= 2")
    for size in range(2, n + 1):
        k = size - 2
        mids = _MIDDLE_NAMES[:k]
        batch = []
        for rel in _middle_posets(k):
            elems = ["0", "1", *mids]
            covers = [(mids[i], mids[j]) for (i, j) in rel]
            minimal = [m for t, m in enumerate(mids)
                       if not any(j == t for (_, j) in rel)]
            maximal = [m for t, m in enumerate(mids)
                       if not any(i == t for (i, _) in rel)]
            covers += [("0", m) for m in minimal] + [(m, "1") for m in maximal]
            if k == 0:
                covers = [("0", "1")]
            batch.append(closure(elems, covers))
        unique = {}
        for p in batch:
            unique.setdefault(p.canonical_key(), p)
        for key in sorted(unique):
            yield unique[key]


# -- text format ---------------------------------------------------------------


def parse_poset(text: str) -> BoundedPoset:
    """Parse the line-based poset format: `elem NAME`, `cover NAME NAME`, `#` comments."""
    elements = []
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "elem" and len(parts) == 2:
            if parts[1] in elements:
                raise PosetParseError(f"line {lineno}: duplicate element {parts[1]!r}")
            elements.append(parts[1])
        elif parts[0] == "cover" and len(parts) == 3:
            for nm in parts[1:]:
                if nm not in elements:
                    raise PosetParseError(f"line {lineno}: unknown name {nm!r}")
            covers.append((parts[1], parts[2]))
        else:
            raise PosetParseError(f"line {lineno}: cannot parse {raw!r}")
    try:
        return closure(elements, covers)
    except PosetError as exc:
        raise PosetParseError(str(exc)) from exc


def format_poset(p: BoundedPoset) -> str:
    lines = [f"elem {nm}" for nm in p.names]
    lines += [f"cover {a} {b}" for a, b in p.covers()]
    return "\n".join(lines) + "\n"


def fig_poset() -> BoundedPoset:
    """The five-element bounded poset 0 < a < b < 1, 0 < c < 1."""
    return closure(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


def diamond_poset() -> BoundedPoset:
    return closure(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def chain_poset(k: int) -> BoundedPoset:
    """The k-element chain; k >= 2.  Elements c0 < c1 < ... with c0='0', top='1'."""
    if k < 2:
        raise PosetError("chain needs >= 2 elements")
    names = ["0"] + [f"m{i}" for i in range(1, k - 1)] + ["1"]
    return closure(names, list(zip(names, names[1:])))

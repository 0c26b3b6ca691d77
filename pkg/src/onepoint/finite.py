"""Brute-force oracle on finite topological spaces (at most 6 points).

Subsets of {0..n-1} are n-bit masks.  Every finite topology is Alexandrov and
corresponds to a preorder through specialization; the module carries both
views plus two independent enumerators so they can cross-check each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, SizeTooLarge

MAX_POINTS = 6
MAX_FAMILY_POINTS = 4
MAX_SEARCH_POINTS = 5  # size of the extended space in the connectification search

AXIOMS = ("T0", "T1", "T2", "connected", "locally_connected", "normal-pairs")


@dataclass(frozen=True, slots=True)
class FiniteSpace:
    """A topology on {0..size-1} given as the family of open masks."""

    size: int
    opens: frozenset[int]

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_POINTS:
            raise SizeTooLarge(f"finite spaces handle at most {MAX_POINTS} points")
        full = (1 << self.size) - 1
        if 0 not in self.opens or full not in self.opens:
            raise ParseError("a topology contains the empty set and the full set")
        if any(m < 0 or m > full for m in self.opens):
            raise ParseError("open masks must fit the point set")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1


def validate_topology(size: int, family) -> bool:
    """Check the full topology invariants, including closure under union
    and intersection of pairs."""
    family = frozenset(family)
    full = (1 << size) - 1
    if size < 0 or 0 not in family or full not in family:
        return False
    if any(m < 0 or m > full for m in family):
        return False
    elems = sorted(family)
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            if (a | b) not in family or (a & b) not in family:
                return False
    return True


@dataclass(frozen=True, slots=True)
class Preorder:
    """Reflexive transitive relation; up[i] is the mask of successors of i."""

    size: int
    up: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.up) != self.size:
            raise ParseError("one successor mask per point")
        for i, ui in enumerate(self.up):
            if not (ui >> i) & 1:
                raise ParseError("preorders are reflexive")
            for j in range(self.size):
                if (ui >> j) & 1 and (self.up[j] | ui) != ui:
                    raise ParseError("preorders are transitive")


def minimal_open(space: FiniteSpace, x: int) -> int:
    """Intersection of all opens containing x (open, finitely many opens)."""
    m = space.full
    for o in space.opens:
        if (o >> x) & 1:
            m &= o
    return m


def to_preorder(space: FiniteSpace) -> Preorder:
    """Specialization: x below y iff every open containing x contains y."""
    return Preorder(space.size, tuple(minimal_open(space, x) for x in range(space.size)))


def from_preorder(p: Preorder) -> FiniteSpace:
    """Opens are the up-closed sets of the preorder."""
    opens = []
    for mask in range(1 << p.size):
        ok = True
        for x in range(p.size):
            if (mask >> x) & 1 and (p.up[x] | mask) != mask:
                ok = False
                break
        if ok:
            opens.append(mask)
    return FiniteSpace(p.size, frozenset(opens))


def _family_enumeration(n: int):
    full = (1 << n) - 1
    optional = [m for m in range(full + 1) if m != 0 and m != full]
    for sel in range(1 << len(optional)):
        fam = {0, full}
        for j, m in enumerate(optional):
            if (sel >> j) & 1:
                fam.add(m)
        if validate_topology(n, fam):
            yield FiniteSpace(n, frozenset(fam))


def _preorder_enumeration(n: int):
    if n == 0:
        yield Preorder(0, ())
        return
    rows: list[int] = []

    def extend(i: int):
        if i == n:
            yield Preorder(n, tuple(rows))
            return
        for m in range(1 << n):
            if not (m >> i) & 1:
                continue
            ok = True
            for r in range(i):
                ur = rows[r]
                if (m >> r) & 1 and (ur | m) != m:
                    ok = False
                    break
                if (ur >> i) & 1 and (m | ur) != ur:
                    ok = False
                    break
            if ok:
                rows.append(m)
                yield from extend(i + 1)
                rows.pop()

    yield from extend(0)


def enumerate_topologies(n: int, method: str = "preorder"):
    """Stream every topology on n labeled points.

    The direct family filter is the independent oracle (n at most 4); the
    preorder walk scales to 6.  Both must agree on counts where they overlap.
    """
    if n < 0:
        raise SizeTooLarge("negative point count")
    if method == "family":
        if n > MAX_FAMILY_POINTS:
            raise SizeTooLarge(f"family enumeration handles at most {MAX_FAMILY_POINTS} points")
        yield from _family_enumeration(n)
    elif method == "preorder":
        if n > MAX_POINTS:
            raise SizeTooLarge(f"preorder enumeration handles at most {MAX_POINTS} points")
        for p in _preorder_enumeration(n):
            yield from_preorder(p)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")


def count_topologies(n: int, method: str = "preorder") -> int:
    return sum(1 for _ in enumerate_topologies(n, method))


@lru_cache(maxsize=None)
def _topologies_cached(n: int) -> tuple[FiniteSpace, ...]:
    if n > MAX_SEARCH_POINTS:
        raise SizeTooLarge(f"cached enumeration capped at {MAX_SEARCH_POINTS} points")
    return tuple(enumerate_topologies(n, "preorder"))


# --------------------------------------------------------------------------
# separation axioms and connectedness, checked literally
# --------------------------------------------------------------------------


def _is_t0(s: FiniteSpace) -> bool:
    for x in range(s.size):
        for y in range(x + 1, s.size):
            if not any(((o >> x) & 1) != ((o >> y) & 1) for o in s.opens):
                return False
    return True


def _is_t1(s: FiniteSpace) -> bool:
    for x in range(s.size):
        for y in range(s.size):
            if x == y:
                continue
            if not any((o >> x) & 1 and not (o >> y) & 1 for o in s.opens):
                return False
    return True


def _is_t2(s: FiniteSpace) -> bool:
    opens = sorted(s.opens)
    for x in range(s.size):
        for y in range(x + 1, s.size):
            if not any(
                (u >> x) & 1 and (v >> y) & 1 and not u & v for u in opens for v in opens
            ):
                return False
    return True


def connected_subset(s: FiniteSpace, mask: int) -> bool:
    """No relatively clopen proper nonempty trace on the subset."""
    if mask == 0:
        return True
    traces = {o & mask for o in s.opens}
    for t in traces:
        if t != 0 and t != mask and (mask ^ t) in traces:
            return False
    return True


def _is_connected(s: FiniteSpace) -> bool:
    return connected_subset(s, s.full)


def _is_locally_connected(s: FiniteSpace) -> bool:
    for x in range(s.size):
        for u in s.opens:
            if not (u >> x) & 1:
                continue
            if not any(
                (v >> x) & 1 and (v | u) == u and connected_subset(s, v) for v in s.opens
            ):
                return False
    return True


def _is_normal_pairs(s: FiniteSpace) -> bool:
    opens = sorted(s.opens)
    closeds = [s.full ^ o for o in opens]
    for fc in closeds:
        for gc in closeds:
            if fc & gc:
                continue
            if not any(
                (fc | u) == u and (gc | v) == v and not u & v for u in opens for v in opens
            ):
                return False
    return True


_AXIOM_CHECKS = {
    "T0": _is_t0,
    "T1": _is_t1,
    "T2": _is_t2,
    "connected": _is_connected,
    "locally_connected": _is_locally_connected,
    "normal-pairs": _is_normal_pairs,
}


def check_axiom(space: FiniteSpace, axiom: str) -> bool:
    fn = _AXIOM_CHECKS.get(axiom)
    if fn is None:
        raise ValueError(f"unknown axiom {axiom!r}; choose from {', '.join(AXIOMS)}")
    return fn(space)


# --------------------------------------------------------------------------
# components, two independent algorithms
# --------------------------------------------------------------------------


def components_exhaustive(s: FiniteSpace) -> tuple[int, ...]:
    """Components as maximal connected subsets found by scanning all subsets."""
    if s.size > MAX_FAMILY_POINTS:
        raise SizeTooLarge(f"exhaustive scan handles at most {MAX_FAMILY_POINTS} points")
    connected_masks = [m for m in range(1, s.full + 1) if connected_subset(s, m)]
    comps = set()
    for x in range(s.size):
        comp = 0
        for m in connected_masks:
            if (m >> x) & 1:
                comp |= m
        if comp not in connected_masks:
            raise AssertionError("union of connected sets through a point must be connected")
        comps.add(comp)
    return tuple(sorted(comps))


def components_growth(s: FiniteSpace) -> tuple[int, ...]:
    """Components via the comparability graph of the specialization preorder."""
    p = to_preorder(s)
    adj = [p.up[x] for x in range(s.size)]
    for x in range(s.size):
        for y in range(s.size):
            if (p.up[y] >> x) & 1:
                adj[x] |= 1 << y
    seen = 0
    comps = []
    for x in range(s.size):
        if (seen >> x) & 1:
            continue
        comp = 0
        stack = [x]
        while stack:
            v = stack.pop()
            if (comp >> v) & 1:
                continue
            comp |= 1 << v
            for w in range(s.size):
                if (adj[v] >> w) & 1 and not (comp >> w) & 1:
                    stack.append(w)
        comps.append(comp)
        seen |= comp
    return tuple(sorted(comps))


# --------------------------------------------------------------------------
# subspaces, density, and the exhaustive connectification search
# --------------------------------------------------------------------------


def subspace(s: FiniteSpace, mask: int) -> FiniteSpace:
    """Trace topology on the masked points, relabeled in order."""
    points = [x for x in range(s.size) if (mask >> x) & 1]
    pos = {x: k for k, x in enumerate(points)}
    opens = set()
    for o in s.opens:
        t = 0
        for x in points:
            if (o >> x) & 1:
                t |= 1 << pos[x]
        opens.add(t)
    return FiniteSpace(len(points), frozenset(opens))


def is_dense(s: FiniteSpace, mask: int) -> bool:
    """Dense iff the only closed superset of the masked points is everything."""
    for o in s.opens:
        closed = s.full ^ o
        if (mask | closed) == closed and closed != s.full:
            return False
    return True


def search_one_point_connectifications(x: FiniteSpace, axiom: str) -> list[FiniteSpace]:
    """All topologies on one extra point that connectify x with the axiom.

    Enumerates every topology on size+1 points, keeping those whose subspace
    on the original points equals x, in which x is dense, that are connected,
    and that satisfy the axiom.  The extra point always carries the last label.
    """
    m = x.size + 1
    if m > MAX_SEARCH_POINTS:
        raise SizeTooLarge(f"search handles base spaces up to {MAX_SEARCH_POINTS - 1} points")
    prefix = (1 << x.size) - 1
    found = []
    for t in _topologies_cached(m):
        if subspace(t, prefix).opens != x.opens:
            continue
        if not is_dense(t, prefix):
            continue
        if not _is_connected(t):
            continue
        if not check_axiom(t, axiom):
            continue
        found.append(t)
    return found


# --------------------------------------------------------------------------
# textual dump
# --------------------------------------------------------------------------


def topology_literal(s: FiniteSpace) -> str:
    """Stable one-line rendering, opens ordered by size then mask."""

    def fmt(mask: int) -> str:
        return "{" + ",".join(str(x) for x in range(s.size) if (mask >> x) & 1) + "}"

    return ",".join(fmt(m) for m in sorted(s.opens, key=lambda m: (bin(m).count("1"), m)))


_LITERAL_RE = re.compile(r"(\{[0-9,]*\})(,\{[0-9,]*\})*\Z")


def parse_topology_literal(text: str) -> FiniteSpace:
    flat = "".join(text.split())
    if not _LITERAL_RE.match(flat):
        raise ParseError(f"bad topology literal: {text!r}")
    masks = []
    for group in re.findall(r"\{([0-9,]*)\}", flat):
        mask = 0
        if group:
            for tok in group.split(","):
                if not tok:
                    raise ParseError(f"bad open set in literal: {{{group}}}")
                mask |= 1 << int(tok)
        masks.append(mask)
    n = max(masks).bit_length()
    try:
        space = FiniteSpace(n, frozenset(masks))
    except SizeTooLarge:
        raise
    except Exception as exc:
        raise ParseError(f"not a topology: {text!r} ({exc})") from exc
    if not validate_topology(n, space.opens):
        raise ParseError(f"family is not closed under union/intersection: {text!r}")
    return space

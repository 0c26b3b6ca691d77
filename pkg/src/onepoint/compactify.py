"""Alexandroff extension: an extra point whose neighborhoods have compact
closed complements.  Exists exactly when the space itself is non-compact,
the mirror image of the connectification verdict."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EqualPoints, NotACover, PointOutsideComponent
from .connectify import OPEN_OK, OpenCheck, TypeI
from .intervals import (
    EMPTY,
    Interval,
    IntervalSet,
    difference,
    interior_in,
    intersect,
    is_finite,
    is_open_in,
    only,
    union,
)
from .space import Space, split_points


class _InfinityPoint:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "infinity"


#: The added point at infinity (a reserved token, not a rational).
INFINITY = _InfinityPoint()

CompPoint = Fraction | _InfinityPoint


@dataclass(frozen=True, slots=True)
class CompactExtension:
    """The space plus the point at infinity."""

    space: Space


@dataclass(frozen=True, slots=True)
class CompactRefused:
    reason: str = "space-already-compact"


CompactVerdict = CompactExtension | CompactRefused


def is_space_compact(space: Space) -> bool:
    """Compact iff every piece is a bounded closed interval."""
    return all(
        is_finite(p.lo) and is_finite(p.hi) and p.lo_closed and p.hi_closed
        for p in space.ambient.pieces
    )


def compactify(space: Space) -> CompactVerdict:
    if is_space_compact(space):
        return CompactRefused()
    return CompactExtension(space)


@dataclass(frozen=True, slots=True)
class TypeInf:
    """Open set containing infinity: the complement of its trace is compact."""

    trace: IntervalSet


CompOpenSet = TypeI | TypeInf


def comp_contains(u: CompOpenSet, pt: CompPoint) -> bool:
    if pt is INFINITY:
        return isinstance(u, TypeInf)
    return Fraction(pt) in u.trace


def is_open_in_compactification(ce: CompactExtension, u: CompOpenSet) -> OpenCheck:
    x = ce.space.ambient
    if not u.trace.issubset(x) or not is_open_in(u.trace, x):
        return OpenCheck(False, "TraceNotOpen")
    if isinstance(u, TypeI):
        return OPEN_OK
    remainder = difference(x, u.trace)
    for piece in remainder.pieces:
        if not (is_finite(piece.lo) and is_finite(piece.hi) and piece.lo_closed and piece.hi_closed):
            return OpenCheck(False, "RemainderNotCompact")
    return OPEN_OK


def _witness_from_infinity(ce: CompactExtension, z: Fraction) -> tuple[TypeInf, TypeI]:
    """Shrink a compact closed box around z; infinity gets the complement."""
    x = ce.space.ambient
    piece = next((p for p in x.pieces if p.contains(z)), None)
    if piece is None:
        raise PointOutsideComponent(f"{z} is not a point of {x}")
    if not is_finite(piece.lo):
        k_lo = z - 1
    elif piece.lo_closed:
        k_lo = max(piece.lo, z - 1)
    else:
        k_lo = z - min(Fraction(1), (z - piece.lo) / 2)
    if not is_finite(piece.hi):
        k_hi = z + 1
    elif piece.hi_closed:
        k_hi = min(piece.hi, z + 1)
    else:
        k_hi = z + min(Fraction(1), (piece.hi - z) / 2)
    box = only(Interval(k_lo, k_hi, True, True))
    return TypeInf(difference(x, box)), TypeI(interior_in(box, x))


def compactification_hausdorff_witness(
    ce: CompactExtension, y: CompPoint, z: CompPoint
) -> tuple[CompOpenSet, CompOpenSet]:
    """Disjoint open neighborhoods of two distinct compactification points."""
    if y is INFINITY and z is INFINITY:
        raise EqualPoints("both points are infinity")
    if y is INFINITY:
        return _witness_from_infinity(ce, Fraction(z))
    if z is INFINITY:
        u_inf, v_y = _witness_from_infinity(ce, Fraction(y))
        return v_y, u_inf
    y, z = Fraction(y), Fraction(z)
    if y == z:
        raise EqualPoints(f"{y} given twice")
    x = ce.space.ambient
    for q in (y, z):
        if q not in x:
            raise PointOutsideComponent(f"{q} is not a point of {x}")
    u, v = split_points(ce.space, y, z)
    return TypeI(u), TypeI(v)


def verify_compact_hausdorff(
    ce: CompactExtension, y: CompPoint, z: CompPoint, u: CompOpenSet, v: CompOpenSet
) -> bool:
    if not (comp_contains(u, y) and comp_contains(v, z)):
        return False
    if not (is_open_in_compactification(ce, u) and is_open_in_compactification(ce, v)):
        return False
    if intersect(u.trace, v.trace):
        return False
    return not (isinstance(u, TypeInf) and isinstance(v, TypeInf))


def _frontier(s: IntervalSet) -> tuple:
    """Sort key for how far coverage has advanced; larger is better."""
    if not s:
        return (float("inf"), 2)
    iv = s.pieces[0]
    return (iv.lo, 0 if iv.lo_closed else 1)


def finite_subcover(ce: CompactExtension, cover) -> list[CompOpenSet]:
    """Greedy subcover of a finite open cover of the compactification.

    The first infinity member leaves a compact remainder, which a left-to-right
    sweep covers by always choosing the member that pushes the uncovered
    frontier farthest.
    """
    cover = list(cover)
    x = ce.space.ambient
    for m in cover:
        if not is_open_in_compactification(ce, m):
            raise NotACover(f"invalid cover member: {m}")
    inf_members = [i for i, m in enumerate(cover) if isinstance(m, TypeInf)]
    if not inf_members:
        raise NotACover("no member covers the infinity point")
    total = EMPTY
    for m in cover:
        total = union(total, m.trace)
    if total != x:
        raise NotACover("union of traces misses part of the space")
    chosen = [inf_members[0]]
    remaining = difference(x, cover[inf_members[0]].trace)
    while remaining:
        best_i, best_key, best_rest = None, _frontier(remaining), remaining
        for i, m in enumerate(cover):
            if i in chosen:
                continue
            rest = difference(remaining, m.trace)
            key = _frontier(rest)
            if key > best_key:
                best_i, best_key, best_rest = i, key, rest
        if best_i is None:
            raise NotACover("greedy sweep stalled")
        chosen.append(best_i)
        remaining = best_rest
    return [cover[i] for i in sorted(chosen)]

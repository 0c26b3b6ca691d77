"""Exact algebra for finite unions of intervals on the extended real line.

Finite endpoints are `fractions.Fraction`; the two infinities are float
sentinels used for ordering only, never for arithmetic, so every result is
exact.  The canonical form (sorted, disjoint, unmergeable pieces) is unique,
which turns set equality into structural comparison.

Text grammar, used by the CLI and the record formats::

    SET      := INTERVAL (" U " INTERVAL)*
    INTERVAL := ("(" | "[") EP "," EP (")" | "]")
    EP       := "-inf" | "inf" | INT | INT "/" POSINT

The canonical rendering of the empty set is the word ``empty`` (the grammar
itself has no empty production).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInterval, NotASubset, ParseError

NEG_INF = float("-inf")
POS_INF = float("inf")

# A point of the extended line: an exact rational, or an infinity sentinel.
Value = Fraction | float


def _coerce_value(v: object) -> Value:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise MalformedInterval(f"not a rational endpoint: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float) and (v == NEG_INF or v == POS_INF):
        return v
    raise MalformedInterval(f"not a rational endpoint: {v!r}")


def is_finite(v: Value) -> bool:
    """True for rational values, False for the infinity sentinels."""
    return isinstance(v, Fraction)


def fmt_value(v: Value) -> str:
    if isinstance(v, float):
        return "inf" if v > 0 else "-inf"
    return str(v)


@dataclass(frozen=True, slots=True)
class Interval:
    """One nonempty interval; degenerate single points are ``[a,a]``."""

    lo: Value
    hi: Value
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _coerce_value(self.lo))
        object.__setattr__(self, "hi", _coerce_value(self.hi))
        if isinstance(self.lo, float) and self.lo == POS_INF:
            raise MalformedInterval("lower endpoint cannot be +inf")
        if isinstance(self.hi, float) and self.hi == NEG_INF:
            raise MalformedInterval("upper endpoint cannot be -inf")
        if (isinstance(self.lo, float) and self.lo_closed) or (
            isinstance(self.hi, float) and self.hi_closed
        ):
            raise MalformedInterval("infinite endpoints are never included")
        if self.lo > self.hi:
            raise MalformedInterval(
                f"empty interval: {fmt_value(self.lo)} above {fmt_value(self.hi)}"
            )
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise MalformedInterval("degenerate interval must include both endpoints")

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, q: Fraction) -> bool:
        above = q > self.lo or (q == self.lo and self.lo_closed)
        below = q < self.hi or (q == self.hi and self.hi_closed)
        return above and below

    def closure(self) -> Interval:
        return _mk_interval(self.lo, self.hi, is_finite(self.lo), is_finite(self.hi))

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{fmt_value(self.lo)},{fmt_value(self.hi)}{right}"


def _mk_interval(lo: Value, hi: Value, lo_closed: bool, hi_closed: bool) -> Interval:
    # Internal fast path: endpoints already coerced, invariants already known.
    iv = object.__new__(Interval)
    object.__setattr__(iv, "lo", lo)
    object.__setattr__(iv, "hi", hi)
    object.__setattr__(iv, "lo_closed", lo_closed)
    object.__setattr__(iv, "hi_closed", hi_closed)
    return iv


def _lo_key(iv: Interval) -> tuple[Value, int]:
    return (iv.lo, 0 if iv.lo_closed else 1)


def _gap_between(left: Interval, right: Interval) -> bool:
    # True when the pair neither overlaps nor touches mergeably.
    if left.hi < right.lo:
        return True
    return left.hi == right.lo and not left.hi_closed and not right.lo_closed


@dataclass(frozen=True, slots=True)
class IntervalSet:
    """Canonical finite union of disjoint, unmergeable intervals."""

    pieces: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        for left, right in zip(self.pieces, self.pieces[1:]):
            if not _gap_between(left, right):
                raise MalformedInterval(f"pieces {left} and {right} break canonical form")

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __contains__(self, q: object) -> bool:
        if isinstance(q, bool) or not isinstance(q, (int, Fraction)):
            raise TypeError(f"membership is decided for rationals, not {q!r}")
        q = Fraction(q)
        return any(iv.contains(q) for iv in self.pieces)

    def __or__(self, other: IntervalSet) -> IntervalSet:
        return union(self, other)

    def __and__(self, other: IntervalSet) -> IntervalSet:
        return intersect(self, other)

    def __sub__(self, other: IntervalSet) -> IntervalSet:
        return difference(self, other)

    def issubset(self, other: IntervalSet) -> bool:
        # A connected piece fits inside a canonical union iff it fits inside
        # a single piece, so one merge sweep decides containment.
        po = other.pieces
        n = len(po)
        oi = 0
        for s in self.pieces:
            while oi < n and (
                po[oi].hi < s.hi
                or (po[oi].hi == s.hi and not po[oi].hi_closed and s.hi_closed)
            ):
                oi += 1
            if oi == n:
                return False
            o = po[oi]
            if s.lo < o.lo or (s.lo == o.lo and s.lo_closed and not o.lo_closed):
                return False
        return True

    def closure(self) -> IntervalSet:
        return normalize(iv.closure() for iv in self.pieces)

    def __str__(self) -> str:
        if not self.pieces:
            return "empty"
        return " U ".join(str(p) for p in self.pieces)

    def __repr__(self) -> str:
        return f"IntervalSet[{self}]"


EMPTY = IntervalSet(())
REALS = IntervalSet((Interval(NEG_INF, POS_INF),))


def _mk_set(pieces: tuple[Interval, ...]) -> IntervalSet:
    # Internal fast path for results that are canonical by construction.
    s = object.__new__(IntervalSet)
    object.__setattr__(s, "pieces", pieces)
    return s


def interval(lo, hi, lo_closed: bool = False, hi_closed: bool = False) -> Interval:
    return Interval(lo, hi, lo_closed, hi_closed)


def point(a) -> Interval:
    """The degenerate interval holding a single rational."""
    return Interval(a, a, True, True)


def only(iv: Interval) -> IntervalSet:
    """The set with exactly one piece."""
    return IntervalSet((iv,))


def normalize(intervals) -> IntervalSet:
    """Unique canonical form of a union of intervals.

    Merges overlapping and touching pieces ((0,1] with (1,2) gives (0,2)) but
    never across a missing point ((0,1) with (1,2) stays two pieces).
    Idempotent and insensitive to input order.
    """
    items = sorted(intervals, key=_lo_key)
    merged: list[Interval] = []
    for iv in items:
        if merged and not _gap_between(merged[-1], iv):
            prev = merged.pop()
            if prev.hi > iv.hi or (prev.hi == iv.hi and prev.hi_closed):
                hi, hi_closed = prev.hi, prev.hi_closed
            else:
                hi, hi_closed = iv.hi, iv.hi_closed
            merged.append(_mk_interval(prev.lo, hi, prev.lo_closed, hi_closed))
        else:
            merged.append(iv)
    return _mk_set(tuple(merged))


def _intersect_pieces(x: Interval, y: Interval) -> Interval | None:
    if x.lo > y.lo:
        lo, lo_closed = x.lo, x.lo_closed
    elif x.lo < y.lo:
        lo, lo_closed = y.lo, y.lo_closed
    else:
        lo, lo_closed = x.lo, x.lo_closed and y.lo_closed
    if x.hi < y.hi:
        hi, hi_closed = x.hi, x.hi_closed
    elif x.hi > y.hi:
        hi, hi_closed = y.hi, y.hi_closed
    else:
        hi, hi_closed = x.hi, x.hi_closed and y.hi_closed
    if lo > hi:
        return None
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return _mk_interval(lo, hi, lo_closed, hi_closed)


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    if not a.pieces:
        return b
    if not b.pieces:
        return a
    return normalize(a.pieces + b.pieces)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    # Both inputs are canonical, so a single merge sweep suffices and the
    # result comes out canonical piece by piece.
    pa, pb = a.pieces, b.pieces
    if not pa or not pb:
        return EMPTY
    out = []
    ai = bi = 0
    while ai < len(pa) and bi < len(pb):
        x, y = pa[ai], pb[bi]
        r = _intersect_pieces(x, y)
        if r is not None:
            out.append(r)
        if x.hi < y.hi or (x.hi == y.hi and (not x.hi_closed or y.hi_closed)):
            ai += 1
        else:
            bi += 1
    return _mk_set(tuple(out))


def complement(a: IntervalSet) -> IntervalSet:
    """Complement within the whole line."""
    if not a.pieces:
        return REALS
    out: list[Interval] = []
    first, last = a.pieces[0], a.pieces[-1]
    if is_finite(first.lo):
        out.append(_mk_interval(NEG_INF, first.lo, False, not first.lo_closed))
    for left, right in zip(a.pieces, a.pieces[1:]):
        out.append(_mk_interval(left.hi, right.lo, not left.hi_closed, not right.lo_closed))
    if is_finite(last.hi):
        out.append(_mk_interval(last.hi, POS_INF, not last.hi_closed, False))
    return _mk_set(tuple(out))


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return intersect(a, complement(b))


def closure_in(s: IntervalSet, x: IntervalSet) -> IntervalSet:
    """Closure of ``s`` in the subspace ``x``: the line closure traced on x."""
    if not s.issubset(x):
        raise NotASubset(f"{s} is not a subset of {x}")
    return intersect(s.closure(), x)


def interior_in(s: IntervalSet, x: IntervalSet) -> IntervalSet:
    """Interior of ``s`` in the subspace ``x``."""
    if not s.issubset(x):
        raise NotASubset(f"{s} is not a subset of {x}")
    return difference(x, closure_in(difference(x, s), x))


def is_open_in(s: IntervalSet, x: IntervalSet) -> bool:
    # Equivalent to interior_in(s, x) == s: no point of s may lie in the
    # line closure of its relative complement.
    if not s.issubset(x):
        raise NotASubset(f"{s} is not a subset of {x}")
    return not intersect(difference(x, s).closure(), s)


def is_closed_in(s: IntervalSet, x: IntervalSet) -> bool:
    # Equivalent to closure_in(s, x) == s.
    if not s.issubset(x):
        raise NotASubset(f"{s} is not a subset of {x}")
    return not intersect(s.closure(), difference(x, s))


def midpoint(a: Fraction, b: Fraction) -> Fraction:
    return (a + b) / 2


def pick_point(s: IntervalSet) -> Fraction:
    """A deterministic rational inside a nonempty set."""
    if not s.pieces:
        raise ValueError("cannot pick a point from the empty set")
    iv = s.pieces[0]
    if iv.degenerate:
        return iv.lo
    if is_finite(iv.lo) and iv.lo_closed:
        return iv.lo
    if is_finite(iv.lo) and is_finite(iv.hi):
        return midpoint(iv.lo, iv.hi)
    if is_finite(iv.lo):
        return iv.lo + 1
    if is_finite(iv.hi):
        return iv.hi - 1
    return Fraction(0)


_ENDPOINT = r"-inf|inf|-?\d+(?:/\d+)?"
_INTERVAL_RE = re.compile(rf"([\[(])({_ENDPOINT}),({_ENDPOINT})([\])])\Z")
_POINT_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def _parse_endpoint(text: str) -> Value:
    if text == "inf":
        return POS_INF
    if text == "-inf":
        return NEG_INF
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in endpoint {text!r}") from exc


def parse_set(text: str) -> IntervalSet:
    """Parse the SET grammar (or the word ``empty``) into canonical form."""
    flat = text.strip()
    if flat == "empty":
        return EMPTY
    if not flat:
        raise ParseError("empty interval-set text")
    intervals = []
    for part in flat.split("U"):
        squeezed = "".join(part.split())
        m = _INTERVAL_RE.match(squeezed)
        if m is None:
            raise ParseError(f"bad interval syntax: {part.strip()!r}")
        lo_b, lo_t, hi_t, hi_b = m.groups()
        try:
            intervals.append(
                Interval(_parse_endpoint(lo_t), _parse_endpoint(hi_t), lo_b == "[", hi_b == "]")
            )
        except MalformedInterval as exc:
            raise ParseError(str(exc)) from exc
    return normalize(intervals)


def parse_point(text: str) -> Fraction:
    """Parse a rational in the EP grammar (infinities are not points)."""
    flat = "".join(text.split())
    if not _POINT_RE.match(flat):
        raise ParseError(f"bad rational point: {text!r}")
    try:
        return Fraction(flat)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in point {text!r}") from exc

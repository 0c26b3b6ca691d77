"""Deterministic random generators for spaces, sets, and extension data.

Everything is driven by an explicit `random.Random`, so identical seeds give
identical objects; the selftest and the golden record checks rely on that.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .connectify import (
    EscapeFilter,
    ExtClosedSet,
    Extension,
    TowardNegInf,
    TowardOpenRight,
    TowardPosInf,
    TypeI,
    TypeII,
    intersect_open,
    union_open,
)
from .intervals import (
    EMPTY,
    Interval,
    IntervalSet,
    NEG_INF,
    POS_INF,
    difference,
    intersect,
    is_finite,
    normalize,
    only,
    parse_set,
    union,
)
from .space import Space


def rand_fraction(rng: random.Random, lo: int = -8, hi: int = 8, max_den: int = 6) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_space(rng: random.Random, max_components: int = 5, allow_compact: bool = True) -> Space:
    """A space with 1..max_components pieces of mixed endpoint kinds."""
    k = rng.randint(1, max_components)
    pieces: list[Interval] = []
    cursor = Fraction(rng.randint(-12, -6))
    for i in range(k):
        last = i == k - 1
        if i == 0 and rng.random() < 0.2:
            pieces.append(Interval(NEG_INF, cursor, False, rng.random() < 0.5))
        else:
            if (
                pieces
                and is_finite(pieces[-1].hi)
                and not pieces[-1].hi_closed
                and rng.random() < 0.25
            ):
                lo, lo_closed = pieces[-1].hi, False  # single missing point between pieces
            else:
                lo = cursor + Fraction(rng.randint(1, 8), rng.randint(1, 3))
                lo_closed = rng.random() < 0.5
            if last and rng.random() < 0.2:
                pieces.append(Interval(lo, POS_INF, lo_closed, False))
            elif allow_compact and lo_closed and rng.random() < 0.12:
                pieces.append(Interval(lo, lo, True, True))
            else:
                hi = lo + Fraction(rng.randint(1, 10), rng.randint(1, 3))
                hi_closed = rng.random() < 0.5
                if not allow_compact and lo_closed and hi_closed:
                    hi_closed = False
                pieces.append(Interval(lo, hi, lo_closed, hi_closed))
        if not is_finite(pieces[-1].hi):
            break
        cursor = pieces[-1].hi
    ambient = normalize(pieces)
    assert len(ambient.pieces) == len(pieces), "generator must emit canonical pieces"
    return Space(ambient)


def random_real_open(rng: random.Random) -> IntervalSet:
    """A random open subset of the line (possibly empty)."""
    parts: list[Interval] = []
    for _ in range(rng.randint(0, 3)):
        roll = rng.random()
        if roll < 0.12:
            parts.append(Interval(NEG_INF, rand_fraction(rng), False, False))
        elif roll < 0.24:
            parts.append(Interval(rand_fraction(rng), POS_INF, False, False))
        else:
            a = rand_fraction(rng)
            b = a + Fraction(rng.randint(1, 20), rng.randint(1, 4))
            parts.append(Interval(a, b, False, False))
    return normalize(parts)


def random_open_in(x: IntervalSet, rng: random.Random) -> IntervalSet:
    return intersect(random_real_open(rng), x)


def random_closed_in(x: IntervalSet, rng: random.Random) -> IntervalSet:
    return difference(x, random_open_in(x, rng))


def random_point_in(s: IntervalSet, rng: random.Random) -> Fraction:
    """A rational inside a nonempty set; sometimes an included endpoint."""
    if not s.pieces:
        raise ValueError("cannot sample a point from the empty set")
    iv = s.pieces[rng.randrange(len(s.pieces))]
    if iv.degenerate:
        return iv.lo
    if rng.random() < 0.15 and is_finite(iv.lo) and iv.lo_closed:
        return iv.lo
    if rng.random() < 0.15 and is_finite(iv.hi) and iv.hi_closed:
        return iv.hi
    if is_finite(iv.lo) and is_finite(iv.hi):
        return iv.lo + (iv.hi - iv.lo) * Fraction(rng.randint(1, 15), 16)
    if is_finite(iv.lo):
        return iv.lo + Fraction(rng.randint(1, 24), rng.randint(1, 4))
    if is_finite(iv.hi):
        return iv.hi - Fraction(rng.randint(1, 24), rng.randint(1, 4))
    return rand_fraction(rng)


def _escape_hull(flt: EscapeFilter, n: int, rng: random.Random) -> IntervalSet:
    """A component-open neighborhood of the escape end containing element(n)."""
    jitter = Fraction(rng.randint(1, 8), 8)
    d = flt.direction
    if isinstance(d, TowardPosInf):
        block = Interval(flt.anchor + n - jitter, POS_INF, False, False)
    elif isinstance(d, TowardNegInf):
        block = Interval(NEG_INF, flt.anchor - n + jitter, False, False)
    elif isinstance(d, TowardOpenRight):
        start = d.bound - (d.bound - flt.anchor) / 2**n
        block = Interval(start - jitter, d.bound, False, False)
    else:
        end = d.bound + (flt.anchor - d.bound) / 2**n
        block = Interval(d.bound, end + jitter, False, False)
    return intersect(only(block), flt.component.as_set())


def random_p_neighborhood(ext: Extension, rng: random.Random, max_tail: int = 32) -> TypeII:
    """A valid type-II neighborhood of the extra point with random tails."""
    tails = tuple(rng.randint(0, max_tail) for _ in ext.filters)
    trace = EMPTY
    for flt, n in zip(ext.filters, tails):
        trace = union(trace, _escape_hull(flt, n, rng))
    if rng.random() < 0.5:
        trace = union(trace, random_open_in(ext.space.ambient, rng))
    return TypeII(trace, tails)


def random_ext_open(ext: Extension, rng: random.Random):
    """A random extension open: plain trace, neighborhood of p, or a combination."""
    roll = rng.random()
    if roll < 0.4:
        return TypeI(random_open_in(ext.space.ambient, rng))
    if roll < 0.75:
        return random_p_neighborhood(ext, rng, max_tail=12)
    a = random_p_neighborhood(ext, rng, max_tail=12)
    b = (
        TypeI(random_open_in(ext.space.ambient, rng))
        if rng.random() < 0.5
        else random_p_neighborhood(ext, rng, max_tail=12)
    )
    if rng.random() < 0.5:
        return intersect_open(ext, a, b)
    return union_open(ext, [a, b])


def clopen_candidates(ext: Extension, rng: random.Random, count: int):
    """Candidates for the clopen falsifier, biased toward near-clopen sets."""
    x = ext.space.ambient
    comps = [f.component.as_set() for f in ext.filters]
    out = []
    for j in range(count):
        roll = rng.random()
        if roll < 0.25 and comps:
            chosen = EMPTY
            for c in comps:
                if rng.random() < 0.5:
                    chosen = union(chosen, c)
            if rng.random() < 0.5:
                out.append(TypeI(chosen))
            else:
                out.append(TypeII(difference(x, chosen), tuple(0 for _ in comps)))
        elif roll < 0.4:
            out.append(TypeI(random_closed_in(x, rng)))  # usually not even open
        else:
            out.append(random_ext_open(ext, rng))
    return out


def random_closed_in_extension(ext: Extension, rng: random.Random, include_p: bool) -> ExtClosedSet:
    """A random closed subset of the extension.

    Without the extra point the trace must stay away from every escape end,
    otherwise the extra point would be in its closure.
    """
    trace = random_closed_in(ext.space.ambient, rng)
    if include_p:
        return ExtClosedSet(True, trace)
    for flt in ext.filters:
        trace = difference(trace, _escape_hull(flt, rng.randint(0, 6), rng))
    return ExtClosedSet(False, trace)


def _open_expansion(s: IntervalSet, eps: Fraction) -> IntervalSet:
    parts = [
        Interval(
            p.lo - eps if is_finite(p.lo) else NEG_INF,
            p.hi + eps if is_finite(p.hi) else POS_INF,
            False,
            False,
        )
        for p in s.pieces
    ]
    return normalize(parts)


def random_disjoint_closed_pair(
    ext: Extension, rng: random.Random
) -> tuple[ExtClosedSet, ExtClosedSet]:
    """Two disjoint extension-closed sets; the extra point lands in F, in G,
    or in neither, with equal odds."""
    mode = rng.choice(("pF", "pG", "plain"))
    f = random_closed_in_extension(ext, rng, mode == "pF")
    g = random_closed_in_extension(ext, rng, mode == "pG")
    if f.trace:
        margin = Fraction(1, rng.randint(2, 4))
        g = ExtClosedSet(g.has_p, difference(g.trace, _open_expansion(f.trace, margin)))
    return f, g


EDGE_SPACES = (
    "(0,1)",
    "[0,1]",
    "[0,0]",
    "(-inf,inf)",
    "(-inf,0)",
    "(0,inf)",
    "[5,inf)",
    "(-inf,0]",
    "(0,1) U (1,2)",
    "(0,1) U [2,3]",
    "[0,0] U (1,2)",
    "(0,1] U [2,3)",
    "(-inf,0) U (0,inf)",
    "(0,1) U (2,3) U [5,inf)",
    "[0,1) U (1,2]",
    "(-inf,-5] U [-1,0] U (1,2)",
    "(0,1) U [2,2] U (3,4)",
)


def corpus(count: int = 200, seed: int = 20260808) -> list[Space]:
    """Edge cases plus generated spaces; even slots avoid compact components."""
    rng = random.Random(seed)
    spaces = [Space(parse_set(text)) for text in EDGE_SPACES]
    while len(spaces) < count:
        spaces.append(random_space(rng, 5, allow_compact=len(spaces) % 2 == 1))
    return spaces

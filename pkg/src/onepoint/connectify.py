"""One-point connected extension of an interval space, with proof witnesses.

A space is extended by one extra point exactly when no component is compact.
Along every component a deterministic *escape filter* is chosen: a descending
chain of nonempty closed sets marching off a non-compact end, with empty total
intersection.  The chain supplies everything the extension topology needs:

* elements are nonempty and closed in their component,
* finite intersections stay in the chain (take the larger index),
* every point of the component is eventually avoided.

Open sets of the extension are either plain traces (type I) or sets holding
the extra point together with a whole filter tail in every component
(type II).  Every separation-style claim about the extension is returned as a
witness or certificate that re-verifies under the exact set algebra alone.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CompactComponent,
    DensityFailure,
    EqualPoints,
    FidelityFailure,
    InvalidExtension,
    NotClosedInY,
    NotDisjoint,
    PInBoth,
    PointOutsideComponent,
)
from .intervals import (
    EMPTY,
    Interval,
    IntervalSet,
    NEG_INF,
    POS_INF,
    difference,
    interior_in,
    intersect,
    is_closed_in,
    is_finite,
    is_open_in,
    midpoint,
    only,
    pick_point,
    union,
)
from .space import Component, Space, components, has_compact_component, is_compact
from .space import separate_disjoint_closed, split_points


# --------------------------------------------------------------------------
# escape filters
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TowardPosInf:
    def __str__(self) -> str:
        return "pos_inf"


@dataclass(frozen=True, slots=True)
class TowardNegInf:
    def __str__(self) -> str:
        return "neg_inf"


@dataclass(frozen=True, slots=True)
class TowardOpenRight:
    bound: Fraction

    def __str__(self) -> str:
        return f"open_right({self.bound})"


@dataclass(frozen=True, slots=True)
class TowardOpenLeft:
    bound: Fraction

    def __str__(self) -> str:
        return f"open_left({self.bound})"


Direction = TowardPosInf | TowardNegInf | TowardOpenRight | TowardOpenLeft


@dataclass(frozen=True, slots=True)
class EscapeFilter:
    """Descending chain of closed escape sets along one component.

    element(n) is ``[anchor+n, inf)`` toward an infinite end and a dyadic
    approach block ``[b - (b-anchor)/2^n, b)`` toward a finite excluded end
    (mirror images on the left), always intersected with the component.
    """

    component: Component
    direction: Direction
    anchor: Fraction

    def element(self, n: int) -> IntervalSet:
        if n < 0:
            raise ValueError("filter indices are naturals")
        d = self.direction
        if isinstance(d, TowardPosInf):
            block = Interval(self.anchor + n, POS_INF, True, False)
        elif isinstance(d, TowardNegInf):
            block = Interval(NEG_INF, self.anchor - n, False, True)
        elif isinstance(d, TowardOpenRight):
            block = Interval(d.bound - (d.bound - self.anchor) / 2**n, d.bound, True, False)
        else:
            block = Interval(d.bound, d.bound + (self.anchor - d.bound) / 2**n, False, True)
        return intersect(only(block), self.component.as_set())

    def avoid_index(self, z) -> int:
        """Least n with z outside element(n)."""
        z = Fraction(z)
        if not self.component.piece.contains(z):
            raise PointOutsideComponent(f"{z} is not in {self.component.piece}")
        d = self.direction
        if isinstance(d, TowardPosInf):
            return max(0, math.floor(z - self.anchor) + 1)
        if isinstance(d, TowardNegInf):
            return max(0, math.floor(self.anchor - z) + 1)
        if isinstance(d, TowardOpenRight):
            span = d.bound - self.anchor
            n = 0
            while not z < d.bound - span / 2**n:
                n += 1
            return n
        span = self.anchor - d.bound
        n = 0
        while not z > d.bound + span / 2**n:
            n += 1
        return n


def choose_escape(component: Component) -> EscapeFilter:
    """Deterministic escape filter: prefer the right end when non-compact."""
    if is_compact(component):
        raise CompactComponent(f"{component.piece} has no non-compact end")
    p = component.piece
    direction: Direction
    if not is_finite(p.hi):
        direction = TowardPosInf()
    elif not p.hi_closed:
        direction = TowardOpenRight(p.hi)
    elif not is_finite(p.lo):
        direction = TowardNegInf()
    else:
        direction = TowardOpenLeft(p.lo)
    if is_finite(p.lo) and is_finite(p.hi):
        anchor = midpoint(p.lo, p.hi)
    elif is_finite(p.lo):
        anchor = p.lo + 1
    elif is_finite(p.hi):
        anchor = p.hi - 1
    else:
        anchor = Fraction(0)
    return EscapeFilter(component, direction, anchor)


# --------------------------------------------------------------------------
# the extension and its open sets
# --------------------------------------------------------------------------


class _ExtraPoint:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "p"


#: The added point of the extension (a reserved token, not a rational).
P = _ExtraPoint()

ExtPoint = Fraction | _ExtraPoint


@dataclass(frozen=True, slots=True)
class Extension:
    """The space plus the extra point, one escape filter per component."""

    space: Space
    filters: tuple[EscapeFilter, ...]

    @property
    def component_list(self) -> tuple[Component, ...]:
        return tuple(f.component for f in self.filters)

    def whole_open(self) -> TypeII:
        return TypeII(self.space.ambient, (0,) * len(self.filters))


@dataclass(frozen=True, slots=True)
class TypeI:
    """Extension-open set not containing the extra point: a plain trace."""

    trace: IntervalSet


@dataclass(frozen=True, slots=True)
class TypeII:
    """Extension-open set containing the extra point.

    For every component the declared tail index witnesses that a whole
    filter tail sits inside the trace.
    """

    trace: IntervalSet
    tails: tuple[int, ...]


ExtOpenSet = TypeI | TypeII


@dataclass(frozen=True, slots=True)
class ExtClosedSet:
    """Closed subset of the extension: optional extra point plus a trace."""

    has_p: bool
    trace: IntervalSet


@dataclass(frozen=True, slots=True)
class Connectifiable:
    extension: Extension


@dataclass(frozen=True, slots=True)
class Refused:
    witness: Component
    reason: str = "clopen-obstruction"


Verdict = Connectifiable | Refused


def check_connectifiable(space: Space) -> Verdict:
    """Connectifiable iff no component is compact.

    A compact component would stay clopen and proper in any one-point
    Hausdorff extension, so it is returned as the refusal witness.
    """
    bad = has_compact_component(space)
    if bad is not None:
        return Refused(bad)
    return Connectifiable(Extension(space, tuple(choose_escape(c) for c in components(space))))


def ext_contains(u: ExtOpenSet, pt: ExtPoint) -> bool:
    if pt is P:
        return isinstance(u, TypeII)
    return Fraction(pt) in u.trace


# --------------------------------------------------------------------------
# openness in the extension
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class OpenCheck:
    ok: bool
    reason: str | None = None  # "TraceNotOpen" or "MissingTail"
    component: int | None = None

    def __bool__(self) -> bool:
        return self.ok


OPEN_OK = OpenCheck(True)


def _escape_piece(flt: EscapeFilter, trace_in_c: IntervalSet) -> Interval | None:
    """The piece of a trace that reaches the filter's escape end, if any."""
    if not trace_in_c.pieces:
        return None
    d = flt.direction
    if isinstance(d, TowardPosInf):
        last = trace_in_c.pieces[-1]
        return None if is_finite(last.hi) else last
    if isinstance(d, TowardOpenRight):
        last = trace_in_c.pieces[-1]
        return last if last.hi == d.bound else None
    if isinstance(d, TowardNegInf):
        first = trace_in_c.pieces[0]
        return None if is_finite(first.lo) else first
    first = trace_in_c.pieces[0]
    return first if first.lo == d.bound else None


def _least_tail(flt: EscapeFilter, piece: Interval) -> int:
    """Least index whose element fits inside an escape-end piece."""
    d = flt.direction
    if isinstance(d, TowardPosInf):
        if not is_finite(piece.lo):
            return 0
        need = piece.lo - flt.anchor
        return max(0, math.ceil(need) if piece.lo_closed else math.floor(need) + 1)
    if isinstance(d, TowardNegInf):
        if not is_finite(piece.hi):
            return 0
        need = flt.anchor - piece.hi
        return max(0, math.ceil(need) if piece.hi_closed else math.floor(need) + 1)
    if isinstance(d, TowardOpenRight):
        if not is_finite(piece.lo):
            return 0
        span = d.bound - flt.anchor
        n = 0
        while True:
            start = d.bound - span / 2**n
            if start > piece.lo or (start == piece.lo and piece.lo_closed):
                return n
            n += 1
    if not is_finite(piece.hi):
        return 0
    span = flt.anchor - d.bound
    n = 0
    while True:
        end = d.bound + span / 2**n
        if end < piece.hi or (end == piece.hi and piece.hi_closed):
            return n
        n += 1


def is_open_in_extension(ext: Extension, u: ExtOpenSet) -> OpenCheck:
    """Openness of an extension set, decided structurally.

    Type I needs an open trace.  Type II additionally needs the trace to run
    all the way to the escape end of every component: that is exactly the
    existence of a contained filter tail.
    """
    x = ext.space.ambient
    if not u.trace.issubset(x) or not is_open_in(u.trace, x):
        return OpenCheck(False, "TraceNotOpen")
    if isinstance(u, TypeI):
        return OPEN_OK
    if len(u.tails) != len(ext.filters) or any(t < 0 for t in u.tails):
        raise InvalidExtension("type-II set needs one natural tail index per component")
    for i, flt in enumerate(ext.filters):
        if _escape_piece(flt, intersect(u.trace, flt.component.as_set())) is None:
            return OpenCheck(False, "MissingTail", i)
    return OPEN_OK


def declared_tails_hold(ext: Extension, u: TypeII) -> bool:
    """The stored indices really witness tail containment (the type invariant)."""
    return all(flt.element(u.tails[i]).issubset(u.trace) for i, flt in enumerate(ext.filters))


def least_valid_tails(ext: Extension, trace: IntervalSet) -> tuple[int, ...] | None:
    """Smallest witnessing tail indices for a trace, or None if one is missing."""
    tails = []
    for flt in ext.filters:
        piece = _escape_piece(flt, intersect(trace, flt.component.as_set()))
        if piece is None:
            return None
        tails.append(_least_tail(flt, piece))
    return tuple(tails)


def intersect_open(ext: Extension, u: ExtOpenSet, v: ExtOpenSet) -> ExtOpenSet:
    """Intersection in the extension topology.

    Two type-II sets meet in a type-II set: the tails are nested chains, so
    the larger index witnesses the intersection.
    """
    trace = intersect(u.trace, v.trace)
    if isinstance(u, TypeII) and isinstance(v, TypeII):
        return TypeII(trace, tuple(max(a, b) for a, b in zip(u.tails, v.tails)))
    return TypeI(trace)


def union_open(ext: Extension, opens) -> ExtOpenSet:
    """Union in the extension topology; type II wins with the smaller tails."""
    opens = list(opens)
    trace = EMPTY
    for o in opens:
        trace = union(trace, o.trace)
    tail_rows = [o.tails for o in opens if isinstance(o, TypeII)]
    if tail_rows:
        return TypeII(trace, tuple(min(col) for col in zip(*tail_rows)))
    return TypeI(trace)


# --------------------------------------------------------------------------
# density and subspace fidelity
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DensityCertificate:
    """Sampled neighborhoods of the extra point, all with nonempty traces."""

    samples: int
    neighborhoods: tuple[TypeII, ...]
    plain_opens: tuple[IntervalSet, ...]


def density_check(ext: Extension, samples: int = 100, seed: int = 0) -> DensityCertificate:
    """Certify that the base space is dense in the extension.

    Every sampled neighborhood of the extra point must trace to a nonempty
    open set (tails are nonempty), and every nonempty base open trivially
    meets the base.  A failure here is a bug, not a refusal.
    """
    from .sampling import random_open_in, random_p_neighborhood

    rng = random.Random(seed)
    neighborhoods = []
    for _ in range(samples):
        nb = random_p_neighborhood(ext, rng)
        if not nb.trace or not is_open_in_extension(ext, nb):
            raise DensityFailure(f"empty or invalid neighborhood of the extra point: {nb}")
        neighborhoods.append(nb)
    plain = []
    for _ in range(samples):
        v = random_open_in(ext.space.ambient, rng)
        if v and not intersect(v, ext.space.ambient):
            raise DensityFailure("nonempty open set missing the base space")
        plain.append(v)
    return DensityCertificate(samples, tuple(neighborhoods), tuple(plain))


def verify_density(ext: Extension, cert: DensityCertificate) -> bool:
    for nb in cert.neighborhoods:
        if not nb.trace or not is_open_in_extension(ext, nb):
            return False
        if not declared_tails_hold(ext, nb):
            return False
    for v in cert.plain_opens:
        if v and not intersect(v, ext.space.ambient):
            return False
    return True


@dataclass(frozen=True, slots=True)
class FidelityCertificate:
    """Sampled opens showing the base is an honest subspace of the extension."""

    samples: int
    extension_opens: tuple[ExtOpenSet, ...]
    base_opens: tuple[IntervalSet, ...]


def subspace_fidelity(ext: Extension, samples: int = 100, seed: int = 0) -> FidelityCertificate:
    """Traces of extension opens are open below; base opens lift as type I."""
    from .sampling import random_ext_open, random_open_in

    rng = random.Random(seed)
    x = ext.space.ambient
    ups = []
    for _ in range(samples):
        u = random_ext_open(ext, rng)
        if not is_open_in(u.trace, x):
            raise FidelityFailure(f"extension open with non-open trace: {u}")
        ups.append(u)
    downs = []
    for _ in range(samples):
        w = random_open_in(x, rng)
        if not is_open_in_extension(ext, TypeI(w)):
            raise FidelityFailure(f"base open refused by the extension: {w}")
        downs.append(w)
    return FidelityCertificate(samples, tuple(ups), tuple(downs))


def verify_fidelity(ext: Extension, cert: FidelityCertificate) -> bool:
    x = ext.space.ambient
    for u in cert.extension_opens:
        if not is_open_in(u.trace, x):
            return False
    for w in cert.base_opens:
        if not is_open_in_extension(ext, TypeI(w)):
            return False
    return True


# --------------------------------------------------------------------------
# connectedness
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ConnectednessStep:
    component: Component
    tail: IntervalSet  # representative filter element


@dataclass(frozen=True, slots=True)
class ConnectednessCertificate:
    """Schema: a clopen set holding the extra point contains a tail in every
    component, hence meets it, hence swallows it whole, hence is everything."""

    steps: tuple[ConnectednessStep, ...]


def connectedness_certificate(ext: Extension) -> ConnectednessCertificate:
    if not ext.filters:
        raise InvalidExtension("extension without components")
    return ConnectednessCertificate(
        tuple(ConnectednessStep(f.component, f.element(0)) for f in ext.filters)
    )


def verify_connectedness(ext: Extension, cert: ConnectednessCertificate) -> bool:
    """Replay each step as exact set algebra."""
    if tuple(s.component for s in cert.steps) != ext.component_list:
        return False
    for step in cert.steps:
        c = step.component.as_set()
        if not step.tail:
            return False
        if not step.tail.issubset(c):
            return False
        if not is_closed_in(step.tail, c):
            return False
        if len(c.pieces) != 1:
            return False
    return True


@dataclass(frozen=True, slots=True)
class IsTrivial:
    which: str  # "empty" or "whole"


@dataclass(frozen=True, slots=True)
class NotClopenEvidence:
    side: str  # "set" or "complement"
    reason: str  # "TraceNotOpen" or "MissingTail"
    component: int | None = None
    boundary: Fraction | None = None


def _openness_boundary(x: IntervalSet, trace: IntervalSet) -> Fraction | None:
    if not trace.issubset(x):
        return pick_point(difference(trace, x))
    bad = difference(trace, interior_in(trace, x))
    return pick_point(bad) if bad else None


def clopen_falsifier(ext: Extension, s: ExtOpenSet):
    """Concrete evidence that a candidate is not a proper nonempty clopen set.

    Returns IsTrivial for the empty set and the whole extension; otherwise a
    failing condition on the set or on its complement.  Finding neither would
    contradict connectedness of the extension and raises the bug signal.
    """
    x = ext.space.ambient
    if isinstance(s, TypeI) and not s.trace:
        return IsTrivial("empty")
    if isinstance(s, TypeII) and s.trace == x:
        return IsTrivial("whole")
    chk = is_open_in_extension(ext, s)
    if not chk:
        boundary = _openness_boundary(x, s.trace) if chk.reason == "TraceNotOpen" else None
        return NotClopenEvidence("set", chk.reason, chk.component, boundary)
    comp_trace = difference(x, s.trace)
    complement_set: ExtOpenSet
    if isinstance(s, TypeII):
        complement_set = TypeI(comp_trace)
    else:
        complement_set = TypeII(comp_trace, (0,) * len(ext.filters))
    chk2 = is_open_in_extension(ext, complement_set)
    if not chk2:
        boundary = _openness_boundary(x, comp_trace) if chk2.reason == "TraceNotOpen" else None
        return NotClopenEvidence("complement", chk2.reason, chk2.component, boundary)
    raise InvalidExtension(f"found a proper nonempty clopen subset: {s}")


# --------------------------------------------------------------------------
# Hausdorff witnesses
# --------------------------------------------------------------------------


def _component_index_of(ext: Extension, z: Fraction) -> int:
    for i, flt in enumerate(ext.filters):
        if flt.component.piece.contains(z):
            return i
    raise PointOutsideComponent(f"{z} is not a point of {ext.space.ambient}")


def _hausdorff_from_p(ext: Extension, z: Fraction) -> tuple[TypeII, TypeI]:
    """Open U around the extra point and V around z, disjoint.

    Pick the first filter element avoiding z, keep a symmetric open box of
    radius min(1, distance) around z, and give the extra point everything
    beyond the box toward the escape end plus all other components.
    """
    x = ext.space.ambient
    i = _component_index_of(ext, z)
    flt = ext.filters[i]
    c_set = flt.component.as_set()
    avoided = flt.element(flt.avoid_index(z))
    d = flt.direction
    if isinstance(d, (TowardPosInf, TowardOpenRight)):
        start = avoided.pieces[0].lo  # first point of the escape block, above z
        delta = min(Fraction(1), start - z)
        if isinstance(d, TowardPosInf):
            block = Interval(z + delta, POS_INF, True, False)
        else:
            block = Interval(z + delta, d.bound, True, False)
    else:
        end = avoided.pieces[-1].hi  # last point of the escape block, below z
        delta = min(Fraction(1), z - end)
        if isinstance(d, TowardNegInf):
            block = Interval(NEG_INF, z - delta, False, True)
        else:
            block = Interval(d.bound, z - delta, False, True)
    v_trace = intersect(only(Interval(z - delta, z + delta)), c_set)
    near = interior_in(intersect(only(block), c_set), x)
    escape = _escape_piece(flt, near)
    if escape is None:
        raise InvalidExtension("escape block lost its end while separating")
    tails = tuple(_least_tail(flt, escape) if j == i else 0 for j in range(len(ext.filters)))
    u_trace = union(difference(x, c_set), near)
    return TypeII(u_trace, tails), TypeI(v_trace)


def hausdorff_witness(ext: Extension, y: ExtPoint, z: ExtPoint) -> tuple[ExtOpenSet, ExtOpenSet]:
    """Disjoint open neighborhoods of two distinct extension points."""
    if y is P and z is P:
        raise EqualPoints("both points are the extra point")
    if y is P:
        return _hausdorff_from_p(ext, Fraction(z))
    if z is P:
        u_p, v_y = _hausdorff_from_p(ext, Fraction(y))
        return v_y, u_p
    y, z = Fraction(y), Fraction(z)
    if y == z:
        raise EqualPoints(f"{y} given twice")
    x = ext.space.ambient
    for q in (y, z):
        if q not in x:
            raise PointOutsideComponent(f"{q} is not a point of {x}")
    u, v = split_points(ext.space, y, z)
    return TypeI(u), TypeI(v)


def verify_hausdorff(
    ext: Extension, y: ExtPoint, z: ExtPoint, u: ExtOpenSet, v: ExtOpenSet
) -> bool:
    """Independent check of the four witness postconditions."""
    if not (ext_contains(u, y) and ext_contains(v, z)):
        return False
    if not (is_open_in_extension(ext, u) and is_open_in_extension(ext, v)):
        return False
    if intersect(u.trace, v.trace):
        return False
    return not (isinstance(u, TypeII) and isinstance(v, TypeII))


# --------------------------------------------------------------------------
# normality witnesses
# --------------------------------------------------------------------------


def closed_in_extension(ext: Extension, f: ExtClosedSet) -> bool:
    """Closed means: the complement passes the extension openness check."""
    x = ext.space.ambient
    if not f.trace.issubset(x):
        return False
    comp_trace = difference(x, f.trace)
    if f.has_p:
        return bool(is_open_in_extension(ext, TypeI(comp_trace)))
    return bool(is_open_in_extension(ext, TypeII(comp_trace, (0,) * len(ext.filters))))


def normality_witness(
    ext: Extension, f: ExtClosedSet, g: ExtClosedSet
) -> tuple[ExtOpenSet, ExtOpenSet]:
    """Disjoint opens around two disjoint closed subsets of the extension.

    Without the extra point this delegates to the base-space separation.
    With the extra point in F, each component contributes the least tail
    avoiding G; the base separation of (F plus that tail) from G is traced
    back per component, and the extra point joins the F side.
    """
    if f.has_p and g.has_p:
        raise PInBoth("the extra point cannot be in both closed sets")
    for name, s in (("F", f), ("G", g)):
        if not closed_in_extension(ext, s):
            raise NotClosedInY(f"{name} is not closed in the extension: {s.trace}, p={s.has_p}")
    if intersect(f.trace, g.trace):
        raise NotDisjoint(f"{f.trace} meets {g.trace}")
    if g.has_p:
        v, u = normality_witness(ext, g, f)
        return u, v
    x = ext.space.ambient
    if not f.has_p:
        u0, v0 = separate_disjoint_closed(ext.space, f.trace, g.trace)
        return TypeI(u0), TypeI(v0)
    avoid_g = difference(x, g.trace)
    u_trace, v_trace = EMPTY, EMPTY
    tails = []
    for flt in ext.filters:
        c_set = flt.component.as_set()
        escape = _escape_piece(flt, intersect(avoid_g, c_set))
        if escape is None:
            raise InvalidExtension("no tail avoids G although G is closed")
        n_c = _least_tail(flt, escape)
        f_c = union(intersect(f.trace, c_set), flt.element(n_c))
        g_c = intersect(g.trace, c_set)
        u_c, v_c = separate_disjoint_closed(ext.space, f_c, g_c)
        u_trace = union(u_trace, intersect(c_set, u_c))
        v_trace = union(v_trace, intersect(c_set, v_c))
        tails.append(n_c)
    return TypeII(u_trace, tuple(tails)), TypeI(v_trace)


def verify_normality(
    ext: Extension, f: ExtClosedSet, g: ExtClosedSet, u: ExtOpenSet, v: ExtOpenSet
) -> bool:
    """Independent check: containment, disjointness, openness."""
    if not (is_open_in_extension(ext, u) and is_open_in_extension(ext, v)):
        return False
    if intersect(u.trace, v.trace):
        return False
    if isinstance(u, TypeII) and isinstance(v, TypeII):
        return False
    if f.has_p and not isinstance(u, TypeII):
        return False
    if g.has_p and not isinstance(v, TypeII):
        return False
    return f.trace.issubset(u.trace) and g.trace.issubset(v.trace)

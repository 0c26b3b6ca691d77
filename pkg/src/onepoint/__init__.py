"""Symbolic one-point connectification and compactification engine.

Spaces are finite unions of intervals with exact rational endpoints.  The
package decides whether such a space admits a one-point connected extension,
constructs it when it does, and emits witnesses and certificates that
re-verify under the exact interval algebra; an Alexandroff compactification
module and an exhaustive finite-topology oracle round out the picture.
"""

from .errors import (
    CompactComponent,
    DensityFailure,
    EmptySpace,
    EqualPoints,
    FidelityFailure,
    InvalidExtension,
    MalformedInterval,
    NotACover,
    NotASubset,
    NotClosed,
    NotClosedInY,
    NotDisjoint,
    OnePointError,
    ParseError,
    PInBoth,
    PointOutsideComponent,
    SizeTooLarge,
)
from .intervals import (
    EMPTY,
    Interval,
    IntervalSet,
    NEG_INF,
    POS_INF,
    REALS,
    closure_in,
    complement,
    difference,
    interior_in,
    intersect,
    interval,
    is_closed_in,
    is_open_in,
    midpoint,
    normalize,
    only,
    parse_point,
    parse_set,
    pick_point,
    point,
    union,
)
from .space import (
    Component,
    LocalConnectednessCertificate,
    Space,
    components,
    has_compact_component,
    is_compact,
    local_connectedness_certificate,
    separate_disjoint_closed,
    split_points,
    verify_local_connectedness,
)
from .connectify import (
    Connectifiable,
    ConnectednessCertificate,
    DensityCertificate,
    EscapeFilter,
    ExtClosedSet,
    Extension,
    ExtOpenSet,
    FidelityCertificate,
    IsTrivial,
    NotClopenEvidence,
    OpenCheck,
    P,
    Refused,
    TowardNegInf,
    TowardOpenLeft,
    TowardOpenRight,
    TowardPosInf,
    TypeI,
    TypeII,
    Verdict,
    check_connectifiable,
    choose_escape,
    clopen_falsifier,
    closed_in_extension,
    connectedness_certificate,
    declared_tails_hold,
    density_check,
    ext_contains,
    hausdorff_witness,
    intersect_open,
    is_open_in_extension,
    least_valid_tails,
    normality_witness,
    subspace_fidelity,
    union_open,
    verify_connectedness,
    verify_density,
    verify_fidelity,
    verify_hausdorff,
    verify_normality,
)
from .compactify import (
    INFINITY,
    CompactExtension,
    CompactRefused,
    TypeInf,
    compactification_hausdorff_witness,
    compactify,
    comp_contains,
    finite_subcover,
    is_open_in_compactification,
    is_space_compact,
    verify_compact_hausdorff,
)
from .finite import (
    AXIOMS,
    FiniteSpace,
    Preorder,
    check_axiom,
    components_exhaustive,
    components_growth,
    count_topologies,
    enumerate_topologies,
    from_preorder,
    is_dense,
    parse_topology_literal,
    search_one_point_connectifications,
    subspace,
    to_preorder,
    topology_literal,
    validate_topology,
)

__version__ = "0.1.0"

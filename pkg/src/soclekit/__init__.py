"""Socle antichains of monomial ideals via the dominance order on Z^d.

The package works entirely with exponent vectors: upsets of the lattice
stand for monomial ideals, the socle antichain of an ideal is the set of
maximal points outside its upset, and corner augmentation makes the two
directions mutually reconstructible.
"""

from .lattice import (
    Antichain,
    DimensionMismatchError,
    NotAntichainError,
    Point,
    as_point,
    comparable,
    is_antichain,
    leq,
    maximal_elements,
    minimal_elements,
    rotate,
    rotate_point,
    translate,
    translate_point,
)
from .updown import (
    CornerWitness,
    DownSet,
    NotCofiniteError,
    NotCorneredError,
    UpSet,
    socle_down,
    socle_down_witnessed,
    socle_up,
)
from .augment import (
    Bounds,
    lower_corners,
    outer_bounds,
    upper_corners,
    with_lower_corners,
    with_upper_corners,
)
from .reconstruct import (
    IdealClassification,
    PseudoPartition,
    classify_ideal,
    is_pure_power,
    pseudo_partition,
    retrieve_generators,
    socle_to_generators,
    type2_generators,
    zero_dim_ideal_from_socle,
)
from .generic import (
    CoordinateClassification,
    NotOrderGenericError,
    OrderGenericityWarning,
    TripleClasses,
    classify_coordinates,
    is_order_generic,
    ordered_bell,
    stirling2,
    strict_min_coords,
    subset_generators,
    triple_classes,
    type3_count,
    type3_generators,
    union_subset_generators,
    weak_ordering,
)
from .oracle import (
    Box,
    brute_socle_down,
    brute_socle_up,
    default_box,
    enumerate_zero_dim_ideals,
)

__all__ = [
    "Antichain",
    "Bounds",
    "Box",
    "CoordinateClassification",
    "CornerWitness",
    "DimensionMismatchError",
    "DownSet",
    "IdealClassification",
    "NotAntichainError",
    "NotCofiniteError",
    "NotCorneredError",
    "NotOrderGenericError",
    "OrderGenericityWarning",
    "Point",
    "PseudoPartition",
    "TripleClasses",
    "UpSet",
    "as_point",
    "brute_socle_down",
    "brute_socle_up",
    "classify_coordinates",
    "classify_ideal",
    "comparable",
    "default_box",
    "enumerate_zero_dim_ideals",
    "is_antichain",
    "is_order_generic",
    "is_pure_power",
    "leq",
    "lower_corners",
    "maximal_elements",
    "minimal_elements",
    "ordered_bell",
    "outer_bounds",
    "pseudo_partition",
    "retrieve_generators",
    "rotate",
    "rotate_point",
    "socle_down",
    "socle_down_witnessed",
    "socle_to_generators",
    "socle_up",
    "stirling2",
    "strict_min_coords",
    "subset_generators",
    "translate",
    "translate_point",
    "triple_classes",
    "type2_generators",
    "type3_count",
    "type3_generators",
    "union_subset_generators",
    "upper_corners",
    "weak_ordering",
    "with_lower_corners",
    "with_upper_corners",
    "zero_dim_ideal_from_socle",
]

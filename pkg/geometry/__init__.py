"""
几何核心模块
精确有理点、直线、谓词、点集与文件格式
"""
from .exceptions import (
    RadialOrderError,
    InvalidPointSetError,
    IdenticalPointsError,
    DegenerateInputError,
    NotObservationPointError,
    EmptySequenceError,
    UncoloredSetError,
    MismatchedIndexSetsError,
    NotInteriorPointError,
    TooFewPointsError,
    NotValidatedError,
    RetryExhaustedError,
    ParameterDegenerateError,
    BudgetExceededError,
)
from .kernel import (
    Rational,
    RationalPoint,
    Orientation,
    Line,
    LineRelation,
    cross,
    dot,
    squared_distance,
    orientation,
    line_through,
    line_intersection,
    circle_point,
    convex_hull_indices,
    strictly_inside_convex,
    on_segment,
    segments_intersect,
    ray_hits_segment,
)
from .pointset import (
    Color,
    ColoredPointSet,
    ValidationResult,
    validate_strong_general_position,
    spanned_lines,
    convex_hull,
    intersection_point,
)
from .serialization import (
    load_point_set,
    save_point_set,
    load_points,
    save_points,
    atomic_write_text,
    format_rational,
    parse_rational,
)

__all__ = [
    "RadialOrderError",
    "InvalidPointSetError",
    "IdenticalPointsError",
    "DegenerateInputError",
    "NotObservationPointError",
    "EmptySequenceError",
    "UncoloredSetError",
    "MismatchedIndexSetsError",
    "NotInteriorPointError",
    "TooFewPointsError",
    "NotValidatedError",
    "RetryExhaustedError",
    "ParameterDegenerateError",
    "BudgetExceededError",
    "Rational",
    "RationalPoint",
    "Orientation",
    "Line",
    "LineRelation",
    "cross",
    "dot",
    "squared_distance",
    "orientation",
    "line_through",
    "line_intersection",
    "circle_point",
    "convex_hull_indices",
    "strictly_inside_convex",
    "on_segment",
    "segments_intersect",
    "ray_hits_segment",
    "Color",
    "ColoredPointSet",
    "ValidationResult",
    "validate_strong_general_position",
    "spanned_lines",
    "convex_hull",
    "intersection_point",
    "load_point_set",
    "save_point_set",
    "load_points",
    "save_points",
    "atomic_write_text",
    "format_rational",
    "parse_rational",
]

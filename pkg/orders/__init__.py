"""
循环序模块
径向序、规范旋转、颜色词与星形多边形
"""
from .circular import (
    CircularOrder,
    ColorWord,
    DiffKind,
    TranspositionDiff,
    canonical_rotation,
    color_word,
    adjacent_transposition_diff,
    apply_adjacent_swap,
)
from .radial import (
    clockwise_indices,
    radial_order,
    star_polygonization,
    is_simple_polygon,
)

__all__ = [
    "CircularOrder",
    "ColorWord",
    "DiffKind",
    "TranspositionDiff",
    "canonical_rotation",
    "color_word",
    "adjacent_transposition_diff",
    "apply_adjacent_swap",
    "clockwise_indices",
    "radial_order",
    "star_polygonization",
    "is_simple_polygon",
]

"""
直线排列模块
裁剪排列、边分类、序划分与统计
"""
from .builder import (
    Arrangement,
    Box,
    Edge,
    EdgeKind,
    Face,
    Vertex,
    build_arrangement,
    classify_edges,
    check_budget,
    projected_face_count,
    segment_parameter,
)
from .partition import OrderPartition, box_split_edges, build_order_partition
from .stats import (
    CSV_HEADER,
    ArrangementStats,
    compute_stats,
    crossing_lower_bound,
    crossing_number,
    count_m,
    degree_histogram,
    vertex_degrees,
    interior_face_representatives,
)
from .unionfind import UnionFind

__all__ = [
    "Arrangement",
    "Box",
    "Edge",
    "EdgeKind",
    "Face",
    "Vertex",
    "build_arrangement",
    "classify_edges",
    "check_budget",
    "projected_face_count",
    "segment_parameter",
    "OrderPartition",
    "box_split_edges",
    "build_order_partition",
    "CSV_HEADER",
    "ArrangementStats",
    "compute_stats",
    "crossing_lower_bound",
    "crossing_number",
    "count_m",
    "degree_histogram",
    "vertex_degrees",
    "interior_face_representatives",
    "UnionFind",
]

"""
序划分
跨线段内部边合并面，得到径向序恒定的胞腔
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

from geometry.exceptions import DegenerateInputError

from .builder import Arrangement, EdgeKind
from .unionfind import UnionFind


logger = logging.getLogger(__name__)


@dataclass
class OrderPartition:
    """
    面到胞腔的映射

    Attributes:
        face_to_cell: 内部面编号 -> 胞腔编号（0..cell_count-1，按最小面编号排序）
        cell_count: 胞腔数
        cells: 胞腔编号 -> 所含面编号
    """
    face_to_cell: Dict[int, int]
    cell_count: int
    cells: Dict[int, List[int]] = field(default_factory=dict)

    def same_cell(self, f1: int, f2: int) -> bool:
        return self.face_to_cell[f1] == self.face_to_cell[f2]


def box_split_edges(arr: Arrangement) -> List[int]:
    """
    到达盒边却不是半线的直线边

    这样的边意味着同一个无界面被盒边切开，需要跨盒合并；盒包含全部顶点时应为空
    """
    return [
        e.id for e in arr.edges
        if e.line is not None
        and (arr.vertices[e.u].on_box or arr.vertices[e.v].on_box)
        and e.kind != EdgeKind.HALF_LINE
    ]


def build_order_partition(arr: Arrangement) -> OrderPartition:
    """
    合并跨 SegmentInterior 边相邻的面

    Args:
        arr: 已构建的排列

    Returns:
        OrderPartition（外面不参与）
    """
    uf = UnionFind(arr.F)
    merges = 0
    for e in arr.edges:
        if e.kind != EdgeKind.SEGMENT_INTERIOR:
            continue
        left, right = arr.edge_faces(e.id)
        merges += uf.union(left, right)
    split = box_split_edges(arr)
    if split:
        raise DegenerateInputError(f"盒边切开了无界面: 边 {split}")

    inner = [f.id for f in arr.faces if not f.outer]
    groups = uf.components(inner)
    face_to_cell: Dict[int, int] = {}
    cells: Dict[int, List[int]] = {}
    for cell_id, members in enumerate(sorted(groups.values(), key=min)):
        cells[cell_id] = sorted(members)
        for f in members:
            face_to_cell[f] = cell_id
    logger.info("序划分: %d 个面合并为 %d 个胞腔 (%d 次合并)", len(inner), len(cells), merges)
    return OrderPartition(face_to_cell=face_to_cell, cell_count=len(cells), cells=cells)

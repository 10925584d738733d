"""
划分引理与凸包内部胞腔的可检验形式
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from arrangement import (
    Arrangement,
    build_arrangement,
    build_order_partition,
    interior_face_representatives,
)
from geometry.exceptions import DegenerateInputError
from geometry.kernel import RationalPoint, cross, line_through, ray_hits_segment
from geometry.pointset import ColoredPointSet, convex_hull, validate_strong_general_position
from orders.radial import radial_order


logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    PASS = "pass"
    COUNTEREXAMPLE = "counterexample"
    VALIDATION_REQUIRED = "validation_required"


@dataclass
class DistinctnessReport:
    """
    凸包内部胞腔两两径向序不同的检验结果

    Attributes:
        status: PASS / COUNTEREXAMPLE / VALIDATION_REQUIRED
        checked_cells: 参与比较的内部胞腔数
        counterexample: 径向序相同的两个胞腔编号
    """
    status: CheckStatus
    checked_cells: int = 0
    counterexample: Optional[Tuple[int, int]] = None
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


def interior_distinctness_check(s: ColoredPointSet, arr: Optional[Arrangement] = None) -> DistinctnessReport:
    """
    凸包内部、位于不同胞腔的观察点径向序必须不同

    Args:
        s: 点集；不满足强一般位置时跳过
        arr: 已构建的排列（可选）

    Returns:
        DistinctnessReport
    """
    report = validate_strong_general_position(s)
    if not report:
        return DistinctnessReport(CheckStatus.VALIDATION_REQUIRED, message=report.message)
    if arr is None:
        arr = build_arrangement(s, validate=False)
    partition = build_order_partition(arr)

    seen = {}
    first_rep = {}
    for fid, rep in interior_face_representatives(s, arr):
        cell = partition.face_to_cell[fid]
        if cell not in first_rep:
            first_rep[cell] = rep
    for cell in sorted(first_rep):
        order = radial_order(s, first_rep[cell], check=False)
        if order in seen:
            pair = (seen[order], cell)
            logger.warning("内部胞腔 %s 与 %s 的径向序相同", *pair)
            return DistinctnessReport(CheckStatus.COUNTEREXAMPLE, len(first_rep), pair,
                                      f"胞腔 {pair[0]} 与 {pair[1]} 的径向序相同: {order}")
        seen[order] = cell
    return DistinctnessReport(CheckStatus.PASS, len(first_rep), message=f"{len(first_rep)} 个内部胞腔两两不同")


@dataclass
class LemmaResult:
    """
    划分引理检验结果

    Attributes:
        applicable: 前提是否成立
        distinct: 前提成立时两点的径向序是否不同
        blocking: 前提不成立时，与线段 pq 相交的一条双色半线（起点, 另一点）
    """
    applicable: bool
    distinct: Optional[bool] = None
    blocking: Optional[Tuple[int, int]] = None
    message: str = ""


def partition_lemma_check(s: ColoredPointSet, red_indices: Iterable[int],
                          p: RationalPoint, q: RationalPoint,
                          arr: Optional[Arrangement] = None) -> LemmaResult:
    """
    检验划分引理：(R, B) 为点集的划分，p、q 位于不同胞腔，
    若没有 R-B 半线与线段 pq 相交，则两点的径向序不同

    Args:
        s: 点集
        red_indices: R 中点的下标，其余点构成 B
        p, q: 两个观察点
        arr: 包围盒含 p、q 的排列（可选）

    Returns:
        前提不成立时 applicable=False；否则给出 distinct
    """
    if arr is None:
        arr = build_arrangement(s, extra_points=(p, q))
    partition = build_order_partition(arr)
    if partition.same_cell(arr.locate(p), arr.locate(q)):
        return LemmaResult(applicable=False, message="p、q 位于同一胞腔")

    red = set(red_indices)
    blue = [k for k in range(len(s)) if k not in red]
    for r in sorted(red):
        for b in blue:
            # 两条半线：从 r 背离 b，从 b 背离 r
            for apex, other in ((r, b), (b, r)):
                direction = s[apex] - s[other]
                if ray_hits_segment(s[apex], direction, p, q):
                    return LemmaResult(applicable=False, blocking=(apex, other),
                                       message=f"半线 ({apex} 背离 {other}) 与线段 pq 相交")
    distinct = radial_order(s, p) != radial_order(s, q)
    if not distinct:
        logger.warning("划分引理前提成立但径向序相同: p=%s q=%s", p, q)
    return LemmaResult(applicable=True, distinct=distinct, message="前提成立")


def split_by_line(s: ColoredPointSet, p: RationalPoint, q: RationalPoint) -> Tuple[List[int], List[int]]:
    """
    直线 pq 把点集分成两侧

    Returns:
        (左侧下标, 右侧下标)

    Raises:
        DegenerateInputError: 有点落在直线 pq 上
    """
    line = line_through(p, q)
    left, right = [], []
    d = q - p
    for k, x in enumerate(s.points):
        if line.contains(x):
            raise DegenerateInputError(f"第 {k} 个点落在直线 pq 上")
        (left if cross(d, x - p) > 0 else right).append(k)
    return left, right


def hull_cone(s: ColoredPointSet, vertex: int) -> Tuple[RationalPoint, RationalPoint, RationalPoint]:
    """
    凸包顶点 p 处的外锥：顶点 p，边界为射线 p->p'' 与边 p'->p 的延长线

    Args:
        vertex: 凸包顶点的下标

    Returns:
        (apex, d1, d2)，d1 = p'' - p，d2 = p - p'

    Raises:
        DegenerateInputError: vertex 不是凸包顶点
    """
    hull = convex_hull(s)
    if vertex not in hull:
        raise DegenerateInputError(f"第 {vertex} 个点不是凸包顶点")
    k = hull.index(vertex)
    prev_pt = s[hull[k - 1]]
    next_pt = s[hull[(k + 1) % len(hull)]]
    apex = s[vertex]
    return apex, next_pt - apex, apex - prev_pt


def in_hull_cone(s: ColoredPointSet, vertex: int, point: RationalPoint) -> bool:
    """point 是否严格位于凸包顶点 vertex 的外锥内"""
    apex, d1, d2 = hull_cone(s, vertex)
    w = point - apex
    turn = cross(d2, d1)
    c1 = cross(d2, w)
    c2 = cross(w, d1)
    if turn < 0:
        return c1 < 0 and c2 < 0
    return c1 > 0 and c2 > 0


def cone_points_in_cells(s: ColoredPointSet, vertex: int, arr: Arrangement) -> List[Tuple[int, RationalPoint]]:
    """排列中代表点落在外锥内的面"""
    return [(f.id, f.representative) for f in arr.inner_faces() if in_hull_cone(s, vertex, f.representative)]


def distinct_pairs(orders: Sequence) -> bool:
    """序列中的元素两两不同"""
    return len(set(orders)) == len(orders)

"""
排列统计
V/E/F、度数分布、M、直线交叉数 cr 与胞腔计数
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Sequence, Tuple

from geometry.kernel import (
    Orientation,
    RationalPoint,
    lcm_of,
    orientation,
    strictly_inside_convex,
)
from geometry.pointset import ColoredPointSet, convex_hull

from .builder import Arrangement, segment_parameter
from .partition import OrderPartition


logger = logging.getLogger(__name__)

# n <= 12 时 n 点集凸四点组个数的最小值（直线交叉数 cr(K_n)）
MIN_CROSSINGS = {3: 0, 4: 0, 5: 1, 6: 3, 7: 9, 8: 19, 9: 36, 10: 62, 11: 102, 12: 153}

CSV_HEADER = ("n", "lines", "V", "E", "F", "M", "cr", "order_cells", "interior_order_cells")


@dataclass
class ArrangementStats:
    """排列的精确统计量"""
    n: int
    line_count: int
    V: int
    E: int
    F: int
    degree_histogram: Dict[int, int]
    lines_per_vertex: Dict[int, int]
    M: int
    cr: int
    order_cells: int
    interior_order_cells: int
    site_degrees: Dict[int, int] = field(default_factory=dict)
    deg4_count: int = 0
    deg4_lower_bound: int = 0

    @property
    def inner_faces(self) -> int:
        return self.F - 1

    @property
    def m_identity_holds(self) -> bool:
        """M = 3*C(n,4) - 2*cr"""
        return self.M == 3 * comb(self.n, 4) - 2 * self.cr

    @property
    def crossing_lower_bound(self) -> int:
        return crossing_lower_bound(self.n)

    @property
    def crossing_ratio(self) -> Fraction:
        """cr / C(n,4)，渐近下界为 3/8"""
        quads = comb(self.n, 4)
        return Fraction(self.cr, quads) if quads else Fraction(0)

    @property
    def cell_lower_bound(self) -> int:
        """逐条删除线段后胞腔数的下界 F_inner - M - C(n,2)"""
        return self.inner_faces - self.M - comb(self.n, 2)

    def csv_row(self) -> Tuple[int, ...]:
        return (self.n, self.line_count, self.V, self.E, self.F, self.M, self.cr,
                self.order_cells, self.interior_order_cells)


def crossing_lower_bound(n: int) -> int:
    """
    对任意 n 点强一般位置点集成立的 cr 下界

    n <= 12 取已知最小值；更大的 n 对全部 12 点子集平均：
    每个四点组落在 C(n-4, 8) 个子集中，故 cr >= ceil(153 * C(n,4) / C(12,4))
    """
    if n in MIN_CROSSINGS:
        return MIN_CROSSINGS[n]
    return -((-MIN_CROSSINGS[12] * comb(n, 4)) // comb(12, 4))


def _integer_points(points: Sequence[RationalPoint]) -> List[Tuple[int, int]]:
    den = lcm_of(*(p.x.denominator for p in points), *(p.y.denominator for p in points))
    return [(int(p.x * den), int(p.y * den)) for p in points]


def _orient(a, b, c) -> int:
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (det > 0) - (det < 0)


def crossing_number(s: ColoredPointSet) -> int:
    """
    直线交叉数：凸位置四点组的个数

    四点凸位置当且仅当没有一点落在其余三点的三角形内
    """
    pts = _integer_points(s.points)
    count = 0
    for quad in combinations(range(len(pts)), 4):
        convex = True
        for k in range(4):
            d = pts[quad[k]]
            a, b, c = (pts[quad[m]] for m in range(4) if m != k)
            o1, o2, o3 = _orient(a, b, d), _orient(b, c, d), _orient(c, a, d)
            if o1 == o2 == o3:
                convex = False
                break
        count += convex
    return count


def count_m(arr: Arrangement) -> int:
    """不在点集中、严格位于某条张成线段内部的顶点数（每个顶点计一次）"""
    m = 0
    for v in arr.vertices:
        if v.site is not None or v.on_box:
            continue
        for k in v.lines:
            t = segment_parameter(arr.points.points, arr.line_pairs[k], v.point)
            if 0 < t < 1:
                m += 1
                break
    return m


def vertex_degrees(arr: Arrangement) -> Dict[int, int]:
    """顶点编号 -> 裁剪图中的关联边数"""
    degrees: Dict[int, int] = Counter()
    for e in arr.edges:
        degrees[e.u] += 1
        degrees[e.v] += 1
    return degrees


def degree_histogram(arr: Arrangement) -> Dict[int, int]:
    """度数 -> 顶点个数"""
    degrees = vertex_degrees(arr)
    return dict(sorted(Counter(degrees[v.id] for v in arr.vertices).items()))


def _clip_convex(subject: List[RationalPoint], clip: List[RationalPoint]) -> List[RationalPoint]:
    # Sutherland-Hodgman，clip 为逆时针凸多边形
    output = list(subject)
    for i, a in enumerate(clip):
        b = clip[(i + 1) % len(clip)]
        if not output:
            break
        current, output = output, []
        for j, p in enumerate(current):
            q = current[(j + 1) % len(current)]
            p_in = orientation(a, b, p) != Orientation.CLOCKWISE
            q_in = orientation(a, b, q) != Orientation.CLOCKWISE
            if p_in:
                output.append(p)
            if p_in != q_in:
                d1 = q - p
                d2 = b - a
                denom = d1.x * d2.y - d1.y * d2.x
                t = ((a.x - p.x) * d2.y - (a.y - p.y) * d2.x) / denom
                output.append(RationalPoint(p.x + t * d1.x, p.y + t * d1.y))
    return output


def _polygon_area2(polygon: Sequence[RationalPoint]) -> Fraction:
    total = Fraction(0)
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        total += p.x * q.y - p.y * q.x
    return total


def interior_face_representatives(s: ColoredPointSet, arr: Arrangement) -> List[Tuple[int, RationalPoint]]:
    """
    与凸包内部相交的每个面给出一个严格位于凸包内部的代表点

    面的重心在凸包外或边界上时，改用面与凸包交集多边形的顶点平均

    Returns:
        [(面编号, 代表点)]
    """
    hull = [s[i] for i in convex_hull(s)]
    hull_ccw = list(reversed(hull))
    result = []
    for face in arr.inner_faces():
        rep = face.representative
        if strictly_inside_convex(hull, rep):
            result.append((face.id, rep))
            continue
        clipped = _clip_convex(arr.face_polygon(face.id), hull_ccw)
        if len(clipped) < 3 or _polygon_area2(clipped) <= 0:
            continue
        distinct = list(dict.fromkeys(clipped))
        point = RationalPoint(
            sum((p.x for p in distinct), Fraction(0)) / len(distinct),
            sum((p.y for p in distinct), Fraction(0)) / len(distinct),
        )
        result.append((face.id, point))
    return result


def compute_stats(s: ColoredPointSet, arr: Arrangement, op: OrderPartition) -> ArrangementStats:
    """
    计算排列的全部统计量

    Args:
        s: 点集
        arr: 排列
        op: 序划分

    Returns:
        ArrangementStats
    """
    n = len(s)
    degrees = vertex_degrees(arr)
    histogram = degree_histogram(arr)
    lines_per_vertex = dict(sorted(Counter(len(v.lines) for v in arr.vertices if not v.on_box).items()))
    site_degrees = {v.site: degrees[v.id] for v in arr.vertices if v.site is not None}
    deg4 = sum(1 for v in arr.vertices if v.site is None and not v.on_box and degrees[v.id] == 4)
    deg4_bound = max(0, comb(n, 2) * (n - 2) * (n - 4) // 4)

    interior_cells = {op.face_to_cell[fid] for fid, _ in interior_face_representatives(s, arr)}
    stats = ArrangementStats(
        n=n,
        line_count=len(arr.lines),
        V=arr.V,
        E=arr.E,
        F=arr.F,
        degree_histogram=histogram,
        lines_per_vertex=lines_per_vertex,
        M=count_m(arr),
        cr=crossing_number(s),
        order_cells=op.cell_count,
        interior_order_cells=len(interior_cells),
        site_degrees=site_degrees,
        deg4_count=deg4,
        deg4_lower_bound=deg4_bound,
    )
    logger.info("统计: M=%d cr=%d 胞腔=%d 内部胞腔=%d", stats.M, stats.cr, stats.order_cells,
                stats.interior_order_cells)
    return stats

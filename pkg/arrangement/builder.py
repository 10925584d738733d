"""
直线排列构建
所有张成直线在包围盒内裁剪后的平面细分，半边结构抽取面
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from geometry.exceptions import (
    BudgetExceededError,
    DegenerateInputError,
    NotObservationPointError,
    NotValidatedError,
    TooFewPointsError,
)
from geometry.kernel import Line, RationalPoint, dot, strictly_inside_convex
from geometry.pointset import ColoredPointSet, spanned_lines, validate_strong_general_position


logger = logging.getLogger(__name__)


class EdgeKind(Enum):
    """边的类型"""
    SEGMENT_INTERIOR = "segment_interior"
    HALF_LINE = "half_line"
    BOX_BOUNDARY = "box_boundary"


@dataclass(frozen=True)
class Box:
    """轴对齐裁剪矩形"""
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction

    @property
    def corners(self) -> Tuple[RationalPoint, ...]:
        # 逆时针
        return (
            RationalPoint(self.xmin, self.ymin),
            RationalPoint(self.xmax, self.ymin),
            RationalPoint(self.xmax, self.ymax),
            RationalPoint(self.xmin, self.ymax),
        )

    def strictly_contains(self, p: RationalPoint) -> bool:
        return self.xmin < p.x < self.xmax and self.ymin < p.y < self.ymax

    def taller(self, margin: Fraction) -> "Box":
        return Box(self.xmin, self.xmax, self.ymin - margin, self.ymax + margin)


@dataclass(frozen=True)
class Vertex:
    """
    排列顶点

    Attributes:
        lines: 经过该点的张成直线编号
        site: 若为点集中的点，给出其下标
        on_box: 是否在包围盒边界上
    """
    id: int
    point: RationalPoint
    lines: FrozenSet[int]
    site: Optional[int] = None
    on_box: bool = False


@dataclass(frozen=True)
class Edge:
    """无向边 u-v；line 为所在张成直线编号，盒边为 None"""
    id: int
    u: int
    v: int
    line: Optional[int]
    kind: EdgeKind


@dataclass
class Face:
    """面：逆时针半边环（外面为顺时针）"""
    id: int
    half_edges: List[int]
    vertices: List[int]
    area: Fraction
    representative: Optional[RationalPoint] = None
    outer: bool = False


@dataclass
class Arrangement:
    """
    裁剪后的直线排列

    半边 2e 为 edges[e].u -> edges[e].v，2e+1 为反向；
    next_half / half_face 按半边编号索引
    """
    points: ColoredPointSet
    lines: List[Line]
    line_pairs: List[Tuple[int, int]]
    vertices: List[Vertex]
    edges: List[Edge]
    faces: List[Face]
    box: Box
    next_half: List[int]
    half_face: List[int]
    outer_face: int
    _face_bounds: Dict[int, Tuple[Fraction, Fraction, Fraction, Fraction]] = field(
        default_factory=dict, repr=False
    )

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        """面数（含裁剪图的外面）"""
        return len(self.faces)

    def origin(self, h: int) -> int:
        e = self.edges[h >> 1]
        return e.u if h % 2 == 0 else e.v

    def destination(self, h: int) -> int:
        e = self.edges[h >> 1]
        return e.v if h % 2 == 0 else e.u

    @staticmethod
    def twin(h: int) -> int:
        return h ^ 1

    def edge_faces(self, edge_id: int) -> Tuple[int, int]:
        """边两侧的面（左侧、右侧，相对 u->v）"""
        return self.half_face[2 * edge_id], self.half_face[2 * edge_id + 1]

    def inner_faces(self) -> List[Face]:
        return [f for f in self.faces if not f.outer]

    def face_polygon(self, face_id: int) -> List[RationalPoint]:
        return [self.vertices[v].point for v in self.faces[face_id].vertices]

    def locate(self, p: RationalPoint) -> int:
        """
        点所在的面

        Args:
            p: 盒内、不在任何张成直线上的点

        Returns:
            面编号

        Raises:
            DegenerateInputError: 点在包围盒外
            NotObservationPointError: 点落在某条张成直线上
        """
        if not self.box.strictly_contains(p):
            raise DegenerateInputError(f"点 {p} 在包围盒之外")
        for k, line in enumerate(self.lines):
            if line.contains(p):
                i, j = self.line_pairs[k]
                raise NotObservationPointError(f"点 {p} 落在第 {i}、{j} 个点张成的直线上")
        for face in self.faces:
            if face.outer:
                continue
            xmin, xmax, ymin, ymax = self._bounds(face.id)
            if not (xmin < p.x < xmax and ymin < p.y < ymax):
                continue
            if strictly_inside_convex(self.face_polygon(face.id), p):
                return face.id
        raise DegenerateInputError(f"未找到包含点 {p} 的面")

    def _bounds(self, face_id: int):
        if face_id not in self._face_bounds:
            polygon = self.face_polygon(face_id)
            xs = [q.x for q in polygon]
            ys = [q.y for q in polygon]
            self._face_bounds[face_id] = (min(xs), max(xs), min(ys), max(ys))
        return self._face_bounds[face_id]


def projected_face_count(n: int) -> int:
    """预估面数 C(C(n,2),2)"""
    return comb(comb(n, 2), 2)


def check_budget(n: int, budget: int) -> None:
    """
    预估规模超过预算时拒绝

    Raises:
        BudgetExceededError: C(C(n,2),2) > budget
    """
    projected = projected_face_count(n)
    if projected > budget:
        raise BudgetExceededError(
            f"n={n} 预估面数 {projected} 超过预算 {budget}，可通过 RADIAL_FACE_BUDGET 调整"
        )


def segment_parameter(points: Sequence[RationalPoint], pair: Tuple[int, int],
                      p: RationalPoint) -> Fraction:
    """p 沿 x_i -> x_j 的参数 t（x_i 处为 0，x_j 处为 1）"""
    xi, xj = points[pair[0]], points[pair[1]]
    d = xj - xi
    return dot(p - xi, d) / dot(d, d)


def _classify(points: Sequence[RationalPoint], line_pairs: Sequence[Tuple[int, int]],
              line: Optional[int], a: RationalPoint, b: RationalPoint) -> EdgeKind:
    if line is None:
        return EdgeKind.BOX_BOUNDARY
    mid = RationalPoint((a.x + b.x) / 2, (a.y + b.y) / 2)
    t = segment_parameter(points, line_pairs[line], mid)
    return EdgeKind.SEGMENT_INTERIOR if 0 < t < 1 else EdgeKind.HALF_LINE


def classify_edges(arr: Arrangement) -> Dict[int, EdgeKind]:
    """
    按中点参数对每条边重新分类

    Returns:
        边编号 -> EdgeKind
    """
    result = {}
    for e in arr.edges:
        a = arr.vertices[e.u].point
        b = arr.vertices[e.v].point
        result[e.id] = _classify(arr.points.points, arr.line_pairs, e.line, a, b)
    return result


def _choose_box(coords: Iterable[RationalPoint], lines: Sequence[Line]) -> Box:
    xs, ys = [], []
    for p in coords:
        xs.append(p.x)
        ys.append(p.y)
    wx = max(xs) - min(xs)
    wy = max(ys) - min(ys)
    box = Box(min(xs) - wx - 1, max(xs) + wx + 1, min(ys) - wy - 1, max(ys) + wy + 1)
    # 只在竖直方向外扩：竖直直线碰不到盒角，其余直线与每条角轨迹至多交一次
    while any(line.contains(c) for line in lines for c in box.corners):
        box = box.taller(Fraction(1, 3))
    return box


def _box_crossings(line: Line, box: Box) -> List[Tuple[str, RationalPoint]]:
    hits = []
    if line.b != 0:
        for side, x in (("left", box.xmin), ("right", box.xmax)):
            y = (line.c - line.a * x) / line.b
            if box.ymin < y < box.ymax:
                hits.append((side, RationalPoint(x, y)))
    if line.a != 0:
        for side, y in (("bottom", box.ymin), ("top", box.ymax)):
            x = (line.c - line.b * y) / line.a
            if box.xmin < x < box.xmax:
                hits.append((side, RationalPoint(x, y)))
    return hits


def _ccw_cmp(u: RationalPoint, v: RationalPoint) -> int:
    # 从 x 正方向开始逆时针
    hu = 0 if u.y > 0 or (u.y == 0 and u.x > 0) else 1
    hv = 0 if v.y > 0 or (v.y == 0 and v.x > 0) else 1
    if hu != hv:
        return hu - hv
    c = u.x * v.y - u.y * v.x
    return -1 if c > 0 else (1 if c < 0 else 0)


def build_arrangement(s: ColoredPointSet, extra_points: Sequence[RationalPoint] = (),
                      validate: bool = True) -> Arrangement:
    """
    构建张成直线的裁剪排列

    Args:
        s: 强一般位置点集（至少 3 个点）
        extra_points: 需要落在包围盒内的额外点（如待定位的观察点）
        validate: 是否先做强一般位置校验

    Returns:
        Arrangement

    Raises:
        TooFewPointsError: 点数少于 3
        NotValidatedError: 点集不满足强一般位置
    """
    n = len(s)
    if n < 3:
        raise TooFewPointsError(f"排列至少需要 3 个点，实际 {n} 个")
    if validate:
        report = validate_strong_general_position(s)
        if not report:
            raise NotValidatedError(report.message, report)

    spanned = spanned_lines(s)
    lines = list(spanned)
    line_pairs = [spanned[line] for line in lines]

    # 顶点：先放点集中的点，再放两两交点
    key_to_id: Dict[Tuple[Fraction, Fraction], int] = {}
    vertex_points: List[RationalPoint] = []
    vertex_lines: List[set] = []
    vertex_site: List[Optional[int]] = []
    for i, p in enumerate(s.points):
        key_to_id[(p.x, p.y)] = i
        vertex_points.append(p)
        vertex_lines.append(set())
        vertex_site.append(i)

    for u in range(len(lines)):
        a1, b1, c1 = lines[u].a, lines[u].b, lines[u].c
        for v in range(u + 1, len(lines)):
            a2, b2, c2 = lines[v].a, lines[v].b, lines[v].c
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            key = (Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))
            vid = key_to_id.get(key)
            if vid is None:
                vid = len(vertex_points)
                key_to_id[key] = vid
                vertex_points.append(RationalPoint(*key))
                vertex_lines.append(set())
                vertex_site.append(None)
            vertex_lines[vid].add(u)
            vertex_lines[vid].add(v)

    box = _choose_box(list(vertex_points) + list(extra_points), lines)
    inner_count = len(vertex_points)

    # 盒边上的顶点：每条直线两个穿出点 + 四个角
    on_line: List[List[int]] = [[] for _ in lines]
    for vid, ls in enumerate(vertex_lines):
        for k in ls:
            on_line[k].append(vid)
    on_side: Dict[str, List[int]] = {"bottom": [], "right": [], "top": [], "left": []}
    for k, line in enumerate(lines):
        crossings = _box_crossings(line, box)
        if len(crossings) != 2:
            raise DegenerateInputError(f"直线 {line} 与包围盒的交点数为 {len(crossings)}")
        for side, p in crossings:
            vid = len(vertex_points)
            vertex_points.append(p)
            vertex_lines.append({k})
            vertex_site.append(None)
            on_line[k].append(vid)
            on_side[side].append(vid)
    corner_ids = []
    for c in box.corners:
        corner_ids.append(len(vertex_points))
        vertex_points.append(c)
        vertex_lines.append(set())
        vertex_site.append(None)
    bl, br, tr, tl = corner_ids
    on_side["bottom"] += [bl, br]
    on_side["right"] += [br, tr]
    on_side["top"] += [tr, tl]
    on_side["left"] += [tl, bl]

    vertices = [
        Vertex(vid, vertex_points[vid], frozenset(vertex_lines[vid]), vertex_site[vid], vid >= inner_count)
        for vid in range(len(vertex_points))
    ]

    # 边：沿每条直线排序相邻顶点，盒边同理
    edges: List[Edge] = []

    def add_edge(u: int, v: int, line: Optional[int]) -> None:
        kind = _classify(s.points, line_pairs, line, vertex_points[u], vertex_points[v])
        edges.append(Edge(len(edges), u, v, line, kind))

    for k, line in enumerate(lines):
        direction = line.direction
        chain = sorted(on_line[k], key=lambda vid: dot(vertex_points[vid], direction))
        for u, v in zip(chain, chain[1:]):
            add_edge(u, v, k)
    for side, ids in on_side.items():
        if side in ("bottom", "top"):
            chain = sorted(ids, key=lambda vid: vertex_points[vid].x)
        else:
            chain = sorted(ids, key=lambda vid: vertex_points[vid].y)
        for u, v in zip(chain, chain[1:]):
            add_edge(u, v, None)

    # 半边：每个顶点的出边按逆时针排序
    outgoing: List[List[int]] = [[] for _ in vertices]
    for e in edges:
        outgoing[e.u].append(2 * e.id)
        outgoing[e.v].append(2 * e.id + 1)

    def direction_of(h: int) -> RationalPoint:
        e = edges[h >> 1]
        a, b = (e.u, e.v) if h % 2 == 0 else (e.v, e.u)
        return vertex_points[b] - vertex_points[a]

    position: Dict[int, int] = {}
    for vid, hs in enumerate(outgoing):
        hs.sort(key=cmp_to_key(lambda h1, h2: _ccw_cmp(direction_of(h1), direction_of(h2))))
        for idx, h in enumerate(hs):
            position[h] = idx

    half_count = 2 * len(edges)
    next_half = [0] * half_count
    for h in range(half_count):
        e = edges[h >> 1]
        dest = e.v if h % 2 == 0 else e.u
        ring = outgoing[dest]
        # twin 在逆时针序中的前一条出边
        next_half[h] = ring[position[h ^ 1] - 1]

    half_face = [-1] * half_count
    faces: List[Face] = []
    for start in range(half_count):
        if half_face[start] != -1:
            continue
        fid = len(faces)
        cycle = []
        h = start
        while half_face[h] == -1:
            half_face[h] = fid
            cycle.append(h)
            h = next_half[h]
        verts = [edges[h >> 1].u if h % 2 == 0 else edges[h >> 1].v for h in cycle]
        area = Fraction(0)
        for idx, vid in enumerate(verts):
            p = vertex_points[vid]
            q = vertex_points[verts[(idx + 1) % len(verts)]]
            area += p.x * q.y - p.y * q.x
        faces.append(Face(fid, cycle, verts, area / 2))

    outer = [f.id for f in faces if f.area < 0]
    if len(outer) != 1:
        raise DegenerateInputError(f"裁剪图应恰有一个外面，实际 {len(outer)} 个")
    outer_face = outer[0]
    for f in faces:
        if f.id == outer_face:
            f.outer = True
            continue
        distinct = list(dict.fromkeys(f.vertices))
        sx = sum((vertex_points[v].x for v in distinct), Fraction(0))
        sy = sum((vertex_points[v].y for v in distinct), Fraction(0))
        f.representative = RationalPoint(sx / len(distinct), sy / len(distinct))

    arr = Arrangement(
        points=s,
        lines=lines,
        line_pairs=line_pairs,
        vertices=vertices,
        edges=edges,
        faces=faces,
        box=box,
        next_half=next_half,
        half_face=half_face,
        outer_face=outer_face,
    )
    logger.info("排列构建完成: n=%d 直线=%d V=%d E=%d F=%d", n, len(lines), arr.V, arr.E, arr.F)
    return arr

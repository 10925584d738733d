"""
精确几何核心
有理数坐标上的点、直线与谓词，全部使用 Fraction，不含任何浮点运算
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple, Union

from .exceptions import DegenerateInputError, IdenticalPointsError


Rational = Fraction
Number = Union[int, Fraction, str]


@dataclass(frozen=True)
class RationalPoint:
    """精确有理坐标点"""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x - other.x, self.y - other.y)

    def scale(self, factor: Number) -> "RationalPoint":
        factor = Fraction(factor)
        return RationalPoint(self.x * factor, self.y * factor)

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


class Orientation(Enum):
    """三点定向"""
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(u: RationalPoint, v: RationalPoint) -> Fraction:
    """二维叉积 u × v"""
    return u.x * v.y - u.y * v.x


def dot(u: RationalPoint, v: RationalPoint) -> Fraction:
    """二维点积"""
    return u.x * v.x + u.y * v.y


def squared_distance(p: RationalPoint, q: RationalPoint) -> Fraction:
    d = q - p
    return dot(d, d)


def orientation(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> Orientation:
    """
    三点定向

    Args:
        p, q, r: 三个有理点

    Returns:
        (q-p, r-p) 行列式的符号
    """
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if det > 0:
        return Orientation.COUNTERCLOCKWISE
    if det < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


@dataclass(frozen=True)
class Line:
    """
    直线 a*x + b*y = c

    系数为互素整数，(a, b) 中第一个非零者为正，相同直线逐位相同
    """
    a: int
    b: int
    c: int

    @classmethod
    def from_coefficients(cls, a: Number, b: Number, c: Number) -> "Line":
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise DegenerateInputError("直线系数 (a, b) 不能同时为零")
        den = lcm_of(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = gcd(gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    def evaluate(self, p: RationalPoint) -> Fraction:
        """a*x + b*y - c"""
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: RationalPoint) -> int:
        """点相对直线的符号（-1 / 0 / 1）"""
        value = self.evaluate(p)
        return (value > 0) - (value < 0)

    def contains(self, p: RationalPoint) -> bool:
        return self.evaluate(p) == 0

    @property
    def direction(self) -> RationalPoint:
        """沿直线的方向向量 (b, -a)"""
        return RationalPoint(self.b, -self.a)

    def squared_distance_to(self, p: RationalPoint) -> Fraction:
        value = self.evaluate(p)
        return value * value / (self.a * self.a + self.b * self.b)

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y = {self.c}"


class LineRelation(Enum):
    """两条直线不相交时的标记"""
    PARALLEL = "parallel"
    IDENTICAL = "identical"


def line_through(p: RationalPoint, q: RationalPoint) -> Line:
    """
    过两点的规范化直线

    Raises:
        IdenticalPointsError: p 与 q 重合
    """
    if p == q:
        raise IdenticalPointsError(f"两点重合: {p}")
    a = q.y - p.y
    b = p.x - q.x
    return Line.from_coefficients(a, b, a * p.x + b * p.y)


def line_intersection(l1: Line, l2: Line) -> Union[RationalPoint, LineRelation]:
    """
    两直线的精确交点

    Returns:
        交点；平行时返回 LineRelation.PARALLEL，重合时返回 LineRelation.IDENTICAL
    """
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return LineRelation.IDENTICAL if l1 == l2 else LineRelation.PARALLEL
    x = Fraction(l1.c * l2.b - l2.c * l1.b, det)
    y = Fraction(l1.a * l2.c - l2.a * l1.c, det)
    return RationalPoint(x, y)


def circle_point(t: Number, radius: Number) -> RationalPoint:
    """
    半角正切参数化的圆上有理点

    Args:
        t: 参数，对应角度 2*atan(t)
        radius: 半径（> 0）

    Returns:
        radius * ((1-t²)/(1+t²), 2t/(1+t²))
    """
    t, radius = Fraction(t), Fraction(radius)
    if radius <= 0:
        raise DegenerateInputError(f"半径必须为正: {radius}")
    denom = 1 + t * t
    return RationalPoint(radius * (1 - t * t) / denom, radius * 2 * t / denom)


def convex_hull_indices(points: Sequence[RationalPoint]) -> List[int]:
    """
    凸包顶点下标（顺时针，从字典序最小的点开始）

    Raises:
        DegenerateInputError: 点数少于 3
    """
    if len(points) < 3:
        raise DegenerateInputError(f"凸包至少需要 3 个点，实际 {len(points)} 个")
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))

    def half(indices):
        chain: List[int] = []
        for i in indices:
            while len(chain) >= 2 and orientation(
                points[chain[-2]], points[chain[-1]], points[i]
            ) != Orientation.CLOCKWISE:
                chain.pop()
            chain.append(i)
        return chain

    # 单调链：两条链都只保留右转，得到顺时针序
    upper = half(order)
    lower = half(reversed(order))
    return upper[:-1] + lower[:-1]


def strictly_inside_convex(polygon: Sequence[RationalPoint], p: RationalPoint) -> bool:
    """点是否严格位于凸多边形内部（顶点顺、逆时针均可）"""
    if len(polygon) < 3:
        return False
    expected = None
    for i, u in enumerate(polygon):
        v = polygon[(i + 1) % len(polygon)]
        o = orientation(u, v, p)
        if o == Orientation.COLLINEAR:
            if u == v:
                continue
            return False
        if expected is None:
            expected = o
        elif o != expected:
            return False
    return expected is not None


def on_segment(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> bool:
    """r 是否在闭线段 pq 上"""
    if orientation(p, q, r) != Orientation.COLLINEAR:
        return False
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def segments_intersect(p1: RationalPoint, p2: RationalPoint,
                       q1: RationalPoint, q2: RationalPoint) -> bool:
    """两条闭线段是否有公共点"""
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)
    if o1 != o2 and o3 != o4 and Orientation.COLLINEAR not in (o1, o2, o3, o4):
        return True
    return (on_segment(p1, p2, q1) or on_segment(p1, p2, q2)
            or on_segment(q1, q2, p1) or on_segment(q1, q2, p2))


def ray_hits_segment(apex: RationalPoint, direction: RationalPoint,
                     p: RationalPoint, q: RationalPoint) -> bool:
    """
    闭射线 apex + t*direction (t >= 0) 是否与闭线段 pq 相交

    射线与线段共线的情形返回 True 当且仅当两者有公共点
    """
    e = q - p
    denom = cross(direction, e)
    w = p - apex
    if denom == 0:
        if cross(w, direction) != 0:
            return False
        # 共线：线段某端点在射线上，或 apex 在线段上
        return (dot(p - apex, direction) >= 0 or dot(q - apex, direction) >= 0)
    t = cross(w, e) / denom
    s = cross(w, direction) / denom
    return t >= 0 and 0 <= s <= 1


# ----------------------------------------------------------------------
# 齐次整数表示，供 O(L²) 的共点扫描使用
# ----------------------------------------------------------------------

Triple = Tuple[int, int, int]


def lcm_of(*values: int) -> int:
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result


def reduce_triple(triple: Triple) -> Triple:
    a, b, c = triple
    g = gcd(gcd(a, b), c)
    if g == 0:
        return (0, 0, 0)
    a, b, c = a // g, b // g, c // g
    # 第一个非零分量为正
    lead = a or b or c
    if lead < 0:
        a, b, c = -a, -b, -c
    return (a, b, c)


def homogeneous(p: RationalPoint) -> Triple:
    """点的齐次整数坐标 (X, Y, W)，W > 0"""
    w = lcm_of(p.x.denominator, p.y.denominator)
    return (int(p.x * w), int(p.y * w), w)


def homogeneous_cross(u: Triple, v: Triple) -> Triple:
    """齐次叉积：两点得直线，两线得交点；结果已约化"""
    return reduce_triple((
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ))

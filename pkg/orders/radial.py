"""
径向序
绕观察点的精确顺时针排序，以及由此得到的星形多边形
"""
import logging
from functools import cmp_to_key
from math import gcd
from typing import List, Sequence, Tuple

from geometry.exceptions import NotInteriorPointError, NotObservationPointError
from geometry.kernel import (
    Orientation,
    RationalPoint,
    lcm_of,
    on_segment,
    orientation,
    segments_intersect,
    strictly_inside_convex,
)
from geometry.pointset import ColoredPointSet, convex_hull

from .circular import CircularOrder


logger = logging.getLogger(__name__)

IntVector = Tuple[int, int]


def _integer_vectors(points: Sequence[RationalPoint], obs: RationalPoint) -> List[IntVector]:
    # 同乘公分母，之后的比较全部是整数运算
    diffs = [p - obs for p in points]
    den = lcm_of(*(d.x.denominator for d in diffs), *(d.y.denominator for d in diffs))
    return [(int(d.x * den), int(d.y * den)) for d in diffs]


def _half(v: IntVector) -> int:
    # 从 (0,1) 方向开始顺时针：右半平面（含正上方）为 0，其余为 1
    x, y = v
    return 0 if x > 0 or (x == 0 and y > 0) else 1


def _clockwise_cmp(u: IntVector, v: IntVector) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c < 0 else (1 if c > 0 else 0)


def _check_observation(vectors: Sequence[IntVector], obs: RationalPoint) -> None:
    directions = {}
    for i, (x, y) in enumerate(vectors):
        if x == 0 and y == 0:
            raise NotObservationPointError(f"观察点 {obs} 与第 {i} 个点重合")
        g = gcd(x, y)
        x, y = x // g, y // g
        if x < 0 or (x == 0 and y < 0):
            x, y = -x, -y
        if (x, y) in directions:
            raise NotObservationPointError(
                f"观察点 {obs} 与第 {directions[(x, y)]}、{i} 个点共线"
            )
        directions[(x, y)] = i


def clockwise_indices(points: Sequence[RationalPoint], obs: RationalPoint,
                      check: bool = True) -> List[int]:
    """
    点下标按绕 obs 的顺时针方向排序（从正上方开始，未规范化）

    Args:
        points: 点列表
        obs: 观察点
        check: 是否校验 obs 为观察点

    Raises:
        NotObservationPointError: obs 与某点重合或与两点共线
    """
    vectors = _integer_vectors(points, obs)
    if check:
        _check_observation(vectors, obs)
    return sorted(range(len(points)), key=cmp_to_key(lambda i, j: _clockwise_cmp(vectors[i], vectors[j])))


def radial_order(s: ColoredPointSet, obs: RationalPoint, check: bool = True) -> CircularOrder:
    """
    点集绕观察点的径向序

    Args:
        s: 点集
        obs: 观察点（不在点集中，且不与任意两点共线）
        check: 是否校验观察点条件；调用方已保证时可关闭

    Returns:
        规范化的 CircularOrder

    Raises:
        NotObservationPointError: 观察点不合法
    """
    return CircularOrder.from_sequence(clockwise_indices(s.points, obs, check))


def is_simple_polygon(vertices: Sequence[RationalPoint]) -> bool:
    """多边形是否简单：不相邻的边不相交，相邻边只共享端点"""
    n = len(vertices)
    if n < 3:
        return False
    edges = [(vertices[k], vertices[(k + 1) % n]) for k in range(n)]
    for k in range(n):
        a, b = edges[k]
        c = edges[(k + 1) % n][1]
        if orientation(a, b, c) == Orientation.COLLINEAR and (on_segment(a, b, c) or on_segment(b, c, a)):
            return False
    for k in range(n):
        for l in range(k + 2, n):
            if k == 0 and l == n - 1:
                continue
            if segments_intersect(*edges[k], *edges[l]):
                return False
    return True


def star_polygonization(s: ColoredPointSet, obs: RationalPoint) -> List[int]:
    """
    以凸包内部观察点为核的星形多边形

    Args:
        s: 点集（至少 3 个点）
        obs: 严格位于凸包内部的观察点

    Returns:
        多边形顶点下标（顺时针，规范旋转）

    Raises:
        NotInteriorPointError: obs 不在凸包内部
        NotObservationPointError: obs 与两点共线
    """
    hull = [s[i] for i in convex_hull(s)]
    if not strictly_inside_convex(hull, obs):
        raise NotInteriorPointError(f"观察点 {obs} 不在凸包内部")
    order = radial_order(s, obs)
    logger.debug("星形多边形: %s", order)
    return list(order.sequence)

"""
绕点行走
以点集中一点为圆心、足够小的半径走一圈，只穿过以该点为起点的半线
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import isqrt
from typing import List, Optional, Sequence, Tuple

from geometry.exceptions import DegenerateInputError, MismatchedIndexSetsError
from geometry.kernel import RationalPoint, circle_point, cross, squared_distance
from geometry.pointset import ColoredPointSet, spanned_lines
from orders.circular import (
    CircularOrder,
    ColorWord,
    adjacent_transposition_diff,
    apply_adjacent_swap,
    color_word,
)
from orders.radial import radial_order


logger = logging.getLogger(__name__)

MAX_REFINEMENT = 40


@dataclass(frozen=True)
class WalkEvent:
    """一次穿越：以 center 为起点、背离 partner 的半线"""
    index: int
    partner: int
    direction: RationalPoint


@dataclass
class WalkTrace:
    """
    行走记录

    Attributes:
        center: 圆心点下标
        radius: 半径
        events: 顺时针排列的穿越事件（|S|-1 个）
        orders_seen: 第 k 项为事件 k 与事件 k+1 之间的径向序
        words_seen: 对应的颜色词（未着色时为空）
        observation_points: 各区间取的观察点（在圆上）
    """
    center: int
    radius: Fraction
    events: List[WalkEvent]
    orders_seen: List[CircularOrder]
    words_seen: List[ColorWord] = field(default_factory=list)
    observation_points: List[RationalPoint] = field(default_factory=list)

    @property
    def distinct_color_words(self) -> int:
        return len(set(self.words_seen))

    def crossing_partner(self, k: int) -> int:
        """从区间 k 走到区间 k+1 时穿过的半线的另一点"""
        return self.events[(k + 1) % len(self.events)].partner

    def consecutive_swaps_ok(self) -> bool:
        """相邻区间的径向序恰好相差 Swap(center, partner)"""
        m = len(self.orders_seen)
        for k in range(m):
            diff = adjacent_transposition_diff(self.orders_seen[k], self.orders_seen[(k + 1) % m])
            if not diff.is_swap_of(self.center, self.crossing_partner(k)):
                return False
        return True

    def composes_to_identity(self) -> bool:
        """依次施加一圈的对换后回到起始径向序"""
        order = self.orders_seen[0]
        try:
            for k in range(len(self.events)):
                order = apply_adjacent_swap(order, self.center, self.crossing_partner(k))
        except (DegenerateInputError, MismatchedIndexSetsError):
            return False
        return order == self.orders_seen[0]


def _cw_cmp(u: RationalPoint, v: RationalPoint) -> int:
    hu = 0 if u.x > 0 or (u.x == 0 and u.y > 0) else 1
    hv = 0 if v.x > 0 or (v.x == 0 and v.y > 0) else 1
    if hu != hv:
        return hu - hv
    c = cross(u, v)
    return -1 if c < 0 else (1 if c > 0 else 0)


def _strictly_between(ua: RationalPoint, ub: RationalPoint, d: RationalPoint) -> bool:
    # d 严格位于从 ua 顺时针转到 ub 的开扇形内
    if cross(ua, ub) < 0:
        return cross(ua, d) < 0 and cross(d, ub) < 0
    return not (cross(ub, d) <= 0 and cross(d, ua) <= 0)


def _parallel_to_any(d: RationalPoint, directions: Sequence[RationalPoint]) -> bool:
    return any(cross(d, u) == 0 for u in directions)


def walk_radius(s: ColoredPointSet, center: int) -> Fraction:
    """
    行走半径 r：r² 小于到其余点距离平方的 1/4，且小于到每条不过圆心的张成直线的距离平方

    r 取 1/2^k 形式
    """
    c = s[center]
    bound: Optional[Fraction] = None
    for k, p in enumerate(s.points):
        if k != center:
            value = squared_distance(c, p) / 4
            bound = value if bound is None else min(bound, value)
    for line, pair in spanned_lines(s).items():
        if center in pair:
            continue
        value = line.squared_distance_to(c)
        bound = value if bound is None else min(bound, value)
    r = Fraction(1)
    while r * r >= bound:
        r /= 2
    return r


def _sqrt_approx(value: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(isqrt(int(value * scale * scale)), scale)


def _tangent_parameter(w: RationalPoint, bits: int) -> Fraction:
    # 方向 w 对应半角正切 t = wy / (wx + |w|) = (|w| - wx) / wy
    norm = _sqrt_approx(w.x * w.x + w.y * w.y, bits)
    if w.x > 0:
        return w.y / (w.x + norm)
    return (norm - w.x) / w.y


def _interval_direction(ua: RationalPoint, ub: RationalPoint,
                        forbidden: Sequence[RationalPoint]) -> RationalPoint:
    if cross(ua, ub) < 0:
        w = ua + ub
    else:
        w = RationalPoint(ua.y, -ua.x)
    # 避开与某点共线的方向以及 t 无定义的正左方
    tilt = Fraction(1, 2)
    base = w
    while _parallel_to_any(w, forbidden) or (w.y == 0 and w.x < 0) or not _strictly_between(ua, ub, w):
        w = base + RationalPoint(base.y, -base.x).scale(tilt)
        tilt /= 2
        if tilt < Fraction(1, 1 << 200):
            raise DegenerateInputError("无法在事件之间找到观察方向")
    return w


def walk_around(s: ColoredPointSet, center: int) -> WalkTrace:
    """
    绕 center 顺时针走一圈

    Args:
        s: 强一般位置点集
        center: 圆心点下标

    Returns:
        WalkTrace，事件数为 |S|-1

    Raises:
        DegenerateInputError: center 越界或点数不足
    """
    if not 0 <= center < len(s):
        raise DegenerateInputError(f"圆心下标 {center} 越界")
    if len(s) < 3:
        raise DegenerateInputError("行走至少需要 3 个点")
    c = s[center]
    radius = walk_radius(s, center)

    partners = [k for k in range(len(s)) if k != center]
    rays = {k: c - s[k] for k in partners}
    ordered = sorted(partners, key=cmp_to_key(lambda a, b: _cw_cmp(rays[a], rays[b])))
    events = [WalkEvent(i, k, rays[k]) for i, k in enumerate(ordered)]
    forbidden = list(rays.values())

    orders: List[CircularOrder] = []
    points: List[RationalPoint] = []
    for i, event in enumerate(events):
        ua = event.direction
        ub = events[(i + 1) % len(events)].direction
        w = _interval_direction(ua, ub, forbidden)
        for bits in range(16, 16 * MAX_REFINEMENT, 16):
            offset = circle_point(_tangent_parameter(w, bits), radius)
            if _strictly_between(ua, ub, offset) and not _parallel_to_any(offset, forbidden):
                break
        else:
            raise DegenerateInputError(f"区间 {i} 的观察点精化失败")
        obs = c + offset
        points.append(obs)
        orders.append(radial_order(s, obs))

    words = [color_word(o, s) for o in orders] if s.is_colored else []
    trace = WalkTrace(center, radius, events, orders, words, points)
    logger.info("绕点 %d 行走: r=%s 事件=%d 不同颜色词=%d", center, radius, len(events),
                trace.distinct_color_words)
    return trace

"""
四图案构造
三个半径 1/4 的圆盘 B1、B2、B3，B1/B2 上的射线点替换为 1~4 对红蓝图案，
B3 内由双色载体直线切出的每个格子取一个指定观察点 q，
所有几何条件都在输出坐标上精确验证，失败时把参数减半重试
"""
import logging
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from geometry.exceptions import (
    DegenerateInputError,
    NotObservationPointError,
    ParameterDegenerateError,
    RetryExhaustedError,
)
from geometry.kernel import (
    Line,
    RationalPoint,
    circle_point,
    dot,
    line_through,
    squared_distance,
)
from geometry.pointset import Color, ColoredPointSet, intersection_point, validate_strong_general_position
from orders.circular import color_word
from orders.radial import radial_order

from .base import BaseGenerator, GeneratedSet, block_in_order, is_contiguous


logger = logging.getLogger(__name__)

P1 = RationalPoint(0, 0)
P2 = RationalPoint(1, 0)
P3 = RationalPoint(Fraction(1, 2), Fraction(433, 500))
DISK_RADIUS = Fraction(1, 4)
DISK_RADIUS_SQ = DISK_RADIUS * DISK_RADIUS
# p1->p3、p2->p3 方向的半角正切近似值（tan 30°、tan 60°）
T1_CENTER = Fraction(577, 1000)
T2_CENTER = Fraction(433, 250)

CLUSTER_CENTER = RationalPoint(Fraction(1, 2), 200)
CLUSTER_RADIUS = Fraction(1, 2)
CLUSTER_T = Fraction(-1)

# 载体颜色 -> 图案中每种颜色的点数
PATTERN_SIZES = {"blue": 1, "red": 2, "yellow": 3, "green": 4}
# 抖动量的分母
OFFSET_SCALE = 10 ** 6


@dataclass
class FourPatternParams:
    """构造参数"""
    m: int
    r: int
    epsilon: Fraction
    alpha_t: Fraction
    delta: Fraction
    cluster_spacing: Fraction
    retry_budget: int = 64

    def halved(self) -> "FourPatternParams":
        return FourPatternParams(self.m, self.r, self.epsilon / 2, self.alpha_t / 2,
                                 self.delta / 2, self.cluster_spacing / 2, self.retry_budget)

    def smallest(self) -> Fraction:
        return min(self.epsilon, self.alpha_t, self.delta, self.cluster_spacing)

    def as_metadata(self) -> Dict[str, object]:
        return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class Carrier:
    """载体点：圆心、半径与半角正切参数"""
    color: str
    center: RationalPoint
    radius: Fraction
    t: Fraction

    @property
    def point(self) -> RationalPoint:
        return self.center + circle_point(self.t, self.radius)


@dataclass
class ConditionReport:
    """条件 (1)(2)(3) 的检验结果"""
    ok: bool
    message: str = ""


@dataclass
class FourPatternReport:
    """输出点集的全部验证项"""
    conditions: ConditionReport
    designated: int = 0
    consecutive: bool = False
    cluster: bool = False
    separated: bool = False
    distinct_words: int = 0
    strong_general_position: bool = False
    position_message: str = ""

    @property
    def ok(self) -> bool:
        return (self.conditions.ok and self.consecutive and self.cluster and self.separated
                and self.distinct_words == self.designated and self.strong_general_position)


def split_size(n: int) -> Tuple[int, int]:
    """
    n = 10m + r，10 <= r <= 19

    Raises:
        DegenerateInputError: n < 20 或 n 为奇数
    """
    if n < 20 or n % 2 != 0:
        raise DegenerateInputError(f"lower4 要求 n 为不小于 20 的偶数，实际 n={n}")
    m = (n - 10) // 10
    return m, n - 10 * m


def designated_cell_count(m: int) -> int:
    """B3 内由 m² 条 L 直线与 m² 条 L' 直线切出的格子数"""
    return (m * m + 1) ** 2


def build_carriers(params: FourPatternParams, jitters: Sequence[Fraction]) -> Dict[str, List[Carrier]]:
    """
    四色载体点：B1 边界蓝、C1 红、B2 边界黄、C2 绿，各 m 个

    红、绿点的参数加上 jitters 抖动，避免所有 L 直线共点于 p1、p2
    """
    m = params.m
    carriers: Dict[str, List[Carrier]] = {c: [] for c in PATTERN_SIZES}
    for k in range(1, m + 1):
        offset = params.alpha_t * (Fraction(2 * k, m + 1) - 1)
        t1, t2 = T1_CENTER + offset, T2_CENTER + offset
        carriers["blue"].append(Carrier("blue", P1, DISK_RADIUS, t1))
        carriers["red"].append(Carrier("red", P1, params.epsilon, t1 + params.alpha_t * jitters[k - 1]))
        carriers["yellow"].append(Carrier("yellow", P2, DISK_RADIUS, t2))
        carriers["green"].append(Carrier("green", P2, params.epsilon, t2 + params.alpha_t * jitters[m + k - 1]))
    return carriers


def carrier_lines(carriers: Dict[str, List[Carrier]]) -> Tuple[List[Line], List[Line]]:
    """L: 红-蓝载体直线；L': 黄-绿载体直线"""
    family = [line_through(r.point, b.point) for r, b in product(carriers["red"], carriers["blue"])]
    other = [line_through(y.point, g.point) for y, g in product(carriers["yellow"], carriers["green"])]
    return family, other


def _meets_disk_interior(line: Line) -> bool:
    return line.squared_distance_to(P3) < DISK_RADIUS_SQ


def check_conditions(carriers: Dict[str, List[Carrier]]) -> ConditionReport:
    """
    在载体点集上精确检验：
    (1) L ∪ L' 的每条直线穿过 B3 内部，且只有它们穿过；
    (2) L 内、L' 内两两不在 B3 内部相交；
    (3) L 与 L' 的每对直线交于 B3 内（含边界）
    """
    family, other = carrier_lines(carriers)
    chosen = set(family) | set(other)
    for line in chosen:
        if not _meets_disk_interior(line):
            return ConditionReport(False, f"(1) 直线 {line} 未穿过 B3 内部")
    points = [c.point for group in carriers.values() for c in group]
    for p, q in combinations(points, 2):
        line = line_through(p, q)
        if line not in chosen and _meets_disk_interior(line):
            return ConditionReport(False, f"(1) 非载体直线 {line} 穿过 B3 内部")
    for lines in (family, other):
        for l1, l2 in combinations(lines, 2):
            x = intersection_point(l1, l2)
            if x is not None and squared_distance(x, P3) < DISK_RADIUS_SQ:
                return ConditionReport(False, f"(2) 同族直线交于 B3 内部 {x}")
    for l1, l2 in product(family, other):
        x = intersection_point(l1, l2)
        if x is None or squared_distance(x, P3) > DISK_RADIUS_SQ:
            return ConditionReport(False, f"(3) {l1} 与 {l2} 的交点不在 B3 内")
    return ConditionReport(True, "ok")


def _oriented(lines: List[Line], transversal: RationalPoint) -> List[Tuple[Fraction, Fraction, Fraction]]:
    # 法向与横截方向同向，按与过 p3 的横截线的交点位置排序
    result = []
    for line in lines:
        a, b, c = Fraction(line.a), Fraction(line.b), Fraction(line.c)
        if a * transversal.x + b * transversal.y < 0:
            a, b, c = -a, -b, -c
        position = -(a * P3.x + b * P3.y - c) / (a * transversal.x + b * transversal.y)
        result.append((position, a, b, c))
    result.sort()
    return [(a, b, c) for _, a, b, c in result]


def _evaluate(coeffs, p: RationalPoint) -> Fraction:
    a, b, c = coeffs
    return a * p.x + b * p.y - c


def _corner(l1, l2) -> Optional[RationalPoint]:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return RationalPoint((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def _unit_normal(coeffs) -> RationalPoint:
    a, b, _ = coeffs
    scale = abs(a) + abs(b)
    return RationalPoint(a / scale, b / scale)


def designated_points(carriers: Dict[str, List[Carrier]], s: ColoredPointSet,
                      max_steps: int = 64) -> Optional[List[RationalPoint]]:
    """
    B3 内每个格子取一个内点 q：格子角点的平均，再沿指向格子内部的法向移动 h，
    h 从 0 开始逐次取 1/4、1/8……直到 q 严格落在格子与 B3 内且是观察点

    Returns:
        (m²+1)² 个点；某个格子找不到时返回 None
    """
    family, other = carrier_lines(carriers)
    f_lines = _oriented(family, RationalPoint(-P3.y, P3.x - P1.x))
    o_lines = _oriented(other, RationalPoint(-P3.y, P3.x - P2.x))
    result = []
    for alpha, beta in product(range(len(f_lines) + 1), range(len(o_lines) + 1)):
        bounds_f = [(f_lines[alpha - 1], 1)] if alpha > 0 else []
        bounds_f += [(f_lines[alpha], -1)] if alpha < len(f_lines) else []
        bounds_o = [(o_lines[beta - 1], 1)] if beta > 0 else []
        bounds_o += [(o_lines[beta], -1)] if beta < len(o_lines) else []
        corners = [c for (lf, _), (lo, _) in product(bounds_f, bounds_o) if (c := _corner(lf, lo)) is not None]
        if not corners:
            return None
        base = RationalPoint(sum((c.x for c in corners), Fraction(0)) / len(corners),
                             sum((c.y for c in corners), Fraction(0)) / len(corners))
        direction = RationalPoint(0, 0)
        for coeffs, sign in bounds_f + bounds_o:
            direction = direction + _unit_normal(coeffs).scale(sign)

        found = None
        h = Fraction(0)
        for _ in range(max_steps):
            q = base + direction.scale(h)
            h = Fraction(1, 4) if h == 0 else h / 2
            if squared_distance(q, P3) >= DISK_RADIUS_SQ:
                continue
            if not all((_evaluate(l, q) > 0) == (k < alpha) and _evaluate(l, q) != 0 for k, l in enumerate(f_lines)):
                continue
            if not all((_evaluate(l, q) > 0) == (k < beta) and _evaluate(l, q) != 0 for k, l in enumerate(o_lines)):
                continue
            try:
                radial_order(s, q)
            except NotObservationPointError:
                continue
            found = q
            break
        if found is None:
            return None
        result.append(found)
    return result


def progression_offsets(rng: random.Random, count: int) -> List[Fraction]:
    """
    等差参数的抖动量，首项为 0，其余取自 (0, 1/2)

    同一圆上参数和相等的弦共点
    """
    tail = [Fraction(rng.randint(1, OFFSET_SCALE - 1), 2 * OFFSET_SCALE) for _ in range(count - 1)]
    return [Fraction(0)] + tail


def _pattern_points(carrier: Carrier, size: int, delta: Fraction, offsets: Sequence[Fraction]):
    for j in range(2 * size):
        color = Color.RED if j < size else Color.BLUE
        yield carrier.center + circle_point(carrier.t - (j + offsets[j]) * delta, carrier.radius), color


def assemble(carriers: Dict[str, List[Carrier]], params: FourPatternParams, rng: random.Random):
    """
    图案替换与远处簇

    图案与簇的参数在等差数列上加 rng 抖动，保持顺序不变

    Returns:
        (点集, 图案分组, 簇下标, B1/C1 侧下标, B2/C2 侧下标)
    """
    points: List[RationalPoint] = []
    colors: List[Color] = []
    groups: List[List[int]] = []
    left_side: List[int] = []
    right_side: List[int] = []
    for name, size in PATTERN_SIZES.items():
        for carrier in carriers[name]:
            group = []
            offsets = progression_offsets(rng, 2 * size)
            for p, color in _pattern_points(carrier, size, params.delta, offsets):
                group.append(len(points))
                points.append(p)
                colors.append(color)
            groups.append(group)
            (left_side if carrier.center == P1 else right_side).extend(group)
    cluster = []
    offsets = progression_offsets(rng, 2 * params.r)
    for j in range(2 * params.r):
        cluster.append(len(points))
        t = CLUSTER_T + (j + offsets[j]) * params.cluster_spacing
        points.append(CLUSTER_CENTER + circle_point(t, CLUSTER_RADIUS))
        colors.append(Color.RED if j < params.r else Color.BLUE)
    s = ColoredPointSet(tuple(points), tuple(colors), balanced=True)
    return s, groups, cluster, left_side, right_side


def _centroid(points: Sequence[RationalPoint]) -> RationalPoint:
    return RationalPoint(sum((p.x for p in points), Fraction(0)) / len(points),
                         sum((p.y for p in points), Fraction(0)) / len(points))


def separated_at(s: ColoredPointSet, q: RationalPoint, left: Sequence[int], right: Sequence[int]) -> bool:
    """过 q、法向为两侧重心连线的直线把 B1/C1 侧与 B2/C2 侧严格分开"""
    normal = _centroid([s[i] for i in right]) - _centroid([s[i] for i in left])
    return (all(dot(s[i] - q, normal) < 0 for i in left)
            and all(dot(s[i] - q, normal) > 0 for i in right))


def verify(s: ColoredPointSet, carriers: Dict[str, List[Carrier]], designated: Sequence[RationalPoint],
           groups: Sequence[Sequence[int]], cluster: Sequence[int],
           left: Sequence[int], right: Sequence[int], check_position: bool = True) -> FourPatternReport:
    """逐项验证输出点集"""
    report = FourPatternReport(conditions=check_conditions(carriers), designated=len(designated))
    if not report.conditions.ok:
        return report
    words = set()
    consecutive = cluster_ok = separated = True
    for q in designated:
        order = radial_order(s, q)
        consecutive = consecutive and all(is_contiguous(order, g) for g in groups)
        cluster_ok = cluster_ok and block_in_order(order, cluster)
        separated = separated and separated_at(s, q, left, right)
        words.add(color_word(order, s))
    report.consecutive = consecutive
    report.cluster = cluster_ok
    report.separated = separated
    report.distinct_words = len(words)
    if check_position and consecutive and cluster_ok and separated and len(words) == len(designated):
        position = validate_strong_general_position(s)
        report.strong_general_position = position.valid
        report.position_message = position.message
    return report


class FourPatternGenerator(BaseGenerator):
    """ρ̄ 为 Ω(n⁴) 的构造"""

    name = "lower4"
    description = "三圆盘四图案构造，附指定观察点 q"

    def validate_size(self, n: int) -> None:
        m, _ = split_size(n)
        if m > 3:
            raise DegenerateInputError(f"lower4 仅支持 m <= 3（n < 50），实际 n={n}")

    def expected_points(self, n: int) -> int:
        return 2 * n

    def initial_params(self, n: int) -> FourPatternParams:
        m, r = split_size(n)
        return FourPatternParams(
            m=m,
            r=r,
            epsilon=self.settings.rational("four_pattern_epsilon"),
            alpha_t=self.settings.rational("four_pattern_alpha_t"),
            delta=self.settings.rational("four_pattern_delta"),
            cluster_spacing=Fraction(1, 1000),
            retry_budget=self.settings.retry_budget,
        )

    def generate(self, n: int, seed: int = 0, **kwargs) -> GeneratedSet:
        """
        生成 n 红 n 蓝点集与 (m²+1)² 个指定观察点

        Args:
            n: 10m + r，10 <= r <= 19，偶数
            seed: 随机种子（决定红、绿载体点以及图案、簇参数的抖动）

        Raises:
            RetryExhaustedError: 超过重试预算
            ParameterDegenerateError: 参数减半到精度下限以下
        """
        self.validate_size(n)
        params = self.initial_params(n)
        rng = random.Random(seed)
        jitters = [Fraction(rng.randint(1, 999), 1000) / (params.m + 1) for _ in range(2 * params.m)]
        floor = self.settings.rational("precision_floor")

        for attempt in range(1, params.retry_budget + 1):
            if params.smallest() < floor:
                raise ParameterDegenerateError(f"参数 {params.as_metadata()} 低于精度下限 {floor}")
            carriers = build_carriers(params, jitters)
            conditions = check_conditions(carriers)
            if not conditions.ok:
                logger.info("第 %d 次尝试: %s，参数减半", attempt, conditions.message)
                params = params.halved()
                continue
            s, groups, cluster, left, right = assemble(carriers, params, rng)
            designated = designated_points(carriers, s)
            if designated is None:
                logger.info("第 %d 次尝试: 有格子找不到观察点，参数减半", attempt)
                params = params.halved()
                continue
            report = verify(s, carriers, designated, groups, cluster, left, right)
            if report.ok:
                break
            if report.position_message and not report.strong_general_position:
                # 只有强一般位置不满足：保留参数，重新抽取抖动
                logger.info("第 %d 次尝试: %s，重新抽取抖动", attempt, report.position_message)
                continue
            logger.info("第 %d 次尝试验证失败: %s，参数减半", attempt, report)
            params = params.halved()
        else:
            raise RetryExhaustedError(f"lower4 构造在 {params.retry_budget} 次尝试内未通过验证 (n={n})")

        logger.info("lower4: n=%d m=%d r=%d 指定观察点 %d 个，颜色词两两不同", n, params.m, params.r,
                    len(designated))
        return GeneratedSet(
            points=s,
            designated=designated,
            metadata={
                "kind": self.name, "n": n, "seed": seed, "attempts": attempt,
                "designated_cells": designated_cell_count(params.m), "balanced": True,
                "triangle": [str(P1), str(P2), str(P3)],
                **params.as_metadata(),
            },
            extras={
                "carriers": carriers,
                "groups": groups,
                "cluster": cluster,
                "left": left,
                "right": right,
                "report": report,
            },
        )


def gen_four_pattern(n: int, seed: int = 0, settings=None) -> Tuple[ColoredPointSet, List[RationalPoint]]:
    """四图案点集与指定观察点（见 FourPatternGenerator.generate）"""
    result = FourPatternGenerator(settings).generate(n, seed)
    return result.points, result.designated

"""
红蓝蓝红图案构造
n/2 个近似等分的基点，每个替换为同一圆上顺时针相邻的 R,B,B,R 四点
"""
import logging
import random
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from geometry.exceptions import DegenerateInputError, NotObservationPointError, RetryExhaustedError
from geometry.kernel import RationalPoint, circle_point
from geometry.pointset import Color, ColoredPointSet, validate_strong_general_position
from orders.radial import radial_order

from .base import BaseGenerator, GeneratedSet, block_in_order
from .convex import near_even_parameters


logger = logging.getLogger(__name__)

PATTERN = (Color.RED, Color.BLUE, Color.BLUE, Color.RED)
ORIGIN = RationalPoint(0, 0)


def pattern_set(params: List[Fraction], radii: List[Fraction], delta: Fraction) -> ColoredPointSet:
    """每个基点 (t, ρ) 展开为参数 t, t-δ, t-2δ, t-3δ 上的四点"""
    points, colors = [], []
    for t, rho in zip(params, radii):
        for k, color in enumerate(PATTERN):
            points.append(circle_point(t - k * delta, rho))
            colors.append(color)
    return ColoredPointSet(tuple(points), tuple(colors), balanced=True)


def pattern_groups(half_n: int) -> List[List[int]]:
    return [[4 * i + k for k in range(4)] for i in range(half_n)]


def patterns_consecutive_from_origin(s: ColoredPointSet, half_n: int) -> bool:
    """从原点看，每个图案按 R,B,B,R 顺时针连续出现"""
    try:
        order = radial_order(s, ORIGIN)
    except NotObservationPointError:
        return False
    return all(block_in_order(order, group) for group in pattern_groups(half_n))


class CirclePatternGenerator(BaseGenerator):
    """ρ̄ 至多二次增长的构造"""

    name = "upper2"
    description = "n/2 个 R,B,B,R 图案，颜色径向序 O(n²)"

    def validate_size(self, n: int) -> None:
        if n % 2 != 0 or n < 8:
            raise DegenerateInputError(f"upper2 要求 n 为不小于 8 的偶数，实际 n={n}")

    def expected_points(self, n: int) -> int:
        return 2 * n

    def _base(self, half_n: int, rng: random.Random) -> Tuple[List[Fraction], List[Fraction]]:
        jitter = self.settings.rational("circle_pattern_jitter")
        params = near_even_parameters(half_n, rng, jitter)
        # 每个图案一个圆，半径互不相同
        radii = [1 + jitter * Fraction(i + 1, half_n) for i in range(half_n)]
        return params, radii

    def generate(self, n: int, seed: int = 0, stabilize: bool = True, **kwargs) -> GeneratedSet:
        """
        生成 n 红 n 蓝的图案点集

        Args:
            n: 偶数，>= 8
            seed: 随机种子
            stabilize: 是否把 δ 减半直到相邻两次普查的 rho_colored 相同

        Raises:
            RetryExhaustedError: 超过重试预算
        """
        from arrangement.builder import check_budget
        from enumeration.census import census

        self.validate_size(n)
        half_n = n // 2
        rng = random.Random(seed)
        delta = self.settings.rational("circle_pattern_delta")
        budget = self.settings.retry_budget

        s: Optional[ColoredPointSet] = None
        params: List[Fraction] = []
        radii: List[Fraction] = []
        attempts = 0
        while s is None:
            attempts += 1
            if attempts > budget:
                raise RetryExhaustedError(f"upper2 图案点集生成失败 (n={n}, seed={seed})")
            params, radii = self._base(half_n, rng)
            candidate = pattern_set(params, radii, delta)
            if validate_strong_general_position(candidate) and patterns_consecutive_from_origin(candidate, half_n):
                s = candidate

        extras: Dict[str, Any] = {"groups": pattern_groups(half_n)}
        history = []
        if stabilize:
            check_budget(len(s), self.settings.face_budget)
            current = census(s)
            history.append((str(delta), current.rho_colored))
            trial = delta / 2
            for _ in range(budget):
                smaller = pattern_set(params, radii, trial)
                if not validate_strong_general_position(smaller):
                    logger.debug("δ=%s 时不满足强一般位置，继续减半", trial)
                    trial /= 2
                    continue
                following = census(smaller)
                history.append((str(trial), following.rho_colored))
                if following.rho_colored == current.rho_colored:
                    break
                logger.info("δ=%s: rho_colored %d -> %d，继续减半", trial, current.rho_colored,
                            following.rho_colored)
                s, current, delta = smaller, following, trial
                trial = delta / 2
            else:
                raise RetryExhaustedError(f"δ 减半 {budget} 次后 rho_colored 仍未稳定")
            extras["census"] = current

        logger.info("upper2 图案点集: n=%d δ=%s 尝试 %d 次", n, delta, attempts)
        return GeneratedSet(
            points=s,
            metadata={
                "kind": self.name, "n": n, "seed": seed, "delta": str(delta),
                "radii": [str(r) for r in radii], "attempts": attempts,
                "stabilization": history, "balanced": True,
            },
            extras=extras,
        )


def gen_circle_pattern(n: int, seed: int = 0, settings=None, stabilize: bool = True) -> ColoredPointSet:
    """图案点集（见 CirclePatternGenerator.generate）"""
    return CirclePatternGenerator(settings).generate(n, seed, stabilize=stabilize).points

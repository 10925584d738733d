"""
凸位置点集
圆上按近似等分的半角正切参数取点，参数抖动直到强一般位置成立
"""
import logging
import math
import random
from fractions import Fraction
from typing import Optional

from geometry.exceptions import DegenerateInputError, RetryExhaustedError
from geometry.kernel import circle_point
from geometry.pointset import ColoredPointSet, validate_strong_general_position

from .base import BaseGenerator, GeneratedSet
from .random_sgp import balanced_colors, check_color_request


logger = logging.getLogger(__name__)


def near_even_parameters(count: int, rng: random.Random, jitter: Fraction):
    """角度 -π + 2π(k+1/2)/count 的半角正切近似值，加相对抖动"""
    params = []
    for k in range(count):
        theta = -math.pi + 2 * math.pi * (k + 0.5) / count
        t = Fraction(math.tan(theta / 2)).limit_denominator(10000)
        params.append(t + jitter * Fraction(rng.randint(-1000, 1000), 1000) / count)
    return params


class ConvexGenerator(BaseGenerator):
    """圆上凸位置"""

    name = "convex"
    description = "圆上凸位置点集，cr(S) = C(n,4)"

    def validate_size(self, n: int) -> None:
        if n < 3:
            raise DegenerateInputError(f"凸位置点集至少 3 个点，实际 n={n}")

    def generate(self, n: int, seed: int = 0, colors: Optional[str] = None, **kwargs) -> GeneratedSet:
        """
        生成 n 个圆上的点

        Raises:
            RetryExhaustedError: 抖动 random_retry_limit 次仍不满足强一般位置
        """
        self.validate_size(n)
        check_color_request(n, colors)
        rng = random.Random(seed)
        jitter = self.settings.rational("circle_pattern_jitter")
        for attempt in range(1, self.settings.random_retry_limit + 1):
            params = near_even_parameters(n, rng, jitter)
            points = tuple(circle_point(t, 1) for t in params)
            if len(set(points)) == n and validate_strong_general_position(ColoredPointSet(points)):
                break
        else:
            raise RetryExhaustedError(f"凸位置点集生成失败 (n={n}, seed={seed})")
        color_list = balanced_colors(n, rng) if colors == "balanced" else None
        s = ColoredPointSet(points, tuple(color_list) if color_list else None, balanced=colors == "balanced")
        logger.info("凸位置点集: n=%d seed=%d 尝试 %d 次", n, seed, attempt)
        return GeneratedSet(
            points=s,
            metadata={"kind": self.name, "n": n, "seed": seed, "colors": colors,
                      "attempts": attempt, "balanced": colors == "balanced"},
        )


def gen_convex(n: int, colors: Optional[str] = None, seed: int = 0, settings=None) -> ColoredPointSet:
    """凸位置点集（见 ConvexGenerator.generate）"""
    return ConvexGenerator(settings).generate(n, seed, colors=colors).points

"""
随机强一般位置点集
网格上均匀取整点，逐点拒绝采样直到通过强一般位置校验
"""
import logging
import random
from typing import List, Optional

from geometry.exceptions import DegenerateInputError, RetryExhaustedError
from geometry.kernel import RationalPoint
from geometry.pointset import Color, ColoredPointSet, validate_strong_general_position

from .base import BaseGenerator, GeneratedSet


logger = logging.getLogger(__name__)


def balanced_colors(n: int, rng: random.Random) -> List[Color]:
    """n/2 红 n/2 蓝，随机打乱"""
    colors = [Color.RED] * (n // 2) + [Color.BLUE] * (n // 2)
    rng.shuffle(colors)
    return colors


def check_color_request(n: int, colors: Optional[str]) -> None:
    if colors not in (None, "balanced"):
        raise DegenerateInputError(f"未知着色方式: {colors}")
    if colors == "balanced" and n % 4 != 0:
        raise DegenerateInputError(f"平衡着色要求每种颜色偶数个点，n={n} 不是 4 的倍数")


class RandomGenerator(BaseGenerator):
    """网格拒绝采样"""

    name = "random"
    description = "随机整点，强一般位置"

    def validate_size(self, n: int) -> None:
        if n < 3:
            raise DegenerateInputError(f"随机点集至少 3 个点，实际 n={n}")

    def generate(self, n: int, seed: int = 0, colors: Optional[str] = None, **kwargs) -> GeneratedSet:
        """
        生成 n 个强一般位置的整点

        Args:
            n: 点数（>= 3）
            seed: 随机种子
            colors: None 或 "balanced"

        Raises:
            RetryExhaustedError: 拒绝次数超过 random_retry_limit
        """
        self.validate_size(n)
        check_color_request(n, colors)
        rng = random.Random(seed)
        grid = self.settings.grid_size
        limit = self.settings.random_retry_limit

        points: List[RationalPoint] = []
        rejected = 0
        while len(points) < n:
            candidate = RationalPoint(rng.randint(0, grid), rng.randint(0, grid))
            trial = points + [candidate]
            if candidate in points or not validate_strong_general_position(ColoredPointSet(tuple(trial))):
                rejected += 1
                if rejected > limit:
                    raise RetryExhaustedError(f"随机点集生成失败: 已拒绝 {rejected} 次 (n={n}, seed={seed})")
                continue
            points.append(candidate)

        color_list = balanced_colors(n, rng) if colors == "balanced" else None
        s = ColoredPointSet(tuple(points), tuple(color_list) if color_list else None,
                            balanced=colors == "balanced")
        logger.info("随机点集: n=%d seed=%d 拒绝 %d 次", n, seed, rejected)
        return GeneratedSet(
            points=s,
            metadata={"kind": self.name, "n": n, "seed": seed, "colors": colors,
                      "grid_size": grid, "rejected": rejected, "balanced": colors == "balanced"},
        )


def gen_random_sgp(n: int, colors: Optional[str] = None, seed: int = 0, settings=None) -> ColoredPointSet:
    """随机强一般位置点集（见 RandomGenerator.generate）"""
    return RandomGenerator(settings).generate(n, seed, colors=colors).points

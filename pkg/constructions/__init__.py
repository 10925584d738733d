"""
构造模块
提供随机强一般位置、凸位置、R,B,B,R 图案与四图案点集生成器
"""
from .base import BaseGenerator, GeneratedSet, block_in_order, is_contiguous
from .random_sgp import RandomGenerator, gen_random_sgp
from .convex import ConvexGenerator, gen_convex
from .circle_pattern import CirclePatternGenerator, gen_circle_pattern
from .four_pattern import FourPatternGenerator, gen_four_pattern


class GeneratorManager:
    """生成器管理器"""

    def __init__(self, settings=None):
        """
        初始化生成器管理器

        Args:
            settings: 传给各生成器的配置，不传则使用全局配置
        """
        self._generators = {
            gen.name: gen
            for gen in (
                RandomGenerator(settings),
                ConvexGenerator(settings),
                CirclePatternGenerator(settings),
                FourPatternGenerator(settings),
            )
        }

    def get_generator(self, name: str) -> BaseGenerator:
        """
        获取生成器实例

        Args:
            name: 生成器名称（random / convex / upper2 / lower4）

        Returns:
            生成器实例
        """
        if name not in self._generators:
            raise ValueError(f"未知生成器: {name}")
        return self._generators[name]

    def list_generators(self) -> list:
        """列出所有可用生成器"""
        return list(self._generators.keys())

    def run_generator(self, name: str, n: int, seed: int = 0, **kwargs) -> GeneratedSet:
        """
        执行生成器

        Args:
            name: 生成器名称
            n: 规模参数
            seed: 随机种子
            **kwargs: 生成器的额外参数（如 colors、stabilize）

        Returns:
            生成结果
        """
        return self.get_generator(name).generate(n, seed, **kwargs)


__all__ = [
    "BaseGenerator",
    "GeneratedSet",
    "block_in_order",
    "is_contiguous",
    "RandomGenerator",
    "ConvexGenerator",
    "CirclePatternGenerator",
    "FourPatternGenerator",
    "GeneratorManager",
    "gen_random_sgp",
    "gen_convex",
    "gen_circle_pattern",
    "gen_four_pattern",
]

"""
生成器基类
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from config.settings import Settings, get_settings
from geometry.kernel import RationalPoint
from geometry.pointset import ColoredPointSet
from orders.circular import CircularOrder


@dataclass
class GeneratedSet:
    """
    生成结果

    Attributes:
        points: 生成的点集
        designated: 指定观察点（lower4 的 q 点）
        metadata: 写入输出文件的参数记录
        extras: 生成过程的中间产物（如分组、普查结果），不写入文件
    """
    points: ColoredPointSet
    designated: List[RationalPoint] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)
    extras: Dict[str, Any] = field(default_factory=dict)


class BaseGenerator(ABC):
    """点集生成器抽象基类"""

    name: str = "base_generator"
    description: str = "基础生成器"

    def __init__(self, settings: Optional[Settings] = None):
        """
        初始化生成器

        Args:
            settings: 配置，不传则使用全局配置
        """
        self.settings = settings or get_settings()

    @abstractmethod
    def generate(self, n: int, seed: int = 0, **kwargs) -> GeneratedSet:
        """
        生成点集

        Args:
            n: 规模参数
            seed: 随机种子

        Returns:
            生成结果
        """
        pass

    def validate_size(self, n: int) -> None:
        """规模不合法时抛出 DegenerateInputError"""

    def expected_points(self, n: int) -> int:
        """规模参数 n 对应的实际点数"""
        return n

    def __repr__(self) -> str:
        return f"<Generator: {self.name}>"


def is_contiguous(order: CircularOrder, group: Sequence[int]) -> bool:
    """group 中的下标在循环序中是否连续出现"""
    members = set(group)
    seq = order.sequence
    n = len(seq)
    if len(members) <= 1 or len(members) == n:
        return True
    # 连续块恰有一个入口：前一个不在块中而自身在块中
    starts = sum(1 for k in range(n) if seq[k] in members and seq[k - 1] not in members)
    return starts == 1


def block_in_order(order: CircularOrder, block: Sequence[int]) -> bool:
    """block 是否按给定顺序顺时针连续出现"""
    seq = order.sequence
    n = len(seq)
    if not block:
        return True
    start = seq.index(block[0])
    return all(seq[(start + k) % n] == block[k] for k in range(len(block)))

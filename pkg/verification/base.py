"""
检验基类
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from arrangement import (
    Arrangement,
    ArrangementStats,
    OrderPartition,
    build_arrangement,
    build_order_partition,
    compute_stats,
)
from geometry.pointset import ColoredPointSet
from orders.circular import CircularOrder
from orders.radial import radial_order


@dataclass
class CheckResult:
    """检验结果"""
    name: str
    success: bool
    data: Any = None
    message: str = ""
    error: Optional[str] = None


@dataclass
class CheckContext:
    """
    一次检验运行共享的排列、序划分与统计量

    面的径向序按需计算并缓存
    """
    s: ColoredPointSet
    arr: Arrangement
    partition: OrderPartition
    stats: ArrangementStats
    _orders: Dict[int, CircularOrder] = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, s: ColoredPointSet) -> "CheckContext":
        arr = build_arrangement(s, validate=False)
        partition = build_order_partition(arr)
        return cls(s, arr, partition, compute_stats(s, arr, partition))

    def face_order(self, face_id: int) -> CircularOrder:
        if face_id not in self._orders:
            rep = self.arr.faces[face_id].representative
            self._orders[face_id] = radial_order(self.s, rep, check=False)
        return self._orders[face_id]


class BaseCheck(ABC):
    """检验抽象基类"""

    name: str = "base_check"
    description: str = "基础检验"

    @abstractmethod
    def run(self, ctx: CheckContext) -> CheckResult:
        """
        执行检验

        Args:
            ctx: 共享上下文

        Returns:
            检验结果
        """
        pass

    def result(self, success: bool, data: Any = None, message: str = "") -> CheckResult:
        return CheckResult(self.name, success, data, message)

    def __repr__(self) -> str:
        return f"<Check: {self.name}>"

"""
循环序
规范旋转、颜色词与相邻对换比较
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Hashable, List, Optional, Sequence, Tuple

from geometry.exceptions import (
    DegenerateInputError,
    EmptySequenceError,
    MismatchedIndexSetsError,
    UncoloredSetError,
)
from geometry.pointset import ColoredPointSet


def canonical_rotation(seq: Sequence[Hashable]) -> Tuple[list, int]:
    """
    字典序最小旋转（线性时间的最小表示法）

    Args:
        seq: 非空序列，元素之间全序可比

    Returns:
        (旋转后的列表, 偏移量 k)，旋转结果为 seq[k:] + seq[:k]

    Raises:
        EmptySequenceError: 序列为空
    """
    items = list(seq)
    n = len(items)
    if n == 0:
        raise EmptySequenceError("空序列没有规范旋转")
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = items[(i + k) % n]
        b = items[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    offset = min(i, j)
    return items[offset:] + items[:offset], offset


@dataclass(frozen=True)
class CircularOrder:
    """
    点下标的顺时针循环序

    sequence 存规范旋转，两个循环序相等当且仅当 sequence 相同
    """
    sequence: Tuple[int, ...]
    offset: int = field(default=0, compare=False)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "CircularOrder":
        rotated, offset = canonical_rotation(seq)
        return cls(tuple(rotated), offset)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def position(self, index: int) -> int:
        return self.sequence.index(index)

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.sequence) + "]"


@dataclass(frozen=True)
class ColorWord:
    """颜色的循环词，存规范旋转（"B" < "R"）"""
    word: str
    offset: int = field(default=0, compare=False)

    @classmethod
    def from_colors(cls, colors: Sequence[str]) -> "ColorWord":
        rotated, offset = canonical_rotation([str(getattr(c, "value", c)) for c in colors])
        return cls("".join(rotated), offset)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word


def color_word(order: CircularOrder, s: ColoredPointSet) -> ColorWord:
    """
    把循环序投影为颜色词

    Raises:
        UncoloredSetError: 点集未着色
    """
    if s.colors is None:
        raise UncoloredSetError("点集未着色，无法计算颜色词")
    return ColorWord.from_colors([s.colors[i] for i in order.sequence])


class DiffKind(Enum):
    SAME = "same"
    SWAP = "swap"
    OTHER = "other"


@dataclass(frozen=True)
class TranspositionDiff:
    """
    两个循环序的比较结果

    Attributes:
        kind: SAME / SWAP / OTHER
        pair: SWAP 时交换的两个下标（升序；有多种解释时取最小者）
        candidates: 所有能解释该差异的相邻对（n = 3 时一次对换可有多种解释）
    """
    kind: DiffKind
    pair: Optional[Tuple[int, int]] = None
    candidates: FrozenSet[Tuple[int, int]] = frozenset()

    def is_swap_of(self, i: int, j: int) -> bool:
        return self.kind == DiffKind.SWAP and (min(i, j), max(i, j)) in self.candidates

    def __str__(self) -> str:
        if self.kind == DiffKind.SWAP:
            return f"Swap{self.pair}"
        return self.kind.value.capitalize()


def _swapped(sequence: Sequence[int], k: int) -> List[int]:
    items = list(sequence)
    k2 = (k + 1) % len(items)
    items[k], items[k2] = items[k2], items[k]
    return items


def adjacent_transposition_diff(a: CircularOrder, b: CircularOrder) -> TranspositionDiff:
    """
    判断 b 是否由 a 交换一对循环相邻元素得到

    Raises:
        MismatchedIndexSetsError: 两个循环序的下标集合不同
    """
    if sorted(a.sequence) != sorted(b.sequence):
        raise MismatchedIndexSetsError("两个循环序的下标集合不同")
    if a == b:
        return TranspositionDiff(DiffKind.SAME)
    n = len(a.sequence)
    candidates = set()
    for k in range(n):
        if CircularOrder.from_sequence(_swapped(a.sequence, k)) == b:
            x, y = a.sequence[k], a.sequence[(k + 1) % n]
            candidates.add((min(x, y), max(x, y)))
    if not candidates:
        return TranspositionDiff(DiffKind.OTHER)
    return TranspositionDiff(DiffKind.SWAP, min(candidates), frozenset(candidates))


def apply_adjacent_swap(order: CircularOrder, i: int, j: int) -> CircularOrder:
    """
    交换循环序中相邻的 i 与 j

    Raises:
        MismatchedIndexSetsError: i 或 j 不在循环序中
        DegenerateInputError: i 与 j 不相邻
    """
    if i not in order.sequence or j not in order.sequence:
        raise MismatchedIndexSetsError(f"下标 {i} 或 {j} 不在循环序中")
    n = len(order.sequence)
    pi = order.position(i)
    if order.sequence[(pi + 1) % n] == j:
        k = pi
    elif order.sequence[(pi - 1) % n] == j:
        k = (pi - 1) % n
    else:
        raise DegenerateInputError(f"{i} 与 {j} 在循环序中不相邻")
    return CircularOrder.from_sequence(_swapped(order.sequence, k))

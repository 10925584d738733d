"""
点集与强一般位置校验
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import DegenerateInputError, InvalidPointSetError
from .kernel import (
    Line,
    RationalPoint,
    Triple,
    reduce_triple,
    convex_hull_indices,
    homogeneous,
    homogeneous_cross,
    line_intersection,
    line_through,
)


logger = logging.getLogger(__name__)


class Color(str, Enum):
    """点的颜色"""
    RED = "R"
    BLUE = "B"


@dataclass(frozen=True)
class ColoredPointSet:
    """
    带可选二着色的有序点集

    Attributes:
        points: 点列表（下标即点的编号）
        colors: 与 points 对齐的颜色列表，未着色时为 None
        balanced: 标记为平衡时要求红蓝数量相等且每种颜色为偶数个
    """
    points: Tuple[RationalPoint, ...]
    colors: Optional[Tuple[Color, ...]] = None
    balanced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points):
            raise InvalidPointSetError("点集中存在重复点")
        if self.colors is not None:
            colors = tuple(Color(c) for c in self.colors)
            object.__setattr__(self, "colors", colors)
            if len(colors) != len(self.points):
                raise InvalidPointSetError(
                    f"颜色数 {len(colors)} 与点数 {len(self.points)} 不一致"
                )
        if self.balanced and not self.is_balanced:
            raise InvalidPointSetError("标记为平衡的点集红蓝数量不相等或不是偶数")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> RationalPoint:
        return self.points[index]

    @property
    def is_colored(self) -> bool:
        return self.colors is not None

    @property
    def color_counts(self) -> Dict[Color, int]:
        counts = Counter(self.colors or ())
        return {Color.RED: counts[Color.RED], Color.BLUE: counts[Color.BLUE]}

    @property
    def is_balanced(self) -> bool:
        if self.colors is None:
            return False
        counts = self.color_counts
        return counts[Color.RED] == counts[Color.BLUE] and counts[Color.RED] % 2 == 0

    def indices_of(self, color: Color) -> List[int]:
        """某种颜色的点下标"""
        return [i for i, c in enumerate(self.colors or ()) if c == color]

    def recolored(self, colors: Optional[Sequence[Color]]) -> "ColoredPointSet":
        """换一种着色，点不变"""
        return ColoredPointSet(self.points, tuple(colors) if colors is not None else None)


@dataclass
class ValidationResult:
    """强一般位置校验结果"""
    valid: bool
    message: str = ""
    collinear: Optional[Tuple[int, int, int]] = None
    concurrent_lines: Optional[Tuple[Line, Line, Line]] = None
    concurrency_point: Optional[RationalPoint] = None
    checked_lines: int = 0
    checked_pairs: int = 0

    def __bool__(self) -> bool:
        return self.valid


def _triple_to_line(triple: Triple) -> Line:
    # 齐次直线 (a, b, c) 表示 a*x + b*y + c = 0
    a, b, c = triple
    return Line.from_coefficients(a, b, -c)


def _triple_to_point(triple: Triple) -> RationalPoint:
    x, y, w = triple
    return RationalPoint(Fraction(x, w), Fraction(y, w))


def validate_strong_general_position(s: ColoredPointSet) -> ValidationResult:
    """
    校验强一般位置

    (i) 无三点共线；(ii) 任意三条张成直线若共点，该点必须属于点集。
    共点扫描在齐次整数坐标上进行，交点以约化三元组为键分组。

    Args:
        s: 点集（至少 1 个点）

    Returns:
        ValidationResult，违例时携带共线三点或共点三线
    """
    if len(s) < 1:
        raise DegenerateInputError("空点集无法校验")
    coords = [reduce_triple(homogeneous(p)) for p in s.points]

    # (i) 共线：两对点给出同一直线
    lines: Dict[Triple, Tuple[int, int]] = {}
    for i, j in combinations(range(len(coords)), 2):
        key = homogeneous_cross(coords[i], coords[j])
        if key in lines:
            a, b = lines[key]
            triple = tuple(sorted({a, b, i, j}))[:3]
            return ValidationResult(
                valid=False,
                message=f"三点共线: {triple}",
                collinear=triple,
                checked_lines=len(lines),
            )
        lines[key] = (i, j)

    # (ii) 点集外的三线共点
    members = set(coords)
    line_keys = list(lines)
    hits: Dict[Triple, set] = defaultdict(set)
    pairs = 0
    for u in range(len(line_keys)):
        lu = line_keys[u]
        for v in range(u + 1, len(line_keys)):
            point = homogeneous_cross(lu, line_keys[v])
            pairs += 1
            if point[2] == 0 or point in members:
                continue
            bucket = hits[point]
            bucket.add(u)
            bucket.add(v)
            if len(bucket) >= 3:
                first = sorted(bucket)[:3]
                concurrent = tuple(_triple_to_line(line_keys[k]) for k in first)
                where = _triple_to_point(point)
                return ValidationResult(
                    valid=False,
                    message=f"三条张成直线交于点集外的点 {where}",
                    concurrent_lines=concurrent,
                    concurrency_point=where,
                    checked_lines=len(line_keys),
                    checked_pairs=pairs,
                )
    logger.debug("强一般位置校验通过: %d 条直线, %d 对", len(line_keys), pairs)
    return ValidationResult(valid=True, message="ok", checked_lines=len(line_keys), checked_pairs=pairs)


def spanned_lines(s: ColoredPointSet) -> Dict[Line, Tuple[int, int]]:
    """所有张成直线及其定义点对（强一般位置下互不相同）"""
    result: Dict[Line, Tuple[int, int]] = {}
    for i, j in combinations(range(len(s)), 2):
        result.setdefault(line_through(s[i], s[j]), (i, j))
    return result


def convex_hull(s: ColoredPointSet) -> List[int]:
    """
    凸包顶点下标（顺时针）

    Raises:
        DegenerateInputError: 点数少于 3
    """
    return convex_hull_indices(s.points)


def intersection_point(l1: Line, l2: Line) -> Optional[RationalPoint]:
    """两直线交点，不相交时返回 None"""
    result = line_intersection(l1, l2)
    return result if isinstance(result, RationalPoint) else None

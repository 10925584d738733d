"""
径向序普查
在序划分的每个胞腔取一个代表点计算径向序，去重计数 ρ(S) 与 ρ̄(S)
"""
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from arrangement import Arrangement, OrderPartition, build_arrangement, build_order_partition
from config.settings import get_settings
from geometry.exceptions import NotObservationPointError
from geometry.kernel import RationalPoint
from geometry.pointset import ColoredPointSet
from orders.circular import CircularOrder, ColorWord, color_word
from orders.radial import clockwise_indices, radial_order


logger = logging.getLogger(__name__)


@dataclass
class OrderingCensus:
    """
    普查结果

    Attributes:
        rho: 不同径向序的个数
        rho_colored: 不同颜色词的个数（未着色点集为 None）
        per_cell: 胞腔编号 -> 规范径向序
        class_sizes: 径向序 -> 实现它的胞腔数
        order_cells: 胞腔数
        faces: 排列面数 F（含外面）
        words: 胞腔编号 -> 颜色词（未着色时为空）
    """
    rho: int
    rho_colored: Optional[int]
    per_cell: Dict[int, CircularOrder]
    class_sizes: Counter
    order_cells: int
    faces: int
    words: Dict[int, ColorWord] = field(default_factory=dict)

    @property
    def orders(self) -> Set[CircularOrder]:
        return set(self.class_sizes)

    @property
    def color_words(self) -> Set[ColorWord]:
        return set(self.words.values())


def _orders_chunk(points: Sequence[RationalPoint], reps: Sequence[RationalPoint]) -> List[Tuple[int, ...]]:
    return [CircularOrder.from_sequence(clockwise_indices(points, r, check=False)).sequence for r in reps]


def _evaluate_orders(s: ColoredPointSet, reps: List[RationalPoint], threads: int) -> List[CircularOrder]:
    if threads <= 1 or len(reps) < 2 * threads:
        return [CircularOrder.from_sequence(clockwise_indices(s.points, r, check=False)) for r in reps]
    size = (len(reps) + threads - 1) // threads
    chunks = [reps[k:k + size] for k in range(0, len(reps), size)]
    # 按块顺序合并，结果与调度无关
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = pool.map(_orders_chunk, [s.points] * len(chunks), chunks)
        return [CircularOrder(seq) for chunk in results for seq in chunk]


def census(s: ColoredPointSet, arr: Optional[Arrangement] = None,
           partition: Optional[OrderPartition] = None,
           threads: Optional[int] = None) -> OrderingCensus:
    """
    统计点集的不同径向序与颜色径向序

    Args:
        s: 强一般位置点集（n >= 3）
        arr: 已构建的排列（可选）
        partition: 已构建的序划分（可选）
        threads: 工作进程数，默认取配置 RADIAL_THREADS

    Returns:
        OrderingCensus

    Raises:
        TooFewPointsError, NotValidatedError: 来自排列构建
    """
    if arr is None:
        arr = build_arrangement(s)
    if partition is None:
        partition = build_order_partition(arr)
    threads = threads if threads is not None else get_settings().threads

    cell_ids = sorted(partition.cells)
    reps = [arr.faces[partition.cells[c][0]].representative for c in cell_ids]
    orders = _evaluate_orders(s, reps, threads)

    per_cell = dict(zip(cell_ids, orders))
    class_sizes = Counter(orders)
    words: Dict[int, ColorWord] = {}
    rho_colored = None
    if s.is_colored:
        words = {c: color_word(o, s) for c, o in per_cell.items()}
        rho_colored = len(set(words.values()))

    result = OrderingCensus(
        rho=len(class_sizes),
        rho_colored=rho_colored,
        per_cell=per_cell,
        class_sizes=class_sizes,
        order_cells=partition.cell_count,
        faces=arr.F,
        words=words,
    )
    logger.info("普查: rho=%d rho_colored=%s 胞腔=%d F=%d", result.rho, result.rho_colored,
                result.order_cells, result.faces)
    return result


@dataclass
class OracleReport:
    """随机观察点抽样核对结果"""
    sampled: int
    missing: List[RationalPoint] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.missing


def random_observation_points(s: ColoredPointSet, count: int, seed: int,
                              resolution: int = 997) -> List[RationalPoint]:
    """
    在点集外扩一倍的包围矩形内随机取有理观察点，拒绝非观察点

    Args:
        count: 需要的观察点个数
        seed: 随机种子
        resolution: 坐标分母
    """
    rng = random.Random(seed)
    xs = [p.x for p in s.points]
    ys = [p.y for p in s.points]
    wx = max(xs) - min(xs) or Fraction(1)
    wy = max(ys) - min(ys) or Fraction(1)
    x0, y0 = min(xs) - wx, min(ys) - wy
    result: List[RationalPoint] = []
    while len(result) < count:
        p = RationalPoint(
            x0 + 3 * wx * Fraction(rng.randrange(resolution * 8 + 1), resolution * 8),
            y0 + 3 * wy * Fraction(rng.randrange(resolution * 8 + 1), resolution * 8),
        )
        try:
            radial_order(s, p)
        except NotObservationPointError:
            continue
        result.append(p)
    return result


def census_oracle(s: ColoredPointSet, result: OrderingCensus, samples: Optional[int] = None,
                  seed: int = 0) -> OracleReport:
    """
    随机观察点得到的径向序必须已在普查结果中

    Args:
        s: 点集
        result: census 的结果
        samples: 抽样个数，默认取配置 RADIAL_ORACLE_SAMPLES
        seed: 随机种子
    """
    samples = samples if samples is not None else get_settings().oracle_samples
    known = result.orders
    report = OracleReport(sampled=0)
    for p in random_observation_points(s, samples, seed):
        report.sampled += 1
        if radial_order(s, p, check=False) not in known:
            report.missing.append(p)
    if report.missing:
        logger.warning("普查遗漏: %d 个观察点的径向序不在结果中", len(report.missing))
    return report

"""
增长实验
对一组规模逐个生成点集并普查，输出 (size, rho, rho_colored, order_cells, F) 表
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from arrangement import check_budget
from config.settings import Settings, get_settings
from geometry.exceptions import DegenerateInputError
from orders.circular import color_word
from orders.radial import radial_order

from .census import census


logger = logging.getLogger(__name__)

EXPERIMENT_HEADER = ("size", "rho", "rho_colored", "order_cells", "F", "points", "designated_distinct")
EXPERIMENT_KINDS = ("random", "convex", "upper2", "lower4")


@dataclass
class ExperimentTable:
    """
    实验结果表

    Attributes:
        header: 列名
        rows: 每个规模一行，未普查的列为 None
        meta: 可复现实验的参数记录
    """
    header: Sequence[str]
    rows: List[tuple] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def column(self, name: str) -> List[Any]:
        k = list(self.header).index(name)
        return [row[k] for row in self.rows]


def growth_experiment(kind: str, sizes: Sequence[int], seed: int = 0, with_census: bool = True,
                      settings: Optional[Settings] = None) -> ExperimentTable:
    """
    增长实验

    Args:
        kind: random / convex / upper2 / lower4
        sizes: 规模列表（upper2、lower4 为每色点数 n）
        seed: 随机种子，每个规模使用同一种子
        with_census: 是否普查；lower4 不普查时只报告指定观察点处的颜色词个数
        settings: 配置

    Returns:
        ExperimentTable，同一 seed 下结果相同

    Raises:
        BudgetExceededError: 某个规模的预估面数超过 RADIAL_FACE_BUDGET
        DegenerateInputError: 未知的 kind 或不合法的规模
    """
    from constructions import GeneratorManager

    if kind not in EXPERIMENT_KINDS:
        raise DegenerateInputError(f"未知实验类型: {kind}")
    settings = settings or get_settings()
    generator = GeneratorManager(settings).get_generator(kind)

    # 先检查全部规模，避免跑到一半才失败
    for size in sizes:
        generator.validate_size(size)
        if with_census:
            check_budget(generator.expected_points(size), settings.face_budget)

    table = ExperimentTable(header=EXPERIMENT_HEADER, meta={
        "command": "experiment", "kind": kind, "sizes": list(sizes), "seed": seed,
        "census": with_census, "tool_version": settings.tool_version, "runs": [],
    })
    for size in sizes:
        kwargs: Dict[str, Any] = {}
        if kind in ("random", "convex") and size % 4 == 0:
            kwargs["colors"] = "balanced"
        if kind == "upper2":
            kwargs["stabilize"] = with_census
        generated = generator.generate(size, seed, **kwargs)
        s = generated.points

        distinct = None
        if generated.designated:
            distinct = len({color_word(radial_order(s, q), s) for q in generated.designated})

        rho = rho_colored = order_cells = faces = None
        if with_census:
            result = generated.extras.get("census") or census(s, threads=settings.threads)
            rho, rho_colored = result.rho, result.rho_colored
            order_cells, faces = result.order_cells, result.faces

        table.rows.append((size, rho, rho_colored, order_cells, faces, len(s), distinct))
        table.meta["runs"].append(generated.metadata)
        logger.info("实验 %s size=%d: rho=%s rho_colored=%s 胞腔=%s F=%s", kind, size, rho, rho_colored,
                    order_cells, faces)
    return table

"""
不变量检验套件
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from arrangement import EdgeKind, check_budget
from config.settings import Settings, get_settings
from enumeration.census import census
from enumeration.lemmas import interior_distinctness_check
from geometry.pointset import ColoredPointSet, ValidationResult, validate_strong_general_position
from orders.circular import DiffKind, adjacent_transposition_diff

from .base import BaseCheck, CheckContext, CheckResult


logger = logging.getLogger(__name__)


class EulerCheck(BaseCheck):
    name = "euler"
    description = "V - E + F = 2"

    def run(self, ctx: CheckContext) -> CheckResult:
        arr = ctx.arr
        value = arr.V - arr.E + arr.F
        return self.result(value == 2, {"V": arr.V, "E": arr.E, "F": arr.F}, f"V-E+F = {value}")


class DegreeStructureCheck(BaseCheck):
    """非点集、非盒边顶点恰在 2 条张成直线上，点集中的点恰在 n-1 条上"""

    name = "degree_structure"
    description = "顶点所在直线数"

    def run(self, ctx: CheckContext) -> CheckResult:
        n = len(ctx.s)
        bad = []
        for v in ctx.arr.vertices:
            if v.on_box:
                continue
            expected = n - 1 if v.site is not None else 2
            if len(v.lines) != expected:
                bad.append(v.id)
        data = {"degree_histogram": ctx.stats.degree_histogram, "lines_per_vertex": ctx.stats.lines_per_vertex}
        return self.result(not bad, data, f"{len(bad)} 个顶点不符" if bad else "ok")


class MIdentityCheck(BaseCheck):
    name = "m_identity"
    description = "M = 3*C(n,4) - 2*cr"

    def run(self, ctx: CheckContext) -> CheckResult:
        st = ctx.stats
        return self.result(st.m_identity_holds, {"M": st.M, "cr": st.cr}, f"M={st.M} cr={st.cr}")


class CrossingBoundCheck(BaseCheck):
    name = "crossing_bound"
    description = "cr 不小于 n 点集的最小交叉数下界"

    def run(self, ctx: CheckContext) -> CheckResult:
        st = ctx.stats
        message = f"cr={st.cr} 下界={st.crossing_lower_bound} cr/C(n,4)={float(st.crossing_ratio):.3f}"
        return self.result(st.cr >= st.crossing_lower_bound, st.cr, message)


class Degree4BoundCheck(BaseCheck):
    name = "deg4_bound"
    description = "四度顶点数 >= C(n,2)(n-2)(n-4)/4"

    def run(self, ctx: CheckContext) -> CheckResult:
        st = ctx.stats
        return self.result(st.deg4_count >= st.deg4_lower_bound, st.deg4_count,
                           f"四度顶点 {st.deg4_count}，下界 {st.deg4_lower_bound}")


class CellLowerBoundCheck(BaseCheck):
    name = "cell_lower_bound"
    description = "胞腔数 >= F_inner - M - C(n,2)"

    def run(self, ctx: CheckContext) -> CheckResult:
        st = ctx.stats
        return self.result(st.order_cells >= st.cell_lower_bound, st.order_cells,
                           f"胞腔 {st.order_cells}，下界 {st.cell_lower_bound}")


class AdjacencyCheck(BaseCheck):
    """跨线段内部边径向序相同，跨半线边恰好交换该直线的两个定义点"""

    name = "adjacency"
    description = "相邻面的径向序关系"

    def run(self, ctx: CheckContext) -> CheckResult:
        arr = ctx.arr
        failures = []
        checked = 0
        for e in arr.edges:
            if e.line is None:
                continue
            left, right = arr.edge_faces(e.id)
            if arr.faces[left].outer or arr.faces[right].outer:
                continue
            checked += 1
            diff = adjacent_transposition_diff(ctx.face_order(left), ctx.face_order(right))
            if e.kind == EdgeKind.SEGMENT_INTERIOR:
                ok = diff.kind == DiffKind.SAME
            else:
                ok = diff.is_swap_of(*arr.line_pairs[e.line])
            if not ok:
                failures.append(e.id)
        message = f"{checked} 条边，{len(failures)} 条不符"
        return self.result(not failures, {"checked": checked, "failures": failures[:10]}, message)


class PartitionSoundnessCheck(BaseCheck):
    name = "partition_soundness"
    description = "同一胞腔内所有面的径向序相同"

    def run(self, ctx: CheckContext) -> CheckResult:
        bad = [cell for cell, faces in ctx.partition.cells.items()
               if len({ctx.face_order(f) for f in faces}) != 1]
        return self.result(not bad, bad[:10], f"{len(bad)} 个胞腔不一致" if bad else "ok")


class InteriorDistinctnessCheck(BaseCheck):
    name = "interior_distinctness"
    description = "凸包内部不同胞腔的径向序两两不同"

    def run(self, ctx: CheckContext) -> CheckResult:
        report = interior_distinctness_check(ctx.s, ctx.arr)
        return self.result(report.passed, report.counterexample, report.message)


class UpperBoundCheck(BaseCheck):
    name = "upper_bound"
    description = "rho_colored <= rho <= 胞腔数 <= F"

    def run(self, ctx: CheckContext) -> CheckResult:
        result = census(ctx.s, ctx.arr, ctx.partition)
        ok = result.rho <= result.order_cells <= result.faces
        if result.rho_colored is not None:
            ok = ok and result.rho_colored <= result.rho
        data = {"rho": result.rho, "rho_colored": result.rho_colored,
                "order_cells": result.order_cells, "F": result.faces}
        return self.result(ok, data, " ".join(f"{k}={v}" for k, v in data.items()))


@dataclass
class SuiteReport:
    """
    套件运行结果

    Attributes:
        validation: 强一般位置校验；未通过时不运行任何检验
        results: 各项检验结果
    """
    validation: ValidationResult
    results: List[CheckResult] = field(default_factory=list)
    stats: Optional[object] = None

    @property
    def passed(self) -> bool:
        return bool(self.validation) and all(r.success for r in self.results)


class VerificationSuite:
    """检验套件管理器"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self._checks: Dict[str, BaseCheck] = {
            check.name: check
            for check in (
                EulerCheck(),
                DegreeStructureCheck(),
                MIdentityCheck(),
                CrossingBoundCheck(),
                Degree4BoundCheck(),
                CellLowerBoundCheck(),
                AdjacencyCheck(),
                PartitionSoundnessCheck(),
                InteriorDistinctnessCheck(),
                UpperBoundCheck(),
            )
        }

    def get_check(self, name: str) -> BaseCheck:
        if name not in self._checks:
            raise ValueError(f"未知检验: {name}")
        return self._checks[name]

    def list_checks(self) -> list:
        """列出所有检验"""
        return list(self._checks.keys())

    def run(self, s: ColoredPointSet, names: Optional[Sequence[str]] = None) -> SuiteReport:
        """
        运行检验

        Args:
            s: 点集
            names: 要运行的检验，默认全部

        Returns:
            SuiteReport；点集不满足强一般位置时只含校验结果

        Raises:
            BudgetExceededError: 预估面数超过 RADIAL_FACE_BUDGET
        """
        checks = [self.get_check(name) for name in (names or self.list_checks())]
        validation = validate_strong_general_position(s)
        if not validation:
            logger.warning("点集不满足强一般位置: %s", validation.message)
            return SuiteReport(validation)
        check_budget(len(s), self.settings.face_budget)

        ctx = CheckContext.build(s)
        report = SuiteReport(validation, stats=ctx.stats)
        for check in checks:
            result = check.run(ctx)
            level = logging.INFO if result.success else logging.WARNING
            logger.log(level, "检验 %s: %s (%s)", check.name, "通过" if result.success else "失败", result.message)
            report.results.append(result)
        return report

"""
枚举模块
径向序普查、绕点行走、划分引理检验与增长实验
"""
from .census import (
    OracleReport,
    OrderingCensus,
    census,
    census_oracle,
    random_observation_points,
)
from .lemmas import (
    CheckStatus,
    DistinctnessReport,
    LemmaResult,
    cone_points_in_cells,
    distinct_pairs,
    hull_cone,
    in_hull_cone,
    interior_distinctness_check,
    partition_lemma_check,
    split_by_line,
)
from .walk import WalkEvent, WalkTrace, walk_around, walk_radius
from .experiment import EXPERIMENT_HEADER, EXPERIMENT_KINDS, ExperimentTable, growth_experiment


__all__ = [
    "OracleReport",
    "OrderingCensus",
    "census",
    "census_oracle",
    "random_observation_points",
    "CheckStatus",
    "DistinctnessReport",
    "LemmaResult",
    "cone_points_in_cells",
    "distinct_pairs",
    "hull_cone",
    "in_hull_cone",
    "interior_distinctness_check",
    "partition_lemma_check",
    "split_by_line",
    "WalkEvent",
    "WalkTrace",
    "walk_around",
    "walk_radius",
    "EXPERIMENT_HEADER",
    "EXPERIMENT_KINDS",
    "ExperimentTable",
    "growth_experiment",
]

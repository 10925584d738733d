"""
检验模块
排列恒等式、序划分性质与径向序不变量的检验套件
"""
from .base import BaseCheck, CheckContext, CheckResult
from .suite import (
    AdjacencyCheck,
    CellLowerBoundCheck,
    CrossingBoundCheck,
    Degree4BoundCheck,
    DegreeStructureCheck,
    EulerCheck,
    InteriorDistinctnessCheck,
    MIdentityCheck,
    PartitionSoundnessCheck,
    SuiteReport,
    UpperBoundCheck,
    VerificationSuite,
)


__all__ = [
    "BaseCheck",
    "CheckContext",
    "CheckResult",
    "AdjacencyCheck",
    "CellLowerBoundCheck",
    "CrossingBoundCheck",
    "Degree4BoundCheck",
    "DegreeStructureCheck",
    "EulerCheck",
    "InteriorDistinctnessCheck",
    "MIdentityCheck",
    "PartitionSoundnessCheck",
    "SuiteReport",
    "UpperBoundCheck",
    "VerificationSuite",
]

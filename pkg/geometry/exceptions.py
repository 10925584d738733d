"""
异常定义
所有模块共用的错误类型
"""


class RadialOrderError(Exception):
    """本项目所有错误的基类"""


class InvalidPointSetError(RadialOrderError, ValueError):
    """点集或点集文件不满足字段约束"""


class IdenticalPointsError(RadialOrderError, ValueError):
    """两点重合，无法确定直线"""


class DegenerateInputError(RadialOrderError, ValueError):
    """输入退化（点数不足等）"""


class NotObservationPointError(RadialOrderError, ValueError):
    """观察点落在点集上或与两点共线"""


class EmptySequenceError(RadialOrderError, ValueError):
    """空序列没有规范旋转"""


class UncoloredSetError(RadialOrderError, ValueError):
    """点集未着色"""


class MismatchedIndexSetsError(RadialOrderError, ValueError):
    """两个循环序的下标集合不同"""


class NotInteriorPointError(RadialOrderError, ValueError):
    """观察点不在凸包内部"""


class TooFewPointsError(RadialOrderError, ValueError):
    """点数少于 3"""


class NotValidatedError(RadialOrderError, ValueError):
    """点集不满足强一般位置"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class RetryExhaustedError(RadialOrderError):
    """重试次数用尽"""


class ParameterDegenerateError(RadialOrderError):
    """参数减半后低于精度下限"""


class BudgetExceededError(RadialOrderError):
    """预估规模超过预算"""

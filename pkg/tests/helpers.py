"""
测试用点集
"""
import os
import unittest

from geometry.kernel import RationalPoint
from geometry.pointset import ColoredPointSet


SLOW = os.environ.get("RADIAL_SLOW_TESTS") == "1"
slow = unittest.skipUnless(SLOW, "设置 RADIAL_SLOW_TESTS=1 运行")


def point_set(coords, colors=None, balanced=False) -> ColoredPointSet:
    return ColoredPointSet(tuple(RationalPoint(x, y) for x, y in coords),
                           tuple(colors) if colors is not None else None, balanced)


TRIANGLE = [(0, 0), (4, 0), (1, 3)]
CONVEX_QUAD = [(0, 0), (4, 0), (5, 3), (1, 4)]
NONCONVEX_QUAD = [(0, 0), (6, 0), (0, 6), (1, 1)]
COLLINEAR = [(0, 0), (1, 1), (2, 2), (0, 3)]

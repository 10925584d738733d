"""
径向序引擎 - 主入口
"""
__version__ = "0.3.0"
__author__ = "RadialOrders Team"

"""
CLI 模块
gen / orderings / partition / walk / experiment / verify 子命令
"""
from .main import build_parser, main


__all__ = ["build_parser", "main"]

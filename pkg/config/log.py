"""
日志配置
"""
import logging
from typing import Optional

from rich.logging import RichHandler

from .settings import get_settings


def setup_logging(level: Optional[str] = None) -> None:
    """
    在根 logger 上安装 RichHandler

    Args:
        level: 日志级别（不传则使用配置中的 log_level）
    """
    level = (level or get_settings().log_level).upper()
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    root.addHandler(RichHandler(rich_tracebacks=True, show_path=False))
    root.setLevel(level)

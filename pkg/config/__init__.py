"""
配置模块
"""
from .settings import Settings, get_settings, VERSION
from .log import setup_logging

__all__ = ["Settings", "get_settings", "setup_logging", "VERSION"]

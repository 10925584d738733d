"""
配置管理模块
"""
from fractions import Fraction
from functools import lru_cache

from pydantic_settings import BaseSettings


VERSION = "0.3.0"


class Settings(BaseSettings):
    """应用配置"""

    # 运行规模
    face_budget: int = 2_000_000  # 预估面数 C(C(n,2),2) 的上限
    threads: int = 1  # 普查阶段的工作进程数

    # 随机点集生成
    grid_size: int = 1000
    random_retry_limit: int = 10000

    # 构造参数（有理数以 "n/d" 字符串给出）
    retry_budget: int = 64
    precision_floor: str = "1/1000000000000000000000000000000"
    four_pattern_epsilon: str = "1/1000"
    four_pattern_alpha_t: str = "1/10"
    four_pattern_delta: str = "1/10000000"
    circle_pattern_delta: str = "1/2000"
    circle_pattern_jitter: str = "1/50"

    # 普查完备性检验
    oracle_samples: int = 10000

    # 系统配置
    log_level: str = "INFO"
    tool_version: str = VERSION

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "RADIAL_"
        case_sensitive = False

    def rational(self, name: str) -> Fraction:
        """按字段名取出有理数参数"""
        return Fraction(getattr(self, name))


@lru_cache()
def get_settings() -> Settings:
    """获取配置单例"""
    return Settings()

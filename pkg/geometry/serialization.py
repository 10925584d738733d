"""
点集文件读写
坐标以 "numerator/denominator" 字符串精确保存，读入前用 JSON Schema 校验
"""
import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import jsonschema

from .exceptions import InvalidPointSetError
from .kernel import RationalPoint
from .pointset import Color, ColoredPointSet


logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "data" / "point_set.schema.json"

PathLike = Union[str, Path]


def _load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def format_rational(value: Fraction) -> str:
    """有理数写成 "n/d"（分母恒写出）"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    解析 "n/d" 或整数字符串

    Raises:
        InvalidPointSetError: 格式不合法或分母为零
    """
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidPointSetError(f"无法解析有理数: {text!r}") from e
    return value


def point_set_to_dict(s: ColoredPointSet, meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """点集转为可 JSON 序列化的字典"""
    points = []
    for i, p in enumerate(s.points):
        points.append({
            "x": format_rational(p.x),
            "y": format_rational(p.y),
            "color": s.colors[i].value if s.colors is not None else None,
        })
    document: Dict[str, Any] = {"points": points}
    if meta:
        document["meta"] = meta
    return document


def point_set_from_dict(document: Dict[str, Any]) -> Tuple[ColoredPointSet, Dict[str, Any]]:
    """
    从字典构造点集

    Args:
        document: 点集文件内容

    Returns:
        (点集, meta 字典)

    Raises:
        InvalidPointSetError: 不符合 schema，或颜色只给了一部分
    """
    try:
        jsonschema.validate(document, _load_schema())
    except jsonschema.ValidationError as e:
        raise InvalidPointSetError(f"点集文件格式错误: {e.message}") from e

    entries = document["points"]
    points = [RationalPoint(parse_rational(e["x"]), parse_rational(e["y"])) for e in entries]
    raw_colors = [e.get("color") for e in entries]
    if all(c is None for c in raw_colors):
        colors = None
    elif any(c is None for c in raw_colors):
        raise InvalidPointSetError("颜色必须全部给出或全部省略")
    else:
        colors = tuple(Color(c) for c in raw_colors)
    meta = document.get("meta", {})
    return ColoredPointSet(tuple(points), colors, balanced=bool(meta.get("balanced", False))), meta


def atomic_write_text(path: PathLike, text: str) -> None:
    """先写临时文件再 os.replace，保证输出文件要么完整要么不存在"""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_point_set(path: PathLike, s: ColoredPointSet, meta: Optional[Dict[str, Any]] = None) -> None:
    """写点集文件"""
    text = json.dumps(point_set_to_dict(s, meta), ensure_ascii=False, indent=2, sort_keys=False)
    atomic_write_text(path, text + "\n")
    logger.info("已写入点集 %s (%d 个点)", path, len(s))


def load_point_set(path: PathLike) -> Tuple[ColoredPointSet, Dict[str, Any]]:
    """
    读点集文件

    Raises:
        InvalidPointSetError: 文件不是合法 JSON 或内容不合法
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidPointSetError(f"{path} 不是合法的 JSON: {e}") from e
    s, meta = point_set_from_dict(document)
    logger.debug("读取点集 %s: %d 个点", path, len(s))
    return s, meta


def save_points(path: PathLike, points: Sequence[RationalPoint], meta: Optional[Dict[str, Any]] = None) -> None:
    """写无颜色的点列表（如指定观察点 q）"""
    document: Dict[str, Any] = {
        "points": [{"x": format_rational(p.x), "y": format_rational(p.y), "color": None} for p in points],
    }
    if meta:
        document["meta"] = meta
    atomic_write_text(path, json.dumps(document, ensure_ascii=False, indent=2) + "\n")


def load_points(path: PathLike) -> List[RationalPoint]:
    """读无颜色的点列表"""
    s, _ = load_point_set(path)
    return list(s.points)

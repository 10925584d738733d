"""
输出文件
CSV 首部以 "# " 注释行记录版本、种子与参数；SVG 画出排列的线段内部（虚线）与半线（实线）
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from arrangement import Arrangement, EdgeKind
from geometry.serialization import PathLike, atomic_write_text


SVG_SIZE = 800
SVG_MARGIN = 20
POINT_FILL = {"R": "#d62728", "B": "#1f77b4", None: "#000000"}


def _meta_value(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False, default=str)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]], meta: Dict[str, Any]) -> str:
    """
    带注释首部的 CSV 文本

    Args:
        header: 列名
        rows: 数据行，None 写为空
        meta: 写入 "# key: value" 注释行的参数
    """
    buffer = io.StringIO()
    for key, value in meta.items():
        buffer.write(f"# {key}: {_meta_value(value)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buffer.getvalue()


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]], meta: Dict[str, Any]) -> None:
    atomic_write_text(path, csv_text(header, rows, meta))


def read_csv_meta(text: str) -> Dict[str, str]:
    """解析 CSV 注释首部"""
    meta = {}
    for line in text.splitlines():
        if not line.startswith("# "):
            break
        key, _, value = line[2:].partition(": ")
        meta[key] = value
    return meta


def _transform(arr: Arrangement):
    # 盒坐标映射到画布，y 轴向下
    box = arr.box
    span = max(box.xmax - box.xmin, box.ymax - box.ymin)
    scale = Fraction(SVG_SIZE - 2 * SVG_MARGIN) / span

    def to_canvas(p):
        x = SVG_MARGIN + (p.x - box.xmin) * scale
        y = SVG_SIZE - SVG_MARGIN - (p.y - box.ymin) * scale
        return float(x), float(y)

    return to_canvas


def arrangement_svg(arr: Arrangement, show_representatives: bool = True) -> str:
    """
    排列的 SVG 文本

    半线为实线，线段内部为虚线，盒边为灰色细线；点集按颜色着色，面代表点为灰色小点
    """
    to_canvas = _transform(arr)
    lines: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="#ffffff"/>',
    ]
    for e in arr.edges:
        x1, y1 = to_canvas(arr.vertices[e.u].point)
        x2, y2 = to_canvas(arr.vertices[e.v].point)
        if e.kind == EdgeKind.BOX_BOUNDARY:
            style = 'stroke="#999999" stroke-width="0.5"'
        elif e.kind == EdgeKind.SEGMENT_INTERIOR:
            style = 'stroke="#444444" stroke-width="1" stroke-dasharray="4 3" class="segment"'
        else:
            style = 'stroke="#000000" stroke-width="1" class="half-line"'
        lines.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" {style}/>')
    if show_representatives:
        for face in arr.inner_faces():
            cx, cy = to_canvas(face.representative)
            lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="1.5" fill="#aaaaaa"/>')
    s = arr.points
    for i, p in enumerate(s.points):
        cx, cy = to_canvas(p)
        color = s.colors[i].value if s.colors is not None else None
        lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="4" fill="{POINT_FILL[color]}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: PathLike, arr: Arrangement) -> None:
    atomic_write_text(path, arrangement_svg(arr))

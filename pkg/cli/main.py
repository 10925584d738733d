#!/usr/bin/env python3
"""
径向序引擎 - CLI 命令行界面
"""
import sys
import os

# 添加项目根目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import argparse
from typing import List, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from arrangement import CSV_HEADER, build_arrangement, build_order_partition, check_budget, compute_stats
from config.log import setup_logging
from config.settings import get_settings
from constructions import GeneratorManager
from enumeration import EXPERIMENT_KINDS, census, census_oracle, growth_experiment, walk_around
from geometry.exceptions import DegenerateInputError, RadialOrderError
from geometry.pointset import validate_strong_general_position
from geometry.serialization import load_point_set, save_point_set, save_points
from verification import VerificationSuite

from cli.output import write_csv, write_svg


console = Console()

EXIT_OK = 0
EXIT_FAILURE = 1


def _run_meta(command: str, **params) -> dict:
    """写入每个输出文件的复现信息"""
    meta = {"tool_version": get_settings().tool_version, "command": command}
    meta.update(params)
    return meta


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"规模列表格式错误: {text!r}（应为 8,12,16）")


def cmd_gen(args, parser) -> int:
    """生成点集（lower4 另写指定观察点）"""
    manager = GeneratorManager()
    generator = manager.get_generator(args.kind)
    try:
        generator.validate_size(args.n)
    except DegenerateInputError as e:
        parser.error(str(e))
    kwargs = {}
    if args.colors:
        kwargs["colors"] = args.colors
    if args.kind == "upper2":
        kwargs["stabilize"] = not args.no_stabilize

    with console.status(f"[bold cyan]生成 {args.kind} 点集 (n={args.n})...[/bold cyan]"):
        generated = manager.run_generator(args.kind, args.n, args.seed, **kwargs)

    params = {"kind": args.kind, "n": args.n, "seed": args.seed}
    params.update(generated.metadata)
    meta = _run_meta("gen", **params)
    save_point_set(args.out, generated.points, meta)
    if generated.designated:
        qpath = args.qpoints or os.path.splitext(args.out)[0] + ".q.json"
        save_points(qpath, generated.designated, meta)
        console.print(f"[green]✓ 指定观察点 {len(generated.designated)} 个 -> {qpath}[/green]")

    table = Table(title="生成结果", show_header=True, header_style="bold magenta")
    table.add_column("项目", style="cyan")
    table.add_column("内容", style="green")
    table.add_row("类型", args.kind)
    table.add_row("点数", str(len(generated.points)))
    table.add_row("种子", str(args.seed))
    for key in ("attempts", "delta", "epsilon", "designated_cells"):
        if key in generated.metadata:
            table.add_row(key, str(generated.metadata[key]))
    table.add_row("输出", args.out)
    console.print(table)
    return EXIT_OK


def cmd_orderings(args, parser) -> int:
    """普查径向序"""
    settings = get_settings()
    s, _ = load_point_set(args.input)
    if args.colored and not s.is_colored:
        console.print("[yellow]⚠️  点集未着色，无法统计颜色径向序[/yellow]")
        return EXIT_FAILURE
    check_budget(len(s), settings.face_budget)
    with console.status("[bold cyan]构建排列并普查...[/bold cyan]"):
        result = census(s, threads=args.threads)

    if args.list:
        table = Table(title="径向序", show_header=True, header_style="bold magenta")
        table.add_column("#", style="dim")
        table.add_column("颜色词" if args.colored else "径向序", style="green")
        table.add_column("胞腔数", style="cyan")
        if args.colored:
            counts = {}
            for word in result.words.values():
                counts[word] = counts.get(word, 0) + 1
            items = sorted(counts.items(), key=lambda kv: kv[0].word)
        else:
            items = sorted(result.class_sizes.items(), key=lambda kv: kv[0].sequence)
        for k, (key, count) in enumerate(items):
            table.add_row(str(k), str(key), str(count))
        console.print(table)

    if args.oracle:
        report = census_oracle(s, result, samples=args.oracle, seed=args.seed)
        if not report.complete:
            console.print(f"[red]✗ 抽样发现 {len(report.missing)} 个未普查到的径向序[/red]")
            return EXIT_FAILURE
        console.print(f"[green]✓ {report.sampled} 个随机观察点的径向序均已普查到[/green]")

    if args.colored:
        console.print(f"rho_colored = {result.rho_colored}")
    else:
        console.print(f"rho = {result.rho}")
    if not args.count:
        console.print(f"[dim]胞腔 {result.order_cells}，面 {result.faces}[/dim]")
    return EXIT_OK


def cmd_partition(args, parser) -> int:
    """序划分统计与 SVG"""
    settings = get_settings()
    s, meta = load_point_set(args.input)
    check_budget(len(s), settings.face_budget)
    with console.status("[bold cyan]构建排列...[/bold cyan]"):
        arr = build_arrangement(s)
        partition = build_order_partition(arr)

    if args.stats or args.csv:
        stats = compute_stats(s, arr, partition)
        row = stats.csv_row()
        console.print(",".join(CSV_HEADER))
        console.print(",".join(str(v) for v in row))
        if args.csv:
            write_csv(args.csv, CSV_HEADER, [row], _run_meta("partition", input=args.input, seed=meta.get("seed")))
    else:
        console.print(f"胞腔 {partition.cell_count}，面 {arr.F}")
    if args.svg:
        write_svg(args.svg, arr)
        console.print(f"[green]✓ SVG -> {args.svg}[/green]")
    return EXIT_OK


def cmd_walk(args, parser) -> int:
    """绕点行走"""
    s, meta = load_point_set(args.input)
    report = validate_strong_general_position(s)
    if not report:
        console.print(f"[red]✗ 点集不满足强一般位置: {report.message}[/red]")
        return EXIT_FAILURE
    trace = walk_around(s, args.center)
    rows = []
    for k, event in enumerate(trace.events):
        word = str(trace.words_seen[k]) if trace.words_seen else None
        rows.append((k, event.partner, str(trace.orders_seen[k]), word))

    if args.csv:
        write_csv(args.csv, ("event", "partner", "order", "color_word"), rows,
                  _run_meta("walk", input=args.input, center=args.center, radius=str(trace.radius),
                            seed=meta.get("seed")))
    ok = trace.consecutive_swaps_ok() and trace.composes_to_identity()
    console.print(Panel(
        f"事件 {len(trace.events)}，不同颜色词 {trace.distinct_color_words}，半径 {trace.radius}\n"
        f"相邻对换 {'✓' if trace.consecutive_swaps_ok() else '✗'}  复合为恒等 {'✓' if trace.composes_to_identity() else '✗'}",
        title=f"绕点 {args.center} 行走",
        border_style="green" if ok else "red",
    ))
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_experiment(args, parser) -> int:
    """增长实验"""
    with console.status(f"[bold cyan]实验 {args.kind} {args.sizes}...[/bold cyan]"):
        table_data = growth_experiment(args.kind, args.sizes, args.seed, with_census=not args.no_census)

    table = Table(title=f"增长实验 ({args.kind})", show_header=True, header_style="bold magenta")
    for name in table_data.header:
        table.add_column(name, style="cyan")
    for row in table_data.rows:
        table.add_row(*("-" if v is None else str(v) for v in row))
    console.print(table)
    if args.csv:
        write_csv(args.csv, table_data.header, table_data.rows, table_data.meta)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    """运行检验套件"""
    s, _ = load_point_set(args.input)
    suite = VerificationSuite()
    names = [n for n in args.checks.split(",") if n] if args.checks else None
    for name in names or ():
        if name not in suite.list_checks():
            parser.error(f"未知检验: {name}（可选: {', '.join(suite.list_checks())}）")
    report = suite.run(s, names)

    if not report.validation:
        console.print(Panel(report.validation.message, title="强一般位置校验失败", border_style="red"))
        return EXIT_FAILURE

    table = Table(title="检验结果", show_header=True, header_style="bold magenta")
    table.add_column("检验", style="cyan")
    table.add_column("结果")
    table.add_column("说明", style="dim")
    for result in report.results:
        mark = "[green]✓ 通过[/green]" if result.success else "[red]✗ 失败[/red]"
        table.add_row(result.name, mark, result.message)
    console.print(table)
    if report.stats is not None:
        console.print(",".join(CSV_HEADER))
        console.print(",".join(str(v) for v in report.stats.csv_row()))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_version(args, parser) -> int:
    console.print(f"径向序引擎 v{get_settings().tool_version}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="径向序引擎 - 点集径向序与序划分的精确计算")
    parser.add_argument("--log-level", default=None, help="日志级别（默认取 RADIAL_LOG_LEVEL）")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="生成点集")
    p.add_argument("--kind", required=True, choices=GeneratorManager().list_generators())
    p.add_argument("--n", type=int, required=True, help="规模（upper2/lower4 为每色点数）")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--colors", choices=["balanced"], default=None, help="random/convex 的着色方式")
    p.add_argument("--no-stabilize", action="store_true", help="upper2 不做 δ 稳定化")
    p.add_argument("--out", required=True, help="点集文件")
    p.add_argument("--qpoints", default=None, help="lower4 指定观察点文件")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("orderings", help="普查径向序")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--colored", action="store_true", help="统计颜色径向序")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", help="列出所有径向序")
    group.add_argument("--count", action="store_true", help="只输出个数")
    p.add_argument("--threads", type=int, default=None, help="工作进程数（默认取 RADIAL_THREADS）")
    p.add_argument("--oracle", type=int, default=0, help="随机观察点抽样核对的个数")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_orderings)

    p = sub.add_parser("partition", help="序划分统计")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--stats", action="store_true", help="输出统计行")
    p.add_argument("--csv", default=None)
    p.add_argument("--svg", default=None)
    p.set_defaults(handler=cmd_partition)

    p = sub.add_parser("walk", help="绕点行走")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--center", type=int, required=True)
    p.add_argument("--csv", default=None)
    p.set_defaults(handler=cmd_walk)

    p = sub.add_parser("experiment", help="增长实验")
    p.add_argument("--kind", required=True, choices=EXPERIMENT_KINDS)
    p.add_argument("--sizes", type=_parse_sizes, required=True, help="如 8,12,16")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-census", action="store_true", help="跳过普查")
    p.add_argument("--csv", default=None)
    p.set_defaults(handler=cmd_experiment)

    p = sub.add_parser("verify", help="运行检验套件")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--checks", default=None, help="逗号分隔的检验名，默认全部")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("version", help="版本信息")
    p.set_defaults(handler=cmd_version)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.handler(args, parser)
    except RadialOrderError as e:
        console.print(f"[red]✗ {type(e).__name__}: {e}[/red]")
        return EXIT_FAILURE
    except OSError as e:
        console.print(f"[red]✗ 文件错误: {e}[/red]")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

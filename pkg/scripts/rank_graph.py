#!/usr/bin/env python3
"""
秩对照脚本
读取三色图文件，比较 c-关联矩阵的精确秩与闭式公式
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from config_utils import RunConfig, add_common_arguments, resolve_run_config
from file_utils import GraphFormatError, expand_path, read_graphs
from format_utils import render_report
from graph_utils import ColoredGraph
from rank_utils import build_cincidence, rank_exact, rank_formula


HELP = "比较三色图的精确秩与公式秩"


def build_report(graphs: List[ColoredGraph]) -> Dict[str, Any]:
    results = []
    for g in graphs:
        exact = rank_exact(build_cincidence(g))
        formula = rank_formula(g)
        results.append({"exact": exact, "formula": formula, "agree": exact == formula})
    return {
        "command": "rank",
        "results": results,
        "agree": all(r["agree"] for r in results),
    }


def validate_options(options: Dict[str, Any]) -> List[str]:
    """命令专属参数检查，返回错误消息列表"""
    if not options.get("path"):
        return ["缺少输入文件 path"]
    return []


def execute(config: RunConfig) -> int:
    path = config.options["path"]
    try:
        graphs = read_graphs(expand_path(path))
    except GraphFormatError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    if not graphs:
        print(f"错误: 文件中没有图: {path}", file=sys.stderr)
        return 2

    report = build_report(graphs)
    print(render_report(report, config.format))
    return 0 if report["agree"] else 1


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", type=str, help="三色图文本文件")
    add_common_arguments(parser, jobs=False)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("rank", args)
    except (ValueError, FileNotFoundError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    config.options["path"] = args.path
    return execute(config)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=HELP)
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

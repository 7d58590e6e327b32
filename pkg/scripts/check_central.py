#!/usr/bin/env python3
"""
中心性对照脚本
读取子排列文件，分别用三色图判定和线性方程组判定中心性
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from arrangement_utils import CONFLICT, DIAGONAL, Subarrangement, classify_linear, to_colored_graph
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from file_utils import GraphFormatError, expand_path, read_subarrangements
from format_utils import render_report
from graph_utils import is_central
from rank_utils import rank_formula


HELP = "用两种方法判定子排列是否中心"


def check_one(s: Subarrangement) -> Dict[str, Any]:
    """
    单个子排列的两种判定

    Returns:
        graph_central 为 True / False / "CONFLICT"；含对角墙时为 None
    """
    linear_central, linear_rank = classify_linear(s)
    result = {"graph_central": None, "linear_central": linear_central,
              "graph_rank": None, "linear_rank": linear_rank, "agree": True}

    if any(wall.kind == DIAGONAL for wall in s.walls):
        return result

    g = to_colored_graph(s)
    if g is CONFLICT:
        result["graph_central"] = "CONFLICT"
        result["agree"] = not linear_central
        return result

    result["graph_central"] = is_central(g)
    result["graph_rank"] = rank_formula(g)
    result["agree"] = (result["graph_central"] == linear_central
                       and result["graph_rank"] == linear_rank)
    return result


def build_report(subs: List[Subarrangement]) -> Dict[str, Any]:
    results = [check_one(s) for s in subs]
    return {
        "command": "central",
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
        subs = read_subarrangements(expand_path(path))
    except GraphFormatError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    if not subs:
        print(f"错误: 文件中没有子排列: {path}", file=sys.stderr)
        return 2

    report = build_report(subs)
    print(render_report(report, config.format))
    return 0 if report["agree"] else 1


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", type=str, help="子排列文本文件")
    add_common_arguments(parser, jobs=False)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("central", args)
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

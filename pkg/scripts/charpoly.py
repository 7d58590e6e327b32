#!/usr/bin/env python3
"""
特征多项式脚本
用一种或多种方法计算 J_n 的特征多项式，并给出区域数与相对有界区域数
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from charpoly_utils import (
    METHODS, arrangement_rank, bounded_chambers, chambers, compute_charpoly
)
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from format_utils import render_report
from rank_utils import PreconditionError


HELP = "计算 J_n 的特征多项式"


def selected_methods(method: str, include_diagonal: bool) -> List[str]:
    """
    展开 --method

    Args:
        method: 方法名或 all
        include_diagonal: 含对角墙时只有 bruteforce 可用

    Returns:
        方法列表
    """
    if method == "all":
        return ["bruteforce"] if include_diagonal else list(METHODS)
    return [method]


def build_report(config: RunConfig) -> Dict[str, Any]:
    """
    计算报告

    Args:
        config: 运行配置

    Returns:
        报告字典

    Raises:
        LimitExceededError: 超出限额
        PreconditionError: 区域数非正
    """
    n = config.n
    polys = {}
    for method in selected_methods(config.method, config.include_diagonal):
        polys[method] = compute_charpoly(method, n, config.limits, config.jobs,
                                         config.include_diagonal, config.progress)

    first = next(iter(polys.values()))
    rank = arrangement_rank(n, config.include_diagonal)
    return {
        "command": "charpoly",
        "n": n,
        "include_diagonal": config.include_diagonal,
        "polynomials": {method: poly.to_dict() for method, poly in polys.items()},
        "agree": len(set(polys.values())) == 1,
        "rank": rank,
        "chambers": chambers(first, n),
        "bounded_chambers": bounded_chambers(first, rank),
    }


def execute(config: RunConfig) -> int:
    try:
        report = build_report(config)
    except PreconditionError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2

    print(render_report(report, config.format))
    return 0 if report["agree"] else 1


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="维数")
    parser.add_argument("--method", type=str, default="all",
                        choices=list(METHODS) + ["all"],
                        help="计算方法，默认 all（三种方法互相对照）")
    parser.add_argument("--include-diagonal", action="store_true",
                        help="加入对角墙 2x_a = 1（仅 bruteforce）")
    add_common_arguments(parser)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("charpoly", args)
    except (ValueError, FileNotFoundError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    return execute(config)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=HELP)
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

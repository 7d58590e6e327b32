#!/usr/bin/env python3
"""
有限域对照脚本
在若干素数 q 上比较特征多项式的值与 F_q^n 中不在任何墙上的点数
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from charpoly_utils import compute_charpoly, finite_field_count
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from format_utils import render_report


HELP = "在有限域上对照特征多项式"


def build_report(config: RunConfig) -> Dict[str, Any]:
    """
    计算报告

    含对角墙时多项式只能由 bruteforce 得到，否则用闭式计数。

    Args:
        config: 运行配置

    Returns:
        报告字典
    """
    method = "bruteforce" if config.include_diagonal else "census"
    poly = compute_charpoly(method, config.n, config.limits, config.jobs,
                            config.include_diagonal, config.progress)
    checks = []
    for q in config.primes:
        count = finite_field_count(config.n, q, config.limits.get("point_budget"),
                                   config.include_diagonal)
        checks.append({"q": q, "charpoly": poly(q), "count": count, "agree": poly(q) == count})
    return {
        "command": "ffcheck",
        "n": config.n,
        "include_diagonal": config.include_diagonal,
        "polynomial": poly.to_dict(),
        "checks": checks,
        "agree": all(check["agree"] for check in checks),
    }


def execute(config: RunConfig) -> int:
    try:
        report = build_report(config)
    except ValueError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2

    print(render_report(report, config.format))
    return 0 if report["agree"] else 1


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="维数")
    parser.add_argument("--primes", type=str, default=None,
                        help="逗号分隔的素数列表，默认取配置 verify.primes")
    parser.add_argument("--include-diagonal", action="store_true",
                        help="同时排除对角墙 2x_a = 1")
    add_common_arguments(parser)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("ffcheck", args)
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

#!/usr/bin/env python3
"""
γ 表脚本
用闭式公式统计 [n] 上中心三色图的 (秩, 基数) 分布，可选用暴力枚举对照
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from census_utils import PAIRING_MODES, gamma_table_bruteforce, gamma_table_census
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from format_utils import render_report


HELP = "按秩和基数统计中心三色图"


def build_report(config: RunConfig) -> Dict[str, Any]:
    """
    计算 γ 表，oracle 选项打开时附带暴力枚举与差异

    Args:
        config: 运行配置，options 中含 oracle 与 pairing

    Returns:
        报告字典
    """
    pairing = config.options.get("pairing", "pairs")
    table = gamma_table_census(config.n, pairing, config.limits.get("census_max_n"))
    report = {
        "command": "census",
        "n": config.n,
        "pairing": pairing,
        "total": table.total,
        "table": table.to_dict(),
        "oracle": None,
        "diff": [],
        "agree": None,
    }

    if config.options.get("oracle"):
        oracle = gamma_table_bruteforce(config.n, config.limits.get("enumerate_max_n"),
                                        config.jobs, config.progress)
        diff = table.diff(oracle)
        report["oracle"] = oracle.to_dict()
        report["diff"] = [list(row) for row in diff]
        report["agree"] = not diff
    return report


def execute(config: RunConfig) -> int:
    try:
        report = build_report(config)
    except ValueError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2

    print(render_report(report, config.format))
    return 1 if report["agree"] is False else 0


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="顶点数")
    parser.add_argument("--oracle", action="store_true", help="同时暴力枚举并对照")
    parser.add_argument("--pairing", type=str, default="pairs", choices=list(PAIRING_MODES),
                        help="重复分支的约化方式，默认 pairs")
    add_common_arguments(parser)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("census", args)
    except (ValueError, FileNotFoundError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    config.options.update(oracle=args.oracle, pairing=args.pairing)
    return execute(config)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=HELP)
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

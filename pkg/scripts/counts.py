#!/usr/bin/env python3
"""
分支计数脚本
按基数列出连通图、连通二部图、非二部连通图、第二类与第三类中心图的个数
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from census_utils import (
    colorless_bruteforce, max_cardinality, nu_bipartite_connected, nu_connected,
    nu_nonbipartite_connected, nu_second, nu_second_bruteforce, nu_third,
    nu_third_bruteforce_table, nu_third_variant
)
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from format_utils import render_report


HELP = "按基数列出分支计数"

KINDS = ("connected", "bipartite", "nonbipartite", "second", "third")

FORMULAS: Dict[str, Callable[[int, int], int]] = {
    "connected": nu_connected,
    "bipartite": nu_bipartite_connected,
    "nonbipartite": nu_nonbipartite_connected,
    "second": nu_second,
    "third": nu_third,
}


def cardinality_range(kind: str, k: int) -> range:
    """无色分支的基数就是边数；带色的还要加着色顶点数"""
    if kind in ("connected", "bipartite", "nonbipartite"):
        return range(k * (k - 1) // 2 + 1)
    return range(max_cardinality(k) + 1)


def oracle_counts(kind: str, k: int, limit: Optional[int]) -> Dict[int, int]:
    """
    暴力枚举得到的 基数 -> 个数

    Args:
        kind: 分支类别
        k: 顶点数
        limit: oracle_max_k

    Returns:
        基数 -> 个数
    """
    if kind == "third":
        return nu_third_bruteforce_table(k, limit)
    if kind == "second":
        return {s: nu_second_bruteforce(k, s, limit) for s in cardinality_range(kind, k)}

    connected, bipartite = colorless_bruteforce(k, limit)
    if kind == "connected":
        return connected
    if kind == "bipartite":
        return bipartite
    return {s: connected.get(s, 0) - bipartite.get(s, 0) for s in connected}


def build_report(config: RunConfig) -> Dict[str, Any]:
    """
    计算报告

    Args:
        config: 运行配置，options 中含 kind、k、oracle、diagnostic

    Returns:
        报告字典
    """
    kind = config.options["kind"]
    k = config.options["k"]
    diagnostic = bool(config.options.get("diagnostic")) and kind == "third"
    with_oracle = bool(config.options.get("oracle")) or diagnostic

    columns: List[str] = ["s", "formula"]
    if diagnostic:
        columns.append("variant")
    oracle = None
    if with_oracle:
        columns.append("oracle")
        oracle = oracle_counts(kind, k, config.limits.get("oracle_max_k"))

    formula = FORMULAS[kind]
    rows = []
    for s in cardinality_range(kind, k):
        row = {"s": s, "formula": formula(k, s)}
        if diagnostic:
            row["variant"] = nu_third_variant(k, s)
        if oracle is not None:
            row["oracle"] = oracle.get(s, 0)
        rows.append(row)

    report = {"command": "counts", "kind": kind, "k": k, "columns": columns, "rows": rows,
              "agree": None, "variant_failures": None}
    if oracle is not None:
        report["agree"] = all(row["formula"] == row["oracle"] for row in rows)
    if diagnostic:
        report["variant_failures"] = [row["s"] for row in rows if row["variant"] != row["oracle"]]
    return report


def validate_options(options: Dict[str, Any]) -> List[str]:
    """
    命令专属参数检查

    Args:
        options: RunConfig.options

    Returns:
        错误消息列表，空列表表示验证通过
    """
    errors = []
    if options.get("kind") not in KINDS:
        errors.append(f"kind 必须是 {', '.join(KINDS)} 之一: {options.get('kind')}")
    k = options.get("k")
    if not isinstance(k, int) or k < 1:
        errors.append(f"k 必须 >= 1: {k}")
    return errors


def execute(config: RunConfig) -> int:
    try:
        report = build_report(config)
    except ValueError as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2

    print(render_report(report, config.format))
    return 1 if report["agree"] is False else 0


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", type=str, required=True, choices=list(KINDS), help="分支类别")
    parser.add_argument("--k", type=int, required=True, help="顶点数")
    parser.add_argument("--oracle", action="store_true", help="同时暴力枚举并对照")
    parser.add_argument("--diagnostic", action="store_true",
                        help="第三类：同时列出另一种下标写法的结果")
    add_common_arguments(parser, jobs=False)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("counts", args)
    except (ValueError, FileNotFoundError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    config.options.update(kind=args.kind, k=args.k, oracle=args.oracle,
                          diagnostic=args.diagnostic)
    errors = validate_options(config.options)
    if errors:
        print(f"错误: {'; '.join(errors)}", file=sys.stderr)
        return 2
    return execute(config)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=HELP)
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

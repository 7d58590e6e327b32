#!/usr/bin/env python3
"""
全面对照脚本
依次运行秩公式、中心性、三种特征多项式、分支计数、γ 表与有限域点数的交叉验证，
每项报告第一个反例（按穷举顺序）
"""
import argparse
import random
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

# 添加 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent / "utils"))

from arrangement_utils import build_jn, first_centrality_mismatch, subarrangement_from_mask
from census_utils import (
    colorless_bruteforce, gamma_table_bruteforce, gamma_table_census, max_cardinality,
    nu_bipartite_connected, nu_connected, nu_third, nu_third_bruteforce_table
)
from charpoly_utils import charpoly_bruteforce, charpoly_census, charpoly_graph, finite_field_count
from config_utils import RunConfig, add_common_arguments, resolve_run_config
from file_utils import format_graph, format_subarrangement
from format_utils import render_report
from graph_utils import colored_graph_from_index, count_colored_graphs, random_colored_graph
from parallel_utils import run_sharded
from rank_utils import build_cincidence, first_rank_mismatch, rank_exact, rank_formula


HELP = "运行全部交叉验证"


def _result(name: str, cases: int, counterexample: Optional[str] = None) -> Dict[str, Any]:
    return {"name": name, "cases": cases, "agree": counterexample is None,
            "counterexample": counterexample}


def _first_hit(parts: List[Optional[int]]) -> Optional[int]:
    """分片按顺序归并，第一个非空结果就是全局第一个反例"""
    for hit in parts:
        if hit is not None:
            return hit
    return None


def check_rank_formula(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    top = min(config.n, config.limits["enumerate_max_n"])
    for m in range(1, top + 1):
        total = count_colored_graphs(m)
        hit = _first_hit(run_sharded(first_rank_mismatch, (m,), total, config.jobs,
                                     config.progress))
        if hit is not None:
            g = colored_graph_from_index(m, hit)
            return _result("rank_formula", cases + hit + 1, format_graph(g))
        cases += total
    return _result("rank_formula", cases)


def check_rank_random(config: RunConfig) -> Dict[str, Any]:
    rng = random.Random(config.seed)
    for i in range(config.random_samples):
        m = rng.randint(1, config.random_max_n)
        g = random_colored_graph(m, rng)
        if rank_exact(build_cincidence(g)) != rank_formula(g):
            return _result("rank_random", i + 1, format_graph(g))
    return _result("rank_random", config.random_samples)


def check_centrality(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    top = min(config.n, config.limits["subset_max_n"])
    for m in range(1, top + 1):
        walls = build_jn(m)
        total = 1 << len(walls)
        hit = _first_hit(run_sharded(first_centrality_mismatch, (m,), total, config.jobs,
                                     config.progress))
        if hit is not None:
            s = subarrangement_from_mask(m, walls, hit)
            return _result("centrality", cases + hit + 1, format_subarrangement(s))
        cases += total
    return _result("centrality", cases)


def check_charpoly(config: RunConfig) -> Dict[str, Any]:
    limits = config.limits
    for m in range(1, config.n + 1):
        polys = {"census": charpoly_census(m, limits["census_max_n"])}
        if m <= limits["graph_max_n"]:
            polys["graph"] = charpoly_graph(m, limits["graph_max_n"], config.jobs, config.progress)
        if m <= limits["bruteforce_max_n"]:
            polys["bruteforce"] = charpoly_bruteforce(m, limits["bruteforce_max_n"],
                                                      jobs=config.jobs, progress=config.progress)
        if len(set(polys.values())) != 1:
            lines = [f"n={m}"] + [f"{method}: {poly}" for method, poly in sorted(polys.items())]
            return _result("charpoly", m, "\n".join(lines))
    return _result("charpoly", config.n)


def check_nu_counts(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    top = min(config.n, config.limits["oracle_max_k"])
    for k in range(1, top + 1):
        connected, bipartite = colorless_bruteforce(k, config.limits["oracle_max_k"])
        for s in range(k * (k - 1) // 2 + 1):
            cases += 1
            if nu_connected(k, s) != connected.get(s, 0):
                return _result("nu_counts", cases,
                               f"connected k={k} s={s}: formula={nu_connected(k, s)} "
                               f"oracle={connected.get(s, 0)}")
            if nu_bipartite_connected(k, s) != bipartite.get(s, 0):
                return _result("nu_counts", cases,
                               f"bipartite k={k} s={s}: formula={nu_bipartite_connected(k, s)} "
                               f"oracle={bipartite.get(s, 0)}")
    return _result("nu_counts", cases)


def check_nu_third(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    top = min(config.n, config.limits["oracle_max_k"])
    for k in range(1, top + 1):
        oracle = nu_third_bruteforce_table(k, config.limits["oracle_max_k"])
        for s in range(max_cardinality(k) + 1):
            cases += 1
            if nu_third(k, s) != oracle.get(s, 0):
                return _result("nu_third", cases,
                               f"k={k} s={s}: formula={nu_third(k, s)} oracle={oracle.get(s, 0)}")
    return _result("nu_third", cases)


def check_gamma(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    top = min(config.n, config.limits["enumerate_max_n"])
    for m in range(1, top + 1):
        census = gamma_table_census(m, limit=config.limits["census_max_n"])
        oracle = gamma_table_bruteforce(m, config.limits["enumerate_max_n"], config.jobs,
                                        config.progress)
        diff = census.diff(oracle)
        cases += len(set(census.entries) | set(oracle.entries))
        if diff:
            k, s, ours, theirs = diff[0]
            return _result("gamma", cases, f"n={m} k={k} s={s}: census={ours} oracle={theirs}")
    return _result("gamma", cases)


def check_finite_field(config: RunConfig) -> Dict[str, Any]:
    cases = 0
    budget = config.limits["point_budget"]
    for m in range(1, config.n + 1):
        poly = charpoly_census(m, config.limits["census_max_n"])
        for q in config.primes:
            if q ** m > budget:
                continue
            cases += 1
            count = finite_field_count(m, q, budget)
            if poly(q) != count:
                return _result("finite_field", cases,
                               f"n={m} q={q}: charpoly={poly(q)} count={count}")
    return _result("finite_field", cases)


CHECKS: List[Callable[[RunConfig], Dict[str, Any]]] = [
    check_rank_formula,
    check_rank_random,
    check_centrality,
    check_charpoly,
    check_nu_counts,
    check_nu_third,
    check_gamma,
    check_finite_field,
]


def build_report(config: RunConfig) -> Dict[str, Any]:
    checks = [check(config) for check in CHECKS]
    return {
        "command": "verify",
        "n": config.n,
        "seed": config.seed,
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
    parser.add_argument("--n", type=int, required=True, help="最大维数")
    parser.add_argument("--seed", type=int, default=None, help="随机图的种子，默认 0")
    parser.add_argument("--samples", type=int, default=None,
                        help="随机图个数，默认取配置 verify.random_samples")
    parser.add_argument("--primes", type=str, default=None,
                        help="逗号分隔的素数列表，默认取配置 verify.primes")
    add_common_arguments(parser)


def run(args: argparse.Namespace) -> int:
    try:
        config = resolve_run_config("verify", args)
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

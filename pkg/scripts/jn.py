#!/usr/bin/env python3
"""
J_n 计数工具入口
把各子命令挂到同一个解析器上，按子命令分派
"""
import argparse
import sys
from pathlib import Path

# 添加 scripts 与 utils 目录到路径
sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent / "utils"))

import census
import charpoly
import check_central
import counts
import ffcheck
import rank_graph
import verify
from config_utils import RunConfig, validate_run_config


COMMAND_MODULES = {
    "charpoly": charpoly,
    "census": census,
    "counts": counts,
    "rank": rank_graph,
    "central": check_central,
    "ffcheck": ffcheck,
    "verify": verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jn",
        description="超平面排列 J_n 的特征多项式与中心子排列计数",
        epilog="环境变量 CENSUS_BUDGET 可覆盖枚举限额，例如 CENSUS_BUDGET=bruteforce_max_n=6",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, module in COMMAND_MODULES.items():
        sub = subparsers.add_parser(name, help=module.HELP, description=module.HELP)
        module.add_arguments(sub)
        sub.set_defaults(handler=module.run)
    return parser


def run(config: RunConfig) -> int:
    """
    按已构建好的 RunConfig 执行子命令

    Args:
        config: 运行配置；命令专属参数放在 options 中

    Returns:
        退出码
    """
    module = COMMAND_MODULES.get(config.command)
    errors = validate_run_config(config)
    validate_options = getattr(module, "validate_options", None)
    if validate_options is not None:
        errors += validate_options(config.options)
    if errors:
        print(f"错误: {'; '.join(errors)}", file=sys.stderr)
        return 2
    return module.execute(config)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())

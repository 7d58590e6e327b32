"""
配置处理工具模块
处理 jn_census.yaml 的读取、合并、环境变量覆盖以及运行配置校验
"""
import copy
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml


CONFIG_FILE_NAME = "jn_census.yaml"
BUDGET_ENV_VAR = "CENSUS_BUDGET"

COMMANDS = ("charpoly", "census", "counts", "rank", "central", "ffcheck", "verify")
FORMATS = ("text", "json", "csv")

DEFAULT_CONFIG = {
    "limits": {
        # 穷举着色图: 3^n * 2^(n(n-1)/2)
        "enumerate_max_n": 6,
        # 子排列穷举: 2^(n(n-1)/2 + 2n)
        "bruteforce_max_n": 5,
        "graph_max_n": 6,
        "census_max_n": 10,
        "oracle_max_k": 6,
        # verify 中的中心性对照扫描
        "subset_max_n": 4,
        # 有限域点数
        "point_budget": 10 ** 8,
    },
    "verify": {
        "primes": [5, 7, 11, 13],
        "random_samples": 200,
        "random_max_n": 9,
        "seed": 0,
    },
    "jobs": 1,
    "format": "text",
}

# 这些限额是“数量”而不是 n，CENSUS_BUDGET 为纯整数时只覆盖它们
COUNT_LIMITS = ("point_budget",)


class LimitExceededError(ValueError):
    """枚举规模超出配置的限额"""


def read_config_file(path: Path) -> Optional[Dict[str, Any]]:
    """
    读取配置文件（YAML 或 JSON）

    Args:
        path: 文件路径

    Returns:
        解析后的数据，文件不存在返回 None

    Raises:
        ValueError: 文件内容不是映射
    """
    if not path.exists():
        return None

    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix == ".json":
            data = json.loads(text)
        else:
            data = yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ValueError(f"配置文件解析失败 {path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"配置文件必须是映射: {path}")
    return data


def merge_configs(old: Dict[str, Any], new: Mapping[str, Any]) -> Dict[str, Any]:
    """
    合并两个配置

    嵌套字典递归合并；列表和标量整体替换（素数列表等不做追加）。

    Args:
        old: 旧配置
        new: 新配置

    Returns:
        合并后的配置
    """
    merged = copy.deepcopy(old)

    for key, value in new.items():
        if key in merged and isinstance(merged[key], dict) and isinstance(value, Mapping):
            merged[key] = merge_configs(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)

    return merged


def apply_env_overrides(config: Dict[str, Any],
                        environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """
    应用 CENSUS_BUDGET 环境变量

    取值为纯整数时覆盖所有计数型限额；取值为 ``key=value,...`` 时覆盖指定限额。

    Args:
        config: 配置
        environ: 环境变量映射，默认 os.environ

    Returns:
        覆盖后的配置

    Raises:
        ValueError: 环境变量格式无效
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(BUDGET_ENV_VAR, "").strip()
    if not raw:
        return config

    config = copy.deepcopy(config)
    limits = config.setdefault("limits", {})

    if raw.isdigit():
        for name in COUNT_LIMITS:
            limits[name] = int(raw)
        return config

    for item in raw.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULT_CONFIG["limits"]:
            raise ValueError(f"{BUDGET_ENV_VAR} 中的限额无效: {item!r}")
        limits[key] = int(value)

    return config


def load_config(path: Optional[Path] = None,
                environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """
    加载完整配置：默认值 <- 配置文件 <- 环境变量

    Args:
        path: 显式配置文件路径；为空时查找当前目录下的 jn_census.yaml
        environ: 环境变量映射

    Returns:
        配置字典
    """
    config = copy.deepcopy(DEFAULT_CONFIG)

    if path is None:
        candidate = Path.cwd() / CONFIG_FILE_NAME
        path = candidate if candidate.exists() else None
    elif not path.exists():
        raise FileNotFoundError(f"配置文件不存在: {path}")

    if path is not None:
        data = read_config_file(path)
        if data:
            config = merge_configs(config, data)

    return apply_env_overrides(config, environ)


def check_limit(name: str, value: int, limits: Mapping[str, int]) -> None:
    """
    检查枚举规模是否在限额内

    Args:
        name: 限额名称
        value: 实际规模
        limits: 限额表

    Raises:
        LimitExceededError: 超出限额
    """
    limit = limits.get(name, DEFAULT_CONFIG["limits"][name])
    if value > limit:
        raise LimitExceededError(f"{name}: {value} 超出限额 {limit}")


def parse_int_list(text: str) -> List[int]:
    """
    解析逗号分隔的整数列表

    Args:
        text: 例如 "5,7,11"

    Returns:
        整数列表
    """
    return [int(item.strip()) for item in text.split(",") if item.strip()]


@dataclass
class RunConfig:
    """一次命令行运行的完整配置"""
    command: str
    n: int = 1
    method: str = "all"
    format: str = "text"
    limits: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_CONFIG["limits"]))
    seed: int = 0
    jobs: int = 1
    primes: List[int] = field(default_factory=lambda: list(DEFAULT_CONFIG["verify"]["primes"]))
    random_samples: int = 0
    random_max_n: int = 9
    include_diagonal: bool = False
    progress: bool = False
    options: Dict[str, Any] = field(default_factory=dict)


def build_run_config(command: str, args: Any, config: Dict[str, Any]) -> RunConfig:
    """
    从命令行参数与配置字典构建 RunConfig

    命令行显式给出的值优先于配置文件。

    Args:
        command: 子命令
        args: argparse 结果
        config: load_config 的结果

    Returns:
        RunConfig
    """
    verify = config.get("verify", {})
    primes = getattr(args, "primes", None)
    seed = getattr(args, "seed", None)
    jobs = getattr(args, "jobs", None)
    fmt = getattr(args, "format", None)
    samples = getattr(args, "samples", None)
    n = getattr(args, "n", None)

    return RunConfig(
        command=command,
        n=1 if n is None else n,
        method=getattr(args, "method", None) or "all",
        format=fmt or config.get("format", "text"),
        limits=dict(config.get("limits", {})),
        seed=verify.get("seed", 0) if seed is None else seed,
        jobs=config.get("jobs", 1) if jobs is None else jobs,
        primes=list(verify.get("primes", [])) if primes is None else parse_int_list(primes),
        random_samples=verify.get("random_samples", 0) if samples is None else samples,
        random_max_n=verify.get("random_max_n", 9),
        include_diagonal=bool(getattr(args, "include_diagonal", False)),
        progress=bool(getattr(args, "progress", False)),
    )


def validate_run_config(config: RunConfig) -> List[str]:
    """
    验证运行配置

    Args:
        config: 运行配置

    Returns:
        错误消息列表，空列表表示验证通过
    """
    errors = []

    if config.command not in COMMANDS:
        errors.append(f"未知命令: {config.command}")
    if config.n < 1:
        errors.append(f"n 必须 >= 1: {config.n}")
    if config.format not in FORMATS:
        errors.append(f"输出格式无效: {config.format}")
    if config.jobs < 1:
        errors.append(f"jobs 必须 >= 1: {config.jobs}")
    if config.random_samples < 0:
        errors.append(f"samples 不能为负: {config.random_samples}")

    for name, value in config.limits.items():
        if name not in DEFAULT_CONFIG["limits"]:
            errors.append(f"未知限额: {name}")
        elif not isinstance(value, int) or value <= 0:
            errors.append(f"限额必须为正整数: {name}={value}")

    for q in config.primes:
        if q < 5:
            errors.append(f"素数必须 >= 5: {q}")

    return errors


def add_common_arguments(parser: Any, jobs: bool = True) -> None:
    """
    所有子命令共用的参数

    Args:
        parser: argparse 解析器
        jobs: 是否支持 --jobs / --progress
    """
    parser.add_argument("--config", type=str, default=None,
                        help=f"配置文件，默认当前目录下的 {CONFIG_FILE_NAME}")
    parser.add_argument("--format", type=str, default=None, choices=list(FORMATS),
                        help="输出格式，默认 text")
    if jobs:
        parser.add_argument("--jobs", type=int, default=None,
                            help="并行进程数，默认 1")
        parser.add_argument("--progress", action="store_true",
                            help="在 stderr 上显示进度条")


def resolve_run_config(command: str, args: Any,
                       environ: Optional[Mapping[str, str]] = None) -> RunConfig:
    """
    加载配置、合并命令行参数并校验

    Args:
        command: 子命令
        args: argparse 结果
        environ: 环境变量映射

    Returns:
        RunConfig

    Raises:
        ValueError: 配置无效
        FileNotFoundError: 显式给出的配置文件不存在
    """
    path = getattr(args, "config", None)
    config = load_config(Path(path).expanduser() if path else None, environ)
    run_config = build_run_config(command, args, config)
    errors = validate_run_config(run_config)
    if errors:
        raise ValueError("; ".join(errors))
    return run_config

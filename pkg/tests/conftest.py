"""
测试公共配置
把 scripts 与 scripts/utils 加入导入路径，并提供常用的小图
"""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "scripts"))
sys.path.insert(0, str(ROOT / "scripts" / "utils"))

from graph_utils import ColoredGraph  # noqa: E402


@pytest.fixture
def triangle():
    return ColoredGraph.build(3, edges=[(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def square():
    return ColoredGraph.build(4, edges=[(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def path3():
    return ColoredGraph.build(3, edges=[(1, 2), (2, 3)])


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    """不让外部的 CENSUS_BUDGET 或当前目录下的配置文件影响测试"""
    monkeypatch.delenv("CENSUS_BUDGET", raising=False)
    monkeypatch.chdir(tmp_path)

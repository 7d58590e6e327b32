"""
文件操作工具模块
提供三色图与子排列文本格式的读写和路径处理
"""
import os
from pathlib import Path
from typing import Iterable, List, Tuple

from arrangement_utils import Subarrangement, Wall, DIAGONAL, TYPE_I, TYPE_II
from graph_utils import ColoredGraph


# 文件中单个图或子排列的顶点数上限
MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """文本格式无效"""


def _records(text: str, source: str) -> List[List[Tuple[int, List[str]]]]:
    """
    按 ``n`` 行切分记录，去掉空行和 # 注释

    Returns:
        每条记录为 [(行号, 词列表)]，第一行总是 n 行
    """
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "n":
            records.append([])
        elif not records:
            raise GraphFormatError(f"{source}:{lineno}: 缺少 n 行")
        records[-1].append((lineno, words))
    return records


def _parse_int(word: str, source: str, lineno: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise GraphFormatError(f"{source}:{lineno}: 不是整数: {word}") from None


def _parse_header(record: List[Tuple[int, List[str]]], source: str, max_n: int) -> int:
    lineno, words = record[0]
    if len(words) != 2:
        raise GraphFormatError(f"{source}:{lineno}: n 行格式应为 'n <count>'")
    n = _parse_int(words[1], source, lineno)
    if n < 1:
        raise GraphFormatError(f"{source}:{lineno}: 顶点数必须为正: {n}")
    if n > max_n:
        raise GraphFormatError(f"{source}:{lineno}: 顶点数 {n} 超出上限 {max_n}")
    return n


def _check_vertex(v: int, n: int, source: str, lineno: int) -> None:
    if not 1 <= v <= n:
        raise GraphFormatError(f"{source}:{lineno}: 顶点 {v} 超出范围 1..{n}")


def parse_graphs(text: str, source: str = "<string>",
                 max_n: int = MAX_VERTICES) -> List[ColoredGraph]:
    """
    解析三色图文本格式

    每条记录以 ``n <count>`` 开头，随后是 ``c <v> <-1|1>`` 与 ``e <a> <b>`` 行。

    Args:
        text: 文本内容
        source: 报错时显示的来源
        max_n: 允许的最大顶点数

    Returns:
        三色图列表

    Raises:
        GraphFormatError: 格式无效、重复、自环、顶点越界或顶点数超出上限
    """
    graphs = []
    for record in _records(text, source):
        n = _parse_header(record, source, max_n)
        colors = [0] * n
        edges = set()
        for lineno, words in record[1:]:
            tag = words[0]
            if tag == "c":
                if len(words) != 3:
                    raise GraphFormatError(f"{source}:{lineno}: 颜色行格式应为 'c <v> <-1|1>'")
                v = _parse_int(words[1], source, lineno)
                color = _parse_int(words[2], source, lineno)
                _check_vertex(v, n, source, lineno)
                if color not in (-1, 1):
                    raise GraphFormatError(f"{source}:{lineno}: 颜色必须是 -1 或 1: {color}")
                if colors[v - 1] != 0:
                    raise GraphFormatError(f"{source}:{lineno}: 顶点 {v} 重复着色")
                colors[v - 1] = color
            elif tag == "e":
                if len(words) != 3:
                    raise GraphFormatError(f"{source}:{lineno}: 边行格式应为 'e <a> <b>'")
                a = _parse_int(words[1], source, lineno)
                b = _parse_int(words[2], source, lineno)
                _check_vertex(a, n, source, lineno)
                _check_vertex(b, n, source, lineno)
                if a == b:
                    raise GraphFormatError(f"{source}:{lineno}: 不允许自环: {a}")
                edge = (min(a, b), max(a, b))
                if edge in edges:
                    raise GraphFormatError(f"{source}:{lineno}: 重复边: {edge}")
                edges.add(edge)
            else:
                raise GraphFormatError(f"{source}:{lineno}: 未知的行类型: {tag}")
        graphs.append(ColoredGraph(n, tuple(colors), frozenset(edges)))
    return graphs


def parse_subarrangements(text: str, source: str = "<string>",
                          max_n: int = MAX_VERTICES) -> List[Subarrangement]:
    """
    解析子排列文本格式

    每条记录以 ``n <count>`` 开头，随后是 ``I <a> <b>``、``II <i> <0|1>``（以及 ``D <a>``）行。

    Args:
        text: 文本内容
        source: 报错时显示的来源
        max_n: 允许的最大顶点数

    Returns:
        子排列列表

    Raises:
        GraphFormatError: 格式无效或墙重复
    """
    result = []
    for record in _records(text, source):
        n = _parse_header(record, source, max_n)
        walls = set()
        for lineno, words in record[1:]:
            tag = words[0]
            numbers = [_parse_int(w, source, lineno) for w in words[1:]]
            if tag == TYPE_I and len(numbers) == 2:
                a, b = numbers
                _check_vertex(a, n, source, lineno)
                _check_vertex(b, n, source, lineno)
                if a == b:
                    raise GraphFormatError(f"{source}:{lineno}: I 型墙要求 a != b")
                wall = Wall.type_i(a, b)
            elif tag == TYPE_II and len(numbers) == 2:
                i, value = numbers
                _check_vertex(i, n, source, lineno)
                if value not in (0, 1):
                    raise GraphFormatError(f"{source}:{lineno}: II 型墙的取值必须为 0 或 1")
                wall = Wall.type_ii(i, value)
            elif tag == DIAGONAL and len(numbers) == 1:
                _check_vertex(numbers[0], n, source, lineno)
                wall = Wall.diagonal(numbers[0])
            else:
                raise GraphFormatError(f"{source}:{lineno}: 无法解析的墙: {' '.join(words)}")
            if wall in walls:
                raise GraphFormatError(f"{source}:{lineno}: 重复的墙: {wall.label}")
            walls.add(wall)
        result.append(Subarrangement(n, frozenset(walls)))
    return result


def format_graph(g: ColoredGraph) -> str:
    """三色图的文本格式"""
    lines = [f"n {g.n}"]
    lines.extend(f"c {v} {g.color(v)}" for v in g.colored_vertices)
    lines.extend(f"e {a} {b}" for a, b in g.edge_list)
    return "\n".join(lines) + "\n"


def format_subarrangement(s: Subarrangement) -> str:
    """子排列的文本格式"""
    lines = [f"n {s.n}"]
    for wall in s.sorted_walls:
        if wall.kind == TYPE_I:
            lines.append(f"I {wall.first} {wall.second}")
        elif wall.kind == TYPE_II:
            lines.append(f"II {wall.first} {wall.second}")
        else:
            lines.append(f"D {wall.first}")
    return "\n".join(lines) + "\n"


def _read_text(path: Path) -> str:
    if not path.exists():
        raise GraphFormatError(f"文件不存在: {path}")
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise GraphFormatError(f"文件不是 UTF-8 文本: {path}") from None
    except OSError as e:
        raise GraphFormatError(f"无法读取文件 {path}: {e.strerror or e}") from None


def read_graphs(path: Path) -> List[ColoredGraph]:
    """
    读取三色图文件

    Raises:
        GraphFormatError: 文件不存在或格式无效
    """
    return parse_graphs(_read_text(path), str(path))


def read_subarrangements(path: Path) -> List[Subarrangement]:
    """
    读取子排列文件

    Raises:
        GraphFormatError: 文件不存在或格式无效
    """
    return parse_subarrangements(_read_text(path), str(path))


def write_graphs(path: Path, graphs: Iterable[ColoredGraph]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(format_graph(g) for g in graphs), encoding="utf-8")


def write_subarrangements(path: Path, subs: Iterable[Subarrangement]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(format_subarrangement(s) for s in subs), encoding="utf-8")


def expand_path(path: str) -> Path:
    """
    展开路径（处理 ~ 和环境变量）

    Args:
        path: 路径字符串

    Returns:
        展开后的 Path 对象
    """
    return Path(os.path.expandvars(os.path.expanduser(path)))

"""
三色图工具模块
定义带颜色 {-1, 0, +1} 的标号简单图、连通分支、二部性、三类分解、中心性判定和穷举
"""
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from config_utils import DEFAULT_CONFIG, check_limit


Edge = Tuple[int, int]
Sides = Tuple[FrozenSet[int], FrozenSet[int]]

COLOR_VALUES = (-1, 0, 1)
# 穷举时每个顶点的颜色按三进制计数器取值，顶点 1 变化最快
COLOR_DIGITS = (0, 1, -1)


class NotAComponentError(ValueError):
    """给定的顶点集合不是图的连通分支"""


@dataclass(frozen=True)
class ColoredGraph:
    """
    [n] 上的三色图

    colors[i - 1] 为顶点 i 的颜色，0 表示无色；edges 中每条边为 (a, b)，a < b。
    """
    n: int
    colors: Tuple[int, ...]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"顶点数必须为正: {self.n}")
        if len(self.colors) != self.n:
            raise ValueError(f"颜色个数 {len(self.colors)} 与顶点数 {self.n} 不符")
        for c in self.colors:
            if c not in COLOR_VALUES:
                raise ValueError(f"颜色必须是 -1、0 或 1: {c}")
        for a, b in self.edges:
            if not 1 <= a < b <= self.n:
                raise ValueError(f"边无效: {(a, b)}")

    @classmethod
    def build(cls, n: int, colors: Optional[Iterable[int]] = None,
              edges: Iterable[Sequence[int]] = ()) -> "ColoredGraph":
        """
        宽松构造：边可以任意顺序给出，颜色缺省为全无色

        Args:
            n: 顶点数
            colors: 颜色序列
            edges: 边序列

        Returns:
            ColoredGraph
        """
        normalized = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"不允许自环: {(a, b)}")
            edge = (a, b) if a < b else (b, a)
            if edge in normalized:
                raise ValueError(f"重复边: {edge}")
            normalized.add(edge)
        return cls(n, tuple(colors) if colors is not None else (0,) * n, frozenset(normalized))

    def color(self, v: int) -> int:
        return self.colors[v - 1]

    @property
    def edge_list(self) -> List[Edge]:
        """按字典序排列的边"""
        return sorted(self.edges)

    @property
    def colored_vertices(self) -> List[int]:
        return [v for v in range(1, self.n + 1) if self.colors[v - 1] != 0]

    def adjacency(self) -> Dict[int, List[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for edge in self.edges if v in edge)


@dataclass(frozen=True)
class KindDecomposition:
    """三类分解：无色分支 G'、孤立着色顶点 G''、其余分支 G'''"""
    first: List[FrozenSet[int]]
    second: List[int]
    third: List[FrozenSet[int]]


@dataclass(frozen=True)
class ComponentScan:
    """单个连通分支的扫描结果；sides 为 None 表示含奇圈"""
    vertices: FrozenSet[int]
    sides: Optional[Sides]
    edge_count: int

    @property
    def bipartite(self) -> bool:
        return self.sides is not None


def _scan_from(adj: Mapping[int, List[int]], root: int) -> Tuple[FrozenSet[int], Optional[Sides]]:
    """从 root 做 BFS，同时尝试二染色"""
    side = {root: 0}
    queue = deque([root])
    odd = False
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in side:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                odd = True
    vertices = frozenset(side)
    if odd:
        return vertices, None
    a = frozenset(v for v, s in side.items() if s == 0)
    return vertices, (a, vertices - a)


def scan_components(g: ColoredGraph) -> List[ComponentScan]:
    """
    一次遍历得到所有连通分支及其二部划分

    Args:
        g: 三色图

    Returns:
        按最小顶点排序的 ComponentScan 列表
    """
    adj = g.adjacency()
    seen = set()
    scans = []
    for root in range(1, g.n + 1):
        if root in seen:
            continue
        vertices, sides = _scan_from(adj, root)
        seen |= vertices
        edge_count = sum(len(adj[v]) for v in vertices) // 2
        scans.append(ComponentScan(vertices, sides, edge_count))
    return scans


def components(g: ColoredGraph) -> List[FrozenSet[int]]:
    """
    连通分支

    Args:
        g: 三色图

    Returns:
        [n] 的划分，按最小顶点排序
    """
    return [scan.vertices for scan in scan_components(g)]


def is_bipartite(g: ColoredGraph, comp: Iterable[int]) -> Tuple[bool, Optional[Sides]]:
    """
    判断连通分支是否二部

    Args:
        g: 三色图
        comp: g 的一个连通分支

    Returns:
        (是否二部, 二部划分)；第一部分包含分支中最小的顶点，非二部时划分为 None

    Raises:
        NotAComponentError: comp 不是 g 的连通分支
    """
    comp = frozenset(comp)
    if not comp or min(comp) < 1 or max(comp) > g.n:
        raise NotAComponentError(f"不是连通分支: {sorted(comp)}")

    vertices, sides = _scan_from(g.adjacency(), min(comp))
    if vertices != comp:
        raise NotAComponentError(f"不是连通分支: {sorted(comp)}")
    return sides is not None, sides


def decompose_kinds(g: ColoredGraph) -> KindDecomposition:
    """
    三类分解

    Args:
        g: 三色图

    Returns:
        KindDecomposition
    """
    first, second, third = [], [], []
    for scan in scan_components(g):
        colored = any(g.color(v) != 0 for v in scan.vertices)
        if not colored:
            first.append(scan.vertices)
        elif scan.edge_count == 0:
            second.append(min(scan.vertices))
        else:
            third.append(scan.vertices)
    return KindDecomposition(first, second, third)


def cardinality(g: ColoredGraph) -> int:
    """边数加着色顶点数"""
    return len(g.edges) + sum(1 for c in g.colors if c != 0)


def component_is_central(g: ColoredGraph, scan: ComponentScan) -> bool:
    """单个连通分支是否中心"""
    colored = [v for v in scan.vertices if g.color(v) != 0]
    if not colored:
        return True
    if scan.sides is None:
        # 含奇圈的分支中，任一着色顶点都通过奇偶两种长度的路径连到奇圈
        return False

    side_a, _ = scan.sides
    expected = None
    for v in colored:
        # 把 B 侧的颜色取反后，所有着色顶点必须同色
        value = g.color(v) if v in side_a else -g.color(v)
        if expected is None:
            expected = value
        elif value != expected:
            return False
    return True


def is_central(g: ColoredGraph) -> bool:
    """
    中心性判定

    含着色顶点的分支必须二部，且同侧着色顶点同色、异侧异色。

    Args:
        g: 三色图

    Returns:
        是否中心
    """
    return all(component_is_central(g, scan) for scan in scan_components(g))


def forget_colors(g: ColoredGraph) -> ColoredGraph:
    """去掉所有颜色后的无色图"""
    return ColoredGraph(g.n, (0,) * g.n, g.edges)


def flip_colors(g: ColoredGraph) -> ColoredGraph:
    """全局颜色取反"""
    return ColoredGraph(g.n, tuple(-c for c in g.colors), g.edges)


def relabel(g: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """
    顶点重新标号

    Args:
        g: 三色图
        perm: perm[i - 1] 为顶点 i 的新标号

    Returns:
        重新标号后的图
    """
    colors = [0] * g.n
    for v in range(1, g.n + 1):
        colors[perm[v - 1] - 1] = g.color(v)
    edges = frozenset(tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in g.edges)
    return ColoredGraph(g.n, tuple(colors), edges)


def induced_subgraph(g: ColoredGraph, vertices: Iterable[int]) -> ColoredGraph:
    """
    诱导子图，顶点按原顺序重新编号为 1..m

    Args:
        g: 三色图
        vertices: 顶点集合

    Returns:
        诱导子图
    """
    ordered = sorted(vertices)
    index = {v: i + 1 for i, v in enumerate(ordered)}
    edges = frozenset((index[a], index[b]) for a, b in g.edges if a in index and b in index)
    return ColoredGraph(len(ordered), tuple(g.color(v) for v in ordered), edges)


@lru_cache(maxsize=None)
def lexicographic_edges(n: int) -> Tuple[Edge, ...]:
    """[n] 上所有可能的边，按字典序"""
    return tuple(combinations(range(1, n + 1), 2))


def count_colored_graphs(n: int) -> int:
    """[n] 上三色图的总数 3^n * 2^(n(n-1)/2)"""
    return 3 ** n * 2 ** len(lexicographic_edges(n))


def colored_graph_from_index(n: int, index: int) -> ColoredGraph:
    """
    按穷举顺序取第 index 个三色图

    index = edge_mask * 3^n + color_index：颜色为内层三进制计数器（顶点 1 最快），
    边集为外层位掩码计数器（字典序第 j 条边对应第 j 位）。

    Args:
        n: 顶点数
        index: 0 <= index < count_colored_graphs(n)

    Returns:
        三色图
    """
    edge_mask, color_index = divmod(index, 3 ** n)
    colors = []
    for _ in range(n):
        color_index, digit = divmod(color_index, 3)
        colors.append(COLOR_DIGITS[digit])
    all_edges = lexicographic_edges(n)
    edges = frozenset(all_edges[j] for j in range(len(all_edges)) if edge_mask >> j & 1)
    return ColoredGraph(n, tuple(colors), edges)


def enumerate_colored_graphs(n: int, limit: Optional[int] = None,
                             start: int = 0, stop: Optional[int] = None) -> Iterator[ColoredGraph]:
    """
    按确定顺序穷举 [n] 上的所有三色图

    Args:
        n: 顶点数
        limit: n 的上限，默认取配置 enumerate_max_n
        start: 起始序号（分片用）
        stop: 结束序号（不含），默认全部

    Yields:
        三色图

    Raises:
        LimitExceededError: n 超出上限
    """
    if n < 1:
        raise ValueError(f"顶点数必须为正: {n}")
    limit = DEFAULT_CONFIG["limits"]["enumerate_max_n"] if limit is None else limit
    check_limit("enumerate_max_n", n, {"enumerate_max_n": limit})

    total = count_colored_graphs(n)
    stop = total if stop is None else min(stop, total)
    all_edges = lexicographic_edges(n)
    colorings = [tuple(COLOR_DIGITS[(i // 3 ** v) % 3] for v in range(n)) for i in range(3 ** n)]

    edge_mask, color_index = divmod(start, 3 ** n)
    index = start
    while index < stop:
        edges = frozenset(all_edges[j] for j in range(len(all_edges)) if edge_mask >> j & 1)
        while color_index < len(colorings) and index < stop:
            yield ColoredGraph(n, colorings[color_index], edges)
            color_index += 1
            index += 1
        color_index = 0
        edge_mask += 1


def random_colored_graph(n: int, rng: random.Random, edge_probability: float = 0.5,
                         color_probability: float = 0.3) -> ColoredGraph:
    """
    随机三色图

    Args:
        n: 顶点数
        rng: 随机数发生器
        edge_probability: 每条边出现的概率
        color_probability: 每个顶点着色的概率

    Returns:
        三色图
    """
    colors = tuple(rng.choice((-1, 1)) if rng.random() < color_probability else 0 for _ in range(n))
    edges = frozenset(edge for edge in lexicographic_edges(n) if rng.random() < edge_probability)
    return ColoredGraph(n, colors, edges)

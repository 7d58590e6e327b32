"""
秩计算工具模块
构造 c-关联矩阵，用无分数 (Bareiss) 消元精确求秩，并实现秩的闭式公式
"""
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from graph_utils import (
    ColoredGraph, Edge, components, enumerate_colored_graphs, induced_subgraph, is_bipartite,
    scan_components
)


Row = Tuple[int, ...]


class PreconditionError(ValueError):
    """输入不满足操作的前置条件"""


@dataclass(frozen=True)
class CIncidenceMatrix:
    """
    (|E| + n) x n 的 c-关联矩阵

    上方 |E| 行依 edge_order 排列，边 {a, b} 对应 e_a + e_b；下方 n 行第 i 行为 γ(i)e_i。
    """
    n: int
    rows: Tuple[Row, ...]
    edge_order: Tuple[Edge, ...]

    @property
    def edge_rows(self) -> Tuple[Row, ...]:
        return self.rows[:len(self.edge_order)]

    @property
    def vertex_rows(self) -> Tuple[Row, ...]:
        return self.rows[len(self.edge_order):]


def unit_row(n: int, i: int, scale: int = 1) -> Row:
    """scale * e_i，i 从 1 开始"""
    row = [0] * n
    row[i - 1] = scale
    return tuple(row)


def build_cincidence(g: ColoredGraph, edge_order: Sequence[Edge] = None) -> CIncidenceMatrix:
    """
    构造 c-关联矩阵

    Args:
        g: 三色图
        edge_order: 边的顺序，默认字典序

    Returns:
        CIncidenceMatrix
    """
    order = tuple(g.edge_list if edge_order is None else edge_order)
    if set(order) != g.edges or len(order) != len(g.edges):
        raise ValueError("edge_order 必须恰好是图的边集")

    rows = []
    for a, b in order:
        row = [0] * g.n
        row[a - 1] = 1
        row[b - 1] = 1
        rows.append(tuple(row))
    for i in range(1, g.n + 1):
        rows.append(unit_row(g.n, i, g.color(i)))
    return CIncidenceMatrix(g.n, tuple(rows), order)


def pivot_columns(rows: Iterable[Sequence[int]]) -> List[int]:
    """
    整数矩阵行阶梯形的主元列

    无分数 Gauss 消元：每步用上一主元整除，中间量始终是原矩阵的子式，不会出现分数。

    Args:
        rows: 矩阵的行

    Returns:
        主元所在的列（从 0 开始），个数即有理数域上的秩
    """
    m = [list(row) for row in rows if any(row)]
    if not m:
        return []

    n_rows = len(m)
    n_cols = len(m[0])
    rank = 0
    prev = 1
    pivots = []
    for col in range(n_cols):
        if rank == n_rows:
            break
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                break
        else:
            continue
        if r != rank:
            m[rank], m[r] = m[r], m[rank]

        pivot = m[rank][col]
        pivot_row = m[rank]
        for i in range(rank + 1, n_rows):
            row = m[i]
            factor = row[col]
            for j in range(col + 1, n_cols):
                row[j] = (pivot * row[j] - factor * pivot_row[j]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        pivots.append(col)
    return pivots


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """整数矩阵在有理数域上的秩"""
    return len(pivot_columns(rows))


def rank_exact(m: CIncidenceMatrix) -> int:
    """c-关联矩阵的精确秩"""
    return integer_rank(m.rows)


def rank_formula(g: ColoredGraph) -> int:
    """
    秩的闭式公式：n 减去无色分支中二部分支的个数

    Args:
        g: 三色图

    Returns:
        秩
    """
    delta = 0
    for scan in scan_components(g):
        if scan.bipartite and all(g.color(v) == 0 for v in scan.vertices):
            delta += 1
    return g.n - delta


def rank_dichotomy(g: ColoredGraph, comp: Iterable[int]) -> int:
    """
    单个连通分支的秩：含奇圈或着色顶点时为满秩，否则为顶点数减一

    Args:
        g: 三色图
        comp: 连通分支

    Returns:
        该分支的秩
    """
    comp = frozenset(comp)
    bipartite, _ = is_bipartite(g, comp)
    if not bipartite or any(g.color(v) != 0 for v in comp):
        return len(comp)
    return len(comp) - 1


def spanning_tree(g: ColoredGraph, comp: Iterable[int]) -> List[Edge]:
    """
    连通分支的 BFS 生成树

    Args:
        g: 三色图
        comp: 连通分支

    Returns:
        生成树的边，按字典序
    """
    comp = frozenset(comp)
    adj = g.adjacency()
    root = min(comp)
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree.append((min(v, w), max(v, w)))
                queue.append(w)
    if seen != comp:
        raise PreconditionError(f"不是连通分支: {sorted(comp)}")
    return sorted(tree)


def spanning_tree_rank_check(g: ColoredGraph) -> bool:
    """
    二部无色连通图与其生成树同秩（均为 n - 1）

    Args:
        g: 无色、连通、二部的图

    Returns:
        两者的精确秩是否相等且为 n - 1

    Raises:
        PreconditionError: 前置条件不满足
    """
    if g.colored_vertices:
        raise PreconditionError("图必须无色")
    comps = components(g)
    if len(comps) != 1:
        raise PreconditionError("图必须连通")
    bipartite, _ = is_bipartite(g, comps[0])
    if not bipartite:
        raise PreconditionError("图必须二部")

    tree = ColoredGraph(g.n, g.colors, frozenset(spanning_tree(g, comps[0])))
    graph_rank = rank_exact(build_cincidence(g))
    tree_rank = rank_exact(build_cincidence(tree))
    return graph_rank == tree_rank == g.n - 1


def cycle_row_combination(n: int, cycle: Sequence[int]) -> Row:
    """
    环上关联行的交错和

    环 (v1, v2, ..., vm, v1) 的边按 {v1,v2}, ..., {v(m-1),vm}, {vm,v1} 排列，返回
    row_m + Σ_{i<m} (-1)^i row_i。偶环得到零向量，奇环得到 2e_{vm}。

    Args:
        n: 顶点数
        cycle: 环上顶点序列（不重复首顶点）

    Returns:
        组合后的行向量
    """
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        raise PreconditionError(f"环无效: {list(cycle)}")

    total = [0] * n
    for i in range(1, m + 1):
        a, b = cycle[i - 1], cycle[i % m]
        sign = 1 if i == m else (-1) ** i
        total[a - 1] += sign
        total[b - 1] += sign
    return tuple(total)


def component_ranks(g: ColoredGraph) -> List[Tuple[FrozenSet[int], int]]:
    """各连通分支及其精确秩"""
    result = []
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        result.append((comp, rank_exact(build_cincidence(sub))))
    return result


def first_rank_mismatch(n: int, start: int, stop: int) -> Optional[int]:
    """
    在穷举序号区间内寻找第一个 rank_formula 与精确秩不符的图

    Returns:
        该图的穷举序号，全部一致时为 None
    """
    for index, g in enumerate(enumerate_colored_graphs(n, limit=n, start=start, stop=stop), start):
        if rank_exact(build_cincidence(g)) != rank_formula(g):
            return index
    return None

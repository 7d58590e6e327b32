"""
超平面排列工具模块
构造 J_n 的墙，子排列与三色图之间的对应，以及独立于图论的线性代数中心性/秩判定
"""
import enum
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from graph_utils import ColoredGraph, cardinality, is_central
from rank_utils import integer_rank, pivot_columns, rank_formula


TYPE_I = "I"
TYPE_II = "II"
DIAGONAL = "D"


class Conflict(enum.Enum):
    """同一坐标上同时出现 0_i 与 1_i，不存在对应的图"""
    CONFLICT = "CONFLICT"


CONFLICT = Conflict.CONFLICT


@dataclass(frozen=True, order=True)
class Wall:
    """
    J_n 的一面墙

    - I 型 (a, b), a < b: x_a + x_b = 1
    - II 型 (i, v), v ∈ {0, 1}: x_i = v
    - 对角墙 (a, 0): 2x_a = 1，仅用于 --include-diagonal 的暴力计算
    """
    kind: str
    first: int
    second: int

    @classmethod
    def type_i(cls, a: int, b: int) -> "Wall":
        if a == b:
            raise ValueError(f"I 型墙要求 a != b: {a}")
        return cls(TYPE_I, min(a, b), max(a, b))

    @classmethod
    def type_ii(cls, i: int, value: int) -> "Wall":
        if value not in (0, 1):
            raise ValueError(f"II 型墙的取值必须为 0 或 1: {value}")
        return cls(TYPE_II, i, value)

    @classmethod
    def diagonal(cls, a: int) -> "Wall":
        return cls(DIAGONAL, a, 0)

    def validate(self, n: int) -> None:
        if self.kind == TYPE_I:
            ok = 1 <= self.first < self.second <= n
        elif self.kind == TYPE_II:
            ok = 1 <= self.first <= n and self.second in (0, 1)
        elif self.kind == DIAGONAL:
            ok = 1 <= self.first <= n
        else:
            ok = False
        if not ok:
            raise ValueError(f"墙对维数 {n} 无效: {self}")

    def equation(self, n: int) -> Tuple[Tuple[int, ...], int]:
        """
        墙的线性方程

        Returns:
            (系数行, 右端常数)
        """
        row = [0] * n
        if self.kind == TYPE_I:
            row[self.first - 1] = 1
            row[self.second - 1] = 1
            return tuple(row), 1
        if self.kind == TYPE_II:
            row[self.first - 1] = 1
            return tuple(row), self.second
        row[self.first - 1] = 2
        return tuple(row), 1

    @property
    def label(self) -> str:
        if self.kind == TYPE_I:
            return f"H_{{{self.first},{self.second}}}"
        if self.kind == TYPE_II:
            return f"{self.second}_{self.first}"
        return f"D_{self.first}"


@dataclass(frozen=True)
class Subarrangement:
    """J_n 的子排列"""
    n: int
    walls: FrozenSet[Wall]

    def __post_init__(self):
        for wall in self.walls:
            wall.validate(self.n)

    @classmethod
    def build(cls, n: int, walls: Iterable[Wall] = ()) -> "Subarrangement":
        walls = list(walls)
        if len(set(walls)) != len(walls):
            raise ValueError("子排列中有重复的墙")
        return cls(n, frozenset(walls))

    @property
    def sorted_walls(self) -> List[Wall]:
        return sorted(self.walls, key=_wall_sort_key)

    def __len__(self) -> int:
        return len(self.walls)


def _wall_sort_key(wall: Wall) -> Tuple[int, int, int]:
    order = {TYPE_I: 0, TYPE_II: 1, DIAGONAL: 2}[wall.kind]
    return order, wall.first, wall.second


def build_jn(n: int, include_diagonal: bool = False) -> List[Wall]:
    """
    构造 J_n 的所有墙

    顺序：I 型按字典序，然后 0_1, 1_1, ..., 0_n, 1_n，最后（可选）对角墙。

    Args:
        n: 维数
        include_diagonal: 是否加入对角墙 2x_a = 1

    Returns:
        墙列表
    """
    if n < 1:
        raise ValueError(f"维数必须为正: {n}")
    walls = [Wall.type_i(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for i in range(1, n + 1):
        walls.append(Wall.type_ii(i, 0))
        walls.append(Wall.type_ii(i, 1))
    if include_diagonal:
        walls.extend(Wall.diagonal(a) for a in range(1, n + 1))
    return walls


def to_colored_graph(s: Subarrangement) -> Union[ColoredGraph, Conflict]:
    """
    子排列对应的三色图

    I 型墙 (a, b) 对应边 {a, b}；0_i 对应颜色 -1，1_i 对应颜色 +1。

    Args:
        s: 子排列（不含对角墙）

    Returns:
        三色图；同一坐标上 0_i 与 1_i 同时出现时返回 CONFLICT
    """
    colors = [0] * s.n
    edges = set()
    for wall in s.walls:
        if wall.kind == TYPE_I:
            edges.add((wall.first, wall.second))
        elif wall.kind == TYPE_II:
            color = 1 if wall.second == 1 else -1
            if colors[wall.first - 1] not in (0, color):
                return CONFLICT
            colors[wall.first - 1] = color
        else:
            raise ValueError(f"对角墙没有对应的图: {wall.label}")
    return ColoredGraph(s.n, tuple(colors), frozenset(edges))


def from_colored_graph(g: ColoredGraph) -> Subarrangement:
    """三色图对应的子排列（to_colored_graph 的逆）"""
    walls = [Wall.type_i(a, b) for a, b in g.edges]
    walls.extend(Wall.type_ii(v, 1 if g.color(v) == 1 else 0) for v in g.colored_vertices)
    return Subarrangement(g.n, frozenset(walls))


def linear_system(s: Subarrangement) -> Tuple[List[Tuple[int, ...]], List[int]]:
    """
    子排列的线性方程组

    Returns:
        (系数矩阵的行, 右端常数)，按墙的规范顺序
    """
    rows, rhs = [], []
    for wall in s.sorted_walls:
        row, value = wall.equation(s.n)
        rows.append(row)
        rhs.append(value)
    return rows, rhs


def rank_linear(s: Subarrangement) -> int:
    """系数矩阵的精确秩"""
    rows, _ = linear_system(s)
    return integer_rank(rows)


def is_central_linear(s: Subarrangement) -> bool:
    """
    子排列是否中心（所有墙有公共点）

    以系数矩阵与增广矩阵的秩是否相等判定方程组相容性。

    Args:
        s: 子排列

    Returns:
        是否中心
    """
    return classify_linear(s)[0]


def classify_augmented(augmented: List[Tuple[int, ...]], n: int) -> Tuple[bool, int]:
    """
    对增广矩阵做一次消元，同时得到相容性与系数矩阵的秩

    Args:
        augmented: 增广矩阵的行（最后一列为右端常数）
        n: 未知数个数

    Returns:
        (方程组是否相容, 系数矩阵的秩)
    """
    pivots = pivot_columns(augmented)
    consistent = not pivots or pivots[-1] != n
    return consistent, len(pivots) - (0 if consistent else 1)


def classify_linear(s: Subarrangement) -> Tuple[bool, int]:
    """(是否中心, rank_linear)"""
    rows, rhs = linear_system(s)
    return classify_augmented([row + (value,) for row, value in zip(rows, rhs)], s.n)


def subarrangement_from_mask(n: int, walls: List[Wall], mask: int) -> Subarrangement:
    """第 j 位为 1 时选入 walls[j]"""
    return Subarrangement(n, frozenset(walls[j] for j in range(len(walls)) if mask >> j & 1))


def enumerate_subarrangements(n: int, include_diagonal: bool = False, start: int = 0,
                              stop: Optional[int] = None) -> Iterator[Tuple[int, Subarrangement]]:
    """
    按位掩码顺序穷举 J_n 的子排列

    Args:
        n: 维数
        include_diagonal: 是否包含对角墙
        start: 起始掩码
        stop: 结束掩码（不含）

    Yields:
        (掩码, 子排列)
    """
    walls = build_jn(n, include_diagonal)
    total = 1 << len(walls)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield mask, subarrangement_from_mask(n, walls, mask)


def centrality_agrees(s: Subarrangement) -> bool:
    """
    图论判定与线性代数判定是否一致

    冲突子排列必须不中心；否则中心性和秩都要一致，中心时基数等于墙数。
    """
    central, rank = classify_linear(s)
    g = to_colored_graph(s)
    if g is CONFLICT:
        return not central
    if is_central(g) != central or rank_formula(g) != rank:
        return False
    return not central or cardinality(g) == len(s)


def first_centrality_mismatch(n: int, start: int, stop: int) -> Optional[int]:
    """
    在掩码区间内寻找第一个两种判定不一致的子排列

    Returns:
        该子排列的掩码，全部一致时为 None
    """
    walls = build_jn(n)
    for mask in range(start, stop):
        if not centrality_agrees(subarrangement_from_mask(n, walls, mask)):
            return mask
    return None

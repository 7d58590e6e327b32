"""
计数工具模块
连通图 / 连通二部图 / 第二类 / 第三类中心图的计数，整数划分与约化多项式系数，
以及按秩和基数统计中心三色图个数 γ_{k,s} 的闭式计算与暴力对照
"""
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from config_utils import DEFAULT_CONFIG, check_limit
from graph_utils import (
    cardinality, count_colored_graphs, enumerate_colored_graphs, lexicographic_edges,
    scan_components, ColoredGraph, component_is_central
)
from parallel_utils import run_sharded
from rank_utils import rank_formula


PAIRING_MODES = ("pairs", "ordered", "size")
COMPONENT_KINDS = ("bipartite", "nonbipartite", "third")


@dataclass(frozen=True)
class PartitionMultiset:
    """整数划分，parts 非增"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"划分的部分必须为正: {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"划分必须非增: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """每个不同部分值出现的次数"""
        return dict(Counter(self.parts))

    def __len__(self) -> int:
        return len(self.parts)


@dataclass
class CountTable:
    """(秩 k, 基数 s) -> 个数"""
    n: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def get(self, k: int, s: int) -> int:
        return self.entries.get((k, s), 0)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted((key, value) for key, value in self.entries.items() if value)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def max_cardinality(self) -> int:
        return max((s for (_, s), value in self.entries.items() if value), default=0)

    def diff(self, other: "CountTable") -> List[Tuple[int, int, int, int]]:
        """两表不一致的格子 (k, s, 本表, 对方)"""
        keys = sorted(set(self.entries) | set(other.entries))
        return [(k, s, self.get(k, s), other.get(k, s))
                for k, s in keys if self.get(k, s) != other.get(k, s)]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "entries": [{"k": k, "s": s, "count": count} for (k, s), count in self.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "CountTable":
        entries = {(item["k"], item["s"]): int(item["count"]) for item in data["entries"]}
        return cls(int(data["n"]), entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self.n == other.n and self.items() == other.items()


# ---------------------------------------------------------------------------
# 划分与多项式系数
# ---------------------------------------------------------------------------

def partitions(total: int, max_parts: Optional[int] = None,
               max_part: Optional[int] = None) -> Iterator[PartitionMultiset]:
    """
    total 的所有整数划分，按字典序从大到小

    Args:
        total: 被划分的非负整数
        max_parts: 最多的部分数
        max_part: 每个部分的上限

    Yields:
        PartitionMultiset；total 为 0 时只有空划分
    """
    if total < 0:
        raise ValueError(f"total 不能为负: {total}")
    for parts in _partitions(total, total if max_part is None else max_part, max_parts):
        yield PartitionMultiset(parts)


def _partitions(total: int, max_part: int, max_parts: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    remaining = None if max_parts is None else max_parts - 1
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, remaining):
            yield (first,) + rest


def multinomial(total: int, parts: Sequence[int]) -> int:
    """多项式系数 total! / Π parts_i!"""
    if sum(parts) != total:
        raise ValueError(f"各部分之和 {sum(parts)} 不等于 {total}")
    result = 1
    remaining = total
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


def reduced_multinomial(total: int, parts: PartitionMultiset) -> int:
    """
    约化多项式系数：多项式系数再除以相同部分个数的阶乘

    Args:
        total: 总数
        parts: 划分

    Returns:
        约化多项式系数
    """
    if not isinstance(parts, PartitionMultiset):
        parts = PartitionMultiset(tuple(sorted(parts, reverse=True)))
    value = multinomial(total, parts.parts)
    for count in parts.multiplicities().values():
        value //= math.factorial(count)
    return value


def pair_multinomial(total: int, pairs: Sequence[Tuple[int, int]]) -> int:
    """
    以 (顶点数, 基数) 对为单位约化的多项式系数

    只有完全相同的对才视为不可区分。

    Args:
        total: 顶点总数
        pairs: (顶点数, 基数) 列表

    Returns:
        系数
    """
    value = multinomial(total, [m for m, _ in pairs])
    for count in Counter(pairs).values():
        value //= math.factorial(count)
    return value


# ---------------------------------------------------------------------------
# 连通图与连通二部图
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def graph_count(k: int, s: int) -> int:
    """[k] 上恰有 s 条边的标号简单图个数"""
    if k < 0 or s < 0:
        return 0
    return math.comb(k * (k - 1) // 2, s)


@lru_cache(maxsize=None)
def bicolored_count(k: int, s: int) -> int:
    """[k] 上带真 2-染色、恰有 s 条边的图个数"""
    if k < 0 or s < 0:
        return 0
    return sum(math.comb(k, j) * math.comb(j * (k - j), s) for j in range(k + 1))


def _connected_part(total: Callable[[int, int], int], connected: Callable[[int, int], int],
                    k: int, s: int) -> int:
    """按含顶点 1 的分支展开的容斥递推"""
    value = total(k, s)
    for m in range(1, k):
        ways = math.comb(k - 1, m - 1)
        for j in range(s + 1):
            c = connected(m, j)
            if c:
                value -= ways * c * total(k - m, s - j)
    return value


@lru_cache(maxsize=None)
def nu_connected(k: int, s: int) -> int:
    """
    [k] 上恰有 s 条边的连通标号简单图个数

    Args:
        k: 顶点数
        s: 边数

    Returns:
        个数
    """
    if k < 1 or s < 0 or s > k * (k - 1) // 2:
        return 0
    return _connected_part(graph_count, nu_connected, k, s)


@lru_cache(maxsize=None)
def _connected_bicolored(k: int, s: int) -> int:
    if k < 1 or s < 0:
        return 0
    return _connected_part(bicolored_count, _connected_bicolored, k, s)


@lru_cache(maxsize=None)
def nu_bipartite_connected(k: int, s: int) -> int:
    """
    [k] 上恰有 s 条边的连通二部标号图个数

    连通二部图恰有两种真 2-染色，所以等于连通 2-染色图个数的一半。

    Args:
        k: 顶点数
        s: 边数

    Returns:
        个数
    """
    if k < 1 or s < k - 1 or s > (k // 2) * ((k + 1) // 2):
        return 0
    return _connected_bicolored(k, s) // 2


def nu_nonbipartite_connected(k: int, s: int) -> int:
    """连通且含奇圈的标号图个数"""
    return nu_connected(k, s) - nu_bipartite_connected(k, s)


def tree_count(m: int) -> int:
    """[m] 上的标号树个数 m^(m-2)"""
    if m < 1:
        return 0
    return 1 if m == 1 else m ** (m - 2)


def nu_second(k: int, s: int) -> int:
    """k 个孤立着色顶点：仅当 s = k 时为 2^k"""
    if k < 1:
        return 0
    return 2 ** k if s == k else 0


@lru_cache(maxsize=None)
def nu_third(k: int, s: int) -> int:
    """
    [k] 上基数为 s 的连通第三类中心图个数

    t 个着色顶点、s - t 条边：去色后是连通二部图，着色方式为 2 * C(k, t)。

    Args:
        k: 顶点数
        s: 基数

    Returns:
        个数（此类图的秩必为 k）
    """
    if k < 2:
        # 单个顶点没有边
        return 0
    return sum(2 * nu_bipartite_connected(k, s - t) * math.comb(k, t)
               for t in range(1, s - k + 2))


def nu_third_variant(k: int, s: int) -> int:
    """
    另一种下标写法：二部图取在 k - 1 个顶点上，t 的上限为 s - k

    仅用于诊断输出，与暴力计数对照以说明为何不采用。
    """
    if k < 2:
        return 0
    return sum(2 * nu_bipartite_connected(k - 1, s - t) * math.comb(k, t)
               for t in range(1, s - k + 1))


def max_cardinality(k: int) -> int:
    """[k] 上三色图的最大基数"""
    return k * (k - 1) // 2 + k


# ---------------------------------------------------------------------------
# 暴力对照
# ---------------------------------------------------------------------------

def _colorless_tables(k: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    connected, bipartite = Counter(), Counter()
    all_edges = lexicographic_edges(k)
    for mask in range(1 << len(all_edges)):
        edges = frozenset(all_edges[j] for j in range(len(all_edges)) if mask >> j & 1)
        scans = scan_components(ColoredGraph(k, (0,) * k, edges))
        if len(scans) == 1:
            connected[len(edges)] += 1
            if scans[0].bipartite:
                bipartite[len(edges)] += 1
    return dict(connected), dict(bipartite)


@lru_cache(maxsize=None)
def colorless_bruteforce(k: int, limit: Optional[int] = None) -> Tuple[Dict[int, int], Dict[int, int]]:
    """
    穷举 [k] 上的无色图，统计连通图与连通二部图

    Args:
        k: 顶点数
        limit: k 的上限，默认 oracle_max_k

    Returns:
        (边数 -> 连通图个数, 边数 -> 连通二部图个数)
    """
    limit = DEFAULT_CONFIG["limits"]["oracle_max_k"] if limit is None else limit
    check_limit("oracle_max_k", k, {"oracle_max_k": limit})
    return _colorless_tables(k)


@lru_cache(maxsize=None)
def nu_third_bruteforce_table(k: int, limit: Optional[int] = None) -> Dict[int, int]:
    """
    穷举 [k] 上的三色图，统计连通第三类中心图，按基数分组

    Args:
        k: 顶点数
        limit: k 的上限，默认 oracle_max_k

    Returns:
        基数 -> 个数

    Raises:
        LimitExceededError: k 超出上限
        RuntimeError: 出现秩不为 k 的此类图
    """
    limit = DEFAULT_CONFIG["limits"]["oracle_max_k"] if limit is None else limit
    check_limit("oracle_max_k", k, {"oracle_max_k": limit})

    table = Counter()
    for g in enumerate_colored_graphs(k, limit=k):
        if not g.edges or not g.colored_vertices:
            continue
        scans = scan_components(g)
        if len(scans) != 1 or not component_is_central(g, scans[0]):
            continue
        if rank_formula(g) != k:
            raise RuntimeError(f"第三类连通中心图的秩应为 {k}: {g}")
        table[cardinality(g)] += 1
    return dict(table)


def nu_third_bruteforce(k: int, s: int, limit: Optional[int] = None) -> int:
    """nu_third 的暴力对照"""
    return nu_third_bruteforce_table(k, limit).get(s, 0)


def nu_second_bruteforce(k: int, s: int, limit: Optional[int] = None) -> int:
    """穷举 [k] 上全部顶点着色且无边的中心图，按基数计数"""
    limit = DEFAULT_CONFIG["limits"]["oracle_max_k"] if limit is None else limit
    check_limit("oracle_max_k", k, {"oracle_max_k": limit})

    count = 0
    for g in enumerate_colored_graphs(k, limit=k, stop=3 ** k):
        if len(g.colored_vertices) == k and cardinality(g) == s and all(
                component_is_central(g, scan) for scan in scan_components(g)):
            count += 1
    return count


def _gamma_shard(n: int, start: int, stop: int) -> Counter:
    counts = Counter()
    for g in enumerate_colored_graphs(n, limit=n, start=start, stop=stop):
        scans = scan_components(g)
        if all(component_is_central(g, scan) for scan in scans):
            delta = sum(1 for scan in scans
                        if scan.bipartite and all(g.color(v) == 0 for v in scan.vertices))
            counts[(n - delta, cardinality(g))] += 1
    return counts


def gamma_table_bruteforce(n: int, limit: Optional[int] = None, jobs: int = 1,
                           progress: bool = False) -> CountTable:
    """
    穷举 [n] 上的三色图，统计中心图的 (秩, 基数) 分布

    Args:
        n: 顶点数
        limit: n 的上限，默认 enumerate_max_n
        jobs: 并行进程数
        progress: 是否显示进度

    Returns:
        CountTable
    """
    limit = DEFAULT_CONFIG["limits"]["enumerate_max_n"] if limit is None else limit
    check_limit("enumerate_max_n", n, {"enumerate_max_n": limit})

    total = Counter()
    for part in run_sharded(_gamma_shard, (n,), count_colored_graphs(n), jobs, progress):
        total.update(part)
    return CountTable(n, dict(total))


def gamma_bruteforce(n: int, k: int, s: int, limit: Optional[int] = None) -> int:
    """γ_{k,s} 的暴力对照"""
    return gamma_table_bruteforce(n, limit).get(k, s)


# ---------------------------------------------------------------------------
# 闭式计数
# ---------------------------------------------------------------------------

def component_count(kind: str, m: int, s: int) -> int:
    """某一类连通分支在 m 个顶点、基数 s 下的个数"""
    if kind == "bipartite":
        return nu_bipartite_connected(m, s)
    if kind == "nonbipartite":
        return nu_nonbipartite_connected(m, s)
    if kind == "third":
        return nu_third(m, s)
    raise ValueError(f"未知的分支类别: {kind}")


@lru_cache(maxsize=None)
def component_support(kind: str, m: int) -> Tuple[Tuple[int, int], ...]:
    """m 个顶点上该类分支的非零 (基数, 个数)"""
    return tuple((s, component_count(kind, m, s)) for s in range(max_cardinality(m) + 1)
                 if component_count(kind, m, s))


def _group_choices(kind: str, size: int, multiplicity: int,
                   pairing: str) -> List[Tuple[Tuple[int, ...], int]]:
    """同一顶点数的若干分支上的基数分配，以及对应的分支个数乘积"""
    support = component_support(kind, size)
    if pairing == "ordered":
        choices = product(support, repeat=multiplicity)
    else:
        choices = combinations_with_replacement(support, multiplicity)
    result = []
    for choice in choices:
        value = 1
        for _, count in choice:
            value *= count
        result.append((tuple(s for s, _ in choice), value))
    return result


@lru_cache(maxsize=None)
def component_forests(kind: str, total: int, pairing: str = "pairs") -> Dict[Tuple[int, int], int]:
    """
    total 个标号顶点上、所有分支均属于 kind 的图的个数

    对顶点数做整数划分；同一顶点数的分支再分配基数。pairing 决定重复分支的约化方式：
    pairs 对完全相同的 (顶点数, 基数) 对约化；ordered 按有序的基数分配并按顶点数约化；
    size 按无序的基数分配却仍按顶点数约化（会少计）。

    Args:
        kind: bipartite / nonbipartite / third
        total: 顶点数
        pairing: 约化方式

    Returns:
        (分支个数, 总基数) -> 个数
    """
    if pairing not in PAIRING_MODES:
        raise ValueError(f"未知的约化方式: {pairing}")

    forests = Counter()
    for part in partitions(total):
        groups = sorted(part.multiplicities().items(), reverse=True)
        per_group = [_group_choices(kind, size, mult, pairing) for size, mult in groups]
        if any(not choices for choices in per_group):
            continue
        by_size = reduced_multinomial(total, part)
        for combo in product(*per_group):
            value = 1
            pairs = []
            for (size, _), (cards, count) in zip(groups, combo):
                value *= count
                pairs.extend((size, s) for s in cards)
            weight = pair_multinomial(total, pairs) if pairing == "pairs" else by_size
            forests[(len(part), sum(s for _, s in pairs))] += weight * value
    return dict(forests)


@lru_cache(maxsize=None)
def gamma_table_census(n: int, pairing: str = "pairs", limit: Optional[int] = None) -> CountTable:
    """
    闭式计算 [n] 上中心三色图的 (秩, 基数) 分布

    顶点分成二部无色分支、非二部无色分支、孤立着色顶点、第三类分支四部分；
    秩为 n 减去二部无色分支的个数。

    Args:
        n: 顶点数
        pairing: 重复分支的约化方式
        limit: n 的上限，默认 census_max_n

    Returns:
        CountTable
    """
    limit = DEFAULT_CONFIG["limits"]["census_max_n"] if limit is None else limit
    check_limit("census_max_n", n, {"census_max_n": limit})

    table = Counter()
    for n_b in range(n + 1):
        for n_nb in range(n - n_b + 1):
            for n_2 in range(n - n_b - n_nb + 1):
                n_3 = n - n_b - n_nb - n_2
                coef = multinomial(n, [n_b, n_nb, n_2, n_3]) * 2 ** n_2
                nb_cards = _by_cardinality(component_forests("nonbipartite", n_nb, pairing))
                third_cards = _by_cardinality(component_forests("third", n_3, pairing))
                for (ell, s_b), b_count in component_forests("bipartite", n_b, pairing).items():
                    for s_nb, nb_count in nb_cards.items():
                        for s_3, t_count in third_cards.items():
                            key = (n - ell, s_b + s_nb + n_2 + s_3)
                            table[key] += coef * b_count * nb_count * t_count
    return CountTable(n, {key: value for key, value in table.items() if value})


def _by_cardinality(forests: Mapping[Tuple[int, int], int]) -> Dict[int, int]:
    result = Counter()
    for (_, s), count in forests.items():
        result[s] += count
    return dict(result)


def gamma_census(n: int, k: int, s: int, pairing: str = "pairs", limit: Optional[int] = None) -> int:
    """
    闭式公式给出的 γ_{k,s}

    Args:
        n: 顶点数
        k: 秩，0 <= k <= n
        s: 基数
        pairing: 重复分支的约化方式

    Returns:
        个数
    """
    if not 0 <= k <= n:
        raise ValueError(f"秩必须在 0..{n} 之间: {k}")
    return gamma_table_census(n, pairing, limit).get(k, s)


def total_central_graphs(n: int, limit: Optional[int] = None) -> int:
    """[n] 上中心三色图的总数"""
    return gamma_table_census(n, limit=limit).total

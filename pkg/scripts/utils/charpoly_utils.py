"""
特征多项式工具模块
分别用子排列暴力枚举、三色图枚举、闭式计数三条路径计算 J_n 的特征多项式，
另用有限域点数作独立对照，并由特征多项式求区域数与相对有界区域数
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from arrangement_utils import build_jn, classify_augmented, rank_linear, Subarrangement
from census_utils import CountTable, gamma_table_census
from config_utils import DEFAULT_CONFIG, check_limit
from graph_utils import count_colored_graphs, enumerate_colored_graphs, scan_components
from graph_utils import cardinality, component_is_central
from parallel_utils import run_sharded
from rank_utils import PreconditionError


METHODS = ("bruteforce", "graph", "census")


@dataclass(frozen=True)
class IntPolynomial:
    """整系数多项式，coeffs[i] 为 t^i 的系数"""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs or (0,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "IntPolynomial":
        """由 {次数: 系数} 构造"""
        degree = max(terms, default=0)
        return cls(tuple(terms.get(i, 0) for i in range(degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if magnitude == 1 else f"{magnitude}{var}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def descending(self) -> List[int]:
        """按降幂排列的系数"""
        return list(reversed(self.coeffs))

    def to_dict(self) -> Dict:
        return {"coeffs": list(self.coeffs), "text": str(self)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "IntPolynomial":
        return cls(tuple(int(c) for c in data["coeffs"]))


def charpoly_from_table(table: CountTable) -> IntPolynomial:
    """
    由 γ_{k,s} 表求特征多项式 Σ (-1)^s γ_{k,s} t^{n-k}

    Args:
        table: CountTable

    Returns:
        IntPolynomial
    """
    terms = Counter()
    for (k, s), count in table.items():
        terms[table.n - k] += (-1) ** s * count
    return IntPolynomial.from_terms(terms)


def _bruteforce_shard(n: int, include_diagonal: bool, start: int, stop: int) -> Counter:
    walls = build_jn(n, include_diagonal)
    equations = [wall.equation(n) for wall in walls]
    augmented_rows = [row + (value,) for row, value in equations]
    terms = Counter()
    for mask in range(start, stop):
        rows = [augmented_rows[j] for j in range(len(walls)) if mask >> j & 1]
        central, rank = classify_augmented(rows, n)
        if central:
            terms[n - rank] += -1 if len(rows) % 2 else 1
    return terms


def charpoly_bruteforce(n: int, limit: Optional[int] = None, include_diagonal: bool = False,
                        jobs: int = 1, progress: bool = False) -> IntPolynomial:
    """
    对 J_n 的所有中心子排列求和 (-1)^{|B|} t^{n - rank(B)}

    Args:
        n: 维数
        limit: n 的上限，默认 bruteforce_max_n
        include_diagonal: 是否加入对角墙 2x_a = 1
        jobs: 并行进程数

    Returns:
        特征多项式

    Raises:
        LimitExceededError: n 超出上限
    """
    limit = DEFAULT_CONFIG["limits"]["bruteforce_max_n"] if limit is None else limit
    check_limit("bruteforce_max_n", n, {"bruteforce_max_n": limit})

    total = 1 << len(build_jn(n, include_diagonal))
    terms = Counter()
    for part in run_sharded(_bruteforce_shard, (n, include_diagonal), total, jobs, progress):
        terms.update(part)
    return IntPolynomial.from_terms(terms)


def _graph_shard(n: int, start: int, stop: int) -> Counter:
    terms = Counter()
    for g in enumerate_colored_graphs(n, limit=n, start=start, stop=stop):
        scans = scan_components(g)
        if not all(component_is_central(g, scan) for scan in scans):
            continue
        delta = sum(1 for scan in scans
                    if scan.bipartite and all(g.color(v) == 0 for v in scan.vertices))
        # 指数 n - rank 正好是无色二部分支数
        terms[delta] += -1 if cardinality(g) % 2 else 1
    return terms


def charpoly_graph(n: int, limit: Optional[int] = None, jobs: int = 1,
                   progress: bool = False) -> IntPolynomial:
    """
    对 [n] 上所有中心三色图求和 (-1)^{card} t^{n - rank}

    Args:
        n: 顶点数
        limit: n 的上限，默认 graph_max_n
        jobs: 并行进程数
        progress: 是否显示进度

    Returns:
        特征多项式
    """
    limit = DEFAULT_CONFIG["limits"]["graph_max_n"] if limit is None else limit
    check_limit("graph_max_n", n, {"graph_max_n": limit})

    terms = Counter()
    for part in run_sharded(_graph_shard, (n,), count_colored_graphs(n), jobs, progress):
        terms.update(part)
    return IntPolynomial.from_terms(terms)


def charpoly_census(n: int, limit: Optional[int] = None, pairing: str = "pairs") -> IntPolynomial:
    """
    用闭式计数的 γ_{k,s} 组装特征多项式

    Args:
        n: 顶点数
        limit: n 的上限，默认 census_max_n
        pairing: 重复分支的约化方式

    Returns:
        特征多项式
    """
    return charpoly_from_table(gamma_table_census(n, pairing, limit))


def compute_charpoly(method: str, n: int, limits: Optional[Mapping[str, int]] = None,
                     jobs: int = 1, include_diagonal: bool = False,
                     progress: bool = False) -> IntPolynomial:
    """
    按方法名分派

    Args:
        method: bruteforce / graph / census
        n: 维数
        limits: 限额表
        jobs: 并行进程数
        include_diagonal: 仅 bruteforce 支持

    Returns:
        特征多项式
    """
    limits = limits or DEFAULT_CONFIG["limits"]
    if include_diagonal and method != "bruteforce":
        raise ValueError("对角墙只能用 bruteforce 方法计算")
    if method == "bruteforce":
        return charpoly_bruteforce(n, limits.get("bruteforce_max_n"), include_diagonal, jobs,
                                   progress)
    if method == "graph":
        return charpoly_graph(n, limits.get("graph_max_n"), jobs, progress)
    if method == "census":
        return charpoly_census(n, limits.get("census_max_n"))
    raise ValueError(f"未知方法: {method}")


def chambers(p: IntPolynomial, n: int) -> int:
    """
    区域数 (-1)^n χ(-1)

    Args:
        p: 特征多项式
        n: 维数

    Returns:
        区域数

    Raises:
        PreconditionError: 次数不为 n 或结果非正
    """
    if p.degree != n:
        raise PreconditionError(f"特征多项式的次数 {p.degree} 不等于 {n}")
    value = (-1) ** n * p(-1)
    if value <= 0:
        raise PreconditionError(f"区域数必须为正: {value}")
    return value


def bounded_chambers(p: IntPolynomial, r: int) -> int:
    """
    相对有界区域数 (-1)^r χ(1)

    Args:
        p: 特征多项式
        r: 整个排列的秩

    Returns:
        相对有界区域数

    Raises:
        PreconditionError: 结果为负
    """
    value = (-1) ** r * p(1)
    if value < 0:
        raise PreconditionError(f"相对有界区域数不能为负: {value}")
    return value


def arrangement_rank(n: int, include_diagonal: bool = False) -> int:
    """整个 J_n 的秩（运行时计算，不做假设）"""
    walls = build_jn(n, include_diagonal)
    return rank_linear(Subarrangement(n, frozenset(walls)))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def finite_field_count(n: int, q: int, budget: Optional[int] = None,
                       include_diagonal: bool = False) -> int:
    """
    F_q^n 中不落在任何墙上的点数

    逐坐标回溯：x_i ∉ {0, 1}，且对已选的 x_a 有 x_a + x_i ≠ 1。

    Args:
        n: 维数
        q: 素数，q >= 5
        budget: q^n 的上限，默认 point_budget
        include_diagonal: 同时排除 2x_i = 1

    Returns:
        点数

    Raises:
        ValueError: q 不是 >= 5 的素数
        LimitExceededError: q^n 超出预算
    """
    if q < 5 or not is_prime(q):
        raise ValueError(f"q 必须是 >= 5 的素数: {q}")
    budget = DEFAULT_CONFIG["limits"]["point_budget"] if budget is None else budget
    check_limit("point_budget", q ** n, {"point_budget": budget})

    allowed = [x for x in range(2, q)]
    if include_diagonal:
        half = pow(2, -1, q)
        allowed = [x for x in allowed if x != half]
    return _count_points(n, q, allowed, set())


def _count_points(remaining: int, q: int, allowed: Sequence[int], forbidden: set) -> int:
    if remaining == 0:
        return 1
    total = 0
    for x in allowed:
        if x in forbidden:
            continue
        partner = (1 - x) % q
        added = partner not in forbidden
        if added:
            forbidden.add(partner)
        total += _count_points(remaining - 1, q, allowed, forbidden)
        if added:
            forbidden.discard(partner)
    return total

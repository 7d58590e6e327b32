"""
输出格式工具模块
把各命令的报告（纯数据字典）格式化为 text / json / csv，并把 json / csv 报告解析回来
"""
import csv
import io
import json
from typing import Any, Dict, List, Sequence, Tuple

from census_utils import CountTable
from charpoly_utils import IntPolynomial


def verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    按列宽对齐的文本表格

    Args:
        header: 表头
        rows: 数据行

    Returns:
        表格字符串
    """
    cells = [[str(h) for h in header]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = [" ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in cells]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


def format_gamma_grid(table: CountTable) -> str:
    """γ 表：行为秩 k，列为基数 s"""
    width = table.max_cardinality
    header = ["k\\s"] + [str(s) for s in range(width + 1)]
    rows = [[k] + [table.get(k, s) for s in range(width + 1)] for k in range(table.n + 1)]
    return format_table(header, rows)


# ---------------------------------------------------------------------------
# text
# ---------------------------------------------------------------------------

def _text_charpoly(report: Dict[str, Any]) -> str:
    lines = [f"n={report['n']}" + (" (含对角墙)" if report.get("include_diagonal") else "")]
    width = max(len(m) for m in report["polynomials"])
    for method, poly in report["polynomials"].items():
        lines.append(f"{method.ljust(width)}: {poly['text']}")
    lines.append(f"chambers={report['chambers']} bounded={report['bounded_chambers']} "
                 f"rank={report['rank']}")
    if len(report["polynomials"]) > 1:
        lines.append(verdict(report["agree"]))
    return "\n".join(lines)


def _text_census(report: Dict[str, Any]) -> str:
    table = CountTable.from_dict(report["table"])
    lines = [f"n={report['n']} pairing={report['pairing']} total={report['total']}",
             format_gamma_grid(table)]
    if report.get("oracle") is not None:
        lines.append("")
        lines.append("暴力枚举:")
        lines.append(format_gamma_grid(CountTable.from_dict(report["oracle"])))
        for k, s, ours, theirs in report["diff"]:
            lines.append(f"差异 k={k} s={s}: census={ours} oracle={theirs}")
        lines.append(verdict(report["agree"]))
    return "\n".join(lines)


def _text_counts(report: Dict[str, Any]) -> str:
    columns = report["columns"]
    rows = [[row.get(c, "") for c in columns] for row in report["rows"]]
    lines = [f"kind={report['kind']} k={report['k']}", format_table(columns, rows)]
    if report.get("agree") is not None:
        lines.append(verdict(report["agree"]))
    if report.get("variant_failures") is not None:
        failures = report["variant_failures"]
        if failures:
            lines.append(f"variant 与暴力计数不符的基数: {', '.join(str(s) for s in failures)}")
        else:
            lines.append("variant 在此 k 下与暴力计数一致")
    return "\n".join(lines)


def _text_rank(report: Dict[str, Any]) -> str:
    return "\n".join(f"exact={r['exact']} formula={r['formula']} {verdict(r['agree'])}"
                     for r in report["results"])


def _central_word(value: Any) -> str:
    if value is None:
        return "n/a"
    if value == "CONFLICT":
        return "CONFLICT"
    return "central" if value else "non-central"


def _text_central(report: Dict[str, Any]) -> str:
    lines = []
    for r in report["results"]:
        rank = f"rank={r['linear_rank']}"
        if r.get("graph_rank") is not None:
            rank += f"/{r['graph_rank']}"
        lines.append(f"graph={_central_word(r['graph_central'])} "
                     f"linear={_central_word(r['linear_central'])} {rank} {verdict(r['agree'])}")
    return "\n".join(lines)


def _text_ffcheck(report: Dict[str, Any]) -> str:
    lines = [f"n={report['n']} charpoly: {report['polynomial']['text']}"]
    for check in report["checks"]:
        lines.append(f"q={check['q']} charpoly={check['charpoly']} count={check['count']} "
                     f"{verdict(check['agree'])}")
    return "\n".join(lines)


def _text_verify(report: Dict[str, Any]) -> str:
    lines = [f"verify n={report['n']}"]
    width = max((len(c["name"]) for c in report["checks"]), default=0)
    for check in report["checks"]:
        lines.append(f"{check['name'].ljust(width)}  {check['cases']:>8} {verdict(check['agree'])}")
        if check.get("counterexample"):
            lines.append("反例:")
            lines.extend("  " + line for line in check["counterexample"].rstrip("\n").splitlines())
    lines.append(verdict(report["agree"]))
    return "\n".join(lines)


TEXT_RENDERERS = {
    "charpoly": _text_charpoly,
    "census": _text_census,
    "counts": _text_counts,
    "rank": _text_rank,
    "central": _text_central,
    "ffcheck": _text_ffcheck,
    "verify": _text_verify,
}


# ---------------------------------------------------------------------------
# csv
# ---------------------------------------------------------------------------

def _csv_rows(report: Dict[str, Any]) -> Tuple[List[str], List[Dict[str, Any]]]:
    command = report["command"]
    if command == "charpoly":
        fields = ["method", "n", "coeffs", "text", "chambers", "bounded_chambers"]
        rows = [{"method": method, "n": report["n"],
                 "coeffs": " ".join(str(c) for c in reversed(poly["coeffs"])),
                 "text": poly["text"], "chambers": report["chambers"],
                 "bounded_chambers": report["bounded_chambers"]}
                for method, poly in report["polynomials"].items()]
        return fields, rows
    if command == "census":
        census = CountTable.from_dict(report["table"])
        oracle = CountTable.from_dict(report["oracle"]) if report.get("oracle") else None
        keys = sorted(set(census.entries) | set(oracle.entries if oracle else ()))
        fields = ["k", "s", "census"] + (["oracle"] if oracle else [])
        rows = []
        for k, s in keys:
            row = {"k": k, "s": s, "census": census.get(k, s)}
            if oracle:
                row["oracle"] = oracle.get(k, s)
            rows.append(row)
        return fields, rows
    if command == "counts":
        return list(report["columns"]), list(report["rows"])
    if command == "rank":
        return ["exact", "formula", "agree"], list(report["results"])
    if command == "central":
        return ["graph_central", "linear_central", "graph_rank", "linear_rank", "agree"], \
            list(report["results"])
    if command == "ffcheck":
        return ["q", "charpoly", "count", "agree"], list(report["checks"])
    if command == "verify":
        return ["name", "cases", "agree"], list(report["checks"])
    raise ValueError(f"未知的报告类型: {command}")


def _render_csv(report: Dict[str, Any]) -> str:
    fields, rows = _csv_rows(report)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_report(report: Dict[str, Any], fmt: str = "text") -> str:
    """
    格式化报告

    Args:
        report: 由命令构建的报告字典，含 command 字段
        fmt: text / json / csv

    Returns:
        输出字符串（不含结尾换行）
    """
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "text":
        return TEXT_RENDERERS[report["command"]](report)
    raise ValueError(f"未知的输出格式: {fmt}")


def _csv_value(text: str) -> Any:
    if text in ("True", "False"):
        return text == "True"
    try:
        return int(text)
    except ValueError:
        return text


def parse_report(text: str, fmt: str = "json") -> Any:
    """
    解析 json / csv 报告

    json 报告中的多项式还原为 IntPolynomial，γ 表还原为 CountTable；
    csv 报告返回逐行字典，整数列还原为 int。

    Args:
        text: render_report 的输出
        fmt: json / csv

    Returns:
        解析结果
    """
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        return [{key: _csv_value(value) for key, value in row.items()} for row in reader]
    if fmt != "json":
        raise ValueError(f"无法解析的格式: {fmt}")

    data = json.loads(text)
    if "polynomials" in data:
        data["polynomials"] = {m: IntPolynomial.from_dict(p) for m, p in data["polynomials"].items()}
    if "polynomial" in data:
        data["polynomial"] = IntPolynomial.from_dict(data["polynomial"])
    for key in ("table", "oracle"):
        if data.get(key) is not None:
            data[key] = CountTable.from_dict(data[key])
    return data

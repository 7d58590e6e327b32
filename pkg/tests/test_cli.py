"""
命令行测试
"""
import pytest

import jn
from charpoly_utils import IntPolynomial
from census_utils import CountTable
from config_utils import RunConfig
from format_utils import format_table, parse_report, render_report


def run_cli(capsys, *argv):
    code = jn.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCharpoly:
    def test_three_methods(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "--n", "2")
        assert code == 0
        assert out.count("t^2 - 5t + 6") == 3
        assert "chambers=12 bounded=2 rank=2" in out
        assert out.rstrip().endswith("PASS")

    def test_single_method(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "--n", "1", "--method", "census")
        assert code == 0
        assert "census: t - 2" in out
        assert "PASS" not in out

    def test_diagonal(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "--n", "1", "--include-diagonal")
        assert code == 0
        assert "bruteforce: t - 3" in out

    def test_diagonal_needs_bruteforce(self, capsys):
        code, _, err = run_cli(capsys, "charpoly", "--n", "1", "--method", "graph",
                               "--include-diagonal")
        assert code == 2
        assert err.startswith("错误:")

    def test_limit_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("CENSUS_BUDGET", "bruteforce_max_n=1")
        code, out, err = run_cli(capsys, "charpoly", "--n", "2", "--method", "bruteforce")
        assert code == 2
        assert "bruteforce_max_n" in err
        assert out == ""

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "--n", "2", "--format", "json")
        assert code == 0
        report = parse_report(out)
        assert report["polynomials"]["census"] == IntPolynomial((6, -5, 1))
        assert report["agree"] is True
        assert report["chambers"] == 12

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "--n", "2", "--method", "census",
                               "--format", "csv")
        assert code == 0
        rows = parse_report(out, "csv")
        assert rows == [{"method": "census", "n": 2, "coeffs": "1 -5 6", "text": "t^2 - 5t + 6",
                         "chambers": 12, "bounded_chambers": 2}]


class TestCensus:
    def test_with_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "2", "--oracle")
        assert code == 0
        assert "n=2 pairing=pairs total=16" in out
        assert "差异" not in out
        assert out.rstrip().endswith("PASS")

    def test_size_pairing_disagrees(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "4", "--oracle", "--pairing", "size")
        assert code == 1
        assert "差异 k=4 s=5" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "2", "--format", "json")
        assert code == 0
        report = parse_report(out)
        assert report["table"] == CountTable(2, {(0, 0): 1, (1, 1): 5, (2, 2): 8, (2, 3): 2})
        assert report["oracle"] is None

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "1", "--format", "csv", "--oracle")
        assert code == 0
        assert parse_report(out, "csv") == [
            {"k": 0, "s": 0, "census": 1, "oracle": 1},
            {"k": 1, "s": 1, "census": 2, "oracle": 2},
        ]

    def test_invalid_n(self, capsys):
        code, _, err = run_cli(capsys, "census", "--n", "0")
        assert code == 2
        assert "n 必须 >= 1" in err


class TestCounts:
    def test_third_diagnostic(self, capsys):
        code, out, _ = run_cli(capsys, "counts", "--kind", "third", "--k", "2", "--diagnostic")
        assert code == 0
        assert "variant" in out.splitlines()[1]
        assert "variant 与暴力计数不符的基数: 2" in out

    def test_connected_with_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "counts", "--kind", "connected", "--k", "4", "--oracle",
                               "--format", "json")
        assert code == 0
        report = parse_report(out)
        assert [row["formula"] for row in report["rows"]] == [0, 0, 0, 16, 15, 6, 1]
        assert report["agree"] is True

    def test_bad_k(self, capsys):
        code, _, _ = run_cli(capsys, "counts", "--kind", "second", "--k", "0")
        assert code == 2


class TestFileCommands:
    def test_rank(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("n 3\ne 1 2\ne 2 3\ne 1 3\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "rank", str(path))
        assert code == 0
        assert out.strip() == "exact=3 formula=3 PASS"

    def test_rank_bad_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("n 2\ne 1 1\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "rank", str(path))
        assert code == 2
        assert "bad.txt:2" in err

    def test_rank_empty_file(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing\n", encoding="utf-8")
        assert run_cli(capsys, "rank", str(path))[0] == 2

    def test_rank_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"\xff\xfe\x00n 2\n")
        code, out, err = run_cli(capsys, "rank", str(path))
        assert code == 2
        assert "UTF-8" in err
        assert out == ""

    @pytest.mark.parametrize("command", ["rank", "central"])
    def test_directory_path(self, capsys, tmp_path, command):
        path = tmp_path / "graphs"
        path.mkdir()
        code, _, err = run_cli(capsys, command, str(path))
        assert code == 2
        assert err.startswith("错误:")

    def test_central_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "subs.txt"
        path.write_bytes(b"n 1\nII 1 0  # \xb5\xe7\xd1\xb9\n")
        code, _, err = run_cli(capsys, "central", str(path))
        assert code == 2
        assert "UTF-8" in err

    def test_central(self, capsys, tmp_path):
        path = tmp_path / "subs.txt"
        path.write_text("n 2\nI 1 2\nII 1 0\nII 2 1\n\nn 1\nII 1 0\nII 1 1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "central", str(path))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "graph=central linear=central rank=2/2 PASS"
        assert lines[1].startswith("graph=CONFLICT linear=non-central")

    def test_central_diagonal(self, capsys, tmp_path):
        path = tmp_path / "subs.txt"
        path.write_text("n 1\nD 1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "central", str(path))
        assert code == 0
        assert out.startswith("graph=n/a linear=central")


class TestFfcheck:
    def test_default_primes(self, capsys):
        code, out, _ = run_cli(capsys, "ffcheck", "--n", "2")
        assert code == 0
        assert "q=5 charpoly=6 count=6 PASS" in out
        assert out.count("PASS") == 4

    def test_bad_prime(self, capsys):
        code, _, err = run_cli(capsys, "ffcheck", "--n", "2", "--primes", "9")
        assert code == 2
        assert err.startswith("错误:")

    def test_diagonal(self, capsys):
        code, out, _ = run_cli(capsys, "ffcheck", "--n", "2", "--primes", "7",
                               "--include-diagonal")
        assert code == 0
        assert "PASS" in out


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "3", "--samples", "50")
        assert code == 0
        assert "FAIL" not in out
        assert "反例" not in out

    def test_jobs_do_not_change_output(self, capsys):
        _, one, _ = run_cli(capsys, "verify", "--n", "3", "--samples", "20", "--jobs", "1")
        _, many, _ = run_cli(capsys, "verify", "--n", "3", "--samples", "20", "--jobs", "8")
        assert one == many

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "2", "--samples", "5", "--format", "csv")
        assert code == 0
        rows = parse_report(out, "csv")
        assert [row["name"] for row in rows][:3] == ["rank_formula", "rank_random", "centrality"]
        assert all(row["agree"] is True for row in rows)


class TestConfig:
    def test_missing_config_file(self, capsys):
        code, _, err = run_cli(capsys, "census", "--n", "2", "--config", "missing.yaml")
        assert code == 2
        assert "配置文件不存在" in err

    def test_cwd_config_sets_format(self, capsys, tmp_path):
        (tmp_path / "jn_census.yaml").write_text("format: json\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "census", "--n", "1")
        assert code == 0
        assert parse_report(out)["total"] == 3

    def test_invalid_config(self, capsys, tmp_path):
        (tmp_path / "jn_census.yaml").write_text("jobs: 0\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "census", "--n", "1")
        assert code == 2
        assert "jobs" in err

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit):
            jn.main([])


class TestRunDispatch:
    def test_run_config(self, capsys):
        config = RunConfig(command="census", n=2, options={"pairing": "pairs"})
        assert jn.run(config) == 0
        assert "total=16" in capsys.readouterr().out

    def test_unknown_command(self, capsys):
        assert jn.run(RunConfig(command="bogus")) == 2
        assert "未知命令" in capsys.readouterr().err

    def test_invalid_n_is_rejected(self, capsys):
        assert jn.run(RunConfig(command="census", n=0)) == 2
        assert "n 必须 >= 1" in capsys.readouterr().err

    @pytest.mark.parametrize("command", ["rank", "central"])
    def test_missing_path(self, capsys, command):
        assert jn.run(RunConfig(command=command)) == 2
        err = capsys.readouterr().err
        assert err.startswith("错误:")
        assert "path" in err

    def test_counts_options_checked(self, capsys):
        assert jn.run(RunConfig(command="counts", options={"kind": "third"})) == 2
        assert "k 必须 >= 1" in capsys.readouterr().err

    def test_counts_unknown_kind(self, capsys):
        assert jn.run(RunConfig(command="counts", options={"kind": "fourth", "k": 2})) == 2
        assert "kind 必须是" in capsys.readouterr().err

    def test_rank_with_path(self, capsys, tmp_path):
        path = tmp_path / "edge.txt"
        path.write_text("n 2\ne 1 2\n", encoding="utf-8")
        assert jn.run(RunConfig(command="rank", options={"path": str(path)})) == 0
        assert "PASS" in capsys.readouterr().out


class TestFormatting:
    def test_table_alignment(self):
        assert format_table(["s", "count"], [[0, 1], [10, 23]]).splitlines() == [
            " s count", "--------", " 0     1", "10    23"]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_report({"command": "rank", "results": []}, "xml")

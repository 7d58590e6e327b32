"""
分片工具测试
"""
from hypothesis import given, strategies as st

from parallel_utils import run_sharded, shard_ranges


def span(start, stop):
    return list(range(start, stop))


class TestShardRanges:
    @given(st.integers(0, 500), st.integers(1, 40))
    def test_cover_in_order(self, total, jobs):
        ranges = shard_ranges(total, jobs)
        assert [i for start, stop in ranges for i in range(start, stop)] == list(range(total))
        sizes = [stop - start for start, stop in ranges]
        assert max(sizes) - min(sizes) <= 1

    def test_more_jobs_than_items(self):
        assert shard_ranges(3, 8) == [(0, 1), (1, 2), (2, 3)]

    def test_empty(self):
        assert shard_ranges(0, 4) == [(0, 0)]


class TestRunSharded:
    def test_sequential(self):
        parts = run_sharded(span, (), 10, jobs=1)
        assert sum(parts, []) == list(range(10))

    def test_pool_keeps_order(self):
        parts = run_sharded(span, (), 50, jobs=3)
        assert len(parts) == 3
        assert sum(parts, []) == list(range(50))

    def test_progress_writes_stderr_only(self, capsys):
        parts = run_sharded(span, (), 40, jobs=1, progress=True)
        assert len(parts) == 16
        assert sum(parts, []) == list(range(40))
        assert capsys.readouterr().out == ""

"""
分片并行工具模块
按序号区间把穷举切成若干分片，逐片计算后按分片顺序归并
"""
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple

from tqdm import tqdm


PROGRESS_SPLIT = 16


def shard_ranges(total: int, jobs: int) -> List[Tuple[int, int]]:
    """
    把 [0, total) 切成至多 jobs 个连续区间

    Args:
        total: 总数
        jobs: 分片数

    Returns:
        (start, stop) 列表，按 start 递增
    """
    jobs = max(1, min(jobs, total)) if total else 1
    size, extra = divmod(total, jobs)
    ranges = []
    start = 0
    for i in range(jobs):
        stop = start + size + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def run_sharded(func: Callable[..., Any], args: Sequence[Any], total: int,
                jobs: int = 1, progress: bool = False) -> List[Any]:
    """
    对每个分片调用 func(*args, start, stop)

    jobs > 1 时使用进程池；返回值的顺序始终与分片顺序一致，因此归并结果与 jobs 无关。

    Args:
        func: 模块级函数（需可 pickle）
        args: 固定参数
        total: 总数
        jobs: 并行进程数
        progress: 是否在 stderr 上显示分片进度

    Returns:
        各分片的结果
    """
    # 显示进度时切得更细，结果只依赖分片顺序
    ranges = shard_ranges(total, jobs * PROGRESS_SPLIT if progress else jobs)
    bar = tqdm(total=len(ranges), desc=getattr(func, "__name__", "shard"),
               file=sys.stderr, disable=not progress, leave=False)
    with bar:
        if jobs <= 1:
            results = []
            for start, stop in ranges:
                results.append(func(*args, start, stop))
                bar.update(1)
            return results

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(func, *args, start, stop) for start, stop in ranges]
            results = []
            for future in futures:
                results.append(future.result())
                bar.update(1)
            return results

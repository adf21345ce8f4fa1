"""Deterministic fan-out helper for the embarrassingly parallel scans.

A scan splits its input into chunks, maps a pure top-level function over
them (serially, or on a process pool when jobs > 1), and merges in chunk
order, so the worker count never changes any result.
"""
from __future__ import annotations

import multiprocessing
import os


def effective_jobs(jobs: int | None) -> int:
    if jobs is None:
        return os.cpu_count() or 1
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    return jobs


def run_chunks(fn, chunks: list, jobs: int | None) -> list:
    """[fn(chunk) for chunk in chunks], possibly on a process pool.

    fn must be a picklable module-level function and pure; results come back
    in chunk order regardless of completion order.
    """
    jobs = min(effective_jobs(jobs), len(chunks)) if chunks else 1
    if jobs <= 1:
        return [fn(chunk) for chunk in chunks]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(fn, chunks)


def stride_chunks(items: list, parts: int) -> list:
    """Split round-robin so early-index-heavy workloads stay balanced;
    callers must merge order-independently (sort or sum)."""
    parts = max(1, min(parts, len(items)))
    return [items[k::parts] for k in range(parts)]

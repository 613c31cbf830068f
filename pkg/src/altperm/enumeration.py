"""Exhaustive generators and avoidance counters over permutation classes.

The counter is a prefix-pruned backtracking search: values are placed
position by position, class constraints (forced ascent/descent at each
boundary) are applied before the containment prune, and a branch is
abandoned as soon as its prefix contains the forbidden pattern.  The prune
is incremental: after placing a value, only copies of the pattern ending at
that value need to be searched for.

The search forest can be split at a fixed depth into independent prefix
jobs whose counts are summed, so parallel runs are schedule-independent.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perms import (
    Perm,
    PermClass,
    contains,
    contains_ending_here,
)


@dataclass(frozen=True)
class AvoidanceQuery:
    pattern: Perm
    cls: PermClass
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if len(self.pattern) < 1:
            raise ValueError("pattern must be nonempty")


@dataclass(frozen=True)
class CountResult:
    query: AvoidanceQuery
    count: int
    elapsed: float


class BudgetExceeded(Exception):
    """Raised when a counting run overruns its time budget."""

    def __init__(self, partial: int, elapsed: float) -> None:
        super().__init__(f"budget exceeded after {elapsed:.1f}s")
        self.partial = partial
        self.elapsed = elapsed


def generate(cls: PermClass, n: int) -> Iterator[Perm]:
    """Yield each member of the class exactly once, in lexicographic order
    of one-line notation.  The stream is empty when the class is empty at
    length n (e.g. a DescentSet index out of range)."""
    if n == 0:
        if cls.member(()):
            yield ()
        return
    if not cls.feasible(n):
        return
    prefix: list[int] = []
    used = [False] * (n + 1)

    def rec() -> Iterator[Perm]:
        depth = len(prefix)
        if depth == n:
            yield tuple(prefix)
            return
        need = cls.required(depth, n) if depth >= 1 else 0
        last = prefix[-1] if depth >= 1 else 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            if need == 1 and v < last:
                continue
            if need == -1 and v > last:
                continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    yield from rec()


def count_class(cls: PermClass, n: int) -> int:
    """Size of the class at length n (no avoidance constraint)."""
    return sum(1 for _ in generate(cls, n))


def count_avoiders(
    query: AvoidanceQuery,
    budget: float | None = None,
) -> CountResult:
    """Exact count of class members of length n avoiding the pattern.

    A prefix that already contains the pattern is abandoned: every extension
    would contain it too.  With `budget` set, elapsed time is checked at
    depth-2 branch boundaries and BudgetExceeded is raised on overrun.
    """
    t0 = time.perf_counter()
    count = _count_avoiders_raw(query.pattern, query.cls, query.n, budget=budget)
    return CountResult(query, count, time.perf_counter() - t0)


def _count_avoiders_raw(
    pattern: Perm,
    cls: PermClass,
    n: int,
    budget: float | None = None,
    forced_prefix: Sequence[int] = (),
) -> int:
    if n == 0:
        return 1 if cls.member(()) else 0
    if not cls.feasible(n):
        return 0
    t0 = time.perf_counter()
    b = len(pattern)
    prefix: list[int] = list(forced_prefix)
    used = [False] * (n + 1)
    for v in forced_prefix:
        used[v] = True
    if prefix and contains(tuple(prefix), pattern):
        return 0
    leaves = 0

    def rec() -> int:
        nonlocal leaves
        depth = len(prefix)
        if depth == n:
            leaves += 1
            return 1
        if budget is not None and depth == 2:
            elapsed = time.perf_counter() - t0
            if elapsed > budget:
                raise BudgetExceeded(leaves, elapsed)
        need = cls.required(depth, n) if depth >= 1 else 0
        last = prefix[-1] if depth >= 1 else 0
        subtotal = 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            if need == 1 and v < last:
                continue
            if need == -1 and v > last:
                continue
            prefix.append(v)
            if depth + 1 < b or not contains_ending_here(prefix, pattern):
                used[v] = True
                subtotal += rec()
                used[v] = False
            prefix.pop()
        return subtotal

    return rec()


def count_by_filter(pattern: Perm, cls: PermClass, n: int) -> int:
    """Independent oracle: generate the whole class and test containment on
    each member with the plain (non-incremental) matcher."""
    return sum(1 for w in generate(cls, n) if not contains(w, pattern))


def sequence(
    pattern: Perm,
    cls: PermClass,
    n_max: int,
    cache=None,
) -> list[int]:
    """Counts for n = 1..n_max, consulting/propagating a cache if given."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        if cache is not None:
            hit = cache.get(pattern, cls, n)
            if hit is not None:
                out.append(hit)
                continue
        res = count_avoiders(AvoidanceQuery(pattern, cls, n))
        if cache is not None:
            cache.put(pattern, cls, n, res.count)
        out.append(res.count)
    return out


# ---------------------------------------------------------------------------
# Prefix partitioning (parallel contract: split at depth 2, sum the parts)


def prefix_jobs(cls: PermClass, n: int, depth: int = 2) -> list[Perm]:
    """Class-consistent prefixes of the given depth; the avoider count at
    length n is the sum of counts over these disjoint subtrees."""
    if n < depth:
        return [()]
    jobs: list[Perm] = []

    def rec(prefix: list[int], used: set[int]) -> None:
        d = len(prefix)
        if d == depth:
            jobs.append(tuple(prefix))
            return
        need = cls.required(d, n) if d >= 1 else 0
        last = prefix[-1] if d >= 1 else 0
        for v in range(1, n + 1):
            if v in used:
                continue
            if need == 1 and v < last:
                continue
            if need == -1 and v > last:
                continue
            prefix.append(v)
            used.add(v)
            rec(prefix, used)
            prefix.pop()
            used.remove(v)

    rec([], set())
    return jobs


def _job_count(args) -> int:
    pattern, cls, n, prefix = args
    return _count_avoiders_raw(pattern, cls, n, forced_prefix=prefix)


def count_avoiders_parallel(query: AvoidanceQuery, jobs: int) -> CountResult:
    """Prefix-partitioned parallel count; the result is independent of
    scheduling because the reduction is a plain sum over disjoint subtrees."""
    t0 = time.perf_counter()
    if jobs <= 1 or query.n < 3:
        return count_avoiders(query)
    import multiprocessing

    parts = prefix_jobs(query.cls, query.n, depth=2)
    work = [(query.pattern, query.cls, query.n, p) for p in parts]
    with multiprocessing.Pool(jobs) as pool:
        count = sum(pool.map(_job_count, work, chunksize=8))
    return CountResult(query, count, time.perf_counter() - t0)

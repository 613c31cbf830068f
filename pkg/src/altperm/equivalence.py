"""Equivalence classification of patterns over a class, non-equivalence
via doubling numbers, descent-set inequality checks, and conjecture sweeps.

Classification over a finite range of lengths is necessarily provisional:
blocks are reported as "equal up to n_max", never as proven equivalences.
Non-equivalence decisions, by contrast, always carry a concrete witness
length at which the counts differ.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .perms import (
    ALTERNATING,
    DescentSet,
    Perm,
    PermClass,
    doubling,
    reverse,
    reverse_complement,
)
from .enumeration import AvoidanceQuery, count_avoiders
from .diagrams import (
    ADYoungDiagram,
    all_diagrams,
    semialternating_configs,
    transversal_contains,
    valid_transversals,
)
from .extension import direct_sum


def _count(pattern: Perm, cls: PermClass, n: int, cache=None) -> int:
    if cache is not None:
        hit = cache.get(pattern, cls, n)
        if hit is not None:
            return hit
    c = count_avoiders(AvoidanceQuery(pattern, cls, n)).count
    if cache is not None:
        cache.put(pattern, cls, n, c)
    return c


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class EquivalenceBlock:
    patterns: tuple[Perm, ...]
    counts: tuple[int, ...]
    trivial: bool


@dataclass(frozen=True)
class EquivalenceReport:
    class_label: str
    lengths: tuple[int, ...]
    blocks: tuple[EquivalenceBlock, ...]

    def block_of(self, pattern: Perm) -> EquivalenceBlock:
        for blk in self.blocks:
            if pattern in blk.patterns:
                return blk
        raise KeyError(pattern)


def trivial_symmetry_for(cls: PermClass, lengths: Sequence[int]):
    """The count-preserving pattern symmetry for the given sweep: reversal
    on odd-length alternating sweeps, reverse-complement on even ones."""
    if cls == ALTERNATING and lengths:
        if all(n % 2 == 1 for n in lengths):
            return reverse
        if all(n % 2 == 0 for n in lengths):
            return reverse_complement
    return None


def classify(
    patterns: Iterable[Perm],
    cls: PermClass,
    lengths: Sequence[int],
    cache=None,
) -> EquivalenceReport:
    """Partition patterns into blocks with identical count sequences over
    the given lengths.  A block is flagged trivial when it is a single
    orbit of the applicable symmetry (so the matching counts are forced)."""
    patterns = list(dict.fromkeys(tuple(p) for p in patterns))
    if not patterns or not lengths:
        raise ValueError("need at least one pattern and one length")
    sym = trivial_symmetry_for(cls, lengths)
    seqs: dict[Perm, tuple[int, ...]] = {}
    for p in patterns:
        seqs[p] = tuple(_count(p, cls, n, cache) for n in lengths)
    groups: dict[tuple[int, ...], list[Perm]] = {}
    for p in patterns:
        groups.setdefault(seqs[p], []).append(p)
    blocks = []
    for counts, members in groups.items():
        trivial = False
        if sym is not None and len(members) >= 1:
            orbit = {members[0], sym(members[0])}
            trivial = set(members) <= orbit
        blocks.append(EquivalenceBlock(tuple(members), counts, trivial))
    blocks.sort(key=lambda blk: (-max(blk.counts), blk.patterns))
    return EquivalenceReport(cls.label(), tuple(lengths), tuple(blocks))


# ---------------------------------------------------------------------------
# Non-equivalence from doubling numbers


@dataclass(frozen=True)
class NonequivalenceVerdict:
    decided: bool
    witness_n: int | None = None
    counts: tuple[int, int] | None = None
    reason: str = ""


def doubling_nonequivalence(
    p: Perm, q: Perm, parity: str, cache=None
) -> NonequivalenceVerdict:
    """Decide non-equivalence for alternating permutations of the given
    parity from shortest-container lengths, then confirm with an explicit
    length where the counts differ."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if p == q:
        return NonequivalenceVerdict(False, reason="identical patterns")
    kp = len(p) + doubling(p).doubling_number
    kq = len(q) + doubling(q).doubling_number
    if parity == "even":
        if math.ceil(kp / 2) == math.ceil(kq / 2):
            return NonequivalenceVerdict(False, reason="ceiling test indecisive")
        short = min(kp, kq)
        n = 2 * math.ceil(short / 2)
    else:
        if math.ceil((kp - 1) / 2) == math.ceil((kq - 1) / 2):
            return NonequivalenceVerdict(False, reason="ceiling test indecisive")
        short = min(kp, kq)
        n = 2 * math.ceil((short - 1) / 2) + 1
    cp = _count(p, ALTERNATING, n, cache)
    cq = _count(q, ALTERNATING, n, cache)
    if cp == cq:
        raise AssertionError(
            f"ceiling test decided but counts agree at n={n}; "
            "the container-length bound is broken"
        )
    return NonequivalenceVerdict(True, n, (cp, cq), "container lengths differ")


# ---------------------------------------------------------------------------
# Descent-set inequalities


@dataclass(frozen=True)
class InequalityReport:
    holds: bool
    details: tuple[tuple[int, int, int], ...]  # (n, lhs, rhs)


def check_ineq_12_21(
    tail: Perm,
    k: int,
    n_max: int,
    cache=None,
) -> InequalityReport:
    """|D^k_n(12q)| <= |D^k_n(21q)| for the tail q (values shifted up by 2),
    n <= n_max, via exact counting over descent-set classes."""
    t = len(tail) + 2
    lhs_pat = (1, 2) + tuple(v + 2 for v in tail)
    rhs_pat = (2, 1) + tuple(v + 2 for v in tail)
    rows: list[tuple[int, int, int]] = []
    ok = True
    for n in range(1, n_max + 1):
        D = frozenset(range(k, n, k))
        cls = DescentSet(D)
        lhs = _count(lhs_pat, cls, n, cache)
        rhs = _count(rhs_pat, cls, n, cache)
        rows.append((n, lhs, rhs))
        ok = ok and lhs <= rhs
    return InequalityReport(ok, tuple(rows))


def extend1_hypothesis(ady: ADYoungDiagram, r: int) -> bool:
    """Every required descent at index <= n-1-r is immediately preceded by
    a required ascent."""
    n = ady.n
    return all(d - 1 in ady.A for d in ady.D if d <= n - 1 - r)


def extend2_hypothesis(ady: ADYoungDiagram, r: int) -> bool:
    """Every required ascent at index <= n-1-r is immediately followed by
    a required descent."""
    n = ady.n
    return all(a + 1 in ady.D for a in ady.A if a <= n - 1 - r)


def check_extend_inequality(ady: ADYoungDiagram, C: Perm, which: int) -> bool:
    """Compare avoider counts for 12 (+) C against 21 (+) C on one triple;
    `which` selects the direction (1: <=, 2: >=)."""
    i2c = direct_sum((1, 2), C)
    j2c = direct_sum((2, 1), C)
    Y = ady.diagram
    lhs = rhs = 0
    for T in valid_transversals(ady):
        if not transversal_contains(Y, T, i2c):
            lhs += 1
        if not transversal_contains(Y, T, j2c):
            rhs += 1
    return lhs <= rhs if which == 1 else lhs >= rhs


# ---------------------------------------------------------------------------
# Conjecture sweeps


@dataclass(frozen=True)
class ConjectureVerdict:
    conjecture: str
    swept: str
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _sesa_sweep(k_max: int, rows_max: int, deadline: float | None = None) -> ConjectureVerdict:
    """|S_Y(F_k)| = |S_Y(J_k)| over all 1-semialternating triples within the
    row budget, for 3 <= k <= k_max."""
    import time

    for k in range(3, k_max + 1):
        fk = tuple(range(k - 1, 0, -1)) + (k,)
        jk = tuple(range(k, 0, -1))
        for rows in range(1, rows_max + 1):
            for Y in all_diagrams(rows, rows):
                transversal_list = None
                for ady in semialternating_configs(Y):
                    if deadline is not None and time.perf_counter() > deadline:
                        raise TimeoutError(
                            f"budget exhausted at k={k}, {rows} rows"
                        )
                    if transversal_list is None:
                        transversal_list = [
                            (T, transversal_contains(Y, T, fk), transversal_contains(Y, T, jk))
                            for T in valid_transversals(
                                ADYoungDiagram(Y, frozenset(), frozenset())
                            )
                        ]
                    nf = nj = 0
                    for T, has_f, has_j in transversal_list:
                        ok = all(T[i - 1] < T[i] for i in ady.A) and all(
                            T[i - 1] > T[i] for i in ady.D
                        )
                        if not ok:
                            continue
                        nf += not has_f
                        nj += not has_j
                    if nf != nj:
                        return ConjectureVerdict(
                            "sesa",
                            f"k<={k_max}, rows<={rows_max}",
                            f"{ady} has {nf} vs {nj} at k={k}",
                        )
    return ConjectureVerdict("sesa", f"k<={k_max}, rows<={rows_max}")


def _decreasing_sweep(k_max: int, n_max: int, cache=None) -> ConjectureVerdict:
    """The decreasing pattern maximizes alternating avoider counts: for
    every other q of the same length, |A_n(q)| <= |A_n(decreasing)|, with
    strict inequality at even n >= 2k-2.  (k = 2 is degenerate: alternating
    permutations of length >= 3 contain both length-2 patterns.)"""
    import itertools

    for k in range(3, k_max + 1):
        dec = tuple(range(k, 0, -1))
        for n in range(1, n_max + 1):
            base = _count(dec, ALTERNATING, n, cache)
            for q in itertools.permutations(range(1, k + 1)):
                if q == dec:
                    continue
                c = _count(q, ALTERNATING, n, cache)
                if c > base:
                    return ConjectureVerdict(
                        "decreasing", f"k<={k_max}, n<={n_max}",
                        f"|A_{n}({q})| = {c} > {base}",
                    )
                if n % 2 == 0 and n >= 2 * k - 2 and c == base:
                    return ConjectureVerdict(
                        "decreasing", f"k<={k_max}, n<={n_max}",
                        f"equality at even n={n} for {q}",
                    )
    return ConjectureVerdict("decreasing", f"k<={k_max}, n<={n_max}")


def _dk_pair_sweep(
    name: str, left: Perm, right: Perm, k_max: int, n_max: int, cache=None
) -> ConjectureVerdict:
    from .perms import DescentType

    for k in range(1, k_max + 1):
        cls = DescentType(k)
        for n in range(1, n_max + 1):
            a = _count(left, cls, n, cache)
            b = _count(right, cls, n, cache)
            if a != b:
                return ConjectureVerdict(
                    name, f"k<={k_max}, n<={n_max}",
                    f"|D^{k}_{n}({left})| = {a} != {b} = |D^{k}_{n}({right})|",
                )
    return ConjectureVerdict(name, f"k<={k_max}, n<={n_max}")


def check_conjecture(
    conjecture: str,
    k_max: int = 4,
    rows_max: int = 6,
    n_max: int = 9,
    cache=None,
    budget: float | None = None,
) -> ConjectureVerdict:
    """Run a named conjecture sweep within the given budgets.

    Known names: "sesa" (decreasing vs one-misplaced block on
    1-semialternating triples), "decreasing" (decreasing pattern is hardest
    to avoid), "dk-2134" and "dk-1243" (descent-type count equalities)."""
    import time

    deadline = time.perf_counter() + budget if budget is not None else None
    if conjecture == "sesa":
        if k_max <= 2:
            raise ValueError("the sweep starts at block size 3")
        return _sesa_sweep(k_max, rows_max, deadline)
    if conjecture == "decreasing":
        return _decreasing_sweep(k_max, n_max, cache)
    if conjecture == "dk-2134":
        return _dk_pair_sweep("dk-2134", (2, 1, 3, 4), (4, 1, 2, 3), k_max, n_max, cache)
    if conjecture == "dk-1243":
        return _dk_pair_sweep("dk-1243", (1, 2, 4, 3), (2, 3, 4, 1), k_max, n_max, cache)
    raise ValueError(f"unknown conjecture {conjecture!r}")

"""Permutations in one-line notation, pattern containment, and descent statistics.

A permutation of length n is a tuple of the values 1..n, each appearing once
(one-line notation).  The empty tuple is the empty permutation.  All indices
in docstrings are 1-based, matching the usual combinatorial conventions;
Python-level tuple indexing is of course 0-based.

Text I/O is 1-based: a permutation prints as a comma-free digit string for
n <= 9 ("35624718") and comma-separated for n >= 10 ("10,3,1,...").  Both
forms are accepted on input.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def is_perm(w: Sequence[int]) -> bool:
    """Check that w is a rearrangement of 1..len(w).

    >>> is_perm(()), is_perm((2, 1, 3)), is_perm((1, 1)), is_perm((0, 1))
    (True, True, False, False)
    """
    n = len(w)
    return sorted(w) == list(range(1, n + 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def standardize(seq: Sequence[int]) -> Perm:
    """Pattern of a sequence of distinct integers: replace the i-th smallest
    value by i.

    >>> standardize((2, 4, 6))
    (1, 2, 3)
    >>> standardize((5, 1, 4))
    (3, 1, 2)
    """
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, idx in enumerate(order, start=1):
        out[idx] = rank
    return tuple(out)


def parse_perm(text: str) -> Perm:
    """Parse one-line notation, digit-string or comma-separated.

    >>> parse_perm("35624718")
    (3, 5, 6, 2, 4, 7, 1, 8)
    >>> parse_perm("10,3,1,2,4,5,6,7,8,9")[:2]
    (10, 3)
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        w = tuple(int(part) for part in text.split(","))
    else:
        w = tuple(int(ch) for ch in text)
    if not is_perm(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {text!r}")
    return w


def format_perm(w: Perm) -> str:
    """Emit one-line notation; digit string for n <= 9, else comma-separated."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def complement(w: Perm) -> Perm:
    """Map each value v to n+1-v.

    >>> complement((1, 2, 3))
    (3, 2, 1)
    """
    n = len(w)
    return tuple(n + 1 - v for v in w)


def reverse(w: Perm) -> Perm:
    return w[::-1]


def reverse_complement(w: Perm) -> Perm:
    return complement(w[::-1])


def contains(w: Perm, q: Perm) -> bool:
    """True iff some subsequence of w is order-isomorphic to q.

    The empty pattern is contained in everything; nothing of positive length
    is contained in the empty permutation.

    Depth-first embedding search with a feasibility bound on remaining
    positions; a candidate for pattern slot j must compare to every already
    chosen value the way q_j compares to the corresponding pattern entry.

    >>> contains((2, 1, 4, 5, 3, 6), (1, 2, 3))
    True
    >>> contains((1, 2, 3, 4), (2, 1))
    False
    """
    b = len(q)
    if b == 0:
        return True
    n = len(w)
    if b > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == b:
            return True
        qj = q[j]
        for i in range(start, n - (b - j) + 1):
            v = w[i]
            ok = True
            for m in range(j):
                if (v < chosen[m]) != (qj < q[m]):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids(w: Perm, q: Perm) -> bool:
    return not contains(w, q)


def contains_ending_here(w: Sequence[int], q: Perm) -> bool:
    """True iff some copy of q in w uses the last entry of w as the final
    pattern entry.  Incremental form of `contains` for prefix-pruned search:
    if w[:-1] is known q-free, then w contains q iff this holds.  Works on
    any sequence of distinct values, not only full permutations.
    """
    b = len(q)
    if b == 0:
        return True
    n = len(w)
    if b > n:
        return False
    last = w[-1]
    qb = q[b - 1]
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == b - 1:
            return True
        qj = q[j]
        below = qj < qb
        for i in range(start, n - (b - j) + 1):
            v = w[i]
            if (v < last) != below:
                continue
            ok = True
            for m in range(j):
                if (v < chosen[m]) != (qj < q[m]):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def descent_set(w: Perm) -> frozenset[int]:
    """Positions i in [n-1] with w_i > w_{i+1}.

    >>> sorted(descent_set((2, 4, 5, 3, 7, 8, 1, 6)))
    [3, 6]
    """
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def ascent_set(w: Perm) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] < w[i + 1])


# ---------------------------------------------------------------------------
# Permutation classes


@dataclass(frozen=True)
class PermClass:
    """A family of permutations cut out by ascent/descent constraints.

    `required(i, n)` reports the constraint at boundary i in [n-1]:
    +1 forced ascent, -1 forced descent, 0 free.  `feasible(n)` is False only
    when the class is empty at length n for structural reasons (an index out
    of range).
    """

    def required(self, i: int, n: int) -> int:
        raise NotImplementedError

    def feasible(self, n: int) -> bool:
        return True

    def member(self, w: Perm) -> bool:
        n = len(w)
        if not self.feasible(n):
            return False
        for i in range(1, n):
            need = self.required(i, n)
            if need == 1 and not w[i - 1] < w[i]:
                return False
            if need == -1 and not w[i - 1] > w[i]:
                return False
        return True

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class All(PermClass):
    def required(self, i: int, n: int) -> int:
        return 0

    def label(self) -> str:
        return "all"


@dataclass(frozen=True)
class Alternating(PermClass):
    """w_1 < w_2 > w_3 < ... : ascents at odd boundaries, descents at even."""

    def required(self, i: int, n: int) -> int:
        return 1 if i % 2 == 1 else -1

    def label(self) -> str:
        return "alt"


@dataclass(frozen=True)
class ReverseAlternating(PermClass):
    """w_1 > w_2 < w_3 > ... : the complement of Alternating."""

    def required(self, i: int, n: int) -> int:
        return -1 if i % 2 == 1 else 1

    def label(self) -> str:
        return "ralt"


@dataclass(frozen=True)
class DescentType(PermClass):
    """Ascending rows of length k separated by descents: descents exactly at
    the boundaries k, 2k, 3k, ... that are < n.  DescentType(2) is Alternating.
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("descent type requires k >= 1")

    def required(self, i: int, n: int) -> int:
        return -1 if i % self.k == 0 else 1

    def label(self) -> str:
        return f"dk:{self.k}"


@dataclass(frozen=True)
class DescentSet(PermClass):
    """Permutations whose descent set is exactly D."""

    D: frozenset[int]

    def required(self, i: int, n: int) -> int:
        return -1 if i in self.D else 1

    def feasible(self, n: int) -> bool:
        return all(1 <= d <= n - 1 for d in self.D)

    def label(self) -> str:
        return "dset:" + ",".join(str(d) for d in sorted(self.D))


@dataclass(frozen=True)
class AscentSet(PermClass):
    """Permutations whose ascent set is exactly A."""

    A: frozenset[int]

    def required(self, i: int, n: int) -> int:
        return 1 if i in self.A else -1

    def feasible(self, n: int) -> bool:
        return all(1 <= a <= n - 1 for a in self.A)

    def label(self) -> str:
        return "aset:" + ",".join(str(a) for a in sorted(self.A))


ALL = All()
ALTERNATING = Alternating()
REVERSE_ALTERNATING = ReverseAlternating()


def class_member(w: Perm, c: PermClass) -> bool:
    return c.member(w)


def parse_class(text: str) -> PermClass:
    """Parse a class label: all | alt | ralt | dk:K | dset:1,3 | aset:2."""
    text = text.strip()
    if text == "all":
        return ALL
    if text == "alt":
        return ALTERNATING
    if text == "ralt":
        return REVERSE_ALTERNATING
    if text.startswith("dk:"):
        return DescentType(int(text[3:]))
    if text.startswith("dset:"):
        body = text[5:]
        ids = frozenset(int(p) for p in body.split(",") if p)
        return DescentSet(ids)
    if text.startswith("aset:"):
        body = text[5:]
        ids = frozenset(int(p) for p in body.split(",") if p)
        return AscentSet(ids)
    raise ValueError(f"unknown permutation class: {text!r}")


# ---------------------------------------------------------------------------
# Doubling sets


@dataclass(frozen=True)
class DoublingProfile:
    doubling_set: frozenset[int]
    doubling_number: int


def doubling(p: Perm) -> DoublingProfile:
    """Double ascents and double descents of p, with the sentinel p_0 = +inf.

    Index i in [n-1] belongs to the doubling set when p_{i-1} > p_i > p_{i+1}
    or p_{i-1} < p_i < p_{i+1}.  The sentinel makes an initial descent count
    as a double descent; alternating permutations are exactly those with
    doubling number 0.

    >>> sorted(doubling((1, 2, 3)).doubling_set)
    [2]
    >>> doubling((3, 2, 1)).doubling_number
    2
    """
    n = len(p)
    if n == 0:
        raise ValueError("doubling is defined for length >= 1")
    dset = []
    for i in range(1, n):
        prev = p[i - 2] if i >= 2 else n + 1  # p_0 = +infinity sentinel
        if prev > p[i - 1] > p[i] or prev < p[i - 1] < p[i]:
            dset.append(i)
    return DoublingProfile(frozenset(dset), len(dset))


def shortest_alternating_container(p: Perm) -> Perm:
    """An alternating permutation of length k + t containing p, where t is
    the doubling number of p; this length is minimal.

    The construction places p_m at position f(m) = m + |d(p) ∩ [m-1]| and
    fills each skipped position with a value that repairs alternation: a new
    minimum at odd gap positions, a new maximum at even ones.

    >>> shortest_alternating_container((3, 2, 1))
    (3, 5, 2, 4, 1)
    >>> shortest_alternating_container((1, 3, 2))
    (1, 3, 2)
    """
    k = len(p)
    if k == 0:
        raise ValueError("requires length >= 1")
    d = doubling(p).doubling_set
    t = len(d)
    total = k + t
    pos = []
    shift = 0
    for m in range(1, k + 1):
        pos.append(m + shift)
        if m in d:
            shift += 1
    placed = dict(zip(pos, p))
    gaps = [i for i in range(1, total + 1) if i not in placed]
    low_gaps = [i for i in gaps if i % 2 == 1]
    high_gaps = [i for i in gaps if i % 2 == 0]
    w = [0] * total
    for i, v in placed.items():
        w[i - 1] = v + len(low_gaps)
    for rank, i in enumerate(sorted(low_gaps), start=1):
        w[i - 1] = rank
    for rank, i in enumerate(sorted(high_gaps)):
        w[i - 1] = total - rank
    return tuple(w)


def perms_of(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))

"""Young diagrams with required ascents/descents, and their transversals.

A Young diagram here always has the same number of rows and columns: a
diagram with r nonempty rows must have first row length r.  Shapes that
would need padding with empty rows are rejected at construction (they admit
no transversal, and silently counting them as zero hides input mistakes).

An AD triple (Y, A, D) adds a required ascent set A and required descent
set D; a transversal t_1..t_n (one marked column per row, all distinct) is
valid when its ascent set contains A and its descent set contains D.

Text forms: a diagram is "4,4,2,2"; an AD triple is "4,4,2,2;A=;D=3".
All row/column indices are 1-based.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .perms import Perm, standardize

Transversal = tuple[int, ...]


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(rows[i] < rows[i + 1] for i in range(n - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        if n and rows[-1] < 1:
            raise ValueError(f"row lengths must be positive: {rows}")
        if n and rows[0] != n:
            raise ValueError(
                f"diagram must have as many columns as rows (first row {rows[0]}, "
                f"{n} rows); pad-with-empty-rows shapes are rejected"
            )

    @property
    def n(self) -> int:
        return len(self.rows)

    def row_len(self, i: int) -> int:
        return self.rows[i - 1]

    def contains_square(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n and 1 <= j <= self.rows[i - 1]

    def contains_staircase(self) -> bool:
        """Whether Y contains the staircase (n, n-1, ..., 1)."""
        return all(self.rows[i] >= self.n - i for i in range(self.n))

    def conjugate(self) -> "YoungDiagram":
        cols = tuple(
            sum(1 for r in self.rows if r >= j) for j in range(1, self.n + 1)
        )
        return YoungDiagram(cols)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class ADYoungDiagram:
    diagram: YoungDiagram
    A: frozenset[int]
    D: frozenset[int]
    relaxed: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "D", frozenset(self.D))
        n = self.diagram.n
        for i in self.A | self.D:
            if not 1 <= i <= n - 1:
                raise ValueError(f"index {i} outside [{n - 1}]")
        if self.A & self.D:
            raise ValueError("required ascent and descent sets must be disjoint")
        if not self.relaxed:
            rows = self.diagram.rows
            for i in self.A | self.D:
                if rows[i - 1] != rows[i]:
                    raise ValueError(
                        f"rows {i} and {i + 1} differ in length; "
                        "use relaxed=True to evaluate such triples anyway"
                    )

    @property
    def n(self) -> int:
        return self.diagram.n

    def __str__(self) -> str:
        a = ",".join(str(i) for i in sorted(self.A))
        d = ",".join(str(i) for i in sorted(self.D))
        return f"{self.diagram};A={a};D={d}"


def is_ad_young(Y: YoungDiagram, A: Iterable[int], D: Iterable[int]) -> bool:
    """Disjointness plus equal-row-length at every index of A and D."""
    try:
        ADYoungDiagram(Y, frozenset(A), frozenset(D))
    except ValueError:
        return False
    return True


def parse_diagram(text: str) -> YoungDiagram:
    return YoungDiagram(tuple(int(p) for p in text.strip().split(",") if p))


def parse_ad(text: str) -> ADYoungDiagram:
    """Parse "4,4,2,2;A=;D=3" into an AD triple."""
    parts = text.strip().split(";")
    if len(parts) != 3 or not parts[1].startswith("A=") or not parts[2].startswith("D="):
        raise ValueError(f"expected 'rows;A=..;D=..', got {text!r}")
    Y = parse_diagram(parts[0])
    A = frozenset(int(p) for p in parts[1][2:].split(",") if p)
    D = frozenset(int(p) for p in parts[2][2:].split(",") if p)
    return ADYoungDiagram(Y, A, D)


# ---------------------------------------------------------------------------
# Alternation predicates


def _window_alternating(ady: ADYoungDiagram, start: int, x: int) -> bool:
    k = ady.n
    for i in range(start, k - x + 1):
        if (i in ady.A) != (i + 1 in ady.D):
            return False
    return True


def is_x_alternating(ady: ADYoungDiagram, x: int) -> bool:
    """i in A iff i+1 in D over the window 0 <= i <= k-x.

    The i = 0 case forces 1 not in D, so 1-alternating triples pair with
    alternating permutations (which open with an ascent).
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    return _window_alternating(ady, 0, x)


def is_x_semialternating(ady: ADYoungDiagram, x: int) -> bool:
    """Same biconditional with the window start shifted to i = 1, so a
    leading required descent is allowed (reverse alternating analogue)."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return _window_alternating(ady, 1, x)


# ---------------------------------------------------------------------------
# Transversals


def transversals(Y: YoungDiagram) -> Iterator[Transversal]:
    """All transversals of Y (one column per row, all distinct, inside Y)."""
    n = Y.n
    rows = Y.rows
    used = [False] * (n + 1)
    cols: list[int] = []

    def rec() -> Iterator[Transversal]:
        i = len(cols)
        if i == n:
            yield tuple(cols)
            return
        for c in range(1, rows[i] + 1):
            if not used[c]:
                used[c] = True
                cols.append(c)
                yield from rec()
                cols.pop()
                used[c] = False

    yield from rec()


def is_valid_transversal(ady: ADYoungDiagram, T: Sequence[int]) -> bool:
    Y = ady.diagram
    n = Y.n
    if len(T) != n or sorted(T) != list(range(1, n + 1)):
        return False
    if any(T[i] > Y.rows[i] for i in range(n)):
        return False
    for i in ady.A:
        if not T[i - 1] < T[i]:
            return False
    for i in ady.D:
        if not T[i - 1] > T[i]:
            return False
    return True


def valid_transversals(ady: ADYoungDiagram) -> Iterator[Transversal]:
    """Transversals whose ascent set contains A and descent set contains D,
    in lexicographic order of the column word."""
    Y = ady.diagram
    n = Y.n
    rows = Y.rows
    A, D = ady.A, ady.D
    used = [False] * (n + 1)
    cols: list[int] = []

    def rec() -> Iterator[Transversal]:
        i = len(cols)
        if i == n:
            yield tuple(cols)
            return
        lo, hi = 1, rows[i]
        if i >= 1:
            if i in A:
                lo = max(lo, cols[-1] + 1)
            elif i in D:
                hi = min(hi, cols[-1] - 1)
        for c in range(lo, hi + 1):
            if not used[c]:
                used[c] = True
                cols.append(c)
                yield from rec()
                cols.pop()
                used[c] = False

    yield from rec()


def points_contain(
    points: Iterable[tuple[int, int]],
    pattern: Perm,
    Y: YoungDiagram,
) -> bool:
    """Whether a set of (row, col) points contains the permutation matrix of
    `pattern`: rows a_1 < ... < a_r and columns c_1 < ... < c_r among the
    points with the point in row a_i sitting in column c_{pattern_i}, and the
    corner square (a_r, c_r) inside Y."""
    r = len(pattern)
    if r == 0:
        return True
    pts = sorted(points)
    m = len(pts)
    if m < r:
        return False

    cols_chosen: list[int] = []

    def rec(start: int) -> bool:
        j = len(cols_chosen)
        if j == r:
            return True
        pj = pattern[j]
        for idx in range(start, m - (r - j) + 1):
            row, col = pts[idx]
            ok = True
            for t in range(j):
                if (col < cols_chosen[t]) != (pj < pattern[t]):
                    ok = False
                    break
            if not ok:
                continue
            if j == r - 1:
                corner_col = max(cols_chosen + [col])
                if not Y.contains_square(row, corner_col):
                    continue
            cols_chosen.append(col)
            if rec(idx + 1):
                return True
            cols_chosen.pop()
        return False

    return rec(0)


def transversal_contains(Y: YoungDiagram, T: Sequence[int], pattern: Perm) -> bool:
    """Pattern containment for transversals: a copy of M(pattern) whose
    bottom-right corner square lies inside Y."""
    return points_contain(((i + 1, T[i]) for i in range(len(T))), pattern, Y)


def count_avoiding_transversals(ady: ADYoungDiagram, pattern: Perm) -> int:
    """|S_Y(M)|: valid transversals avoiding the pattern matrix."""
    Y = ady.diagram
    return sum(
        1 for T in valid_transversals(ady) if not transversal_contains(Y, T, pattern)
    )


def j2_canonical_transversal(ady: ADYoungDiagram) -> Transversal | None:
    """The unique transversal avoiding M(21), built right-to-left by placing
    each column in the lowest unoccupied row long enough to hold it; None
    when Y lacks the staircase (then no transversal exists at all).

    Defined for triples with empty required descent set; the result is then
    a valid transversal of the triple.
    """
    if ady.D:
        raise ValueError("canonical M(21)-avoiding transversal needs D = {}")
    Y = ady.diagram
    n = Y.n
    cols_of_row = [0] * (n + 1)
    taken = [False] * (n + 1)
    for c in range(n, 0, -1):
        row = 0
        for i in range(n, 0, -1):
            if not taken[i] and Y.rows[i - 1] >= c:
                row = i
                break
        if row == 0:
            return None
        taken[row] = True
        cols_of_row[row] = c
    return tuple(cols_of_row[1:])


def shape2_closed_form(ady: ADYoungDiagram, pattern: Perm) -> int:
    """Predicted |S_Y(M)| for M(12) and M(21): 1 exactly when Y contains the
    staircase and the relevant required set (A for M(12), D for M(21)) is
    empty, else 0."""
    if pattern == (1, 2):
        blocked = bool(ady.A)
    elif pattern == (2, 1):
        blocked = bool(ady.D)
    else:
        raise ValueError("closed form applies to the patterns 12 and 21 only")
    if not ady.diagram.contains_staircase() or blocked:
        return 0
    return 1


# ---------------------------------------------------------------------------
# Families of diagrams (for exhaustive sweeps)


def all_diagrams(max_rows: int, min_rows: int = 1) -> Iterator[YoungDiagram]:
    """Every square-bounded Young diagram with min_rows..max_rows rows, in
    reverse-lexicographic order of row lengths within each size."""
    for n in range(min_rows, max_rows + 1):
        tails = itertools.combinations_with_replacement(range(n, 0, -1), n - 1)
        for tail in tails:
            yield YoungDiagram((n,) + tail)


def eligible_indices(Y: YoungDiagram) -> list[int]:
    """Indices i where rows i and i+1 have equal length (the only places a
    required ascent or descent may sit)."""
    return [i for i in range(1, Y.n) if Y.rows[i - 1] == Y.rows[i]]


def ad_configs(Y: YoungDiagram) -> Iterator[ADYoungDiagram]:
    """All AD triples on Y: each eligible index goes to A, to D, or to
    neither."""
    elig = eligible_indices(Y)
    for assignment in itertools.product((None, "A", "D"), repeat=len(elig)):
        A = frozenset(i for i, a in zip(elig, assignment) if a == "A")
        D = frozenset(i for i, a in zip(elig, assignment) if a == "D")
        yield ADYoungDiagram(Y, A, D)


def alternating_configs(Y: YoungDiagram) -> Iterator[ADYoungDiagram]:
    """All 1-alternating AD triples on Y.

    These are exactly A ⊆ [n-2] with no two consecutive indices, D = A + 1,
    with every index of A and D eligible.
    """
    elig = set(eligible_indices(Y))
    n = Y.n
    candidates = [i for i in range(1, n - 1) if i in elig and i + 1 in elig]
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            if any(b - a == 1 for a, b in zip(combo, combo[1:])):
                continue
            A = frozenset(combo)
            D = frozenset(i + 1 for i in combo)
            if A & D:
                continue
            yield ADYoungDiagram(Y, A, D)


def semialternating_configs(Y: YoungDiagram) -> Iterator[ADYoungDiagram]:
    """All 1-semialternating AD triples on Y: the 1-alternating ones plus,
    when row 1 is eligible, the same with 1 added to D."""
    elig = set(eligible_indices(Y))
    for ady in alternating_configs(Y):
        yield ady
        if 1 in elig and 1 not in ady.A and 1 not in ady.D:
            yield ADYoungDiagram(Y, ady.A, ady.D | {1})


def full_square_class_encoding(n: int, kind: str) -> ADYoungDiagram:
    """The n x n square whose valid transversals are exactly the class
    members: kind is "alt" (alternating) or "ralt" (reverse alternating)."""
    Y = YoungDiagram((n,) * n) if n else YoungDiagram(())
    odds = frozenset(range(1, n, 2))
    evens = frozenset(range(2, n, 2))
    if kind == "alt":
        return ADYoungDiagram(Y, odds, evens)
    if kind == "ralt":
        return ADYoungDiagram(Y, evens, odds)
    raise ValueError("kind must be 'alt' or 'ralt'")

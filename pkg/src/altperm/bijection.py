"""The replacement bijection between transversals avoiding M(213) and
M(321) on 1-alternating AD triples.

One step selects a distinguished copy of the decreasing block J3 = M(321)
(resp. of F3 = M(213)), classifies it by the required ascents/descents near
its bottom row, and removes it with a cyclic column shift chosen so the
result is again a valid transversal.  Iterating the step drives the column
word strictly down (resp. up) in lexicographic order, so it terminates;
the two directions are mutually inverse on separable transversals.

The semialternating analogue (a leading required descent) is handled by
embedding into a one-row-larger alternating triple whose transversals pin
column 1 in row 1; the step preserves that pin, so the bijection restricts.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .diagrams import (
    ADYoungDiagram,
    Transversal,
    YoungDiagram,
    is_valid_transversal,
    is_x_alternating,
    is_x_semialternating,
    transversal_contains,
)

J3 = (3, 2, 1)
F3 = (2, 1, 3)

Triple = tuple[int, int, int]


class StepError(ValueError):
    """A replacement step was attempted outside its precondition."""


class LemmaViolation(AssertionError):
    """A structural fact that every step relies on failed to hold."""


# How often each family of runtime lemma checks has fired; sweeps assert
# these stay nonzero so a silently skipped check cannot masquerade as green.
CHECK_STATS: Counter = Counter()


def reset_check_stats() -> None:
    CHECK_STATS.clear()


# ---------------------------------------------------------------------------
# Cyclic shifts


def gamma(T: Sequence[int], rows: Iterable[int], window: tuple[int, int]) -> tuple[int, ...]:
    """Rows i among `rows` whose column lies in [lo, hi], ascending."""
    lo, hi = window
    return tuple(sorted(i for i in rows if lo <= T[i - 1] <= hi))


def _shift(
    Y: YoungDiagram,
    T: Sequence[int],
    rows: Iterable[int],
    window: tuple[int, int],
    direction: int,
) -> Transversal:
    rows = tuple(rows)
    lo, hi = window
    if rows and lo <= hi:
        m = max(rows)
        if Y.row_len(m) < hi:
            raise StepError(
                f"row {m} has {Y.row_len(m)} squares, cyclic shift needs {hi}"
            )
    idx = gamma(T, rows, window)
    k = len(idx)
    if k == 0:
        return tuple(T)
    out = list(T)
    for j in range(k):
        out[idx[j] - 1] = T[idx[(j + direction) % k] - 1]
    return tuple(out)


def omega(Y: YoungDiagram, T: Sequence[int], rows, window) -> Transversal:
    """Forward cyclic shift: each participating row takes the column of the
    previous participating row (the first takes the last's)."""
    return _shift(Y, T, rows, window, -1)


def theta(Y: YoungDiagram, T: Sequence[int], rows, window) -> Transversal:
    """Backward cyclic shift, the inverse of omega on the same arguments."""
    return _shift(Y, T, rows, window, +1)


# ---------------------------------------------------------------------------
# Copies and their classification


def j3_copies(Y: YoungDiagram, T: Sequence[int]) -> list[Triple]:
    """Triples of rows carrying a copy of M(321); the corner square
    (a3, column of a1) must lie inside Y."""
    n = len(T)
    out = []
    for a1 in range(1, n - 1):
        b1 = T[a1 - 1]
        for a2 in range(a1 + 1, n):
            b2 = T[a2 - 1]
            if b2 >= b1:
                continue
            for a3 in range(a2 + 1, n + 1):
                if T[a3 - 1] < b2 and Y.contains_square(a3, b1):
                    out.append((a1, a2, a3))
    return out


def f3_copies(ady: ADYoungDiagram, T: Sequence[int]) -> list[Triple]:
    """Triples of rows carrying a copy of M(213) whose bottom row is not a
    required ascent (the selection pool for the reverse step)."""
    n = len(T)
    A = ady.A
    out = []
    for a1 in range(1, n - 1):
        b1 = T[a1 - 1]
        for a2 in range(a1 + 1, n):
            b2 = T[a2 - 1]
            if b2 >= b1:
                continue
            for a3 in range(a2 + 1, n + 1):
                if T[a3 - 1] > b1 and a3 not in A:
                    out.append((a1, a2, a3))
    return out


def sharp(u: Triple) -> Triple:
    """Sort key for decreasing-block copies: (u3, u1, u2)."""
    return (u[2], u[0], u[1])


def classify_j(ady: ADYoungDiagram, T: Sequence[int], a: Triple) -> int:
    """Three-way type of a decreasing-block copy, driven by the required
    sets at rows a3-1 and a3.  The literal case conditions are evaluated and
    must match exactly one case."""
    a1, a2, a3 = a
    b = T
    ba1, b_prev = b[a1 - 1], b[a3 - 2]
    in_d = (a3 - 1) in ady.D
    in_a = a3 in ady.A
    c1 = (not in_d or ba1 < b_prev) and not in_a
    c2 = in_d and b_prev < ba1
    c3 = (not in_d or b_prev > ba1) and in_a
    matches = [t for t, c in ((1, c1), (2, c2), (3, c3)) if c]
    if len(matches) != 1:
        raise LemmaViolation(
            f"copy {a} of M(321) matches cases {matches}; "
            "the three-case classification must be a partition"
        )
    return matches[0]


def classify_f(ady: ADYoungDiagram, T: Sequence[int], a: Triple) -> tuple[int, Triple]:
    """Type of a 213-block copy and the slot S(a) where its removed copy of
    the decreasing block will sit."""
    a1, a2, a3 = a
    if a3 in ady.A:
        raise StepError(f"{a} is not in the selection pool: row {a3} is a required ascent")
    if (a3 - 1) not in ady.A:
        return 1, (a3, a1, a2)
    if a2 == a3 - 1:
        return 2, (a3 + 1, a1, 0)
    return 3, (a3 - 1, a1, a2)


def select_j(ady: ADYoungDiagram, T: Sequence[int]) -> Triple:
    """The copy minimizing (a3, a1, a2) lexicographically."""
    copies = j3_copies(ady.diagram, T)
    if not copies:
        raise StepError("transversal avoids M(321); nothing to select")
    return min(copies, key=sharp)


def select_f(ady: ADYoungDiagram, T: Sequence[int]) -> Triple:
    """The copy maximizing S(a) lexicographically (S is injective on the
    pool, so the maximum is unique)."""
    copies = f3_copies(ady, T)
    if not copies:
        raise StepError("transversal avoids M(213); nothing to select")
    keyed = sorted(copies, key=lambda u: classify_f(ady, T, u)[1])
    if len(keyed) >= 2:
        s_last = classify_f(ady, T, keyed[-1])[1]
        s_prev = classify_f(ady, T, keyed[-2])[1]
        if s_last == s_prev:
            raise LemmaViolation(f"slot map not injective: {keyed[-2:]} share {s_last}")
    return keyed[-1]


def is_separable(ady: ADYoungDiagram, T: Sequence[int]) -> bool:
    """Every decreasing-block copy's sort key dominates every 213-copy's
    slot.  Transversals avoiding either block are vacuously separable."""
    U = j3_copies(ady.diagram, T)
    V = f3_copies(ady, T)
    if not U or not V:
        return True
    lo = min(sharp(u) for u in U)
    hi = max(classify_f(ady, T, v)[1] for v in V)
    return lo >= hi


# ---------------------------------------------------------------------------
# Forbidden boards


def _board(
    Y: YoungDiagram,
    regions: list[tuple[range, range]],
) -> set[tuple[int, int]]:
    squares = set()
    for rows, cols in regions:
        for i in rows:
            if i > Y.n:
                break
            top = min(cols.stop - 1, Y.row_len(i))
            for j in range(cols.start, top + 1):
                squares.add((i, j))
    return squares


def e_phi_squares(ady: ADYoungDiagram, T: Sequence[int], a: Triple) -> set[tuple[int, int]]:
    """Squares that can hold no element of T once `a` is the selected
    decreasing-block copy, on pain of contradicting the selection rule or
    separability."""
    a1, a2, a3 = a
    Y = ady.diagram
    n = Y.n
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    return _board(
        Y,
        [
            (range(1, a1), range(ba2, Y.row_len(a3) + 1)),
            (range(a1 + 1, a2), range(ba3, ba1 + 1)),
            (range(a2 + 1, a3), range(1, ba2 + 1)),
            (range(a3 + 1, n + 1), range(ba2 + 1, n + 1)),
        ],
    )


def e_psi_squares(ady: ADYoungDiagram, T: Sequence[int], a: Triple) -> set[tuple[int, int]]:
    """Mirror board for the selected 213-block copy."""
    a1, a2, a3 = a
    Y = ady.diagram
    n = Y.n
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    return _board(
        Y,
        [
            (range(1, a1), range(ba1, Y.row_len(a3) + 1)),
            (range(a1 + 1, a2), range(ba2, ba3 + 1)),
            (range(a2 + 1, a3), range(1, ba1 + 1)),
            (range(a3 + 1, n + 1), range(ba1 + 1, n + 1)),
        ],
    )


def _assert_board_empty(
    board: set[tuple[int, int]], T: Sequence[int], label: str
) -> None:
    hits = [(i + 1, c) for i, c in enumerate(T) if (i + 1, c) in board]
    if hits:
        raise LemmaViolation(f"{label} board holds transversal elements: {hits}")


def _assert_increasing(values: Sequence[int], label: str) -> None:
    if any(x >= y for x, y in zip(values, values[1:])):
        raise LemmaViolation(f"{label} not strictly increasing: {values}")


# ---------------------------------------------------------------------------
# One replacement step in each direction


def phi(ady: ADYoungDiagram, T: Sequence[int], check: bool = True) -> Transversal:
    """Remove the selected decreasing-block copy; the result is a valid
    transversal whose column word is lexicographically smaller."""
    Y = ady.diagram
    T = tuple(T)
    if check and not is_separable(ady, T):
        raise StepError("step defined on separable transversals only")
    a = select_j(ady, T)
    a1, a2, a3 = a
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    t = classify_j(ady, T, a)
    if check:
        CHECK_STATS["phi_board"] += 1
        _assert_board_empty(e_phi_squares(ady, T, a), T, "phi")
    if t == 1:
        out = theta(Y, T, (a1, a2, a3), (1, ba1))
    elif t == 2:
        if check:
            CHECK_STATS["jtype2_geometry"] += 1
            if not (ba2 <= b[a3 - 2] and a3 - a1 >= 3):
                raise LemmaViolation(
                    f"type-2 geometry violated at {a}: "
                    f"b_a2={ba2}, b_(a3-1)={b[a3 - 2]}, span={a3 - a1}"
                )
        out = omega(Y, T, (a1, a3 - 1), (1, ba1))
    else:
        inner = omega(Y, T, range(a2, a3 + 1), (ba3, ba1))
        out = omega(Y, inner, list(range(1, a1 + 1)) + [a3 + 1], (ba3, ba1))
        if check:
            CHECK_STATS["jtype3_orderings"] += 1
            _check_jtype3_orderings(ady, T, out, a)
    if check:
        if T[0] == 1:
            CHECK_STATS["pin_preserved"] += 1
            if out[0] != 1:
                raise LemmaViolation("a pinned first column moved during phi")
        CHECK_STATS["validity"] += 1
        if not is_valid_transversal(ady, out):
            raise LemmaViolation(f"phi broke validity at {a} (type {t})")
    return out


def _check_jtype3_orderings(ady, T, out, a: Triple) -> None:
    a1, a2, a3 = a
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    g_left_open = gamma(T, range(1, a1), (ba3, ba1))
    for i in g_left_open:
        if not (b[a3] < b[i - 1] < ba2):
            raise LemmaViolation(
                f"row {i} in the left window breaks b_(a3+1) < b_i < b_a2"
            )
    g_left = gamma(T, range(1, a1 + 1), (ba3, ba1))
    _assert_increasing([b[i - 1] for i in g_left], "left-window columns")
    _assert_increasing([out[i - 1] for i in g_left], "left-window images")
    g_mid = gamma(T, range(a2, a3), (ba3, ba1))
    for i in g_mid:
        if not ba2 <= b[i - 1]:
            raise LemmaViolation(f"row {i} in the middle window breaks b_a2 <= b_i")
    _assert_increasing([b[i - 1] for i in g_mid], "middle-window columns")
    mids = [out[i - 1] for i in g_mid]
    _assert_increasing(mids, "middle-window images")
    if mids and mids[-1] >= out[a3 - 1]:
        raise LemmaViolation("middle-window images must stay left of the new a3 column")


def psi(ady: ADYoungDiagram, T: Sequence[int], check: bool = True) -> Transversal:
    """Reverse step: reinstate a decreasing-block copy at the slot of the
    selected 213-block copy; the column word grows lexicographically."""
    Y = ady.diagram
    T = tuple(T)
    if check and not is_separable(ady, T):
        raise StepError("step defined on separable transversals only")
    a = select_f(ady, T)
    a1, a2, a3 = a
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    t, _slot = classify_f(ady, T, a)
    if check:
        CHECK_STATS["psi_board"] += 1
        _assert_board_empty(e_psi_squares(ady, T, a), T, "psi")
    if t == 1:
        out = omega(Y, T, (a1, a2, a3), (1, ba3))
    elif t == 2:
        out = theta(Y, T, (a1, a3), (1, ba3))
    else:
        inner = theta(Y, T, list(range(1, a1 + 1)) + [a3], (ba2, ba3))
        out = theta(Y, inner, range(a2, a3), (ba2, ba3))
        if check:
            CHECK_STATS["ftype3_orderings"] += 1
            _check_ftype3_orderings(ady, T, out, a)
    if check:
        if T[0] == 1:
            CHECK_STATS["pin_preserved"] += 1
            if out[0] != 1:
                raise LemmaViolation("a pinned first column moved during psi")
        CHECK_STATS["validity"] += 1
        if not is_valid_transversal(ady, out):
            raise LemmaViolation(f"psi broke validity at {a} (type {t})")
    return out


def _check_ftype3_orderings(ady, T, out, a: Triple) -> None:
    a1, a2, a3 = a
    b = T
    ba1, ba2, ba3 = b[a1 - 1], b[a2 - 1], b[a3 - 1]
    g_left = gamma(T, range(1, a1 + 1), (ba2, ba3))
    for i in g_left:
        if b[i - 1] > ba1:
            raise LemmaViolation(f"row {i} in the left window breaks b_i <= b_a1")
    _assert_increasing([b[i - 1] for i in g_left], "left-window columns")
    _assert_increasing([out[i - 1] for i in g_left], "left-window images")
    # Middle window: a2 always participates (it carries the window's smallest
    # column) and absorbs the cyclic wrap, so the ordering claims apply to the
    # strictly-between rows plus the non-wrap images.
    g_between = gamma(T, range(a2 + 1, a3), (ba2, ba3))
    for i in g_between:
        if not ba1 < b[i - 1]:
            raise LemmaViolation(f"row {i} in the middle window breaks b_a1 < b_i")
    g_mid = gamma(T, range(a2, a3), (ba2, ba3))
    _assert_increasing([b[i - 1] for i in g_mid], "middle-window columns")
    mids = [out[i - 1] for i in g_mid]
    _assert_increasing(mids[:-1], "middle-window images")
    if mids and mids[-1] != ba2:
        raise LemmaViolation("cyclic wrap must hand b_a2 to the last middle row")
    if out[a3 - 1] <= ba2:
        raise LemmaViolation("the new a3 column must stay right of b_a2")
    m = g_left[0]
    Y = ady.diagram
    for i in range(a3 + 1, Y.n + 1):
        if T[i - 1] > b[m - 1]:
            raise LemmaViolation(f"southeast region of (a3, b_m) holds row {i}")


# ---------------------------------------------------------------------------
# Full bijection by iteration


@dataclass(frozen=True)
class TraceStep:
    index: int
    direction: str
    triple: Triple
    block_type: int
    before: Transversal
    after: Transversal


def phi_to_fixpoint(
    ady: ADYoungDiagram,
    T: Sequence[int],
    check: bool = True,
    trace: list[TraceStep] | None = None,
) -> Transversal:
    """Iterate the forward step until the transversal avoids M(321); the
    strict lexicographic descent of the column word bounds the number of
    steps, and a hard cap of n * n! guards against implementation bugs."""
    Y = ady.diagram
    cur = tuple(T)
    cap = max(1, Y.n * math.factorial(Y.n))
    for step in range(cap + 1):
        if not transversal_contains(Y, cur, J3):
            return cur
        a = select_j(ady, cur)
        t = classify_j(ady, cur, a)
        nxt = phi(ady, cur, check=check)
        if trace is not None:
            trace.append(TraceStep(step, "phi", a, t, cur, nxt))
        if check and not nxt < cur:
            raise LemmaViolation("column word did not strictly decrease")
        cur = nxt
    raise LemmaViolation("iteration budget exceeded; monotonicity is broken")


def psi_to_fixpoint(
    ady: ADYoungDiagram,
    T: Sequence[int],
    check: bool = True,
    trace: list[TraceStep] | None = None,
) -> Transversal:
    """Iterate the reverse step until the transversal avoids M(213)."""
    Y = ady.diagram
    cur = tuple(T)
    cap = max(1, Y.n * math.factorial(Y.n))
    for step in range(cap + 1):
        if not transversal_contains(Y, cur, F3):
            return cur
        a = select_f(ady, cur)
        t, _ = classify_f(ady, cur, a)
        nxt = psi(ady, cur, check=check)
        if trace is not None:
            trace.append(TraceStep(step, "psi", a, t, cur, nxt))
        if check and not nxt > cur:
            raise LemmaViolation("column word did not strictly increase")
        cur = nxt
    raise LemmaViolation("iteration budget exceeded; monotonicity is broken")


# ---------------------------------------------------------------------------
# Semialternating case via the corner embedding


def alpha_parent(ady: ADYoungDiagram) -> ADYoungDiagram:
    """One-row-larger 1-alternating triple whose transversals with column 1
    in row 1 are exactly the embedded transversals of `ady`."""
    Y = ady.diagram
    rows = (Y.rows[0] + 1,) + tuple(r + 1 for r in Y.rows)
    A = frozenset({1} | {a + 1 for a in ady.A})
    D = frozenset(d + 1 for d in ady.D)
    parent = ADYoungDiagram(YoungDiagram(rows), A, D)
    if not is_x_alternating(parent, 1):
        raise LemmaViolation("embedding target is not 1-alternating")
    return parent


def alpha(T: Sequence[int]) -> Transversal:
    return (1,) + tuple(c + 1 for c in T)


def alpha_inverse(T: Sequence[int]) -> Transversal:
    if T[0] != 1:
        raise StepError("transversal is outside the embedding's range")
    return tuple(c - 1 for c in T[1:])


def _semialternating_map(
    ady: ADYoungDiagram,
    T: Sequence[int],
    fixpoint: Callable[..., Transversal],
    check: bool,
) -> Transversal:
    if not is_x_semialternating(ady, 1):
        raise StepError("defined for 1-semialternating triples")
    if 1 not in ady.D:
        return fixpoint(ady, T, check=check)
    parent = alpha_parent(ady)
    image = fixpoint(parent, alpha(T), check=check)
    if image[0] != 1:
        raise LemmaViolation(
            "the step moved column 1 out of row 1; the embedding does not restrict"
        )
    return alpha_inverse(image)


def semialternating_phi(ady: ADYoungDiagram, T: Sequence[int], check: bool = True) -> Transversal:
    """M(213)-avoiding -> M(321)-avoiding on a 1-semialternating triple."""
    return _semialternating_map(ady, T, phi_to_fixpoint, check)


def semialternating_psi(ady: ADYoungDiagram, T: Sequence[int], check: bool = True) -> Transversal:
    """M(321)-avoiding -> M(213)-avoiding on a 1-semialternating triple."""
    return _semialternating_map(ady, T, psi_to_fixpoint, check)

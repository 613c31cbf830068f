"""Named property suites driving every structural invariant at desk scale.

Each suite returns a list of (name, ok, detail) triples; the command-line
`verify` command prints one PASS/FAIL line per invariant and the acceptance
tests assert them.  Sweeps are exhaustive over the stated ranges; per-shape
transversal data is computed once and shared across the required-set
configurations living on that shape.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import (
    ALTERNATING,
    DescentType,
    Perm,
    class_member,
    contains,
    doubling,
    perms_of,
    shortest_alternating_container,
)
from .enumeration import generate
from .diagrams import (
    ADYoungDiagram,
    ad_configs,
    all_diagrams,
    alternating_configs,
    is_x_alternating,
    is_x_semialternating,
    j2_canonical_transversal,
    semialternating_configs,
    shape2_closed_form,
    transversal_contains,
    transversals,
    valid_transversals,
)
from .extension import (
    delete_to_successor,
    direct_sum,
    dominant_region,
    reinsert,
    successor_from_parts,
    successor_parts,
)
from .bijection import (
    F3,
    J3,
    e_phi_squares,
    e_psi_squares,
    is_separable,
    phi,
    phi_to_fixpoint,
    psi,
    psi_to_fixpoint,
    select_f,
    select_j,
    semialternating_phi,
    semialternating_psi,
)
from . import descent_type as dt


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name: str, failures: list[str]) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:5]))
    return CheckResult(name, True)


def _masks(T: Sequence[int]) -> tuple[int, int]:
    asc = des = 0
    for i in range(1, len(T)):
        if T[i - 1] < T[i]:
            asc |= 1 << i
        else:
            des |= 1 << i
    return asc, des


def _set_mask(S: Iterable[int]) -> int:
    m = 0
    for i in S:
        m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# shape2 suite


def shape2_suite(rows: int = 6) -> list[CheckResult]:
    closed_fail: list[str] = []
    shape_eq_fail: list[str] = []
    canon_fail: list[str] = []
    for Y in all_diagrams(rows):
        records = []
        for T in transversals(Y):
            asc, des = _masks(T)
            records.append(
                (
                    T,
                    asc,
                    des,
                    transversal_contains(Y, T, (1, 2)),
                    transversal_contains(Y, T, (2, 1)),
                )
            )
        for ady in ad_configs(Y):
            am, dm = _set_mask(ady.A), _set_mask(ady.D)
            n12 = n21 = 0
            only_21_avoider = None
            for T, asc, des, has12, has21 in records:
                if am & ~asc or dm & ~des:
                    continue
                if not has12:
                    n12 += 1
                if not has21:
                    n21 += 1
                    only_21_avoider = T
            for pat, exact in (((1, 2), n12), ((2, 1), n21)):
                if exact != shape2_closed_form(ady, pat):
                    closed_fail.append(f"{ady} pattern {pat}: {exact}")
            if is_x_alternating(ady, 1) and n12 != n21:
                shape_eq_fail.append(str(ady))
            if not ady.D:
                canon = j2_canonical_transversal(ady)
                if canon is None:
                    if Y.contains_staircase():
                        canon_fail.append(f"{ady}: rule found nothing")
                elif n21 != 1 or only_21_avoider != canon:
                    canon_fail.append(f"{ady}: rule gave {canon}")
    return [
        _result(f"closed form matches exhaustive counts, <= {rows} rows", closed_fail),
        _result("12 and 21 agree on 1-alternating triples", shape_eq_fail),
        _result("right-to-left rule builds the unique 21-avoider", canon_fail),
    ]


# ---------------------------------------------------------------------------
# doubling suite


def minimal_container_lengths(k: int) -> dict[Perm, int]:
    """Independent oracle: for each pattern of length k, the least length of
    an alternating permutation containing it, found by marking the patterns
    of all k-element subsequences of every alternating permutation, length
    by length up to 2k-2.  Patterns never seen get 2k-1; the construction
    check supplies the containment witness at that length."""
    unseen = set(perms_of(k))
    found: dict[Perm, int] = {}
    for L in range(k, 2 * k - 1):
        if not unseen:
            break
        for w in generate(ALTERNATING, L):
            for sub in itertools.combinations(w, k):
                rank = {v: j for j, v in enumerate(sorted(sub), 1)}
                pat = tuple(rank[v] for v in sub)
                if pat in unseen:
                    unseen.remove(pat)
                    found[pat] = L
            if not unseen:
                break
    for p in unseen:
        found[p] = 2 * k - 1
    return found


def doubling_suite(k_max: int = 6) -> list[CheckResult]:
    length_fail: list[str] = []
    build_fail: list[str] = []
    zero_fail: list[str] = []
    for k in range(1, k_max + 1):
        oracle = minimal_container_lengths(k)
        for p in perms_of(k):
            t = doubling(p).doubling_number
            w = shortest_alternating_container(p)
            if not (
                len(w) == k + t
                and class_member(w, ALTERNATING)
                and contains(w, p)
            ):
                build_fail.append(f"{p}: built {w}")
            if oracle[p] != k + t:
                length_fail.append(f"{p}: oracle {oracle[p]} vs k+t {k + t}")
            if (t == 0) != class_member(p, ALTERNATING):
                zero_fail.append(str(p))
    return [
        _result(f"minimal container length equals k + t, k <= {k_max}", length_fail),
        _result("construction output is alternating, tight, containing", build_fail),
        _result("doubling number 0 exactly on alternating permutations", zero_fail),
    ]


# ---------------------------------------------------------------------------
# bijection suite


def bijection_suite(rows: int = 6, semi_rows: int = 5) -> list[CheckResult]:
    count_fail: list[str] = []
    round_fail: list[str] = []
    semi_fail: list[str] = []
    sep_fail: list[str] = []
    for r in range(1, rows + 1):
        for Y in all_diagrams(r, r):
            for ady in alternating_configs(Y):
                vt = list(valid_transversals(ady))
                SF = [T for T in vt if not transversal_contains(Y, T, F3)]
                SJ = {T for T in vt if not transversal_contains(Y, T, J3)}
                if len(SF) != len(SJ):
                    count_fail.append(str(ady))
                    continue
                images = set()
                for T in SF:
                    U = phi_to_fixpoint(ady, T, check=True)
                    if U not in SJ or psi_to_fixpoint(ady, U, check=True) != T:
                        round_fail.append(f"{ady}: {T}")
                        continue
                    images.add(U)
                if images != SJ:
                    round_fail.append(f"{ady}: image misses {len(SJ - images)}")
                for T in SJ:
                    V = psi_to_fixpoint(ady, T, check=True)
                    if phi_to_fixpoint(ady, V, check=True) != T:
                        round_fail.append(f"{ady}: reverse trip at {T}")
                for T in vt:
                    if not is_separable(ady, T):
                        continue
                    if transversal_contains(Y, T, J3):
                        U = phi(ady, T, check=True)
                        if not is_separable(ady, U) or psi(ady, U, check=True) != T:
                            sep_fail.append(f"{ady}: phi at {T}")
                    if transversal_contains(Y, T, F3):
                        V = psi(ady, T, check=True)
                        if not is_separable(ady, V) or phi(ady, V, check=True) != T:
                            sep_fail.append(f"{ady}: psi at {T}")
    for r in range(1, semi_rows + 1):
        for Y in all_diagrams(r, r):
            for ady in semialternating_configs(Y):
                if 1 not in ady.D:
                    continue
                vt = list(valid_transversals(ady))
                SF = [T for T in vt if not transversal_contains(Y, T, F3)]
                SJ = {T for T in vt if not transversal_contains(Y, T, J3)}
                if len(SF) != len(SJ):
                    semi_fail.append(str(ady))
                    continue
                images = set()
                for T in SF:
                    U = semialternating_phi(ady, T, check=True)
                    if U not in SJ or semialternating_psi(ady, U, check=True) != T:
                        semi_fail.append(f"{ady}: {T}")
                        continue
                    images.add(U)
                if images != SJ:
                    semi_fail.append(f"{ady}: not onto")
    return [
        _result(f"block-avoiding counts agree on 1-alternating triples, <= {rows} rows", count_fail),
        _result("full maps are mutually inverse bijections", round_fail),
        _result("single steps invert each other on separable transversals", sep_fail),
        _result(f"semialternating case via corner embedding, <= {semi_rows} rows", semi_fail),
    ]


def eboard_suite(rows: int = 5) -> list[CheckResult]:
    """Board emptiness asserted through a standalone code path (the step
    functions assert it too while running)."""
    fails: list[str] = []
    for r in range(1, rows + 1):
        for Y in all_diagrams(r, r):
            for ady in alternating_configs(Y):
                for T in valid_transversals(ady):
                    if not is_separable(ady, T):
                        continue
                    if transversal_contains(Y, T, J3):
                        board = e_phi_squares(ady, T, select_j(ady, T))
                        if any((i + 1, c) in board for i, c in enumerate(T)):
                            fails.append(f"{ady}: {T}")
                    if transversal_contains(Y, T, F3):
                        board = e_psi_squares(ady, T, select_f(ady, T))
                        if any((i + 1, c) in board for i, c in enumerate(T)):
                            fails.append(f"{ady}: psi board {T}")
    return [_result(f"forbidden boards hold no transversal elements, <= {rows} rows", fails)]


# ---------------------------------------------------------------------------
# extension suite


_BLOCKS = ((1,), (1, 2), (2, 1))
_PAIR = ((1, 2), (2, 1))


def extension_suite(rows: int = 5, rng_seed: int = 0) -> list[CheckResult]:
    embed_fail: list[str] = []
    alt_fail: list[str] = []
    semi_fail: list[str] = []
    tech_fail: list[str] = []
    shift_fail: list[str] = []
    roundtrip_fail: list[str] = []
    region_fail: list[str] = []
    consequence_fail: list[str] = []
    child_count_memo: dict[tuple, int] = {}

    def child_avoiders(child: ADYoungDiagram, P: Perm) -> int:
        key = (child.diagram.rows, child.A, child.D, P)
        if key not in child_count_memo:
            child_count_memo[key] = sum(
                1
                for U in valid_transversals(child)
                if not transversal_contains(child.diagram, U, P)
            )
        return child_count_memo[key]

    for r in range(1, rows + 1):
        for Y in all_diagrams(r, r):
            all_T = list(transversals(Y))
            base = []
            for T in all_T:
                asc, des = _masks(T)
                base.append((T, asc, des))
            for C in _BLOCKS:
                parts = {T: successor_parts(Y, T, C) for T in all_T}
                # the dominant region must be recoverable from the set alone
                seen_regions: dict[frozenset, tuple[int, ...]] = {}
                for T, (region, nond) in parts.items():
                    if seen_regions.setdefault(nond, region) != region:
                        region_fail.append(f"{Y} C={C}: ambiguous region for {sorted(nond)}")
                avoid = {}
                for P in _PAIR:
                    psum = direct_sum(P, C)
                    avoid[P] = {
                        T: not transversal_contains(Y, T, psum) for T in all_T
                    }
                rc = len(C)
                for ady in ad_configs(Y):
                    am, dm = _set_mask(ady.A), _set_mask(ady.D)
                    vt = [T for T, asc, des in base if not (am & ~asc or dm & ~des)]
                    succs = {}
                    for T in vt:
                        region, nond = parts[T]
                        if nond not in succs:
                            succs[nond] = successor_from_parts(ady, region, nond)
                    for P in _PAIR:
                        lhs = sum(1 for T in vt if avoid[P][T])
                        rhs = sum(
                            child_avoiders(s.child, P) for s in succs.values()
                        )
                        if lhs != rhs:
                            embed_fail.append(f"{ady} P={P} C={C}: {lhs} vs {rhs}")
                    for s in succs.values():
                        child = s.child
                        for x in range(1, ady.n + 1 - rc):
                            if is_x_alternating(ady, x + rc) and not is_x_alternating(child, x):
                                alt_fail.append(f"{ady} C={C} x={x}")
                            if is_x_semialternating(ady, x + rc) and not is_x_semialternating(child, x):
                                semi_fail.append(f"{ady} C={C} x={x}")
                        k = child.n
                        for i in range(1, k):
                            if (
                                i in child.A
                                and s.row_map[i - 1] + 1 in ady.D
                                and i + 1 not in child.D
                            ):
                                tech_fail.append(f"{ady} C={C} succ ascent {i}")
                            if (
                                i in child.D
                                and s.row_map[i - 1] - 1 in ady.A
                                and i - 1 not in child.A
                            ):
                                tech_fail.append(f"{ady} C={C} succ descent {i}")
                    for T in vt:
                        s = succs[parts[T][1]]
                        T2 = delete_to_successor(s, T)
                        if reinsert(ady, s, T2, C) != T:
                            roundtrip_fail.append(f"{ady} C={C}: {T}")
                    if is_x_alternating(ady, 1 + rc):
                        a = sum(1 for T in vt if avoid[(1, 2)][T])
                        b = sum(1 for T in vt if avoid[(2, 1)][T])
                        if a != b:
                            consequence_fail.append(f"{ady} C={C}: {a} vs {b}")
    rng = random.Random(rng_seed)
    shapes = list(all_diagrams(6))
    for _ in range(400):
        Y = rng.choice(shapes)
        n = Y.n
        ts = list(transversals(Y))
        if not ts:
            continue
        T = rng.choice(ts)
        C = rng.choice(_BLOCKS)
        region = dominant_region(Y, T, C)
        for j in range(1, n):
            for y in range(1, region[j - 1] + 1):
                if T[j] <= y and Y.contains_square(j + 1, y) and y > region[j]:
                    shift_fail.append(f"{Y} {T} C={C} at ({j},{y})")
    return [
        _result(f"block-sum identity holds exhaustively, <= {rows} rows", embed_fail),
        _result("successors of (x+r)-alternating parents are x-alternating", alt_fail),
        _result("semialternating analogue of the successor property", semi_fail),
        _result("adjacent required-constraint transfer to successors", tech_fail),
        _result("dominant region is recoverable from the non-dominant set", region_fail),
        _result("dominance shifts down one row when the next column stays left", shift_fail),
        _result("deletion and reinsertion are mutually inverse", roundtrip_fail),
        _result("12 (+) C matches 21 (+) C on (1+r)-alternating triples", consequence_fail),
    ]


# ---------------------------------------------------------------------------
# injections suite


def _admissible_patterns(k: int) -> list[Perm]:
    pats = list(perms_of(3)) + list(perms_of(4))
    out = []
    for q in pats:
        if q == tuple(range(1, len(q) + 1)) and len(q) <= k:
            continue
        out.append(q)
    return out


def _strictness_claimed(q: Perm, k: int, n: int) -> bool:
    """Where the avoider count provably grows strictly with length.

    Off row boundaries (k not dividing n) every non-repetitive pattern is
    strict.  At row boundaries the row-extension arguments miss the length-3
    patterns avoiding 213 and 312 on both case lists: 132 and 231 plateau at
    every k, and 321 plateaus when k = 2 (its consecutive-block identity
    degenerates there); everything else, repetitive included, is strict.
    """
    if n < k:
        return False
    if n % k != 0:
        return not dt.is_repetitive(q)
    if q in ((1, 3, 2), (2, 3, 1)):
        return False
    if q == (3, 2, 1) and k == 2:
        return False
    return True


def injections_suite(k_values: Iterable[int] = (2, 3, 4), n_max: int = 8) -> list[CheckResult]:
    child_fail: list[str] = []
    inj_fail: list[str] = []
    mono_fail: list[str] = []
    strict_fail: list[str] = []
    plateau_fail: list[str] = []
    secondary_fail: list[str] = []
    identity_fail: list[str] = []
    for k in k_values:
        members: dict[int, list[Perm]] = {
            n: list(generate(DescentType(k), n)) for n in range(1, n_max + 2)
        }
        for q in _admissible_patterns(k):
            avoiders = {
                n: [p for p in members[n] if not contains(p, q)]
                for n in range(1, n_max + 2)
            }
            for n in range(1, n_max + 1):
                children = set()
                for p in avoiders[n]:
                    ch = dt.child(p, q, k)
                    if (
                        contains(ch, q)
                        or len(ch) != n + 1
                        or not contains(ch, p)
                        or not class_member(ch, DescentType(k))
                    ):
                        child_fail.append(f"k={k} q={q} p={p}")
                        continue
                    if ch in children:
                        inj_fail.append(f"k={k} q={q} duplicate child {ch}")
                    children.add(ch)
                a, b = len(avoiders[n]), len(avoiders[n + 1])
                if a > b:
                    mono_fail.append(f"k={k} q={q} n={n}: {a} > {b}")
                if _strictness_claimed(q, k, n) and a >= b and a > 0:
                    strict_fail.append(f"k={k} q={q} n={n}: {a} vs {b}")
            t = dt.repetitive_form(q)
            if t is not None and t != 1 and k >= len(q) - 1:
                b_len = len(q)
                for m in range(0, (n_max + 1) // k + 1):
                    lens = [
                        k * m + x
                        for x in range(b_len - 2, k + 1)
                        if 1 <= k * m + x <= n_max + 1
                    ]
                    vals = [len(avoiders[L]) for L in lens]
                    if len(set(vals)) > 1:
                        plateau_fail.append(f"k={k} q={q} m={m}: {vals}")
                    for L in lens[:-1]:
                        for p in avoiders[L]:
                            s = dt.repetitive_insert(q, p, k)
                            if contains(s, q) or dt.repetitive_strip(q, s, k) != p:
                                plateau_fail.append(f"k={k} q={q} round trip at {p}")
        for b_len in range(2, k + 1):
            ident = tuple(range(1, b_len + 1))
            for n in range(k, n_max + 1):
                cnt = sum(1 for p in members[n] if not contains(p, ident))
                if cnt != 0:
                    identity_fail.append(f"k={k} b={b_len} n={n}: {cnt}")
    for k in (2, 3):
        for q in (
            (4, 3, 2, 1), (3, 4, 2, 1), (1, 4, 3, 2), (2, 4, 3, 1),
            (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 4, 2), (2, 3, 4, 1),
        ):
            for m in range(1, 9 // k + 1):
                n = k * m
                if n > 9:
                    continue
                for p in generate(DescentType(k), n):
                    if contains(p, q):
                        continue
                    first = dt.child(p, q, k)
                    second = dt.second_child(p, q, k)
                    if contains(second, q):
                        secondary_fail.append(f"k={k} q={q} p={p}")
                    # For 2431 with the maximum closing the last full row the
                    # two prescriptions inject n and n+1, which coincide.
                    degenerate = q == (2, 4, 3, 1) and p[-1] == n
                    if second == first and not degenerate:
                        secondary_fail.append(f"k={k} q={q} p={p} collision")
    return [
        _result("children avoid the pattern and extend the parent", child_fail),
        _result("the child assignment is injective", inj_fail),
        _result("avoider counts never drop with length", mono_fail),
        _result("strict growth off the repetitive plateaus", strict_fail),
        _result("repetitive plateaus are flat and realized bijectively", plateau_fail),
        _result("secondary injections give distinct avoiding children", secondary_fail),
        _result("identity patterns have no avoiders once rows reach them", identity_fail),
    ]


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    suites = {
        "shape2": shape2_suite,
        "doubling": doubling_suite,
        "bijection": bijection_suite,
        "eboard": eboard_suite,
        "extension": extension_suite,
        "injections": injections_suite,
    }
    if name not in suites:
        raise ValueError(f"unknown suite {name!r}; pick from {sorted(suites)}")
    return suites[name](**kwargs)

"""Acceptance criteria, one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Extended columns (length 12/11 table tails) only run when
ALTPERM_EXTENDED=1 is set; they are multi-hour enumerations.
"""
import itertools
import os
import time

import pytest

from altperm.enumeration import AvoidanceQuery, count_avoiders
from altperm.perms import (
    ALTERNATING,
    REVERSE_ALTERNATING,
    DescentType,
    parse_perm,
    perms_of,
    reverse_complement,
)
from altperm.tables import TABLES, KNOWN_MISPRINTS, expected_count
from altperm.equivalence import (
    check_conjecture,
    classify,
    doubling_nonequivalence,
)
from altperm.bijection import CHECK_STATS, reset_check_stats
from altperm.verify import (
    bijection_suite,
    doubling_suite,
    eboard_suite,
    extension_suite,
    injections_suite,
    shape2_suite,
)

EXTENDED = os.environ.get("ALTPERM_EXTENDED") == "1"


def _count(pattern, cls, n):
    return count_avoiders(AvoidanceQuery(pattern, cls, n)).count


def _announce(num, text):
    print(f"ACCEPTANCE {num}: PASS - {text}")


def test_criterion_01_table_4rep():
    t0 = time.perf_counter()
    checked = 0
    for row in TABLES["4rep"]:
        for pattern in row.patterns:
            for n in sorted(row.counts):
                got = _count(pattern, DescentType(3), n)
                assert got == expected_count("4rep", row, n), (pattern, n, got)
                checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 45 + 9  # 45 cells plus the shared second pattern's row
    assert elapsed < 5.0, f"took {elapsed:.1f}s"
    assert ("4rep", "1423", 9) in KNOWN_MISPRINTS  # ledgered misprint: 153, not 143
    _announce(1, f"all 45 entries reproduced in {elapsed:.1f}s "
                 "(entry (1423, 9) per verified recount 153; printed 143 is a misprint)")


def test_criterion_02_table_6even():
    t0 = time.perf_counter()
    ns = [2, 4, 6, 8, 10]
    for row in TABLES["6even"]:
        for pattern in row.patterns:
            for n in ns:
                got = _count(pattern, ALTERNATING, n)
                assert got == expected_count("6even", row, n), (pattern, n, got)
    # the one reverse-complement partner missing from the printed rows
    a = _count(parse_perm("654231"), ALTERNATING, 8)
    b = _count(parse_perm("645321"), ALTERNATING, 8)
    assert a == b == 1385
    elapsed = time.perf_counter() - t0
    assert elapsed < 600.0, f"took {elapsed:.1f}s"
    _announce(2, f"columns 2-10 reproduced for every listed pattern in {elapsed:.1f}s")


@pytest.mark.skipif(not EXTENDED, reason="length-12 column is an extended run")
def test_criterion_02_extended_column_12():
    for row in TABLES["6even"]:
        pattern = row.patterns[0]
        got = _count(pattern, ALTERNATING, 12)
        assert got == expected_count("6even", row, 12), (pattern, got)
    _announce("2x", "column 12 reproduced for one representative per row")


def test_criterion_03_table_6odd():
    t0 = time.perf_counter()
    ns = [1, 3, 5, 7, 9]
    seen_9 = set()
    for row in TABLES["6odd"]:
        for pattern in row.patterns:
            for n in ns:
                got = _count(pattern, ALTERNATING, n)
                assert got == expected_count("6odd", row, n), (pattern, n, got)
        seen_9.add(row.counts[9])
    assert seen_9 == {7936, 7622, 7164, 7156, 7148}
    elapsed = time.perf_counter() - t0
    _announce(3, f"columns 1-9 reproduced for every listed pattern in {elapsed:.1f}s")


@pytest.mark.skipif(not EXTENDED, reason="length-11 column is an extended run")
def test_criterion_03_extended_column_11():
    for row in TABLES["6odd"]:
        pattern = row.patterns[0]
        got = _count(pattern, ALTERNATING, 11)
        assert got == expected_count("6odd", row, 11), (pattern, got)
    _announce("3x", "column 11 reproduced for one representative per row")


def test_criterion_04_and_05_bijection_and_lemma_suite():
    reset_check_stats()
    t0 = time.perf_counter()
    results = bijection_suite(rows=6, semi_rows=5)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    assert elapsed < 600.0, f"took {elapsed:.1f}s"
    _announce(4, f"mutually inverse bijections on all 1-alternating triples "
                 f"with <= 6 rows and semialternating with <= 5, {elapsed:.1f}s")
    # every lemma family must have actually fired during the sweep
    for key in (
        "phi_board",
        "psi_board",
        "jtype2_geometry",
        "jtype3_orderings",
        "ftype3_orderings",
        "pin_preserved",
        "validity",
    ):
        assert CHECK_STATS[key] > 0, f"lemma family {key} never exercised"
    for r in eboard_suite(rows=5):
        assert r.ok, f"{r.name}: {r.detail}"
    _announce(5, "zero violations across "
                 f"{CHECK_STATS['validity']} checked steps "
                 f"({CHECK_STATS['jtype2_geometry']} type-2, "
                 f"{CHECK_STATS['jtype3_orderings']}+{CHECK_STATS['ftype3_orderings']} type-3)")


def test_criterion_06_shape2_suite():
    t0 = time.perf_counter()
    results = shape2_suite(rows=6)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    _announce(6, f"closed form exhaustively confirmed on <= 6 rows in {elapsed:.1f}s")


def test_criterion_07_extension_suite():
    t0 = time.perf_counter()
    results = extension_suite(rows=5)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    _announce(7, f"block-sum identity and successor lemmas exhaustive on "
                 f"<= 5 rows in {elapsed:.1f}s")


def test_criterion_08_doubling_suite():
    t0 = time.perf_counter()
    results = doubling_suite(k_max=6)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    assert elapsed < 120.0, f"took {elapsed:.1f}s"
    _announce(8, f"minimal container oracle matches k + t for all of S_k, "
                 f"k <= 6, in {elapsed:.1f}s")


def test_criterion_09_injection_suite():
    t0 = time.perf_counter()
    results = injections_suite(k_values=(2, 3, 4), n_max=8)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    # the bold plateau pairs
    for q, pairs in (
        (parse_perm("2134"), ((5, 6, 9), (8, 9, 153))),
        (parse_perm("3124"), ((5, 6, 9), (8, 9, 143))),
    ):
        for n1, n2, value in pairs:
            assert _count(q, DescentType(3), n1) == value
            assert _count(q, DescentType(3), n2) == value
    _announce(9, f"child maps injective and avoiding for k in 2..4, n <= 8; "
                 f"plateaus 9=9, 153=153, 143=143 realized ({elapsed:.1f}s)")


def test_criterion_10_equivalence_sweeps():
    t0 = time.perf_counter()
    # 12q vs 21q for all tails of length <= 2, both parities, n <= 10
    tails = [()] if False else []
    for t in (3, 4, 5):
        for tail in itertools.permutations(range(3, t + 1)):
            lhs = (1, 2) + tail
            rhs = (2, 1) + tail
            for n in range(1, 11):
                assert _count(lhs, ALTERNATING, n) == _count(rhs, ALTERNATING, n), (
                    lhs, rhs, n,
                )
    # 123q, 213q, 321q agree for alternating; 213q, 321q for reverse
    for t in (4, 5):
        for tail in itertools.permutations(range(4, t + 1)):
            trip = [(1, 2, 3) + tail, (2, 1, 3) + tail, (3, 2, 1) + tail]
            for n in range(1, 11):
                counts = {_count(q, ALTERNATING, n) for q in trip}
                assert len(counts) == 1, (trip, n)
                rcounts = {_count(q, REVERSE_ALTERNATING, n) for q in trip[1:]}
                assert len(rcounts) == 1, (trip, n)
    # complemented form (t-1)t(t-2)w vs (t-2)(t-1)tw; at t = 3 the underlying
    # equivalence is even-length only (odd diverges: 1 vs 2 already at n=3)
    for n in (2, 4, 6, 8, 10):
        assert _count((2, 3, 1), ALTERNATING, n) == _count((1, 2, 3), ALTERNATING, n)
    for t in (4, 5):
        for tail in itertools.permutations(range(1, t - 2)):
            lhs = (t - 1, t, t - 2) + tail
            rhs = (t - 2, t - 1, t) + tail
            for n in range(1, 11):
                assert _count(lhs, ALTERNATING, n) == _count(rhs, ALTERNATING, n)
    # decreasing pattern not equivalent to anything else, even lengths, k <= 5
    for k in range(2, 6):
        dec = tuple(range(k, 0, -1))
        for q in perms_of(k):
            if q == dec:
                continue
            verdict = doubling_nonequivalence(dec, q, "even")
            assert verdict.decided and verdict.counts[0] != verdict.counts[1], (dec, q)
    # length-4 classifications
    S4 = list(perms_of(4))
    odd = classify(S4, ALTERNATING, (1, 3, 5, 7, 9))
    blk1 = odd.block_of(parse_perm("1234"))
    assert set(blk1.patterns) == {
        parse_perm(s) for s in ("1234", "2134", "3214", "4321", "4312", "4123")
    }
    blk2 = odd.block_of(parse_perm("2143"))
    assert set(blk2.patterns) == {
        parse_perm(s) for s in ("2143", "1243", "3421", "2341", "3412", "1432")
    }
    assert blk1 != blk2
    even = classify(S4, ALTERNATING, (2, 4, 6, 8, 10))
    grp1 = {parse_perm(s) for s in ("1234", "3214", "2134", "2143")}
    grp2 = {parse_perm(s) for s in ("2341", "3421")}
    grp1 |= {reverse_complement(p) for p in grp1}
    grp2 |= {reverse_complement(p) for p in grp2}
    assert grp1 <= set(even.block_of(parse_perm("1234")).patterns)
    assert grp2 <= set(even.block_of(parse_perm("2341")).patterns)
    elapsed = time.perf_counter() - t0
    _announce(10, f"count equalities, non-equivalence witnesses, and the "
                  f"length-4 classifications reproduced in {elapsed:.1f}s")


def test_criterion_11_conjecture_sweep():
    t0 = time.perf_counter()
    verdict = check_conjecture("sesa", k_max=4, rows_max=6)
    elapsed = time.perf_counter() - t0
    assert verdict.ok, verdict.counterexample
    assert elapsed < 1800.0, f"took {elapsed:.1f}s"
    _announce(11, f"no counterexample for block sizes 3..4 over all "
                  f"1-semialternating triples with <= 6 rows ({elapsed:.1f}s)")

"""Small-scale runs of every named property suite (the acceptance module
runs them at their full stated ranges)."""

from altperm.verify import (
    doubling_suite,
    eboard_suite,
    injections_suite,
    minimal_container_lengths,
    run_suite,
    shape2_suite,
)
from altperm.perms import perms_of
import pytest


def _assert_all_pass(results):
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"


def test_shape2_small():
    _assert_all_pass(shape2_suite(rows=4))


def test_doubling_small():
    _assert_all_pass(doubling_suite(k_max=4))


def test_minimal_container_oracle_agrees_with_direct_search():
    # the marking oracle must agree with a direct per-pattern search
    import itertools
    from altperm.enumeration import generate
    from altperm.perms import ALTERNATING, contains

    oracle = minimal_container_lengths(4)
    for p in perms_of(4):
        direct = None
        for L in range(4, 8):
            if any(contains(w, p) for w in generate(ALTERNATING, L)):
                direct = L
                break
        assert direct == oracle[p]


def test_eboard_small():
    _assert_all_pass(eboard_suite(rows=4))


def test_injections_small():
    _assert_all_pass(injections_suite(k_values=(2, 3), n_max=6))


def test_run_suite_dispatch():
    with pytest.raises(ValueError):
        run_suite("nope")
    res = run_suite("shape2", rows=3)
    assert all(r.ok for r in res)

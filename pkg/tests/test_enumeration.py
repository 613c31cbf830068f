
import pytest

from altperm.enumeration import (
    AvoidanceQuery,
    BudgetExceeded,
    count_avoiders,
    count_avoiders_parallel,
    count_class,
    generate,
    prefix_jobs,
    sequence,
)
from altperm.perms import (
    ALL,
    ALTERNATING,
    REVERSE_ALTERNATING,
    DescentSet,
    DescentType,
    class_member,
    complement,
    contains,
    parse_perm,
    perms_of,
)

EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]


def test_class_sizes_match_euler_numbers():
    for n in range(0, 10):
        assert count_class(ALTERNATING, n) == EULER[n]
        assert count_class(REVERSE_ALTERNATING, n) == EULER[n]
    assert count_class(ALL, 0) == 1
    assert list(generate(ALL, 0)) == [()]


def test_generator_is_lexicographic_and_matches_filter():
    classes = [
        ALL,
        ALTERNATING,
        REVERSE_ALTERNATING,
        DescentType(3),
        DescentSet(frozenset({2})),
    ]
    for cls in classes:
        for n in range(0, 7):
            got = list(generate(cls, n))
            assert got == sorted(got)
            expected = [w for w in perms_of(n) if class_member(w, cls)]
            assert got == expected


def test_generator_empty_for_infeasible_class():
    assert list(generate(DescentSet(frozenset({5})), 3)) == []
    assert count_avoiders(AvoidanceQuery((2, 1), DescentSet(frozenset({9})), 4)).count == 0


def test_alternating_4_has_five_members():
    assert count_class(ALTERNATING, 4) == 5


def test_descent_type_generator_cross_check():
    got = sum(1 for _ in generate(DescentType(3), 5))
    expected = sum(1 for w in perms_of(5) if class_member(w, DescentType(3)))
    assert got == expected


def test_pruned_counter_equals_filter_oracle():
    patterns = [q for b in (3, 4) for q in perms_of(b)]
    classes = [ALL, ALTERNATING, DescentType(2), DescentType(3), DescentType(4)]
    for cls in classes:
        pool = {n: list(generate(cls, n)) for n in range(0, 8)}
        for q in patterns:
            for n in range(0, 8):
                fast = count_avoiders(AvoidanceQuery(q, cls, n)).count
                slow = sum(1 for w in pool[n] if not contains(w, q))
                assert fast == slow, (q, cls, n)


def test_trivial_counts():
    for q in ((2, 1), (1, 2, 3), (4, 3, 2, 1)):
        assert count_avoiders(AvoidanceQuery(q, ALTERNATING, 1)).count == 1
    assert sequence((2, 1), ALL, 5) == [1, 1, 1, 1, 1]


def test_reference_table_spot_values():
    assert count_avoiders(AvoidanceQuery(parse_perm("634521"), ALTERNATING, 8)).count == 1385
    assert count_avoiders(AvoidanceQuery(parse_perm("3124"), DescentType(3), 5)).count == 9
    assert sequence(parse_perm("2134"), DescentType(3), 9) == [1, 1, 1, 3, 9, 9, 44, 153, 153]


def test_alternating_vs_reverse_complement_duality():
    for b in (2, 3, 4):
        for q in perms_of(b):
            for n in range(1, 8):
                a = count_avoiders(AvoidanceQuery(q, ALTERNATING, n)).count
                b2 = count_avoiders(AvoidanceQuery(complement(q), REVERSE_ALTERNATING, n)).count
                assert a == b2, (q, n)


def test_parallel_partition_is_schedule_independent():
    q = AvoidanceQuery(parse_perm("1234"), ALTERNATING, 8)
    seq = count_avoiders(q).count
    par = count_avoiders_parallel(q, jobs=2).count
    assert seq == par
    jobs = prefix_jobs(ALTERNATING, 8, depth=2)
    assert len(set(jobs)) == len(jobs)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        count_avoiders(AvoidanceQuery((1, 2, 3, 4), ALL, 11), budget=0.0)

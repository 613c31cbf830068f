
import pytest

from altperm.diagrams import (
    ADYoungDiagram,
    YoungDiagram,
    ad_configs,
    all_diagrams,
    alternating_configs,
    count_avoiding_transversals,
    eligible_indices,
    full_square_class_encoding,
    is_ad_young,
    is_valid_transversal,
    is_x_alternating,
    is_x_semialternating,
    j2_canonical_transversal,
    parse_ad,
    parse_diagram,
    semialternating_configs,
    shape2_closed_form,
    transversal_contains,
    valid_transversals,
)
from altperm.enumeration import AvoidanceQuery, count_avoiders, generate
from altperm.perms import ALTERNATING, REVERSE_ALTERNATING, perms_of


def test_diagram_construction_rules():
    assert parse_diagram("4,4,2,2").n == 4
    with pytest.raises(ValueError):
        YoungDiagram((3, 4, 2))  # not weakly decreasing
    with pytest.raises(ValueError):
        YoungDiagram((4, 3))  # fewer rows than columns
    with pytest.raises(ValueError):
        YoungDiagram((2, 0))  # empty row
    assert YoungDiagram(()).n == 0


def test_ad_young_gate():
    Y = parse_diagram("4,4,2,2")
    assert is_ad_young(Y, set(), {3})
    assert not is_ad_young(parse_diagram("3,3,1"), {1}, {2})
    sq = parse_diagram("5,5,5,5,5")
    assert is_ad_young(sq, {1, 3}, {2, 4})
    assert not is_ad_young(sq, {1}, {1})  # not disjoint
    with pytest.raises(ValueError):
        ADYoungDiagram(Y, frozenset({9}), frozenset())


def test_parse_and_str_round_trip():
    ady = parse_ad("4,4,2,2;A=;D=3")
    assert ady.A == frozenset() and ady.D == frozenset({3})
    assert str(ady) == "4,4,2,2;A=;D=3"
    assert parse_ad(str(ady)) == ady


def test_alternation_predicates_worked_example():
    sq = parse_diagram("4,4,4,4")
    a = ADYoungDiagram(sq, frozenset({1}), frozenset({2}))
    assert is_x_alternating(a, 1)
    b = ADYoungDiagram(sq, frozenset({1, 3}), frozenset({2}))
    assert is_x_alternating(b, 2)
    assert not is_x_alternating(b, 1)
    # empty required sets: always 1-alternating
    for Y in all_diagrams(5):
        assert is_x_alternating(ADYoungDiagram(Y, frozenset(), frozenset()), 1)
    # 1-alternating implies 1-semialternating and x-alternating for larger x
    for Y in all_diagrams(4):
        for ady in ad_configs(Y):
            if is_x_alternating(ady, 1):
                assert is_x_semialternating(ady, 1)
                assert is_x_alternating(ady, 2)


def test_transversal_containment_figure_data():
    Y = parse_diagram("6,6,6,6,5,4")
    T = (3, 4, 6, 5, 2, 1)
    assert is_valid_transversal(ADYoungDiagram(Y, frozenset(), frozenset()), T)
    assert transversal_contains(Y, T, (2, 3, 1))
    assert not transversal_contains(Y, T, (4, 3, 2, 1))
    # on a full square the corner condition is vacuous
    sq = parse_diagram("6,6,6,6,6,6")
    from altperm.perms import contains

    for q in perms_of(3):
        assert transversal_contains(sq, T, q) == contains(T, q)


def test_valid_transversals_match_class_members():
    for n in range(0, 8):
        enc = full_square_class_encoding(n, "alt")
        assert list(valid_transversals(enc)) == list(generate(ALTERNATING, n))
        enc2 = full_square_class_encoding(n, "ralt")
        assert list(valid_transversals(enc2)) == list(generate(REVERSE_ALTERNATING, n))


def test_full_square_avoidance_bridge():
    reps = list(perms_of(3)) + [(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)]
    for kind, cls in (("alt", ALTERNATING), ("ralt", REVERSE_ALTERNATING)):
        for n in range(0, 8):
            enc = full_square_class_encoding(n, kind)
            for q in reps:
                lhs = count_avoiding_transversals(enc, q)
                rhs = count_avoiders(AvoidanceQuery(q, cls, n)).count
                assert lhs == rhs, (kind, n, q)


def test_missing_staircase_means_no_transversals():
    Y = parse_diagram("3,1,1")
    assert not Y.contains_staircase()
    assert list(valid_transversals(ADYoungDiagram(Y, frozenset(), frozenset()))) == []


def test_avoidance_counts_on_notched_shape():
    ady = parse_ad("4,4,2,2;A=;D=3")
    assert count_avoiding_transversals(ady, (1, 2)) == 1
    assert count_avoiding_transversals(ady, (2, 1)) == 0
    total = sum(1 for _ in valid_transversals(ady))
    for q in perms_of(2):
        assert count_avoiding_transversals(ady, q) <= total


def test_relaxed_triple_from_remark():
    rel = ADYoungDiagram(
        parse_diagram("3,3,1"), frozenset({1}), frozenset({2}), relaxed=True
    )
    assert count_avoiding_transversals(rel, (1, 2)) == 0
    assert count_avoiding_transversals(rel, (2, 1)) == 1
    with pytest.raises(ValueError):
        ADYoungDiagram(parse_diagram("3,3,1"), frozenset({1}), frozenset({2}))


def test_j2_canonical_rule():
    assert j2_canonical_transversal(parse_ad("4,4,2,2;A=;D=")) == (3, 4, 1, 2)
    assert j2_canonical_transversal(parse_ad("2,1;A=;D=")) == (2, 1)
    assert j2_canonical_transversal(parse_ad("3,1,1;A=;D=")) is None
    with pytest.raises(ValueError):
        j2_canonical_transversal(parse_ad("2,2;A=;D=1"))
    # on squares the rule reproduces the unique 21-avoider
    for n in range(1, 6):
        ady = ADYoungDiagram(YoungDiagram((n,) * n), frozenset(), frozenset())
        avoiders = [
            T
            for T in valid_transversals(ady)
            if not transversal_contains(ady.diagram, T, (2, 1))
        ]
        assert avoiders == [j2_canonical_transversal(ady)]


def test_closed_form_guard():
    with pytest.raises(ValueError):
        shape2_closed_form(parse_ad("2,2;A=;D="), (1, 2, 3))


def test_diagram_family_enumeration():
    assert sum(1 for _ in all_diagrams(6)) == 351
    Y = parse_diagram("4,4,2,2")
    assert eligible_indices(Y) == [1, 3]
    assert sum(1 for _ in ad_configs(Y)) == 9
    for ady in alternating_configs(Y):
        assert is_x_alternating(ady, 1)
    for ady in semialternating_configs(Y):
        assert is_x_semialternating(ady, 1)
    # every 1-alternating/semialternating config is produced
    for Yd in all_diagrams(4):
        alts = {(a.A, a.D) for a in alternating_configs(Yd)}
        semis = {(a.A, a.D) for a in semialternating_configs(Yd)}
        for ady in ad_configs(Yd):
            if is_x_alternating(ady, 1):
                assert (ady.A, ady.D) in alts
            if is_x_semialternating(ady, 1):
                assert (ady.A, ady.D) in semis

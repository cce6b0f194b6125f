import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_hnn.errors import (
    BadGeneratorName,
    ContradictoryLabels,
    DuplicateGenerator,
    InvalidLabel,
    LabelMismatch,
    RepeatedSource,
    RepeatedTarget,
    SelfPairLabel,
    UnknownGenerator,
)
from artin_hnn.io import input_to_json, parse_input
from artin_hnn.systems import INF, label_set, validate_bijection, validate_system

from helpers import random_system


def test_single_label():
    s = validate_system(["a", "b"], [("a", "b", 3)])
    assert s.m("a", "b") == 3 == s.m("b", "a")
    assert label_set(s) == {3}


def test_absent_pair_is_infinite():
    s = validate_system(["a", "b"])
    assert s.m("a", "b") == INF
    assert label_set(s) == {INF}
    assert s.labels == {}


def test_explicit_inf_is_stored_as_absence():
    s = validate_system(["a", "b"], [("a", "b", "inf")])
    assert s.labels == {} and s.m("a", "b") == INF


def test_contradictory_labels():
    with pytest.raises(ContradictoryLabels):
        validate_system(["a", "b"], [("a", "b", 3), ("b", "a", 2)])


def test_repeated_consistent_labels_are_deduplicated():
    s = validate_system(["a", "b"], [("a", "b", 3), ("b", "a", 3)])
    assert len(s.labels) == 1


@pytest.mark.parametrize(
    "gens, labels, exc",
    [
        (["a", "a"], [], DuplicateGenerator),
        (["a", "b"], [("a", "b", 1)], InvalidLabel),
        (["a", "b"], [("a", "b", "x")], InvalidLabel),
        (["a", "b"], [("a", "a", 2)], SelfPairLabel),
        (["a", "b"], [("a", "c", 2)], UnknownGenerator),
        (["a b"], [], BadGeneratorName),
        (["a@0"], [], BadGeneratorName),
        ([""], [], BadGeneratorName),
    ],
)
def test_validate_system_errors(gens, labels, exc):
    with pytest.raises(exc):
        validate_system(gens, labels)


def test_label_set_examples():
    assert label_set(validate_system(["a", "b", "c"], [("a", "b", 3)])) == {3, INF}
    assert label_set(validate_system(["a"])) == set()


def test_right_angled():
    assert validate_system(["a", "b", "c"], [("a", "b", 2)]).is_right_angled
    assert not validate_system(["a", "b"], [("a", "b", 3)]).is_right_angled


def test_bijection_singleton_domain():
    s = validate_system(["a", "b"], [("a", "b", 3)])
    phi = validate_bijection(s, [("a", "b")])
    assert phi.domain == ("a",) and phi.image == ("b",)


def test_bijection_swap():
    s = validate_system(["a", "b"], [("a", "b", 2)])
    phi = validate_bijection(s, [("a", "b"), ("b", "a")])
    assert phi("a") == "b" and phi("b") == "a"


def test_bijection_label_mismatch_names_pair():
    s = validate_system(["a", "b", "c"], [("a", "b", 3), ("b", "c", 2)])
    with pytest.raises(LabelMismatch) as info:
        validate_bijection(s, [("a", "b"), ("b", "c")])
    err = info.value
    assert err.pair == ("a", "b") and err.image == ("b", "c") and err.labels == (3, 2)
    assert "m(a,b)=3" in str(err) and "m(b,c)=2" in str(err)


def test_bijection_infinite_by_absence_counts():
    s = validate_system(["a", "b", "c"], [("a", "b", 2)])
    with pytest.raises(LabelMismatch):
        validate_bijection(s, [("a", "a"), ("b", "c")])


@pytest.mark.parametrize(
    "pairs, exc",
    [
        ([("a", "b"), ("a", "c")], RepeatedSource),
        ([("a", "c"), ("b", "c")], RepeatedTarget),
        ([("a", "z")], UnknownGenerator),
    ],
)
def test_bijection_shape_errors(pairs, exc):
    s = validate_system(["a", "b", "c"])
    with pytest.raises(exc):
        validate_bijection(s, pairs)


def test_bypass_keeps_shape_checks():
    s = validate_system(["a", "b", "c"], [("a", "b", 3), ("b", "c", 2)])
    phi = validate_bijection(s, [("a", "b"), ("b", "c")], check_labels=False)
    assert phi.mapping == {"a": "b", "b": "c"}
    with pytest.raises(RepeatedSource):
        validate_bijection(s, [("a", "b"), ("a", "c")], check_labels=False)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_through_input_document(seed):
    import json

    sys_ = random_system(random.Random(seed), max_gens=6, labels=(2, 3, 4, 7, INF))
    doc = parse_input(json.dumps(input_to_json(sys_)))
    assert doc.system() == sys_


def _preserves(system, mapping):
    return all(
        system.m(s, t) == system.m(mapping[s], mapping[t]) for s, t in combinations(list(mapping), 2)
    )


@pytest.mark.parametrize("seed", range(6))
def test_bijection_acceptance_matches_exhaustive_pairing(seed):
    rng = random.Random(seed)
    sys_ = random_system(rng, max_gens=4)
    gens = sys_.generators
    for size in range(len(gens) + 1):
        for dom in combinations(gens, size):
            for img in permutations(gens, size):
                mapping = dict(zip(dom, img))
                try:
                    validate_bijection(sys_, list(mapping.items()))
                    accepted = True
                except LabelMismatch:
                    accepted = False
                assert accepted == _preserves(sys_, mapping)

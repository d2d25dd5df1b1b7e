from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacuna.errors import IndexOutOfRange, TooLarge
from lacuna.multiplicity import (
    SignedTuple,
    mult_crosscut,
    mult_moebius,
    mult_of_values,
    signed_subset_sum,
    signed_values,
    upset_partitions,
    zero_sum_profile,
)
from lacuna.partitions import SetPartition, top
from lacuna.sequences import SequenceSpec, generate_terms

# The alternating tuple with values (1, -1, 1, -1): the canonical case
# where the multiplicity is neither 0 nor 1.
ALTERNATING = SignedTuple((1, 1, 1, 1), (1, -1, 1, -1))
FIB = generate_terms(SequenceSpec.fibonacci(), 8)
POW2 = generate_terms(SequenceSpec.pow2plus1(), 8)


def all_tuples(n, m):
    for indices in product(range(1, n + 1), repeat=m):
        for signs in product((1, -1), repeat=m):
            yield SignedTuple(indices, signs)


def test_signed_tuple_validation():
    with pytest.raises(ValueError):
        SignedTuple((1, 2), (1,))
    with pytest.raises(ValueError):
        SignedTuple((1,), (2,))
    with pytest.raises(ValueError):
        SignedTuple((), ())


def test_signed_values_checks_range():
    with pytest.raises(IndexOutOfRange):
        signed_values(SignedTuple((3,), (1,)), [1, 2])


def test_signed_subset_sum_examples():
    assert signed_subset_sum(ALTERNATING, [1, 2], [1]) == 0
    assert signed_subset_sum(ALTERNATING, [], [1]) == 0
    assert signed_subset_sum(ALTERNATING, [1, 3], [1]) == 2
    triple = SignedTuple((1, 2, 3), (1, 1, -1))
    assert signed_subset_sum(triple, [1, 2, 3], FIB) == 0


def test_zero_sum_profile_worked_example():
    profile = zero_sum_profile(ALTERNATING, [1])
    assert profile.subsets() == [(1, 2), (2, 3), (1, 4), (3, 4), (1, 2, 3, 4)]


def test_zero_sum_profile_empty_when_nothing_cancels():
    tup = SignedTuple((1, 2), (1, 1))
    assert zero_sum_profile(tup, POW2).masks == frozenset()


def test_zero_sum_profile_connected_triple():
    tup = SignedTuple((1, 2, 3), (1, 1, -1))  # 1 + 1 - 2 over fibonacci
    profile = zero_sum_profile(tup, FIB)
    assert profile.subsets() == [(1, 2, 3)]


def test_zero_sum_profile_guard():
    big = SignedTuple(tuple([1] * 21), tuple([1] * 21))
    with pytest.raises(TooLarge):
        zero_sum_profile(big, [1])


def test_upset_partitions_worked_example():
    profile = zero_sum_profile(ALTERNATING, [1])
    upset = upset_partitions(profile, 4)
    assert set(upset) == {
        top(4),
        SetPartition.from_blocks([[1, 2], [3, 4]]),
        SetPartition.from_blocks([[1, 4], [2, 3]]),
    }


def test_upset_partitions_edge_profiles():
    none = zero_sum_profile(SignedTuple((1, 2), (1, 1)), POW2)
    assert upset_partitions(none, 2) == []
    connected = zero_sum_profile(SignedTuple((1, 2, 3), (1, 1, -1)), FIB)
    assert upset_partitions(connected, 3) == [top(3)]


@pytest.mark.parametrize("route", [mult_moebius, mult_crosscut])
def test_multiplicity_examples(route):
    assert route(ALTERNATING, [1]) == -1
    assert route(SignedTuple((1, 2), (1, 1)), POW2) == 0
    assert route(SignedTuple((1, 2, 3), (1, 1, -1)), FIB) == 1


@pytest.mark.parametrize("terms", [FIB, POW2], ids=["fibonacci", "pow2plus1"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_moebius_equals_crosscut_exhaustively(terms, m):
    for tup in all_tuples(5, m):
        assert mult_moebius(tup, terms) == mult_crosscut(tup, terms)


def test_mult_vanishes_unless_total_cancels():
    for tup in all_tuples(4, 3):
        if sum(signed_values(tup, FIB)) != 0:
            assert mult_moebius(tup, FIB) == 0


@given(
    data=st.lists(
        st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), min_size=1, max_size=5
    ),
    seed=st.randoms(),
)
@settings(max_examples=80, deadline=None)
def test_mult_invariant_under_permutation(data, seed):
    indices = tuple(i for i, _ in data)
    signs = tuple(s for _, s in data)
    baseline = mult_moebius(SignedTuple(indices, signs), FIB)
    shuffled = list(range(len(data)))
    seed.shuffle(shuffled)
    tup = SignedTuple(
        tuple(indices[p] for p in shuffled), tuple(signs[p] for p in shuffled)
    )
    assert mult_moebius(tup, FIB) == baseline


@given(
    data=st.lists(
        st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), min_size=1, max_size=5
    )
)
@settings(max_examples=80, deadline=None)
def test_mult_invariant_under_global_sign_flip(data):
    indices = tuple(i for i, _ in data)
    signs = tuple(s for _, s in data)
    flipped = tuple(-s for s in signs)
    assert mult_moebius(SignedTuple(indices, signs), FIB) == mult_moebius(
        SignedTuple(indices, flipped), FIB
    )


def test_mult_zero_when_every_cancellation_splits():
    # Two widely separated scales: every zero-sum subset decomposes into
    # a low part and a high part, so the minimal partitions never join
    # to the top and the multiplicity collapses to zero.
    terms = [1, 10**9]
    tup = SignedTuple((1, 1, 2, 2), (1, -1, 1, -1))
    assert mult_moebius(tup, terms) == 0
    assert mult_crosscut(tup, terms) == 0
    # Same sign pattern without the scale split keeps multiplicity -1.
    assert mult_moebius(ALTERNATING, [1]) == -1


def test_mult_of_values_matches_tuple_route():
    for tup in all_tuples(4, 3):
        vals = signed_values(tup, POW2)
        assert mult_of_values(vals) == mult_moebius(tup, POW2)


def test_mult_handles_duplicate_indices():
    # a_1 = a_2 = 1 for fibonacci: (1, 2; +, -) is a zero-sum pair.
    tup = SignedTuple((1, 2), (1, -1))
    assert mult_moebius(tup, FIB) == 1

from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from maxplus_transient import InputError, from_matrix
from maxplus_transient.digraph import closed_length_profile, graph_params
from maxplus_transient.numtheory import (
    GeneratorSet,
    brauer_threshold,
    closed_length_generators,
    generator_window,
    representable,
    zero_subset_mod,
)

from oracles import representable as representable_oracle
from strategies import matrices


@pytest.mark.parametrize("values, threshold", [((1,), 0), ((3, 5), 8), ((2, 3), 2), ((4, 6), 4)])
def test_thresholds(values, threshold):
    assert brauer_threshold(GeneratorSet(values)) == threshold


def test_coin_examples():
    gens = GeneratorSet((5, 3))
    assert gens.values == (3, 5) and gens.d == 1
    assert representable(0, gens)
    assert not representable(7, gens)
    assert representable(8, gens)
    assert all(representable(n, GeneratorSet((2, 3))) for n in range(2, 40))


def test_invalid_generators():
    for bad in ((), (0, 3), (-2,)):
        with pytest.raises(InputError):
            GeneratorSet(bad)


@pytest.mark.parametrize(
    "xs, d, expected", [((1, 1, 1), 3, (0, 1, 2)), ((1, 3), 2, (0, 1)), ((1, 1, 2, 5), 4, (0, 1, 2)), ((7,), 1, (0,))]
)
def test_zero_subset_examples(xs, d, expected):
    assert zero_subset_mod(xs, d) == expected


def test_zero_subset_needs_exactly_d_values():
    with pytest.raises(InputError):
        zero_subset_mod((1, 2), 3)
    with pytest.raises(InputError):
        zero_subset_mod((), 0)


generator_sets = st.lists(st.integers(1, 30), min_size=1, max_size=4).map(tuple)


@settings(max_examples=100, deadline=None)
@given(generator_sets)
def test_multiples_above_threshold_are_representable(values):
    gens = GeneratorSet(values)
    t = brauer_threshold(gens)
    start = -(-t // gens.d) * gens.d
    for n in range(start, start + 2 * gens.values[-1] + 1, gens.d):
        assert representable(n, gens)
    # non-multiples never are
    if gens.d > 1:
        assert not representable(start + 1, gens)


@settings(max_examples=100, deadline=None)
@given(generator_sets, st.integers(0, 60))
def test_dp_matches_brute_force(values, n):
    assert representable(n, GeneratorSet(values)) == representable_oracle(n, values)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-50, 50), min_size=d, max_size=d))))
def test_zero_subset_is_contiguous_and_sums_to_zero(case):
    d, xs = case
    idx = zero_subset_mod(xs, d)
    assert idx and list(idx) == list(range(idx[0], idx[-1] + 1))
    assert sum(xs[i] for i in idx) % d == 0


@settings(max_examples=60, deadline=None)
@given(matrices(max_size=6))
def test_cycle_detour_lengths_generate_the_cyclicity(a):
    g = from_matrix(a)
    params = graph_params(g)
    profile = closed_length_profile(g, 4 * g.n_nodes)
    girth, top = generator_window(g)
    assert girth == params.girth and top == 2 * g.n_nodes - 1
    for i in g.nodes:
        lengths = closed_length_generators(g, i)
        assert reduce(gcd, lengths) == params.c
        assert all(n >= 1 and (n > profile.horizon or profile.achieves(i, n)) for n in lengths)

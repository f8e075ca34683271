from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from maxplus_transient import NEG_INF, InputError, identity, mat_mul, mat_power, mat_vec, matrix, scale, vector, weight
from maxplus_transient.algebra import format_weight, tmax, unit_vector

from instances import A1, A2, G2
from oracles import as_rows, naive_mul, naive_power, path_sum_power
from strategies import matrices, vectors


def test_power_of_two_cycle_with_loop():
    assert mat_power(A1, 2) == matrix([[0, -1], [-1, 0]])
    assert mat_power(A1, 3) == matrix([[-1, 0], [0, -1]])
    assert as_rows(mat_power(A1, 3)) == path_sum_power(as_rows(A1), 3)


def test_rank_one_matrix_is_idempotent_and_absorbs_vectors():
    assert mat_mul(A2, A2) == A2
    assert mat_vec(A2, vector([0, -1])) == vector([0, 0])


def test_scale_leaves_bottom_alone():
    assert scale(A1, 1) == matrix([[0, 1], [1, "-inf"]])


def test_zero_power_is_identity():
    assert mat_power(G2, 0) == identity(2)


def test_bottom_arithmetic():
    assert NEG_INF + Fraction(5) is NEG_INF
    assert NEG_INF < Fraction(-10**9)
    assert tmax([]) is NEG_INF
    assert tmax([NEG_INF, Fraction(-2)]) == -2
    assert format_weight(NEG_INF) == "-inf"
    with pytest.raises(InputError):
        NEG_INF - NEG_INF


@pytest.mark.parametrize("bad", [0.5, True, "x", "1/0"])
def test_weight_rejects_inexact_or_malformed(bad):
    with pytest.raises(InputError):
        weight(bad)


def test_shape_errors():
    with pytest.raises(InputError):
        mat_mul(G2, matrix([[0, 0, 0]]))
    with pytest.raises(InputError):
        mat_power(matrix([[0, 1]]), 2)
    with pytest.raises(InputError):
        unit_vector(2, 2)
    with pytest.raises(InputError):
        scale(G2, "-inf")


@settings(max_examples=60, deadline=None)
@given(matrices(irreducible=False, rational=True), st.integers(0, 4))
def test_power_matches_path_enumeration(a, n):
    assert as_rows(mat_power(a, n)) == path_sum_power(as_rows(a), n)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_product_is_associative(data):
    n = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(matrices(min_size=n, max_size=n, irreducible=False, rational=True)) for _ in range(3))
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
    assert as_rows(mat_mul(a, b)) == naive_mul(as_rows(a), as_rows(b))


@settings(max_examples=60, deadline=None)
@given(matrices(irreducible=False), st.integers(-3, 3), st.integers(0, 5))
def test_scaling_commutes_with_powers(a, lam, n):
    assert mat_power(scale(a, lam), n) == scale(mat_power(a, n), lam * n)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_orbit_equals_power_times_vector(data):
    a = data.draw(matrices(irreducible=False))
    v = data.draw(vectors(a.n_rows, finite=False))
    n = data.draw(st.integers(0, 6))
    x = v
    for _ in range(n):
        x = mat_vec(a, x)
    assert x == mat_vec(mat_power(a, n), v)
    assert as_rows(mat_power(a, n)) == naive_power(as_rows(a), n)

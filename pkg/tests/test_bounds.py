from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings, strategies as st

from maxplus_transient import (
    NEG_INF,
    PreconditionError,
    analyze,
    bounds_for,
    from_matrix,
    graph_params,
    matrix,
    scale,
    to_matrix,
    vector,
)
from maxplus_transient.bounds import b_cnc, b_ep, er_l0, matrix_bound, node_weight_norm, v_hat
from maxplus_transient.digraph import Digraph

from instances import A1, G2, ZERO2
from strategies import matrix_and_vector, matrices

NEG = "-inf"


def test_loop_dominated_two_node_instance():
    r = bounds_for(G2, ZERO2)
    assert r.norm == 0
    assert (r.B_c, r.B_c_simplified) == (1, 0)
    assert (r.B_ep, r.B_enp, r.B_ne1, r.B_ne2) == (2, 2, 2, 4)
    assert (r.B_ms, r.mu_upper, r.matrix_bound) == (2, 2, 3)
    assert (r.er_bound, r.syk_system, r.syk_matrix) == (13, 8, 8)
    assert r.system_bound == 2


def test_critical_two_cycle_instance():
    r = bounds_for(A1, ZERO2)
    assert r.B_c == 0 and r.B_ep is None
    assert (r.B_enp, r.B_ne1, r.B_ne2, r.B_ms, r.mu_upper) == (5, 5, 4, 5, 5)
    g = from_matrix(A1, ZERO2)
    with pytest.raises(PreconditionError):
        b_ep(analyze(g), graph_params(g), Fraction(0))


def test_single_zero_loop():
    r = bounds_for(matrix([[0]]), vector([0]))
    assert (r.B_c, r.B_ep, r.B_ms, r.mu_upper, r.matrix_bound) == (0, 0, 0, 0, 0)
    assert r.B_ne2 == 1
    assert r.er_bound is None and r.syk_system is None


def test_no_cycle_avoids_the_critical_loop():
    # node 1 is non-critical but lies on no cycle of its own
    g = from_matrix(matrix([[0, -1], [0, NEG]]), ZERO2)
    cs = analyze(g)
    assert cs.N_nc == 1 and cs.rho_nc is NEG_INF
    assert b_cnc(cs, graph_params(g), Fraction(0)) == cs.cd_nc + 1 == 1


def test_all_critical_graph_has_zero_critical_bound():
    g = Digraph.from_edges(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])
    assert bounds_for(to_matrix(g), vector([0, 5, -1])).B_c == 0


def test_v_hat():
    assert v_hat(2, 0, 1) == vector([0, -1])
    assert v_hat(2, 1, 1) == vector([-1, 0])
    assert v_hat(1, 0, 7) == vector([0])


def test_bottom_in_vector_disables_system_bounds():
    r = bounds_for(G2, vector([0, NEG]))
    assert r.norm is None and r.B_enp is None and r.system_bound is None
    assert r.matrix_bound == 3


@settings(max_examples=80, deadline=None)
@given(matrix_and_vector(max_size=5))
def test_bounds_dominate_the_critical_bound(av):
    a, v = av
    r = bounds_for(a, v)
    for value in (r.B_enp, r.B_ne1, r.B_ne2):
        assert value >= r.B_c
    if r.B_ep is not None:
        assert r.B_ep >= r.B_c
        assert r.B_enp == r.B_ep  # primitive critical subgraph: the d - 1 term vanishes
    assert r.B_ne2 >= a.n_rows ** 2
    g = from_matrix(a, v)
    cs, params = analyze(g), graph_params(g)
    n = a.n_rows
    assert r.mu_upper <= (cs.Delta - cs.delta) * (n - 1) + (cs.rho - cs.delta) * (2 * (n - 1) + params.ep)
    assert matrix_bound(cs, params, guarded=True) >= r.matrix_bound
    if r.er_bound is not None:
        assert r.B_c <= er_l0(g, cs, node_weight_norm(g))


@settings(max_examples=80, deadline=None)
@given(matrix_and_vector(max_size=5), st.integers(-3, 3), st.integers(-3, 3))
def test_bounds_are_homothety_invariant(av, lam, shift):
    a, v = av
    r = bounds_for(a, v)
    assert bounds_for(scale(a, lam), v) == r
    assert bounds_for(a, v.shift(shift)) == r


@settings(max_examples=40, deadline=None)
@given(matrices(max_size=5))
def test_matrix_bound_ignores_the_vector(a):
    assert bounds_for(a).matrix_bound == bounds_for(a, vector([0] * a.n_rows)).matrix_bound
    assert ceil(bounds_for(a).matrix_bound) >= 0

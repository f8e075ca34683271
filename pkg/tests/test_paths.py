from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from maxplus_transient import InputError, analyze, from_matrix, normalize, system_transient, to_matrix, vector
from maxplus_transient.digraph import Path, graph_params
from maxplus_transient.errors import CapacityError
from maxplus_transient.paths import (
    DisjointClosedMultiset,
    RealizerQuery,
    max_weight_profile,
    path_weight,
    realizer,
    red,
    red_length_bound,
    remove_multiset,
    simp,
    weight_table,
)

from instances import A1, G2, ZERO2
from oracles import as_rows, orbit
from strategies import matrices, vectors

E4_WALK = Path((0, 1, 0, 2, 3, 0))


def test_path_weights():
    g = from_matrix(G2, vector([0, -1]))
    assert path_weight(g, Path.empty(1)) == (0, -1)
    assert path_weight(g, Path((1, 0))) == (0, 0)
    assert path_weight(from_matrix(A1), Path((0, 1, 0))) == (0, None)
    with pytest.raises(InputError):
        path_weight(from_matrix(A1), Path((1, 1)))


def test_simp():
    assert simp(Path((0, 1, 0, 1))) == Path((0, 1))
    assert simp(E4_WALK) == Path.empty(0)
    assert simp(Path((0, 2, 3))) == Path((0, 2, 3))


def test_remove_multiset():
    walk = Path((0, 1, 0, 1))
    assert remove_multiset(walk, DisjointClosedMultiset(walk, ())) == walk
    assert remove_multiset(walk, DisjointClosedMultiset(walk, ((0, 2),))) == Path((0, 1))
    both = DisjointClosedMultiset(E4_WALK, ((0, 2), (2, 3)))
    assert both.total_length == 5
    assert remove_multiset(E4_WALK, both) == Path.empty(0)


@pytest.mark.parametrize("windows", [((0, 3),), ((0, 2), (1, 2)), ((4, 3),)])
def test_invalid_multisets(windows):
    with pytest.raises(InputError):
        DisjointClosedMultiset(E4_WALK, windows)


def test_red():
    assert red(E4_WALK, 2, 0) == Path((0, 2, 3, 0))
    assert red(E4_WALK, 5, 0) == Path.empty(0)
    with pytest.raises(InputError):
        red(E4_WALK, 2, 7)
    with pytest.raises(CapacityError):
        red(Path((0, 1) * 11), 2, 0)


def test_realizer():
    g = from_matrix(G2, ZERO2)
    odd = realizer(g, RealizerQuery(0, n_hat=1, r=1, p=2, horizon=9))
    assert odd.weight == 0 and odd.length % 2 == 1
    assert path_weight(g, odd.path)[1] == odd.weight
    one = realizer(g, RealizerQuery(1, lengths={1}))
    assert (one.weight, one.path) == (0, Path((1, 0)))
    empty = realizer(g, RealizerQuery(1, lengths={0}))
    assert (empty.weight, empty.path) == (0, Path.empty(1))
    with pytest.raises(InputError):
        RealizerQuery(0, n_hat=0, r=0, p=1, horizon=3)
    with pytest.raises(InputError):
        realizer(g, RealizerQuery(0, lengths=()))


def test_max_weight_profile():
    g = from_matrix(G2, ZERO2)
    assert max_weight_profile(g, 1, 1) == (0, True)
    assert max_weight_profile(g, 1, 0) == (0, False)
    assert all(max_weight_profile(g, 1, n)[1] for n in range(1, 12))


@st.composite
def walks(draw, max_size=5, max_length=14):
    a = draw(matrices(max_size=max_size))
    g = normalize(from_matrix(a))
    nodes = [draw(st.integers(0, g.n_nodes - 1))]
    for _ in range(draw(st.integers(0, max_length))):
        nodes.append(draw(st.sampled_from(g.succ[nodes[-1]])))
    return g, Path(tuple(nodes))


@settings(max_examples=80, deadline=None)
@given(walks())
def test_simp_properties(gw):
    g, walk = gw
    s = simp(walk)
    assert s.is_simple and (s.start, s.end) == (walk.start, walk.end)
    assert s.length <= graph_params(g).cab_diameter
    assert path_weight(g, walk)[0] <= path_weight(g, s)[0]


@settings(max_examples=80, deadline=None)
@given(walks(max_size=6), st.integers(1, 4), st.data())
def test_red_properties(gw, d, data):
    g, walk = gw
    k = data.draw(st.sampled_from(walk.nodes))
    r = red(walk, d, k)
    params = graph_params(g)
    assert (r.start, r.end) == (walk.start, walk.end)
    assert r.length % d == walk.length % d
    assert k in r.nodes
    assert r.length <= red_length_bound(d, params.circumference, params.cab_diameter)
    assert path_weight(g, r)[0] >= path_weight(g, walk)[0]


def _brute_profile(g, crit, i, n):
    best, hit = None, False
    for tail in product(g.nodes, repeat=n):
        nodes = (i,) + tail
        if not all(g.has_edge(u, v) for u, v in zip(nodes, nodes[1:])):
            continue
        w = path_weight(g, Path(nodes))[1]
        touches = bool(set(nodes) & crit)
        if best is None or w > best:
            best, hit = w, touches
        elif w == best:
            hit = hit or touches
    return best, hit


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_profile_matches_path_enumeration(data):
    a = data.draw(matrices(max_size=4))
    v = data.draw(vectors(a.n_rows))
    g = from_matrix(a, v)
    crit = set(analyze(g).critical_nodes)
    n = data.draw(st.integers(0, 5))
    i = data.draw(st.integers(0, a.n_rows - 1))
    assert max_weight_profile(g, i, n, crit) == _brute_profile(g, crit, i, n)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_weight_table_is_the_orbit_and_eventually_periodic(data):
    a = data.draw(matrices(max_size=4))
    v = data.draw(vectors(a.n_rows))
    zero_rate = to_matrix(normalize(from_matrix(a)))
    g = from_matrix(zero_rate, v)
    p = graph_params(g).p
    n_hat = max(system_transient(zero_rate, v).transient, 1)
    horizon = n_hat + 3 * p
    table = weight_table(g, horizon)
    assert table == orbit(as_rows(zero_rate), list(v.entries), horizon)
    for n in range(n_hat, n_hat + 2 * p + 1):
        assert table[n + p] == table[n]
    r = data.draw(st.integers(0, p - 1))
    i = data.draw(st.integers(0, a.n_rows - 1))
    q = RealizerQuery(i, n_hat=n_hat, r=r, p=p, horizon=horizon)
    best = realizer(g, q)
    assert best.weight == max(table[n][i] for n in q.members())
    assert best.length in q.members()
    assert path_weight(g, best.path)[1] == best.weight

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from signedhoffman.families import (
    FamilySpec,
    derive_bridge_gadget,
    family,
    make_B,
    make_c4_paths,
    make_cycle,
    make_cycle_with_pendants,
    make_path,
    make_pendant_join,
    make_Q,
    make_T,
    make_T2k,
    make_theta,
    parse_family,
)
from signedhoffman.graph import (
    GraphError,
    delete_vertices,
    induced_subgraph,
    is_balanced,
    is_connected,
    max_degree,
    switching_isomorphic,
)


def test_vertex_counts():
    assert make_T(2, 3, 4).n == 10
    assert make_Q(1, 2, 3).n == 9
    assert make_theta(8, 2, 0).n == 12
    assert make_B(4, 4, 0).n == 7
    assert make_B(4, 4, 3).n == 9
    assert make_c4_paths(2, 2, 2, 2).n == 12
    assert make_T2k(7).n == 14


def test_q_pendants_sit_at_a_and_a_plus_b():
    G = make_Q(2, 3, 1)
    assert sorted(G.neighbors(7)) == [2]
    assert sorted(G.neighbors(8)) == [5]
    assert max_degree(G) == 3


def test_theta_signature():
    assert not is_balanced(make_theta(3, 2, 1))
    assert is_balanced(make_theta(3, 2, 1, negative_path=None))
    G = make_theta(4, 2, 0)
    assert G.adj[0][1] != 0


@pytest.mark.parametrize("k", range(3, 11))
def test_t2k_squares_to_4i(k):
    A = make_T2k(k).matrix()
    assert (A @ A == 4 * np.eye(2 * k, dtype=int)).all()
    assert max_degree(make_T2k(k)) == 4


def test_t2k_rejects_small_k():
    with pytest.raises(GraphError):
        make_T2k(2)


@pytest.mark.parametrize("bad", [
    lambda: make_T(0, 1, 1), lambda: make_Q(1, 0, 1), lambda: make_theta(1, 2, 0),
    lambda: make_theta(1, 0, 0), lambda: make_B(4, 4, 1), lambda: make_cycle(2),
    lambda: make_cycle_with_pendants(4, False, [5]), lambda: make_pendant_join(make_path(2), 0, make_path(2), 0, 0),
])
def test_constructor_domains(bad):
    with pytest.raises(GraphError):
        bad()


def test_pendant_join_layout():
    G = make_pendant_join(make_path(3), 1, make_path(2), 0, 2)
    assert G.n == 7
    assert sorted(G.neighbors(5)) == [1, 6]
    assert sorted(G.neighbors(6)) == [3, 5]
    assert is_connected(G)


# -- descriptors -------------------------------------------------------------

@pytest.mark.parametrize("text", [
    "P:4", "Star:5", "T:2,3,4", "Q:1,2,3", "C:5:unbal", "C:6:bal", "Cp:8:unbal:1,5",
    "Theta:8,2,0", "B:4,4,3", "T2k:5", "C4:2,1,2,1", "join:P:4:1:T:2,1,1:3:3",
])
def test_family_spec_roundtrip(text):
    spec = parse_family(text)
    assert str(spec) == text
    assert parse_family(str(spec)).build() == spec.build()


@pytest.mark.parametrize("text", ["", "T:1,2", "C:4:maybe", "Nope:1", "T:a,b,c", "join:P:4:1", "P:3:extra"])
def test_family_spec_errors(text):
    with pytest.raises(GraphError):
        family(text)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_family_builds_are_deterministic(a, b, c):
    assert family(f"T:{a},{b},{c}") == make_T(a, b, c)
    assert FamilySpec("Q", (a, b, c)).build() == make_Q(a, b, c)


# -- derived gadget ----------------------------------------------------------

def _unbalanced_c4s(G):
    for quad in itertools.combinations(range(G.n), 4):
        sub = induced_subgraph(G, quad)
        if all(sub.degree(i) == 2 for i in range(4)) and not is_balanced(sub):
            yield quad


@pytest.mark.parametrize("s", [3, 4, 5])
def test_gadget_is_unique_up_to_switching(s):
    G, ports = derive_bridge_gadget(s)
    assert G.n == 2 * s - 2
    T = make_T2k(s + 1)
    quads = list(_unbalanced_c4s(T))
    assert quads
    for quad in quads:
        assert switching_isomorphic(delete_vertices(T, quad), G)
    assert G.degree(ports["a"]) == G.degree(ports["b"]) == 2
    assert not G.adj[ports["a"]][ports["b"]]


def test_smallest_gadget_is_an_unbalanced_c4_with_opposite_ports():
    G, ports = derive_bridge_gadget(3)
    assert switching_isomorphic(G, make_cycle(4, False))
    assert ports == {"a": 0, "b": 3}

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import signed_graphs
from signedhoffman.graph import (
    CanonicalizationLimit,
    GraphError,
    SignedGraph,
    balancing_switch,
    build,
    canonical_code,
    canonical_form,
    components,
    cycle_sign,
    decode_code,
    delete_vertices,
    find_induced_embedding,
    has_triangle,
    induced_subgraph,
    is_balanced,
    is_bipartite,
    is_connected,
    is_induced_sub_up_to_switching,
    parse_sg,
    read_sg,
    relabel,
    switch,
    switching_isomorphic,
    to_sg,
    write_sg,
)
from signedhoffman.families import make_cycle, make_path, make_T, make_theta


def brute_equivalent(G, H):
    """Permutation times switching, tried exhaustively."""
    if G.n != H.n:
        return False
    for perm in itertools.permutations(range(G.n)):
        P = relabel(H, perm)
        for mask in range(1 << G.n):
            if switch(P, [i for i in range(G.n) if mask >> i & 1]) == G:
                return True
    return False


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for signs in itertools.product((0, 1, -1), repeat=len(pairs)):
        yield build(n, [(u, v, s) for (u, v), s in zip(pairs, signs) if s])


# -- construction and validation ---------------------------------------------

def test_build_rejects_bad_input():
    with pytest.raises(GraphError):
        build(3, [(0, 0, 1)])
    with pytest.raises(GraphError):
        build(3, [(0, 1, 1), (1, 0, -1)])
    with pytest.raises(GraphError):
        build(3, [(0, 5, 1)])
    with pytest.raises(GraphError, match="sign"):
        build(3, [(0, 1, "*")])
    with pytest.raises(GraphError):
        SignedGraph(2, ((0, 2), (2, 0)))
    with pytest.raises(GraphError):
        SignedGraph(2, ((0, 1), (-1, 0)))


def test_sg_roundtrip_and_file(tmp_path):
    G = make_theta(3, 2, 0)
    text = to_sg(G)
    assert parse_sg(text) == G
    path = tmp_path / "g.sg"
    write_sg(G, path)
    assert read_sg(path) == G
    assert path.read_bytes().count(b"\r") == 0


def test_sg_comments_and_errors():
    assert parse_sg("# c4\n4 4\n0 1 +\n1 2 +\n# mid\n2 3 +\n0 3 -\n") == make_cycle(4, False)
    with pytest.raises(GraphError, match="bad sign token"):
        parse_sg("2 1\n0 1 x\n")
    with pytest.raises(GraphError, match="header"):
        parse_sg("2\n")
    with pytest.raises(GraphError, match="2 edges"):
        parse_sg("3 2\n0 1 +\n")


@given(signed_graphs(max_n=8))
def test_sg_roundtrip_property(G):
    assert parse_sg(to_sg(G)) == G


# -- structure ---------------------------------------------------------------

def test_balance_and_cycle_sign():
    C = make_cycle(5, False)
    assert not is_balanced(C)
    assert cycle_sign(C, range(5)) == -1
    assert balancing_switch(C) is None
    G = switch(make_cycle(6, True), [1, 3])
    assert is_balanced(G)
    S = balancing_switch(G)
    assert all(s == 1 for _, _, s in switch(G, S).edges())


@given(signed_graphs(min_n=3, max_n=7), st.data())
def test_switching_preserves_cycle_signs(G, data):
    S = data.draw(st.lists(st.integers(0, G.n - 1), unique=True))
    H = switch(G, S)
    assert is_balanced(H) == is_balanced(G)
    for tri in itertools.combinations(range(G.n), 3):
        if all(G.adj[a][b] for a, b in itertools.combinations(tri, 2)):
            assert cycle_sign(G, tri) == cycle_sign(H, tri)


def test_components_and_predicates():
    G = build(5, [(0, 1, 1), (2, 3, -1), (3, 4, 1), (2, 4, 1)])
    assert components(G) == [[0, 1], [2, 3, 4]]
    assert not is_connected(G)
    assert has_triangle(G)
    assert not is_bipartite(G)
    assert is_bipartite(make_cycle(6))
    assert delete_vertices(make_path(2), [0, 1]) is None
    assert induced_subgraph(make_path(4), [0, 1]) == make_path(2)


# -- canonical codes ---------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_canonical_code_exact_against_brute_force(n):
    graphs = [g for g in all_graphs(n) if is_connected(g)]
    classes = {}
    for g in graphs:
        classes.setdefault(canonical_code(g), []).append(g)
    for members in classes.values():
        assert all(brute_equivalent(members[0], g) for g in members[1:])
    reps = [m[0] for m in classes.values()]
    assert not any(brute_equivalent(a, b) for a, b in itertools.combinations(reps, 2))
    # frozen class counts of connected signed graphs
    assert len(classes) == {1: 1, 2: 1, 3: 3, 4: 12}[n]


def test_canonical_code_random_pairs_n5():
    rng = random.Random(7)
    graphs = [g for g in all_graphs(5) if is_connected(g)]
    for _ in range(150):
        a, b = rng.sample(graphs, 2)
        assert (canonical_code(a) == canonical_code(b)) == brute_equivalent(a, b)


@settings(max_examples=150)
@given(signed_graphs(max_n=9), st.data())
def test_canonical_code_invariant(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    S = data.draw(st.lists(st.integers(0, G.n - 1), unique=True))
    assert canonical_code(switch(relabel(G, perm), S)) == canonical_code(G)


@given(signed_graphs(max_n=8))
def test_canonical_form_is_a_representative(G):
    code = canonical_code(G)
    F = canonical_form(G)
    assert canonical_code(F) == code
    assert decode_code(code) == F
    assert switching_isomorphic(F, G)


def test_disconnected_code_ignores_component_order():
    a = build(5, [(0, 1, 1), (2, 3, 1), (3, 4, -1)])
    b = build(5, [(0, 1, 1), (1, 2, -1), (3, 4, 1)])
    assert canonical_code(a) == canonical_code(b)


def test_canonical_limit():
    with pytest.raises(CanonicalizationLimit):
        canonical_code(make_path(15))


# -- embeddings --------------------------------------------------------------

def test_embedding_respects_switching():
    c4 = make_cycle(4, False)
    theta = make_theta(2, 2, 0)
    emb = find_induced_embedding(c4, theta)
    assert emb is not None
    assert switching_isomorphic(induced_subgraph(theta, emb), c4)
    # an unbalanced C4 is not induced in any tree
    assert not is_induced_sub_up_to_switching(c4, make_T(2, 3, 4))
    # and the balanced one is not in a graph whose only C4 is unbalanced
    assert not is_induced_sub_up_to_switching(make_cycle(4, True), make_cycle(4, False))


@settings(max_examples=60)
@given(signed_graphs(min_n=2, max_n=7, connected=True), st.data())
def test_every_induced_subgraph_embeds(G, data):
    U = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, unique=True))
    H = induced_subgraph(G, U)
    S = data.draw(st.lists(st.integers(0, H.n - 1), unique=True))
    emb = find_induced_embedding(switch(H, S), G)
    assert emb is not None
    # the mapped vertices reproduce H up to switching, vertex for vertex
    image = SignedGraph(H.n, tuple(tuple(G.adj[emb[i]][emb[j]] for j in range(H.n)) for i in range(H.n)))
    assert switching_isomorphic(image, H)

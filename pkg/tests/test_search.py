import json

import pytest
from hypothesis import given, settings

from conftest import signed_graphs
from signedhoffman.families import make_B, make_c4_paths, make_cycle, make_path, make_T, make_T2k, make_theta
from signedhoffman.graph import (
    GraphError,
    SignedGraph,
    build,
    canonical_code,
    delete_vertices,
    has_triangle,
    is_connected,
    max_degree,
    parse_sg,
)
from signedhoffman.search import (
    FrontierCapError,
    check_node,
    classify_all,
    extend_once,
    extension_vectors,
    frontier_cap,
    is_maximal,
    search,
)
from signedhoffman.spectra import Verdict, check_interlacing, rho_verdict

K1 = SignedGraph(1, ((0,),))


def test_extension_vectors_respect_degree_and_normalization():
    G = make_T2k(3)
    assert list(extension_vectors(G)) == []
    vecs = list(extension_vectors(make_path(3)))
    assert all(next(x for x in r if x) == 1 for r in vecs)
    # 3 supports of size 1, 3 of size 2 (2 signs), 1 of size 3 (4 signs)
    assert len(vecs) == 3 + 6 + 4


def test_extend_once_results():
    kids = extend_once(make_path(3))
    codes = [canonical_code(k) for k in kids]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)
    for k in kids:
        assert k.n == 4 and is_connected(k) and rho_verdict(k).at_most_lambda_star
    with pytest.raises(GraphError):
        extend_once(build(6, [(0, i, 1) for i in range(1, 6)]))


def test_extend_once_band_filter():
    kids = extend_once(make_T(1, 2, 5), require_above_2=True)
    assert kids and all(rho_verdict(k).verdict.above_2 for k in kids)


@pytest.mark.parametrize("G, expected", [
    (make_theta(8, 2, 0), True),
    (make_c4_paths(2, 2, 2, 2), True),
    (make_T2k(4), True),
    (make_B(4, 4, 0), False),
    (make_path(3), False),
])
def test_is_maximal(G, expected):
    assert is_maximal(G) is expected


def test_is_maximal_precondition():
    with pytest.raises(GraphError):
        is_maximal(make_T(2, 3, 4))


def test_search_theta_620():
    report = search(make_theta(6, 2, 0), 3)
    assert report.frontier_sizes == [1, 2, 2, 0]
    maxes = report.maximal_classes()
    assert len(maxes) == 2 and all(c.graph.n == 12 for c in maxes)
    doc = json.loads(report.dumps())
    assert doc["depth"] == 3
    assert [lvl["size"] for lvl in doc["levels"]] == [1, 2, 2, 0]
    for lvl in doc["levels"]:
        for c in lvl["classes"]:
            assert canonical_code(parse_sg(c["sg"])).hex() == c["code"]
            assert c["maximal"] in (True, False)


def test_search_preconditions_and_cap(monkeypatch):
    with pytest.raises(GraphError):
        search(make_T(2, 3, 4), 1)
    with pytest.raises(ValueError):
        search(make_path(2), 0)
    with pytest.raises(FrontierCapError) as info:
        search(make_path(2), 3, cap=2)
    assert info.value.report.levels
    monkeypatch.setenv("SG_FRONTIER_CAP", "5")
    assert frontier_cap() == 5


def test_band_only_filters_reporting():
    full = search(make_cycle(4, False), 2)
    band = search(make_cycle(4, False), 2, band_above2=True)
    assert full.frontier_sizes == band.frontier_sizes
    assert all(c.verdict.above_2 for c in band.survivors())


def test_every_search_node_passes_structural_checks():
    report = search(make_cycle(4, False), 3)
    for level in report.levels:
        for rec in level:
            assert check_node(rec.graph, rec.verdict) == []
            assert max_degree(rec.graph) <= 4
            if rec.verdict.above_2:
                assert not has_triangle(rec.graph)


def test_pruning_soundness_by_interlacing():
    report = search(make_cycle(4, False), 3)
    for rec in report.levels[-1]:
        G = rec.graph
        for v in range(4, G.n):
            H = delete_vertices(G, [v])
            assert rho_verdict(H).at_most_lambda_star
            assert check_interlacing(G, [u for u in range(G.n) if u != v])


# -- census ------------------------------------------------------------------

def test_census_counts():
    assert [len(classify_all(n)) for n in range(1, 6)] == [1, 1, 3, 12, 79]
    with pytest.raises(ValueError):
        classify_all(9)


def test_census_contains_unbalanced_c4():
    codes = {e.code: e for e in classify_all(4)}
    c4 = codes[canonical_code(make_cycle(4, False))]
    assert c4.verdict.verdict == Verdict.Below2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pruned_search_is_complete(n):
    census = {e.code for e in classify_all(n) if e.verdict.at_most_lambda_star}
    report = search(K1, n - 1, mark_maximal=False)
    assert {c.code for c in report.levels[n - 1]} == census


def test_census6_structure(census6):
    assert len(census6) == 523
    for entry in census6:
        assert max_degree(entry.graph) <= 4
        if entry.verdict.verdict == Verdict.Between2AndLambdaStar:
            assert not has_triangle(entry.graph)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(min_n=2, max_n=6, connected=True))
def test_census_is_exhaustive(G):
    if max_degree(G) > 4:
        return
    codes = {e.code for e in classify_all(G.n)} if G.n < 6 else None
    if codes is not None:
        assert canonical_code(G) in codes

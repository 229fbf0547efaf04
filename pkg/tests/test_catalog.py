import json

import pytest

from signedhoffman.catalog import (
    Catalog,
    CatalogEntry,
    CatalogError,
    exit_status,
    load_catalog,
    loads_catalog,
    save_catalog,
    starter_catalog_path,
    verify_all,
    verify_entry,
)
from signedhoffman.families import make_T, make_theta
from signedhoffman.starter import build_starter_catalog


@pytest.fixture(scope="module")
def starter():
    return load_catalog(starter_catalog_path())


@pytest.fixture(scope="module")
def starter_results(starter):
    return verify_all(starter)


def test_empty_catalog_roundtrip(tmp_path):
    path = tmp_path / "c.json"
    save_catalog(Catalog(), path)
    text = path.read_text()
    assert load_catalog(path).dumps() == text
    assert json.loads(text) == {"entries": [], "version": 1}


def test_starter_roundtrip_is_bit_exact(tmp_path, starter):
    path = tmp_path / "c.json"
    save_catalog(starter, path)
    assert path.read_text() == starter_catalog_path().read_text()


def test_shipped_catalog_matches_generator(starter):
    assert build_starter_catalog().dumps() == starter.dumps()


def _doc(edges, **extra):
    entry = {"name": "g", "source": "text-constructed", "n": 2, "edges": edges, "claims": {}}
    entry.update(extra)
    return json.dumps({"version": 1, "entries": [entry]})


@pytest.mark.parametrize("text, message", [
    (_doc([[0, 1, "*"]]), "bad sign token '\\*'"),
    (_doc([[0, 1]]), r"edges\[0\]"),
    (_doc([[0, 5, "+"]]), "out of range"),
    (_doc(None), "must be null when edges is null"),
    (_doc([], claims={"verdict": "Small"}), "unknown verdict"),
    (_doc([], colour="red"), "unknown field"),
    (_doc([], composite="table2:nope"), "unknown table row"),
    ('{"version": 1, "entries": [}', "line 1"),
    ('{"version": 2, "entries": []}', "version"),
])
def test_schema_diagnostics(text, message):
    with pytest.raises(CatalogError, match=message):
        loads_catalog(text)


def test_duplicate_names_rejected():
    entry = {"name": "g", "source": "figure-data", "n": None, "edges": None, "claims": {}}
    with pytest.raises(CatalogError, match="duplicate"):
        loads_catalog(json.dumps({"version": 1, "entries": [entry, entry]}))


def test_theta_entry_confirms():
    e = CatalogEntry("Theta_8_2_0", "text-constructed", make_theta(8, 2, 0),
                     {"verdict": "Between2AndLambdaStar", "maximal": True}, family="Theta:8,2,0")
    results = verify_entry(e)
    assert [r.status for r in results] == ["confirmed"] * 3


def test_adversarial_entry_is_refuted_with_witness():
    e = CatalogEntry("T_2_3_4", "text-constructed", make_T(2, 3, 4),
                     {"verdict": "AtMostLambdaStar", "maximal": True}, family="T:2,3,4")
    results = {r.claim: r for r in verify_entry(e)}
    assert results["T_2_3_4:family"].status == "confirmed"
    for key in ("T_2_3_4:verdict", "T_2_3_4:maximal"):
        assert results[key].status == "refuted"
        assert "AboveLambdaStar" in results[key].witness and "x^10" in results[key].witness
    assert exit_status(list(results.values())) == 1


def test_family_mismatch_is_refuted():
    e = CatalogEntry("wrong", "text-constructed", make_T(2, 2, 2), {}, family="T:2,2,3")
    [r] = verify_entry(e)
    assert r.status == "refuted" and r.witness.startswith("rebuilt code")


def test_verify_all_is_ordered_and_deterministic(starter, starter_results):
    names = [r.claim.split(":")[0] for r in starter_results]
    assert names == sorted(names, key=lambda n: n)
    assert verify_all(starter) == starter_results


def test_figure_slots_are_skipped_not_passed(starter, starter_results):
    slots = {e.name for e in starter.entries if e.graph is None and e.composite is None}
    assert {"S14", "S16", "G4^12", "F1", "C4dot^1"} <= slots
    for r in starter_results:
        if r.claim.split(":")[0] in slots:
            assert r.status == "skipped-missing-data"


def test_starter_statuses(starter_results):
    by_status = {}
    for r in starter_results:
        by_status.setdefault(r.status, []).append(r.claim)
    # the only refutation is the printed 0.05 of the P4/P4 composite
    assert by_status["refuted"] == ["Table2_P4_P4:approx"]
    table2 = [r for r in starter_results if r.claim.startswith("Table2_")]
    assert len(table2) == 10
    assert sum(r.status == "skipped-missing-data" for r in table2) == 9


def test_text_constructed_entries_rebuild(starter):
    for e in starter.entries:
        if e.source == "text-constructed" and e.graph is not None:
            [r] = [r for r in verify_entry(e, starter) if r.claim.endswith(":family")]
            assert r.status == "confirmed"

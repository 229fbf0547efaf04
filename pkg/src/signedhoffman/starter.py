"""Regenerates the shipped starter catalog ``data/catalog.json``.

Everything here is either built from a family descriptor, derived by a
deterministic computation, or an empty slot for a graph known only from a
drawing.  Run ``python3 -m signedhoffman.starter`` to rewrite the file.
"""

from __future__ import annotations

from .catalog import Catalog, CatalogEntry, save_catalog, starter_catalog_path
from .families import derive_bridge_gadget, parse_family
from .search import search
from .tables import TABLE2

# members of the exceptional set in the Q-family rule
Q_EXCEPTIONAL = ((1, 1, 2), (2, 4, 2), (2, 5, 3), (3, 7, 3), (3, 8, 4))

_DRAWN = "edge data only available as a drawing; slot left empty"


def _family(name: str, spec: str, **claims) -> CatalogEntry:
    return CatalogEntry(name, "text-constructed", parse_family(spec).build(), claims, family=spec)


def _slot(name: str, **claims) -> CatalogEntry:
    return CatalogEntry(name, "figure-data", None, claims, note=_DRAWN)


def text_entries() -> list[CatalogEntry]:
    out = [
        _family("Theta_8_2_0", "Theta:8,2,0", verdict="Between2AndLambdaStar", maximal=True),
        _family("Theta_6_2_0", "Theta:6,2,0", verdict="Between2AndLambdaStar", maximal=False),
        _family("C4[2,2,2,2]", "C4:2,2,2,2", verdict="Between2AndLambdaStar", maximal=True),
        _family("B0_4_4", "B:4,4,0", verdict="Exactly2", maximal=False),
    ]
    out += [_family(f"Br_4_4_r{r}", f"B:4,4,{r}", verdict="Exactly2") for r in range(2, 7)]
    out += [_family(f"T2k_{k}", f"T2k:{k}", verdict="Exactly2", maximal=True) for k in range(3, 8)]
    for k in (4, 6, 8, 10):
        out.append(_family(f"Ck^(1,{k // 2 + 1})_{k}", f"Cp:{k}:unbal:1,{k // 2 + 1}",
                           verdict="AtMostLambdaStar",
                           tables=[{"row": "table1:Ck_1_half", "params": {"k": k}, "sign": 1}]))
    for n1, n3 in ((1, 1), (2, 2), (3, 3), (2, 5)):
        out.append(_family(f"C4[{n1},1,{n3},1]", f"C4:{n1},1,{n3},1", verdict="AtMostLambdaStar",
                           tables=[{"row": "table1:C4_n1_1_n3_1",
                                    "params": {"n1": n1, "n3": n3}, "sign": 1}]))
    out += [_family(f"Q_{a}_{b}_{c}", f"Q:{a},{b},{c}", verdict="AtMostLambdaStar")
            for a, b, c in Q_EXCEPTIONAL]
    return out


def derived_entries() -> list[CatalogEntry]:
    out = []
    for s in (3, 4):
        G, ports = derive_bridge_gadget(s)
        out.append(CatalogEntry(f"T'''{2 * s}", "search-derived", G, {"verdict": "AtMostLambdaStar"},
                                labels=ports,
                                note=f"T2k({s + 1}) minus an induced unbalanced 4-cycle; ports a, b"))
    report = search(parse_family("Theta:6,2,0").build(), 3)
    for i, rec in enumerate(report.maximal_classes(), 1):
        out.append(CatalogEntry(f"Theta_6_2_0_max{i}", "search-derived", rec.graph,
                                {"verdict": rec.verdict.name, "maximal": True},
                                note="maximal extension class found by search from Theta_6_2_0"))
    return out


def slot_entries() -> list[CatalogEntry]:
    names = ["S14", "S16", "G10", "G4^12", "G2^9", "G5^10"]
    names += [f"H{i}" for i in range(1, 9)]
    names += [f"G6^{i}" for i in range(1, 8)]
    names += [f"G8^{i}" for i in range(0, 4)]
    out = [_slot(n, verdict="AtMostLambdaStar") for n in names]
    out += [_slot(f"F{i}", verdict="AboveLambdaStar") for i in range(1, 12)]
    out.append(_slot("C4dot^1", verdict="AboveLambdaStar"))
    return out


def composite_entries() -> list[CatalogEntry]:
    return [CatalogEntry(f"Table2_{key.split(':')[1]}", "text-constructed", None,
                         {"approx": {"value": str(row.printed), "tol": "0.005"}},
                         composite=key)
            for key, row in TABLE2.items()]


def build_starter_catalog() -> Catalog:
    entries = text_entries() + derived_entries() + slot_entries() + composite_entries()
    return Catalog(sorted(entries, key=lambda e: e.name))


if __name__ == "__main__":
    save_catalog(build_starter_catalog(), starter_catalog_path())
    print(starter_catalog_path())

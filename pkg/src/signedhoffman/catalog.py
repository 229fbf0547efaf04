"""JSON catalog of named signed graphs with their claims, and the verifier.

Schema::

    {"version": 1,
     "entries": [{"name", "source", "n", "edges": [[u, v, "+"|"-"], ...],
                  "claims": {...}, "family"?, "labels"?, "composite"?, "note"?}]}

``source`` is ``text-constructed``, ``figure-data`` or ``search-derived``.
A ``figure-data`` entry with ``edges: null`` is an empty slot; every claim
on it is reported as skipped.  Claims understood by :func:`verify_all`:

``verdict``
    a verdict name or ``AtMostLambdaStar``
``maximal``
    expected result of :func:`is_maximal`
``tables``
    list of ``{"row", "params", "sign"}``
``approx``
    ``{"value", "tol"}`` for entries with a ``composite`` row
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact import DomainError
from .families import derive_bridge_gadget, parse_family
from .graph import GraphError, SignedGraph, build, canonical_code, switching_isomorphic
from .search import extend_once
from .spectra import Verdict, rho_verdict
from .tables import MissingData, get_row, table_expr_eval

VERSION = 1
SOURCES = ("text-constructed", "figure-data", "search-derived")
_SIGN = {"+": 1, "-": -1}
_TOKEN = {1: "+", -1: "-"}
_KEYS = {"name", "source", "n", "edges", "claims", "family", "labels", "composite", "note"}
_CLAIMS = {"verdict", "maximal", "tables", "approx"}


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    source: str
    graph: SignedGraph | None
    claims: dict[str, Any] = field(default_factory=dict)
    family: str | None = None
    labels: dict[str, int] | None = None
    composite: str | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "source": self.source,
            "n": None if self.graph is None else self.graph.n,
            "edges": None if self.graph is None else
            [[u, v, _TOKEN[s]] for u, v, s in self.graph.edges()],
            "claims": self.claims,
        }
        for key in ("family", "labels", "composite", "note"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        return out


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    version: int = VERSION

    def get(self, name: str) -> CatalogEntry | None:
        for e in self.entries:
            if e.name == name:
                return e
        return None

    def dumps(self) -> str:
        doc = {"version": self.version, "entries": [e.to_json() for e in self.entries]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def provider(self, name: str):
        """Part lookup for composite rows: ``(graph, labels)`` or None."""
        e = self.get(name)
        if e is None or e.graph is None:
            return None
        return e.graph, dict(e.labels or {})


@dataclass(frozen=True)
class VerificationResult:
    claim: str
    status: str
    witness: str = ""

    def __str__(self):
        return f"{self.claim} {self.status} {self.witness}".rstrip()


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _fail(where: str, msg: str):
    raise CatalogError(f"{where}: {msg}")


def _entry_from_json(raw: Any, idx: int) -> CatalogEntry:
    where = f"entries[{idx}]"
    if not isinstance(raw, dict):
        _fail(where, "entry must be an object")
    unknown = set(raw) - _KEYS
    if unknown:
        _fail(where, f"unknown field(s) {sorted(unknown)}")
    for key in ("name", "source", "n", "edges", "claims"):
        if key not in raw:
            _fail(where, f"missing field {key!r}")
    name = raw["name"]
    if not isinstance(name, str) or not name:
        _fail(f"{where}.name", "must be a non-empty string")
    where = f"entries[{idx}] ({name})"
    if raw["source"] not in SOURCES:
        _fail(f"{where}.source", f"must be one of {list(SOURCES)}, got {raw['source']!r}")
    claims = raw["claims"]
    if not isinstance(claims, dict):
        _fail(f"{where}.claims", "must be an object")
    if set(claims) - _CLAIMS:
        _fail(f"{where}.claims", f"unknown claim(s) {sorted(set(claims) - _CLAIMS)}")
    if "verdict" in claims and claims["verdict"] != "AtMostLambdaStar" \
            and claims["verdict"] not in Verdict.__members__:
        _fail(f"{where}.claims.verdict", f"unknown verdict {claims['verdict']!r}")
    n, edges = raw["n"], raw["edges"]
    graph = None
    if edges is None:
        if n is not None:
            _fail(f"{where}.n", "must be null when edges is null")
        if raw["source"] != "figure-data" and "composite" not in raw:
            _fail(f"{where}.edges", "only figure-data slots and composites may omit edges")
    else:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            _fail(f"{where}.n", f"must be a positive integer, got {n!r}")
        if not isinstance(edges, list):
            _fail(f"{where}.edges", "must be a list")
        triples = []
        for j, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 3):
                _fail(f"{where}.edges[{j}]", f"expected [u, v, sign], got {e!r}")
            u, v, s = e
            if s not in _SIGN:
                _fail(f"{where}.edges[{j}]", f"bad sign token {s!r}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
                _fail(f"{where}.edges[{j}]", f"vertex indices must be integers, got {e!r}")
            triples.append((u, v, _SIGN[s]))
        try:
            graph = build(n, triples)
        except GraphError as exc:
            _fail(f"{where}.edges", str(exc))
    labels = raw.get("labels")
    if labels is not None:
        if not isinstance(labels, dict) or not all(
                isinstance(v, int) and graph is not None and 0 <= v < graph.n for v in labels.values()):
            _fail(f"{where}.labels", "must map labels to vertex indices of the entry")
    composite = raw.get("composite")
    if composite is not None:
        try:
            get_row(composite)
        except DomainError as exc:
            _fail(f"{where}.composite", str(exc))
    return CatalogEntry(name, raw["source"], graph, claims, raw.get("family"), labels,
                        composite, raw.get("note"))


def loads_catalog(text: str) -> Catalog:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or set(doc) != {"version", "entries"}:
        raise CatalogError("top level must be an object with exactly 'version' and 'entries'")
    if doc["version"] != VERSION:
        raise CatalogError(f"version: unsupported {doc['version']!r}")
    if not isinstance(doc["entries"], list):
        raise CatalogError("entries: must be a list")
    entries = [_entry_from_json(raw, i) for i, raw in enumerate(doc["entries"])]
    seen = set()
    for e in entries:
        if e.name in seen:
            raise CatalogError(f"duplicate entry name {e.name!r}")
        seen.add(e.name)
    return Catalog(entries, doc["version"])


def load_catalog(path) -> Catalog:
    return loads_catalog(Path(path).read_text())


def save_catalog(catalog: Catalog, path) -> None:
    Path(path).write_text(catalog.dumps())


def starter_catalog_path() -> Path:
    return Path(__file__).with_name("data") / "catalog.json"


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _verdict_result(e: CatalogEntry, cid: str) -> VerificationResult:
    rv = rho_verdict(e.graph)
    want = e.claims["verdict"]
    ok = rv.at_most_lambda_star if want == "AtMostLambdaStar" else rv.verdict.name == want
    return VerificationResult(cid, "confirmed" if ok else "refuted", f"{rv.verdict.name} {rv.poly}")


def _maximal_result(e: CatalogEntry, cid: str) -> VerificationResult:
    rv = rho_verdict(e.graph)
    if not rv.at_most_lambda_star:
        return VerificationResult(cid, "refuted", f"{rv.verdict.name} {rv.poly}")
    kids = extend_once(e.graph)
    ok = (not kids) == bool(e.claims["maximal"])
    witness = f"extension {canonical_code(kids[0]).hex()}" if kids else "no extension"
    return VerificationResult(cid, "confirmed" if ok else "refuted", witness)


def _table_results(e: CatalogEntry) -> list[VerificationResult]:
    out = []
    for ref in e.claims["tables"]:
        params = ref.get("params", {})
        tag = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
        cid = f"{e.name}:{ref['row']}[{tag}]"
        try:
            sign, box = table_expr_eval(ref["row"], params)
        except DomainError as exc:
            out.append(VerificationResult(cid, "refuted", f"domain: {exc}"))
            continue
        ok = sign == ref["sign"]
        out.append(VerificationResult(cid, "confirmed" if ok else "refuted",
                                      f"sign={sign} [{float(box.lo):.6g}, {float(box.hi):.6g}]"))
    return out


def _approx_result(e: CatalogEntry, cid: str, catalog: Catalog) -> VerificationResult:
    want = Fraction(e.claims["approx"]["value"])
    tol = Fraction(e.claims["approx"]["tol"])
    try:
        sign, box = table_expr_eval(e.composite, provider=catalog.provider)
    except MissingData as exc:
        return VerificationResult(cid, "skipped-missing-data", str(exc))
    ok = sign > 0 and want - tol <= box.lo and box.hi <= want + tol
    return VerificationResult(cid, "confirmed" if ok else "refuted",
                              f"value in [{float(box.lo):.6g}, {float(box.hi):.6g}]")


def _family_result(e: CatalogEntry, cid: str) -> VerificationResult:
    try:
        rebuilt = parse_family(e.family).build()
    except GraphError as exc:
        return VerificationResult(cid, "refuted", f"spec error: {exc}")
    ok = rebuilt == e.graph
    return VerificationResult(cid, "confirmed" if ok else "refuted",
                              "bit-identical" if ok else f"rebuilt code {canonical_code(rebuilt).hex()}")


def _gadget_result(e: CatalogEntry, cid: str) -> VerificationResult:
    s = (e.graph.n + 2) // 2
    G, ports = derive_bridge_gadget(s)
    ok = switching_isomorphic(G, e.graph) and e.labels is not None and set(ports) <= set(e.labels)
    return VerificationResult(cid, "confirmed" if ok else "refuted", f"derived from T2k({s + 1})")


def verify_entry(e: CatalogEntry, catalog: Catalog | None = None) -> list[VerificationResult]:
    catalog = catalog or Catalog([e])
    claims = sorted(e.claims)
    if e.graph is None and e.composite is None:
        if not claims:
            return [VerificationResult(f"{e.name}:data", "skipped-missing-data", e.note or "")]
        return [VerificationResult(f"{e.name}:{c}", "skipped-missing-data", "no graph data")
                for c in claims]
    out = []
    if e.family is not None and e.graph is not None:
        out.append(_family_result(e, f"{e.name}:family"))
    if e.name.startswith("T'''"):
        out.append(_gadget_result(e, f"{e.name}:derivation"))
    for c in claims:
        cid = f"{e.name}:{c}"
        if c == "approx":
            out.append(_approx_result(e, cid, catalog))
        elif e.graph is None:
            out.append(VerificationResult(cid, "skipped-missing-data", "composite has no stored graph"))
        elif c == "verdict":
            out.append(_verdict_result(e, cid))
        elif c == "maximal":
            out.append(_maximal_result(e, cid))
        elif c == "tables":
            out.extend(_table_results(e))
    return out


def verify_all(catalog: Catalog) -> list[VerificationResult]:
    """Re-check every claim; results ordered by entry name, then claim."""
    out = []
    for e in sorted(catalog.entries, key=lambda e: e.name):
        out.extend(verify_entry(e, catalog))
    return out


def exit_status(results: list[VerificationResult]) -> int:
    return 1 if any(r.status == "refuted" for r in results) else 0


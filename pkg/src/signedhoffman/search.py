"""One-vertex extension search under the degree and spectral-radius bounds."""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graph import (
    GraphError,
    SignedGraph,
    canonical_code,
    has_triangle,
    is_connected,
    max_degree,
    to_sg,
)
from .spectra import RhoVerdict, Verdict, rho_verdict

MAX_DEGREE = 4
DEFAULT_CAP = 10 ** 6
LAMBDA_STAR = math.sqrt(2 + math.sqrt(5))
# the float check only rejects; anything near the boundary goes to the exact test
_PREFILTER_SLACK = 1e-7


class FrontierCapError(RuntimeError):
    def __init__(self, message: str, report: "SearchReport"):
        super().__init__(message)
        self.report = report


def frontier_cap() -> int:
    env = os.environ.get("SG_FRONTIER_CAP")
    return int(env) if env else DEFAULT_CAP


def _bordered(G: SignedGraph, r: tuple[int, ...]) -> SignedGraph:
    n = G.n
    rows = [G.adj[i] + (r[i],) for i in range(n)]
    rows.append(tuple(r) + (0,))
    return SignedGraph(n + 1, tuple(rows))


def extension_vectors(G: SignedGraph, max_new_degree: int = MAX_DEGREE):
    """Vectors ``r`` with 1..4 nonzeros on vertices of degree < 4.

    The first nonzero entry is fixed to +1: ``r`` and ``-r`` differ by switching
    the new vertex.
    """
    open_vertices = [v for v in range(G.n) if G.degree(v) < MAX_DEGREE]
    for size in range(1, min(max_new_degree, len(open_vertices)) + 1):
        for support in itertools.combinations(open_vertices, size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                r = [0] * G.n
                r[support[0]] = 1
                for v, s in zip(support[1:], signs):
                    r[v] = s
                yield tuple(r)


def _float_rho(G: SignedGraph) -> float:
    ev = np.linalg.eigvalsh(np.array(G.adj, dtype=float))
    return max(-ev[0], ev[-1])


def extend_once(G: SignedGraph, require_above_2: bool = False, *,
                cache: dict | None = None) -> list[SignedGraph]:
    """Switching classes of connected one-vertex extensions with ``rho <= l``.

    ``cache`` maps canonical codes to verdicts and may be shared between
    calls to avoid repeating exact tests.  Results are sorted by code.
    """
    if max_degree(G) > MAX_DEGREE:
        raise GraphError(f"extension needs max degree <= {MAX_DEGREE}, got {max_degree(G)}")
    cache = {} if cache is None else cache
    found: dict[bytes, SignedGraph] = {}
    for r in extension_vectors(G):
        H = _bordered(G, r)
        if _float_rho(H) > LAMBDA_STAR + _PREFILTER_SLACK:
            continue
        code = canonical_code(H)
        if code in found:
            continue
        v = cache.get(code)
        if v is None:
            v = cache[code] = rho_verdict(H).verdict
        if not v.at_most_lambda_star or (require_above_2 and not v.above_2):
            continue
        found[code] = H
    return [found[c] for c in sorted(found)]


def is_maximal(G: SignedGraph) -> bool:
    """No connected one-vertex extension keeps ``rho <= l``."""
    if not rho_verdict(G).at_most_lambda_star:
        raise GraphError("maximality is only defined for graphs with rho <= l")
    return not extend_once(G)


@dataclass
class ClassRecord:
    code: bytes
    graph: SignedGraph
    verdict: Verdict
    maximal: bool | None = None

    def to_json(self) -> dict:
        return {"code": self.code.hex(), "sg": to_sg(self.graph), "verdict": self.verdict.name,
                "maximal": self.maximal}


@dataclass
class SearchReport:
    seed: SignedGraph
    depth: int = 0
    levels: list[list[ClassRecord]] = field(default_factory=list)
    band_above2: bool = False
    notes: tuple[str, ...] = ("extension vectors with no nonzero entry are excluded",)

    @property
    def frontier_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def reported(self, level: list[ClassRecord]) -> list[ClassRecord]:
        if not self.band_above2:
            return level
        return [c for c in level if c.verdict.above_2]

    def survivors(self) -> list[ClassRecord]:
        return [c for level in self.levels for c in self.reported(level)]

    def maximal_classes(self) -> list[ClassRecord]:
        return [c for level in self.levels for c in level if c.maximal]

    def to_json(self) -> dict:
        return {
            "seed": to_sg(self.seed),
            "seed_code": canonical_code(self.seed).hex(),
            "depth": self.depth,
            "band": "above2" if self.band_above2 else "all",
            "notes": list(self.notes),
            "levels": [{"size": len(level), "classes": [c.to_json() for c in self.reported(level)]}
                       for level in self.levels],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def search(G: SignedGraph, k: int, band_above2: bool = False, cap: int | None = None,
           mark_maximal: bool = True) -> SearchReport:
    """Breadth-first extension of ``G`` for ``k`` levels with class dedup per level.

    Level 0 holds the seed.  With ``mark_maximal`` the last level is extended
    once more (and discarded) so that every class carries a maximal flag.
    """
    if k < 1:
        raise ValueError("depth must be >= 1")
    if not is_connected(G):
        raise GraphError("the seed must be connected")
    verdict = rho_verdict(G).verdict
    if not verdict.at_most_lambda_star:
        raise GraphError(f"seed has {verdict.name}; the search needs rho <= l")
    cap = frontier_cap() if cap is None else cap
    report = SearchReport(G, 0, [[ClassRecord(canonical_code(G), G, verdict)]], band_above2)
    cache: dict[bytes, Verdict] = {}
    for depth in range(1, k + (1 if mark_maximal else 0) + 1):
        nxt: dict[bytes, SignedGraph] = {}
        for rec in report.levels[-1]:
            kids = extend_once(rec.graph, cache=cache)
            rec.maximal = not kids
            for H in kids:
                nxt[canonical_code(H)] = H
            if len(nxt) > cap:
                raise FrontierCapError(f"frontier at depth {depth} exceeds cap {cap}", report)
        if depth > k:
            break
        level = [ClassRecord(c, nxt[c], cache[c]) for c in sorted(nxt)]
        report.levels.append(level)
        report.depth = depth
    if not mark_maximal:
        for level in report.levels:
            for rec in level:
                rec.maximal = None
    return report


class CensusEntry(NamedTuple):
    code: bytes
    verdict: RhoVerdict
    graph: SignedGraph


CLASSIFY_LIMIT = 8


def classify_all(n: int) -> list[CensusEntry]:
    """Every switching class of connected signed graphs on ``n`` vertices with
    max degree <= 4, with its verdict.

    Grown one vertex at a time from K_1 with no spectral pruning.  A connected
    graph always has a vertex whose removal leaves it connected, so the
    extension closure reaches every class.
    """
    if not 1 <= n <= CLASSIFY_LIMIT:
        raise ValueError(f"classify_all is limited to 1 <= n <= {CLASSIFY_LIMIT}")
    level = {canonical_code(SignedGraph(1, ((0,),))): SignedGraph(1, ((0,),))}
    for _ in range(n - 1):
        nxt: dict[bytes, SignedGraph] = {}
        for G in level.values():
            for r in extension_vectors(G):
                H = _bordered(G, r)
                code = canonical_code(H)
                if code not in nxt:
                    nxt[code] = H
        level = nxt
    return [CensusEntry(c, rho_verdict(level[c]), level[c]) for c in sorted(level)]


def check_node(G: SignedGraph, verdict: Verdict) -> list[str]:
    """Structural facts every survivor must satisfy; returns the violated ones."""
    problems = []
    if max_degree(G) > MAX_DEGREE:
        problems.append("max degree above 4")
    if verdict.above_2 and verdict.at_most_lambda_star and has_triangle(G):
        problems.append("triangle in the band above 2")
    return problems

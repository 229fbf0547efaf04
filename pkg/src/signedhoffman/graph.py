"""Signed graph data model.

A signed graph is stored as an immutable tuple-of-tuples adjacency matrix with
entries in {-1, 0, +1} and a zero diagonal.  Everything here is a pure
function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

CANON_LIMIT = 14


class GraphError(ValueError):
    """Raised for malformed graph input."""


class CanonicalizationLimit(GraphError):
    pass


@dataclass(frozen=True)
class SignedGraph:
    n: int
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a signed graph needs at least one vertex")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise GraphError(f"adjacency must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.adj[i][i] != 0:
                raise GraphError(f"loop at vertex {i}")
            for j in range(i + 1, self.n):
                a = self.adj[i][j]
                if a not in (-1, 0, 1):
                    raise GraphError(f"entry ({i},{j}) = {a} is not in {{-1,0,1}}")
                if a != self.adj[j][i]:
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    @classmethod
    def from_matrix(cls, matrix) -> "SignedGraph":
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        return cls(len(rows), rows)

    def matrix(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in range(self.n) if row[u]]

    def degree(self, v: int) -> int:
        return sum(1 for a in self.adj[v] if a)

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ``(u, v, sign)`` with ``u < v``, in row-major order."""
        return [(i, j, self.adj[i][j])
                for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i][j]]

    @property
    def m(self) -> int:
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i][j])

    def __str__(self):
        return to_sg(self)


def build(n: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Build a signed graph from ``(u, v, sign)`` triples.

    Signs may be given as ``+1``/``-1`` or as the strings ``"+"``/``"-"``.
    """
    if n < 1:
        raise GraphError("a signed graph needs at least one vertex")
    rows = [[0] * n for _ in range(n)]
    for edge in edges:
        u, v, s = edge
        s = _parse_sign(s)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {edge!r}: index out of range for n={n}")
        if u == v:
            raise GraphError(f"edge {edge!r}: self-loop")
        if rows[u][v]:
            raise GraphError(f"edge {edge!r}: duplicate edge {{{u},{v}}}")
        rows[u][v] = rows[v][u] = s
    return SignedGraph(n, tuple(tuple(r) for r in rows))


def _parse_sign(s) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise GraphError(f"bad sign token {s!r}")


def _check_vertices(G: SignedGraph, U: Iterable[int]) -> list[int]:
    U = sorted(set(U))
    for u in U:
        if not (0 <= u < G.n):
            raise GraphError(f"vertex {u} out of range for n={G.n}")
    return U


def induced_subgraph(G: SignedGraph, U: Iterable[int]) -> SignedGraph:
    U = _check_vertices(G, U)
    if not U:
        raise GraphError("induced subgraph on an empty vertex set")
    return SignedGraph(len(U), tuple(tuple(G.adj[i][j] for j in U) for i in U))


def delete_vertices(G: SignedGraph, D: Iterable[int]) -> SignedGraph | None:
    """``G - D``; returns None when nothing is left."""
    D = set(_check_vertices(G, D))
    keep = [v for v in range(G.n) if v not in D]
    return induced_subgraph(G, keep) if keep else None


def switch(G: SignedGraph, S: Iterable[int]) -> SignedGraph:
    S = set(_check_vertices(G, S))
    rows = []
    for i in range(G.n):
        row = G.adj[i]
        rows.append(tuple(row[j] if (i in S) == (j in S) else -row[j] for j in range(G.n)))
    return SignedGraph(G.n, tuple(rows))


def cycle_sign(G: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs around ``cycle`` (closing edge implied)."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError(f"{list(cycle)} is not a cycle of distinct vertices")
    sign = 1
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        s = G.adj[a][b]
        if not s:
            raise GraphError(f"{a} and {b} are not adjacent")
        sign *= s
    return sign


def _potentials(G: SignedGraph) -> tuple[list[int], list[tuple[int, int]]]:
    """BFS spanning-forest potentials and the full edge list."""
    pot = [0] * G.n
    for root in range(G.n):
        if pot[root]:
            continue
        pot[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if not pot[u]:
                    pot[u] = pot[v] * G.adj[v][u]
                    queue.append(u)
    return pot, [(i, j) for i, j, _ in G.edges()]


def is_balanced(G: SignedGraph) -> bool:
    pot, edges = _potentials(G)
    return all(G.adj[i][j] == pot[i] * pot[j] for i, j in edges)


def balancing_switch(G: SignedGraph) -> list[int] | None:
    """A switching set making ``G`` all-positive, or None if unbalanced."""
    pot, edges = _potentials(G)
    if any(G.adj[i][j] != pot[i] * pot[j] for i, j in edges):
        return None
    return [v for v in range(G.n) if pot[v] < 0]


def max_degree(G: SignedGraph) -> int:
    return max(G.degree(v) for v in range(G.n))


def components(G: SignedGraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in G.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(G: SignedGraph) -> bool:
    return len(components(G)) == 1


def is_bipartite(G: SignedGraph) -> bool:
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def has_triangle(G: SignedGraph) -> bool:
    for i, j, _ in G.edges():
        if any(G.adj[i][k] and G.adj[j][k] for k in range(G.n)):
            return True
    return False


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    n = sum(g.n for g in graphs)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for g in graphs:
        for i in range(g.n):
            for j in range(g.n):
                rows[off + i][off + j] = g.adj[i][j]
        off += g.n
    return SignedGraph(n, tuple(tuple(r) for r in rows))


def add_edges(G: SignedGraph, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    return build(G.n, G.edges() + list(edges))


def relabel(G: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Graph whose vertex ``k`` is ``G``'s vertex ``perm[k]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("not a permutation")
    return SignedGraph(G.n, tuple(tuple(G.adj[perm[i]][perm[j]] for j in range(G.n))
                                  for i in range(G.n)))


# -- canonical form up to switching isomorphism ------------------------------

# Entry codes: positive < negative < non-edge, so orderings that place
# adjacent vertices early win the lexicographic minimum.
_ENTRY = {1: 0, -1: 1, 0: 2}


def _refined_colors(G: SignedGraph) -> list[int]:
    """Colour refinement of the underlying graph (switching invariant)."""
    colors = [G.degree(v) for v in range(G.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in G.neighbors(v)))) for v in range(G.n)]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _connected_code(G: SignedGraph) -> tuple:
    n = G.n
    adj = G.adj
    colors = _refined_colors(G)
    # state: (order, potentials)
    states = [((), ())]
    code: list[tuple] = []
    for pos in range(n):
        best = None
        nxt = []
        for order, pot in states:
            placed = set(order)
            for w in range(n):
                if w in placed:
                    continue
                # tree parent: earliest placed neighbour
                s_w = 0
                for k, v in enumerate(order):
                    if adj[w][v]:
                        s_w = adj[w][v] * pot[k]
                        break
                # a vertex with no placed neighbour roots a new tree whose
                # relative switching is still free, so keep both choices
                choices = (s_w,) if s_w else ((1, -1) if order else (1,))
                row = (colors[w],) + tuple(_ENTRY[adj[w][v] * pot[k] * choices[0]] if adj[w][v] else 2
                                           for k, v in enumerate(order))
                if best is None or row < best:
                    best = row
                    nxt = []
                if row == best:
                    nxt.extend((order + (w,), pot + (c,)) for c in choices)
        code.append(best)
        states = nxt
    return tuple(code)


def canonical_code(G: SignedGraph, limit: int = CANON_LIMIT) -> bytes:
    """Byte string identifying the switching-isomorphism class of ``G``."""
    if G.n > limit:
        raise CanonicalizationLimit(f"canonicalization limit: n={G.n} exceeds {limit}")
    parts = []
    for comp in components(G):
        parts.append(_connected_code(induced_subgraph(G, comp)))
    parts.sort(key=lambda c: (len(c), c))
    out = bytearray()
    out.append(G.n)
    for c in parts:
        out.append(len(c))
        for row in c:
            out.append(row[0])
            out.extend(row[1:])
    return bytes(out)


def canonical_form(G: SignedGraph) -> SignedGraph:
    """Representative graph decoded from the canonical code."""
    return decode_code(canonical_code(G))


def decode_code(code: bytes) -> SignedGraph:
    n = code[0]
    rows = [[0] * n for _ in range(n)]
    pos, off = 1, 0
    inv = {0: 1, 1: -1, 2: 0}
    while pos < len(code):
        size = code[pos]
        pos += 1
        for i in range(size):
            pos += 1  # colour
            for k in range(i):
                s = inv[code[pos]]
                rows[off + i][off + k] = rows[off + k][off + i] = s
                pos += 1
        off += size
    return SignedGraph(n, tuple(tuple(r) for r in rows))


def switching_isomorphic(G: SignedGraph, H: SignedGraph) -> bool:
    return G.n == H.n and canonical_code(G) == canonical_code(H)


# -- induced subgraph containment up to switching ----------------------------

def _bfs_order(H: SignedGraph) -> list[int]:
    order = []
    for comp in components(H):
        start = max(comp, key=H.degree)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(H.neighbors(v), key=lambda x: -H.degree(x)):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def find_induced_embedding(H: SignedGraph, G: SignedGraph) -> list[int] | None:
    """Vertices of ``G`` (indexed by vertex of ``H``) inducing a switching copy of ``H``."""
    if H.n > G.n:
        return None
    order = _bfs_order(H)
    hdeg = [H.degree(v) for v in range(H.n)]
    gdeg = [G.degree(v) for v in range(G.n)]
    image = [-1] * H.n
    pot = [0] * H.n
    used = [False] * G.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        h = order[k]
        earlier = order[:k]
        for g in range(G.n):
            if used[g] or gdeg[g] < hdeg[h]:
                continue
            s_h = 0
            ok = True
            for e in earlier:
                hs = H.adj[h][e]
                gs = G.adj[g][image[e]]
                if bool(hs) != bool(gs):
                    ok = False
                    break
                if hs:
                    want = gs * hs * pot[e]
                    if s_h == 0:
                        s_h = want
                    elif s_h != want:
                        ok = False
                        break
            if not ok:
                continue
            image[h] = g
            pot[h] = s_h or 1
            used[g] = True
            if extend(k + 1):
                return True
            used[g] = False
            image[h] = -1
        return False

    return list(image) if extend(0) else None


def is_induced_sub_up_to_switching(H: SignedGraph, G: SignedGraph) -> bool:
    return find_induced_embedding(H, G) is not None


# -- "sg" edge-list text format ----------------------------------------------

def to_sg(G: SignedGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in G.edges()]
    return "\n".join(lines) + "\n"


def parse_sg(text: str) -> SignedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("sg: empty input")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphError(f"sg: bad header {lines[0]!r}, expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"sg: header says {m} edges, found {len(body)}")
    edges = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 3:
            raise GraphError(f"sg line {lineno}: expected 'u v s', got {ln!r}")
        if parts[2] not in ("+", "-"):
            raise GraphError(f"sg line {lineno}: bad sign token {parts[2]!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"sg line {lineno}: bad vertex index in {ln!r}") from None
        edges.append((u, v, parts[2]))
    return build(n, edges)


def read_sg(path) -> SignedGraph:
    with open(path) as fh:
        return parse_sg(fh.read())


def write_sg(G: SignedGraph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(to_sg(G))

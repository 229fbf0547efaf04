"""Constructors for the parametric signed-graph families.

Vertex numbering is deterministic for every constructor, so equal parameters
always give bit-identical adjacency matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import GraphError, SignedGraph, build, disjoint_union, induced_subgraph, is_balanced


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def make_path(n: int) -> SignedGraph:
    """``P_n`` on vertices ``0..n-1``."""
    _need(n >= 1, f"P_{n}: need n >= 1")
    return build(n, [(i, i + 1, 1) for i in range(n - 1)])


def make_star(k: int) -> SignedGraph:
    """``K_{1,k}`` with centre 0."""
    _need(k >= 1, f"K_1,{k}: need k >= 1")
    return build(k + 1, [(0, i, 1) for i in range(1, k + 1)])


def make_T(a: int, b: int, c: int) -> SignedGraph:
    """Spider with legs of ``a``, ``b``, ``c`` edges; centre 0, legs numbered outward in order."""
    _need(min(a, b, c) >= 1, f"T_{a},{b},{c}: legs need at least one edge")
    edges, nxt = [], 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt, 1))
            prev, nxt = nxt, nxt + 1
    return build(nxt, edges)


def make_Q(a: int, b: int, c: int) -> SignedGraph:
    """Path ``0..a+b+c`` with pendant edges at path vertices ``a`` and ``a+b``.

    The pendants are vertices ``a+b+c+1`` and ``a+b+c+2``.
    """
    _need(a >= 1 and b >= 1 and c >= 1, f"Q_{a},{b},{c}: need a, b, c >= 1")
    L = a + b + c
    edges = [(i, i + 1, 1) for i in range(L)]
    edges += [(a, L + 1, 1), (a + b, L + 2, 1)]
    return build(L + 3, edges)


def make_cycle(k: int, balanced: bool = True) -> SignedGraph:
    """``C_k``; the unbalanced version has the single negative edge ``{k-1, 0}``."""
    _need(k >= 3, f"C_{k}: need k >= 3")
    edges = [(i, i + 1, 1) for i in range(k - 1)]
    edges.append((0, k - 1, 1 if balanced else -1))
    return build(k, edges)


def make_cycle_with_paths(k: int, balanced: bool, lengths: Sequence[int]) -> SignedGraph:
    """Cycle ``v_1..v_k`` (vertices ``0..k-1``) with a hanging path of ``lengths[i]``
    edges at ``v_{i+1}``.

    Path vertices are appended in cycle order, each path numbered outward.
    ``C4[n1,n2,n3,n4]`` is ``make_cycle_with_paths(4, False, (n1, n2, n3, n4))``.
    """
    _need(len(lengths) <= k, f"{len(lengths)} path lengths for a {k}-cycle")
    _need(all(L >= 0 for L in lengths), "path lengths must be non-negative")
    base = make_cycle(k, balanced)
    edges = base.edges()
    nxt = k
    for i, L in enumerate(lengths):
        prev = i
        for _ in range(L):
            edges.append((prev, nxt, 1))
            prev, nxt = nxt, nxt + 1
    return build(nxt, edges)


def make_cycle_with_pendants(k: int, balanced: bool, positions: Sequence[int]) -> SignedGraph:
    """Cycle with one pendant edge at each 1-based position ``v_i``."""
    _need(len(set(positions)) == len(positions), f"repeated pendant position in {list(positions)}")
    _need(all(1 <= i <= k for i in positions), f"pendant positions must lie in [1, {k}]")
    lengths = [0] * k
    for i in positions:
        lengths[i - 1] = 1
    return make_cycle_with_paths(k, balanced, lengths)


def make_c4_paths(n1: int, n2: int, n3: int, n4: int) -> SignedGraph:
    """Unbalanced 4-cycle with hanging paths of ``n1..n4`` edges."""
    return make_cycle_with_paths(4, False, (n1, n2, n3, n4))


def make_theta(p: int, q: int, r: int, negative_path: int | None = 2) -> SignedGraph:
    """Theta graph: three internally disjoint paths with ``p``, ``q``, ``r`` internal
    vertices between hubs 0 and 1.

    One edge (the one leaving hub 0) of path ``negative_path`` (0, 1 or 2 for
    the p-, q-, r-path) is negative, making both cycles through that path
    unbalanced.  ``None`` gives the all-positive theta.  ``r = 0`` means the
    third path is the edge ``{0, 1}``.
    """
    _need(p >= q >= r >= 0, f"Theta_{p},{q},{r}: need p >= q >= r >= 0")
    _need(q >= 1, f"Theta_{p},{q},{r}: two paths of length one would be a multi-edge")
    _need(negative_path in (None, 0, 1, 2), "negative_path must be 0, 1, 2 or None")
    edges, nxt = [], 2
    for idx, length in enumerate((p, q, r)):
        sign = -1 if idx == negative_path else 1
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt, sign))
            sign = 1
            prev, nxt = nxt, nxt + 1
        edges.append((prev, 1, sign))
    return build(nxt, edges)


def make_B(a: int, b: int, r: int) -> SignedGraph:
    """Two unbalanced cycles ``C_a`` and ``C_b`` linked by a path on ``r`` vertices.

    The path's end vertices are cycle vertex 0 of each cycle, so ``r = 2``
    is a single edge; ``r = 0`` glues the cycles at one shared vertex.
    """
    _need(a >= 3 and b >= 3, f"B: cycle lengths {a}, {b} must be >= 3")
    _need(r == 0 or r >= 2, f"B: r={r} must be 0 or >= 2")
    first = make_cycle(a, False)
    second = make_cycle(b, False)
    if r == 0:
        edges = first.edges()
        # relabel second so that its vertex 0 becomes vertex 0 of the first cycle
        relabel = [0] + list(range(a, a + b - 1))
        edges += [(relabel[u], relabel[v], s) for u, v, s in second.edges()]
        return build(a + b - 1, edges)
    G = disjoint_union(first, second)
    edges = G.edges()
    prev, nxt = 0, a + b
    for _ in range(r - 2):
        edges.append((prev, nxt, 1))
        prev, nxt = nxt, nxt + 1
    edges.append((prev, a, 1))
    return build(nxt, edges)


_J = ((1, 1), (1, 1))
_K = ((1, -1), (-1, 1))
_R = ((1, -1), (1, -1))


def make_T2k(k: int) -> SignedGraph:
    """The 4-regular signed graph on ``2k`` vertices with ``A^2 = 4I``.

    Built as the cycle ``C_k`` with every vertex blown up into a pair
    ``{v_i, u_i} = {2i, 2i+1}``; consecutive pairs are completely joined
    through a 2x2 sign block.  Blocks alternate J, K (all-plus, rank one
    anti-diagonal) and the closing block repairs parity.  The circulant
    double-cycle layout with rungs has no such signing once ``k >= 4``, and
    ``k = 2`` cannot be 4-regular on four vertices.
    """
    _need(k >= 3, f"T2k: no 4-regular graph with A^2 = 4I on {2 * k} vertices")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        if i < k - 1:
            block = _J if i % 2 == 0 else _K
        else:
            block = _K if k % 2 == 0 else _R
        for a in range(2):
            for b in range(2):
                edges.append((2 * i + a, 2 * j + b, block[a][b]))
    return build(2 * k, edges)


def derive_bridge_gadget(s: int) -> tuple[SignedGraph, dict[str, int]]:
    """``T2k(s + 1)`` minus its first induced unbalanced 4-cycle, with ports.

    The result has ``2s - 2`` vertices; the ports ``a < b`` are the two
    degree-2 vertices furthest apart.  Which 4-cycle is removed does not matter up to
    switching isomorphism.
    """
    _need(s >= 3, f"gadget: need s >= 3, got {s}")
    T = make_T2k(s + 1)
    for quad in itertools.combinations(range(T.n), 4):
        sub = induced_subgraph(T, quad)
        if all(sub.degree(i) == 2 for i in range(4)) and not is_balanced(sub):
            break
    rest = [v for v in range(T.n) if v not in quad]
    G = induced_subgraph(T, rest)
    ends = [v for v in range(G.n) if G.degree(v) == 2]
    # s = 3 leaves a bare 4-cycle; its ports are opposite vertices
    dist = _distances(G)
    a, b = max(itertools.combinations(ends, 2), key=lambda e: (dist[e[0]][e[1]], -e[0], -e[1]))
    return G, {"a": a, "b": b}


def _distances(G: SignedGraph) -> list[list[int]]:
    out = []
    for src in range(G.n):
        d = [-1] * G.n
        d[src] = 0
        queue = [src]
        for v in queue:
            for w in G.neighbors(v):
                if d[w] < 0:
                    d[w] = d[v] + 1
                    queue.append(w)
        out.append(d)
    return out


def make_pendant_join(G: SignedGraph, v: int, H: SignedGraph, u: int, s: int) -> SignedGraph:
    """``G`` and ``H`` linked by a new path of ``s`` vertices from ``v`` to ``u``.

    ``H`` is shifted by ``G.n``; path vertices follow, all new edges positive.
    """
    _need(s >= 1, f"join: path needs s >= 1 vertices, got {s}")
    _need(0 <= v < G.n, f"join: vertex {v} not in the first graph")
    _need(0 <= u < H.n, f"join: vertex {u} not in the second graph")
    base = disjoint_union(G, H)
    edges = base.edges()
    first = base.n
    path = list(range(first, first + s))
    edges.append((v, path[0], 1))
    edges += [(path[i], path[i + 1], 1) for i in range(s - 1)]
    edges.append((path[-1], G.n + u, 1))
    return build(first + s, edges)


# ---------------------------------------------------------------------------
# text descriptors
# ---------------------------------------------------------------------------

def _ints(tok: str, count: int | None, tag: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in tok.split(","))
    except ValueError:
        raise GraphError(f"{tag}: bad integer list {tok!r}") from None
    if count is not None and len(vals) != count:
        raise GraphError(f"{tag}: expected {count} integers, got {tok!r}")
    return vals


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()
    balanced: bool | None = None
    parts: tuple = ()

    def build(self) -> SignedGraph:
        t, p = self.tag, self.params
        if t == "P":
            return make_path(*p)
        if t == "Star":
            return make_star(*p)
        if t == "T":
            return make_T(*p)
        if t == "Q":
            return make_Q(*p)
        if t == "C":
            return make_cycle(p[0], self.balanced)
        if t == "Cp":
            return make_cycle_with_pendants(p[0], self.balanced, p[1:])
        if t == "C4":
            return make_c4_paths(*p)
        if t == "Theta":
            return make_theta(*p)
        if t == "B":
            return make_B(*p)
        if t == "T2k":
            return make_T2k(*p)
        if t == "join":
            a, b = self.parts
            return make_pendant_join(a.build(), p[0], b.build(), p[1], p[2])
        raise GraphError(f"unknown family tag {t!r}")

    def __str__(self):
        t, p = self.tag, self.params
        csv = ",".join(map(str, p))
        if t == "C":
            return f"C:{p[0]}:{'bal' if self.balanced else 'unbal'}"
        if t == "Cp":
            sig = "bal" if self.balanced else "unbal"
            return f"Cp:{p[0]}:{sig}:" + ",".join(map(str, p[1:]))
        if t == "join":
            a, b = self.parts
            return f"join:{a}:{p[0]}:{b}:{p[1]}:{p[2]}"
        return f"{t}:{csv}"


_ARITY = {"P": 1, "Star": 1, "T": 3, "Q": 3, "C4": 4, "Theta": 3, "B": 3, "T2k": 1}


def _parse(tokens: list[str], pos: int) -> tuple[FamilySpec, int]:
    if pos >= len(tokens):
        raise GraphError("family spec ended early")
    tag = tokens[pos]

    def tok(i):
        if pos + i >= len(tokens):
            raise GraphError(f"{tag}: missing field {i}")
        return tokens[pos + i]

    def sig(s):
        if s not in ("bal", "unbal"):
            raise GraphError(f"{tag}: signature must be bal or unbal, got {s!r}")
        return s == "bal"

    if tag in _ARITY:
        return FamilySpec(tag, _ints(tok(1), _ARITY[tag], tag)), pos + 2
    if tag == "C":
        return FamilySpec(tag, _ints(tok(1), 1, tag), sig(tok(2))), pos + 3
    if tag == "Cp":
        k = _ints(tok(1), 1, tag)
        return FamilySpec(tag, k + _ints(tok(3), None, tag), sig(tok(2))), pos + 4
    if tag == "join":
        a, pos2 = _parse(tokens, pos + 1)
        va = _ints(_at(tokens, pos2, tag), 1, tag)
        b, pos3 = _parse(tokens, pos2 + 1)
        vb = _ints(_at(tokens, pos3, tag), 1, tag)
        s = _ints(_at(tokens, pos3 + 1, tag), 1, tag)
        return FamilySpec(tag, va + vb + s, None, (a, b)), pos3 + 2
    raise GraphError(f"unknown family tag {tag!r}")


def _at(tokens, i, tag):
    if i >= len(tokens):
        raise GraphError(f"{tag}: spec ended early")
    return tokens[i]


def parse_family(text: str) -> FamilySpec:
    """Parse descriptors such as ``T:2,3,4``, ``C:4:unbal`` or
    ``join:P:4:1:P:4:1:3``."""
    tokens = text.strip().split(":")
    spec, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise GraphError(f"trailing fields in family spec {text!r}")
    return spec


def family(text: str) -> SignedGraph:
    return parse_family(text).build()

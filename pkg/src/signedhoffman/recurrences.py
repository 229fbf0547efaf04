"""Path/cycle polynomial recurrences, the vertex-deletion expansion with the
signed-cycle term, family formulas and the attachment reduction at l."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import LSTAR, LStar, Poly, X
from .graph import SignedGraph, delete_vertices, cycle_sign
from .spectra import char_poly

ONE = Poly((1,))


@lru_cache(maxsize=None)
def path_poly(n: int) -> Poly:
    """``p_n``: ``p_0 = 1``, ``p_1 = x``, ``p_n = x p_{n-1} - p_{n-2}``.

    ``p_{-1} = 0`` is accepted so that formulas with shifted indices stay total.
    """
    if n < -1:
        raise ValueError(f"p_{n} is undefined")
    if n == -1:
        return Poly((0,))
    if n == 0:
        return ONE
    if n == 1:
        return X
    return X * path_poly(n - 1) - path_poly(n - 2)


def p(n: int) -> Poly:
    return path_poly(n)


def cycle_poly(n: int) -> Poly:
    """``q_n = p_n - p_{n-2} - 2``, the balanced ``C_n``."""
    if n < 3:
        raise ValueError(f"q_{n}: cycles need at least 3 vertices")
    return path_poly(n) - path_poly(n - 2) - 2


def unbalanced_cycle_poly(n: int) -> Poly:
    """``p_n - p_{n-2} + 2``."""
    if n < 3:
        raise ValueError(f"cycles need at least 3 vertices, got {n}")
    return path_poly(n) - path_poly(n - 2) + 2


def t_graph_poly(a: int, b: int) -> Poly:
    """Characteristic polynomial of ``T_{a,1,b}``."""
    if a < 1 or b < 1:
        raise ValueError(f"T_{a},1,{b}: need a, b >= 1")
    return X * p(a + b + 1) - p(a) * p(b)


def q_graph_poly(a: int, b: int, c: int) -> Poly:
    """Characteristic polynomial of ``Q_{a,b,c}``."""
    if a < 1 or b < 1 or c < 1:
        raise ValueError(f"Q_{a},{b},{c}: need a, b, c >= 1")
    return (X * X * p(a + b + c + 1) - X * p(a + b) * p(c) - X * p(a) * p(b + c)
            + p(a) * p(b - 1) * p(c))


# ---------------------------------------------------------------------------
# theta form: theta + 1/theta = x
# ---------------------------------------------------------------------------

def theta_power(k: int, x) -> tuple[Fraction, Fraction]:
    """``theta^k = u + w*theta`` in ``Q[theta]/(theta^2 - x theta + 1)``; k may be negative."""
    x = Fraction(x)
    # theta^-1 = x - theta
    step = (Fraction(0), Fraction(1)) if k >= 0 else (x, Fraction(-1))
    u, w = Fraction(1), Fraction(0)
    for _ in range(abs(k)):
        a, b = step
        # (u + w t)(a + b t) with t^2 = x t - 1
        u, w = u * a - w * b, u * b + w * a + w * b * x
    return u, w


def theta_identity_holds(n: int, x) -> bool:
    """``p_n(x) (theta^{n+2} - theta^n) == theta^{2n+2} - 1`` and
    ``q_n(x) == theta^n + theta^{-n} - 2`` at a rational ``x``."""
    x = Fraction(x)
    pn = path_poly(n).eval(x)
    hi, lo = theta_power(n + 2, x), theta_power(n, x)
    lhs = (pn * (hi[0] - lo[0]), pn * (hi[1] - lo[1]))
    top = theta_power(2 * n + 2, x)
    ok = lhs == (top[0] - 1, top[1])
    if n >= 3:
        a, b = theta_power(n, x), theta_power(-n, x)
        ok = ok and (a[0] + b[0] - 2, a[1] + b[1]) == (cycle_poly(n).eval(x), 0)
    return ok


# ---------------------------------------------------------------------------
# vertex-deletion expansion
# ---------------------------------------------------------------------------

GA_LIMIT = 12


def _phi_minus(G: SignedGraph, removed) -> Poly:
    H = delete_vertices(G, removed)
    return ONE if H is None else char_poly(H)


def cycles_through(G: SignedGraph, v: int) -> list[tuple[int, ...]]:
    """Every simple cycle through ``v`` once, as a vertex tuple starting at ``v``."""
    out = []
    path = [v]
    on_path = {v}

    def extend(w):
        for u in G.neighbors(w):
            if u == v and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif u not in on_path:
                path.append(u)
                on_path.add(u)
                extend(u)
                path.pop()
                on_path.remove(u)

    extend(v)
    return out


def gill_acharya_expand(G: SignedGraph, v: int) -> Poly:
    """``x phi(G-v) - sum_{u~v} phi(G-v-u) - 2 sum_C sigma(C) phi(G-V(C))``.

    Independent of :func:`char_poly` at the top level; subgraph polynomials
    are computed by the trace recurrence.
    """
    if G.n > GA_LIMIT:
        raise ValueError(f"cycle enumeration is limited to n <= {GA_LIMIT}")
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    total = X * _phi_minus(G, [v])
    for u in G.neighbors(v):
        total = total - _phi_minus(G, [v, u])
    for cyc in cycles_through(G, v):
        total = total - 2 * cycle_sign(G, cyc) * _phi_minus(G, cyc)
    return total


# ---------------------------------------------------------------------------
# attachment reduction at l
# ---------------------------------------------------------------------------

SQRT5_MINUS_2 = LSTAR * LSTAR - 4
_MIN_S = {"bracket": 2, "paren": 3, "bridge": 3}


def attachment_reduce_at_lstar(anchor, s: int, kind: str) -> LStar:
    """Value at l of an attachment with ``s`` gadget columns from its anchor value.

    ``bracket`` anchors at ``s = 2``; ``paren`` and ``bridge`` anchor at ``s = 3``.
    Each extra column multiplies by ``sqrt5 - 2``.
    """
    if kind not in _MIN_S:
        raise ValueError(f"kind must be one of {sorted(_MIN_S)}, got {kind!r}")
    if s < _MIN_S[kind]:
        raise ValueError(f"{kind} attachment needs s >= {_MIN_S[kind]}, got {s}")
    return LStar._c(anchor) * SQRT5_MINUS_2 ** (s - _MIN_S[kind])


# ---------------------------------------------------------------------------
# polynomials behind the table rows
# ---------------------------------------------------------------------------

def qdot_poly(n1: int, n2: int) -> Poly:
    """Unbalanced 4-cycle with paths of ``n1`` and ``n2`` edges at opposite vertices."""
    return (X * p(n1 + n2 + 3) - p(n1 + 2) * p(n2) - p(n1) * p(n2 + 2)
            + 2 * p(n1) * p(n2))


def qdot_prime_poly(n1: int, n2: int) -> Poly:
    """As :func:`qdot_poly` plus one pendant at a vertex between the two paths."""
    return X * qdot_poly(n1, n2) - p(n1 + n2 + 3)


def c4_1n1n_poly(n1: int, n3: int) -> Poly:
    """``C4[n1, 1, n3, 1]``."""
    return X * qdot_prime_poly(n1, n3) - t_graph_poly(n1 + 1, n3 + 1)


def cycle_opposite_pendants_poly(k: int) -> Poly:
    """Unbalanced ``C_k`` (k even) with pendants at ``v_1`` and ``v_{k/2+1}``."""
    if k < 4 or k % 2:
        raise ValueError(f"k={k} must be even and >= 4")
    h = k // 2 - 1
    return X * (X * (p(k) - p(k - 2) + 2) - p(k - 1)) - t_graph_poly(h, h)


def a2_poly(n1: int, n2: int, n3: int) -> Poly:
    """Polynomial of the three-parameter C4-based family."""
    return (X ** 3 * p(n1 + n2 + n3 + 4)
            - X ** 2 * (p(n1 + n3 + 3) * p(n2) + p(n1 + 1) * p(n2 + n3 + 2)
                        - 2 * p(n1) * p(n2 + n3 + 1))
            + X * (p(n1 + 1) * p(n3 + 1) * p(n2) - p(n1) * p(n2 + n3 + 4)
                   - p(n1 + 3) * p(n2 + n3 + 1) - 2 * p(n1) * p(n2) * p(n3))
            + p(n1) * p(n2) * p(n3 + 3) + p(n1 + 3) * p(n2) * p(n3))


def u6_poly(n1: int, n2: int) -> Poly:
    return (X * t_graph_poly(n2, n1 + 3) - p(n1 + n2 + 4) - t_graph_poly(n2, 2) * p(n1)
            + 2 * p(n1) * p(n2))


def g0_poly(k: int) -> Poly:
    if k < 4:
        raise ValueError(f"k={k} must be >= 4")
    q = cycle_poly(k)
    return X * X * q - (q + 2 * X * p(k - 1)) + 2 * X * X + 2 * X * p(k - 3)

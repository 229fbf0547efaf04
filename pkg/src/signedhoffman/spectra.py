"""Characteristic polynomials and certified spectral-radius verdicts."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import (
    LSTAR,
    Poly,
    RatInterval,
    count_roots_closed,
    isolate_roots,
    lstar_is_root,
    squarefree_factorization,
    sturm_count,
)
from .graph import SignedGraph, induced_subgraph, max_degree


def char_poly(G: SignedGraph) -> Poly:
    """``det(xI - A)`` by the Faddeev-LeVerrier trace recurrence.

    Runs in int64 when an a-priori entry bound allows it and in Python
    integers otherwise.  Each division by ``k`` is checked to be exact.
    """
    n = G.n
    d = max_degree(G)
    # |entries of M_k| <= sum_j |c_j| d^(k-j) <= (1+d)^n ; keep well clear of 2^63
    small = n * (1 + d) ** n < 1 << 60
    A = G.matrix() if small else np.array(G.adj, dtype=object)
    ident = np.eye(n, dtype=np.int64) if small else np.identity(n, dtype=int).astype(object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = np.zeros((n, n), dtype=A.dtype)
    for k in range(1, n + 1):
        M = A @ M + coeffs[n - k + 1] * ident
        tr = int(np.trace(A @ M))
        if tr % k:
            raise ArithmeticError(f"non-integral trace step at k={k}")
        coeffs[n - k] = -tr // k
    return Poly(coeffs)


class Verdict(enum.IntEnum):
    """Position of the spectral radius relative to 2 and l = sqrt(2+sqrt5)."""

    Below2 = 0
    Exactly2 = 1
    Between2AndLambdaStar = 2
    ExactlyLambdaStar = 3
    AboveLambdaStar = 4

    @property
    def at_most_lambda_star(self) -> bool:
        return self <= Verdict.ExactlyLambdaStar

    @property
    def above_2(self) -> bool:
        return self >= Verdict.Between2AndLambdaStar


@dataclass(frozen=True)
class RhoVerdict:
    verdict: Verdict
    poly: Poly

    @property
    def at_most_lambda_star(self) -> bool:
        return self.verdict.at_most_lambda_star

    def __str__(self):
        return self.verdict.name


def verdict_of_poly(p: Poly) -> Verdict:
    """Classify the largest |root| of a real-rooted polynomial against 2 and l."""
    total = sturm_count(p)
    if count_roots_closed(p, -LSTAR, LSTAR) < total:
        return Verdict.AboveLambdaStar
    if lstar_is_root(p):
        return Verdict.ExactlyLambdaStar
    if count_roots_closed(p, -2, 2) < total:
        return Verdict.Between2AndLambdaStar
    if p.eval(2) == 0 or p.eval(-2) == 0:
        return Verdict.Exactly2
    return Verdict.Below2


def rho_verdict(G: SignedGraph) -> RhoVerdict:
    p = char_poly(G)
    return RhoVerdict(verdict_of_poly(p), p)


def spectral_radius_float(G: SignedGraph) -> float:
    """Floating-point spectral radius; advisory only."""
    ev = np.linalg.eigvalsh(G.matrix().astype(float))
    return float(max(abs(ev[0]), abs(ev[-1])))


def numeric_spectrum(G: SignedGraph, tol=Fraction(1, 10 ** 9)) -> list[RatInterval]:
    """All ``n`` eigenvalues as enclosures of width <= ``tol``, ascending.

    Repeated eigenvalues appear once per multiplicity (shared interval).
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    out = []
    for factor, mult in squarefree_factorization(char_poly(G)):
        for iv in isolate_roots(factor, tol):
            out.extend([iv] * mult)
    out.sort(key=lambda iv: iv.lo)
    if len(out) != G.n:
        raise ArithmeticError(f"found {len(out)} eigenvalues for n={G.n}")
    return out


def check_interlacing(G: SignedGraph, U, tol=Fraction(1, 10 ** 9)) -> bool:
    """Cauchy interlacing between ``G`` and ``G[U]``.

    False is returned only when an enclosure certifies a violation.
    """
    H = induced_subgraph(G, U)
    if H.n >= G.n:
        raise ValueError("U must be a proper subset")
    lam = numeric_spectrum(G, tol)[::-1]
    mu = numeric_spectrum(H, tol)[::-1]
    n, m = G.n, H.n
    for i in range(m):
        if mu[i].lo > lam[i].hi or mu[i].hi < lam[n - m + i].lo:
            return False
    return True

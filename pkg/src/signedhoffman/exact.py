"""Exact arithmetic kernels.

* :class:`Poly` -- dense univariate polynomials with ``int`` or ``Fraction``
  coefficients (index ``i`` holds the coefficient of ``x**i``).
* :class:`LStar` -- elements of the quartic field Q(l), l = sqrt(2 + sqrt 5),
  stored on the basis 1, l, l^2, l^3 and reduced with l^4 = 4 l^2 + 1.
* :class:`RatInterval` -- closed intervals with rational endpoints and outward
  dyadic rounding.
* A small expression tree (:class:`Expr`) for certified evaluation of closed
  forms mixing rationals, square roots and half-integer powers.
* Sturm sequences and square-free factorisation for real root counting.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

Number = int | Fraction


class DomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if not c:
        c = [0]
    return tuple(c)


def _num(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class Poly:
    """Immutable univariate polynomial, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (0,)):
        self.coeffs = tuple(_num(c) for c in _trim(coeffs))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots_squared(cls, squares: Iterable[int]) -> "Poly":
        """Product of ``x**2 - s`` over ``squares``."""
        p = cls((1,))
        for s in squares:
            p = p * cls((-s, 0, 1))
        return p

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_monic(self) -> bool:
        return self.lead == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = f"{mag}"
            else:
                coef = "" if mag == 1 else f"{mag}*"
                body = coef + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; works for ints, Fractions and :class:`LStar`."""
        acc = 0 * x if not isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i) if self.degree > 0 else Poly()

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.lead)
        q = [Fraction(0)] * max(len(r) - d, 1)
        for k in range(len(r) - 1 - d, -1, -1):
            coef = r[k + d] / lead
            if coef:
                q[k] = coef
                for j, bj in enumerate(other.coeffs):
                    r[k + j] -= coef * bj
        return Poly(q), Poly(r[:d] if d > 0 else [0])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        lead = Fraction(self.lead)
        return Poly(Fraction(c) / lead for c in self.coeffs)

    def primitive(self) -> "Poly":
        """Positive rational multiple with coprime integer coefficients."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return Poly(c // g for c in ints)

    def content_sign_free(self) -> "Poly":
        return self.primitive()

    def to_line(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_line(cls, line: str) -> "Poly":
        return cls(Fraction(t) for t in line.split())


X = Poly.x()


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval_at_int(p: Poly, k: int):
    return p.eval(k)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')`` made primitive (same real roots, all simple)."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return (p // g).primitive()


def squarefree_factorization(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = c * prod f_i**i`` with each ``f_i`` square-free."""
    out = []
    if p.degree <= 0:
        return out
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.primitive(), i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def divides(d: Poly, p: Poly) -> bool:
    return (p % d).is_zero()


def dumps_polys(polys: Iterable[Poly]) -> str:
    return "".join(p.to_line() + "\n" for p in polys)


def loads_polys(text: str) -> list[Poly]:
    return [Poly.from_line(ln) for ln in text.splitlines() if ln.strip()]


# ---------------------------------------------------------------------------
# rational intervals
# ---------------------------------------------------------------------------

def _floor_frac(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil_frac(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


class RatInterval:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo, self.hi = lo, hi

    def __repr__(self):
        return f"RatInterval({float(self.lo)!r}, {float(self.hi)!r})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, v) -> bool:
        return self.lo <= v <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int | None:
        """Certified sign, or None while the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def subset_of(self, other: "RatInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def round_out(self, bits: int) -> "RatInterval":
        scale = 1 << bits
        lo = Fraction(_floor_frac(self.lo * scale), scale)
        hi = Fraction(_ceil_frac(self.hi * scale), scale)
        return RatInterval(lo, hi)

    @staticmethod
    def _c(v) -> "RatInterval":
        return v if isinstance(v, RatInterval) else RatInterval(v)

    def __add__(self, other):
        other = self._c(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        other = self._c(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatInterval":
        if self.contains_zero():
            raise ZeroDivisionError(f"reciprocal of an interval containing 0: {self!r}")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._c(other).reciprocal()

    def __rtruediv__(self, other):
        return self._c(other) * self.reciprocal()

    def ipow(self, k: int) -> "RatInterval":
        if k < 0:
            return self.ipow(-k).reciprocal()
        if k == 0:
            return RatInterval(1)
        if k % 2 == 0 and self.contains_zero():
            m = max(-self.lo, self.hi)
            return RatInterval(0, m ** k)
        a, b = self.lo ** k, self.hi ** k
        return RatInterval(min(a, b), max(a, b))

    def sqrt(self, bits: int) -> "RatInterval":
        if self.hi < 0:
            raise DomainError(f"square root of a negative quantity {self!r}")
        scale = 1 << bits
        lo = max(self.lo, Fraction(0))
        lo_s = Fraction(math.isqrt(_floor_frac(lo * scale * scale)), scale)
        top = _ceil_frac(self.hi * scale * scale)
        r = math.isqrt(top)
        if r * r < top:
            r += 1
        return RatInterval(lo_s, Fraction(r, scale))


@lru_cache(maxsize=64)
def lambda_star_interval(bits: int) -> RatInterval:
    """Enclosure of l = sqrt(2+sqrt5) of width <= 2**-bits, by interval Newton."""
    f = Poly((-1, 0, -4, 0, 1))
    df = f.derivative()
    box = RatInterval(Fraction(2057, 1000), Fraction(2059, 1000))
    target = Fraction(1, 1 << bits)
    while box.width > target:
        m = box.mid
        fm = f.eval(m)
        dfx = _eval_interval(df, box)
        newton = RatInterval(m) - RatInterval(fm) / dfx
        lo, hi = max(box.lo, newton.lo), min(box.hi, newton.hi)
        box = RatInterval(lo, hi).round_out(bits + 8)
    return box


def _eval_interval(p: Poly, box: RatInterval) -> RatInterval:
    acc = RatInterval(0)
    for c in reversed(p.coeffs):
        acc = acc * box + c
    return acc


# ---------------------------------------------------------------------------
# the field Q(l)
# ---------------------------------------------------------------------------

MINPOLY = Poly((-1, 0, -4, 0, 1))


class LStar:
    """``c0 + c1*l + c2*l^2 + c3*l^3`` with l = sqrt(2 + sqrt 5)."""

    __slots__ = ("c",)

    def __init__(self, c: Iterable = (0, 0, 0, 0)):
        c = [Fraction(v) for v in c]
        if len(c) > 4:
            c = list(_reduce_lstar(c))
        self.c = tuple(c + [Fraction(0)] * (4 - len(c)))

    @classmethod
    def gen(cls) -> "LStar":
        return cls((0, 1))

    @classmethod
    def sqrt5(cls) -> "LStar":
        return cls((-2, 0, 1))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LStar((other,))
        if not isinstance(other, LStar):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "LStar(" + ", ".join(str(v) for v in self.c) + ")"

    def __float__(self):
        lam = math.sqrt(2 + math.sqrt(5))
        return float(sum(float(v) * lam ** i for i, v in enumerate(self.c)))

    @staticmethod
    def _c(v):
        if isinstance(v, LStar):
            return v
        if isinstance(v, (int, Fraction, Rational)):
            return LStar((v,))
        return NotImplemented

    def __add__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        return LStar(a + b for a, b in zip(self.c, other.c))

    __radd__ = __add__

    def __neg__(self):
        return LStar(-a for a in self.c)

    def __sub__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    prod[i + j] += a * b
        return LStar(_reduce_lstar(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = LStar((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "LStar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(l)")
        # solve self * y = 1 as a 4x4 rational system (columns: self * l^k)
        cols = []
        e = self
        for _ in range(4):
            cols.append(list(e.c))
            e = e * LStar.gen()
        mat = [[cols[k][i] for k in range(4)] + [Fraction(1 if i == 0 else 0)] for i in range(4)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            pv = mat[col][col]
            mat[col] = [v / pv for v in mat[col]]
            for r in range(4):
                if r != col and mat[r][col] != 0:
                    f = mat[r][col]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
        return LStar(mat[i][4] for i in range(4))

    def __truediv__(self, other):
        other = self._c(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._c(other) * self.inverse()

    def enclose(self, bits: int) -> RatInterval:
        lam = lambda_star_interval(bits)
        acc = RatInterval(0)
        for v in reversed(self.c):
            acc = (acc * lam + v).round_out(bits + 16)
        return acc

    def sign(self) -> int:
        return lstar_sign(self)


def _reduce_lstar(coeffs: Sequence[Fraction]) -> tuple:
    c = list(coeffs)
    for k in range(len(c) - 1, 3, -1):
        top = c[k]
        if top:
            c[k] = 0
            c[k - 2] += 4 * top
            c[k - 4] += top
    return tuple(c[:4])


LSTAR = LStar.gen()
SQRT5 = LStar.sqrt5()


def lstar_from_poly(p: Poly) -> LStar:
    """``p(l)`` reduced modulo ``x^4 - 4x^2 - 1``."""
    r = p % MINPOLY
    return LStar(r.coeffs)


def lstar_sign(e: LStar) -> int:
    """Exact sign of ``e``.

    Zero is decided algebraically (1, l, l^2, l^3 are a Q-basis); otherwise the
    enclosure of l is tightened until the evaluated interval avoids 0.
    """
    if e.is_zero():
        return 0
    bits = 32
    while True:
        s = e.enclose(bits).sign()
        if s is not None and s != 0:
            return s
        bits *= 2


def lstar_is_root(p: Poly) -> bool:
    return lstar_from_poly(p).is_zero()


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------

def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p.primitive(), p.derivative().primitive()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return chain


def _sign_at(p: Poly, point) -> int:
    if point is None:
        raise ValueError("use _sign_at_inf for infinite endpoints")
    v = p.eval(point)
    if isinstance(v, LStar):
        return lstar_sign(v)
    return (v > 0) - (v < 0)


def _variations(signs: Iterable[int]) -> int:
    out, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            out += 1
        last = s
    return out


def _signs_at(chain: Sequence[Poly], point) -> list[int]:
    if point == "+inf":
        return [1 if q.lead > 0 else -1 for q in chain]
    if point == "-inf":
        return [(1 if q.lead > 0 else -1) * (-1 if q.degree % 2 else 1) for q in chain]
    return [_sign_at(q, point) for q in chain]


def _as_point(v):
    if v is None:
        return None
    if isinstance(v, float):
        if math.isinf(v):
            return "+inf" if v > 0 else "-inf"
        return Fraction(v)
    if isinstance(v, str):
        return v
    return v


def sturm_count(p: Poly, a=float("-inf"), b=float("inf")) -> int:
    """Distinct real roots of ``p`` in the half-open interval ``(a, b]``.

    ``a`` and ``b`` may be ints, Fractions, :class:`LStar` elements or
    +/-infinity.  ``p`` is reduced to its square-free part first.
    """
    if p.degree <= 0:
        return 0
    chain = sturm_chain(squarefree_part(p))
    return _variations(_signs_at(chain, _as_point(a))) - _variations(_signs_at(chain, _as_point(b)))


def count_roots_closed(p: Poly, a, b) -> int:
    """Distinct real roots in ``[a, b]``."""
    extra = 1 if (_as_point(a) not in ("-inf", "+inf") and _sign_at(p, a) == 0) else 0
    return sturm_count(p, a, b) + extra


def isolate_roots(p: Poly, tol: Fraction, bound: Fraction | None = None) -> list[RatInterval]:
    """Isolating intervals of width <= ``tol`` for the distinct real roots of ``p``."""
    sq = squarefree_part(p)
    if sq.degree <= 0:
        return []
    chain = sturm_chain(sq)
    if bound is None:
        lead = abs(Fraction(sq.lead))
        bound = 1 + max(abs(Fraction(c)) / lead for c in sq.coeffs[:-1]) if sq.degree > 0 else 1
        bound = Fraction(_ceil_frac(Fraction(bound)))

    def var(x):
        return _variations([_sign_at(q, x) for q in chain])

    out = []
    stack = [(-bound, bound, var(-bound), var(bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1 and hi - lo <= tol:
            out.append(RatInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        vm = var(mid)
        stack.append((mid, hi, vm, vhi))
        stack.append((lo, mid, vlo, vm))
    return sorted(out, key=lambda iv: iv.lo)


# ---------------------------------------------------------------------------
# certified expression evaluation
# ---------------------------------------------------------------------------

class Expr:
    """Arithmetic over rationals, square roots and half-integer powers."""

    def interval(self, bits: int) -> RatInterval:
        raise NotImplementedError

    @staticmethod
    def wrap(v) -> "Expr":
        if isinstance(v, Expr):
            return v
        if isinstance(v, (int, Fraction)):
            return Const(Fraction(v))
        raise TypeError(f"cannot use {v!r} in an expression")

    def __add__(self, o):
        return Add(self, Expr.wrap(o))

    def __radd__(self, o):
        return Add(Expr.wrap(o), self)

    def __sub__(self, o):
        return Add(self, Neg(Expr.wrap(o)))

    def __rsub__(self, o):
        return Add(Expr.wrap(o), Neg(self))

    def __mul__(self, o):
        return Mul(self, Expr.wrap(o))

    def __rmul__(self, o):
        return Mul(Expr.wrap(o), self)

    def __truediv__(self, o):
        return Div(self, Expr.wrap(o))

    def __rtruediv__(self, o):
        return Div(Expr.wrap(o), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, k):
        return Pow(self, Fraction(k))


class Const(Expr):
    def __init__(self, v: Fraction):
        self.v = Fraction(v)

    def interval(self, bits):
        return RatInterval(self.v)

    def __str__(self):
        return str(self.v)


class Add(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def interval(self, bits):
        return (self.a.interval(bits) + self.b.interval(bits)).round_out(bits)

    def __str__(self):
        return f"({self.a} + {self.b})"


class Neg(Expr):
    def __init__(self, a):
        self.a = a

    def interval(self, bits):
        return -self.a.interval(bits)

    def __str__(self):
        return f"-{self.a}"


class Mul(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def interval(self, bits):
        return (self.a.interval(bits) * self.b.interval(bits)).round_out(bits)

    def __str__(self):
        return f"{self.a}*{self.b}"


class Div(Expr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def interval(self, bits):
        return (self.a.interval(bits) / self.b.interval(bits)).round_out(bits)

    def __str__(self):
        return f"{self.a}/{self.b}"


class Sqrt(Expr):
    def __init__(self, a):
        self.a = a

    def interval(self, bits):
        return self.a.interval(bits).sqrt(bits)

    def __str__(self):
        return f"sqrt({self.a})"


class Pow(Expr):
    """Power with an integer or half-integer exponent."""

    def __init__(self, base, k: Fraction):
        if k.denominator not in (1, 2):
            raise DomainError(f"exponent {k} is not a half-integer")
        self.base, self.k = base, k

    def interval(self, bits):
        b = self.base.interval(bits)
        if self.k.denominator == 1:
            return b.ipow(int(self.k)).round_out(bits)
        whole = (self.k - Fraction(1, 2))
        root = b.sqrt(bits)
        return (b.ipow(int(whole)) * root).round_out(bits)

    def __str__(self):
        return f"({self.base})^({self.k})"


def sqrt(v) -> Expr:
    return Sqrt(Expr.wrap(v))


def interval_eval(expr: Expr, tol=Fraction(1, 10 ** 12), max_bits: int = 1 << 14) -> RatInterval:
    """Enclosure of ``expr`` with width at most ``tol``."""
    tol = Fraction(tol)
    bits = 64
    while True:
        iv = expr.interval(bits)
        if iv.width <= tol:
            return iv
        if bits >= max_bits:
            raise ArithmeticError(f"could not reach width {float(tol)} with {bits} bits")
        bits *= 2


def certify_sign(expr: Expr, max_bits: int = 1 << 13) -> tuple[int, RatInterval]:
    """Sign of ``expr`` with a witnessing enclosure.

    Returns sign 0 only when the enclosure still contains 0 at ``max_bits``,
    i.e. ``|expr| < 2**-(max_bits/2)`` roughly.
    """
    bits = 64
    while True:
        iv = expr.interval(bits)
        s = iv.sign()
        if s:
            return s, iv
        if bits >= max_bits:
            return 0, iv
        bits *= 2

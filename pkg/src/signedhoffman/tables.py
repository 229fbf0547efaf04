"""Closed-form values at l of the tabulated families, with certified signs.

Rows are addressed as ``table1:<name>``, ``table2:<name>`` and
``table3:<index>``.  Rows of the first and third table are expression trees
in the radicals they are printed with.  Rows of the second table have no
closed form: they are values of composite graphs, evaluated exactly in the
field of l once every part of the composite is available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .exact import Const, DomainError, Expr, Pow, RatInterval, certify_sign, interval_eval, lstar_from_poly, lstar_sign, sqrt
from .families import make_path
from .graph import SignedGraph, build, disjoint_union
from .spectra import char_poly


class MissingData(LookupError):
    """A composite needs a graph that is only available as catalog data."""


S5 = sqrt(5)
S2 = sqrt(2)
TWO = Const(Fraction(2))
GOLD = S5 + 1  # twice the golden ratio


def pw(base, e) -> Expr:
    return Pow(Expr.wrap(base), Fraction(e))


def two(e) -> Expr:
    e = Fraction(e)
    if e.denominator == 1 and e >= 0:
        return Const(Fraction(2) ** int(e))
    return pw(TWO, e)


def half(*terms) -> Fraction:
    return Fraction(sum(terms), 2)


A1 = 2 * sqrt(S5 - 1)
A2 = sqrt(S5 - 2)
A3 = sqrt(S5 - 1)
A4 = sqrt(17 * S5 + 22)
A5 = sqrt(73 * S5 + 151)
A6 = sqrt(17 * S5 - 22)
A7 = sqrt(5 * S5 - 11)
A8 = sqrt(73 * S5 - 151)
A9 = sqrt(5 * S5 - 11)
A10 = sqrt(185 * S5 - 409)
A11 = 2 / sqrt(13 * S5 + 29)
A12 = 31 / sqrt(337 * S5 + 751)


@dataclass(frozen=True)
class TableRow:
    key: str
    params: tuple[str, ...]
    minimum: Mapping[str, int]
    claim: int | None
    build: Callable[..., Expr]
    extra: Callable[..., bool] | None = None
    extra_text: str = ""

    def check(self, values: Mapping[str, int]):
        missing = [p for p in self.params if p not in values]
        unknown = [p for p in values if p not in self.params]
        if missing or unknown:
            raise DomainError(f"{self.key}: parameters are {list(self.params)}, got {sorted(values)}")
        for p in self.params:
            if values[p] < self.minimum.get(p, 0):
                raise DomainError(f"{self.key}: {p}={values[p]} below minimum {self.minimum[p]}")
        if self.extra and not self.extra(**values):
            raise DomainError(f"{self.key}: {self.extra_text}")

    def expr(self, **values) -> Expr:
        self.check(values)
        return self.build(**values)

    def samples(self, count: int = 4) -> list[dict[str, int]]:
        """The domain minimum and the next ``count - 1`` admissible points on the diagonal."""
        out, step = [], 0
        while len(out) < count:
            vals = {p: self.minimum.get(p, 0) + step for p in self.params}
            step += 1
            if self.extra is None or self.extra(**vals):
                out.append(vals)
        return out


def _rows(*rows: TableRow) -> dict[str, TableRow]:
    return {r.key: r for r in rows}


TABLE1 = _rows(
    TableRow("table1:Ck_1_half", ("k",), {"k": 4}, 1,
             lambda k: (S5 + 3) * two(half(k)) * pw(GOLD, 1 - half(k)),
             lambda k: k % 2 == 0, "k must be even"),
    TableRow("table1:C4_n1_1_n3_1", ("n1", "n3"), {"n1": 1, "n3": 1}, 1,
             lambda n1, n3: two(half(n1, n3, 2)) * pw(GOLD, 1 - half(n1, n3))),
    TableRow("table1:U6", ("n1", "n2"), {"n1": 1, "n2": 1}, 1,
             lambda n1, n2: two(half(n1, n2, 2)) * pw(GOLD, 1 - half(n1, n2))),
    TableRow("table1:G0", ("k",), {"k": 12}, 1,
             lambda k: 2 * (1 - pw(2 / GOLD, half(k))),
             lambda k: k % 2 == 0, "k must be even"),
    TableRow("table1:S1", ("n",), {"n": 8}, 1,
             lambda n: pw(5 * S5 + 11, half(1)) * two(half(n) + 2) * pw(GOLD, half(-n - 1))),
    TableRow("table1:S2", ("n",), {"n": 10}, 1,
             lambda n: two(half(n) + 2) * pw(GOLD, -half(n))),
    TableRow("table1:G4_Qp", ("n1",), {"n1": 1}, 1,
             lambda n1: ((3194 * S5 - 7142) * pw(GOLD, n1) + (1292 * S5 - 2889) * two(n1 + 3))
             / (pw(GOLD, n1 + 1) * pw(S5 - 2, half(5)))),
    TableRow("table1:G2_Qp", ("n1",), {"n1": 1}, 1,
             lambda n1: 4 * ((9 - 4 * S5) * pw(GOLD, n1) + (29 - 13 * S5) * two(n1)) / pw(GOLD, n1 + 1)),
    TableRow("table1:G5_Qp", ("n1",), {"n1": 1}, 1,
             lambda n1: (2 * pw(GOLD, n1 + 1) - two(n1 + 3))
             / (pw(305 * S5 + 682, half(1)) * pw(GOLD, n1 + 1))),
    TableRow("table1:Qp_Qp", ("n1", "n2"), {"n1": 1, "n2": 1}, 1,
             lambda n1, n2: 8 * (pw(GOLD, n1 + n2 + half(1))
                                 - A1 * (pw(GOLD, n1) * two(n2) + two(n1) * pw(GOLD, n2))
                                 + A2 * two(n1 + n2 + half(5)))
             / pw(GOLD, n1 + n2 + half(7))),
    TableRow("table1:T_Qp", ("a", "n1"), {"a": 3, "n1": 1}, 1,
             lambda a, n1: two(a + 2) * (pw(GOLD, n1) - (S5 - 1) * two(n1)) * pw(GOLD, -a - n1 - 1)),
    TableRow("table1:P4_Qp", ("n1",), {"n1": 1}, 1,
             lambda n1: (2 * (3 - S5) * pw(GOLD, n1) - (S5 - 2) * two(n1 + 3)) / pw(GOLD, n1 + 1)),
    # the next two rows are printed only to three significant figures
    TableRow("table1:G4_T", ("a",), {"a": 3}, 1,
             lambda a: Const(Fraction("0.0669")) * pw(2 / GOLD, a)),
    # n1 appears in the printed row although the graph is indexed by a only
    TableRow("table1:G2_T", ("a", "n1"), {"a": 3, "n1": 1}, 1,
             lambda a, n1: (5 * S5 - 11) * two(n1 + 1) * pw(GOLD, -a)),
    TableRow("table1:G5_T", ("a",), {"a": 3}, 1,
             lambda a: Const(Fraction("0.28")) * pw(2 / GOLD, a)),
    TableRow("table1:T_T", ("a", "b"), {"a": 3, "b": 3}, 1,
             lambda a, b: two(a + b + 1) * pw(GOLD, -a - b + 1)),
    TableRow("table1:P4_T", ("a",), {"a": 3}, 1,
             lambda a: two(a + 3) * pw(GOLD, -a - 1)),
)


def _d(n1, n2, k):
    """``(2(sqrt5+1))^((n1+n2+k)/2)``."""
    return pw(2 * GOLD, half(n1, n2, k))


TABLE3 = _rows(
    TableRow("table3:1", ("n1",), {"n1": 2}, -1,
             lambda n1: -pw(S5 - 1, half(1)) * two(n1 + half(1)) * pw(GOLD, -n1)),
    TableRow("table3:2", ("n1",), {"n1": 4}, 1,
             lambda n1: 2 * S2 * pw(GOLD, -n1 - half(3)) * (pw(GOLD, n1) - S5 * two(n1 + 1))),
    TableRow("table3:3", ("n2",), {"n2": 3}, 1,
             lambda n2: pw(S5 - 1, half(1)) * two(n2 + half(3)) / pw(GOLD, n2)
             + 3 * pw(S5 + 2, half(1)) - pw(2 * GOLD, half(1))),
    TableRow("table3:4", ("n1",), {"n1": 3}, -1,
             lambda n1: -(2 * S5 + 3) * two(n1 + 5) * pw(GOLD, -n1 - 4) - S5 + 2),
    TableRow("table3:5", ("n1",), {"n1": 3}, 1,
             lambda n1: pw(GOLD, -n1 - half(3))
             * (2 * sqrt(10) * pw(GOLD, n1) + (S5 - 4) * two(n1 + half(5)))),
    TableRow("table3:6", ("n1",), {"n1": 3}, -1,
             lambda n1: (5 * S5 - 13) * pw(2 / GOLD, n1) + S5 - 2),
    TableRow("table3:7", ("n1",), {"n1": 3}, 1,
             lambda n1: (S5 - 7) * pw(GOLD / 2, -n1 - half(5)) + 3 * sqrt(S5 - 2)),
    TableRow("table3:8", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (A3 * two(n1) * pw(GOLD, n2) + A4 * two(n1 + n2 + half(3))
                             - A5 * pw(GOLD, n1) * two(n2))
             / (two(half(n1, n2, 2)) * pw(GOLD, half(n1, n2, -1)))),
    TableRow("table3:9", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (((4 * S5 + 7) * pw(GOLD, n1) + (5 * S5 + 1) * two(n1)) * two(n2 + 8)
                             - two(n1 + 8) * pw(GOLD, n2))
             / ((S5 - 3) * _d(n1, n2, 7))),
    TableRow("table3:10", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: ((S5 - 1) * two(n1 + 1) * pw(GOLD, n2)
                             + 3 * ((S5 - 1) * two(n1) - pw(GOLD, n1)) * two(n2 + 2))
             / ((S5 - 1) * _d(n1, n2, 0))),
    TableRow("table3:11", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: ((S5 - 1) * two(n1 + 4) * pw(GOLD, n2)
                             + 3 * ((S5 - 3) * two(n1) - pw(GOLD, n1)) * two(n2 + 5))
             / ((S5 - 1) * _d(n1, n2, 3))),
    TableRow("table3:12", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (3 * pw(GOLD, n1 + 1) * two(n2 + 5) - two(n1 + 6) * pw(GOLD, n2)
                             - 3 * two(n1 + n2 + 7))
             / ((S5 - 3) * _d(n1, n2, 5))),
    TableRow("table3:13", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (A3 * two(n1) * pw(GOLD, n2)
                             - 3 * (pw(GOLD, n1 + half(1)) + sqrt(S5 - 2) * two(n1 + half(3))) * two(n2))
             / (two(half(n1, n2, -2)) * pw(GOLD, half(n1, n2, 3)))),
    TableRow("table3:14", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: -(A6 * pw(GOLD, n1) * (-two(n2 + 1)) + A7 * two(n1 + half(1)) * pw(GOLD, n2)
                              + A8 * two(n1 + n2 + half(3)))
             / ((S5 - 3) * _d(n1, n2, 0))),
    TableRow("table3:15", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (A6 * pw(GOLD, n1) * two(n2 + 4) - A9 * two(n1 + half(7)) * pw(GOLD, n2)
                             + A10 * two(n1 + n2 + half(9)))
             / ((S5 - 3) * _d(n1, n2, 3))),
    TableRow("table3:16", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (S5 - 2) * ((4 * S5 + 7) * pw(GOLD, n1) * (-two(n2)) + two(n1) * pw(GOLD, n2)
                                        + (3 * S5 + 13) * two(n1 + n2))
             / _d(n1, n2, 0)),
    TableRow("table3:17", ("n1", "n2"), {"n1": 1, "n2": 1}, None,
             lambda n1, n2: (A11 * 2 * (two(n1) * pw(GOLD, n2) - (4 * S5 + 7) * pw(GOLD, n1) * two(n2))
                             - A12 * two(n1 + n2 + 2))
             / (two(half(n1, n2, -1)) * pw(GOLD, half(n1, n2, 2)))),
)


# ---------------------------------------------------------------------------
# composite rows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompositeRow:
    """``[left, v, s, u, right]``: the two parts hang by one edge each from the
    two ends of the bridging gadget."""

    key: str
    left: tuple[str, str]
    right: tuple[str, str]
    s: int
    printed: Fraction
    params: tuple[str, ...] = field(default=())


def _composite(key, left, right, printed):
    return CompositeRow(key, left, right, 3, Fraction(printed))


TABLE2 = {r.key: r for r in (
    _composite("table2:G4_G4", ("G4^12", "v12"), ("G4^12", "v12"), "0.0007"),
    _composite("table2:G2_G2", ("G2^9", "v9"), ("G2^9", "v9"), "0.02"),
    _composite("table2:G5_P4", ("G5^10", "v10"), ("P4", "v2"), "0.03"),
    _composite("table2:G4_G2", ("G4^12", "v12"), ("G2^9", "v9"), "0.004"),
    _composite("table2:G2_G5", ("G2^9", "v9"), ("G5^10", "v10"), "0.015"),
    _composite("table2:P4_P4", ("P4", "v2"), ("P4", "v2"), "0.05"),
    _composite("table2:G4_G5", ("G4^12", "v12"), ("G5^10", "v10"), "0.003"),
    _composite("table2:G2_P4", ("G2^9", "v9"), ("P4", "v2"), "0.033"),
    _composite("table2:G4_P4", ("G4^12", "v12"), ("P4", "v2"), "0.006"),
    _composite("table2:G5_G5", ("G5^10", "v10"), ("G5^10", "v10"), "0.01"),
)}

# A part is a graph plus a map from vertex labels to indices.
Part = tuple[SignedGraph, Mapping[str, int]]
Provider = Callable[[str], "Part | None"]


def builtin_parts(name: str) -> Part | None:
    if name == "P4":
        return make_path(4), {f"v{i + 1}": i for i in range(4)}
    return None


def bridge_composite(left: Part, v: str, gadget: Part, right: Part, u: str) -> SignedGraph:
    """Attach ``left[v]`` to gadget port ``a`` and ``right[u]`` to port ``b`` by positive edges."""
    (G, gl), (T, tl), (H, hl) = left, gadget, right
    for lab, labels, what in ((v, gl, "left part"), (u, hl, "right part")):
        if lab not in labels:
            raise MissingData(f"vertex label {lab!r} is not known for the {what}")
    base = disjoint_union(G, T, H)
    edges = base.edges()
    edges.append((gl[v], G.n + tl["a"], 1))
    edges.append((G.n + tl["b"], G.n + T.n + hl[u], 1))
    return build(base.n, edges)


def composite_graph(row: CompositeRow, provider: Provider | None = None) -> SignedGraph:
    def get(name):
        part = builtin_parts(name)
        if part is None and provider is not None:
            part = provider(name)
        if part is None:
            raise MissingData(f"{row.key}: no graph data for {name!r}")
        return part

    gadget = get(f"T'''{2 * row.s}")
    return bridge_composite(get(row.left[0]), row.left[1], gadget, get(row.right[0]), row.right[1])


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

ALL_ROWS: dict[str, object] = {**TABLE1, **TABLE3, **TABLE2}


def get_row(key: str):
    try:
        return ALL_ROWS[key]
    except KeyError:
        raise DomainError(f"unknown table row {key!r}") from None


def table_expr_eval(key: str, params: Mapping[str, int] | None = None,
                    provider: Provider | None = None,
                    tol=Fraction(1, 10 ** 12)) -> tuple[int, RatInterval]:
    """Certified sign and enclosure of a row at the given parameters.

    Composite rows are evaluated exactly at l from their graph; ``provider``
    supplies parts that are not built in.
    """
    row = get_row(key)
    params = dict(params or {})
    if isinstance(row, CompositeRow):
        if params:
            raise DomainError(f"{key} takes no parameters")
        value = lstar_from_poly(char_poly(composite_graph(row, provider)))
        sign = lstar_sign(value)
        bits = 32
        box = value.enclose(bits)
        while box.width > tol:
            bits *= 2
            box = value.enclose(bits)
        return sign, box
    expr = row.expr(**params)
    sign, _ = certify_sign(expr)
    return sign, interval_eval(expr, tol)

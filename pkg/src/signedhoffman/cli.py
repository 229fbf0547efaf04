"""Command-line front end.  Exit status: 0 ok, 1 refuted / negative answer, 2 usage or input error."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import CatalogError, exit_status, load_catalog, starter_catalog_path, verify_all
from .exact import DomainError
from .families import parse_family
from .graph import GraphError, canonical_code, canonical_form, find_induced_embedding, parse_sg, to_sg
from .search import FrontierCapError, classify_all, is_maximal, search
from .spectra import numeric_spectrum, rho_verdict
from .tables import CompositeRow, MissingData, get_row, table_expr_eval


def _read_graph(arg: str):
    if arg == "-":
        return parse_sg(sys.stdin.read())
    return parse_sg(Path(arg).read_text())


def _seed(arg: str):
    """A seed is an sg file, ``-`` for stdin, or a family descriptor."""
    if arg == "-" or Path(arg).exists():
        return _read_graph(arg)
    return parse_family(arg).build()


def cmd_spectrum(a) -> int:
    G = _read_graph(a.file)
    for iv in numeric_spectrum(G, Fraction(1, 10 ** (a.digits + 2))):
        print(f"{float(iv.mid):.{a.digits}f}")
    return 0


def cmd_charpoly(a) -> int:
    print(rho_verdict(_read_graph(a.file)).poly)
    return 0


def cmd_verdict(a) -> int:
    for f in a.files or ["-"]:
        rv = rho_verdict(_read_graph(f))
        print(f"{f} {rv.verdict.name} {rv.poly}")
    return 0


def cmd_canon(a) -> int:
    G = _read_graph(a.file)
    print(canonical_code(G).hex())
    if a.sg:
        print(to_sg(canonical_form(G)), end="")
    return 0


def cmd_embed(a) -> int:
    emb = find_induced_embedding(_read_graph(a.H), _read_graph(a.G))
    if emb is None:
        print("none")
        return 1
    print(" ".join(map(str, emb)))
    return 0


def cmd_family(a) -> int:
    print(to_sg(parse_family(a.spec).build()), end="")
    return 0


def cmd_search(a) -> int:
    try:
        report = search(_seed(a.seed), a.depth, a.band == "above2", a.cap)
    except FrontierCapError as exc:
        print(exc.report.dumps())
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.dumps())
    return 0


def cmd_maximal(a) -> int:
    ok = is_maximal(_seed(a.file))
    print("true" if ok else "false")
    return 0


def cmd_classify(a) -> int:
    for entry in classify_all(a.n):
        print(f"{entry.code.hex()} {entry.verdict.verdict.name}")
    return 0


def _params(items) -> dict[str, int]:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise DomainError(f"--param expects name=value, got {item!r}")
        try:
            out[name] = int(value)
        except ValueError:
            raise DomainError(f"--param {name}: {value!r} is not an integer") from None
    return out


def cmd_table(a) -> int:
    row = get_row(a.row)
    provider = None
    if isinstance(row, CompositeRow):
        provider = load_catalog(a.catalog or starter_catalog_path()).provider
    try:
        sign, box = table_expr_eval(a.row, _params(a.param), provider)
    except MissingData as exc:
        print(f"{a.row} skipped-missing-data {exc}")
        return 0
    print(f"{a.row} {sign:+d} {float(box.lo):.12g} {float(box.hi):.12g}")
    if isinstance(row, CompositeRow):
        tol = Fraction(1, 200)
        return 0 if sign > 0 and row.printed - tol <= box.lo and box.hi <= row.printed + tol else 1
    return 0 if row.claim is None or row.claim == sign else 1


def cmd_verify(a) -> int:
    results = verify_all(load_catalog(a.catalog))
    for r in results:
        print(r)
    return exit_status(results)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedhoffman", description="signed graphs against sqrt(2+sqrt5)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="eigenvalues, certified to the given digits")
    s.add_argument("file")
    s.add_argument("--digits", type=int, default=9)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("charpoly", help="characteristic polynomial")
    s.add_argument("file")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("verdict", help="'<file> <verdict> <charpoly>' per file; stdin if none")
    s.add_argument("files", nargs="*")
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("canon", help="switching-class canonical code")
    s.add_argument("file")
    s.add_argument("--sg", action="store_true", help="also print the canonical form")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("embed", help="induced embedding of H into G up to switching")
    s.add_argument("H")
    s.add_argument("G")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("family", help="build a family member, e.g. T:2,3,4 or C:4:unbal")
    s.add_argument("spec")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("search", help="extension search from a seed file or family spec")
    s.add_argument("seed")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--band", choices=["all", "above2"], default="all")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("maximal", help="true if no one-vertex extension keeps rho <= l")
    s.add_argument("file")
    s.set_defaults(func=cmd_maximal)

    s = sub.add_parser("classify", help="census of switching classes on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("table", help="certified value of a table row: 'row sign lo hi'")
    s.add_argument("row", help="table1:<name>, table2:<name> or table3:<index>")
    s.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    s.add_argument("--catalog", help="catalog supplying composite parts (default: starter)")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", help="re-check every claim in a catalog")
    s.add_argument("catalog")
    s.set_defaults(func=cmd_verify)
    return p


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, CatalogError, DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch())


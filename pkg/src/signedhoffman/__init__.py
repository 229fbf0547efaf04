"""Exact spectral tools for signed graphs near the limit point sqrt(2+sqrt5)."""

from .catalog import Catalog, CatalogEntry, VerificationResult, load_catalog, save_catalog, verify_all
from .exact import LSTAR, LStar, Poly
from .families import derive_bridge_gadget, family, make_B, make_cycle, make_path, make_Q, make_T, make_T2k, make_theta
from .graph import SignedGraph, build, canonical_code, is_induced_sub_up_to_switching, parse_sg, switching_isomorphic, to_sg
from .recurrences import cycle_poly, gill_acharya_expand, path_poly
from .search import classify_all, extend_once, is_maximal, search
from .spectra import RhoVerdict, Verdict, char_poly, rho_verdict
from .tables import table_expr_eval

__all__ = [name for name in dir() if not name.startswith("_")]

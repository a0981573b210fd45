"""Ramanujan-type series for 1/pi: exact surds, continued 2F1, transformations, proofs."""

from .catalog import CatalogFile, emit_certificate, format_catalog, load_catalog, parse_catalog, read_certificate
from .errors import RamanujanPiError
from .exactnum import DEFAULT_POLICY, CSurd, PrecisionPolicy, Surd, identify, identify_complex, parse_surd, to_mp
from .hyper import BranchPolicy, HyperValue, LevelParam, clausen_residual, eval_F, legendre_residual
from .ramanujan import (
    Certificate,
    Coefficients,
    SeriesSpec,
    Verdict,
    conjecture_m0,
    derive_coefficients,
    detect_degree,
    evaluate_series,
    modular_q,
    prove_series,
    verify_series,
)
from .transform import SolutionPoint, Transformation, g_transfer, select_solution, solve_beta_complement

__version__ = "0.1.0"

__all__ = [
    "BranchPolicy",
    "CSurd",
    "CatalogFile",
    "Certificate",
    "Coefficients",
    "DEFAULT_POLICY",
    "HyperValue",
    "LevelParam",
    "PrecisionPolicy",
    "RamanujanPiError",
    "SeriesSpec",
    "SolutionPoint",
    "Surd",
    "Transformation",
    "Verdict",
    "clausen_residual",
    "conjecture_m0",
    "derive_coefficients",
    "detect_degree",
    "emit_certificate",
    "eval_F",
    "evaluate_series",
    "format_catalog",
    "g_transfer",
    "identify",
    "identify_complex",
    "legendre_residual",
    "load_catalog",
    "modular_q",
    "parse_catalog",
    "parse_surd",
    "prove_series",
    "read_certificate",
    "select_solution",
    "solve_beta_complement",
    "to_mp",
    "verify_series",
]

"""Partial-positivity index s for irreducible Riemannian symmetric spaces
of compact type, computed by exact root-system combinatorics."""

from .rootsys import (
    LieType,
    Root,
    RootSystem,
    cartan_matrix,
    epsilon_realization,
    height,
    highest_root,
    positive_roots,
)
from .spaces import (
    CatalogEntry,
    Family,
    ParameterError,
    RestrictionMap,
    SymmetricSpace,
    catalog,
    catalog_json,
    is_zero_restriction,
    make_space,
    restrict,
)
from .svalue import (
    EXCEPTION_LEDGER,
    SValueReport,
    closed_form_s,
    delta_k_positive,
    discrepancy_report,
    l1_maximal_indices,
    minimizer_check,
    report,
    report_from_dict,
    report_to_dict,
    restricted_multiplicities,
    s_value,
    s_vector,
)
from .verify import run_verification

__version__ = "1.0.0"

__all__ = [
    "LieType", "Root", "RootSystem", "cartan_matrix", "epsilon_realization",
    "height", "highest_root", "positive_roots",
    "CatalogEntry", "Family", "ParameterError", "RestrictionMap",
    "SymmetricSpace", "catalog", "catalog_json", "is_zero_restriction",
    "make_space", "restrict",
    "EXCEPTION_LEDGER", "SValueReport", "closed_form_s", "delta_k_positive",
    "discrepancy_report", "l1_maximal_indices", "minimizer_check", "report",
    "report_from_dict", "report_to_dict", "restricted_multiplicities",
    "s_value", "s_vector",
    "run_verification",
]

"""Exact arithmetic engine for group-like projections on finite quantum groups.

The two model families are the function algebra ``C(G)`` and the group algebra
``ℂG`` of a finite group, each with a subgroup ``K``.  All scalars are Gaussian
rationals, so every identity is decided exactly.
"""

from .compact import build_central_quotient, build_compact_hypergroup, hecke_structure
from .discrete import build_C1, build_discrete_hypergroup, build_expectations, discrete_type_gate
from .duality import dualize, fourier, inverse_fourier
from .group import FiniteGroup, Subgroup, catalog, group_from_json
from .hopf import (HopfStarAlgebra, build_function_algebra, build_group_algebra, compute_modular_data,
                   verify_axioms)
from .projection import canonical_projection, centrality_equivalences, is_group_like
from .report import REGISTRY, EngineError, VerificationReport
from .scalar import Scalar
from .suite import parse_spec, run_suite

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup", "Subgroup", "catalog", "group_from_json",
    "HopfStarAlgebra", "build_function_algebra", "build_group_algebra", "verify_axioms",
    "compute_modular_data", "dualize", "fourier", "inverse_fourier",
    "is_group_like", "canonical_projection", "centrality_equivalences",
    "build_compact_hypergroup", "build_central_quotient", "hecke_structure",
    "build_expectations", "build_C1", "build_discrete_hypergroup", "discrete_type_gate",
    "parse_spec", "run_suite", "VerificationReport", "EngineError", "REGISTRY", "Scalar",
]

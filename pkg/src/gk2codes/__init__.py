"""Weierstrass semigroups and AG/CSS code parameters for the GK2 curve family.

Exact-arithmetic engines for the curve family's Weierstrass semigroups at
small-field rational points, Feng-Rao designed distances, CSS quantum code
parameter ranges, and a constructive cross-check layer: point enumeration
over the exact finite fields and explicit evaluation-code matrices whose
ranks confirm the semigroup data.
"""

from .curve import (
    CurvePoint,
    PoleBasisFunction,
    build_basis,
    census,
    classify_point,
    code_matrix,
    distinguished_point,
    enumerate_points,
    eval_basis,
    evaluation_points,
    field_context,
    min_weight_exhaustive,
    write_matrix,
)
from .errors import InternalConsistencyError, NeedsLocalResolutionError, PoleEvaluationError
from .fengrao import CodeTableRow, d_ord, nu, table
from .gf import GfContext, make_field, matrix_rank
from .gk2 import (
    CurveParams,
    PartitionReport,
    canonical_triple,
    curve_params,
    frobenius_dimension_gk1,
    frobenius_dimension_gk2,
    frobenius_dimensions_differ,
    holomorphic_gap_set,
    k_max,
    orbit_semigroup,
    semigroup_o1,
    semigroup_o2,
    verify_partition,
)
from .quantum import QuantumRange, quantum_table, range_high_degree, range_order_bound
from .semigroup import NumericalSemigroup, is_telescopic, telescopic_genus

__version__ = "0.1.0"

__all__ = [
    "CodeTableRow",
    "CurveParams",
    "CurvePoint",
    "GfContext",
    "InternalConsistencyError",
    "NeedsLocalResolutionError",
    "NumericalSemigroup",
    "PartitionReport",
    "PoleBasisFunction",
    "PoleEvaluationError",
    "QuantumRange",
    "build_basis",
    "canonical_triple",
    "census",
    "classify_point",
    "code_matrix",
    "curve_params",
    "d_ord",
    "distinguished_point",
    "enumerate_points",
    "eval_basis",
    "evaluation_points",
    "field_context",
    "frobenius_dimension_gk1",
    "frobenius_dimension_gk2",
    "frobenius_dimensions_differ",
    "holomorphic_gap_set",
    "is_telescopic",
    "k_max",
    "make_field",
    "matrix_rank",
    "min_weight_exhaustive",
    "nu",
    "orbit_semigroup",
    "quantum_table",
    "range_high_degree",
    "range_order_bound",
    "semigroup_o1",
    "semigroup_o2",
    "table",
    "telescopic_genus",
    "verify_partition",
    "write_matrix",
]

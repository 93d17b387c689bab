"""Exact arithmetic for qudit stabilizer groups over Z_D.

Pauli products are kept in the canonical form w^phase * prod X_i^{x_i} Z_i^{z_i}
with all bookkeeping done modulo D, for any D >= 2. On top sit check-matrix
presentations, Smith normal form over Z_D with full operation logs, reduction
to the standard block form with realizing gate sequences, and a dense
complex-matrix oracle for small systems.
"""

from __future__ import annotations

from ._accel import BACKEND, IMPLEMENTATIONS, additive_span, pauli_closure
from ._config import DEFAULT_DENSE_BOUND, dense_bound
from .checkmatrix import (
    StabilizerPresentation,
    ValidityReport,
    apply_row_op,
    code_dimension,
    contains,
    from_generators,
    group_equal,
    group_order,
    is_valid,
    row_add,
    row_scale,
    row_swap,
    to_generators,
)
from .clifford import (
    GateOp,
    cnot,
    column_op_to_gates,
    conjugate_pauli,
    conjugate_presentation,
    cphase,
    format_gate,
    format_gates,
    fourier,
    gate_to_dense,
    mult,
    parse_gate,
    parse_gates,
    swap,
)
from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    IndexOutOfRange,
    InternalError,
    InvalidStabilizer,
    NotAUnit,
    OracleTooLarge,
    PauliSyntaxError,
    QuditStabError,
    TooManyGenerators,
    UnrealizableOp,
)
from .modring import (
    associate_unit,
    check_modulus,
    divide,
    gcd_ext,
    inverse,
    is_unit,
    stab_coeff,
)
from .oracle import (
    IdentityCheck,
    IdentityReport,
    assert_identities,
    enumerate_group,
    pauli_to_dense,
    projector,
    row_span,
    row_span_order,
)
from .pauli import (
    PauliProduct,
    commutation_phase,
    commutes,
    format_pauli,
    identity,
    multiply,
    order,
    parse_pauli,
    power,
    single_x,
    single_z,
)
from .snf import (
    ElementaryOp,
    SnfCheck,
    SnfDecomposition,
    add_cols,
    add_rows,
    apply_elementary,
    diagonal_span_order,
    invert_matrix,
    scale_col,
    scale_row,
    smith_normal_form,
    solve_linear,
    swap_cols,
    swap_rows,
    verify_snf,
)
from .standard_form import FormCheck, StandardForm, check_standard_invariants, standardize, transcript

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_DENSE_BOUND",
    "DimensionMismatch",
    "ElementaryOp",
    "FormCheck",
    "GateOp",
    "GroupTooLarge",
    "IMPLEMENTATIONS",
    "IdentityCheck",
    "IdentityReport",
    "IndexOutOfRange",
    "InternalError",
    "InvalidStabilizer",
    "NotAUnit",
    "OracleTooLarge",
    "PauliProduct",
    "PauliSyntaxError",
    "QuditStabError",
    "SnfCheck",
    "SnfDecomposition",
    "StabilizerPresentation",
    "StandardForm",
    "TooManyGenerators",
    "UnrealizableOp",
    "ValidityReport",
    "add_cols",
    "add_rows",
    "additive_span",
    "apply_elementary",
    "apply_row_op",
    "assert_identities",
    "associate_unit",
    "check_modulus",
    "check_standard_invariants",
    "cnot",
    "code_dimension",
    "column_op_to_gates",
    "commutation_phase",
    "commutes",
    "conjugate_pauli",
    "conjugate_presentation",
    "contains",
    "cphase",
    "dense_bound",
    "diagonal_span_order",
    "divide",
    "enumerate_group",
    "format_gate",
    "format_gates",
    "format_pauli",
    "fourier",
    "from_generators",
    "gate_to_dense",
    "gcd_ext",
    "group_equal",
    "group_order",
    "identity",
    "inverse",
    "invert_matrix",
    "is_unit",
    "is_valid",
    "mult",
    "multiply",
    "order",
    "parse_gate",
    "parse_gates",
    "parse_pauli",
    "pauli_closure",
    "pauli_to_dense",
    "power",
    "projector",
    "row_add",
    "row_scale",
    "row_span",
    "row_span_order",
    "row_swap",
    "scale_col",
    "scale_row",
    "single_x",
    "single_z",
    "smith_normal_form",
    "solve_linear",
    "stab_coeff",
    "standardize",
    "swap",
    "swap_cols",
    "swap_rows",
    "to_generators",
    "transcript",
    "verify_snf",
]

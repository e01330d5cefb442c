"""Exact eigenfunctions of Hamming graphs and their strong nodal domains.

Grid functions travel as plain dicts ``{"n": int, "q": int, "values": [str]}``
with exact rational strings ("p" or "p/q"), matching the CLI file format.
"""

from hamnodal._core import (
    HamnodalError,
    associated_function,
    check_courant,
    construct_q2_even,
    construct_q2_odd,
    construct_q3,
    construct_q_ge4,
    construct_snd2,
    courant_position,
    eigenspace_basis,
    eigenvalue,
    evaluate,
    extend_by_constant,
    figure5_functions,
    is_eigenfunction,
    lambda1_snd2,
    laplacian_apply,
    level_band_partition,
    multiplicity,
    nodal_report,
    phi,
    psi,
    search,
    snd,
    tensor_product,
    translate_function,
    translate_partition,
    type_a_partition,
    type_b_partition,
    u2_33,
    verify_conjecture_evidence,
    verify_equitable,
    wnd,
)

__all__ = [
    "HamnodalError",
    "associated_function",
    "check_courant",
    "construct_q2_even",
    "construct_q2_odd",
    "construct_q3",
    "construct_q_ge4",
    "construct_snd2",
    "courant_position",
    "eigenspace_basis",
    "eigenvalue",
    "evaluate",
    "extend_by_constant",
    "figure5_functions",
    "is_eigenfunction",
    "lambda1_snd2",
    "laplacian_apply",
    "level_band_partition",
    "multiplicity",
    "nodal_report",
    "phi",
    "psi",
    "search",
    "snd",
    "tensor_product",
    "translate_function",
    "translate_partition",
    "type_a_partition",
    "type_b_partition",
    "u2_33",
    "verify_conjecture_evidence",
    "verify_equitable",
    "wnd",
]

__version__ = "0.1.0"

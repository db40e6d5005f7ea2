"""Exact skein-theoretic representations of punctured-sphere mapping class groups at roots of unity."""

__version__ = "0.1.0"

from .blocks import ScalarBlockMatrix
from .certify import (
    OrderCertificate,
    certify_power_subgroup,
    finite_order_check,
    halftwist_trivial,
    infinite_order_certificate,
    scan_f2,
    verify_certificate,
)
from .coloring import (
    BasisLayout,
    Coloring,
    CountProfile,
    attained_values,
    count_profile,
    enumerate_basis,
    is_q_admissible,
)
from .cyclo import CycloElem, RootChoice, conj_q, qint, qpow, sign_real
from .hyperelliptic import build_table, certify_Nkl, delta_scalar_set, verify_twist_conditions
from .recoupling import matrix_A, matrix_X, sixj
from .rep import (
    Commutator2,
    CommutatorM,
    FullTwist,
    HalfTwistPow,
    SeparatingTwistPow,
    SigmaN,
    assemble_M,
    represent,
    rho_commutator2,
    trace_f,
    twist_coeff,
)

__all__ = [
    "BasisLayout", "Coloring", "Commutator2", "CommutatorM", "CountProfile", "CycloElem",
    "FullTwist", "HalfTwistPow", "OrderCertificate", "RootChoice", "ScalarBlockMatrix",
    "SeparatingTwistPow", "SigmaN", "assemble_M", "attained_values", "build_table",
    "certify_Nkl", "certify_power_subgroup", "conj_q", "count_profile", "delta_scalar_set",
    "enumerate_basis", "finite_order_check", "halftwist_trivial", "infinite_order_certificate",
    "is_q_admissible", "matrix_A", "matrix_X", "verify_twist_conditions", "qint", "qpow", "represent",
    "rho_commutator2", "scan_f2", "sign_real", "sixj", "trace_f", "twist_coeff",
    "verify_certificate",
]

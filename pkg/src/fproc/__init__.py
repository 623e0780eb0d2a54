"""Framed toric varieties: f-duality, mirror polynomials, lattice invariants.

Exact integer/rational arithmetic throughout.  The layers build on each
other: integer linear algebra (`lattice`), rational polytopes and lattice
point counts (`polytope`), complete fans and support functions (`fan`), the
partitioned dualization process (`fprocess`), mirror Cox polynomials and
Landau-Ginzburg models (`mirror`), and closed-form invariants (`hodge`).
"""

from .fprocess import (
    CaseWF,
    FProcessData,
    InfeasibleDegrees,
    PartitionInvalid,
    PartitionedFraming,
    canonical_projective_framing,
    expected_dual_framing,
    f_dual,
    f_process,
    is_calibrated,
    projective_fan_matrix,
    weak_projective_framing,
)
from .hodge import (
    CrossCheckMismatch,
    HodgeReport,
    NotGorenstein,
    OutOfHypotheses,
    PremiseFailed,
    StringyData,
    blow_up_points,
    c_prime,
    calabi_yau_h11,
    facet_interior_count,
    hodge_mirror_O,
    hodge_projective_ci,
    identity_A,
    m_Y_hypersurface,
    mirror_hypersurface_h,
    phi_a0,
    psi_shells,
    stringy_c,
    stringy_data,
    y34_report,
)
from .mirror import (
    CoxPolynomial,
    EmptyNewton,
    LGModel,
    NotHomogeneous,
    check_homogeneous,
    lg_model,
    mirror_polynomial_f,
    mirror_polynomial_wf,
    modulus_count,
    primal_polynomial,
)
from .polytope import Polytope, from_framing

__all__ = [
    "CaseWF",
    "CoxPolynomial",
    "CrossCheckMismatch",
    "EmptyNewton",
    "FProcessData",
    "HodgeReport",
    "InfeasibleDegrees",
    "LGModel",
    "NotGorenstein",
    "NotHomogeneous",
    "OutOfHypotheses",
    "PartitionInvalid",
    "PartitionedFraming",
    "Polytope",
    "PremiseFailed",
    "StringyData",
    "blow_up_points",
    "c_prime",
    "calabi_yau_h11",
    "canonical_projective_framing",
    "check_homogeneous",
    "expected_dual_framing",
    "f_dual",
    "f_process",
    "facet_interior_count",
    "from_framing",
    "hodge_mirror_O",
    "hodge_projective_ci",
    "identity_A",
    "is_calibrated",
    "lg_model",
    "m_Y_hypersurface",
    "mirror_hypersurface_h",
    "mirror_polynomial_f",
    "mirror_polynomial_wf",
    "modulus_count",
    "phi_a0",
    "primal_polynomial",
    "projective_fan_matrix",
    "psi_shells",
    "stringy_c",
    "stringy_data",
    "weak_projective_framing",
    "y34_report",
]

__version__ = "0.1.0"

"""Exact toolkit for multiplicative omega-Lie algebras.

Verification of the defining axioms, construction of the derived objects
(dual representations, semidirect products, doubles, cobrackets, operator
lifts), residuals of the twisted Yang-Baxter equation, and a numerical
search for skew solutions with exact re-verification.
"""

from .algebras import (
    GeneralizedOmegaLieAlgebra,
    LeftSymmetricAlgebra,
    OmegaLieAlgebra,
    abelian,
    admissible_subspace,
    center,
    check_generalized,
    check_lsa,
    check_omega_lie,
    infer_r,
    left_symmetric,
    omega_lie,
    subadjacent,
)
from .errors import (
    AxiomViolation,
    BundleFormatError,
    DimensionMismatch,
    EmptyDecomposition,
    EmptyParameterSpace,
)
from .linalg import Matrix, Rat, Subspace, ThreeTensor, Vector, nullspace, rat, rat_str, solve_linear
from .reports import Clause, Report, Violation

__version__ = "0.1.0"

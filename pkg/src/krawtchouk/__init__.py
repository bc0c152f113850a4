"""Exact Krawtchouk, symmetric Krawtchouk and Sylvester-Hadamard matrix algebra."""

from .condensation import (
    WeightClassPartition,
    binary_weight,
    binomial_via_contraction,
    condense_hadamard,
    krawtchouk_recursion_step,
    square_contraction,
    symmetric_recursion_step,
    weight_classes,
    weight_condense,
)
from .config import Limits, get_limits, override_limits, set_limits
from .core import (
    binomial_diag,
    kac_matrix,
    krawtchouk_entry,
    krawtchouk_matrix,
    krawtchouk_transform,
    kronecker,
    lambda_matrix,
    sylvester_hadamard,
    symmetric_krawtchouk,
)
from .errors import ConsistencyError, DomainError, KrawtchoukError, ResourceError
from .exact import ExactMatrix, RationalMatrix, commutator
from .multivariate import (
    SiteDistribution,
    compositions,
    gk_explicit_sum,
    gk_lauricella,
    gk_polynomial,
    gk_recurrence_check,
    lauricella_fb,
    multinomial_orthogonality_check,
)
from .poly import PolyMatrix
from .report import CheckReport
from .symtensor import (
    diagonalize_xf_bar,
    hbar_equals_k_transpose,
    symmetric_representation,
    symmetric_representation_poly,
    top_row_generating,
    xf_bar,
    xg_bar,
)
from .walks import (
    FiniteDistribution,
    SignPath,
    UrnTrajectory,
    abar_matrix,
    binomial_orthogonality_check,
    elementary_symmetric_eval,
    evolve_distribution,
    gauss_2f1_terminating,
    simulate_urn,
    urn_step_matrix,
)

__version__ = "0.1.0"

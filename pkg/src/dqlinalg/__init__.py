"""Dual quaternion matrix algebra: decompositions, norms and trace inequalities."""

from .decompositions import (
    BlockStructure,
    DualSVD,
    HermEig,
    dq_hermitian_eig,
    dq_svd,
    eigenvalues,
    singular_values,
    spectral_norm,
)
from .dual_quaternion import DualQuaternion, dqconj, dqinverse, dqmul, dq_is_appreciable, magnitude
from .dual_scalar import DualNumber, Ordering, compare, dual_abs, inverse, sqrt
from .errors import (
    BadK,
    ConvergenceFailure,
    DimensionMismatch,
    DQError,
    IllConditionedGap,
    NegativeArgument,
    NotHermitian,
    NotRepresentable,
    NotSquare,
    ParseError,
    PreconditionViolated,
    Singular,
)
from .inequalities import (
    InequalityReport,
    cauchy_schwarz_check,
    compare_tolerant,
    hermitian_part_vs_singular,
    hermitian_trace_check,
    hoffman_wielandt_hermitian,
    hoffman_wielandt_singular,
    ky_fan_partial_trace_check,
    ordered_product_dominance,
    von_neumann_check,
    weak_majorization_check,
)
from .matrix import (
    DQMatrix,
    DQVector,
    conj_transpose,
    frobenius_norm,
    inner_product,
    is_hermitian,
    is_partially_unitary,
    is_unitary,
    matmul,
    trace,
    vec_norm2,
)
from .quaternion import Quaternion

__version__ = "0.1.0"

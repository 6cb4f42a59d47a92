"""exacteig — exact eigenvectors over the Gaussian rationals.

Eigenvectors, Jordan chains, diagonalizations, matrix powers, and
linear-ODE solutions computed in exact ℚ(i) arithmetic. The central
extraction method reads eigenvectors directly off products of shifted
matrices (A − λI) instead of solving linear systems; a classical
null-space oracle is included for independent cross-checking.

Scalar arithmetic runs on a compiled kernel when the extension built,
with a pure-Python fallback selected automatically at import time (set
``EXACTEIG_BACKEND=compiled|pure|auto`` to override).
"""

from .charmatrix import (
    CharacteristicMatrix,
    EigenSystem,
    Eigenspace,
    characteristic_matrix,
    column_space_intersection,
    combined_characteristic_matrix,
    complementary_product,
    cross_eigenvector_3x3,
    eigensystem,
    eigenvectors_2x2,
    is_diagonalizable,
    left_product_eigenvectors,
    product_eigenvectors,
    two_spectrum_eigenvectors,
)
from .errors import (
    AllRowsParallel,
    Defective,
    DimensionMismatch,
    DivisionByZero,
    ExactEigError,
    GenerationFailed,
    InternalInconsistency,
    InvalidSpectrum,
    IrrationalSpectrum,
    NotDiagonalizable,
    NotInSpectrum,
    NotSquare,
    ParseError,
    RankTooLarge,
    RealifyOnComplexMatrix,
    SchemaError,
    Singular,
    SpectrumTooLarge,
    TargetNotInSpectrum,
    WrongSpectrum,
    ZeroVector,
)
from .factorizations import (
    Diagonalization,
    OdeSolutionTerm,
    TrigPart,
    diagonalize,
    matrix_power,
    matrix_power_direct,
    ode_general_solution,
    ode_term_is_solution,
)
from .io_json import (
    matrix_to_json,
    parse_matrix_json,
    parse_spectrum_json,
    spectrum_to_json,
    vector_to_json,
)
from .jordan import (
    JordanChain,
    JordanForm,
    build_chains,
    generalized_eigenvectors,
    jordan_form,
    shifted_power_ranks,
)
from .matrices import (
    Matrix,
    OpCounter,
    Vector,
    cross3,
    det,
    hstack,
    inverse,
    is_independent,
    matmul,
    matvec,
    normalize_eigenvector,
    nullspace_basis,
    rank,
    rref,
    subtract_scalar_diag,
    trace,
)
from .scalars import (
    BACKEND_NAME,
    GaussianRational,
    Rational,
    active_backend,
    format_rational,
    format_scalar,
    parse_scalar,
    to_scalar,
)
from .spectra import (
    Polynomial,
    Spectrum,
    charpoly,
    find_spectrum,
    format_polynomial,
    multiplicity_of,
    shift_spectrum,
    verify_spectrum,
)
from .verification import (
    GeneratorConfig,
    SpanBasis,
    SplitMix64,
    cayley_hamilton_check,
    oracle_eigenvectors,
    random_spectral_matrix,
    residual_check,
    span_equal,
)

__version__ = "0.1.0"

__all__ = [
    "AllRowsParallel",
    "BACKEND_NAME",
    "CharacteristicMatrix",
    "Defective",
    "Diagonalization",
    "DimensionMismatch",
    "DivisionByZero",
    "EigenSystem",
    "Eigenspace",
    "ExactEigError",
    "GaussianRational",
    "GenerationFailed",
    "GeneratorConfig",
    "InternalInconsistency",
    "InvalidSpectrum",
    "IrrationalSpectrum",
    "JordanChain",
    "JordanForm",
    "Matrix",
    "NotDiagonalizable",
    "NotInSpectrum",
    "NotSquare",
    "OdeSolutionTerm",
    "OpCounter",
    "ParseError",
    "Polynomial",
    "RankTooLarge",
    "Rational",
    "RealifyOnComplexMatrix",
    "SchemaError",
    "Singular",
    "SpanBasis",
    "Spectrum",
    "SpectrumTooLarge",
    "SplitMix64",
    "TargetNotInSpectrum",
    "TrigPart",
    "Vector",
    "WrongSpectrum",
    "ZeroVector",
    "active_backend",
    "build_chains",
    "cayley_hamilton_check",
    "characteristic_matrix",
    "charpoly",
    "column_space_intersection",
    "combined_characteristic_matrix",
    "complementary_product",
    "cross3",
    "cross_eigenvector_3x3",
    "det",
    "diagonalize",
    "eigensystem",
    "eigenvectors_2x2",
    "find_spectrum",
    "format_polynomial",
    "format_rational",
    "format_scalar",
    "generalized_eigenvectors",
    "hstack",
    "inverse",
    "is_diagonalizable",
    "is_independent",
    "jordan_form",
    "left_product_eigenvectors",
    "matmul",
    "matrix_power",
    "matrix_power_direct",
    "matrix_to_json",
    "matvec",
    "multiplicity_of",
    "normalize_eigenvector",
    "nullspace_basis",
    "ode_general_solution",
    "ode_term_is_solution",
    "oracle_eigenvectors",
    "parse_matrix_json",
    "parse_scalar",
    "parse_spectrum_json",
    "product_eigenvectors",
    "random_spectral_matrix",
    "rank",
    "residual_check",
    "rref",
    "shift_spectrum",
    "shifted_power_ranks",
    "span_equal",
    "spectrum_to_json",
    "subtract_scalar_diag",
    "to_scalar",
    "trace",
    "two_spectrum_eigenvectors",
    "vector_to_json",
    "verify_spectrum",
]

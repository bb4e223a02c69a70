"""Exact-arithmetic eigenvalue bounds and determinant identities for
inverse inequalities on the reference square.

The package assembles the generalized eigenvalue problem behind the
inverse inequality on (-1,1)^2 in exact rational arithmetic, verifies the
closed-form determinant identities that factor it, and computes certified
enclosures for the maximal eigenvalues, their bounds, and their asymptotic
diagnostics.
"""

from .exact import (
    Rational,
    bits_to_digits,
    cbrt_bounds,
    format_decimal,
    pi_bounds,
    pochhammer,
    sqrt_bounds,
)
from .polynomial import RatPoly, poly_eval, poly_interpolate
from .matrices import (
    PolyMatrix,
    RatMatrix,
    build_boundary,
    build_legendre_hook,
    build_mass,
    build_mass_1d,
    build_parity_block,
    build_pencil,
    build_stiffness,
    build_stiffness_1d,
    index_split,
    kronecker,
    parity_permutation,
    split_parity_blocks,
)
from .charpoly import (
    CharPoly,
    InverseColumn,
    PrefactorConstant,
    char_coeff,
    char_poly,
    char_poly_by_summation,
    det_prefactor,
    inverse_column,
    recurrence_residual,
    verify_inverse_identity,
    verify_recurrence,
)
from .determinants import (
    DetReport,
    cauchy_matrix,
    det_poly,
    det_rational,
    verify_boundary,
    verify_cauchy,
    verify_corollary_full,
    verify_kron_factorization,
    verify_legendre_hooks,
    verify_thm31,
)
from .roots import Enclosure, RootIsolationError, root_offset_bounds
from .spectra import (
    AsymptoticRow,
    BoundReport,
    FloatCrossReport,
    MonotoneReport,
    QuadraticSurd,
    RootTable,
    all_roots,
    asymptotic_table,
    bound_lower,
    bound_report,
    bound_upper,
    bound_upper_radical,
    boundary_factor_roots,
    check_monotone,
    comparison_check,
    cubic_bound_poly,
    float_eigen_crosscheck,
    inverse_constant,
    max_boundary_eigenvalue,
    max_root,
    smallest_root_of_index,
)

__version__ = "0.1.0"

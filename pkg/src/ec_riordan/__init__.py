"""Exact arithmetic for a family of elliptic curves through the origin,
the power series their branches generate, and the Riordan arrays, lattice
paths, Hankel transforms, Somos sequences and continued fractions that all
turn out to encode the same data.

Everything runs over Fraction.  No floats, no tolerances.
"""

from .series import (
    InsufficientOrderError,
    NonUnitConstantError,
    NonzeroInnerConstantError,
    NotRevertibleError,
    Series,
    SeriesError,
    ZeroConstantTermError,
    catalan_gf,
)
from .curve import (
    Curve,
    INFINITY,
    Point,
    PointNotOnCurveError,
    SingularCurveError,
)
from .riordan import (
    AMatrix,
    RiordanArray,
    g_family_params,
    gamma_family_params,
    identity_rows,
    orbit_shift,
    pseudo_involution_check,
    riordan_build,
    riordan_from_recurrence,
    riordan_multiply,
    verify_kernel,
)
from .paths import (
    BRUTE_FORCE_LIMIT,
    SearchSpaceTooLargeError,
    StepSet,
    brute_force_count,
    brute_force_table,
    dp_count,
    stepset_for_g,
    stepset_for_gamma,
    stepset_orbit,
)
from .transforms import (
    InsufficientDepthError,
    InsufficientTermsError,
    JFraction,
    SomosCheck,
    SomosParams,
    TorsionDepthError,
    ZeroXCoordinateError,
    hankel_point_product,
    hankel_transform,
    jfrac_eval,
    jfrac_extract,
    jfrac_from_points,
    somos_params,
    somos_params_from_amatrix,
    somos_verify,
)
from .pipeline import (
    CheckResult,
    FormulaDomainError,
    VerifyReport,
    amatrix_gf,
    closed_form_g,
    closed_form_gamma,
    derive_g,
    derive_gamma,
    full_verify,
    g_coefficient_formula,
    gamma_coefficient_formula,
    orbit_params,
)

__version__ = "0.1.0"

__all__ = [
    "AMatrix",
    "BRUTE_FORCE_LIMIT",
    "CheckResult",
    "Curve",
    "FormulaDomainError",
    "INFINITY",
    "InsufficientDepthError",
    "InsufficientOrderError",
    "InsufficientTermsError",
    "JFraction",
    "NonUnitConstantError",
    "NonzeroInnerConstantError",
    "NotRevertibleError",
    "Point",
    "PointNotOnCurveError",
    "RiordanArray",
    "SearchSpaceTooLargeError",
    "Series",
    "SeriesError",
    "SingularCurveError",
    "SomosCheck",
    "SomosParams",
    "StepSet",
    "TorsionDepthError",
    "VerifyReport",
    "ZeroConstantTermError",
    "ZeroXCoordinateError",
    "amatrix_gf",
    "brute_force_count",
    "brute_force_table",
    "catalan_gf",
    "closed_form_g",
    "closed_form_gamma",
    "derive_g",
    "derive_gamma",
    "dp_count",
    "full_verify",
    "g_coefficient_formula",
    "g_family_params",
    "gamma_coefficient_formula",
    "gamma_family_params",
    "hankel_point_product",
    "hankel_transform",
    "identity_rows",
    "jfrac_eval",
    "jfrac_extract",
    "jfrac_from_points",
    "orbit_params",
    "orbit_shift",
    "pseudo_involution_check",
    "riordan_build",
    "riordan_from_recurrence",
    "riordan_multiply",
    "somos_params",
    "somos_params_from_amatrix",
    "somos_verify",
    "stepset_for_g",
    "stepset_for_gamma",
    "stepset_orbit",
    "verify_kernel",
    "__version__",
]

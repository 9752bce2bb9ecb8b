"""Exact q-series arithmetic for extremal partition functions and
Monster moonshine checks."""

from .errors import (
    BeyondTruncation,
    IdentitySyntaxError,
    MoonshineError,
    NegativeCoefficient,
    NegativeValue,
    NonAffineIndex,
    NonIntegralSolve,
    NonUnitLeadingCoefficient,
    OddSubscript,
    UnknownForm,
    XDependentCoefficient,
)
from .extremal import (
    ExtremalFamily,
    allowed_count,
    build_family,
    coefficient_poly,
    solve_g0,
    specialize,
)
from .forms import (
    FormCatalog,
    NiemeierRecord,
    catalog,
    delta,
    eisenstein4,
    j_classical,
    j_normalized,
    j_power,
    lookup,
    niemeier_theta,
)
from .identities import (
    Identity,
    IdentityReport,
    builtin_table1,
    evaluate,
    parse,
    parse_lines,
    run_suite,
)
from .monster import (
    Decomposition,
    MonsterDims,
    bundled_dims,
    decompose_series,
    greedy_decompose,
    verify,
)
from .series import IntPoly, LaurentSeries

__version__ = "0.1.0"

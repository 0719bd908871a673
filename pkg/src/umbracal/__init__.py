"""umbracal: Hermite numbers of arbitrary order, the umbral polynomial
algebra they generate, verified integral identities, lacunary generating
functions, and spectral solvers for higher-order heat equations.

Every identity in the library is checked by at least two independent
computational routes; `umbracal.verify` collects those checks and the
`umbracal` CLI surfaces them.
"""

from .analysis import (
    GaussianSignal,
    QuadratureResult,
    QuadratureSpec,
    SampledSignal,
    Scheme,
    Signal,
    airy,
    airy_exp_identity,
    erf_series,
    gabor_direct,
    gabor_series,
    gamma,
    integrate,
    mellin_gaussian,
    quartic_gaussian,
    super_gaussian_integral,
    super_gaussian_integrand,
)
from .heat import (
    EvolutionSpec,
    Field,
    GaussianData,
    Grid,
    IllPosedEvolutionError,
    PolynomialData,
    TruncationBudgetError,
    evolve_airy,
    evolve_gw_quartic,
    evolve_monomial,
    evolve_spectral,
)
from .lacunary import (
    LacunaryEval,
    LacunaryRoute,
    lacunary_direct,
    lacunary_factored,
    lacunary_umbral,
)
from .numbers import (
    HermiteNumberTable,
    build_table,
    hermite_number,
    hermite_number_fractional,
)
from .polynomials import (
    PolyFamily,
    PolyFamilyId,
    dcubic_poly,
    dgauss_poly,
    dseries,
    hermite2,
    hermite3_3var,
    hermite_m,
    hermite_multivar,
    multinomial_expansion,
)
from .series import SeriesResult
from .umbral import UmbraId, UmbralPoly, monomial, project, umbral_exp

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # numbers
    "HermiteNumberTable",
    "hermite_number",
    "hermite_number_fractional",
    "build_table",
    # umbral
    "UmbraId",
    "UmbralPoly",
    "monomial",
    "project",
    "umbral_exp",
    # polynomials
    "PolyFamily",
    "PolyFamilyId",
    "hermite2",
    "hermite_m",
    "hermite3_3var",
    "hermite_multivar",
    "multinomial_expansion",
    "dgauss_poly",
    "dcubic_poly",
    "dseries",
    # analysis
    "SeriesResult",
    "QuadratureSpec",
    "QuadratureResult",
    "Scheme",
    "integrate",
    "gamma",
    "airy",
    "mellin_gaussian",
    "quartic_gaussian",
    "super_gaussian_integrand",
    "super_gaussian_integral",
    "erf_series",
    "airy_exp_identity",
    "GaussianSignal",
    "SampledSignal",
    "Signal",
    "gabor_direct",
    "gabor_series",
    # heat
    "Grid",
    "Field",
    "EvolutionSpec",
    "IllPosedEvolutionError",
    "TruncationBudgetError",
    "PolynomialData",
    "GaussianData",
    "evolve_spectral",
    "evolve_airy",
    "evolve_monomial",
    "evolve_gw_quartic",
    # lacunary
    "LacunaryEval",
    "LacunaryRoute",
    "lacunary_direct",
    "lacunary_umbral",
    "lacunary_factored",
]

"""Certified entropy bounds, baselines, and oracles for finite mixture models.

The package computes the exact floor and ceiling of a mixture's entropy,
certified pairwise-distance lower and upper bounds that converge to the truth
in both the collapsed and the fully separated regimes, kernel-density and
expected-likelihood baselines, mutual-information bounds across additive
Gaussian noise channels, and the Monte Carlo and quadrature oracles used to
validate all of the above.
"""

from .errors import (
    AlphaOutOfRange,
    DegenerateBox,
    DegreesOfFreedomTooSmall,
    DimensionMismatch,
    EmptyMixture,
    InsufficientSamples,
    MixedFamilies,
    MixtureError,
    NegativeWeight,
    NotHomoscedastic,
    NotOneDimensional,
    NotPositiveDefinite,
    UnsupportedDistance,
    ZeroWeightSum,
)
from .estimators import (
    BHATTACHARYYA,
    DMAX,
    DMIN,
    KL,
    DistanceKind,
    EstimateReport,
    bias_bound,
    chernoff_distance,
    clustered_gap_bound,
    elk_estimate,
    estimate_all,
    kde_estimate,
    lower_bound_bd,
    lower_bound_chernoff,
    pairwise_distance_matrix,
    pairwise_estimate,
    upper_bound_kl,
)
from .experiments import (
    CSV_HEADER,
    ESTIMATOR_ORDER,
    EXPERIMENTS,
    SweepConfig,
    SweepRow,
    default_grid,
    format_csv,
    gen_gaussian_clustered,
    gen_gaussian_spread,
    gen_gaussian_wishart,
    gen_uniform_clustered,
    gen_uniform_gamma,
    gen_uniform_spread,
    read_csv,
    render_svg,
    run_sweep,
    wishart_bartlett,
    write_csv,
)
from .gaussian import (
    GaussianComponent,
    gaussian_bd,
    gaussian_chernoff,
    gaussian_elk_cross,
    gaussian_elk_log_cross,
    gaussian_kl,
    gaussian_renyi,
    homoscedastic_chernoff_lower,
    homoscedastic_kl_upper,
)
from .mixture import Grouping, MixtureModel
from .mixture_io import load_mixture, load_noise_cov, parse_mixture
from .montecarlo import McResult, mc_entropy, quad_cross_term_1d, quad_entropy_1d
from .mutual_info import AwgnChannel, awgn_push, mi_bounds
from .uniform import (
    UniformBox,
    box_overlap,
    uniform_bd,
    uniform_elk_cross,
    uniform_elk_log_cross,
    uniform_kl,
)

__all__ = [
    "AlphaOutOfRange",
    "AwgnChannel",
    "BHATTACHARYYA",
    "CSV_HEADER",
    "DMAX",
    "DMIN",
    "DegenerateBox",
    "DegreesOfFreedomTooSmall",
    "DimensionMismatch",
    "DistanceKind",
    "ESTIMATOR_ORDER",
    "EXPERIMENTS",
    "EmptyMixture",
    "EstimateReport",
    "GaussianComponent",
    "Grouping",
    "InsufficientSamples",
    "KL",
    "McResult",
    "MixedFamilies",
    "MixtureError",
    "MixtureModel",
    "NegativeWeight",
    "NotHomoscedastic",
    "NotOneDimensional",
    "NotPositiveDefinite",
    "SweepConfig",
    "SweepRow",
    "UniformBox",
    "UnsupportedDistance",
    "ZeroWeightSum",
    "awgn_push",
    "bias_bound",
    "box_overlap",
    "chernoff_distance",
    "clustered_gap_bound",
    "default_grid",
    "elk_estimate",
    "estimate_all",
    "format_csv",
    "gaussian_bd",
    "gaussian_chernoff",
    "gaussian_elk_cross",
    "gaussian_elk_log_cross",
    "gaussian_kl",
    "gaussian_renyi",
    "gen_gaussian_clustered",
    "gen_gaussian_spread",
    "gen_gaussian_wishart",
    "gen_uniform_clustered",
    "gen_uniform_gamma",
    "gen_uniform_spread",
    "homoscedastic_chernoff_lower",
    "homoscedastic_kl_upper",
    "kde_estimate",
    "load_mixture",
    "load_noise_cov",
    "lower_bound_bd",
    "lower_bound_chernoff",
    "mc_entropy",
    "mi_bounds",
    "pairwise_distance_matrix",
    "pairwise_estimate",
    "parse_mixture",
    "quad_cross_term_1d",
    "quad_entropy_1d",
    "read_csv",
    "render_svg",
    "run_sweep",
    "uniform_bd",
    "uniform_elk_cross",
    "uniform_elk_log_cross",
    "uniform_kl",
    "upper_bound_kl",
    "wishart_bartlett",
    "write_csv",
]

__version__ = "0.1.0"

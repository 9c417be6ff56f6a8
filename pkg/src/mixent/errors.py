"""Exception types raised by mixture construction and the entropy estimators."""


class MixtureError(ValueError):
    """Base class for all mixture-model and estimator errors."""


class EmptyMixture(MixtureError):
    """A mixture needs at least one component."""


class NegativeWeight(MixtureError):
    """Component weights must be non-negative."""


class ZeroWeightSum(MixtureError):
    """Component weights must not all be zero."""


class DimensionMismatch(MixtureError):
    """Vectors or components disagree on dimensionality."""


class MixedFamilies(MixtureError):
    """All components of a mixture must come from one family."""


class NotPositiveDefinite(MixtureError):
    """Covariance matrix failed the symmetry or Cholesky check."""


class DegenerateBox(MixtureError):
    """A box component needs strictly positive side lengths."""


class AlphaOutOfRange(MixtureError):
    """The order parameter alpha lies outside its admissible interval."""


class NotHomoscedastic(MixtureError):
    """The shared-covariance fast path needs equal covariances."""


class UnsupportedDistance(MixtureError):
    """The requested pairwise distance is not defined for this family."""


class DegreesOfFreedomTooSmall(MixtureError):
    """Wishart sampling needs at least as many degrees of freedom as dimensions."""


class InsufficientSamples(MixtureError):
    """Monte Carlo estimation needs at least two samples."""


class NotOneDimensional(MixtureError):
    """Quadrature oracles only handle one-dimensional mixtures."""

"""Independent oracles: Monte Carlo entropy and one-dimensional quadrature.

These deliberately share no formulas with the closed-form modules; they exist
to cross-check them.  The quadrature routines use composite Simpson rules on
uniform grids, splitting the integration range at box-support edges so that
piecewise-smooth integrands are handled at full accuracy.
"""

from __future__ import annotations

import math

import numpy as np

from ._numeric import fsum
from .errors import InsufficientSamples, MixtureError, NotOneDimensional
from .mixture import MixtureModel
from .uniform import UniformBox

__all__ = ["McResult", "mc_entropy", "quad_entropy_1d", "quad_cross_term_1d"]

_MIN_POINTS = 101


class McResult:
    """Monte Carlo estimate with its standard error and sample count."""

    __slots__ = ("estimate", "stderr", "samples")

    def __init__(self, estimate: float, stderr: float, samples: int):
        self.estimate = float(estimate)
        self.stderr = float(stderr)
        self.samples = int(samples)

    def __repr__(self):
        return f"McResult(estimate={self.estimate!r}, stderr={self.stderr!r}, samples={self.samples})"


def mc_entropy(mixture: MixtureModel, samples: int, seed: int, shards: int = 1) -> McResult:
    """Estimate mixture entropy as the sample mean of -ln density.

    Parameters
    ----------
    mixture : MixtureModel
    samples : int
        Total number of draws, at least 2 so the standard error exists.
    seed : int
        Master seed.  Shard k draws from a generator built on
        ``numpy.random.SeedSequence(seed, spawn_key=(k,))``, i.e. substream
        keys are hashed from (seed, k), so a fixed (seed, shards) pair
        always reproduces the same estimate bit for bit.
    shards : int
        Number of independent substreams.  Per-shard values are concatenated
        in shard order before the single final reduction.

    Returns
    -------
    McResult
        estimate, stderr = sample standard deviation / sqrt(samples), samples.
    """
    samples = int(samples)
    if samples < 2:
        raise InsufficientSamples(f"need at least 2 samples, got {samples}")
    shards = int(shards)
    if shards < 1 or shards > samples:
        raise MixtureError(f"shard count must lie in [1, samples], got {shards}")
    base, extra = divmod(samples, shards)
    values = []
    for k in range(shards):
        count = base + (1 if k < extra else 0)
        if count == 0:
            continue
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(k,)))
        draws = mixture.sample(rng, count)
        values.append(-mixture.log_density(draws))
    stacked = np.concatenate(values)
    estimate = float(np.mean(stacked))
    spread = float(np.std(stacked, ddof=1))
    return McResult(estimate, spread / math.sqrt(samples), samples)


def _simpson(y: np.ndarray, step: float) -> float:
    # composite Simpson rule; y must have odd length >= 3
    return (step / 3.0) * float(
        y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum()
    )


def _box_edges(component) -> list[float]:
    if isinstance(component, UniformBox):
        return [float(component.lower[0]), float(component.upper[0])]
    return []


def _segments(lo: float, hi: float, edges) -> list[tuple[float, float]]:
    cuts = sorted({lo, hi, *(e for e in edges if lo < e < hi)})
    return list(zip(cuts[:-1], cuts[1:]))


def _component_density(component, xs: np.ndarray, midpoint: float) -> np.ndarray:
    """Component density on a grid that lies inside one smooth segment.

    Box components are classified once by the segment midpoint so that grid
    points sitting exactly on a support edge do not pick up jump values.
    """
    if isinstance(component, UniformBox):
        inside = component.lower[0] < midpoint < component.upper[0]
        value = math.exp(-component.log_volume) if inside else 0.0
        return np.full(xs.size, value)
    return np.exp(component.log_density(xs[:, None]))


def _segment_points(total_points: int, length: float, full_length: float) -> int:
    share = max(int(round(total_points * length / full_length)), 9)
    return share + 1 if share % 2 == 0 else share


def quad_entropy_1d(mixture: MixtureModel, lo: float, hi: float, points: int = 10001) -> float:
    """Quadrature value of -int p ln p over [lo, hi] for a 1-D mixture.

    [lo, hi] must cover essentially all mass (12 standard deviations past
    every Gaussian mean is ample).  The 0 ln 0 = 0 convention applies where
    the density vanishes.
    """
    if mixture.dim != 1:
        raise NotOneDimensional(f"quadrature oracle needs dimension 1, got {mixture.dim}")
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise MixtureError(f"empty integration range [{lo}, {hi}]")
    points = int(points)
    if points < _MIN_POINTS:
        raise InsufficientSamples(f"need at least {_MIN_POINTS} quadrature points, got {points}")

    edges = [e for k in mixture.active_indices() for e in _box_edges(mixture.components[k])]
    pieces = []
    for s0, s1 in _segments(lo, hi, edges):
        n = _segment_points(points, s1 - s0, hi - lo)
        xs = np.linspace(s0, s1, n)
        mid = 0.5 * (s0 + s1)
        dens = np.zeros(n)
        for k in mixture.active_indices():
            dens += mixture.weights[k] * _component_density(mixture.components[k], xs, mid)
        with np.errstate(divide="ignore", invalid="ignore"):
            integrand = np.where(dens > 0, -dens * np.log(dens), 0.0)
        pieces.append(_simpson(integrand, (s1 - s0) / (n - 1)))
    return fsum(pieces)


def _cover(component) -> tuple[float, float]:
    if isinstance(component, UniformBox):
        return float(component.lower[0]), float(component.upper[0])
    sd = math.sqrt(float(component.cov[0, 0]))
    return float(component.mean[0]) - 12.0 * sd, float(component.mean[0]) + 12.0 * sd


def quad_cross_term_1d(p, q, kind: str, alpha: float | None = None, points: int = 20001) -> float:
    """Quadrature value of a pairwise integrand for two 1-D components.

    kind selects the integrand:
      - "product":      p(x) q(x)              (expected-likelihood cross term)
      - "sqrt_product": sqrt(p(x) q(x))        (Bhattacharyya coefficient)
      - "chernoff":     p(x)^alpha q(x)^(1-alpha), alpha in (0, 1)
      - "kl":           p(x) ln(p(x) / q(x)), zero where p vanishes

    The integration range is derived from the two components (box supports,
    or 12 standard deviations around Gaussian means) and is split at box
    edges so each Simpson panel sees a smooth integrand.
    """
    if p.dim != 1 or q.dim != 1:
        raise NotOneDimensional("cross-term quadrature needs 1-D components")
    points = int(points)
    if points < _MIN_POINTS:
        raise InsufficientSamples(f"need at least {_MIN_POINTS} quadrature points, got {points}")
    if kind == "chernoff":
        if alpha is None or not 0.0 < alpha < 1.0:
            raise MixtureError(f"chernoff integrand needs alpha in (0, 1), got {alpha}")
    elif kind not in ("product", "sqrt_product", "kl"):
        raise MixtureError(f"unknown integrand kind {kind!r}")

    lo = min(_cover(p)[0], _cover(q)[0])
    hi = max(_cover(p)[1], _cover(q)[1])
    if kind == "kl":
        # the integrand vanishes with p, so p's own cover suffices
        lo, hi = _cover(p)
    edges = _box_edges(p) + _box_edges(q)

    pieces = []
    for s0, s1 in _segments(lo, hi, edges):
        n = _segment_points(points, s1 - s0, hi - lo)
        xs = np.linspace(s0, s1, n)
        mid = 0.5 * (s0 + s1)
        dp = _component_density(p, xs, mid)
        dq = _component_density(q, xs, mid)
        if kind == "product":
            integrand = dp * dq
        elif kind == "sqrt_product":
            integrand = np.sqrt(dp * dq)
        elif kind == "chernoff":
            integrand = dp**alpha * dq ** (1.0 - alpha)
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = np.where(dp > 0, dp / dq, 1.0)
                integrand = np.where(dp > 0, dp * np.log(ratio), 0.0)
            if np.any(np.isinf(integrand)):
                return math.inf
        pieces.append(_simpson(integrand, (s1 - s0) / (n - 1)))
    return fsum(pieces)

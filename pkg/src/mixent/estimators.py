"""Pairwise-distance entropy bounds and baseline estimators for mixtures.

The central object is the estimator family

    H_D = conditional_entropy - sum_i c_i ln sum_j c_j exp(-D(p_i || p_j))

indexed by a pairwise premetric D (non-negative, zero between identical
arguments).  Every member is bracketed by the exact floor and ceiling from
the core model; the Kullback-Leibler choice is an upper bound on the true
mixture entropy and any Chernoff-order choice is a lower bound, with order
1/2 (the Bhattacharyya distance) optimal for shared-covariance mixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numeric import fsum, log_sum_exp
from .errors import AlphaOutOfRange, UnsupportedDistance
from .gaussian import (
    GaussianComponent,
    gaussian_chernoff,
    gaussian_elk_log_cross,
    gaussian_kl,
)
from .mixture import Grouping, MixtureModel
from .montecarlo import McResult, mc_entropy
from .uniform import UniformBox, uniform_bd, uniform_elk_log_cross, uniform_kl


@dataclass(frozen=True)
class DistanceKind:
    """Selector for the pairwise distance driving the estimator family."""

    name: str
    alpha: float | None = None


KL = DistanceKind("kl")
BHATTACHARYYA = DistanceKind("chernoff", 0.5)
DMIN = DistanceKind("dmin")
DMAX = DistanceKind("dmax")


def chernoff_distance(alpha: float) -> DistanceKind:
    """Chernoff divergence of the given order; valid distances need alpha in [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"chernoff order must lie in [0, 1], got {alpha}")
    return DistanceKind("chernoff", float(alpha))


def pairwise_distance_matrix(mixture: MixtureModel, kind: DistanceKind) -> np.ndarray:
    """N x N matrix of D(p_i || p_j) with the diagonal pinned to exactly zero.

    Entries may be +inf (disjoint or non-nested box supports); negatives
    cannot occur because every closed form clamps rounding residue at zero.
    """
    comps = mixture.components
    n = len(comps)
    out = np.zeros((n, n))
    if kind.name == "dmin":
        return out
    if kind.name == "dmax":
        for i in range(n):
            for j in range(n):
                if i != j and not comps[i].equal_fields(comps[j]):
                    out[i, j] = math.inf
        return out

    if kind.name == "kl":
        pair = gaussian_kl if isinstance(comps[0], GaussianComponent) else uniform_kl
    elif kind.name == "chernoff":
        alpha = kind.alpha
        if alpha is None or not 0.0 <= alpha <= 1.0:
            raise AlphaOutOfRange(f"chernoff order must lie in [0, 1], got {alpha}")
        if isinstance(comps[0], GaussianComponent):
            def pair(a, b):
                return gaussian_chernoff(a, b, alpha)
        elif alpha == 0.5:
            pair = uniform_bd
        else:
            raise UnsupportedDistance(
                f"box components support only order 0.5, got chernoff({alpha})"
            )
    else:
        raise UnsupportedDistance(f"unknown distance kind {kind.name!r}")

    if not isinstance(comps[0], (GaussianComponent, UniformBox)):
        raise UnsupportedDistance(f"no distances defined for {type(comps[0]).__name__}")
    for i in range(n):
        for j in range(n):
            if i != j:
                out[i, j] = pair(comps[i], comps[j])
    return out


def pairwise_estimate(mixture: MixtureModel, kind: DistanceKind) -> float:
    """Evaluate the pairwise-distance entropy estimator for one distance choice.

    The inner reduction is a max-shifted log-sum-exp over ln c_j - D_ij
    restricted to positive-weight components; the j = i term contributes
    ln c_i exactly because the diagonal is pinned to zero.  Each inner value
    is capped at zero (the weights sum to one by construction), which keeps
    the floor-and-ceiling bracket exact in floating point as well.
    """
    dmat = pairwise_distance_matrix(mixture, kind)
    weights = mixture.weights
    active = mixture.active_indices()
    log_w = np.log(weights[active])
    terms = []
    for row, i in enumerate(active):
        inner = log_sum_exp(log_w - dmat[i, active])
        terms.append(weights[i] * min(inner, 0.0))
    return mixture.conditional_entropy() - fsum(terms)


def lower_bound_chernoff(mixture: MixtureModel, alpha: float) -> float:
    """Certified lower bound on mixture entropy from the order-alpha Chernoff distance."""
    return pairwise_estimate(mixture, chernoff_distance(alpha))


def lower_bound_bd(mixture: MixtureModel) -> float:
    """Bhattacharyya lower bound: the order-1/2 member of the Chernoff family."""
    return pairwise_estimate(mixture, BHATTACHARYYA)


def upper_bound_kl(mixture: MixtureModel) -> float:
    """Certified upper bound on mixture entropy from the KL divergence."""
    return pairwise_estimate(mixture, KL)


def bias_bound(mixture: MixtureModel) -> float:
    """Worst-case error of any member of the family: the weight entropy H(C)."""
    return mixture.weight_entropy()


def _location(component) -> np.ndarray:
    return component.mean if isinstance(component, GaussianComponent) else component.center()


def kde_estimate(mixture: MixtureModel) -> float:
    """Kernel-density baseline: minus the average mixture log density at the
    component locations (Gaussian means, box centers)."""
    locations = np.array([_location(c) for c in mixture.components])
    values = mixture.log_density(locations)
    weights = mixture.weights
    active = mixture.active_indices()
    return -fsum(weights[active] * values[active])


def _elk_log_cross(a, b) -> float:
    if isinstance(a, GaussianComponent):
        return gaussian_elk_log_cross(a, b)
    return uniform_elk_log_cross(a, b)


def elk_estimate(mixture: MixtureModel) -> float:
    """Expected-likelihood-kernel baseline, a further lower bound on the entropy:
    -sum_i c_i ln sum_j c_j int p_i p_j."""
    comps = mixture.components
    if not isinstance(comps[0], (GaussianComponent, UniformBox)):
        raise UnsupportedDistance(f"no cross terms defined for {type(comps[0]).__name__}")
    weights = mixture.weights
    active = mixture.active_indices()
    log_w = np.log(weights[active])
    terms = []
    for i in active:
        cross = np.array([_elk_log_cross(comps[i], comps[j]) for j in active])
        terms.append(weights[i] * log_sum_exp(log_w + cross))
    return -fsum(terms)


def clustered_gap_bound(mixture: MixtureModel, grouping: Grouping, alpha: float) -> float:
    """Bound the KL-vs-Chernoff gap for a mixture with grouped components.

    With kappa the largest within-group KL divergence and beta the smallest
    between-group Bhattacharyya distance, the gap between the KL upper bound
    and the order-alpha Chernoff lower bound is at most

        kappa + (number of non-empty groups - 1) * exp(-(1 - |1 - 2 alpha|) * beta)

    which collapses to kappa as the groups separate.  The measured gap is
    checked against the returned value.
    """
    if not 0.0 < alpha <= 1.0:
        raise AlphaOutOfRange(f"gap bound needs alpha in (0, 1], got {alpha}")
    kl = pairwise_distance_matrix(mixture, KL)
    bd = pairwise_distance_matrix(mixture, BHATTACHARYYA)
    active = mixture.active_indices()
    labels = grouping.assignment
    kappa = 0.0
    beta = math.inf
    for i in active:
        for j in active:
            if i == j:
                continue
            if labels[i] == labels[j]:
                kappa = max(kappa, kl[i, j])
            else:
                beta = min(beta, bd[i, j])
    rate = 1.0 - abs(1.0 - 2.0 * alpha)
    if math.isinf(beta):
        decay = 0.0 if rate > 0.0 else 1.0
    else:
        decay = math.exp(-rate * beta)
    bound = kappa + (grouping.n_groups - 1) * decay
    gap = upper_bound_kl(mixture) - lower_bound_chernoff(mixture, alpha)
    assert gap <= bound + 1e-9, f"measured gap {gap} exceeds bound {bound}"
    return bound


class EstimateReport:
    """All analytic estimates for one mixture, plus an optional Monte Carlo row.

    Whenever the four bracket entries are present they satisfy
    h_cond <= h_bd <= h_kl <= h_joint.
    """

    __slots__ = ("h_cond", "h_joint", "h_bd", "h_kl", "h_kde", "h_elk", "mc")

    def __init__(self, h_cond, h_joint, h_bd, h_kl, h_kde, h_elk, mc: McResult | None = None):
        self.h_cond = float(h_cond)
        self.h_joint = float(h_joint)
        self.h_bd = float(h_bd)
        self.h_kl = float(h_kl)
        self.h_kde = float(h_kde)
        self.h_elk = float(h_elk)
        self.mc = mc

    def __repr__(self):
        return (
            f"EstimateReport(h_cond={self.h_cond!r}, h_joint={self.h_joint!r}, "
            f"h_bd={self.h_bd!r}, h_kl={self.h_kl!r}, h_kde={self.h_kde!r}, "
            f"h_elk={self.h_elk!r}, mc={self.mc!r})"
        )


def estimate_all(
    mixture: MixtureModel, mc_samples: int | None = None, seed: int = 0
) -> EstimateReport:
    """Run every estimator on one mixture.

    Monte Carlo is included only when mc_samples is given; seed feeds its
    substream derivation and nothing else.
    """
    mc = mc_entropy(mixture, mc_samples, seed) if mc_samples else None
    return EstimateReport(
        h_cond=mixture.conditional_entropy(),
        h_joint=mixture.joint_entropy_upper(),
        h_bd=lower_bound_bd(mixture),
        h_kl=upper_bound_kl(mixture),
        h_kde=kde_estimate(mixture),
        h_elk=elk_estimate(mixture),
        mc=mc,
    )

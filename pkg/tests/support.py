"""Shared builders for randomized test mixtures."""

from __future__ import annotations

import numpy as np

from mixent import GaussianComponent, MixtureModel, UniformBox


def random_spd(rng: np.random.Generator, dim: int, scale: float = 1.0) -> np.ndarray:
    """A well-conditioned random symmetric positive-definite matrix."""
    basis = rng.standard_normal((dim, dim))
    return scale * (basis @ basis.T / dim + np.diag(rng.uniform(0.5, 1.5, dim)))


def random_gaussian_mixture(
    rng: np.random.Generator,
    n_components: int,
    dim: int,
    spread: float = 2.0,
    shared_cov: np.ndarray | None = None,
) -> MixtureModel:
    weights = rng.uniform(0.2, 1.0, n_components)
    means = spread * rng.standard_normal((n_components, dim))
    components = []
    for mean in means:
        cov = random_spd(rng, dim) if shared_cov is None else shared_cov
        components.append(GaussianComponent(mean, cov))
    return MixtureModel(weights, components)


def random_uniform_mixture(
    rng: np.random.Generator,
    n_components: int,
    dim: int,
    spread: float = 2.0,
) -> MixtureModel:
    weights = rng.uniform(0.2, 1.0, n_components)
    centers = spread * rng.standard_normal((n_components, dim))
    half_widths = rng.uniform(0.3, 1.6, (n_components, dim))
    boxes = [UniformBox(c - h, c + h) for c, h in zip(centers, half_widths)]
    return MixtureModel(weights, boxes)


def random_mixture(
    rng: np.random.Generator,
    n_components: int,
    dim: int,
    family: str,
    spread: float = 2.0,
) -> MixtureModel:
    if family == "gaussian":
        return random_gaussian_mixture(rng, n_components, dim, spread=spread)
    return random_uniform_mixture(rng, n_components, dim, spread=spread)

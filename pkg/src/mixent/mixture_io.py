"""Load mixture definitions and noise covariances from JSON files.

A mixture file looks like

    {"family": "gaussian",
     "weights": [0.5, 0.5],
     "components": [{"mean": [0.0], "cov": [[1.0]]},
                    {"mean": [2.0], "cov": [[1.0]]}]}

or, for the uniform family, components of the form
``{"lower": [...], "upper": [...]}``.  Covariances are full row-major
matrices.  A noise file holds a single ``{"cov": [[...]]}`` object.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import MixtureError
from .gaussian import GaussianComponent
from .mixture import MixtureModel
from .uniform import UniformBox


def parse_mixture(data: dict) -> MixtureModel:
    """Build a MixtureModel from a parsed mixture definition."""
    try:
        family = data["family"]
        weights = data["weights"]
        entries = data["components"]
        if family == "gaussian":
            comps = [GaussianComponent(c["mean"], c["cov"]) for c in entries]
        elif family == "uniform":
            comps = [UniformBox(c["lower"], c["upper"]) for c in entries]
        else:
            raise MixtureError(f"unknown family {family!r}, expected 'gaussian' or 'uniform'")
    except (KeyError, TypeError) as exc:
        raise MixtureError(f"malformed mixture definition: {exc}") from None
    return MixtureModel(weights, comps)


def load_mixture(path) -> MixtureModel:
    """Read and validate a JSON mixture definition file."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MixtureError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MixtureError(f"{path} must hold a JSON object")
    return parse_mixture(data)


def load_noise_cov(path) -> np.ndarray:
    """Read a noise covariance from JSON: a bare matrix or an object with a 'cov' entry."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MixtureError(f"{path} is not valid JSON: {exc}") from None
    try:
        cov = data["cov"] if isinstance(data, dict) else data
        return np.atleast_2d(np.asarray(cov, dtype=float))
    except (KeyError, TypeError, ValueError) as exc:
        raise MixtureError(f"malformed noise definition: {exc}") from None

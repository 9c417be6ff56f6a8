"""Shared numeric helpers: order-stable summation and careful log-sum-exp."""

from __future__ import annotations

import math

import numpy as np

NEG_INF = float("-inf")


def log_sum_exp(terms) -> float:
    """Max-shifted log-sum-exp of a 1-D array that may contain -inf entries.

    The shifted exponentials are combined with math.fsum, so the result does
    not depend on the order of the terms.  An all-(-inf) input yields -inf,
    matching the convention that exp(-inf) contributes exactly zero.
    """
    arr = np.asarray(terms, dtype=float)
    if arr.size == 0:
        return NEG_INF
    m = float(arr.max())
    if m == NEG_INF:
        return NEG_INF
    total = math.fsum(np.exp(arr - m).tolist())
    return m + math.log(total)


def log_sum_exp_axis0(matrix: np.ndarray) -> np.ndarray:
    """Vectorized log-sum-exp down the first axis of a 2-D array.

    Columns whose entries are all -inf map to -inf without warnings.
    """
    matrix = np.asarray(matrix, dtype=float)
    m = matrix.max(axis=0)
    shift = np.where(np.isfinite(m), m, 0.0)
    total = np.exp(matrix - shift).sum(axis=0)
    with np.errstate(divide="ignore"):
        return shift + np.log(total)


def fsum(values) -> float:
    """Exactly rounded sum of an iterable or array of floats."""
    if isinstance(values, np.ndarray):
        values = values.tolist()
    return math.fsum(values)

"""Uniform box components: volumes, overlaps, divergences, edge cases."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixent import (
    DegenerateBox,
    DimensionMismatch,
    UniformBox,
    box_overlap,
    uniform_bd,
    uniform_elk_cross,
    uniform_elk_log_cross,
    uniform_kl,
)


def unit_box(dim: int = 1) -> UniformBox:
    return UniformBox(np.zeros(dim), np.ones(dim))


def random_box_pair(seed: int, dim: int = 2) -> tuple[UniformBox, UniformBox]:
    rng = np.random.default_rng(seed)
    boxes = []
    for _ in range(2):
        center = rng.normal(0.0, 1.5, dim)
        half = rng.uniform(0.2, 2.0, dim)
        boxes.append(UniformBox(center - half, center + half))
    return boxes[0], boxes[1]


# ---------------------------------------------------------------- construction


def test_scalar_bounds_become_one_dimensional():
    box = UniformBox(0.0, 2.0)
    assert box.dim == 1
    assert math.isclose(box.entropy(), math.log(2.0), abs_tol=1e-12)


def test_degenerate_sides_rejected():
    with pytest.raises(DegenerateBox):
        UniformBox([0.0, 0.0], [1.0, 0.0])
    with pytest.raises(DegenerateBox):
        UniformBox([1.0], [0.0])


def test_bound_shape_mismatch_rejected():
    with pytest.raises(DimensionMismatch):
        UniformBox([0.0, 0.0], [1.0])


def test_equal_fields():
    assert unit_box(2).equal_fields(unit_box(2))
    assert not unit_box(2).equal_fields(UniformBox([0.0, 0.0], [1.0, 1.5]))


# ----------------------------------------------------------- entropy / density


def test_entropy_is_log_volume():
    box = UniformBox([0.0, 0.0], [2.0, 3.0])
    assert math.isclose(box.entropy(), math.log(6.0), abs_tol=1e-12)


def test_entropy_of_tiny_high_dimensional_box_stays_finite():
    dim = 16
    box = UniformBox(np.zeros(dim), np.full(dim, 1e-3))
    assert math.isclose(box.entropy(), dim * math.log(1e-3), rel_tol=1e-12)
    assert math.isfinite(box.log_volume)


def test_log_density_inside_boundary_outside():
    box = UniformBox([0.0], [4.0])
    assert math.isclose(box.log_density(np.array([1.0])), -math.log(4.0), abs_tol=1e-12)
    # The box is closed: both faces carry the interior density.
    assert box.log_density(np.array([0.0])) == box.log_density(np.array([4.0]))
    assert box.log_density(np.array([4.0 + 1e-12])) == -math.inf


def test_log_density_batch():
    box = UniformBox([0.0, 0.0], [1.0, 1.0])
    pts = np.array([[0.5, 0.5], [1.5, 0.5], [0.5, -0.1]])
    out = box.log_density(pts)
    assert out.shape == (3,)
    assert out[0] == 0.0 and math.isinf(out[1]) and math.isinf(out[2])


def test_center_and_sampling():
    rng = np.random.default_rng(3)
    box = UniformBox([-1.0, 2.0], [1.0, 6.0])
    assert np.array_equal(box.center(), [0.0, 4.0])
    draws = box.sample(rng, 50_000)
    assert (draws >= box.lower).all() and (draws <= box.upper).all()
    assert np.allclose(draws.mean(axis=0), box.center(), atol=0.03)
    assert box.sample(rng).shape == (2,)


# --------------------------------------------------------------------- overlap


def test_overlap_of_identical_boxes_is_their_volume():
    box = UniformBox([0.0, 0.0], [2.0, 3.0])
    log_vol, empty = box_overlap(box, box)
    assert not empty
    assert math.isclose(log_vol, math.log(6.0), abs_tol=1e-12)


def test_partial_overlap_interval_example():
    a = UniformBox([0.0], [2.0])
    b = UniformBox([1.0], [3.0])
    log_vol, empty = box_overlap(a, b)
    assert not empty
    assert math.isclose(log_vol, 0.0, abs_tol=1e-12)


def test_touching_boxes_count_as_disjoint():
    a = UniformBox([0.0], [1.0])
    b = UniformBox([1.0], [2.0])
    _, empty = box_overlap(a, b)
    assert empty


def test_disjoint_in_one_axis_is_disjoint_overall():
    a = UniformBox([0.0, 0.0], [1.0, 1.0])
    b = UniformBox([0.5, 2.0], [1.5, 3.0])
    _, empty = box_overlap(a, b)
    assert empty


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40, deadline=None)
def test_overlap_is_symmetric(seed):
    a, b = random_box_pair(seed)
    assert box_overlap(a, b) == box_overlap(b, a)


# ----------------------------------------------------------------- divergences


def test_kl_zero_for_identical_boxes():
    box = UniformBox([0.0, -1.0], [2.0, 1.0])
    assert uniform_kl(box, box) == 0.0


def test_kl_containment_example():
    inner = UniformBox([0.0], [1.0])
    outer = UniformBox([-0.5], [1.5])
    assert math.isclose(uniform_kl(inner, outer), math.log(2.0), abs_tol=1e-12)


def test_kl_infinite_without_containment():
    a = UniformBox([0.0], [2.0])
    b = UniformBox([1.0], [3.0])
    assert uniform_kl(a, b) == math.inf
    assert uniform_kl(b, a) == math.inf
    # Containment is directional: the wide box does not fit inside the narrow one.
    inner = UniformBox([0.0], [1.0])
    outer = UniformBox([-0.5], [1.5])
    assert uniform_kl(outer, inner) == math.inf


def test_bd_zero_for_identical_boxes():
    box = UniformBox([0.0, 0.0], [0.5, 4.0])
    assert uniform_bd(box, box) == 0.0


def test_bd_half_overlap_example():
    a = UniformBox([0.0], [2.0])
    b = UniformBox([1.0], [3.0])
    assert math.isclose(uniform_bd(a, b), math.log(2.0), abs_tol=1e-12)


def test_bd_infinite_for_disjoint_boxes():
    a = UniformBox([0.0], [1.0])
    b = UniformBox([2.0], [3.0])
    assert uniform_bd(a, b) == math.inf


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40, deadline=None)
def test_bd_symmetric_and_nonnegative(seed):
    a, b = random_box_pair(seed)
    assert uniform_bd(a, b) == uniform_bd(b, a)
    assert uniform_bd(a, b) >= 0.0


def test_elk_cross_examples():
    a = UniformBox([0.0], [2.0])
    b = UniformBox([1.0], [3.0])
    assert math.isclose(uniform_elk_cross(a, b), 0.25, abs_tol=1e-12)
    box = UniformBox([0.0], [4.0])
    assert math.isclose(uniform_elk_cross(box, box), 0.25, abs_tol=1e-12)
    disjoint = UniformBox([10.0], [11.0])
    assert uniform_elk_cross(a, disjoint) == 0.0
    assert uniform_elk_log_cross(a, disjoint) == -math.inf


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40, deadline=None)
def test_elk_cross_symmetric(seed):
    a, b = random_box_pair(seed)
    assert uniform_elk_cross(a, b) == uniform_elk_cross(b, a)


def test_bd_and_elk_share_the_overlap_volume():
    # Both quantities are determined by the three log volumes, so one can be
    # rewritten in terms of the other.
    a = UniformBox([0.0, 0.0], [1.0, 2.0])
    b = UniformBox([0.5, 1.0], [1.5, 3.0])
    bd = uniform_bd(a, b)
    from_elk = -uniform_elk_log_cross(a, b) - 0.5 * (a.log_volume + b.log_volume)
    assert math.isclose(bd, from_elk, abs_tol=1e-12)

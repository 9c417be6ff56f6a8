"""Reproducible experiment sweeps over synthetic mixture ensembles.

Eight experiment families are provided, four Gaussian and four uniform:

    g1 / u1   location spread: unit components, means scattered with scale sigma
    g2        random covariances drawn from a Wishart ensemble, indexed by dof
    u2        random box half-widths drawn from a Gamma ensemble, indexed by sigma
    g3 / u3   clustered: components share one of K cluster centers
    g4 / u4   dimension sweep at fixed unit spread

Every grid point derives its own generator and Monte Carlo seeds by hashing
(master seed, experiment id, grid index) through numpy's SeedSequence, so
sweeps are bit-reproducible at any shard or grid granularity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegreesOfFreedomTooSmall, MixtureError
from .estimators import estimate_all
from .gaussian import GaussianComponent
from .mixture import Grouping, MixtureModel
from .uniform import UniformBox

EXPERIMENTS = ("g1", "g2", "g3", "g4", "u1", "u2", "u3", "u4")

# Estimator order for report rows: Monte Carlo first, then the two certified
# bounds, the two baselines, and the exact floor and ceiling.
ESTIMATOR_ORDER = ("H_MC", "H_KL", "H_BD", "H_KDE", "H_ELK", "H_cond", "H_joint")

CSV_HEADER = "experiment,param,estimator,value,stderr"

_SIGMA_EXPERIMENTS = ("g1", "g3", "u1", "u2", "u3")
_DIMENSION_EXPERIMENTS = {"g4": 60, "u4": 16}


def gen_gaussian_spread(n_components: int, dim: int, sigma: float, seed) -> MixtureModel:
    """Equal-weight unit-covariance components with means scattered at scale sigma.

    Each mean coordinate is an independent normal draw with standard
    deviation sigma, so sigma -> 0 collapses the mixture onto one component
    and large sigma separates all components completely.
    """
    rng = np.random.default_rng(seed)
    means = sigma * rng.standard_normal((n_components, dim))
    eye = np.eye(dim)
    comps = [GaussianComponent(m, eye) for m in means]
    return MixtureModel(np.ones(n_components), comps)


def wishart_bartlett(rng, dim: int, dof: float, scale: float) -> np.ndarray:
    """One Wishart draw with identity-proportional scale, via the Bartlett factor.

    The factor is lower triangular with chi-square diagonal entries (dof
    down to dof - dim + 1 degrees of freedom) and standard normal strict
    lower triangle; the draw is scale * A A^T.  Needs dof >= dim.
    """
    if dof < dim:
        raise DegreesOfFreedomTooSmall(f"wishart needs dof >= dim, got dof={dof}, dim={dim}")
    a = np.zeros((dim, dim))
    np.fill_diagonal(a, np.sqrt(rng.chisquare(dof - np.arange(dim))))
    lower = np.tril_indices(dim, -1)
    a[lower] = rng.standard_normal(lower[0].size)
    return scale * (a @ a.T)


def gen_gaussian_wishart(n_components: int, dim: int, dof: float, seed) -> MixtureModel:
    """Equal-weight components with standard-normal means and Wishart covariances.

    Covariances are drawn with scale matrix I / (10 + dof), so their mean is
    dof / (10 + dof) times the identity and approaches the identity as the
    degrees of freedom grow.
    """
    rng = np.random.default_rng(seed)
    means = rng.standard_normal((n_components, dim))
    comps = [
        GaussianComponent(m, wishart_bartlett(rng, dim, dof, 1.0 / (10.0 + dof)))
        for m in means
    ]
    return MixtureModel(np.ones(n_components), comps)


def _cluster_assignment(rng, n_components: int, clusters: int, balanced: bool) -> np.ndarray:
    if balanced:
        tiled = np.tile(np.arange(clusters), -(-n_components // clusters))[:n_components]
        return rng.permutation(tiled)
    return rng.integers(0, clusters, n_components)


def gen_gaussian_clustered(
    n_components: int,
    dim: int,
    clusters: int,
    sigma: float,
    seed,
    balanced: bool = False,
) -> tuple[MixtureModel, Grouping]:
    """Unit-covariance components sharing one of `clusters` centers exactly.

    Centers are scattered at scale sigma; components are assigned to
    clusters uniformly at random, or in equal counts when balanced is set.
    Returns the mixture together with the cluster grouping.
    """
    if not 1 <= clusters <= n_components:
        raise MixtureError(f"need 1 <= clusters <= components, got {clusters} of {n_components}")
    rng = np.random.default_rng(seed)
    centers = sigma * rng.standard_normal((clusters, dim))
    labels = _cluster_assignment(rng, n_components, clusters, balanced)
    eye = np.eye(dim)
    comps = [GaussianComponent(centers[g], eye) for g in labels]
    mixture = MixtureModel(np.ones(n_components), comps)
    return mixture, Grouping(mixture, labels)


def gen_uniform_spread(n_components: int, dim: int, sigma: float, seed) -> MixtureModel:
    """Equal-weight unit-half-width boxes centered at scattered means."""
    rng = np.random.default_rng(seed)
    means = sigma * rng.standard_normal((n_components, dim))
    comps = [UniformBox(m - 1.0, m + 1.0) for m in means]
    return MixtureModel(np.ones(n_components), comps)


def gen_uniform_gamma(n_components: int, dim: int, sigma: float, seed) -> MixtureModel:
    """Boxes with Gamma-distributed half-widths around standard-normal centers.

    Half-widths are Gamma(1 + sigma) draws with rate 1 + sigma, so their
    mean is one and their variance 1 / (1 + sigma) shrinks as sigma grows.
    """
    rng = np.random.default_rng(seed)
    means = rng.standard_normal((n_components, dim))
    shape = 1.0 + sigma
    half = rng.gamma(shape, 1.0 / shape, n_components)
    comps = [UniformBox(m - h, m + h) for m, h in zip(means, half)]
    return MixtureModel(np.ones(n_components), comps)


def gen_uniform_clustered(
    n_components: int,
    dim: int,
    clusters: int,
    sigma: float,
    seed,
    balanced: bool = False,
) -> tuple[MixtureModel, Grouping]:
    """Unit-half-width boxes sharing one of `clusters` centers exactly."""
    if not 1 <= clusters <= n_components:
        raise MixtureError(f"need 1 <= clusters <= components, got {clusters} of {n_components}")
    rng = np.random.default_rng(seed)
    centers = sigma * rng.standard_normal((clusters, dim))
    labels = _cluster_assignment(rng, n_components, clusters, balanced)
    comps = [UniformBox(centers[g] - 1.0, centers[g] + 1.0) for g in labels]
    mixture = MixtureModel(np.ones(n_components), comps)
    return mixture, Grouping(mixture, labels)


def default_grid(experiment: str, dim: int) -> tuple[float, ...]:
    """Desk-scale default grids: nine log-spaced points per experiment.

    sigma-indexed experiments span ln sigma in [-3, 6]; the Wishart sweep
    spans ln dof in [ln dim, 8]; dimension sweeps cover 1..60 (Gaussian) or
    1..16 (uniform) with rounded log-spaced integers, deduplicated.
    """
    if experiment in _SIGMA_EXPERIMENTS:
        return tuple(np.exp(np.linspace(-3.0, 6.0, 9)))
    if experiment == "g2":
        return tuple(np.exp(np.linspace(math.log(dim), 8.0, 9)))
    if experiment in _DIMENSION_EXPERIMENTS:
        top = _DIMENSION_EXPERIMENTS[experiment]
        dims = np.unique(np.rint(np.exp(np.linspace(0.0, math.log(top), 9))))
        return tuple(float(v) for v in dims)
    raise MixtureError(f"unknown experiment id {experiment!r}")


@dataclass(frozen=True)
class SweepConfig:
    """Configuration of one experiment sweep.

    grid=None selects the default grid for the experiment; grids must be
    sorted ascending and non-empty.  balanced_clusters forces equal cluster
    counts in the clustered experiments.
    """

    experiment: str
    n_components: int = 20
    dim: int = 5
    clusters: int = 5
    grid: tuple[float, ...] | None = None
    mc_samples: int = 2000
    seed: int = 0
    balanced_clusters: bool = False

    def resolved_grid(self) -> tuple[float, ...]:
        grid = self.grid if self.grid is not None else default_grid(self.experiment, self.dim)
        grid = tuple(float(v) for v in grid)
        if not grid:
            raise MixtureError("sweep grid must not be empty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise MixtureError("sweep grid must be strictly ascending")
        return grid


@dataclass(frozen=True)
class SweepRow:
    """One (grid point, estimator) cell of a sweep result."""

    experiment: str
    param: float
    estimator: str
    value: float
    stderr: float | None = None


def _point_seeds(master_seed: int, experiment: str, index: int) -> tuple[int, int]:
    # substream derivation: hash (seed, experiment id, grid index) through
    # SeedSequence, then split one stream for generation and one for MC
    code = int.from_bytes(experiment.encode("ascii"), "little")
    seq = np.random.SeedSequence([int(master_seed), code, int(index)])
    gen_seed, mc_seed = (int(s) for s in seq.generate_state(2, np.uint64))
    return gen_seed, mc_seed


def _build_mixture(config: SweepConfig, value: float, seed: int) -> MixtureModel:
    e = config.experiment
    if e == "g1":
        return gen_gaussian_spread(config.n_components, config.dim, value, seed)
    if e == "g2":
        return gen_gaussian_wishart(config.n_components, config.dim, value, seed)
    if e == "g3":
        return gen_gaussian_clustered(
            config.n_components, config.dim, config.clusters, value, seed,
            balanced=config.balanced_clusters,
        )[0]
    if e == "g4":
        return gen_gaussian_spread(config.n_components, int(round(value)), 1.0, seed)
    if e == "u1":
        return gen_uniform_spread(config.n_components, config.dim, value, seed)
    if e == "u2":
        return gen_uniform_gamma(config.n_components, config.dim, value, seed)
    if e == "u3":
        return gen_uniform_clustered(
            config.n_components, config.dim, config.clusters, value, seed,
            balanced=config.balanced_clusters,
        )[0]
    if e == "u4":
        return gen_uniform_spread(config.n_components, int(round(value)), 1.0, seed)
    raise MixtureError(f"unknown experiment id {e!r}")


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """Run one experiment sweep and return rows in (grid point, estimator) order.

    Each grid point contributes exactly one row per name in ESTIMATOR_ORDER;
    only the Monte Carlo row carries a standard error.
    """
    if config.experiment not in EXPERIMENTS:
        raise MixtureError(f"unknown experiment id {config.experiment!r}")
    if config.n_components < 1:
        raise MixtureError("need at least one component")
    if config.mc_samples < 2:
        raise MixtureError("need at least two Monte Carlo samples")
    rows: list[SweepRow] = []
    for index, value in enumerate(config.resolved_grid()):
        gen_seed, mc_seed = _point_seeds(config.seed, config.experiment, index)
        mixture = _build_mixture(config, value, gen_seed)
        report = estimate_all(mixture, mc_samples=config.mc_samples, seed=mc_seed)
        cells = {
            "H_MC": (report.mc.estimate, report.mc.stderr),
            "H_KL": (report.h_kl, None),
            "H_BD": (report.h_bd, None),
            "H_KDE": (report.h_kde, None),
            "H_ELK": (report.h_elk, None),
            "H_cond": (report.h_cond, None),
            "H_joint": (report.h_joint, None),
        }
        for name in ESTIMATOR_ORDER:
            val, err = cells[name]
            rows.append(SweepRow(config.experiment, value, name, val, err))
    return rows


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def format_csv(rows) -> str:
    """Render sweep rows as CSV text with 17-significant-digit decimals."""
    if not rows:
        raise MixtureError("no sweep rows to format")
    lines = [CSV_HEADER]
    for row in rows:
        err = "" if row.stderr is None else _fmt(row.stderr)
        lines.append(f"{row.experiment},{_fmt(row.param)},{row.estimator},{_fmt(row.value)},{err}")
    return "\n".join(lines) + "\n"


def write_csv(rows, path) -> None:
    """Write sweep rows to a CSV file; identical inputs give identical bytes."""
    Path(path).write_text(format_csv(rows), encoding="ascii")


def read_csv(path) -> list[SweepRow]:
    """Parse a sweep CSV back into rows (the inverse of write_csv)."""
    lines = Path(path).read_text(encoding="ascii").splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise MixtureError(f"unrecognized CSV header in {path}")
    rows = []
    for line in lines[1:]:
        experiment, param, estimator, value, err = line.split(",")
        rows.append(
            SweepRow(experiment, float(param), estimator, float(value),
                     None if err == "" else float(err))
        )
    return rows


_SERIES_STYLE = (
    ("H_MC", "#222222"),
    ("H_KL", "#c0392b"),
    ("H_BD", "#2460a7"),
    ("H_KDE", "#d4860b"),
    ("H_ELK", "#7d3fa8"),
)

_VIEW_W, _VIEW_H = 640, 440
_MARGIN = 56.0


def _series(rows, name) -> list[tuple[float, float]]:
    return [(r.param, r.value) for r in rows if r.estimator == name]


def render_svg(rows, path) -> None:
    """Write a small self-contained SVG chart of one sweep.

    One polyline per estimator in the line list, plus one shaded band
    between the exact floor (H_cond) and ceiling (H_joint).  The parameter
    axis is logarithmic.
    """
    if not rows:
        raise MixtureError("no sweep rows to plot")
    floor = _series(rows, "H_cond")
    ceiling = _series(rows, "H_joint")
    lines = [(name, color, _series(rows, name)) for name, color in _SERIES_STYLE]

    xs = [math.log(p) for p, _ in floor]
    ys = [v for _, v in floor] + [v for _, v in ceiling]
    for _, _, pts in lines:
        ys.extend(v for _, v in pts)
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def sx(p):
        return _MARGIN + (math.log(p) - x_lo) / x_span * (_VIEW_W - 2 * _MARGIN)

    def sy(v):
        return _VIEW_H - _MARGIN - (v - y_lo) / y_span * (_VIEW_H - 2 * _MARGIN)

    def path_points(pts):
        return " ".join(f"{sx(p):.2f},{sy(v):.2f}" for p, v in pts)

    band = path_points(floor) + " " + path_points(list(reversed(ceiling)))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_VIEW_W}" height="{_VIEW_H}" '
        f'viewBox="0 0 {_VIEW_W} {_VIEW_H}">',
        f'<rect width="{_VIEW_W}" height="{_VIEW_H}" fill="white"/>',
        f'<polygon class="band" points="{band}" fill="#3f9d55" fill-opacity="0.25" stroke="none"/>',
    ]
    for name, color, pts in lines:
        parts.append(
            f'<polyline data-series="{name}" points="{path_points(pts)}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    axis_y = _VIEW_H - _MARGIN
    parts.append(
        f'<line x1="{_MARGIN}" y1="{axis_y}" x2="{_VIEW_W - _MARGIN}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_VIEW_W / 2:.0f}" y="{_VIEW_H - 12}" text-anchor="middle" '
        f'font-size="12">ln(parameter), {rows[0].experiment}</text>'
    )
    parts.append(
        f'<text x="14" y="{_VIEW_H / 2:.0f}" font-size="12" '
        f'transform="rotate(-90 14 {_VIEW_H / 2:.0f})" text-anchor="middle">entropy (nats)</text>'
    )
    for k, (name, color) in enumerate(_SERIES_STYLE):
        y = _MARGIN + 14 * k
        parts.append(
            f'<line x1="{_VIEW_W - 150}" y1="{y}" x2="{_VIEW_W - 126}" y2="{y}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(f'<text x="{_VIEW_W - 120}" y="{y + 4}" font-size="11">{name}</text>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="ascii")

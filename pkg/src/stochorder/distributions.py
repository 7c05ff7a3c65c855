"""Bivariate laws and their marginals.

Three substrates cover everything the comparison engines consume:

* :class:`FiniteJointDistribution` -- an atomic joint pmf, the exact
  substrate on which the precedence orders are computed in closed form.
* :class:`GridDensityPair` -- two marginal densities tabulated on a shared
  grid, the substrate for the classical marginal-based partial orders on
  continuous laws.
* :class:`PairedSample` -- observed (x, y) pairs, the estimation substrate.

All types are immutable after construction and every operation is a pure
function, so values can be shared freely across threads.

Mass bookkeeping uses ``math.fsum`` throughout, which keeps the total-mass
invariant (sum = 1 within 1e-12) independent of support size.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    EmptyDistribution,
    NotNormalizable,
    SupportTooLarge,
    UndefinedAtSupport,
    ValidationError,
)

#: Total-mass invariant maintained internally.
MASS_TOL = 1e-12
#: Raw masses whose total is within this of 1 are silently renormalized;
#: larger deviations require an explicit ``normalize=True``.
INPUT_MASS_TOL = 1e-9
#: Tolerance on the trapezoid integral of a tabulated density.
DENSITY_NORM_TOL = 1e-6
#: Default cap on the number of atoms a product coupling may create.
MAX_PRODUCT_ATOMS = 10_000_000


def _check_total(total: float, what: str) -> None:
    if abs(total - 1.0) > MASS_TOL:
        raise ValidationError(f"{what}: masses sum to {total!r}, not 1")


@dataclass(frozen=True)
class FiniteMarginal:
    """A univariate pmf: (value, mass) points with strictly increasing values."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(v), float(p)) for v, p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise EmptyDistribution("marginal has no support points")
        for v, p in pts:
            if not math.isfinite(v):
                raise ValidationError(f"support value {v!r} is not finite")
            if not (math.isfinite(p) and p > 0.0):
                raise ValidationError(f"mass {p!r} at value {v!r} must be positive and finite")
        values = [v for v, _ in pts]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValidationError("support values must be strictly increasing")
        _check_total(math.fsum(p for _, p in pts), "marginal")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.points)

    @property
    def masses(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.points)

    def cdf(self, t):
        """Right-continuous cdf at scalar or array ``t``."""
        values = np.asarray(self.values)
        cum = np.cumsum(np.asarray(self.masses))
        arr = np.asarray(t, dtype=float)
        idx = np.searchsorted(values, arr, side="right")
        out = np.where(idx > 0, cum[np.maximum(idx - 1, 0)], 0.0)
        return float(out) if arr.ndim == 0 else out


@dataclass(frozen=True)
class FiniteJointDistribution:
    """Atomic joint pmf of a pair: (x, y, mass) atoms with unique (x, y)."""

    atoms: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        atoms = tuple((float(x), float(y), float(p)) for x, y, p in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise EmptyDistribution("joint distribution has no atoms")
        seen = set()
        for x, y, p in atoms:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValidationError(f"support point ({x!r}, {y!r}) is not finite")
            if not (math.isfinite(p) and p > 0.0):
                raise ValidationError(f"mass {p!r} at ({x!r}, {y!r}) must be positive and finite")
            if (x, y) in seen:
                raise ValidationError(f"duplicate atom at ({x!r}, {y!r})")
            seen.add((x, y))
        _check_total(math.fsum(p for _, _, p in atoms), "joint")

    def __len__(self) -> int:
        return len(self.atoms)


def make_joint(
    raw_atoms: Iterable[tuple[float, float, float]],
    normalize: bool = False,
) -> FiniteJointDistribution:
    """Build a joint distribution from raw (x, y, mass) triples.

    Duplicate (x, y) pairs are merged, zero-mass atoms are dropped, and the
    masses are rescaled to total exactly 1.  A raw total further than 1e-9
    from 1 is rejected unless ``normalize=True``.

    Raises:
        ValidationError: on a negative, non-finite or malformed atom (the
            message names the offending atom index).
        EmptyDistribution: if no atom has positive mass.
        NotNormalizable: if the raw total is off by more than 1e-9 and
            normalization was not requested.
    """
    cleaned: list[tuple[float, float, float]] = []
    for i, atom in enumerate(raw_atoms):
        try:
            x, y, p = atom
            x, y, p = float(x), float(y), float(p)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"atom {i}: expected an (x, y, p) triple") from exc
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValidationError(f"atom {i}: non-finite support value")
        if not math.isfinite(p) or p < 0.0:
            raise ValidationError(f"atom {i}: invalid mass {p!r}")
        cleaned.append((x, y, p))

    merged: dict[tuple[float, float], list[float]] = {}
    for x, y, p in cleaned:
        if p > 0.0:
            merged.setdefault((x, y), []).append(p)
    if not merged:
        raise EmptyDistribution("no atom carries positive mass")

    group_mass = {key: math.fsum(ps) for key, ps in merged.items()}
    total = math.fsum(group_mass.values())
    if abs(total - 1.0) > INPUT_MASS_TOL and not normalize:
        raise NotNormalizable(
            f"masses sum to {total!r}; pass normalize=True to rescale"
        )
    scale = total if abs(total - 1.0) > MASS_TOL else 1.0  # already-normalized input is kept bit-exact
    atoms = tuple((x, y, group_mass[(x, y)] / scale) for x, y in sorted(group_mass))
    return FiniteJointDistribution(atoms)


def make_marginal(
    raw_points: Iterable[tuple[float, float]],
    normalize: bool = False,
) -> FiniteMarginal:
    """Build a marginal from raw (value, mass) pairs; same rules as make_joint."""
    cleaned: list[tuple[float, float]] = []
    for i, point in enumerate(raw_points):
        try:
            v, p = point
            v, p = float(v), float(p)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"point {i}: expected a (value, p) pair") from exc
        if not math.isfinite(v):
            raise ValidationError(f"point {i}: non-finite value")
        if not math.isfinite(p) or p < 0.0:
            raise ValidationError(f"point {i}: invalid mass {p!r}")
        cleaned.append((v, p))

    merged: dict[float, list[float]] = {}
    for v, p in cleaned:
        if p > 0.0:
            merged.setdefault(v, []).append(p)
    if not merged:
        raise EmptyDistribution("no point carries positive mass")

    group_mass = {v: math.fsum(ps) for v, ps in merged.items()}
    total = math.fsum(group_mass.values())
    if abs(total - 1.0) > INPUT_MASS_TOL and not normalize:
        raise NotNormalizable(
            f"masses sum to {total!r}; pass normalize=True to rescale"
        )
    scale = total if abs(total - 1.0) > MASS_TOL else 1.0
    points = tuple((v, group_mass[v] / scale) for v in sorted(group_mass))
    return FiniteMarginal(points)


def marginal_x(j: FiniteJointDistribution) -> FiniteMarginal:
    """X-marginal of a joint: masses aggregated over the y coordinate."""
    groups: dict[float, list[float]] = {}
    for x, _, p in j.atoms:
        groups.setdefault(x, []).append(p)
    return FiniteMarginal(tuple((v, math.fsum(ps)) for v, ps in sorted(groups.items())))


def marginal_y(j: FiniteJointDistribution) -> FiniteMarginal:
    """Y-marginal of a joint: masses aggregated over the x coordinate."""
    groups: dict[float, list[float]] = {}
    for _, y, p in j.atoms:
        groups.setdefault(y, []).append(p)
    return FiniteMarginal(tuple((v, math.fsum(ps)) for v, ps in sorted(groups.items())))


def product_joint(
    mx: FiniteMarginal,
    my: FiniteMarginal,
    max_atoms: int = MAX_PRODUCT_ATOMS,
) -> FiniteJointDistribution:
    """Independent coupling of two marginals: atoms (x, y, px * py)."""
    if len(mx) * len(my) > max_atoms:
        raise SupportTooLarge(
            f"product support {len(mx)} x {len(my)} exceeds cap {max_atoms}"
        )
    atoms = tuple(
        (x, y, px * py) for x, px in mx.points for y, py in my.points
    )
    return FiniteJointDistribution(atoms)


def _transform_value(phi, t: float) -> float:
    if isinstance(phi, Mapping):
        if t not in phi:
            raise UndefinedAtSupport(f"transform table has no entry for support point {t!r}")
        out = phi[t]
    else:
        try:
            out = phi(t)
        except Exception as exc:
            raise UndefinedAtSupport(f"transform failed at support point {t!r}") from exc
    out = float(out)
    if not math.isfinite(out):
        raise UndefinedAtSupport(f"transform is not finite at support point {t!r}")
    return out


def apply_transform(
    j: FiniteJointDistribution,
    phi: Mapping[float, float] | Callable[[float], float],
) -> FiniteJointDistribution:
    """Push a joint through a map applied to both coordinates.

    ``phi`` is either a finite value table or a callable defined on every
    support value of both coordinates.  Atoms that collide after mapping
    are merged.
    """
    table = {t: _transform_value(phi, t) for t in {v for x, y, _ in j.atoms for v in (x, y)}}
    groups: dict[tuple[float, float], list[float]] = {}
    for x, y, p in j.atoms:
        groups.setdefault((table[x], table[y]), []).append(p)
    atoms = tuple((x, y, math.fsum(ps)) for (x, y), ps in sorted(groups.items()))
    return FiniteJointDistribution(atoms)


def swap(j: FiniteJointDistribution) -> FiniteJointDistribution:
    """The same joint with the two coordinates exchanged."""
    return FiniteJointDistribution(tuple(sorted((y, x, p) for x, y, p in j.atoms)))


def expectation(m: FiniteMarginal) -> float:
    """Mean of a finite marginal."""
    return math.fsum(v * p for v, p in m.points)


# ---------------------------------------------------------------------------
# Sampling substrate


@dataclass(frozen=True)
class PairedSample:
    """Observed (x, y) pairs held as two aligned float arrays."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
            raise ValidationError("sample coordinates must be 1-D arrays of equal length")
        if x.size < 1:
            raise ValidationError("sample must contain at least one pair")
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise ValidationError("sample contains non-finite values")
        x = x.copy()
        y = y.copy()
        x.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "PairedSample":
        rows = list(pairs)
        if not rows:
            raise ValidationError("sample must contain at least one pair")
        arr = np.asarray(rows, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValidationError("pairs must be (x, y) tuples")
        return cls(arr[:, 0], arr[:, 1])

    @property
    def n(self) -> int:
        return int(self.x.size)

    def pairs(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.x, self.y)]


# ---------------------------------------------------------------------------
# Gridded-density substrate


def _cumulative_trapezoid(f: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Forward cumulative trapezoid integral, zero at the first node."""
    segments = 0.5 * (f[1:] + f[:-1]) * np.diff(grid)
    return np.concatenate(([0.0], np.cumsum(segments)))


def _reverse_cumulative_trapezoid(f: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Backward cumulative trapezoid integral, zero at the last node.

    Accumulating from the right keeps the *relative* accuracy of small tail
    values, which matters for hazard rates and mean residual life.
    """
    segments = 0.5 * (f[1:] + f[:-1]) * np.diff(grid)
    return np.concatenate((np.cumsum(segments[::-1])[::-1], [0.0]))


@dataclass(frozen=True)
class GridDensityPair:
    """Two marginal densities tabulated on one strictly increasing grid.

    The declared integration rule is the trapezoid rule on the given grid;
    both densities must integrate to 1 within 1e-6 under it.  Mass beyond
    the last node is treated as zero (truncation), so cdf values are
    accumulated from the left and survival values from the right.
    """

    grid: np.ndarray
    fx: np.ndarray
    fy: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        fx = np.asarray(self.fx, dtype=float)
        fy = np.asarray(self.fy, dtype=float)
        if grid.ndim != 1 or grid.size < 3:
            raise ValidationError("grid must be 1-D with at least 3 nodes")
        if fx.shape != grid.shape or fy.shape != grid.shape:
            raise ValidationError("densities must match the grid shape")
        if not np.isfinite(grid).all():
            raise ValidationError("grid contains non-finite abscissae")
        if np.any(np.diff(grid) <= 0.0):
            raise ValidationError("grid abscissae must be strictly increasing")
        for name, f in (("fx", fx), ("fy", fy)):
            if not np.isfinite(f).all():
                raise ValidationError(f"{name} contains non-finite values")
            if np.any(f < 0.0):
                raise ValidationError(f"{name} contains negative density values")
            integral = float(np.sum(0.5 * (f[1:] + f[:-1]) * np.diff(grid)))
            if abs(integral - 1.0) > DENSITY_NORM_TOL:
                raise ValidationError(
                    f"{name} integrates to {integral!r} under the trapezoid rule, not 1"
                )
        for name, arr in (("grid", grid), ("fx", fx), ("fy", fy)):
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @classmethod
    def from_arrays(cls, grid, fx, fy, normalize: bool = False) -> "GridDensityPair":
        """Build from tabulated values, optionally rescaling each density so
        its trapezoid integral is exactly 1."""
        grid = np.asarray(grid, dtype=float)
        fx = np.asarray(fx, dtype=float)
        fy = np.asarray(fy, dtype=float)
        if normalize:
            dx = np.diff(grid)
            zx = float(np.sum(0.5 * (fx[1:] + fx[:-1]) * dx))
            zy = float(np.sum(0.5 * (fy[1:] + fy[:-1]) * dx))
            if zx <= 0.0 or zy <= 0.0:
                raise ValidationError("cannot normalize a density with nonpositive integral")
            fx = fx / zx
            fy = fy / zy
        return cls(grid, fx, fy)

    @classmethod
    def from_functions(cls, grid, fx_fn, fy_fn, normalize: bool = True) -> "GridDensityPair":
        """Tabulate two density callables on a grid (normalized by default)."""
        grid = np.asarray(grid, dtype=float)
        fx = np.asarray([float(fx_fn(t)) for t in grid])
        fy = np.asarray([float(fy_fn(t)) for t in grid])
        return cls.from_arrays(grid, fx, fy, normalize=normalize)

    def __len__(self) -> int:
        return int(self.grid.size)

    @cached_property
    def cdf_x(self) -> np.ndarray:
        return _cumulative_trapezoid(self.fx, self.grid)

    @cached_property
    def cdf_y(self) -> np.ndarray:
        return _cumulative_trapezoid(self.fy, self.grid)

    @cached_property
    def survival_x(self) -> np.ndarray:
        return _reverse_cumulative_trapezoid(self.fx, self.grid)

    @cached_property
    def survival_y(self) -> np.ndarray:
        return _reverse_cumulative_trapezoid(self.fy, self.grid)

    def swapped(self) -> "GridDensityPair":
        return GridDensityPair(self.grid, self.fy, self.fx)

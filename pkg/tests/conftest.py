"""Shared generators and brute-force oracles for the test suite."""

import math

import numpy as np
import pytest

from stochorder import (
    FiniteJointDistribution,
    FiniteMarginal,
    GridDensityPair,
    make_joint,
    make_marginal,
    product_joint,
)


def random_marginal(rng: np.random.Generator, max_support: int = 6) -> FiniteMarginal:
    k = int(rng.integers(1, max_support + 1))
    values = rng.uniform(-10.0, 10.0, k)
    masses = rng.dirichlet(np.ones(k))
    return make_marginal(zip(values, masses), normalize=True)


def random_product_joint(rng: np.random.Generator, max_support: int = 6) -> FiniteJointDistribution:
    return product_joint(random_marginal(rng, max_support), random_marginal(rng, max_support))


def random_joint(rng: np.random.Generator, max_atoms: int = 8) -> FiniteJointDistribution:
    k = int(rng.integers(1, max_atoms + 1))
    xs = rng.uniform(-10.0, 10.0, k)
    ys = rng.uniform(-10.0, 10.0, k)
    masses = rng.dirichlet(np.ones(k))
    return make_joint(zip(xs, ys, masses), normalize=True)


def direct_l1(j: FiniteJointDistribution) -> float:
    """Brute-force E|X - Y| in a single pass over all atoms."""
    return math.fsum(abs(x - y) * p for x, y, p in j.atoms)


def direct_kstar(j: FiniteJointDistribution) -> float:
    """Brute-force E(|X-Y| / (1 + |X-Y|)) in a single pass over all atoms."""
    return math.fsum(p * abs(x - y) / (1.0 + abs(x - y)) for x, y, p in j.atoms)


def gaussian_mixture_density(rng: np.random.Generator, grid: np.ndarray) -> np.ndarray:
    """A random smooth density tabulated on the grid (not yet normalized)."""
    k = int(rng.integers(1, 4))
    weights = rng.dirichlet(np.ones(k))
    means = rng.uniform(-2.0, 5.0, k)
    sigmas = rng.uniform(0.6, 1.8, k)
    f = np.zeros_like(grid)
    for w, mu, sigma in zip(weights, means, sigmas):
        f += w * np.exp(-0.5 * ((grid - mu) / sigma) ** 2) / (sigma * math.sqrt(2.0 * math.pi))
    return f


def random_smooth_grid_pair(rng: np.random.Generator) -> GridDensityPair:
    """Random smooth density pair; half the draws are exponentially tilted
    copies of the base, which are likelihood-ratio ordered by construction."""
    grid = np.linspace(-8.0, 14.0, 1200)
    fx = gaussian_mixture_density(rng, grid)
    if rng.random() < 0.5:
        theta = rng.uniform(0.1, 0.8)
        fy = fx * np.exp(theta * grid)
    else:
        fy = gaussian_mixture_density(rng, grid)
    return GridDensityPair.from_arrays(grid, fx, fy, normalize=True)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)

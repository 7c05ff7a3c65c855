"""Classical marginal-based partial orders.

Four orders, each decided by a pointwise comparison of a defining quantity
of the two marginals:

* st  -- usual stochastic order: F_x >= F_y everywhere.
* hr  -- hazard rate order: f_x / survival_x >= f_y / survival_y everywhere.
* lr  -- likelihood ratio order: fy / fx nondecreasing.
* mrl -- mean residual life order: expected remaining life beyond t smaller
  for the preceding side at every t.

The usual stochastic order is available both for finite marginals (cdf
step functions compared on the union of supports) and for gridded
densities; the other three are defined for densities only, so they accept
a :class:`GridDensityPair`.  Verdicts follow the shared trichotomy with
``INCOMPARABLE`` when the defining inequality points both ways; the report
then carries two witness abscissae.

Grid comparisons truncate at the last node: mass beyond it is treated as
zero, hazard and mean-residual-life comparisons exclude nodes where either
survival has dropped to 1e-12 or below, and the likelihood ratio is only
examined where the first density exceeds 1e-12.
"""

from __future__ import annotations

import numpy as np

from .distributions import (
    FiniteMarginal,
    GridDensityPair,
    _reverse_cumulative_trapezoid,
)
from .errors import EmptyComparisonRegion, ValidationError
from .verdicts import Outcome, PartialOrderReport, Verdict

#: Pointwise classification tolerance: differences within
#: ABS_TOL + REL_TOL * scale count as ties.
ABS_TOL = 1e-12
REL_TOL = 1e-9
#: Survival floor below which hr/mrl nodes are excluded.
SURVIVAL_FLOOR = 1e-12
#: Density floor below which lr nodes are excluded.
DENSITY_FLOOR = 1e-12


def _pointwise_report(
    order: str,
    abscissae: np.ndarray,
    advantage: np.ndarray,
    scale: np.ndarray,
) -> PartialOrderReport:
    """Classify a pointwise comparison.

    ``advantage[i] > 0`` argues that the first variable precedes at
    ``abscissae[i]``; negative values argue the opposite.
    """
    tol = ABS_TOL + REL_TOL * scale
    pos = advantage > tol
    neg = advantage < -tol
    evidence = {
        "max_advantage": float(advantage.max(initial=0.0)),
        "min_advantage": float(advantage.min(initial=0.0)),
    }
    if pos.any() and neg.any():
        witness = (
            float(abscissae[int(np.argmax(advantage))]),
            float(abscissae[int(np.argmin(advantage))]),
        )
        return PartialOrderReport(order, Verdict(Outcome.INCOMPARABLE, evidence), witness)
    if pos.any():
        return PartialOrderReport(order, Verdict(Outcome.FIRST_PRECEDES, evidence))
    if neg.any():
        return PartialOrderReport(order, Verdict(Outcome.SECOND_PRECEDES, evidence))
    return PartialOrderReport(order, Verdict(Outcome.EQUAL, evidence))


def _st_on_marginals(a: FiniteMarginal, b: FiniteMarginal) -> PartialOrderReport:
    support = np.asarray(sorted(set(a.values) | set(b.values)))
    fa = a.cdf(support)
    fb = b.cdf(support)
    return _pointwise_report("st", support, fa - fb, np.maximum(np.abs(fa), np.abs(fb)))


def _st_on_grid(g: GridDensityPair) -> PartialOrderReport:
    fa, fb = g.cdf_x, g.cdf_y
    return _pointwise_report("st", g.grid, fa - fb, np.maximum(np.abs(fa), np.abs(fb)))


def compare_st(
    a: FiniteMarginal | GridDensityPair,
    b: FiniteMarginal | None = None,
) -> PartialOrderReport:
    """Usual stochastic order: the first side precedes iff its cdf dominates.

    Call either with two finite marginals or with a single
    :class:`GridDensityPair` (cdfs obtained by the trapezoid rule).
    """
    if isinstance(a, GridDensityPair):
        if b is not None:
            raise ValidationError("pass either two marginals or one GridDensityPair")
        return _st_on_grid(a)
    if not isinstance(b, FiniteMarginal):
        raise ValidationError("comparing a finite marginal requires a second marginal")
    return _st_on_marginals(a, b)


def compare_hr(g: GridDensityPair) -> PartialOrderReport:
    """Hazard rate order: the side with the everywhere-larger hazard precedes."""
    mask = (g.survival_x > SURVIVAL_FLOOR) & (g.survival_y > SURVIVAL_FLOOR)
    if not mask.any():
        raise EmptyComparisonRegion("no grid node has both survivals above the floor")
    rx = g.fx[mask] / g.survival_x[mask]
    ry = g.fy[mask] / g.survival_y[mask]
    return _pointwise_report("hr", g.grid[mask], rx - ry, np.maximum(np.abs(rx), np.abs(ry)))


def compare_lr(g: GridDensityPair) -> PartialOrderReport:
    """Likelihood ratio order, decided by monotonicity of fy / fx.

    The ratio is examined across the nodes where fx exceeds the density
    floor.  A nondecreasing, non-constant ratio means the first side
    precedes; nonincreasing means the second side; a constant ratio means
    equality; an up-and-down ratio is incomparable, witnessed by the left
    abscissae of the steepest step in each direction.
    """
    mask = g.fx > DENSITY_FLOOR
    if not mask.any():
        raise EmptyComparisonRegion("fx is below the density floor everywhere")
    t = g.grid[mask]
    ratio = g.fy[mask] / g.fx[mask]
    steps = np.diff(ratio)
    if steps.size == 0:
        return PartialOrderReport(
            "lr", Verdict(Outcome.EQUAL, {"max_advantage": 0.0, "min_advantage": 0.0})
        )
    scale = np.maximum(np.abs(ratio[:-1]), np.abs(ratio[1:]))
    tol = ABS_TOL + REL_TOL * scale
    up = steps > tol
    down = steps < -tol
    evidence = {"max_advantage": float(steps.max()), "min_advantage": float(steps.min())}
    if up.any() and down.any():
        witness = (float(t[int(np.argmax(steps))]), float(t[int(np.argmin(steps))]))
        return PartialOrderReport("lr", Verdict(Outcome.INCOMPARABLE, evidence), witness)
    if up.any():
        return PartialOrderReport("lr", Verdict(Outcome.FIRST_PRECEDES, evidence))
    if down.any():
        return PartialOrderReport("lr", Verdict(Outcome.SECOND_PRECEDES, evidence))
    return PartialOrderReport("lr", Verdict(Outcome.EQUAL, evidence))


def compare_mrl(g: GridDensityPair) -> PartialOrderReport:
    """Mean residual life order: the side expected to run out sooner precedes.

    The remaining-life integral truncates at the last grid node, so values
    near the end of the grid are those of the truncated law.
    """
    mask = (g.survival_x > SURVIVAL_FLOOR) & (g.survival_y > SURVIVAL_FLOOR)
    if not mask.any():
        raise EmptyComparisonRegion("no grid node has both survivals above the floor")
    tail_x = _reverse_cumulative_trapezoid(g.survival_x, g.grid)
    tail_y = _reverse_cumulative_trapezoid(g.survival_y, g.grid)
    mrl_x = tail_x[mask] / g.survival_x[mask]
    mrl_y = tail_y[mask] / g.survival_y[mask]
    # smaller mean residual life argues the first side precedes
    return _pointwise_report(
        "mrl", g.grid[mask], mrl_y - mrl_x, np.maximum(np.abs(mrl_x), np.abs(mrl_y))
    )

"""Utility functions over decision-maker points, ranking and selection.

A utility function maps each (disparity, uncertainty) point to a real
number so that the four corner orderings hold:

    certainly fair   (0, 0)  >  uncertainly fair   (0, 1)
    uncertainly fair (0, 1)  >  uncertainly unfair (1, 1)
    uncertainly unfair (1, 1) > certainly unfair   (1, 0)

plus the three comparisons these imply by transitivity. Any function
satisfying them can be registered; two are built in. ``topsis`` scores
a point by how much closer it sits to the ideal corner (0, 0) than to
the worst corner (1, 0), which lands in [-1, 1]; ``norm`` is the same
score rescaled to [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .disparity import DecisionMakerPoint
from .errors import DomainError, EmptyInput

__all__ = [
    "UtilityValue",
    "RankedEntry",
    "RankedSelection",
    "AxiomCheck",
    "AxiomReport",
    "topsis_value",
    "norm_value",
    "u_topsis",
    "u_norm",
    "evaluate",
    "verify_utility_axioms",
    "register_utility",
    "known_utilities",
    "rank_all",
    "select_optimal",
    "indifference_points",
]

INDIFFERENCE_TOL = 1e-10


@dataclass(frozen=True)
class UtilityValue:
    value: float
    function_id: str


def _check_square(disparity: float, uncertainty: float) -> None:
    if not (0.0 <= disparity <= 1.0 and 0.0 <= uncertainty <= 1.0):
        raise DomainError(
            f"utility is defined on [0, 1]^2, got ({disparity}, {uncertainty})"
        )


def topsis_value(disparity: float, uncertainty: float) -> float:
    """Distance to the worst corner (1, 0) minus distance to the ideal (0, 0).

    Positive iff the disparity is below 50%, zero on the vertical line
    at 50%, negative above it.
    """
    _check_square(disparity, uncertainty)
    to_worst = math.sqrt((disparity - 1.0) ** 2 + uncertainty**2)
    to_ideal = math.sqrt(disparity**2 + uncertainty**2)
    return to_worst - to_ideal


def norm_value(disparity: float, uncertainty: float) -> float:
    """``topsis_value`` rescaled from [-1, 1] to [0, 1]."""
    return (topsis_value(disparity, uncertainty) + 1.0) / 2.0


@dataclass(frozen=True)
class AxiomCheck:
    description: str
    holds: bool
    left: float
    right: float


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.holds]


# The three corner preferences and the three they imply by transitivity,
# as ((preferred point), (dispreferred point)).
_CORNER_PREFERENCES = (
    ((0.0, 0.0), (0.0, 1.0)),
    ((0.0, 1.0), (1.0, 1.0)),
    ((1.0, 1.0), (1.0, 0.0)),
    ((0.0, 0.0), (1.0, 1.0)),
    ((0.0, 0.0), (1.0, 0.0)),
    ((0.0, 1.0), (1.0, 0.0)),
)


def verify_utility_axioms(candidate: Callable[[float, float], float]) -> AxiomReport:
    """Check the six strict corner inequalities a utility function must satisfy."""
    checks = []
    for (better, worse) in _CORNER_PREFERENCES:
        left = candidate(*better)
        right = candidate(*worse)
        checks.append(
            AxiomCheck(
                description=(
                    f"u({better[0]:g}, {better[1]:g}) > u({worse[0]:g}, {worse[1]:g})"
                ),
                holds=left > right,
                left=left,
                right=right,
            )
        )
    return AxiomReport(checks=tuple(checks))


_UTILITIES: dict[str, Callable[[float, float], float]] = {}


def register_utility(function_id: str, fn: Callable[[float, float], float]) -> None:
    """Add a utility function to the registry, rejecting it if any corner
    preference fails."""
    report = verify_utility_axioms(fn)
    if not report.passed:
        failed = "; ".join(c.description for c in report.failures())
        raise ValueError(f"utility {function_id!r} violates corner preferences: {failed}")
    _UTILITIES[function_id] = fn


def known_utilities() -> tuple[str, ...]:
    return tuple(_UTILITIES)


def _utility_fn(function_id: str) -> Callable[[float, float], float]:
    try:
        return _UTILITIES[function_id]
    except KeyError:
        raise ValueError(
            f"unknown utility {function_id!r}; registered: {sorted(_UTILITIES)}"
        ) from None


register_utility("topsis", topsis_value)
register_utility("norm", norm_value)


def evaluate(point: DecisionMakerPoint, utility: str = "topsis") -> UtilityValue:
    fn = _utility_fn(utility)
    return UtilityValue(fn(point.disparity, point.uncertainty), utility)


def u_topsis(point: DecisionMakerPoint) -> UtilityValue:
    return evaluate(point, "topsis")


def u_norm(point: DecisionMakerPoint) -> UtilityValue:
    return evaluate(point, "norm")


@dataclass(frozen=True)
class RankedEntry:
    rank: int
    label: str
    point: DecisionMakerPoint
    utility: UtilityValue


@dataclass(frozen=True)
class RankedSelection:
    """Decision-makers sorted by descending utility.

    Ranks are positional (1-based). Labels whose utilities compare equal
    as floats form a tie group; only groups of two or more are listed.
    Tied inputs produce bit-identical utilities, so exact float equality
    is the intended comparison.
    """

    entries: tuple[RankedEntry, ...]
    tie_groups: tuple[tuple[str, ...], ...]


def rank_all(
    points: Sequence[DecisionMakerPoint],
    utility: str = "topsis",
    tie_key: Callable[[DecisionMakerPoint], float] | None = None,
) -> RankedSelection:
    """Stable descending sort by utility.

    Equal utilities keep input order unless ``tie_key`` is given, in
    which case tied entries are ordered by descending key (e.g. an
    externally known accuracy). Ties are still reported as tie groups
    either way.
    """
    if not points:
        raise EmptyInput("cannot rank an empty list of decision-makers")
    fn = _utility_fn(utility)
    values = [fn(p.disparity, p.uncertainty) for p in points]
    if tie_key is None:
        order = sorted(range(len(points)), key=lambda idx: -values[idx])
    else:
        order = sorted(
            range(len(points)), key=lambda idx: (-values[idx], -tie_key(points[idx]))
        )

    entries = tuple(
        RankedEntry(
            rank=pos + 1,
            label=points[idx].label,
            point=points[idx],
            utility=UtilityValue(values[idx], utility),
        )
        for pos, idx in enumerate(order)
    )

    tie_groups: list[tuple[str, ...]] = []
    block = [entries[0]]
    for entry in entries[1:]:
        if entry.utility.value == block[-1].utility.value:
            block.append(entry)
        else:
            if len(block) > 1:
                tie_groups.append(tuple(e.label for e in block))
            block = [entry]
    if len(block) > 1:
        tie_groups.append(tuple(e.label for e in block))
    return RankedSelection(entries=entries, tie_groups=tuple(tie_groups))


def select_optimal(
    points: Sequence[DecisionMakerPoint], utility: str = "topsis"
) -> tuple[str, UtilityValue]:
    """Argmax of utility in one linear pass; the first maximum wins ties."""
    if not points:
        raise EmptyInput("cannot select from an empty list of decision-makers")
    fn = _utility_fn(utility)
    best = points[0]
    best_value = fn(best.disparity, best.uncertainty)
    for point in points[1:]:
        value = fn(point.disparity, point.uncertainty)
        if value > best_value:
            best, best_value = point, value
    return best.label, UtilityValue(best_value, utility)


def _solve_disparity(target: float, uncertainty: float) -> float | None:
    # topsis_value is strictly decreasing in the disparity at fixed
    # uncertainty, so a solution exists iff the target lies between the
    # values at the two edges; bisect when it does.
    at_zero = topsis_value(0.0, uncertainty)
    at_one = topsis_value(1.0, uncertainty)
    if not at_one <= target <= at_zero:
        return None
    if target == at_zero:
        return 0.0
    if target == at_one:
        return 1.0
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        residual = topsis_value(mid, uncertainty) - target
        if residual == 0.0:
            return mid
        if residual > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < INDIFFERENCE_TOL:
            break
    return 0.5 * (lo + hi)


def indifference_points(
    target_utility: float, samples: int = 101
) -> list[DecisionMakerPoint]:
    """Points of equal ``topsis`` utility, one per uncertainty sample.

    Scans ``samples`` evenly spaced uncertainty values across [0, 1] and
    solves for the disparity that attains the target at each; samples
    where the target is unreachable are skipped. A target of 0 always
    yields the vertical line at disparity 0.5.
    """
    if not -1.0 <= target_utility <= 1.0:
        raise DomainError(
            f"indifference target must lie in [-1, 1], got {target_utility}"
        )
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    points = []
    for sigma in np.linspace(0.0, 1.0, samples):
        sigma = float(sigma)
        disparity = _solve_disparity(target_utility, sigma)
        if disparity is None:
            continue
        points.append(
            DecisionMakerPoint(
                disparity=disparity,
                uncertainty=sigma,
                label=f"u={target_utility:g}@sigma={sigma:.6f}",
            )
        )
    return points

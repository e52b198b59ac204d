"""Exhaustive synthetic populations of decision-makers.

For every combination of two group sizes and every feasible number of
favorable outcomes in each group, one decision-maker point is produced.
With the default sizes {1, 5, 10, 50} that is (2+6+11+51)^2 = 4,900
decision-makers, a population dense enough to exercise the whole unit
square of disparities and uncertainties.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bayes import FREQUENTIST, GroupObservation
from .disparity import DecisionMakerPoint, GroupPair, decision_maker_from_pair
from .utility import rank_all

__all__ = ["GridSpec", "GridRow", "grid_cardinality", "generate_grid", "table_extremes"]

DEFAULT_GROUP_SIZES = (1, 5, 10, 50)


@dataclass(frozen=True)
class GridSpec:
    group_sizes: tuple[int, ...] = DEFAULT_GROUP_SIZES
    utility: str = "topsis"
    flavor: str = FREQUENTIST

    def __post_init__(self):
        sizes = tuple(sorted(set(int(n) for n in self.group_sizes)))
        if not sizes:
            raise ValueError("group_sizes must be a nonempty set of positive integers")
        if sizes[0] < 1:
            raise ValueError(f"group sizes must be >= 1, got {sizes[0]}")
        object.__setattr__(self, "group_sizes", sizes)


def grid_cardinality(spec: GridSpec) -> int:
    """Number of points the grid will contain: (sum of (n+1))^2."""
    per_side = sum(n + 1 for n in spec.group_sizes)
    return per_side * per_side


def generate_grid(spec: GridSpec = GridSpec()) -> list[DecisionMakerPoint]:
    """One decision-maker per tuple (n_i, k_i, n_j, k_j), in lexicographic
    tuple order. Labels are the canonical "n_i:k_i|n_j:k_j" string so rows
    are reproducible and diffable.
    """
    points = []
    for n_i in spec.group_sizes:
        for k_i in range(n_i + 1):
            for n_j in spec.group_sizes:
                for k_j in range(n_j + 1):
                    pair = GroupPair(
                        GroupObservation("i", n_i, k_i),
                        GroupObservation("j", n_j, k_j),
                    )
                    points.append(
                        decision_maker_from_pair(
                            pair,
                            flavor=spec.flavor,
                            label=f"{n_i}:{k_i}|{n_j}:{k_j}",
                        )
                    )
    return points


@dataclass(frozen=True)
class GridRow:
    """One displayable row of a ranked synthetic population."""

    rank: int
    label: str
    n_i: int
    k_i: int
    n_j: int
    k_j: int
    p_i: float
    p_j: float
    disparity: float
    uncertainty: float
    utility: float

    def formatted(self, precision: int = 3) -> dict:
        return {
            "rank": self.rank,
            "label": self.label,
            "n_i": self.n_i,
            "k_i": self.k_i,
            "n_j": self.n_j,
            "k_j": self.k_j,
            "p_i": f"{self.p_i:.{precision}f}",
            "p_j": f"{self.p_j:.{precision}f}",
            "disparity": f"{self.disparity:.{precision}f}",
            "uncertainty": f"{self.uncertainty:.{precision}f}",
            "utility": f"{self.utility:.{precision}f}",
        }


def _row(entry) -> GridRow:
    detail = entry.point.detail
    return GridRow(
        rank=entry.rank,
        label=entry.label,
        n_i=detail.i.n,
        k_i=detail.i.k,
        n_j=detail.j.n,
        k_j=detail.j.k,
        p_i=detail.i.treatment,
        p_j=detail.j.treatment,
        disparity=entry.point.disparity,
        uncertainty=entry.point.uncertainty,
        utility=entry.utility.value,
    )


def table_extremes(
    grid: list[DecisionMakerPoint], count: int, utility: str = "topsis"
) -> tuple[list[GridRow], list[GridRow]]:
    """The ``count`` best and ``count`` worst rows of the ranked grid.

    Within a block of equal utility the order follows the grid's
    lexicographic tuple order, which is as good as any: equal-utility
    decision-makers are mutually indifferent.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if count == 0:
        return [], []
    ranking = rank_all(grid, utility=utility)
    top = [_row(e) for e in ranking.entries[:count]]
    bottom = [_row(e) for e in ranking.entries[-count:]]
    return top, bottom

"""Disparities between groups and the uncertainty attached to them.

The disparity between two groups is the absolute difference of their
treatment probabilities; it is a metric over groups. Each comparison
also carries an uncertainty: the mean of the two groups' normalized
posterior variances. A decision-maker (a model, a person, a process)
is summarized by the point (disparity, uncertainty) in the unit square.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bayes import (
    BAYESIAN,
    FREQUENTIST,
    GroupObservation,
    frequentist_treatment,
    normalized_variance,
    posterior_from_counts,
    posterior_mean,
)
from .errors import EmptyGroup, TooFewGroups

__all__ = [
    "GroupPair",
    "GroupSummary",
    "PairDetail",
    "DecisionMakerPoint",
    "frequentist_disparity",
    "bayesian_disparity",
    "disparity_uncertainty",
    "decision_maker_from_pair",
    "multigroup_decision_maker",
]


@dataclass(frozen=True)
class GroupPair:
    """Two distinct groups to be compared under the same criterion."""

    i: GroupObservation
    j: GroupObservation

    def __post_init__(self):
        if self.i.group_label == self.j.group_label:
            raise ValueError(
                f"a pair needs two distinct groups, got {self.i.group_label!r} twice"
            )


@dataclass(frozen=True)
class GroupSummary:
    """Counts and the treatment estimate actually used for one group."""

    label: str
    n: int
    k: int
    treatment: float


@dataclass(frozen=True)
class PairDetail:
    """Provenance of a decision-maker point: the two groups compared.

    ``extremes_from`` is set when the groups were selected as the most
    and least privileged out of a larger list, and names the estimate
    used for that selection.
    """

    i: GroupSummary
    j: GroupSummary
    flavor: str
    extremes_from: str | None = None


@dataclass(frozen=True)
class DecisionMakerPoint:
    """A decision-maker reduced to (disparity, uncertainty) in [0, 1]^2."""

    disparity: float
    uncertainty: float
    label: str
    detail: PairDetail | None = None

    def __post_init__(self):
        if not (0.0 <= self.disparity <= 1.0 and 0.0 <= self.uncertainty <= 1.0):
            raise ValueError(
                f"decision-maker coordinates must lie in [0, 1]^2, "
                f"got ({self.disparity}, {self.uncertainty})"
            )


def frequentist_disparity(pair: GroupPair) -> float:
    """Absolute difference of the empirical treatments |k_i/n_i - k_j/n_j|."""
    ti = frequentist_treatment(pair.i).value
    tj = frequentist_treatment(pair.j).value
    return abs(ti - tj)


def bayesian_disparity(pair: GroupPair) -> float:
    """Absolute difference of the posterior-mean treatments."""
    mi = posterior_mean(posterior_from_counts(pair.i)).value
    mj = posterior_mean(posterior_from_counts(pair.j)).value
    return abs(mi - mj)


def disparity_uncertainty(pair: GroupPair) -> float:
    """Mean of the two groups' normalized posterior variances.

    Equals 1 exactly when both groups consist of a single individual and
    shrinks toward 0 as the groups grow.
    """
    vi = normalized_variance(posterior_from_counts(pair.i))
    vj = normalized_variance(posterior_from_counts(pair.j))
    return (vi + vj) / 2.0


def _disparity(pair: GroupPair, flavor: str) -> float:
    if flavor == FREQUENTIST:
        return frequentist_disparity(pair)
    if flavor == BAYESIAN:
        return bayesian_disparity(pair)
    raise ValueError(f"unknown disparity flavor {flavor!r}")


def _treatment(obs: GroupObservation, flavor: str) -> float:
    if flavor == FREQUENTIST:
        return frequentist_treatment(obs).value
    if flavor == BAYESIAN:
        return posterior_mean(posterior_from_counts(obs)).value
    raise ValueError(f"unknown disparity flavor {flavor!r}")


def decision_maker_from_pair(
    pair: GroupPair, flavor: str = FREQUENTIST, label: str = ""
) -> DecisionMakerPoint:
    """Assemble the (disparity, uncertainty) point for a pair of groups."""
    detail = PairDetail(
        i=GroupSummary(pair.i.group_label, pair.i.n, pair.i.k, _treatment(pair.i, flavor)),
        j=GroupSummary(pair.j.group_label, pair.j.n, pair.j.k, _treatment(pair.j, flavor)),
        flavor=flavor,
    )
    return DecisionMakerPoint(
        disparity=_disparity(pair, flavor),
        uncertainty=disparity_uncertainty(pair),
        label=label,
        detail=detail,
    )


def multigroup_decision_maker(
    groups: list[GroupObservation], label: str = "", flavor: str = FREQUENTIST
) -> DecisionMakerPoint:
    """Reduce two or more groups to the max-min disparity point.

    The most privileged group is the one with the highest empirical
    treatment, the least privileged the one with the lowest; the
    reported disparity is the difference of their treatments and the
    uncertainty comes from those two groups' posteriors only. Ties in
    the extreme selection are broken by lexicographic group label, so
    the result is deterministic.

    The extremes are always identified with the empirical treatments,
    even when ``flavor`` is bayesian for the reported disparity; the
    returned detail flags this through ``extremes_from``.
    """
    if len(groups) < 2:
        raise TooFewGroups(f"need at least 2 groups, got {len(groups)}")
    labels = [g.group_label for g in groups]
    if len(set(labels)) != len(labels):
        raise ValueError("group labels must be unique")
    for g in groups:
        if g.n == 0:
            raise EmptyGroup(f"group {g.group_label!r} has no observations")

    treatments = {g.group_label: frequentist_treatment(g).value for g in groups}
    t_max = max(treatments.values())
    t_min = min(treatments.values())
    most = min(
        (g for g in groups if treatments[g.group_label] == t_max),
        key=lambda g: g.group_label,
    )
    least_candidates = sorted(
        (g for g in groups if treatments[g.group_label] == t_min),
        key=lambda g: g.group_label,
    )
    least = least_candidates[0]
    if least.group_label == most.group_label:
        # Every group ties; keep the pair distinct.
        least = least_candidates[1]

    if flavor == FREQUENTIST:
        disparity = treatments[most.group_label] - treatments[least.group_label]
    else:
        disparity = _disparity(GroupPair(most, least), flavor)
    uncertainty = disparity_uncertainty(GroupPair(most, least))
    detail = PairDetail(
        i=GroupSummary(most.group_label, most.n, most.k, _treatment(most, flavor)),
        j=GroupSummary(least.group_label, least.n, least.k, _treatment(least, flavor)),
        flavor=flavor,
        extremes_from=FREQUENTIST,
    )
    return DecisionMakerPoint(disparity, uncertainty, label, detail)

"""Treatment-probability estimation for a single group.

A :class:`GroupObservation` records how many individuals of a group met
the conditioning event (``n``) and how many of those also received the
favorable event (``k``). The frequentist estimate of the group's
treatment probability is simply ``k / n``.

The Bayesian route models the treatment probability as a random
variable: starting from the non-informative uniform prior Beta(1, 1),
the conjugate update with the observed counts yields the posterior
Beta(1 + k, 1 + n - k). Its mean is the Bayesian treatment estimate and
its variance quantifies how uncertain the estimate is.

Variances are reported on a normalized scale. Since shape parameters
obtained from counts are natural numbers, the largest variance any
posterior built from at least one observation can reach is that of
Beta(1, 2) (equivalently Beta(2, 1)), the single-individual case.
Dividing by it maps every posterior variance into (0, 1], where 1 means
maximally uncertain and values near 0 mean the treatment probability is
pinned down.

Credible intervals are equal-tailed: a mass of 0.95 puts 2.5% of the
posterior below the lower bound and 2.5% above the upper bound. The
highest-density convention is not implemented.

Groups with ``n = 0`` are rejected with :class:`~fairuq.errors.EmptyGroup`
everywhere: their frequentist treatment is undefined, and the prior's
variance would exceed the normalization ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import betadist
from .errors import DomainError, EmptyGroup, OutOfRange

__all__ = [
    "FREQUENTIST",
    "BAYESIAN",
    "GroupObservation",
    "PosteriorShape",
    "TreatmentEstimate",
    "frequentist_treatment",
    "posterior_from_counts",
    "posterior_mean",
    "posterior_variance",
    "normalized_variance",
    "beta_pdf",
    "beta_cdf",
    "credible_interval",
]

FREQUENTIST = "frequentist"
BAYESIAN = "bayesian"


@dataclass(frozen=True)
class GroupObservation:
    """Per-group counts under a fairness criterion.

    ``n`` counts the individuals of the group that satisfy the
    conditioning event, ``k`` counts those that additionally received
    the favorable event, so 0 <= k <= n.
    """

    group_label: str
    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(f"counts must be nonnegative, got n={self.n}, k={self.k}")
        if self.k > self.n:
            raise ValueError(
                f"k={self.k} exceeds n={self.n} for group {self.group_label!r}"
            )


@dataclass(frozen=True)
class PosteriorShape:
    """Shape parameters of a Beta belief about a treatment probability."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(
                f"shape parameters must be >= 1, got ({self.alpha}, {self.beta})"
            )


@dataclass(frozen=True)
class TreatmentEstimate:
    """A point estimate of a group's treatment probability."""

    value: float
    flavor: str


def frequentist_treatment(obs: GroupObservation) -> TreatmentEstimate:
    """Empirical treatment probability k / n (maximum likelihood)."""
    if obs.n == 0:
        raise EmptyGroup(
            f"group {obs.group_label!r} has no observations; "
            "its empirical treatment is undefined"
        )
    return TreatmentEstimate(obs.k / obs.n, FREQUENTIST)


def posterior_from_counts(obs: GroupObservation) -> PosteriorShape:
    """Conjugate update of the uniform Beta(1, 1) prior with the counts."""
    if obs.n == 0:
        raise EmptyGroup(
            f"group {obs.group_label!r} has no observations; "
            "refusing to fall back to the bare prior"
        )
    return PosteriorShape(alpha=1 + obs.k, beta=1 + obs.n - obs.k)


def posterior_mean(shape: PosteriorShape) -> TreatmentEstimate:
    """Posterior expectation alpha / (alpha + beta), the Bayesian estimate."""
    return TreatmentEstimate(shape.alpha / (shape.alpha + shape.beta), BAYESIAN)


def posterior_variance(shape: PosteriorShape) -> float:
    """Variance of Beta(alpha, beta): alpha*beta / ((alpha+beta)^2 (alpha+beta+1))."""
    a, b = shape.alpha, shape.beta
    total = a + b
    return (a * b) / (total * total * (total + 1))


# Largest variance reachable by a posterior built from n >= 1 observations;
# the denominator of the normalized scale.
MAX_POSTERIOR_VARIANCE = posterior_variance(PosteriorShape(1, 2))


def normalized_variance(shape: PosteriorShape) -> float:
    """Posterior variance rescaled so the single-observation case equals 1.

    Only defined for shapes that can arise from at least one observation
    (alpha + beta >= 3); the bare prior Beta(1, 1) has a larger variance
    than the scaling constant and would break the [0, 1] range.
    """
    if shape.alpha + shape.beta < 3:
        raise OutOfRange(
            f"normalized variance needs alpha + beta >= 3, got ({shape.alpha}, {shape.beta})"
        )
    return posterior_variance(shape) / MAX_POSTERIOR_VARIANCE


def beta_pdf(shape: PosteriorShape, x: float) -> float:
    """Posterior density at ``x``; integrates to 1 over [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"density argument must lie in [0, 1], got {x}")
    return betadist.pdf(shape.alpha, shape.beta, x)


def beta_cdf(shape: PosteriorShape, x: float) -> float:
    """Posterior probability mass below ``x``."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"CDF argument must lie in [0, 1], got {x}")
    return betadist.cdf(shape.alpha, shape.beta, x)


def credible_interval(shape: PosteriorShape, mass: float) -> tuple[float, float]:
    """Equal-tailed interval containing the given posterior mass.

    Returns (lo, hi) with lo the (1 - mass)/2 quantile and hi the
    1 - (1 - mass)/2 quantile, so the excluded tails are equally likely.
    """
    if not 0.0 < mass < 1.0:
        raise DomainError(f"credible mass must lie strictly between 0 and 1, got {mass}")
    tail = (1.0 - mass) / 2.0
    lo = betadist.quantile(shape.alpha, shape.beta, tail)
    hi = betadist.quantile(shape.alpha, shape.beta, 1.0 - tail)
    return lo, hi

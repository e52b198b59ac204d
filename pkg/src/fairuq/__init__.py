"""Group-fairness disparities with Bayesian uncertainty.

The package measures how differently a decision-maker treats social
groups (the disparity) and how certain that measurement is given the
group sizes (the uncertainty, from Beta posteriors over each group's
treatment probability). Each decision-maker becomes a point in the unit
square, utility functions respecting a fixed set of preferences turn
those points into a ranking, and the best decision-maker is the argmax.
"""

from .errors import (
    DomainError,
    EmptyGroup,
    EmptyInput,
    FairnessError,
    MissingColumn,
    OutOfRange,
    ParseError,
    TooFewGroups,
)
from .bayes import (
    BAYESIAN,
    FREQUENTIST,
    GroupObservation,
    PosteriorShape,
    TreatmentEstimate,
    beta_cdf,
    beta_pdf,
    credible_interval,
    frequentist_treatment,
    normalized_variance,
    posterior_from_counts,
    posterior_mean,
    posterior_variance,
)
from .disparity import (
    DecisionMakerPoint,
    GroupPair,
    GroupSummary,
    PairDetail,
    bayesian_disparity,
    decision_maker_from_pair,
    disparity_uncertainty,
    frequentist_disparity,
    multigroup_decision_maker,
)
from .utility import (
    AxiomReport,
    RankedSelection,
    UtilityValue,
    evaluate,
    indifference_points,
    known_utilities,
    norm_value,
    rank_all,
    register_utility,
    select_optimal,
    topsis_value,
    u_norm,
    u_topsis,
    verify_utility_axioms,
)
from .criteria import (
    AuditReport,
    Dataset,
    ExcludedGroupWarning,
    FairnessCriterion,
    audit,
    group_counts,
    parse_dataset,
)
from .synthetic import GridSpec, generate_grid, grid_cardinality, table_extremes

__version__ = "0.1.0"

__all__ = [
    "FairnessError", "EmptyGroup", "TooFewGroups", "OutOfRange", "DomainError",
    "EmptyInput", "ParseError", "MissingColumn",
    "FREQUENTIST", "BAYESIAN",
    "GroupObservation", "PosteriorShape", "TreatmentEstimate",
    "frequentist_treatment", "posterior_from_counts", "posterior_mean",
    "posterior_variance", "normalized_variance", "beta_pdf", "beta_cdf",
    "credible_interval",
    "GroupPair", "GroupSummary", "PairDetail", "DecisionMakerPoint",
    "frequentist_disparity", "bayesian_disparity", "disparity_uncertainty",
    "decision_maker_from_pair", "multigroup_decision_maker",
    "UtilityValue", "RankedSelection", "AxiomReport",
    "topsis_value", "norm_value", "u_topsis", "u_norm", "evaluate",
    "verify_utility_axioms", "register_utility", "known_utilities",
    "rank_all", "select_optimal", "indifference_points",
    "Dataset", "FairnessCriterion", "ExcludedGroupWarning",
    "parse_dataset", "group_counts", "audit", "AuditReport",
    "GridSpec", "generate_grid", "grid_cardinality", "table_extremes",
    "__version__",
]

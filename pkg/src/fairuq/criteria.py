"""Tabular ingestion and fairness-criterion evaluation.

A fairness criterion names two events over the records of a dataset:
a conditioning event that selects the individuals a comparison is about,
and an outcome event whose probability is compared across groups. The
built-in criteria are:

* ``statistical_parity``: condition on nothing (the whole sample),
  compare P(outcome = favorable).
* ``equal_opportunity``: condition on outcome = favorable, compare
  P(predicted = favorable), i.e. true positive rates.
* ``predictive_parity``: condition on predicted = favorable, compare
  P(outcome = favorable), i.e. positive predictive values.
* ``custom``: caller-supplied predicates for both events.

Cells are kept verbatim at parse time and compared as exact strings
after trimming surrounding whitespace; no numeric coercion happens
anywhere. The favorable value is always explicit configuration because
conventions differ per dataset (a "0" prediction may well be the
favorable one).
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from typing import Callable, IO, Union

from .bayes import FREQUENTIST, GroupObservation
from .disparity import DecisionMakerPoint, multigroup_decision_maker
from .errors import MissingColumn, ParseError, TooFewGroups
from .utility import UtilityValue, evaluate

__all__ = [
    "Record",
    "Dataset",
    "FairnessCriterion",
    "ExcludedGroupWarning",
    "parse_dataset",
    "group_counts",
    "audit",
    "AuditReport",
]

Record = dict  # column name -> verbatim cell value

STATISTICAL_PARITY = "statistical_parity"
EQUAL_OPPORTUNITY = "equal_opportunity"
PREDICTIVE_PARITY = "predictive_parity"
CUSTOM = "custom"


class ExcludedGroupWarning(UserWarning):
    """A group had no records under the conditioning event and was dropped."""


@dataclass
class Dataset:
    """A rectangular table: ordered records sharing one column schema."""

    columns: tuple[str, ...]
    records: list[Record]


@dataclass(frozen=True)
class FairnessCriterion:
    """Declarative description of which events to compare across groups.

    ``condition_event`` and ``outcome_event`` are only used by the
    ``custom`` kind; they receive a record and return whether it belongs
    to the conditioning event and the outcome event respectively.
    """

    kind: str
    protected_column: str
    outcome_column: str | None = None
    predicted_column: str | None = None
    favorable_value: str | None = None
    condition_event: Callable[[Record], bool] | None = None
    outcome_event: Callable[[Record], bool] | None = None

    def __post_init__(self):
        if self.kind == STATISTICAL_PARITY:
            if self.outcome_column is None or self.favorable_value is None:
                raise ValueError(
                    "statistical_parity needs outcome_column and favorable_value"
                )
        elif self.kind in (EQUAL_OPPORTUNITY, PREDICTIVE_PARITY):
            if (
                self.outcome_column is None
                or self.predicted_column is None
                or self.favorable_value is None
            ):
                raise ValueError(
                    f"{self.kind} needs outcome_column, predicted_column "
                    "and favorable_value"
                )
        elif self.kind == CUSTOM:
            if self.condition_event is None or self.outcome_event is None:
                raise ValueError(
                    "custom criteria need explicit condition_event and outcome_event"
                )
        else:
            raise ValueError(f"unknown criterion kind {self.kind!r}")

    def required_columns(self) -> tuple[str, ...]:
        cols = [self.protected_column]
        if self.kind == STATISTICAL_PARITY:
            cols.append(self.outcome_column)
        elif self.kind in (EQUAL_OPPORTUNITY, PREDICTIVE_PARITY):
            cols.extend([self.outcome_column, self.predicted_column])
        return tuple(cols)

    def events(self) -> tuple[Callable[[Record], bool], Callable[[Record], bool]]:
        """Return (condition, outcome) predicates over records."""
        if self.kind == CUSTOM:
            return self.condition_event, self.outcome_event
        favorable = self.favorable_value.strip()

        def matches(column):
            return lambda record: record[column].strip() == favorable

        if self.kind == STATISTICAL_PARITY:
            return (lambda record: True), matches(self.outcome_column)
        if self.kind == EQUAL_OPPORTUNITY:
            return matches(self.outcome_column), matches(self.predicted_column)
        return matches(self.predicted_column), matches(self.outcome_column)

    def summary(self) -> dict:
        return {
            "kind": self.kind,
            "protected_column": self.protected_column,
            "outcome_column": self.outcome_column,
            "predicted_column": self.predicted_column,
            "favorable_value": self.favorable_value,
        }


def parse_dataset(
    source: Union[bytes, str, IO[str]], delimiter: str = ","
) -> Dataset:
    """Parse delimited text with a header row into a :class:`Dataset`.

    Quoted fields follow the usual convention (double quotes, doubled to
    escape). Cell values are preserved verbatim. Raises
    :class:`~fairuq.errors.ParseError` on an empty input, a duplicated
    header name, undecodable bytes, or a row whose field count differs
    from the header's, citing the offending line.
    """
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
        stream = io.StringIO(text)
    elif isinstance(source, str):
        stream = io.StringIO(source)
    else:
        stream = source

    reader = csv.reader(stream, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: no header row") from None
    columns = tuple(header)
    seen = set()
    for name in columns:
        if name in seen:
            raise ParseError(f"duplicate column name {name!r} in header", line=1)
        seen.add(name)

    records: list[Record] = []
    for row in reader:
        if not row:
            continue  # blank line, not a record
        if len(row) != len(columns):
            raise ParseError(
                f"expected {len(columns)} fields, got {len(row)}",
                line=reader.line_num,
            )
        records.append(dict(zip(columns, row)))
    return Dataset(columns=columns, records=records)


def _tally(
    data: Dataset, criterion: FairnessCriterion
) -> tuple[list[GroupObservation], list[str]]:
    missing = [c for c in criterion.required_columns() if c not in data.columns]
    if missing:
        raise MissingColumn(f"dataset lacks column(s): {', '.join(sorted(missing))}")
    condition, outcome = criterion.events()
    counts: dict[str, list[int]] = {}
    for record in data.records:
        group = record[criterion.protected_column].strip()
        n_k = counts.setdefault(group, [0, 0])
        if condition(record):
            n_k[0] += 1
            if outcome(record):
                n_k[1] += 1
    kept = [
        GroupObservation(group_label=g, n=n, k=k)
        for g, (n, k) in sorted(counts.items())
        if n >= 1
    ]
    excluded = sorted(g for g, (n, _) in counts.items() if n == 0)
    return kept, excluded


def group_counts(
    data: Dataset, criterion: FairnessCriterion
) -> list[GroupObservation]:
    """One observation per group: n under the conditioning event, k also
    in the outcome event.

    Groups with no record under the conditioning event cannot be
    compared; they are dropped with an :class:`ExcludedGroupWarning`
    rather than failing the whole computation.
    """
    kept, excluded = _tally(data, criterion)
    for group in excluded:
        warnings.warn(
            f"group {group!r} has no records under the conditioning event; excluded",
            ExcludedGroupWarning,
            stacklevel=2,
        )
    return kept


@dataclass(frozen=True)
class AuditReport:
    """Outcome of auditing one decision-maker on one dataset."""

    label: str
    criterion: FairnessCriterion
    point: DecisionMakerPoint
    utility: UtilityValue
    excluded_groups: tuple[str, ...] = field(default_factory=tuple)

    def as_dict(self, precision: int | None = None) -> dict:
        def num(value):
            return value if precision is None else round(value, precision)

        most, least = self.point.detail.i, self.point.detail.j
        return {
            "label": self.label,
            "criterion": self.criterion.summary(),
            "disparity": num(self.point.disparity),
            "uncertainty": num(self.point.uncertainty),
            "utility": num(self.utility.value),
            "utility_function": self.utility.function_id,
            "disparity_flavor": self.point.detail.flavor,
            "most_privileged": {
                "label": most.label, "n": most.n, "k": most.k, "p": num(most.treatment),
            },
            "least_privileged": {
                "label": least.label, "n": least.n, "k": least.k, "p": num(least.treatment),
            },
            "excluded_groups": list(self.excluded_groups),
        }

    def to_json(self, precision: int | None = None, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(precision), indent=indent)

    CSV_HEADER = (
        "label,criterion,disparity,uncertainty,utility,utility_function,"
        "most_privileged_label,most_privileged_n,most_privileged_k,most_privileged_p,"
        "least_privileged_label,least_privileged_n,least_privileged_k,least_privileged_p,"
        "excluded_groups"
    )

    def to_csv(self, precision: int = 3) -> str:
        d = self.as_dict()
        most, least = d["most_privileged"], d["least_privileged"]
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.CSV_HEADER.split(","))
        writer.writerow(
            [
                d["label"],
                d["criterion"]["kind"],
                f"{d['disparity']:.{precision}f}",
                f"{d['uncertainty']:.{precision}f}",
                f"{d['utility']:.{precision}f}",
                d["utility_function"],
                most["label"], most["n"], most["k"], f"{most['p']:.{precision}f}",
                least["label"], least["n"], least["k"], f"{least['p']:.{precision}f}",
                ";".join(d["excluded_groups"]),
            ]
        )
        return out.getvalue()


def audit(
    data: Dataset,
    criterion: FairnessCriterion,
    flavor: str = FREQUENTIST,
    utility: str = "topsis",
    label: str = "audit",
) -> AuditReport:
    """Full pipeline: tally groups, reduce to a decision-maker point,
    attach a utility value and provenance.

    Raises :class:`~fairuq.errors.TooFewGroups` when fewer than two
    groups survive the conditioning event.
    """
    kept, excluded = _tally(data, criterion)
    if len(kept) < 2:
        raise TooFewGroups(
            f"audit needs at least 2 groups with observations, got {len(kept)} "
            f"(excluded: {excluded or 'none'})"
        )
    point = multigroup_decision_maker(kept, label=label, flavor=flavor)
    return AuditReport(
        label=label,
        criterion=criterion,
        point=point,
        utility=evaluate(point, utility),
        excluded_groups=tuple(excluded),
    )

"""Parsing, event evaluation, group counting and the audit pipeline."""

import json

import pytest

from fairuq import (
    ExcludedGroupWarning,
    FairnessCriterion,
    GroupObservation,
    MissingColumn,
    ParseError,
    TooFewGroups,
    audit,
    group_counts,
    parse_dataset,
)
from fairuq.criteria import (
    CUSTOM,
    EQUAL_OPPORTUNITY,
    PREDICTIVE_PARITY,
    STATISTICAL_PARITY,
)


def parity(**kwargs):
    defaults = dict(
        kind=STATISTICAL_PARITY,
        protected_column="group",
        outcome_column="outcome",
        favorable_value="1",
    )
    defaults.update(kwargs)
    return FairnessCriterion(**defaults)


class TestParsing:
    def test_small_file(self):
        data = parse_dataset("group,outcome\na,1\nb,0\n")
        assert data.columns == ("group", "outcome")
        assert len(data.records) == 2
        assert data.records[0] == {"group": "a", "outcome": "1"}

    def test_ragged_row_cites_line(self):
        with pytest.raises(ParseError) as excinfo:
            parse_dataset("group,outcome\na,1\nb,0,extra\n")
        assert excinfo.value.line == 3
        assert "line 3" in str(excinfo.value)

    def test_empty_file(self):
        with pytest.raises(ParseError):
            parse_dataset("")

    def test_header_only_gives_zero_records(self):
        assert parse_dataset("group,outcome\n").records == []

    def test_values_kept_verbatim(self):
        data = parse_dataset('group,outcome\n" a ",01\n')
        assert data.records[0]["group"] == " a "
        assert data.records[0]["outcome"] == "01"

    def test_quoted_fields_with_embedded_delimiter_and_quote(self):
        data = parse_dataset('group,note\na,"x,y"\nb,"he said ""hi"""\n')
        assert data.records[0]["note"] == "x,y"
        assert data.records[1]["note"] == 'he said "hi"'

    def test_tab_delimiter(self):
        data = parse_dataset("group\toutcome\na\t1\n", delimiter="\t")
        assert data.records == [{"group": "a", "outcome": "1"}]

    def test_bytes_input(self):
        data = parse_dataset(b"group,outcome\na,1\n")
        assert data.records == [{"group": "a", "outcome": "1"}]

    def test_invalid_utf8(self):
        with pytest.raises(ParseError):
            parse_dataset(b"group\n\xff\xfe\n")

    def test_duplicate_header(self):
        with pytest.raises(ParseError):
            parse_dataset("group,group\na,b\n")

    def test_blank_lines_skipped(self):
        data = parse_dataset("group,outcome\na,1\n\nb,0\n")
        assert len(data.records) == 2


class TestCriterionValidation:
    def test_opportunity_requires_prediction_column(self):
        with pytest.raises(ValueError):
            FairnessCriterion(
                kind=EQUAL_OPPORTUNITY,
                protected_column="group",
                outcome_column="outcome",
                favorable_value="1",
            )

    def test_custom_requires_predicates(self):
        with pytest.raises(ValueError):
            FairnessCriterion(kind=CUSTOM, protected_column="group")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            FairnessCriterion(kind="nonsense", protected_column="group")


def rows(*lines):
    return "group,outcome,predicted\n" + "\n".join(lines) + "\n"


class TestGroupCounts:
    def test_statistical_parity_counts_everyone(self):
        text = "group,outcome\n" + "\n".join(["a,1"] * 6 + ["b,1", "b,1", "b,0", "b,0"])
        counts = group_counts(parse_dataset(text), parity())
        assert counts == [
            GroupObservation("a", 6, 6),
            GroupObservation("b", 4, 2),
        ]

    def test_missing_column(self):
        with pytest.raises(MissingColumn):
            group_counts(parse_dataset("g,outcome\na,1\n"), parity())

    def test_group_without_condition_records_excluded_with_warning(self):
        crit = FairnessCriterion(
            kind=EQUAL_OPPORTUNITY,
            protected_column="group",
            outcome_column="outcome",
            predicted_column="predicted",
            favorable_value="1",
        )
        data = parse_dataset(rows("a,1,1", "a,0,1", "b,0,0", "b,0,1"))
        with pytest.warns(ExcludedGroupWarning):
            counts = group_counts(data, crit)
        assert counts == [GroupObservation("a", 1, 1)]

    def test_perfect_classifier_has_full_true_positive_rate(self):
        crit = FairnessCriterion(
            kind=EQUAL_OPPORTUNITY,
            protected_column="group",
            outcome_column="outcome",
            predicted_column="predicted",
            favorable_value="1",
        )
        data = parse_dataset(rows("a,1,1", "a,0,0", "b,1,1", "b,1,1"))
        counts = group_counts(data, crit)
        assert all(obs.k == obs.n for obs in counts)

    def test_predictive_parity_conditions_on_predictions(self):
        crit = FairnessCriterion(
            kind=PREDICTIVE_PARITY,
            protected_column="group",
            outcome_column="outcome",
            predicted_column="predicted",
            favorable_value="1",
        )
        data = parse_dataset(rows("a,1,1", "a,0,1", "a,1,0", "b,1,1"))
        counts = group_counts(data, crit)
        assert counts == [
            GroupObservation("a", 2, 1),
            GroupObservation("b", 1, 1),
        ]

    def test_custom_predicates(self):
        crit = FairnessCriterion(
            kind=CUSTOM,
            protected_column="group",
            condition_event=lambda r: r["outcome"] in ("0", "1"),
            outcome_event=lambda r: r["outcome"] == "1" and r["predicted"] == "1",
        )
        data = parse_dataset(rows("a,1,1", "a,1,0", "b,0,1"))
        counts = group_counts(data, crit)
        assert counts == [
            GroupObservation("a", 2, 1),
            GroupObservation("b", 1, 0),
        ]

    def test_record_order_irrelevant(self):
        lines = ["a,1", "b,0", "a,0", "b,1", "a,1"]
        text = "group,outcome\n" + "\n".join(lines)
        shuffled = "group,outcome\n" + "\n".join(reversed(lines))
        assert group_counts(parse_dataset(text), parity()) == group_counts(
            parse_dataset(shuffled), parity()
        )

    def test_cells_trimmed_for_comparison(self):
        data = parse_dataset("group,outcome\n a ,  1\na,1 \n")
        counts = group_counts(data, parity())
        assert counts == [GroupObservation("a", 2, 2)]

    def test_complement_flips_treatments(self):
        text = "group,outcome\n" + "\n".join(
            ["a,1", "a,0", "a,1", "b,0", "b,0", "b,1"]
        )
        data = parse_dataset(text)
        favorable = {
            obs.group_label: obs.k / obs.n for obs in group_counts(data, parity())
        }
        complement = {
            obs.group_label: obs.k / obs.n
            for obs in group_counts(data, parity(favorable_value="0"))
        }
        for group, p in favorable.items():
            assert complement[group] == pytest.approx(1.0 - p, abs=1e-15)


class TestAudit:
    def test_recidivism_lr_fixture(self, data_dir):
        crit = FairnessCriterion(
            kind=STATISTICAL_PARITY,
            protected_column="race",
            outcome_column="prediction",
            favorable_value="0",
        )
        data = parse_dataset((data_dir / "compas_lr.csv").read_bytes())
        report = audit(data, crit, label="LR")
        assert report.point.disparity == pytest.approx(0.500, abs=5e-4)
        assert report.point.uncertainty == pytest.approx(0.431, abs=5e-4)
        assert report.utility.value == pytest.approx(0.0, abs=5e-4)
        assert report.point.detail.i.label == "Asian"
        assert report.point.detail.j.label == "Native American"
        assert report.excluded_groups == ()

    def test_single_group_fails(self):
        data = parse_dataset("group,outcome\na,1\na,0\n")
        with pytest.raises(TooFewGroups):
            audit(data, parity())

    def test_report_serialization_shapes(self, data_dir):
        crit = FairnessCriterion(
            kind=STATISTICAL_PARITY,
            protected_column="race",
            outcome_column="prediction",
            favorable_value="0",
        )
        data = parse_dataset((data_dir / "compas_lr.csv").read_bytes())
        report = audit(data, crit, label="LR")
        payload = json.loads(report.to_json(precision=3))
        assert payload["most_privileged"] == {"label": "Asian", "n": 6, "k": 6, "p": 1.0}
        assert payload["least_privileged"]["label"] == "Native American"
        assert payload["criterion"]["kind"] == "statistical_parity"
        lines = report.to_csv(precision=3).splitlines()
        assert lines[0].startswith("label,criterion,disparity")
        assert "0.500" in lines[1]

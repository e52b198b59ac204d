"""Command-line surface.

Subcommands mirror the library: ``score`` a single pair of group counts,
``rank``/``select`` over a file of labeled count rows, ``audit`` a raw
predictions file under a fairness criterion, ``synth`` for the
exhaustive synthetic population, ``posterior`` for density and credible
interval plot data, and ``indiff`` for indifference-curve plot data.

Machine-readable output goes to stdout, diagnostics to stderr. Exit
status is 0 on success, 2 on usage errors, 1 on data errors. Identical
invocations produce byte-identical output. Numbers are displayed with 3
decimals to stay diffable against small tables; raise ``--precision``
when feeding plotting tools.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .bayes import (
    BAYESIAN,
    FREQUENTIST,
    GroupObservation,
    credible_interval,
    beta_pdf,
    posterior_from_counts,
    posterior_mean,
)
from .criteria import (
    EQUAL_OPPORTUNITY,
    PREDICTIVE_PARITY,
    STATISTICAL_PARITY,
    FairnessCriterion,
    audit,
    parse_dataset,
)
from .disparity import DecisionMakerPoint, GroupPair, decision_maker_from_pair
from .errors import FairnessError, ParseError
from .synthetic import GridSpec, generate_grid, table_extremes
from .utility import evaluate, indifference_points, rank_all, select_optimal

_CRITERIA = {
    "statistical-parity": STATISTICAL_PARITY,
    "equal-opportunity": EQUAL_OPPORTUNITY,
    "predictive-parity": PREDICTIVE_PARITY,
}
_DELIMITERS = {"comma": ",", "tab": "\t"}


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _read_dataset(path: str, delimiter_name: str):
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_dataset(raw, delimiter=_DELIMITERS[delimiter_name])


def _points_from_count_rows(data) -> list[DecisionMakerPoint]:
    required = ("label", "n_i", "k_i", "n_j", "k_j")
    missing = [c for c in required if c not in data.columns]
    if missing:
        raise ParseError(
            f"count file needs columns {', '.join(required)}; "
            f"missing {', '.join(missing)}"
        )
    points = []
    for idx, record in enumerate(data.records, start=2):
        try:
            n_i, k_i = int(record["n_i"]), int(record["k_i"])
            n_j, k_j = int(record["n_j"]), int(record["k_j"])
        except ValueError as exc:
            raise ParseError(f"non-integer count: {exc}", line=idx) from exc
        points.append((record["label"].strip(), n_i, k_i, n_j, k_j))
    return points


def _build_points(rows, flavor: str) -> list[DecisionMakerPoint]:
    return [
        decision_maker_from_pair(
            GroupPair(GroupObservation("i", n_i, k_i), GroupObservation("j", n_j, k_j)),
            flavor=flavor,
            label=label,
        )
        for label, n_i, k_i, n_j, k_j in rows
    ]


def _csv_lines(header: list[str], rows: list[list]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


# ---------------------------------------------------------------- score


def _posterior_block(obs: GroupObservation, mass: float, precision: int) -> dict:
    shape = posterior_from_counts(obs)
    lo, hi = credible_interval(shape, mass)
    return {
        "alpha": shape.alpha,
        "beta": shape.beta,
        "mean": round(posterior_mean(shape).value, precision),
        "credible_mass": mass,
        "credible_lo": round(lo, precision),
        "credible_hi": round(hi, precision),
    }


def cmd_score(args, parser) -> int:
    for name in ("n_i", "n_j"):
        if getattr(args, name) < 1:
            parser.error(f"{name} must be at least 1")
    if not 0 <= args.k_i <= args.n_i or not 0 <= args.k_j <= args.n_j:
        parser.error("favorable counts must satisfy 0 <= k <= n")
    obs_i = GroupObservation("i", args.n_i, args.k_i)
    obs_j = GroupObservation("j", args.n_j, args.k_j)
    point = decision_maker_from_pair(
        GroupPair(obs_i, obs_j), flavor=args.disparity, label="score"
    )
    p = args.precision
    payload = {
        "n_i": args.n_i,
        "k_i": args.k_i,
        "n_j": args.n_j,
        "k_j": args.k_j,
        "p_i": round(point.detail.i.treatment, p),
        "p_j": round(point.detail.j.treatment, p),
        "disparity": round(point.disparity, p),
        "uncertainty": round(point.uncertainty, p),
        "disparity_flavor": args.disparity,
        "utility_topsis": round(evaluate(point, "topsis").value, p),
        "utility_norm": round(evaluate(point, "norm").value, p),
        "posterior_i": _posterior_block(obs_i, args.mass, p),
        "posterior_j": _posterior_block(obs_j, args.mass, p),
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    else:
        flat = dict(payload)
        for side in ("i", "j"):
            block = flat.pop(f"posterior_{side}")
            for key, value in block.items():
                flat[f"{key}_{side}"] = value
        _emit(_csv_lines(list(flat), [list(flat.values())]))
    return 0


# ----------------------------------------------------------- rank/select


def _entry_row(entry, precision: int) -> dict:
    detail = entry.point.detail
    return {
        "rank": entry.rank,
        "label": entry.label,
        "n_i": detail.i.n,
        "k_i": detail.i.k,
        "n_j": detail.j.n,
        "k_j": detail.j.k,
        "p_i": round(detail.i.treatment, precision),
        "p_j": round(detail.j.treatment, precision),
        "disparity": round(entry.point.disparity, precision),
        "uncertainty": round(entry.point.uncertainty, precision),
        "utility": round(entry.utility.value, precision),
    }


def cmd_rank(args, parser) -> int:
    data = _read_dataset(args.file, args.delimiter)
    points = _build_points(_points_from_count_rows(data), args.disparity)
    ranking = rank_all(points, utility=args.utility)
    tie_of = {}
    for gi, group in enumerate(ranking.tie_groups, start=1):
        for label in group:
            tie_of[label] = gi
    p = args.precision
    if args.format == "json":
        payload = {
            "utility_function": args.utility,
            "entries": [_entry_row(e, p) for e in ranking.entries],
            "tie_groups": [list(g) for g in ranking.tie_groups],
        }
        _emit(json.dumps(payload, indent=2))
    else:
        header = [
            "rank", "label", "n_i", "k_i", "n_j", "k_j",
            "p_i", "p_j", "disparity", "uncertainty", "utility", "tie_group",
        ]
        rows = []
        for entry in ranking.entries:
            row = _entry_row(entry, p)
            rows.append(
                [
                    row["rank"], row["label"],
                    row["n_i"], row["k_i"], row["n_j"], row["k_j"],
                    _fmt(entry.point.detail.i.treatment, p),
                    _fmt(entry.point.detail.j.treatment, p),
                    _fmt(entry.point.disparity, p),
                    _fmt(entry.point.uncertainty, p),
                    _fmt(entry.utility.value, p),
                    tie_of.get(entry.label, ""),
                ]
            )
        _emit(_csv_lines(header, rows))
    return 0


def cmd_select(args, parser) -> int:
    data = _read_dataset(args.file, args.delimiter)
    points = _build_points(_points_from_count_rows(data), args.disparity)
    label, utility = select_optimal(points, utility=args.utility)
    if args.format == "json":
        payload = {
            "label": label,
            "utility": round(utility.value, args.precision),
            "utility_function": args.utility,
        }
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(_csv_lines(["label", "utility"], [[label, _fmt(utility.value, args.precision)]]))
    return 0


# ----------------------------------------------------------------- audit


def cmd_audit(args, parser) -> int:
    kind = _CRITERIA[args.criterion]
    outcome_col = args.outcome_col
    if kind == STATISTICAL_PARITY:
        # Parity can be assessed on recorded outcomes or on a model's
        # predictions; with only --pred-col given, the predictions are
        # the outcome under comparison.
        outcome_col = outcome_col or args.pred_col
        if outcome_col is None:
            parser.error("statistical-parity needs --outcome-col or --pred-col")
    else:
        if outcome_col is None or args.pred_col is None:
            parser.error(f"{args.criterion} needs both --outcome-col and --pred-col")
    if args.favorable is None:
        parser.error("--favorable is required")
    criterion = FairnessCriterion(
        kind=kind,
        protected_column=args.group_col,
        outcome_column=outcome_col,
        predicted_column=args.pred_col if kind != STATISTICAL_PARITY else None,
        favorable_value=args.favorable,
    )
    data = _read_dataset(args.file, args.delimiter)
    report = audit(
        data, criterion, flavor=args.disparity, utility=args.utility, label=args.label
    )
    if args.format == "json":
        _emit(report.to_json(precision=args.precision))
    else:
        _emit(report.to_csv(precision=args.precision))
    return 0


# ----------------------------------------------------------------- synth


_GRID_HEADER = [
    "label", "n_i", "k_i", "n_j", "k_j",
    "p_i", "p_j", "disparity", "uncertainty", "utility",
]


def cmd_synth(args, parser) -> int:
    if any(n < 1 for n in args.sizes):
        parser.error("--sizes values must be >= 1")
    spec = GridSpec(group_sizes=tuple(args.sizes), utility=args.utility, flavor=args.disparity)
    grid = generate_grid(spec)
    p = args.precision
    if args.extremes is not None:
        if args.extremes < 0:
            parser.error("--extremes must be nonnegative")
        top, bottom = table_extremes(grid, args.extremes, utility=args.utility)
        if args.format == "json":
            payload = {
                "top": [r.formatted(p) for r in top],
                "bottom": [r.formatted(p) for r in bottom],
            }
            _emit(json.dumps(payload, indent=2))
        else:
            header = ["rank"] + _GRID_HEADER
            rows = [
                [f["rank"], f["label"], f["n_i"], f["k_i"], f["n_j"], f["k_j"],
                 f["p_i"], f["p_j"], f["disparity"], f["uncertainty"], f["utility"]]
                for f in (r.formatted(p) for r in top + bottom)
            ]
            _emit(_csv_lines(header, rows))
        return 0

    def row(point):
        d = point.detail
        u = evaluate(point, args.utility).value
        return [
            point.label, d.i.n, d.i.k, d.j.n, d.j.k,
            _fmt(d.i.treatment, p), _fmt(d.j.treatment, p),
            _fmt(point.disparity, p), _fmt(point.uncertainty, p), _fmt(u, p),
        ]

    if args.format == "json":
        payload = [
            {
                "label": point.label,
                "n_i": point.detail.i.n, "k_i": point.detail.i.k,
                "n_j": point.detail.j.n, "k_j": point.detail.j.k,
                "p_i": round(point.detail.i.treatment, p),
                "p_j": round(point.detail.j.treatment, p),
                "disparity": round(point.disparity, p),
                "uncertainty": round(point.uncertainty, p),
                "utility": round(evaluate(point, args.utility).value, p),
            }
            for point in grid
        ]
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(_csv_lines(_GRID_HEADER, [row(point) for point in grid]))
    return 0


# ------------------------------------------------------ posterior/indiff


def cmd_posterior(args, parser) -> int:
    if args.n < 1:
        parser.error("n must be at least 1")
    if not 0 <= args.k <= args.n:
        parser.error("k must satisfy 0 <= k <= n")
    if not 0.0 < args.mass < 1.0:
        parser.error("--mass must lie strictly between 0 and 1")
    if args.samples < 2:
        parser.error("--samples must be at least 2")
    shape = posterior_from_counts(GroupObservation("group", args.n, args.k))
    lo, hi = credible_interval(shape, args.mass)
    p = args.precision
    rows = [
        ["pdf", _fmt(float(x), p), _fmt(beta_pdf(shape, float(x)), p)]
        for x in np.linspace(0.0, 1.0, args.samples)
    ]
    rows.append(["ci_lo", _fmt(lo, p), _fmt(beta_pdf(shape, lo), p)])
    rows.append(["ci_hi", _fmt(hi, p), _fmt(beta_pdf(shape, hi), p)])
    _emit(_csv_lines(["kind", "x", "density"], rows))
    return 0


def cmd_indiff(args, parser) -> int:
    if not -1.0 <= args.target <= 1.0:
        parser.error("target utility must lie in [-1, 1]")
    if args.samples < 1:
        parser.error("--samples must be at least 1")
    points = indifference_points(args.target, samples=args.samples)
    p = args.precision
    rows = [[_fmt(pt.disparity, p), _fmt(pt.uncertainty, p)] for pt in points]
    _emit(_csv_lines(["disparity", "uncertainty"], rows))
    return 0


# ------------------------------------------------------------ the parser


def _add_common(sub, *, formats=("json", "csv"), default_format="json"):
    sub.add_argument(
        "--format", choices=formats, default=default_format, help="output format"
    )
    sub.add_argument(
        "--precision", type=int, default=3, metavar="N",
        help="decimal places for displayed numbers (default 3)",
    )


def _add_flavor(sub):
    sub.add_argument(
        "--disparity", choices=(FREQUENTIST, BAYESIAN), default=FREQUENTIST,
        help="treatment estimate behind the disparity (default frequentist)",
    )


def _add_utility(sub):
    sub.add_argument(
        "--utility", choices=("topsis", "norm"), default="topsis",
        help="utility function used for ranking (default topsis)",
    )


def _add_delimiter(sub):
    sub.add_argument(
        "--delimiter", choices=tuple(_DELIMITERS), default="comma",
        help="field delimiter of the input file (default comma)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairuq",
        description=(
            "Quantify group-fairness disparities together with the Bayesian "
            "uncertainty of the assessment, and rank decision-makers by a "
            "preference-respecting utility."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    score = commands.add_parser(
        "score", help="score one decision-maker from two groups' counts"
    )
    for name in ("n_i", "k_i", "n_j", "k_j"):
        score.add_argument(name, type=int)
    score.add_argument(
        "--mass", type=float, default=0.95,
        help="credible mass for the per-group intervals (default 0.95)",
    )
    _add_flavor(score)
    _add_common(score)
    score.set_defaults(handler=cmd_score)

    rank = commands.add_parser(
        "rank", help="rank decision-makers from a CSV of labeled count rows"
    )
    rank.add_argument("file", help="CSV with columns label,n_i,k_i,n_j,k_j")
    _add_flavor(rank)
    _add_utility(rank)
    _add_delimiter(rank)
    _add_common(rank)
    rank.set_defaults(handler=cmd_rank)

    select = commands.add_parser(
        "select", help="emit only the highest-utility decision-maker"
    )
    select.add_argument("file", help="CSV with columns label,n_i,k_i,n_j,k_j")
    _add_flavor(select)
    _add_utility(select)
    _add_delimiter(select)
    _add_common(select)
    select.set_defaults(handler=cmd_select)

    audit_cmd = commands.add_parser(
        "audit", help="audit a predictions/outcomes file under a fairness criterion"
    )
    audit_cmd.add_argument("file", help="delimited text file with a header row")
    audit_cmd.add_argument(
        "--criterion", choices=tuple(_CRITERIA), default="statistical-parity",
        help="group fairness criterion (default statistical-parity)",
    )
    audit_cmd.add_argument("--group-col", required=True, help="protected attribute column")
    audit_cmd.add_argument("--outcome-col", help="recorded outcome column")
    audit_cmd.add_argument("--pred-col", help="predicted outcome column")
    audit_cmd.add_argument("--favorable", help="cell value of the favorable outcome")
    audit_cmd.add_argument("--label", default="audit", help="name for the report")
    _add_flavor(audit_cmd)
    _add_utility(audit_cmd)
    _add_delimiter(audit_cmd)
    _add_common(audit_cmd)
    audit_cmd.set_defaults(handler=cmd_audit)

    synth = commands.add_parser(
        "synth", help="emit the exhaustive synthetic decision-maker population"
    )
    synth.add_argument(
        "--sizes", type=int, nargs="+", default=[1, 5, 10, 50], metavar="N",
        help="group sizes to enumerate (default 1 5 10 50)",
    )
    synth.add_argument(
        "--extremes", type=int, default=None, metavar="N",
        help="emit only the N best and N worst ranked rows",
    )
    _add_flavor(synth)
    _add_utility(synth)
    _add_common(synth, default_format="csv")
    synth.set_defaults(handler=cmd_synth)

    posterior = commands.add_parser(
        "posterior", help="emit posterior density and credible interval plot data"
    )
    posterior.add_argument("n", type=int)
    posterior.add_argument("k", type=int)
    posterior.add_argument("--mass", type=float, default=0.95, help="credible mass")
    posterior.add_argument(
        "--samples", type=int, default=101, metavar="N",
        help="number of density evaluation points (default 101)",
    )
    posterior.add_argument("--precision", type=int, default=3, metavar="N")
    posterior.set_defaults(handler=cmd_posterior)

    indiff = commands.add_parser(
        "indiff", help="emit points of one indifference curve"
    )
    indiff.add_argument("target", type=float, help="target utility in [-1, 1]")
    indiff.add_argument(
        "--samples", type=int, default=101, metavar="N",
        help="number of uncertainty samples across [0, 1] (default 101)",
    )
    indiff.add_argument("--precision", type=int, default=3, metavar="N")
    indiff.set_defaults(handler=cmd_indiff)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except FairnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Audit a predictions file end to end.

The inline dataset mimics a recidivism-prediction export: one row per
defendant with the race column and the model's prediction, where "0"
(predicted not to reoffend) is the favorable outcome. The audit finds
the most and least privileged groups, reports the disparity between
them, how certain that disparity is, and the resulting utility.
"""

from fairuq import FairnessCriterion, audit, group_counts, parse_dataset

CSV = """race,prediction
Asian,0
Asian,0
Asian,0
Asian,0
Asian,0
Asian,0
Native American,0
Native American,0
Native American,1
Native American,1
Caucasian,0
Caucasian,0
Caucasian,0
Caucasian,1
Hispanic,0
Hispanic,0
Hispanic,1
African-American,0
African-American,0
African-American,0
African-American,1
African-American,1
"""

data = parse_dataset(CSV)
criterion = FairnessCriterion(
    kind="statistical_parity",
    protected_column="race",
    outcome_column="prediction",
    favorable_value="0",
)

print("per-group counts (n = all, k = favorable predictions):")
for obs in group_counts(data, criterion):
    print(f"  {obs.group_label:<17} n={obs.n:<3} k={obs.k:<3} rate={obs.k / obs.n:.2%}")

report = audit(data, criterion, label="demo-model")
print("\naudit report (JSON):")
print(report.to_json(precision=3))

print("\nflat CSV form:")
print(report.to_csv(precision=3), end="")

"""Two recruiters, same disparity, different certainty.

Recruiter A saw 3 applicants from each group and accepted only group i.
Recruiter B did exactly the same thing but saw a single applicant per
group. Classic disparity scoring gives both a 100% gap; this walkthrough
shows how the uncertainty term separates them.
"""

from fairuq import (
    GroupObservation,
    GroupPair,
    credible_interval,
    decision_maker_from_pair,
    posterior_from_counts,
    rank_all,
    select_optimal,
    u_topsis,
)

recruiters = {
    "A": ((3, 3), (3, 0)),  # (n, k) for group i and group j
    "B": ((1, 1), (1, 0)),
}

print("Per-recruiter assessment")
print("=" * 60)

points = []
for name, ((n_i, k_i), (n_j, k_j)) in recruiters.items():
    obs_i = GroupObservation("i", n_i, k_i)
    obs_j = GroupObservation("j", n_j, k_j)
    point = decision_maker_from_pair(GroupPair(obs_i, obs_j), label=name)
    points.append(point)

    print(f"\nRecruiter {name}: group i {k_i}/{n_i} accepted, group j {k_j}/{n_j} accepted")
    print(f"  disparity           = {point.disparity:.3f}")
    print(f"  uncertainty         = {point.uncertainty:.3f}")
    print(f"  utility (topsis)    = {u_topsis(point).value:.3f}")
    for obs in (obs_i, obs_j):
        shape = posterior_from_counts(obs)
        lo, hi = credible_interval(shape, 0.95)
        print(
            f"  group {obs.group_label}: posterior Beta({shape.alpha}, {shape.beta}), "
            f"95% credible interval [{lo:.3f}, {hi:.3f}]"
        )

print("\nRanking (higher utility = more preferred)")
print("=" * 60)
for entry in rank_all(points).entries:
    print(f"  {entry.rank}. recruiter {entry.label}  utility {entry.utility.value:.3f}")

winner, utility = select_optimal(points)
print(
    f"\nRecruiter {winner} wins: both show the same gap, but with a "
    "single applicant per group\nthe evidence against "
    f"{winner} is far weaker, so we are less certain the unfairness is real."
)

"""Enumerate every decision-maker over group sizes {1, 5, 10, 50}.

Each combination of sizes and favorable-outcome counts becomes one
decision-maker; with the default sizes that is 4,900 of them. The most
preferred ones treat two large groups identically; the least preferred
show a maximal gap between two large groups, where there is no doubt.
"""

from fairuq import GridSpec, generate_grid, grid_cardinality, table_extremes

spec = GridSpec()  # sizes (1, 5, 10, 50), topsis utility, frequentist disparity
grid = generate_grid(spec)
print(f"group sizes {spec.group_sizes} -> {len(grid)} decision-makers "
      f"(formula: {grid_cardinality(spec)})")

top, bottom = table_extremes(grid, 4)

header = f"{'rank':>4}  {'n_i':>3} {'k_i':>3} {'n_j':>3} {'k_j':>3}  {'p_i':>6} {'p_j':>6}  {'(disparity, uncertainty)':>25}  {'utility':>8}"


def show(rows):
    for r in rows:
        pair = f"({r.disparity:.3f}, {r.uncertainty:.3f})"
        print(
            f"{r.rank:>4}  {r.n_i:>3} {r.k_i:>3} {r.n_j:>3} {r.k_j:>3}  "
            f"{r.p_i:>6.2%} {r.p_j:>6.2%}  {pair:>25}  {r.utility:>8.3f}"
        )


print("\nmost preferred")
print(header)
show(top)
print("\nleast preferred")
print(header)
show(bottom)

print(
    "\nNote the ties: equal utility means the assessment cannot distinguish "
    "the decision-makers,\nso their relative order carries no information."
)

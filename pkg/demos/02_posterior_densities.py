"""Same 80% acceptance rate, very different posteriors.

Group i: 80 of 100 individuals got the favorable outcome.
Group j:  8 of  10 individuals got the favorable outcome.

The empirical treatment is 0.8 in both cases, yet the posterior for the
small group is much wider. The plot shades each 95% credible interval.
Writes posterior_densities.png next to this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fairuq import GroupObservation, beta_pdf, credible_interval, posterior_from_counts

groups = {
    "group i (n=100, k=80)": GroupObservation("i", 100, 80),
    "group j (n=10, k=8)": GroupObservation("j", 10, 8),
}

xs = np.linspace(0.0, 1.0, 501)
fig, ax = plt.subplots(figsize=(7, 4))

for name, obs in groups.items():
    shape = posterior_from_counts(obs)
    density = [beta_pdf(shape, float(x)) for x in xs]
    lo, hi = credible_interval(shape, 0.95)
    print(f"{name}: Beta({shape.alpha}, {shape.beta}), 95% CI [{lo:.3f}, {hi:.3f}]")

    (line,) = ax.plot(xs, density, label=f"{name}, CI [{lo:.2f}, {hi:.2f}]")
    mask = (xs >= lo) & (xs <= hi)
    ax.fill_between(xs[mask], np.asarray(density)[mask], alpha=0.3, color=line.get_color())

ax.set_xlabel("treatment probability")
ax.set_ylabel("posterior density")
ax.set_title("Equal empirical rates, unequal certainty")
ax.legend()
fig.tight_layout()

out = Path(__file__).with_name("posterior_densities.png")
fig.savefig(out, dpi=120)
print(f"\nwrote {out}")

"""Trace indifference curves of the topsis utility.

All decision-makers on one curve are equally preferred. The zero-utility
curve is the vertical line at 50% disparity; positive targets bend
toward the certain-and-fair corner, negative ones toward certain-and-
unfair. Writes indifference_curves.png next to this script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from fairuq import indifference_points

targets = [0.75, 0.414, 0.0, -0.414, -0.75]

fig, ax = plt.subplots(figsize=(6, 6))
for target in targets:
    points = indifference_points(target, samples=201)
    print(f"target {target:+.3f}: {len(points)} of 201 uncertainty samples reachable")
    ax.plot(
        [p.disparity for p in points],
        [p.uncertainty for p in points],
        label=f"u = {target:+.3f}",
    )

ax.scatter([0, 0, 1, 1], [0, 1, 1, 0], color="black", zorder=3)
for xy, name in [((0, 0), "ideal"), ((1, 0), "worst")]:
    ax.annotate(name, xy, textcoords="offset points", xytext=(6, 6))

ax.set_xlabel("disparity")
ax.set_ylabel("uncertainty")
ax.set_title("Indifference curves of the topsis utility")
ax.set_xlim(-0.05, 1.05)
ax.set_ylim(-0.05, 1.05)
ax.legend(loc="center right")
fig.tight_layout()

out = Path(__file__).with_name("indifference_curves.png")
fig.savefig(out, dpi=120)
print(f"wrote {out}")

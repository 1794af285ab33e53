"""Negativity of the Alice | wedge-I split as acceleration grows.

For the benchmark bell family the physical ordering sends every q_R curve to
the same endpoint value, while the interleaved ordering fans out.  The three
reduction routes are compared at the endpoint, and a PNG is saved when
matplotlib is importable.

Run:  python3 demos/negativity_vs_acceleration.py
"""

import numpy as np

from unruhsim import (R_MAX, StateFamily, UnruhParams, build_state,
                      infinite_acceleration_reduced_state, negativity,
                      qubit_reduced_state, r_grid, reduced_state,
                      subalgebra_reduced_state)

FAMILY = StateFamily.bell()
QR_SAMPLE = (0.0, 0.5, 1 / np.sqrt(2), 1.0)
GRID = r_grid(9)


def curve(ordering, q):
    return [negativity(reduced_state(FAMILY, UnruhParams.from_qr(r, q), ordering))
            for r in GRID]


print("Negativity N(r) for the bell family, physical ordering:\n")
print(f"{'r':>8} " + " ".join(f"q_R={q:.3f}" for q in QR_SAMPLE))
physical = {q: curve("physical", q) for q in QR_SAMPLE}
for i, r in enumerate(GRID):
    print(f"{r:8.4f} " + " ".join(f"{physical[q][i]:9.6f}" for q in QR_SAMPLE))
endpoint = [physical[q][-1] for q in QR_SAMPLE]
print(f"\nendpoint spread over q_R: {max(endpoint) - min(endpoint):.2e}"
      "  (all curves meet)")

print("\nSame sweep with the interleaved ordering:\n")
legacy = {q: curve("legacy-interleaved", q) for q in QR_SAMPLE}
for i, r in enumerate(GRID):
    print(f"{r:8.4f} " + " ".join(f"{legacy[q][i]:9.6f}" for q in QR_SAMPLE))
endpoint = [legacy[q][-1] for q in QR_SAMPLE]
print(f"\nendpoint spread over q_R: {max(endpoint) - min(endpoint):.2e}"
      "  (no common limit)")

print("\nThree independent reduction routes at the endpoint, q_R = 0.8:")
p = UnruhParams.from_qr(R_MAX, 0.8)
psi = build_state(FAMILY, p)
print(f"  qubit trace            {negativity(qubit_reduced_state(psi, 'physical')):.12f}")
print(f"  subalgebra solve       {negativity(subalgebra_reduced_state(psi)):.12f}")
print(f"  endpoint conjugation   {negativity(infinite_acceleration_reduced_state(FAMILY, p)):.12f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the plot.")
else:
    fine = r_grid(50)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for q in QR_SAMPLE:
        ax.plot(fine, [negativity(reduced_state(FAMILY, UnruhParams.from_qr(r, q), "physical"))
                       for r in fine], label=f"physical, q_R={q:.3f}")
        ax.plot(fine, [negativity(reduced_state(FAMILY, UnruhParams.from_qr(r, q),
                                                "legacy-interleaved"))
                       for r in fine], ls="--", label=f"interleaved, q_R={q:.3f}")
    ax.set_xlabel("r")
    ax.set_ylabel("negativity")
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    out = __file__.replace(".py", ".png")
    fig.savefig(out, dpi=150)
    print(f"\nwrote {out}")

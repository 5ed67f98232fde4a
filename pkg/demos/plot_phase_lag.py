"""
Phase-lag and dissipation of the three methods
==============================================

On y' = i omega y a step multiplies the state by a complex number whose
argument should be v = omega h. The difference is the phase-lag.
"""

import numpy as np

from phasefit_rk import MethodFamily, assemble_tableau, dissipation, phase_lag

vs = np.array([0.05, 0.1, 0.2, 0.4, 0.6, 1.0, 1.2])
families = [MethodFamily(k) for k in ("classical", "zero-pl", "zero-pl-d1")]

# The classical method lags by about v^5/120 per step at small v.
# zero-pl removes the lag entirely; zero-pl-d1 also flattens it in v,
# which is what makes it robust to a slightly wrong frequency estimate.
print(f"{'v':>6}" + "".join(f"{f.label:>26}" for f in families))
for v in vs:
    row = f"{v:6.2f}"
    for fam in families:
        t = assemble_tableau(fam, v)
        row += f"  {phase_lag(t, v):+.3e} / {dissipation(t, v):+.2e}"
    print(row)
print("(each cell: phase-lag / dissipation)")

# Mismatched frequency: tune at v but integrate at 1.05 v.
print("\nphase-lag when the true frequency is 5% off")
for v in (0.2, 0.5):
    cells = [f"{phase_lag(assemble_tableau(f, v), 1.05 * v):+.2e}" for f in families]
    print(f"v = {v}: " + "  ".join(f"{f.label}={c}" for f, c in zip(families, cells)))

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    grid = np.linspace(0.02, 1.3, 300)
    grid = grid[np.abs(grid - 0.8177116419) > 5e-3]
    for fam in families:
        plt.semilogy(grid, [abs(phase_lag(assemble_tableau(fam, v), 1.05 * v)) + 1e-18
                            for v in grid], label=fam.label)
    plt.xlabel("v")
    plt.ylabel("|phase-lag| at 1.05 v")
    plt.legend()
    plt.savefig("phase_lag.png", dpi=120)

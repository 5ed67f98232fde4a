"""
A nonlinear oscillator with a known dominant frequency
======================================================

y'' = -100 y + sin(y), y(0) = 0, y'(0) = 1 on [0, 20 pi]. The linear part
oscillates at omega = 10, which is the frequency the fitted methods are tuned to.
"""

import math

import numpy as np

from phasefit_rk import NONLINEAR_REFERENCE, MethodFamily, run_nonlinear

# An independent reference from a high-order adaptive solver, if scipy is around.
try:
    from scipy.integrate import solve_ivp
except ImportError:
    solve_ivp = None

if solve_ivp is not None:
    sol = solve_ivp(lambda x, u: [u[1], -100 * u[0] + math.sin(u[0])], (0, 20 * math.pi),
                    [0.0, 1.0], method="DOP853", rtol=1e-13, atol=1e-16)
    print(f"DOP853 y(20 pi) = {sol.y[0, -1]:.15e}, tabulated {NONLINEAR_REFERENCE}")

ns = [1000, 2000, 4000, 8000, 16000, 32000]
for kind in ("classical", "zero-pl", "zero-pl-d1"):
    errs = [run_nonlinear(MethodFamily(kind), n)[1] for n in ns]
    slope = -np.polyfit(np.log(ns), np.log(errs), 1)[0]
    print(f"{kind:>11}: " + " ".join(f"{e:8.1e}" for e in errs) + f"   slope {slope:.2f}")

# The endpoint sits near a zero of y, so the error there is mostly phase error,
# which for the classical method shrinks like h^4 rather than h^3. The fitted
# methods remove most of that phase error for this nearly linear problem.

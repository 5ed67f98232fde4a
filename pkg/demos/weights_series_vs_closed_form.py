"""
Frequency-dependent weights: closed form against Taylor series
==============================================================

The closed forms cancel badly as v -> 0, so below a switch point (0.05 by
default) the library evaluates even Taylor series instead. This script shows
both branches and where the closed form alone starts losing digits.
"""

import numpy as np

from phasefit_rk import weights_zero_pl, weights_zero_pl_d1
from phasefit_rk.coefficients import zero_pl_b3_closed, zero_pl_d1_closed

print(f"{'v':>8} {'b3 closed':>22} {'b3 series':>22} {'gap':>9}")
for v in (1e-4, 1e-3, 0.01, 0.03, 0.05, 0.08):
    closed = zero_pl_b3_closed(v)
    ser = weights_zero_pl(v, series_switch_v=0.2).b3
    print(f"{v:8.0e} {closed:22.17f} {ser:22.17f} {abs(closed - ser):9.1e}")

# zero-pl-d1 has a 1/v^2 prefactor and loses digits much faster
print(f"\n{'v':>8} {'b2 closed':>22} {'b2 series':>22} {'b3 gap':>9}")
for v in (1e-3, 0.01, 0.03, 0.05, 0.08):
    b2, b3 = zero_pl_d1_closed(v)
    s = weights_zero_pl_d1(v, series_switch_v=0.2)
    print(f"{v:8.0e} {b2:22.17f} {s.b2:22.17f} {abs(b3 - s.b3):9.1e}")

# The zero-pl-d1 weights blow up where their common denominator vanishes.
for v in (0.80, 0.81, 0.815, 0.819, 0.83):
    w = weights_zero_pl_d1(v)
    print(f"v = {v:5.3f}: b2 = {w.b2:+12.4f}, b3 = {w.b3:+12.4f}")
try:
    weights_zero_pl_d1(0.8177116419092670)
except ValueError as err:
    print(f"at the root: {type(err).__name__}: {err}")

vs = np.linspace(0, 0.3, 7)
print("\nweights approach the classical (1/6, 2/3, 1/6) as v -> 0")
for v in vs:
    print(f"v = {v:4.2f}: zero-pl b = {np.round(weights_zero_pl(v).b, 6)}, "
          f"zero-pl-d1 b = {np.round(weights_zero_pl_d1(v).b, 6)}")

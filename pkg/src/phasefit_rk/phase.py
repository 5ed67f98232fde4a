"""Dispersion and dissipation of explicit RK methods on the test equation ``y' = i w y``.

With ``v = w h`` one step multiplies the solution by the amplification factor

    a*(v) = sum_k theta_k (i v)^k = A(v^2) + i v B(v^2),   theta_0 = 1,

where ``theta_k = b^T a^(k-1) 1``. Phase-lag is ``v - arg a*(v)`` and dissipation
is ``1 - |a*(v)|``.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .errors import AmplificationVanished, NearTangentPole
from .tableau import ButcherTableau

POLE_GUARD = 1e-6


@dataclass(frozen=True)
class StabilityPolynomials:
    """``theta[k-1] = b^T a^(k-1) 1`` for k = 1..s."""

    theta: np.ndarray

    @property
    def even_part(self) -> Polynomial:
        """A as a polynomial in v (only even powers are nonzero)."""
        coef = np.zeros(len(self.theta) + 1)
        coef[0] = 1.0
        for k in range(2, len(self.theta) + 1, 2):
            coef[k] = (-1) ** (k // 2) * self.theta[k - 1]
        return Polynomial(coef)

    @property
    def odd_part(self) -> Polynomial:
        """v * B as a polynomial in v (only odd powers are nonzero)."""
        coef = np.zeros(len(self.theta) + 1)
        for k in range(1, len(self.theta) + 1, 2):
            coef[k] = (-1) ** ((k - 1) // 2) * self.theta[k - 1]
        return Polynomial(coef)

    def A(self, v):
        return self.even_part(v)

    def B(self, v):
        # v*B is odd in v, so dividing the coefficients down by one power is exact
        return Polynomial(self.odd_part.coef[1:])(v)

    def amplification(self, v) -> complex:
        return complex(self.A(v), v * self.B(v))


def stability_polynomials(t: ButcherTableau) -> StabilityPolynomials:
    theta = np.empty(t.s)
    vec = np.ones(t.s)
    for k in range(t.s):
        theta[k] = t.b @ vec
        vec = t.a @ vec
    return StabilityPolynomials(theta)


@dataclass(frozen=True)
class PhaseMetrics:
    v: float
    phase_lag: float
    dissipation: float
    pl_expr: float


def _real_imag(t, v):
    sp = stability_polynomials(t)
    return float(sp.even_part(v)), float(sp.odd_part(v))


def phase_lag(t: ButcherTableau, v: float) -> float:
    """``v - atan2(v B, A)`` on the principal branch."""
    re, im = _real_imag(t, v)
    if math.hypot(re, im) < 1e-300:
        raise AmplificationVanished(f"amplification factor vanishes at v={v!r}")
    return v - math.atan2(im, re)


def dissipation(t: ButcherTableau, v: float) -> float:
    re, im = _real_imag(t, v)
    return 1.0 - math.hypot(re, im)


def _check_pole(v):
    k = round((v - math.pi / 2) / math.pi)
    if abs(v - (math.pi / 2 + k * math.pi)) <= POLE_GUARD:
        raise NearTangentPole(f"v={v!r} is within {POLE_GUARD} of a pole of tan")


def pl_expression(t: ButcherTableau, v: float) -> float:
    """``A tan(v) - v B``; zero exactly where the phase-lag is zero (mod pi)."""
    _check_pole(v)
    re, im = _real_imag(t, v)
    return re * math.tan(v) - im


def pl_derivative(t: ButcherTableau, v: float) -> float:
    """Derivative of :func:`pl_expression` in v with the tableau held fixed."""
    _check_pole(v)
    sp = stability_polynomials(t)
    A, P = sp.even_part, sp.odd_part
    tan_v = math.tan(v)
    return float(A.deriv()(v) * tan_v + A(v) * (1.0 + tan_v * tan_v) - P.deriv()(v))


def phase_metrics(t: ButcherTableau, v: float) -> PhaseMetrics:
    return PhaseMetrics(v, phase_lag(t, v), dissipation(t, v), pl_expression(t, v))

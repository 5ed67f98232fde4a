"""Frequency-dependent weights of the phase-fitted 3-stage methods.

Both optimized methods keep the classical nodes and stage matrix and only free
some weights:

* ``ZERO_PL`` frees b3 so that the phase-lag vanishes at ``v = w h``;
* ``ZERO_PL_D1`` frees b2 and b3 so that the phase-lag and its first
  derivative in v vanish.

Closed forms lose digits to cancellation as v -> 0, so below
``series_switch_v`` the Taylor expansions are used instead.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction as F

from .errors import DenominatorSingular, TangentPole
from .tableau import CLASSICAL_LOWER, CLASSICAL_WEIGHTS, ButcherTableau, explicit_tableau, make_classical_rk3

SINGULAR_GUARD = 1e-6
DEFAULT_SERIES_SWITCH = 0.05

# coefficients of v^0, v^2, v^4, ...
ZERO_PL_B3_SERIES = (F(1, 6), F(0), F(-1, 30), F(-4, 315), F(17, 2835), F(206, 31185),
                     F(7951, 12162150))
ZERO_PL_D1_B2_SERIES = (F(2, 3), F(-2, 15), F(-52, 315), F(-3526, 14175), F(-173788, 467775),
                        F(-354768808, 638512875))
ZERO_PL_D1_B3_SERIES = (F(1, 6), F(2, 15), F(25, 126), F(4201, 14175), F(207349, 467775),
                        F(423287713, 638512875))


class MethodKind(enum.Enum):
    CLASSICAL = "classical"
    ZERO_PL = "zero-pl"
    ZERO_PL_D1 = "zero-pl-d1"


@dataclass(frozen=True)
class WeightSet:
    b1: float
    b2: float
    b3: float
    v: float
    regime: str  # "closed-form" | "series" | "constant"

    @property
    def b(self):
        return (self.b1, self.b2, self.b3)


def even_series(coeffs, v):
    """Evaluate ``sum coeffs[k] v^(2k)`` by Horner's rule in v^2."""
    w = v * v
    acc = 0.0
    for q in reversed(coeffs):
        acc = acc * w + float(q)
    return acc


def _check_tan_pole(v):
    k = round((v - math.pi / 2) / math.pi)
    if abs(v - (math.pi / 2 + k * math.pi)) <= SINGULAR_GUARD:
        raise TangentPole(f"v={v!r} is within {SINGULAR_GUARD} of a pole of tan")


def _check_root(g, dg, v, what):
    # Newton distance |g/g'| estimates how far v is from the nearest zero of g
    if g == 0.0 or (dg != 0.0 and abs(g / dg) <= SINGULAR_GUARD):
        raise DenominatorSingular(f"v={v!r} is within {SINGULAR_GUARD} of a zero of {what}")


def _check_switch(series_switch_v):
    if not 0.0 < series_switch_v <= 0.2:
        raise ValueError(f"series_switch_v must lie in (0, 0.2], got {series_switch_v!r}")


def zero_pl_b3_closed(v):
    t = math.tan(v)
    g = v * t - v * v + 1.0
    dg = t + v * (1.0 + t * t) - 2.0 * v
    _check_root(g, dg, v, "v tan v - v^2 + 1")
    return -(-6.0 * t + 2.0 * t * v * v + 5.0 * v) / (6.0 * v * g)


def weights_zero_pl(v, series_switch_v=DEFAULT_SERIES_SWITCH) -> WeightSet:
    """Weights nullifying the phase-lag; only b3 depends on v."""
    _check_switch(series_switch_v)
    v = abs(float(v))
    if v < series_switch_v:
        return WeightSet(1 / 6, 2 / 3, even_series(ZERO_PL_B3_SERIES, v), v, "series")
    _check_tan_pole(v)
    return WeightSet(1 / 6, 2 / 3, zero_pl_b3_closed(v), v, "closed-form")


def _d1_denominator(v, t):
    v2, v3, t2 = v * v, v**3, t * t
    D = -3.0 * v + t + v * t2 - t * v2 + v3 + v3 * t2
    s = 1.0 + t2  # d tan / dv
    dD = (-3.0 + s + t2 + 2.0 * v * t * s - s * v2 - 2.0 * t * v + 3.0 * v2
          + 3.0 * v2 * t2 + 2.0 * v3 * t * s)
    return D, dD


def zero_pl_d1_closed(v):
    """Closed-form (b2, b3) solving PL = PL' = 0."""
    t = math.tan(v)
    D, dD = _d1_denominator(v, t)
    _check_root(D, dD, v, "the phase-lag-derivative denominator")
    v2, v3, t2 = v * v, v**3, t * t
    den = v2 * D
    b2 = (5.0 * v3 * t2 + 7.0 * v3 - 19.0 * t * v2 + 6.0 * v * t2 - 6.0 * v + 6.0 * t) / (3.0 * den)
    b3 = (12.0 * v + v3 + t * v2 - 12.0 * t + v3 * t2) / (6.0 * den)
    return b2, b3


def weights_zero_pl_d1(v, series_switch_v=DEFAULT_SERIES_SWITCH) -> WeightSet:
    """Weights nullifying the phase-lag and its first v-derivative; b2, b3 depend on v."""
    _check_switch(series_switch_v)
    v = abs(float(v))
    if v < series_switch_v:
        return WeightSet(1 / 6, even_series(ZERO_PL_D1_B2_SERIES, v),
                         even_series(ZERO_PL_D1_B3_SERIES, v), v, "series")
    _check_tan_pole(v)
    b2, b3 = zero_pl_d1_closed(v)
    return WeightSet(1 / 6, b2, b3, v, "closed-form")


@dataclass(frozen=True)
class MethodFamily:
    kind: MethodKind = MethodKind.CLASSICAL
    series_switch_v: float = DEFAULT_SERIES_SWITCH

    def __post_init__(self):
        object.__setattr__(self, "kind", MethodKind(self.kind))
        _check_switch(self.series_switch_v)

    @property
    def label(self) -> str:
        return self.kind.value

    @property
    def uses_frequency(self) -> bool:
        return self.kind is not MethodKind.CLASSICAL

    def weights(self, v) -> WeightSet:
        if self.kind is MethodKind.ZERO_PL:
            return weights_zero_pl(v, self.series_switch_v)
        if self.kind is MethodKind.ZERO_PL_D1:
            return weights_zero_pl_d1(v, self.series_switch_v)
        return WeightSet(*CLASSICAL_WEIGHTS, abs(float(v)), "constant")

    def tableau(self, v=0.0) -> ButcherTableau:
        return assemble_tableau(self, v)


def assemble_tableau(family: MethodFamily, v) -> ButcherTableau:
    if not family.uses_frequency:
        return make_classical_rk3()
    return explicit_tableau(CLASSICAL_LOWER, family.weights(v).b, name=family.label)

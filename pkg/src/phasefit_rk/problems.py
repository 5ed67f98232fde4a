"""Benchmark problems: Woods-Saxon resonance (l = 0) and a nonlinear oscillator."""

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import MethodFamily
from .errors import ConfigInvalid, DegenerateSamples, EnergyTooSmall, UnsupportedAngularMomentum
from .integrator import ProblemDefinition, integrate, reduce_second_order

RESONANCE_ENERGIES = (989.701916, 341.495874, 163.215341)
RESONANCE_PHASE_SHIFT = math.pi / 2

NONLINEAR_REFERENCE = 3.92823991e-4
NONLINEAR_FREQUENCY = 10.0


@dataclass(frozen=True)
class WoodsSaxonParams:
    u0: float = -50.0
    a: float = 0.6
    x0: float = 7.0

    @property
    def u1(self) -> float:
        return -self.u0 / self.a


def woods_saxon(x, params: WoodsSaxonParams = WoodsSaxonParams()):
    """``u0/(1+q) + u1 q/(1+q)^2`` with ``q = exp((x - x0)/a)``; scalar or array."""
    if np.ndim(x) == 0:
        arg = (float(x) - params.x0) / params.a
        if arg > 30.0:
            e = math.exp(-arg)
            return (params.u0 * e + params.u1 * e / (1.0 + e)) / (1.0 + e)
        q = math.exp(arg)
        return (params.u0 + params.u1 * q / (1.0 + q)) / (1.0 + q)
    arg = (np.asarray(x, dtype=float) - params.x0) / params.a
    far = arg > 30.0
    # in 1/q for large arguments so exp never overflows
    z = np.exp(np.where(far, -arg, arg))
    inv = np.where(far, z / (1.0 + z), 1.0 / (1.0 + z))
    bump = z / (1.0 + z) ** 2
    return params.u0 * inv + params.u1 * bump


@dataclass(frozen=True)
class PiecewiseFrequency:
    """``w(x) = inner`` for ``x < switch``, ``outer`` for ``x >= switch``."""

    inner: float
    outer: float
    switch: float

    def __call__(self, x) -> float:
        return self.outer if x >= self.switch else self.inner

    def describe(self) -> str:
        return f"w={self.inner!r} for x<{self.switch!r}; w={self.outer!r} for x>={self.switch!r}"


@dataclass(frozen=True)
class ConstantFrequency:
    omega: float

    def __call__(self, x) -> float:
        return self.omega

    def describe(self) -> str:
        return f"w={self.omega!r}"


def ixaru_rizea_frequency(E, switch=6.5, well=50.0) -> PiecewiseFrequency:
    """Ixaru-Rizea rule: ``sqrt(E - 50)`` on [0, 6.5), ``sqrt(E)`` on [6.5, 15]."""
    if not E > well:
        raise EnergyTooSmall(f"need E > {well}, got {E!r}")
    return PiecewiseFrequency(math.sqrt(E - well), math.sqrt(E), switch)


def asymptotic_basis(k, x, l=0):
    """``(S, C) = (k x j_l(k x), k x n_l(k x))``; only l = 0 is supported."""
    if l != 0:
        raise UnsupportedAngularMomentum(f"only l=0 is implemented, got l={l}")
    kx = k * x
    return math.sin(kx), -math.cos(kx)


@dataclass(frozen=True)
class PhaseShiftResult:
    tan_delta: float
    delta: float
    error_vs_reference: float


def extract_phase_shift(y_i, y_ip1, x_i, x_ip1, k, l=0, reference=RESONANCE_PHASE_SHIFT):
    """Phase shift from two asymptotic samples of the radial solution.

    ``tan(delta) = (y_i S_ip1 - y_ip1 S_i) / (y_ip1 C_i - y_i C_ip1)``; delta is
    taken from atan2 of that pair and reduced to [0, pi).
    """
    s_i, c_i = asymptotic_basis(k, x_i, l)
    s_ip1, c_ip1 = asymptotic_basis(k, x_ip1, l)
    num = y_i * s_ip1 - y_ip1 * s_i
    den = y_ip1 * c_i - y_i * c_ip1
    if abs(num) < 1e-300 and abs(den) < 1e-300:
        raise DegenerateSamples("numerator and denominator of tan(delta) both vanish")
    tan_delta = num / den if den != 0.0 else math.copysign(math.inf, num)
    delta = math.atan2(num, den) % math.pi
    if delta >= math.pi:  # fmod can round up to pi itself
        delta = 0.0
    return PhaseShiftResult(tan_delta, delta, abs(delta - reference))


@dataclass(frozen=True)
class ResonanceProblem:
    """Radial Schrodinger equation with the Woods-Saxon potential, l = 0, on [0, 15].

    ``y(0) = 0`` and ``y'(0) = slope``; the phase shift is independent of the slope.
    Samples for the phase shift are the endpoint and the latest grid point at or
    below ``sample_upper`` (which must lie at or above ``sample_lower``).
    """

    energy: float
    x_end: float = 15.0
    slope: float = 1e-7
    sample_lower: float = 14.0
    sample_upper: float = 14.5
    potential: WoodsSaxonParams = WoodsSaxonParams()
    l: int = 0

    def __post_init__(self):
        if self.l != 0:
            raise UnsupportedAngularMomentum(f"only l=0 is implemented, got l={self.l}")
        if not self.energy > 0:
            raise EnergyTooSmall(f"need E > 0, got {self.energy!r}")

    @property
    def k(self) -> float:
        return math.sqrt(self.energy)

    @property
    def schedule(self) -> PiecewiseFrequency:
        return ixaru_rizea_frequency(self.energy)

    def definition(self) -> ProblemDefinition:
        E, params = self.energy, self.potential
        return reduce_second_order(lambda x: woods_saxon(x, params) - E, 0.0, self.slope,
                                   0.0, self.x_end, self.schedule, name=f"resonance(E={E!r})")

    def sample_index(self, n_steps) -> int:
        """Grid index of the inner sample point for an ``n_steps`` run."""
        h = self.x_end / n_steps
        j = int(math.floor(self.sample_upper / h * (1 + 1e-12)))
        j = min(j, n_steps - 1)
        if j * h < self.sample_lower:
            raise ConfigInvalid(f"n_steps={n_steps}: inner sample x={j * h!r} is outside "
                                f"the asymptotic region [{self.sample_lower}, {self.x_end}]")
        return j

    def solve(self, family: MethodFamily, n_steps):
        """Integrate and extract the phase shift; returns ``(RunResult, PhaseShiftResult)``."""
        j = self.sample_index(n_steps)
        h = self.x_end / n_steps
        kept = {}

        def observer(k, x, y):
            if k == j:
                kept["y_i"] = float(y[0])

        run = integrate(family, self.definition(), n_steps, observer=observer)
        shift = extract_phase_shift(kept["y_i"], float(run.y_end[0]), j * h, self.x_end, self.k)
        return run, shift


def make_resonance_problem(E) -> ResonanceProblem:
    if not E > 50:
        raise EnergyTooSmall(f"need E > 50 for the Ixaru-Rizea schedule, got {E!r}")
    return ResonanceProblem(float(E))


def _nonlinear_rhs(x, u):
    return np.array([u[1], -100.0 * u[0] + math.sin(u[0])])


def make_nonlinear_problem() -> ProblemDefinition:
    """``y'' = -100 y + sin(y)``, ``y(0) = 0``, ``y'(0) = 1`` on [0, 20 pi], w = 10."""
    return ProblemDefinition(_nonlinear_rhs, 0.0, 20.0 * math.pi, (0.0, 1.0),
                             ConstantFrequency(NONLINEAR_FREQUENCY), name="nonlinear")


def run_nonlinear(family: MethodFamily, n_steps, reference=NONLINEAR_REFERENCE):
    """Returns ``(RunResult, |y(20 pi) - reference|)``."""
    run = integrate(family, make_nonlinear_problem(), n_steps)
    return run, abs(float(run.y_end[0]) - reference)


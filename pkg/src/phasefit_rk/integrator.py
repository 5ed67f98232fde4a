"""Fixed-step explicit Runge-Kutta integration with per-step frequency-fitted weights."""

from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .coefficients import MethodFamily, assemble_tableau
from .errors import NonFiniteState, PhaseFitError
from .tableau import ButcherTableau


@dataclass(frozen=True, eq=False)
class ProblemDefinition:
    """First-order system ``y' = rhs(x, y)`` on ``[x0, x_end]``.

    ``frequency_schedule`` maps x to the dominant angular frequency used to fit
    the weights; the optimized families need it, the classical one ignores it.
    """

    rhs: Callable
    x0: float
    x_end: float
    y0: np.ndarray
    frequency_schedule: Optional[Callable[[float], float]] = None
    name: str = ""

    def __post_init__(self):
        y0 = np.array(self.y0, dtype=float).reshape(-1)
        y0.setflags(write=False)
        object.__setattr__(self, "y0", y0)
        if not self.x_end > self.x0:
            raise ValueError(f"need x_end > x0, got [{self.x0}, {self.x_end}]")
        if y0.size < 1:
            raise ValueError("empty initial state")

    @property
    def dimension(self) -> int:
        return self.y0.size


@dataclass
class RunResult:
    y_end: np.ndarray
    steps: int
    rhs_evaluations: int
    stages: int
    dimension: int
    h: float
    distinct_v_values: List[float] = field(default_factory=list)

    @property
    def function_evaluations(self) -> int:
        """Scalar component evaluations: stages x dimension x steps."""
        return self.stages * self.dimension * self.steps


def reduce_second_order(w_minus_e, y0, z0, x0=0.0, x_end=1.0, frequency_schedule=None, name=""):
    """Rewrite ``y'' = (W(x) - E) y`` as the system ``y' = z, z' = (W(x) - E) y``."""

    def rhs(x, u):
        return np.array([u[1], w_minus_e(x) * u[0]])

    return ProblemDefinition(rhs, x0, x_end, (y0, z0), frequency_schedule, name)


def rk_step(t: ButcherTableau, p: ProblemDefinition, x, y, h):
    """One explicit RK step from ``(x, y)``; makes exactly ``t.s`` rhs calls."""
    y = np.asarray(y, dtype=float)
    a, c = t.a.tolist(), t.c.tolist()
    k = []
    for i in range(t.s):
        yi = y
        for j in range(i):
            if a[i][j] != 0.0:
                yi = yi + a[i][j] * k[j]
        ki = h * np.asarray(p.rhs(x + c[i] * h, yi), dtype=float)
        if not np.isfinite(ki.sum()):
            raise NonFiniteState(f"stage {i + 1} produced a non-finite value at x={x!r}")
        k.append(ki)
    out = y
    for bi, ki in zip(t.b.tolist(), k):
        out = out + bi * ki
    return out


def integrate(family: MethodFamily, p: ProblemDefinition, n_steps: int, observer=None) -> RunResult:
    """Integrate ``p`` over its interval with ``n_steps`` equal steps.

    The scaled frequency of each step is ``w(x_k) * h`` with w sampled at the
    step's left endpoint. ``observer(k, x_k, y_k)`` is called for k = 0..n_steps.
    """
    n_steps = int(n_steps)
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    if family.uses_frequency and p.frequency_schedule is None:
        raise ValueError(f"method {family.label!r} needs a frequency schedule")

    h = (p.x_end - p.x0) / n_steps
    calls = 0

    def counted(x, u):
        nonlocal calls
        calls += 1
        return p.rhs(x, u)

    counted_problem = ProblemDefinition(counted, p.x0, p.x_end, p.y0, p.frequency_schedule, p.name)

    # confined to this run: concurrent runs never share it
    tableaux = {}
    y = np.array(p.y0)
    if observer is not None:
        observer(0, p.x0, y)
    t = assemble_tableau(family, 0.0)
    for k in range(n_steps):
        x = p.x0 + k * h
        if family.uses_frequency:
            v = p.frequency_schedule(x) * h
            t = tableaux.get(v)
            if t is None:
                try:
                    t = tableaux[v] = assemble_tableau(family, v)
                except PhaseFitError as err:
                    raise type(err)(f"step {k}: {err}", step=k) from err
        try:
            y = rk_step(t, counted_problem, x, y, h)
        except NonFiniteState as err:
            raise NonFiniteState(f"step {k}: {err}", step=k) from err
        if observer is not None:
            observer(k + 1, p.x0 + (k + 1) * h if k + 1 < n_steps else p.x_end, y)
    return RunResult(y, n_steps, calls, t.s, p.dimension, h, sorted(tableaux))

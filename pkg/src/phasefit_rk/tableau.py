"""Explicit Butcher tableaux, structural validation and order-condition residuals."""

from dataclasses import dataclass, field
from typing import List, NamedTuple

import numpy as np

ROW_SUM_TOL = 1e-14


def _frozen(arr):
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ButcherTableau:
    """Coefficients ``(a, b, c)`` of an explicit Runge-Kutta method.

    ``a`` is stored dense (s x s). Arrays are copied and made read-only, but
    they are kept as given so that :func:`validate_tableau` can report a
    malformed table instead of hiding it.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        a, b, c = _frozen(self.a), _frozen(self.b), _frozen(self.c)
        s = b.shape[0]
        if b.ndim != 1 or c.shape != (s,) or a.shape != (s, s):
            raise ValueError(f"inconsistent tableau shapes a{a.shape} b{b.shape} c{c.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def s(self) -> int:
        return self.b.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ButcherTableau):
            return NotImplemented
        return (np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)
                and np.array_equal(self.c, other.c))

    def __repr__(self):
        label = self.name or "ButcherTableau"
        return f"{label}(s={self.s}, b={self.b.tolist()})"


def explicit_tableau(lower, b, name=""):
    """Build a tableau from the strictly lower rows ``lower[i] = (a_i1, ..., a_i,i-1)``.

    Nodes are taken as row sums, and the upper triangle is zero by construction.
    """
    s = len(b)
    a = np.zeros((s, s))
    for i, row in enumerate(lower, start=1):
        a[i, :len(row)] = row
    return ButcherTableau(a, b, a.sum(axis=1), name=name)


CLASSICAL_LOWER = ((0.5,), (-1.0, 2.0))
CLASSICAL_WEIGHTS = (1 / 6, 2 / 3, 1 / 6)


def make_classical_rk3() -> ButcherTableau:
    """Kutta's 3-stage third-order method: c = (0, 1/2, 1), b = (1/6, 2/3, 1/6)."""
    return explicit_tableau(CLASSICAL_LOWER, CLASSICAL_WEIGHTS, name="classical")


class Violation(NamedTuple):
    kind: str  # "explicitness" | "row_sum" | "first_node" | "non_finite"
    index: tuple
    magnitude: float


@dataclass
class ValidationReport:
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate_tableau(t: ButcherTableau, tol: float = ROW_SUM_TOL) -> ValidationReport:
    """Check explicitness, ``c[0] = 0`` and the row-sum condition on the nodes."""
    violations = []
    for arr_name in ("a", "b", "c"):
        arr = getattr(t, arr_name)
        if not np.all(np.isfinite(arr)):
            violations.append(Violation("non_finite", (arr_name,), float("nan")))
    s = t.s
    for i in range(s):
        for j in range(i, s):
            if t.a[i, j] != 0.0:
                violations.append(Violation("explicitness", (i, j), abs(float(t.a[i, j]))))
    if t.c[0] != 0.0:
        violations.append(Violation("first_node", (0,), abs(float(t.c[0]))))
    row_sums = np.tril(t.a, -1).sum(axis=1)
    for i in range(1, s):
        gap = abs(float(t.c[i] - row_sums[i]))
        if not gap <= tol:
            violations.append(Violation("row_sum", (i,), gap))
    return ValidationReport(violations)


class OrderResiduals(NamedTuple):
    """Residuals of the order-1..3 conditions, each ``sum - target``."""

    r1: float  # sum b - 1
    r2: float  # sum b c - 1/2
    r3: float  # sum b c^2 - 1/3
    r4: float  # sum b a c - 1/6


def order_residuals(t: ButcherTableau) -> OrderResiduals:
    b, c, a = t.b, t.c, t.a
    return OrderResiduals(
        float(b.sum() - 1.0),
        float(b @ c - 0.5),
        float(b @ c**2 - 1.0 / 3.0),
        float(b @ a @ c - 1.0 / 6.0),
    )

"""Phase-fitted explicit 3-stage Runge-Kutta methods for oscillatory problems.

Two frequency-dependent variants of Kutta's third-order method are provided:
one with zero phase-lag, one with zero phase-lag and zero first derivative of
the phase-lag, together with the classical method, dispersion analysis tools
and the Woods-Saxon resonance / nonlinear oscillator benchmarks.
"""

__version__ = "0.1.0"

from .errors import (AmplificationVanished, ConfigInvalid, DegenerateSamples, DenominatorSingular,
                     EnergyTooSmall, InsufficientData, IoFailure, NearTangentPole, NonFiniteState,
                     PhaseFitError, TangentPole, UnsupportedAngularMomentum)
from .tableau import (ButcherTableau, OrderResiduals, ValidationReport, explicit_tableau,
                      make_classical_rk3, order_residuals, validate_tableau)
from .phase import (PhaseMetrics, StabilityPolynomials, dissipation, phase_lag, phase_metrics,
                    pl_derivative, pl_expression, stability_polynomials)
from .coefficients import (MethodFamily, MethodKind, WeightSet, assemble_tableau,
                           weights_zero_pl, weights_zero_pl_d1)
from .integrator import ProblemDefinition, RunResult, integrate, reduce_second_order, rk_step
from .problems import (NONLINEAR_REFERENCE, RESONANCE_ENERGIES, PhaseShiftResult, ResonanceProblem,
                       WoodsSaxonParams, asymptotic_basis, extract_phase_shift,
                       ixaru_rizea_frequency, make_nonlinear_problem, make_resonance_problem,
                       run_nonlinear, woods_saxon)
from .bench import EfficiencyCurve, SweepConfig, emit, estimate_order, read_csv, run_sweep

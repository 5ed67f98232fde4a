"""Exception types raised across the package."""


class PhaseFitError(Exception):
    """Base class. ``step`` is set when the failure happened inside an integration run."""

    def __init__(self, message="", step=None):
        super().__init__(message)
        self.step = step


class AmplificationVanished(PhaseFitError, ArithmeticError):
    pass


class NearTangentPole(PhaseFitError, ValueError):
    pass


# coefficient evaluation reports the same condition under this name
TangentPole = NearTangentPole


class DenominatorSingular(PhaseFitError, ValueError):
    pass


class NonFiniteState(PhaseFitError, FloatingPointError):
    pass


class EnergyTooSmall(PhaseFitError, ValueError):
    pass


class UnsupportedAngularMomentum(PhaseFitError, NotImplementedError):
    pass


class DegenerateSamples(PhaseFitError, ValueError):
    pass


class ConfigInvalid(PhaseFitError, ValueError):
    pass


class InsufficientData(PhaseFitError, ValueError):
    pass


class IoFailure(PhaseFitError, OSError):
    pass

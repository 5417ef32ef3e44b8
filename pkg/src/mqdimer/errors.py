"""Exception types raised by the toolkit."""


class MqDimerError(Exception):
    """Base class for all toolkit errors."""


class NotHermitian(MqDimerError):
    """Matrix fails the Hermiticity tolerance."""


class SpectrumNotReal(MqDimerError):
    """Eigenvalues of a supposedly real-spectrum product carry imaginary parts."""


class BadSubsystemId(MqDimerError):
    """Subsystem selector must be 1 (first spin) or 2 (second spin)."""


class NotAState(MqDimerError):
    """Matrix is not a valid density matrix within tolerances."""


class InvalidParams(MqDimerError):
    """Physical parameters violate their constraints."""


class NotUnitVector(MqDimerError):
    """Measurement direction is not on the unit sphere."""


class NonRealIntensity(MqDimerError):
    """Coherence intensity came out with a non-negligible imaginary part."""


class InvalidConfig(MqDimerError):
    """Sweep or CLI configuration is malformed."""

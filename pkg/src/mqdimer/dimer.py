"""Dipolar two-spin pair: initial state, two-quantum Hamiltonian, evolution.

Basis convention: |0> is the I_z = +1/2 state of a spin, basis order
|00>, |01>, |10>, |11> with spin 1 first. Spin 1 starts in the pure state
alpha|0> + beta|1>, spin 2 in thermal equilibrium with weight
exp(b)/(exp(b)+1) on |0>. Closed-form results are functions of the
dimensionless time tau_bar = d * tau only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, NotAState
from .linalg import EIGVAL_FLOOR, eig_hermitian, hermiticity_defect, kron

NORMALIZATION_TOL = 1e-9

#: total z magnetization I_1z + I_2z in the standard basis
IZ_TOTAL = np.diag([1.0, 0.0, 0.0, -1.0]).astype(complex)


@dataclass(frozen=True)
class DimerParams:
    """Physical inputs: spin-1 amplitudes, thermal factor b >= 0, coupling d > 0."""

    alpha: complex
    beta: complex
    b: float
    d: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "d", float(self.d))
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if not math.isfinite(norm) or abs(norm - 1.0) > NORMALIZATION_TOL:
            raise InvalidParams(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")
        if not math.isfinite(self.b) or self.b < 0:
            raise InvalidParams(f"b must be finite and >= 0, got {self.b!r}")
        if not math.isfinite(self.d) or self.d <= 0:
            raise InvalidParams(f"d must be finite and > 0, got {self.d!r}")

    @classmethod
    def normalized(cls, alpha, beta, b, d=1.0) -> "DimerParams":
        """Rescale (alpha, beta) onto the unit sphere before validation."""
        alpha, beta = complex(alpha), complex(beta)
        scale = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if scale == 0.0 or not math.isfinite(scale):
            raise InvalidParams("amplitudes cannot be normalized")
        return cls(alpha / scale, beta / scale, b, d)

    @property
    def thermal_weights(self) -> tuple[float, float]:
        """Spin-2 populations (w0, w1) on |0>, |1>; the overflow-safe form of
        (e^b, 1) / (e^b + 1)."""
        w1 = math.exp(-self.b) / (1.0 + math.exp(-self.b))
        return 1.0 - w1, w1


def _resolve_tau_bar(d, tau, tau_bar) -> float:
    """Accept either physical (d, tau) or dimensionless tau_bar, not both."""
    if tau_bar is not None:
        if tau is not None:
            raise InvalidParams("give tau or tau_bar, not both")
        if d is not None:
            raise InvalidParams("d is redundant when tau_bar is given")
        return float(tau_bar)
    if tau is None or d is None:
        raise InvalidParams("give (d, tau) or tau_bar")
    d = float(d)
    if not math.isfinite(d) or d <= 0:
        raise InvalidParams(f"d must be finite and > 0, got {d!r}")
    return d * float(tau)


def param_tau_bar(p: DimerParams, tau, tau_bar) -> float:
    """Dimensionless time for closed forms parametrized by DimerParams."""
    if (tau is None) == (tau_bar is None):
        raise InvalidParams("give exactly one of tau or tau_bar")
    return p.d * float(tau) if tau is not None else float(tau_bar)


def require_state(rho, herm_tol: float = 1e-12, trace_tol: float = 1e-12) -> np.ndarray:
    """Validate a 4x4 density matrix; returns it as a complex ndarray."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise NotAState(f"expected a 4x4 matrix, got shape {rho.shape}")
    defect = hermiticity_defect(rho)
    if defect > herm_tol:
        raise NotAState(f"Hermiticity defect {defect:.3e} exceeds {herm_tol:.1e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise NotAState(f"trace {tr!r} is not 1 within {trace_tol:.1e}")
    low = float(np.linalg.eigvalsh(rho).min())
    if low < EIGVAL_FLOOR:
        raise NotAState(f"eigenvalue {low:.3e} below {EIGVAL_FLOOR:.1e}")
    return rho


def initial_state(p: DimerParams) -> np.ndarray:
    """Pure spin 1 tensored with thermal spin 2."""
    psi = np.array([[p.alpha], [p.beta]], dtype=complex)
    w0, w1 = p.thermal_weights
    return kron(psi @ psi.conj().T, np.diag([w0, w1]).astype(complex))


def mq_hamiltonian(d: float) -> np.ndarray:
    """Two-quantum coupling d (I1+ I2+ + I1- I2-): flips |00> <-> |11>."""
    d = float(d)
    if not math.isfinite(d) or d <= 0:
        raise InvalidParams(f"d must be finite and > 0, got {d!r}")
    h = np.zeros((4, 4), dtype=complex)
    h[0, 3] = h[3, 0] = d
    return h


def propagator(d=None, tau=None, *, tau_bar=None) -> np.ndarray:
    """Unitary exp(-i H tau) built from the Hermitian eigendecomposition.

    Acts as the identity on span{|01>, |10>} and rotates the |00>, |11>
    pair by the angle tau_bar = d * tau.
    """
    tb = _resolve_tau_bar(d, tau, tau_bar)
    vals, vecs = eig_hermitian(mq_hamiltonian(1.0))
    phases = np.exp(-1j * vals * tb)
    return (vecs * phases) @ vecs.conj().T


def evolve_numeric(rho0, d=None, tau=None, *, tau_bar=None) -> np.ndarray:
    """Conjugate a state by the propagator: U rho0 U^H."""
    u = propagator(d, tau, tau_bar=tau_bar)
    return u @ np.asarray(rho0, dtype=complex) @ u.conj().T


def evolve_analytic(p: DimerParams, tau=None, *, tau_bar=None) -> np.ndarray:
    """Closed-form evolved density matrix, entry by entry.

    Equal to evolve_numeric(initial_state(p), ...) up to roundoff; this is
    the reference expression the numeric path is checked against.
    """
    tb = param_tau_bar(p, tau, tau_bar)
    w0, w1 = p.thermal_weights
    a2 = abs(p.alpha) ** 2
    b2 = abs(p.beta) ** 2
    g = p.alpha * p.beta.conjugate()
    c, s = math.cos(tb), math.sin(tb)
    s2 = math.sin(2.0 * tb)

    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = a2 * c * c * w0 + b2 * s * s * w1
    m[0, 1] = -1j * np.conj(g) * s * w1
    m[0, 2] = g * c * w0
    m[0, 3] = 0.5j * s2 * (a2 * w0 - b2 * w1)
    m[1, 1] = a2 * w1
    m[1, 3] = g * c * w1
    m[2, 2] = b2 * w0
    m[2, 3] = 1j * np.conj(g) * s * w0
    m[3, 3] = a2 * s * s * w0 + b2 * c * c * w1
    m[1, 0] = np.conj(m[0, 1])
    m[2, 0] = np.conj(m[0, 2])
    m[3, 0] = np.conj(m[0, 3])
    m[3, 1] = np.conj(m[1, 3])
    m[3, 2] = np.conj(m[2, 3])
    return m


def ht_reference(d=None, tau=None, *, tau_bar=None) -> np.ndarray:
    """High-temperature reference: total z magnetization conjugated by the propagator.

    Traceless, Hermitian, and supported on coherence orders 0 and +/-2 only.
    """
    u = propagator(d, tau, tau_bar=tau_bar)
    return u @ IZ_TOTAL @ u.conj().T

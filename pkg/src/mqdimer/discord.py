"""Projective measurements on one spin, conditional entropy, quantum discord.

The measured spin is selectable (default: spin 2, the thermal one). All
entropies are in bits. The conditional-entropy minimizer is deterministic:
a fixed spherical grid followed by Nelder-Mead refinement from the best
five grid points, with stable tie-breaking, so repeated runs are
bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .dimer import require_state
from .errors import BadSubsystemId, NotUnitVector
from .linalg import ID2, PAULI_X, PAULI_Y, PAULI_Z, kron, partial_trace, von_neumann_entropy

UNIT_TOL = 1e-12
OUTCOME_FLOOR = 1e-14
GRID_THETA = 64
GRID_PHI = 128
REFINE_STARTS = 5
Q_CLAMP = 1e-9

_PAULI_STACK = np.stack([PAULI_X, PAULI_Y, PAULI_Z])


@dataclass(frozen=True)
class DiscordResult:
    """Discord q = mutual - classical, plus the pieces it was assembled from."""

    q: float
    classical: float
    mutual: float
    best_direction: np.ndarray
    min_cond_entropy: float
    measured_subsystem: int


def direction(theta: float, phi: float) -> np.ndarray:
    """Unit Bloch vector from polar angle theta and azimuth phi."""
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def _check_directions(dirs) -> np.ndarray:
    dirs = np.atleast_2d(np.asarray(dirs, dtype=float))
    if dirs.ndim != 2 or dirs.shape[1] != 3:
        raise NotUnitVector(f"expected direction(s) of shape (3,) or (N, 3), got {dirs.shape}")
    defect = np.abs(np.einsum("ni,ni->n", dirs, dirs) - 1.0)
    if defect.max() > UNIT_TOL:
        raise NotUnitVector(f"squared norm deviates from 1 by {defect.max():.3e}")
    return dirs


def _check_subsystem(measured: int) -> int:
    if measured not in (1, 2):
        raise BadSubsystemId(f"measured subsystem must be 1 or 2, got {measured!r}")
    return measured


def projector_pair(n):
    """Rank-1 projectors (I +/- n.sigma)/2 for a unit Bloch vector n."""
    n = _check_directions(n)[0]
    pol = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
    return (ID2 + pol) / 2.0, (ID2 - pol) / 2.0


def conditional_entropy(rho, n, measured: int = 2) -> float:
    """Average post-measurement entropy of the unmeasured spin, in bits.

    Lifts each projector to the full space, applies it to rho, and weights
    the entropy of the surviving reduced state by the outcome probability.
    Outcomes with probability below OUTCOME_FLOOR contribute zero.
    """
    rho = require_state(rho)
    measured = _check_subsystem(measured)
    unmeasured = 3 - measured
    total = 0.0
    for pi in projector_pair(n):
        lifted = kron(pi, ID2) if measured == 1 else kron(ID2, pi)
        post = lifted @ rho @ lifted
        pk = complex(np.trace(post)).real
        if pk < OUTCOME_FLOOR:
            continue
        total += pk * von_neumann_entropy(partial_trace(post / pk, keep=unmeasured))
    return total


def _outcome_entropy_terms(blocks: np.ndarray) -> np.ndarray:
    # blocks: (N, 2, 2) unnormalized Hermitian conditional states with
    # trace = outcome probability; returns p_k * S(block / p_k) per row.
    pk = blocks[:, 0, 0].real + blocks[:, 1, 1].real
    half_gap = 0.5 * (blocks[:, 0, 0].real - blocks[:, 1, 1].real)
    radius = np.hypot(half_gap, np.abs(blocks[:, 0, 1]))
    ok = pk > OUTCOME_FLOOR
    safe_pk = np.where(ok, pk, 1.0)
    terms = np.zeros(len(blocks))
    for lam in (0.5 * pk + radius, 0.5 * pk - radius):
        frac = np.clip(lam / safe_pk, 0.0, 1.0)
        pos = ok & (frac > 0.0)
        terms -= np.where(pos, lam * np.log2(np.where(pos, frac, 1.0)), 0.0)
    return np.maximum(terms, 0.0)


def _cond_entropy_core(rho4: np.ndarray, dirs: np.ndarray, measured: int) -> np.ndarray:
    # Same measurement pipeline as conditional_entropy, evaluated for a batch
    # of directions; the surviving block is Tr_measured[rho (I x Pi)], which
    # equals the partial trace of Pi rho Pi because Pi is idempotent.
    pis = 0.5 * (ID2[None, :, :] + np.einsum("nk,kab->nab", dirs, _PAULI_STACK))
    if measured == 2:
        plus = np.einsum("ikjl,nlk->nij", rho4, pis)
        reduced = np.einsum("ikjk->ij", rho4)
    else:
        plus = np.einsum("ikjl,nji->nkl", rho4, pis)
        reduced = np.einsum("ikil->kl", rho4)
    return _outcome_entropy_terms(plus) + _outcome_entropy_terms(reduced[None, :, :] - plus)


def conditional_entropy_many(rho, dirs, measured: int = 2) -> np.ndarray:
    """Vectorized conditional_entropy over an (N, 3) array of directions."""
    rho = require_state(rho)
    dirs = _check_directions(dirs)
    measured = _check_subsystem(measured)
    return _cond_entropy_core(rho.reshape(2, 2, 2, 2), dirs, measured)


def _canonical_direction(n: np.ndarray) -> np.ndarray:
    # Antipodes describe the same measurement; report the n_z >= 0 hemisphere,
    # breaking equator ties toward n_y >= 0, then n_x >= 0.
    n = n / np.linalg.norm(n)
    flip = n[2] < -UNIT_TOL or (
        abs(n[2]) <= UNIT_TOL
        and (n[1] < -UNIT_TOL or (abs(n[1]) <= UNIT_TOL and n[0] < 0.0))
    )
    return -n if flip else n


def minimize_conditional_entropy(rho, measured: int = 2):
    """Global minimum of the conditional entropy over the unit sphere.

    Returns (best_direction, min_entropy). Deterministic: a 64 x 128
    (theta, phi) grid, then Nelder-Mead from the five best grid points with
    stable index tie-breaking; a flat objective returns the first grid point.
    """
    rho = require_state(rho)
    measured = _check_subsystem(measured)
    rho4 = rho.reshape(2, 2, 2, 2)

    thetas = np.linspace(0.0, math.pi, GRID_THETA)
    phis = np.linspace(0.0, 2.0 * math.pi, GRID_PHI, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    angles = np.stack([tt.reshape(-1), pp.reshape(-1)], axis=1)
    sin_t = np.sin(angles[:, 0])
    dirs = np.stack(
        [sin_t * np.cos(angles[:, 1]), sin_t * np.sin(angles[:, 1]), np.cos(angles[:, 0])],
        axis=1,
    )
    values = _cond_entropy_core(rho4, dirs, measured)
    order = np.argsort(values, kind="stable")[:REFINE_STARTS]

    def objective(x):
        return float(_cond_entropy_core(rho4, direction(x[0], x[1])[None, :], measured)[0])

    best_value = float(values[order[0]])
    best_dir = dirs[order[0]]
    for start in angles[order]:
        result = minimize(
            objective,
            x0=start,
            method="Nelder-Mead",
            options=dict(xatol=1e-9, fatol=1e-13, maxiter=600),
        )
        if result.fun < best_value:
            best_value = float(result.fun)
            best_dir = direction(result.x[0], result.x[1])
    return _canonical_direction(best_dir), best_value


def mutual_information(rho) -> float:
    """Total correlations S(rho_1) + S(rho_2) - S(rho), in bits."""
    rho = require_state(rho)
    return (
        von_neumann_entropy(partial_trace(rho, keep=1))
        + von_neumann_entropy(partial_trace(rho, keep=2))
        - von_neumann_entropy(rho)
    )


def classical_correlations(rho, measured: int = 2) -> float:
    """Entropy of the unmeasured spin minus the minimized conditional entropy."""
    rho = require_state(rho)
    measured = _check_subsystem(measured)
    _, min_ce = minimize_conditional_entropy(rho, measured)
    return von_neumann_entropy(partial_trace(rho, keep=3 - measured)) - min_ce


def discord(rho, measured: int = 2) -> DiscordResult:
    """Quantum discord: mutual information minus classical correlations."""
    rho = require_state(rho)
    measured = _check_subsystem(measured)
    best_dir, min_ce = minimize_conditional_entropy(rho, measured)
    s_unmeasured = von_neumann_entropy(partial_trace(rho, keep=3 - measured))
    classical = s_unmeasured - min_ce
    mutual = mutual_information(rho)
    q = mutual - classical
    if -Q_CLAMP <= q < 0.0:
        q = 0.0
    return DiscordResult(
        q=q,
        classical=classical,
        mutual=mutual,
        best_direction=best_dir,
        min_cond_entropy=min_ce,
        measured_subsystem=measured,
    )

"""Spin-1/2 spectral machinery for the walk's transfer matrix.

The transfer matrix at wave number ``k`` equals ``exp(-i sigma . q_vec(k))``
for the orbit vector ``q_vec(k)``; its eigenvectors are the helicity
spinors of the direction ``q_hat(k)`` and its eigenvalues are
``exp(-+ i q(k))``.  Decomposing the initial qubit onto the spinor pair
turns ``n``-step evolution into two phase factors, with no iteration.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .coin import CayleyKlein, Qubit
from .errors import NotUnitError
from .weylmap import q_hat_of_k, q_norm

__all__ = [
    "SpinorPair",
    "SpectralWeights",
    "pauli_exp",
    "reconstruct_Uk",
    "helicity_eigenstates",
    "decompose_qubit",
    "coeff_weights",
    "evolve_spectral",
]

POLE_TOL = 1e-14


@dataclass(frozen=True)
class SpinorPair:
    """Orthonormal helicity eigenspinors of a momentum direction."""

    psi_plus: np.ndarray
    psi_minus: np.ndarray
    theta_p: float
    phi_p: float

    def __post_init__(self) -> None:
        plus = np.asarray(self.psi_plus, dtype=np.complex128)
        minus = np.asarray(self.psi_minus, dtype=np.complex128)
        object.__setattr__(self, "psi_plus", plus)
        object.__setattr__(self, "psi_minus", minus)
        checks = (
            abs(np.vdot(plus, plus).real - 1.0),
            abs(np.vdot(minus, minus).real - 1.0),
            abs(np.vdot(plus, minus)),
        )
        if max(checks) > 1e-12:
            raise ValueError("spinor pair is not orthonormal")


@dataclass(frozen=True)
class SpectralWeights:
    """Projections of a unit qubit onto a helicity pair."""

    c_plus: complex
    c_minus: complex

    def __post_init__(self) -> None:
        err = abs(abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2 - 1.0)
        if err > 1e-12:
            raise ValueError(f"weights violate completeness by {err:.3e}")


def pauli_exp(qvec: np.ndarray) -> np.ndarray:
    """The unitary ``exp(-i sigma . qvec)``; accepts shape ``(..., 3)``.

    Computed as ``cos(q) I - i sin(q) sigma.q_hat``, which stays finite at
    ``q = pi/2`` (unlike the tangent form) and returns the identity at
    ``q = 0``.
    """
    qvec = np.asarray(qvec, dtype=np.float64)
    q = np.linalg.norm(qvec, axis=-1)
    safe = np.where(q > 0.0, q, 1.0)
    h = qvec / safe[..., None]
    cq = np.cos(q)
    sq = np.sin(q)
    out = np.empty(q.shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = cq - 1j * sq * h[..., 2]
    out[..., 0, 1] = -sq * (1j * h[..., 0] + h[..., 1])
    out[..., 1, 0] = -sq * (1j * h[..., 0] - h[..., 1])
    out[..., 1, 1] = cq + 1j * sq * h[..., 2]
    return out


def reconstruct_Uk(ck: CayleyKlein, k) -> np.ndarray:
    """The transfer matrix rebuilt through the orbit map.

    Must agree entrywise with :func:`weylwalk.walk.build_Uk`; the identity
    is the backbone of the whole momentum-space picture.
    """
    k = np.asarray(k, dtype=np.float64)
    q = q_norm(ck, k)
    qvec = q[..., None] * q_hat_of_k(ck, k)
    return pauli_exp(qvec)


def helicity_eigenstates(p_hat: np.ndarray) -> SpinorPair:
    """Eigenspinors of ``sigma . p_hat`` with eigenvalues +1 and -1.

    The azimuth is pinned to 0 at the poles, where it is pure gauge.
    """
    p_hat = np.asarray(p_hat, dtype=np.float64)
    if abs(np.linalg.norm(p_hat) - 1.0) > 1e-10:
        raise NotUnitError("direction must be a unit vector")
    # two-argument form: stays accurate where arccos(p3) would lose the
    # polar angle to rounding
    theta_p = math.atan2(math.hypot(float(p_hat[0]), float(p_hat[1])), float(p_hat[2]))
    phi_p = math.atan2(float(p_hat[1]), float(p_hat[0]))
    if abs(math.sin(theta_p)) < POLE_TOL:
        phi_p = 0.0
    half = theta_p / 2.0
    eip = cmath.exp(1j * phi_p)
    psi_plus = np.array([math.cos(half), math.sin(half) * eip], dtype=np.complex128)
    psi_minus = np.array(
        [-math.sin(half) * eip.conjugate(), math.cos(half)], dtype=np.complex128
    )
    return SpinorPair(psi_plus, psi_minus, theta_p, phi_p)


def decompose_qubit(qubit: Qubit, p_hat: np.ndarray) -> SpectralWeights:
    """Project a qubit onto the helicity pair of a direction."""
    pair = helicity_eigenstates(p_hat)
    state = qubit.vector()
    return SpectralWeights(
        complex(np.vdot(pair.psi_plus, state)),
        complex(np.vdot(pair.psi_minus, state)),
    )


def coeff_weights(qubit: Qubit, ck: CayleyKlein, gamma):
    """Squared helicity weights along the orbit, in closed form.

    Returns the pair ``(|c_plus|^2, |c_minus|^2)`` as a function of the
    orbit polar angle; accepts scalar or array ``gamma``.  The qubit enters
    only through its population imbalance and the coherence
    ``alpha * conj(beta) * exp(-i(phi - theta))``.
    """
    gamma = np.asarray(gamma, dtype=np.float64)
    w = math.sqrt(1.0 - ck.u * ck.u)
    z = qubit.alpha * qubit.beta.conjugate() * cmath.exp(-1j * (ck.phi - ck.theta))
    imbalance = abs(qubit.alpha) ** 2 - abs(qubit.beta) ** 2
    swing = 0.5 * (imbalance * ck.u + 2.0 * w * z.real) * np.sin(gamma)
    tilt = z.imag * np.cos(gamma)
    plus = 0.5 + swing + tilt
    minus = 0.5 - swing - tilt
    if gamma.ndim == 0:
        return float(plus), float(minus)
    return plus, minus


def evolve_spectral(qubit: Qubit, ck: CayleyKlein, k: float, n: int) -> np.ndarray:
    """Evolve ``n`` steps at one wave number by pure phase accumulation."""
    if n < 0:
        raise ValueError("step count must be non-negative")
    q = float(q_norm(ck, k))
    direction = q_hat_of_k(ck, k)
    pair = helicity_eigenstates(direction)
    weights = decompose_qubit(qubit, direction)
    return (
        cmath.exp(-1j * q * n) * weights.c_plus * pair.psi_plus
        + cmath.exp(1j * q * n) * weights.c_minus * pair.psi_minus
    )

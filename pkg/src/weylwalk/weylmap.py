"""The nonlinear map from wave numbers to a planar orbit in momentum space.

For a coin with parameters ``(u, theta, phi)`` each wave number ``k`` is
sent to a three-dimensional vector ``q_vec(k)`` whose length is
``arccos(u*cos(k + theta))`` and whose direction is a closed-form unit
field.  The image is a closed planar curve: a circle of radius pi/2 at
``u = 0`` that deforms as ``u`` grows, with perihelion ``arccos(u)``
reached at ``k = -theta``.  In polar coordinates ``(q, gamma)`` on the
orbital plane the curve satisfies ``tan(q) * cos(gamma) = sqrt(1-u^2)/u``.

The change of variables ``k -> gamma`` carries the flat measure ``dk/2pi``
to ``J(gamma) dgamma/2pi`` with ``J = sqrt(1-u^2)/(1 - u^2 sin^2 gamma)``;
:func:`integrate_over_orbit` exploits this to integrate periodic functions
of ``k`` along the orbit.

All pointwise functions accept scalar or array ``k``/``gamma`` arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coin import CayleyKlein
from .errors import DegenerateCoinError, DegenerateDirectionError

__all__ = [
    "OrbitPoint",
    "OrbitFrame",
    "q_norm",
    "q_hat_of_k",
    "q_vec_of_k",
    "dq_dk",
    "orbit_frame",
    "gamma_of_k",
    "k_of_gamma",
    "orbit_radius_polar",
    "orbit_point_polar",
    "jacobian",
    "integrate_over_orbit",
]

DEFAULT_QUADRATURE_POINTS = 4096


def _wrap(x):
    """Reduce angles to [-pi, pi), elementwise."""
    return np.mod(x + np.pi, 2.0 * np.pi) - np.pi


def _reject_diagonal(ck: CayleyKlein) -> None:
    if ck.u >= 1.0:
        raise DegenerateCoinError(
            "a diagonal coin (u = 1) has no well-defined orbit geometry"
        )


@dataclass(frozen=True)
class OrbitPoint:
    """One point of the orbit: radius, direction, vector, and polar angle."""

    k: float
    q: float
    q_hat: np.ndarray
    q_vec: np.ndarray
    gamma: float

    def __post_init__(self) -> None:
        q_hat = np.asarray(self.q_hat, dtype=np.float64)
        q_vec = np.asarray(self.q_vec, dtype=np.float64)
        object.__setattr__(self, "q_hat", q_hat)
        object.__setattr__(self, "q_vec", q_vec)
        if abs(np.linalg.norm(q_hat) - 1.0) > 1e-12:
            raise ValueError("q_hat must be a unit vector")
        if np.max(np.abs(q_vec - self.q * q_hat)) > 1e-12:
            raise ValueError("q_vec must equal q * q_hat")


@dataclass(frozen=True)
class OrbitFrame:
    """Right-handed orthonormal basis adapted to the orbital plane.

    ``e1`` points to the perihelion, ``e2`` completes the in-plane pair,
    ``e3`` is the plane normal.
    """

    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray

    def __post_init__(self) -> None:
        basis = [np.asarray(e, dtype=np.float64) for e in (self.e1, self.e2, self.e3)]
        for name, e in zip(("e1", "e2", "e3"), basis):
            object.__setattr__(self, name, e)
        e1, e2, e3 = basis
        checks = [
            abs(e1 @ e1 - 1.0),
            abs(e2 @ e2 - 1.0),
            abs(e3 @ e3 - 1.0),
            abs(e1 @ e2),
            abs(e1 @ e3),
            abs(e2 @ e3),
            float(np.max(np.abs(np.cross(e1, e2) - e3))),
        ]
        if max(checks) > 1e-12:
            raise ValueError("frame is not right-handed orthonormal")


# --------------------------------------------------------------------------- #
#                         pointwise orbit quantities                          #
# --------------------------------------------------------------------------- #


def q_norm(ck: CayleyKlein, k):
    """Orbit radius ``arccos(u * cos(k + theta))``; continuous and periodic."""
    return np.arccos(ck.u * np.cos(np.asarray(k, dtype=np.float64) + ck.theta))


def _direction_denominator(ck: CayleyKlein, k):
    # sin of the orbit radius: sqrt(1 - u^2 cos^2(k+theta)), bounded below
    # by sqrt(1-u^2) for u < 1.
    c = np.cos(np.asarray(k, dtype=np.float64) + ck.theta)
    return np.sqrt(1.0 - (ck.u * c) ** 2)


def q_hat_of_k(ck: CayleyKlein, k):
    """Unit direction of the orbit point; shape ``k.shape + (3,)``."""
    k = np.asarray(k, dtype=np.float64)
    den = _direction_denominator(ck, k)
    if ck.u >= 1.0 and np.min(den) < 1e-12:
        raise DegenerateDirectionError(
            "direction field vanishes at k = -theta for a diagonal coin"
        )
    w = math.sqrt(1.0 - ck.u * ck.u)
    out = np.empty(k.shape + (3,), dtype=np.float64)
    out[..., 0] = -w * np.sin(k + ck.phi) / den
    out[..., 1] = -w * np.cos(k + ck.phi) / den
    out[..., 2] = -ck.u * np.sin(k + ck.theta) / den
    return out


def q_vec_of_k(ck: CayleyKlein, k: float) -> OrbitPoint:
    """Assemble the full orbit point at a single wave number."""
    k = float(k)
    q = float(q_norm(ck, k))
    q_hat = q_hat_of_k(ck, k)
    return OrbitPoint(k, q, q_hat, q * q_hat, float(gamma_of_k(ck, k)))


def dq_dk(ck: CayleyKlein, k):
    """Derivative of the orbit radius with respect to the wave number."""
    k = np.asarray(k, dtype=np.float64)
    return ck.u * np.sin(k + ck.theta) / _direction_denominator(ck, k)


def orbit_frame(ck: CayleyKlein) -> OrbitFrame:
    """The orthonormal basis adapted to the coin's orbital plane."""
    w = math.sqrt(1.0 - ck.u * ck.u)
    delta = ck.phi - ck.theta
    s, c = math.sin(delta), math.cos(delta)
    e1 = np.array([-s, -c, 0.0])
    e2 = np.array([w * c, -w * s, ck.u])
    e3 = np.array([-ck.u * c, ck.u * s, w])
    return OrbitFrame(e1, e2, e3)


def gamma_of_k(ck: CayleyKlein, k):
    """Polar angle of the orbit point, measured from the perihelion axis."""
    _reject_diagonal(ck)
    k = np.asarray(k, dtype=np.float64)
    den = _direction_denominator(ck, k)
    w = math.sqrt(1.0 - ck.u * ck.u)
    cos_g = w * np.cos(k + ck.theta) / den
    sin_g = -np.sin(k + ck.theta) / den
    return _wrap(np.arctan2(sin_g, cos_g))


def k_of_gamma(ck: CayleyKlein, gamma):
    """Inverse of :func:`gamma_of_k`, back onto [-pi, pi)."""
    _reject_diagonal(ck)
    gamma = np.asarray(gamma, dtype=np.float64)
    w = math.sqrt(1.0 - ck.u * ck.u)
    den = np.sqrt(1.0 - (ck.u * np.sin(gamma)) ** 2)
    sin_kt = -w * np.sin(gamma) / den
    cos_kt = np.cos(gamma) / den
    return _wrap(np.arctan2(sin_kt, cos_kt) - ck.theta)


def orbit_radius_polar(ck: CayleyKlein, gamma):
    """Orbit radius as a function of the polar angle.

    Equivalent to ``arctan((sqrt(1-u^2)/u) / cos(gamma))`` with the branch
    that keeps the radius in (0, pi): first quadrant where ``cos(gamma)``
    is positive, second where it is negative, exactly pi/2 on the boundary.
    """
    _reject_diagonal(ck)
    w = math.sqrt(1.0 - ck.u * ck.u)
    gamma = np.asarray(gamma, dtype=np.float64)
    return np.arctan2(w, ck.u * np.cos(gamma))


def orbit_point_polar(ck: CayleyKlein, q, gamma):
    """Embed plane polar coordinates ``(q, gamma)`` back into 3-space."""
    q = np.asarray(q, dtype=np.float64)
    gamma = np.asarray(gamma, dtype=np.float64)
    w = math.sqrt(1.0 - ck.u * ck.u)
    delta = ck.phi - ck.theta
    s, c = math.sin(delta), math.cos(delta)
    sin_g, cos_g = np.sin(gamma), np.cos(gamma)
    out = np.empty(np.broadcast(q, gamma).shape + (3,), dtype=np.float64)
    out[..., 0] = q * (w * c * sin_g - s * cos_g)
    out[..., 1] = q * (-w * s * sin_g - c * cos_g)
    out[..., 2] = q * ck.u * sin_g
    return out


def jacobian(ck: CayleyKlein, gamma):
    """``|dk/dgamma|``: the density carrying k-integrals onto the orbit."""
    _reject_diagonal(ck)
    w = math.sqrt(1.0 - ck.u * ck.u)
    gamma = np.asarray(gamma, dtype=np.float64)
    return w / (1.0 - (ck.u * np.sin(gamma)) ** 2)


# --------------------------------------------------------------------------- #
#                          curvilinear integration                            #
# --------------------------------------------------------------------------- #


def integrate_over_orbit(ck: CayleyKlein, f, N: int = DEFAULT_QUADRATURE_POINTS) -> float:
    """Integrate ``f(k)`` over one period by quadrature along the orbit.

    Evaluates the mean of ``J(gamma) * f(k(gamma))`` on a uniform gamma
    grid.  For periodic integrands the uniform (trapezoidal) rule converges
    spectrally, and the Jacobian makes the result equal the plain k-average
    of ``f``.

    ``f`` may be vectorized over a 1-D array of wave numbers; a scalar-only
    callable works too.
    """
    if N < 64:
        raise ValueError("quadrature needs at least 64 points")
    gamma = -np.pi + 2.0 * np.pi * np.arange(N) / N
    weights = jacobian(ck, gamma)
    ks = k_of_gamma(ck, gamma)
    try:
        vals = np.asarray(f(ks), dtype=np.float64)
        if vals.shape != ks.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([f(kk) for kk in ks], dtype=np.float64)
    return math.fsum(weights * vals) / N

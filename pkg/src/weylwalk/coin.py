"""2x2 unitary coins and their parameterizations.

A walk coin is a 2x2 unitary matrix.  Every such matrix factors as a global
phase times a determinant-1 (special unitary) matrix, and every special
unitary matrix is coordinatized by a modulus ``u`` and two angles
``(theta, phi)``:

    a = u * exp(i*theta),   b = sqrt(1 - u**2) * exp(i*phi),
    A = [[a, b], [-conj(b), conj(a)]].

Observable walk quantities never depend on the global phase, so most of the
library works with the stripped form.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NonUnitaryError, UnknownPresetError

__all__ = [
    "UnitaryCoin",
    "SpecialCoin",
    "CayleyKlein",
    "Qubit",
    "strip_phase",
    "to_cayley_klein",
    "from_cayley_klein",
    "preset_coin",
    "parse_coin",
    "COIN_PRESETS",
]

UNITARITY_TOL = 1e-12

TWO_PI = 2.0 * math.pi


def wrap_angle(x: float) -> float:
    """Reduce an angle to the half-open interval [-pi, pi)."""
    y = math.fmod(x + math.pi, TWO_PI)
    if y < 0.0:
        y += TWO_PI
    return y - math.pi


@dataclass(frozen=True)
class UnitaryCoin:
    """A general 2x2 unitary coin with entries ``[[a, b], [c, d]]``.

    Raises
    ------
    NonUnitaryError
        If the columns are not orthonormal within ``UNITARITY_TOL``.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        col1 = abs(abs(self.a) ** 2 + abs(self.c) ** 2 - 1.0)
        col2 = abs(abs(self.b) ** 2 + abs(self.d) ** 2 - 1.0)
        cross = abs(self.a * self.b.conjugate() + self.c * self.d.conjugate())
        worst = max(col1, col2, cross)
        if worst > UNITARITY_TOL:
            raise NonUnitaryError(
                f"coin fails unitarity by {worst:.3e} (tolerance {UNITARITY_TOL:.0e})"
            )

    def matrix(self) -> np.ndarray:
        """The coin as a (2, 2) complex128 array."""
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def scaled_by_phase(self, phase: float) -> UnitaryCoin:
        """Return ``exp(i*phase)`` times this coin."""
        g = cmath.exp(1j * phase)
        return UnitaryCoin(g * self.a, g * self.b, g * self.c, g * self.d)


@dataclass(frozen=True)
class SpecialCoin:
    """A determinant-1 coin: ``[[a, b], [-conj(b), conj(a)]]``.

    Only ``a`` and ``b`` are stored; the second row is implied, which makes
    the determinant exactly 1 by construction.
    """

    a: complex
    b: complex

    def __post_init__(self) -> None:
        err = abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0)
        if err > UNITARITY_TOL:
            raise NonUnitaryError(
                f"|a|^2 + |b|^2 deviates from 1 by {err:.3e}"
            )

    @property
    def c(self) -> complex:
        return -self.b.conjugate()

    @property
    def d(self) -> complex:
        return self.a.conjugate()

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.a, self.b], [-self.b.conjugate(), self.a.conjugate()]],
            dtype=np.complex128,
        )

    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def to_unitary(self) -> UnitaryCoin:
        return UnitaryCoin(self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class CayleyKlein:
    """Coordinates ``(u, theta, phi)`` on the determinant-1 coins.

    ``u`` is the modulus of the diagonal entry; ``theta`` and ``phi`` are the
    arguments of the diagonal and off-diagonal entries.  Angles are wrapped
    to [-pi, pi) on construction, so any real value is accepted.
    """

    u: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        u = float(self.u)
        if u < -UNITARITY_TOL or u > 1.0 + UNITARITY_TOL:
            raise ValueError(f"u must lie in [0, 1], got {u!r}")
        object.__setattr__(self, "u", min(max(u, 0.0), 1.0))
        object.__setattr__(self, "theta", wrap_angle(float(self.theta)))
        object.__setattr__(self, "phi", wrap_angle(float(self.phi)))


@dataclass(frozen=True)
class Qubit:
    """A normalized two-component internal state ``(alpha, beta)``."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        err = abs(abs(self.alpha) ** 2 + abs(self.beta) ** 2 - 1.0)
        if err > UNITARITY_TOL:
            raise NonUnitaryError(f"qubit norm deviates from 1 by {err:.3e}")

    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=np.complex128)


# --------------------------------------------------------------------------- #
#                              reparameterization                             #
# --------------------------------------------------------------------------- #


def strip_phase(coin: UnitaryCoin) -> tuple[SpecialCoin, float]:
    """Factor a unitary coin into a determinant-1 coin and a global phase.

    The determinant of a unitary coin is ``exp(2i*phase)``; the phase branch
    is fixed to [-pi/2, pi/2), which makes the factorization unique.

    Returns
    -------
    (SpecialCoin, float)
        The stripped coin and the phase, satisfying
        ``exp(i*phase) * stripped == coin`` entrywise.
    """
    phase = cmath.phase(coin.determinant()) / 2.0
    if phase >= math.pi / 2.0:
        phase -= math.pi
    g = cmath.exp(-1j * phase)
    return SpecialCoin(g * coin.a, g * coin.b), phase


def to_cayley_klein(coin: SpecialCoin) -> CayleyKlein:
    """Read off ``(u, theta, phi)`` from a determinant-1 coin.

    At ``u == 1`` the angle ``phi`` is unconstrained and is pinned to 0;
    at ``u == 0`` the same applies to ``theta``.
    """
    u = min(abs(coin.a), 1.0)
    theta = cmath.phase(coin.a) if u > 0.0 else 0.0
    phi = cmath.phase(coin.b) if u < 1.0 else 0.0
    return CayleyKlein(u, theta, phi)


def from_cayley_klein(ck: CayleyKlein) -> SpecialCoin:
    """Rebuild the determinant-1 coin from ``(u, theta, phi)``."""
    a = ck.u * cmath.exp(1j * ck.theta)
    b = math.sqrt(1.0 - ck.u * ck.u) * cmath.exp(1j * ck.phi)
    return SpecialCoin(a, b)


# --------------------------------------------------------------------------- #
#                                   presets                                   #
# --------------------------------------------------------------------------- #

_SQRT1_2 = 1.0 / math.sqrt(2.0)

COIN_PRESETS = ("hadamard", "identity", "antidiagonal")


def preset_coin(name: str) -> UnitaryCoin:
    """Return a named coin: ``hadamard``, ``identity``, or ``antidiagonal``."""
    key = name.strip().lower()
    if key == "hadamard":
        return UnitaryCoin(_SQRT1_2, _SQRT1_2, _SQRT1_2, -_SQRT1_2)
    if key == "identity":
        return UnitaryCoin(1.0, 0.0, 0.0, 1.0)
    if key == "antidiagonal":
        return UnitaryCoin(0.0, 1.0, -1.0, 0.0)
    raise UnknownPresetError(
        f"unknown coin preset {name!r}; choose from {', '.join(COIN_PRESETS)}"
    )


def parse_coin(text: str) -> UnitaryCoin:
    """Parse a coin from its command-line representation.

    Accepted forms:

    * a preset name (``hadamard``, ``identity``, ``antidiagonal``);
    * four comma-separated reals ``a_re,a_im,b_re,b_im`` giving the entries
      ``a`` and ``b`` of a determinant-1 coin;
    * three comma-separated reals ``u,theta,phi``.
    """
    stripped = text.strip()
    if stripped.lower() in COIN_PRESETS:
        return preset_coin(stripped)
    try:
        parts = [float(p) for p in stripped.split(",")]
    except ValueError as exc:
        raise UnknownPresetError(
            f"coin spec {text!r} is neither a preset nor a numeric tuple"
        ) from exc
    if len(parts) == 4:
        a = complex(parts[0], parts[1])
        b = complex(parts[2], parts[3])
        return SpecialCoin(a, b).to_unitary()
    if len(parts) == 3:
        return from_cayley_klein(CayleyKlein(*parts)).to_unitary()
    raise UnknownPresetError(
        f"coin spec {text!r} must have 3 (u,theta,phi) or 4 (a_re,a_im,b_re,b_im) fields"
    )

"""Discrete-time walk evolution on the integer lattice.

The walker carries a two-component amplitude.  Each step mixes the
components with the coin matrix and shifts component 1 one site to the left
and component 2 one site to the right.  The same dynamics can be run in
wave-number space, where each step is a pointwise 2x2 matrix application;
the two routes are exactly equivalent and serve as mutual cross-checks.

Also included: the classical random-turn chain (the walk's stochastic
counterpart) and the diffusion kernel it converges to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .coin import Qubit, SpecialCoin, UnitaryCoin
from .errors import (
    GridTooSmallError,
    NonPositiveTimeError,
    NonUnitaryError,
    UnsupportedOrderError,
)

__all__ = [
    "WaveField",
    "KSpectrum",
    "Distribution",
    "ClassicalTurnParams",
    "ClassicalWalkTable",
    "step_position",
    "evolve_position",
    "build_Uk",
    "evolve_kspace",
    "kspectrum_to_position",
    "position_to_kspectrum",
    "distribution",
    "moment_position",
    "moment_kspace",
    "classical_evolve",
    "heat_kernel",
]

NORM_TOL = 1e-10

Coin = UnitaryCoin | SpecialCoin


# --------------------------------------------------------------------------- #
#                                 data types                                  #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class WaveField:
    """Two-component amplitudes over a dense lattice window.

    ``amps`` has shape (2, size); site ``j`` of the window is lattice
    position ``origin_offset + j``.  Row 0 is the left-moving component.

    After ``step_count`` steps from the origin the support lies inside
    [-step_count, step_count] and only sites of the matching parity carry
    amplitude; both are enforced on construction, as is unit total
    probability.
    """

    origin_offset: int
    amps: np.ndarray
    step_count: int

    def __post_init__(self) -> None:
        amps = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if amps.ndim != 2 or amps.shape[0] != 2:
            raise ValueError("amps must have shape (2, size)")
        object.__setattr__(self, "amps", amps)
        n = self.step_count
        if n < 0:
            raise ValueError("step_count must be non-negative")
        err = abs(self.norm_sq() - 1.0)
        if err > NORM_TOL:
            raise NonUnitaryError(f"total probability deviates from 1 by {err:.3e}")
        x = self.sites()
        forbidden = (np.abs(x) > n) | ((x - n) % 2 != 0)
        if np.any(np.abs(amps[:, forbidden]) > NORM_TOL):
            raise ValueError("amplitude found outside the reachable support")

    def sites(self) -> np.ndarray:
        """Lattice positions of the window, ascending."""
        return self.origin_offset + np.arange(self.amps.shape[1])

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def amplitude(self, x: int) -> np.ndarray:
        """The two-component amplitude at lattice position ``x``."""
        j = x - self.origin_offset
        if 0 <= j < self.amps.shape[1]:
            return self.amps[:, j].copy()
        return np.zeros(2, dtype=np.complex128)


@dataclass(frozen=True)
class KSpectrum:
    """Component amplitudes sampled on the uniform wave-number grid.

    Grid point ``j`` is ``k_j = -pi + 2*pi*j/grid_size``; ``values`` has
    shape (2, grid_size).
    """

    grid_size: int
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.ascontiguousarray(self.values, dtype=np.complex128)
        if values.shape != (2, self.grid_size):
            raise ValueError(
                f"values must have shape (2, {self.grid_size}), got {values.shape}"
            )
        object.__setattr__(self, "values", values)

    def k_grid(self) -> np.ndarray:
        return -np.pi + 2.0 * np.pi * np.arange(self.grid_size) / self.grid_size


@dataclass(frozen=True)
class Distribution:
    """Site probabilities over a dense lattice window."""

    origin_offset: int
    probs: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probs)
        object.__setattr__(self, "probs", probs)
        if any(p < 0 for p in probs):
            raise ValueError("probabilities must be non-negative")
        total = sum(probs.tolist())
        if abs(float(total) - 1.0) > NORM_TOL:
            raise ValueError(f"probabilities sum to {total}, expected 1")

    def sites(self) -> np.ndarray:
        return self.origin_offset + np.arange(len(self.probs))

    def probability(self, x: int) -> float:
        j = x - self.origin_offset
        if 0 <= j < len(self.probs):
            return self.probs[j]
        return 0.0


@dataclass(frozen=True)
class ClassicalTurnParams:
    """Turn probability and initial left-direction probability."""

    p_turn: float | Fraction
    q_left: float | Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.p_turn <= 1:
            raise ValueError("p_turn must lie in [0, 1]")
        if not 0 <= self.q_left <= 1:
            raise ValueError("q_left must lie in [0, 1]")

    @property
    def exact(self) -> bool:
        """True when parameters are Fractions; evolution then stays rational."""
        return isinstance(self.p_turn, Fraction) or isinstance(self.q_left, Fraction)


@dataclass(frozen=True)
class ClassicalWalkTable:
    """Per-direction occupation probabilities of the random-turn chain."""

    origin_offset: int
    left: np.ndarray
    right: np.ndarray
    step_count: int

    def sites(self) -> np.ndarray:
        return self.origin_offset + np.arange(len(self.left))

    def total(self) -> Distribution:
        return Distribution(self.origin_offset, self.left + self.right)


# --------------------------------------------------------------------------- #
#                             quantum evolution                               #
# --------------------------------------------------------------------------- #


def step_position(field: WaveField, coin: Coin) -> WaveField:
    """Advance the walk one step; the window grows by one site on each side."""
    size = field.amps.shape[1]
    out = np.zeros((2, size + 2), dtype=np.complex128)
    out[0, 0:size] = coin.a * field.amps[0] + coin.b * field.amps[1]
    out[1, 2 : size + 2] = coin.c * field.amps[0] + coin.d * field.amps[1]
    return WaveField(field.origin_offset - 1, out, field.step_count + 1)


def evolve_position(qubit: Qubit, coin: Coin, n: int) -> WaveField:
    """Run ``n`` steps from a walker localized at the origin.

    Dispatches to the selected kernel backend (compiled when available).
    """
    if n < 0:
        raise ValueError("step count must be non-negative")
    amps = _kernels.position_evolve(
        complex(coin.a),
        complex(coin.b),
        complex(coin.c),
        complex(coin.d),
        complex(qubit.alpha),
        complex(qubit.beta),
        int(n),
    )
    return WaveField(-n, amps, n)


def build_Uk(coin: Coin, k: float | np.ndarray) -> np.ndarray:
    """Single-step transfer matrix ``diag(e^{ik}, e^{-ik}) @ A`` at wave number k.

    Accepts a scalar or an array of wave numbers; the matrix axes are last.
    """
    k = np.asarray(k, dtype=np.float64)
    eik = np.exp(1j * k)
    U = np.empty(k.shape + (2, 2), dtype=np.complex128)
    U[..., 0, 0] = eik * coin.a
    U[..., 0, 1] = eik * coin.b
    U[..., 1, 0] = eik.conj() * coin.c
    U[..., 1, 1] = eik.conj() * coin.d
    return U


def _require_grid(N: int, n: int) -> None:
    if N < 2 * n + 2:
        raise GridTooSmallError(
            f"grid of {N} points cannot resolve {n} steps; need at least {2 * n + 2}"
        )


def evolve_kspace(qubit: Qubit, coin: Coin, n: int, N: int) -> KSpectrum:
    """Evolve the initial qubit pointwise on an ``N``-point wave-number grid."""
    if n < 0:
        raise ValueError("step count must be non-negative")
    _require_grid(N, n)
    k = -np.pi + 2.0 * np.pi * np.arange(N) / N
    values = _kernels.kspace_evolve(
        complex(coin.a),
        complex(coin.b),
        complex(coin.c),
        complex(coin.d),
        complex(qubit.alpha),
        complex(qubit.beta),
        int(n),
        k,
    )
    return KSpectrum(N, values)


def kspectrum_to_position(spec: KSpectrum, n: int) -> WaveField:
    """Inverse transform onto the window [-n, n].

    The spectrum of an ``n``-step walk is a trigonometric polynomial of
    degree at most ``n``, so with ``grid_size >= 2n + 2`` the discrete sum
    reproduces the continuum transform exactly (up to rounding).
    """
    N = spec.grid_size
    _require_grid(N, n)
    inv = np.fft.ifft(spec.values, axis=1)
    x = np.arange(-n, n + 1)
    # grid starts at -pi, not 0: twist by e^{-i*pi*x} = (-1)^x
    amps = inv[:, x % N] * ((-1.0) ** x)
    return WaveField(-n, amps, n)


def position_to_kspectrum(field: WaveField, N: int) -> KSpectrum:
    """Forward transform of a wave field onto an ``N``-point grid."""
    _require_grid(N, field.step_count)
    buf = np.zeros((2, N), dtype=np.complex128)
    x = field.sites()
    buf[:, x % N] = field.amps * ((-1.0) ** x)
    return KSpectrum(N, np.fft.fft(buf, axis=1))


# --------------------------------------------------------------------------- #
#                         distributions and moments                           #
# --------------------------------------------------------------------------- #


def distribution(field: WaveField) -> Distribution:
    """Site probabilities ``|amp_1|^2 + |amp_2|^2``."""
    probs = np.sum(np.abs(field.amps) ** 2, axis=0)
    return Distribution(field.origin_offset, probs)


def moment_position(field: WaveField, r: int) -> float:
    """The ``r``-th position moment, summed exactly over the support.

    Uses compensated summation so the result is independent of threading
    and chunking.
    """
    if r < 0:
        raise ValueError("moment order must be non-negative")
    probs = np.sum(np.abs(field.amps) ** 2, axis=0)
    xs = field.sites().astype(np.float64)
    return math.fsum(probs * xs**r)


def moment_kspace(spec: KSpectrum, r: int) -> float:
    """Validation-only moment from the spectrum via centered differences.

    Implements the momentum-representation expectation with the derivative
    replaced by second-order centered differences on the periodic grid, so
    it agrees with :func:`moment_position` to O(grid_size**-2).  Orders
    above 2 are not supported on this path.
    """
    if r < 0:
        raise ValueError("moment order must be non-negative")
    if r > 2:
        raise UnsupportedOrderError(
            "spectrum-side moments are a validation path limited to r <= 2"
        )
    v = spec.values
    N = spec.grid_size
    if r == 0:
        return float(np.sum(np.abs(v) ** 2)) / N
    h = 2.0 * np.pi / N
    fwd = np.roll(v, -1, axis=1)
    bwd = np.roll(v, 1, axis=1)
    if r == 1:
        dv = (fwd - bwd) / (2.0 * h)
        integrand = np.sum((v.conj() * 1j * dv).real, axis=0)
    else:
        d2v = (fwd - 2.0 * v + bwd) / (h * h)
        integrand = np.sum((v.conj() * -d2v).real, axis=0)
    return float(np.sum(integrand)) / N


# --------------------------------------------------------------------------- #
#                             classical baseline                              #
# --------------------------------------------------------------------------- #


def classical_evolve(
    params: ClassicalTurnParams, n: int
) -> tuple[Distribution, ClassicalWalkTable]:
    """Iterate the random-turn chain ``n`` steps from the origin.

    Direction 1 moves left, direction 2 moves right; each step the walker
    flips direction with probability ``p_turn`` and then moves.  When the
    parameters are Fractions the iteration is carried out in exact rational
    arithmetic.
    """
    if n < 0:
        raise ValueError("step count must be non-negative")
    stay = 1 - params.p_turn
    turn = params.p_turn
    size = 2 * n + 1
    dtype = object if params.exact else np.float64
    cur = np.zeros((2, size), dtype=dtype)
    cur[0, n] = params.q_left
    cur[1, n] = 1 - params.q_left
    for _ in range(n):
        nxt = np.zeros((2, size), dtype=dtype)
        nxt[0, :-1] = stay * cur[0, 1:] + turn * cur[1, 1:]
        nxt[1, 1:] = turn * cur[0, :-1] + stay * cur[1, :-1]
        cur = nxt
    table = ClassicalWalkTable(-n, cur[0], cur[1], n)
    return table.total(), table


def heat_kernel(t: float, x: float | np.ndarray) -> float | np.ndarray:
    """Gaussian diffusion kernel with variance ``t``."""
    if t <= 0:
        raise NonPositiveTimeError(f"time must be positive, got {t!r}")
    out = np.exp(-np.asarray(x, dtype=np.float64) ** 2 / (2.0 * t)) / math.sqrt(
        2.0 * math.pi * t
    )
    return out if out.ndim else float(out)

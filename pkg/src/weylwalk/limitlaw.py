"""Konno's limit density for the rescaled walker position and its moments.

As the step count grows, every moment of the pseudo-velocity (position over
step count) converges.  The limiting values are moments of the density

    nu(y) = mu(y; u) * (1 - c_asym * y)   on |y| < u,  zero outside,

where ``u`` is the modulus of the coin's diagonal entry, ``mu`` is an
even inverse-square-root-singular weight, and ``c_asym`` collects the
initial qubit's imbalance and its coherence with the coin.

Two independent integral representations of the limit moments are
implemented: a wave-number integral built from the helicity weights and
the radius derivative, and the polar-angle (equivalently, y) integral
against the density itself.  Their agreement is one of the library's main
verification targets.  All quadrature is done in the polar angle, where
the integrand is smooth and periodic; the y-form has endpoint
singularities and is never sampled directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coin import CayleyKlein, Qubit, SpecialCoin, UnitaryCoin, strip_phase, to_cayley_klein
from .errors import DegenerateCoinError, OutOfSupportError
from .spectral import coeff_weights
from .walk import evolve_position, moment_position
from .weylmap import DEFAULT_QUADRATURE_POINTS, dq_dk, gamma_of_k, jacobian

__all__ = [
    "KonnoLaw",
    "ConvergenceRow",
    "konno_mu",
    "asymmetry_factor",
    "konno_nu",
    "limit_moment",
    "limit_moment_k",
    "convergence_report",
]

DUAL_FORM_TOL = 1e-13


@dataclass(frozen=True)
class KonnoLaw:
    """Parameters of the limit density: support radius ``u`` and asymmetry."""

    u: float
    c_asym: float

    def __post_init__(self) -> None:
        if not 0.0 < self.u < 1.0:
            raise DegenerateCoinError(
                f"the limit law requires u strictly inside (0, 1), got {self.u!r}"
            )

    @classmethod
    def from_state(cls, qubit: Qubit, coin: UnitaryCoin | SpecialCoin) -> KonnoLaw:
        """Build the law for a walk driven by ``coin`` from ``qubit``."""
        if not isinstance(coin, SpecialCoin):
            coin, _ = strip_phase(coin)
        return cls(abs(coin.a), asymmetry_factor(qubit, coin))


def konno_mu(y, u: float):
    """The even singular weight on (-u, u); scalar or array ``y``."""
    if not 0.0 < u < 1.0:
        raise DegenerateCoinError(f"u must lie in (0, 1), got {u!r}")
    y = np.asarray(y, dtype=np.float64)
    if np.any(np.abs(y) >= u):
        raise OutOfSupportError(f"|y| must be below {u}")
    out = math.sqrt(1.0 - u * u) / (np.pi * (1.0 - y * y) * np.sqrt(u * u - y * y))
    return out if out.ndim else float(out)


def asymmetry_factor(qubit: Qubit, coin: SpecialCoin) -> float:
    """Coefficient of ``y`` in the density's linear tilt.

    Computed twice, from the raw coin entries and from the angle
    parameterization, and cross-asserted; the entrywise form is returned.
    """
    a, b = coin.a, coin.b
    u = abs(a)
    if not 0.0 < u < 1.0:
        raise DegenerateCoinError(
            "asymmetry is undefined for diagonal or anti-diagonal coins"
        )
    alpha, beta = qubit.alpha, qubit.beta
    imbalance = abs(alpha) ** 2 - abs(beta) ** 2
    cross = alpha * beta.conjugate() * a * b.conjugate()
    direct = imbalance + (cross + cross.conjugate()).real / (u * u)

    ck = to_cayley_klein(coin)
    w = math.sqrt(1.0 - ck.u * ck.u)
    z = alpha * beta.conjugate() * complex(
        math.cos(ck.phi - ck.theta), -math.sin(ck.phi - ck.theta)
    )
    angular = imbalance + (w / ck.u) * 2.0 * z.real
    if abs(direct - angular) > DUAL_FORM_TOL:
        raise AssertionError(
            f"asymmetry forms disagree by {abs(direct - angular):.3e}"
        )
    return float(direct)


def konno_nu(y, law: KonnoLaw):
    """The limit density; zero outside (-u, u).  Scalar or array ``y``."""
    y = np.asarray(y, dtype=np.float64)
    out = np.zeros(y.shape, dtype=np.float64)
    inside = np.abs(y) < law.u
    if np.any(inside):
        yi = y[inside]
        out[inside] = konno_mu(yi, law.u) * (1.0 - law.c_asym * yi)
    return out if out.ndim else float(out)


def _angular_weight_moment(u: float, power: int, N: int) -> float:
    # mean over the polar angle of J(gamma) * (u sin gamma)^power;
    # equals the y-moment of the singular weight without touching the
    # endpoint singularities.
    ck = CayleyKlein(u, 0.0, 0.0)
    gamma = -np.pi + 2.0 * np.pi * np.arange(N) / N
    vals = jacobian(ck, gamma) * (u * np.sin(gamma)) ** power
    return math.fsum(vals) / N


def limit_moment(r: int, law: KonnoLaw, N: int = DEFAULT_QUADRATURE_POINTS) -> float:
    """The ``r``-th moment of the limit density.

    Even orders are pure weight moments; odd orders pick up the asymmetry
    coefficient against the next even weight moment, with a sign flip.
    """
    if r < 0:
        raise ValueError("moment order must be non-negative")
    if r % 2 == 0:
        return _angular_weight_moment(law.u, r, N)
    return -law.c_asym * _angular_weight_moment(law.u, r + 1, N)


def limit_moment_k(
    r: int,
    qubit: Qubit,
    ck: CayleyKlein,
    N: int = DEFAULT_QUADRATURE_POINTS,
) -> float:
    """The ``r``-th limit moment as a wave-number integral.

    Integrates the signed helicity weights against the ``r``-th power of
    the radius derivative.  Agrees with :func:`limit_moment` analytically;
    numerically within quadrature error.
    """
    if r < 0:
        raise ValueError("moment order must be non-negative")
    if not 0.0 < ck.u < 1.0:
        raise DegenerateCoinError("limit moments require u strictly inside (0, 1)")
    k = -np.pi + 2.0 * np.pi * np.arange(N) / N
    plus, minus = coeff_weights(qubit, ck, gamma_of_k(ck, k))
    vals = (plus + (-1.0) ** r * minus) * dq_dk(ck, k) ** r
    return math.fsum(vals) / N


@dataclass(frozen=True)
class ConvergenceRow:
    """One (step count, order) entry of a convergence report."""

    n: int
    r: int
    finite: float
    limit: float
    gap: float


def convergence_report(
    coin: UnitaryCoin | SpecialCoin,
    qubit: Qubit,
    r_max: int,
    steps: list[int],
    N: int = DEFAULT_QUADRATURE_POINTS,
) -> list[ConvergenceRow]:
    """Tabulate finite-step pseudo-velocity moments against their limits.

    For each requested step count the walk is evolved once and the moments
    ``r = 0 .. r_max`` of position / step count are compared with the limit
    values.  Rows are ordered by the input step order, then by ``r``.
    """
    if any(n <= 0 for n in steps):
        raise ValueError("step counts must be positive")
    if isinstance(coin, SpecialCoin):
        stripped = coin
    else:
        stripped, _ = strip_phase(coin)
    law = KonnoLaw.from_state(qubit, stripped)
    limits = [limit_moment(r, law, N) for r in range(r_max + 1)]
    rows = []
    for n in steps:
        field = evolve_position(qubit, coin, n)
        for r in range(r_max + 1):
            finite = moment_position(field, r) / float(n) ** r
            rows.append(ConvergenceRow(n, r, finite, limits[r], abs(finite - limits[r])))
    return rows

"""Seeded random generators for coins, qubits, and directions.

Used by the verification suite and the tests; every draw goes through a
caller-supplied ``numpy.random.Generator`` so runs are reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from .coin import CayleyKlein, Qubit, SpecialCoin, UnitaryCoin, from_cayley_klein

__all__ = [
    "random_cayley_klein",
    "random_special_coin",
    "random_unitary_coin",
    "random_qubit",
    "random_direction",
]


def random_cayley_klein(
    rng: np.random.Generator, u_low: float = 0.05, u_high: float = 0.95
) -> CayleyKlein:
    """Coin parameters with ``u`` kept away from the degenerate endpoints."""
    return CayleyKlein(
        rng.uniform(u_low, u_high),
        rng.uniform(-math.pi, math.pi),
        rng.uniform(-math.pi, math.pi),
    )


def random_special_coin(
    rng: np.random.Generator, u_low: float = 0.05, u_high: float = 0.95
) -> SpecialCoin:
    return from_cayley_klein(random_cayley_klein(rng, u_low, u_high))


def random_unitary_coin(rng: np.random.Generator) -> UnitaryCoin:
    """A determinant-1 coin times a phase drawn inside the principal branch."""
    special = random_special_coin(rng)
    phase = rng.uniform(-math.pi / 2, math.pi / 2)
    return special.to_unitary().scaled_by_phase(phase)


def random_qubit(rng: np.random.Generator) -> Qubit:
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    z /= np.linalg.norm(z)
    return Qubit(complex(z[0]), complex(z[1]))


def random_direction(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)

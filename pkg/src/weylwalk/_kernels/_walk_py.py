"""NumPy reference implementation of the walk time-stepping kernels.

These are the hot loops of the library: the per-step update is vectorized,
but the steps themselves are inherently sequential.  The Cython twin in
``_walk_cy.pyx`` implements the same contracts; either backend may be
selected at import time (see ``weylwalk._kernels``).
"""

from __future__ import annotations

import numpy as np

__all__ = ["position_evolve", "kspace_evolve"]


def position_evolve(
    a: complex,
    b: complex,
    c: complex,
    d: complex,
    alpha: complex,
    beta: complex,
    n: int,
) -> np.ndarray:
    """Evolve a walker localized at the origin for ``n`` steps.

    Returns a (2, 2n+1) complex array of component amplitudes over the
    lattice window [-n, n]; row 0 is the left-moving component.
    """
    size = 2 * n + 1
    cur = np.zeros((2, size), dtype=np.complex128)
    cur[0, n] = alpha
    cur[1, n] = beta
    if n == 0:
        return cur
    nxt = np.empty_like(cur)
    for _ in range(n):
        nxt[0, :-1] = a * cur[0, 1:] + b * cur[1, 1:]
        nxt[0, -1] = 0.0
        nxt[1, 1:] = c * cur[0, :-1] + d * cur[1, :-1]
        nxt[1, 0] = 0.0
        cur, nxt = nxt, cur
    return cur


def kspace_evolve(
    a: complex,
    b: complex,
    c: complex,
    d: complex,
    alpha: complex,
    beta: complex,
    n: int,
    k: np.ndarray,
) -> np.ndarray:
    """Apply the single-step wave-number transfer matrix ``n`` times.

    ``k`` is a 1-D array of wave numbers; the result has shape (2, len(k)).
    """
    k = np.asarray(k, dtype=np.float64)
    eik = np.exp(1j * k)
    emk = eik.conj()
    v1 = np.full(k.shape, complex(alpha), dtype=np.complex128)
    v2 = np.full(k.shape, complex(beta), dtype=np.complex128)
    for _ in range(n):
        w1 = eik * (a * v1 + b * v2)
        w2 = emk * (c * v1 + d * v2)
        v1, v2 = w1, w2
    return np.stack([v1, v2])

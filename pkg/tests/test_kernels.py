"""Backend equivalence: the compiled kernels must match the NumPy reference."""

import numpy as np
import pytest

from weylwalk._kernels import BACKEND, _walk_py, available_backends
from weylwalk.sampling import random_qubit, random_special_coin

cython_kernels = pytest.importorskip(
    "weylwalk._kernels._walk_cy", reason="compiled extension not built"
)


def random_case(rng):
    coin = random_special_coin(rng)
    qubit = random_qubit(rng)
    return (
        complex(coin.a),
        complex(coin.b),
        complex(coin.c),
        complex(coin.d),
        complex(qubit.alpha),
        complex(qubit.beta),
    )


class TestBackendEquivalence:
    @pytest.mark.parametrize("n", [0, 1, 2, 7, 64, 301])
    def test_position_evolve(self, n):
        rng = np.random.default_rng(1000 + n)
        for _ in range(3):
            args = random_case(rng)
            ref = _walk_py.position_evolve(*args, n)
            fast = cython_kernels.position_evolve(*args, n)
            assert ref.shape == fast.shape == (2, 2 * n + 1)
            assert np.max(np.abs(ref - fast)) < 1e-13

    @pytest.mark.parametrize("n", [0, 1, 13, 200])
    def test_kspace_evolve(self, n):
        rng = np.random.default_rng(2000 + n)
        k = -np.pi + 2 * np.pi * np.arange(64) / 64
        for _ in range(3):
            args = random_case(rng)
            ref = _walk_py.kspace_evolve(*args, n, k)
            fast = cython_kernels.kspace_evolve(*args, n, k)
            assert np.max(np.abs(ref - fast)) < 1e-12 * max(1, n)

    def test_backend_selection_reports_cython(self):
        assert BACKEND in available_backends()
        assert "cython" in available_backends()

"""Tests for coin construction, phase stripping, and reparameterization."""

import cmath
import math

import numpy as np
import pytest

from weylwalk.coin import (
    CayleyKlein,
    Qubit,
    SpecialCoin,
    UnitaryCoin,
    from_cayley_klein,
    parse_coin,
    preset_coin,
    strip_phase,
    to_cayley_klein,
)
from weylwalk.errors import NonUnitaryError, UnknownPresetError
from weylwalk.sampling import random_cayley_klein, random_unitary_coin

SQRT1_2 = 1.0 / math.sqrt(2.0)


class TestTypes:
    def test_unitary_coin_accepts_hadamard(self):
        coin = UnitaryCoin(SQRT1_2, SQRT1_2, SQRT1_2, -SQRT1_2)
        assert abs(coin.determinant() + 1.0) < 1e-15

    def test_unitary_coin_rejects_nonunitary(self):
        with pytest.raises(NonUnitaryError):
            UnitaryCoin(1.0, 0.0, 0.0, 0.5)

    def test_special_coin_determinant_exact(self):
        coin = SpecialCoin(0.6, 0.8j)
        assert coin.determinant() == 1.0
        assert coin.c == -(-0.8j)
        assert coin.d == 0.6

    def test_special_coin_rejects_bad_norm(self):
        with pytest.raises(NonUnitaryError):
            SpecialCoin(0.6, 0.7)

    def test_cayley_klein_wraps_angles(self):
        ck = CayleyKlein(0.5, math.pi, 3 * math.pi)
        assert ck.theta == pytest.approx(-math.pi)
        assert ck.phi == pytest.approx(-math.pi)

    def test_cayley_klein_rejects_bad_u(self):
        with pytest.raises(ValueError):
            CayleyKlein(1.5, 0.0, 0.0)

    def test_qubit_norm_enforced(self):
        Qubit(SQRT1_2, 1j * SQRT1_2)
        with pytest.raises(NonUnitaryError):
            Qubit(1.0, 0.1)


class TestStripPhase:
    def test_hadamard_phase_and_coin(self):
        stripped, phase = strip_phase(preset_coin("hadamard"))
        assert phase == pytest.approx(-math.pi / 2, abs=1e-15)
        expected = 1j * SQRT1_2
        assert abs(stripped.a - expected) < 1e-15
        assert abs(stripped.b - expected) < 1e-15
        assert abs(stripped.c - expected) < 1e-15
        assert abs(stripped.d - (-expected)) < 1e-15

    def test_identity_already_special(self):
        stripped, phase = strip_phase(preset_coin("identity"))
        assert phase == 0.0
        assert stripped.a == 1.0 and stripped.b == 0.0

    def test_roundtrip_on_random_u2(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            coin = random_unitary_coin(rng)
            stripped, phase = strip_phase(coin)
            assert -math.pi / 2 <= phase < math.pi / 2
            assert abs(stripped.determinant() - 1.0) < 1e-14
            rebuilt = cmath.exp(1j * phase) * stripped.matrix()
            assert np.max(np.abs(rebuilt - coin.matrix())) < 1e-12


class TestCayleyKleinMaps:
    def test_stripped_hadamard_coordinates(self):
        stripped, _ = strip_phase(preset_coin("hadamard"))
        ck = to_cayley_klein(stripped)
        assert ck.u == pytest.approx(SQRT1_2, abs=1e-15)
        assert ck.theta == pytest.approx(math.pi / 2, abs=1e-15)
        assert ck.phi == pytest.approx(math.pi / 2, abs=1e-15)

    def test_degenerate_angles_pinned(self):
        ck = to_cayley_klein(SpecialCoin(1.0, 0.0))
        assert (ck.u, ck.theta, ck.phi) == (1.0, 0.0, 0.0)
        ck = to_cayley_klein(SpecialCoin(0.0, 1.0))
        assert (ck.u, ck.theta, ck.phi) == (0.0, 0.0, 0.0)

    def test_from_cayley_klein_hadamard(self):
        coin = from_cayley_klein(CayleyKlein(SQRT1_2, math.pi / 2, math.pi / 2))
        assert abs(coin.a - 1j * SQRT1_2) < 1e-15
        assert abs(coin.b - 1j * SQRT1_2) < 1e-15

    def test_from_cayley_klein_identity_any_phi(self):
        for phi in (0.0, 1.0, -2.5):
            coin = from_cayley_klein(CayleyKlein(1.0, 0.0, phi))
            assert coin.a == 1.0 and coin.b == 0.0

    def test_specific_roundtrip(self):
        ck = CayleyKlein(0.3, 0.7, -1.1)
        back = to_cayley_klein(from_cayley_klein(ck))
        assert abs(back.u - ck.u) < 1e-14
        assert abs(back.theta - ck.theta) < 1e-14
        assert abs(back.phi - ck.phi) < 1e-14

    def test_random_roundtrips(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            ck = random_cayley_klein(rng, u_low=0.01, u_high=0.99)
            back = to_cayley_klein(from_cayley_klein(ck))
            assert abs(back.u - ck.u) < 1e-12
            assert abs(back.theta - ck.theta) < 1e-12
            assert abs(back.phi - ck.phi) < 1e-12


class TestPresetsAndParsing:
    def test_presets(self):
        H = preset_coin("hadamard").matrix()
        assert np.allclose(H, np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=1e-15)
        assert np.array_equal(preset_coin("identity").matrix(), np.eye(2))
        assert np.array_equal(
            preset_coin("antidiagonal").matrix(), np.array([[0, 1], [-1, 0]])
        )

    def test_unknown_preset(self):
        with pytest.raises(UnknownPresetError):
            preset_coin("grover")

    def test_parse_preset(self):
        assert parse_coin("hadamard").a == pytest.approx(SQRT1_2)

    def test_parse_pair(self):
        coin = parse_coin("0.6,0,0,0.8")
        assert coin.a == 0.6 and coin.b == 0.8j
        assert coin.c == 0.8j and coin.d == 0.6

    def test_parse_triple(self):
        coin = parse_coin("1,0,0")
        assert coin.a == 1.0 and coin.b == 0.0

    def test_parse_garbage(self):
        with pytest.raises(UnknownPresetError):
            parse_coin("not,a,coin,really,no")
        with pytest.raises(UnknownPresetError):
            parse_coin("bogus")

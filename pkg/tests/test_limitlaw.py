"""Tests for the limit density, its moments, and finite-step convergence."""

import math

import mpmath as mp
import numpy as np
import pytest

from weylwalk.coin import Qubit, SpecialCoin, preset_coin, strip_phase, to_cayley_klein
from weylwalk.errors import DegenerateCoinError, OutOfSupportError
from weylwalk.limitlaw import (
    KonnoLaw,
    asymmetry_factor,
    convergence_report,
    konno_mu,
    konno_nu,
    limit_moment,
    limit_moment_k,
)
from weylwalk.sampling import random_cayley_klein, random_qubit, random_special_coin
from weylwalk.coin import from_cayley_klein

SQRT1_2 = 1.0 / math.sqrt(2.0)
HADAMARD = preset_coin("hadamard")
STRIPPED, _ = strip_phase(HADAMARD)
CK = to_cayley_klein(STRIPPED)
SYMMETRIC_QUBIT = Qubit(SQRT1_2, 1j * SQRT1_2)


def mp_weight_moment(u: float, r: int) -> float:
    """Independent oracle: adaptive quadrature of the singular y-integral."""
    mp.mp.dps = 25
    uu = mp.mpf(u)

    def integrand(y):
        return y**r * mp.sqrt(1 - uu**2) / (mp.pi * (1 - y**2) * mp.sqrt(uu**2 - y**2))

    return float(mp.quad(integrand, [-uu, 0, uu]))


class TestWeight:
    def test_center_value(self):
        assert konno_mu(0.0, SQRT1_2) == pytest.approx(1.0 / math.pi, abs=1e-14)

    def test_even(self):
        y = np.linspace(0.0, 0.65, 50)
        np.testing.assert_allclose(konno_mu(y, SQRT1_2), konno_mu(-y, SQRT1_2))

    def test_diverges_at_edges(self):
        u = SQRT1_2
        vals = [konno_mu(u - 10.0**-e, u) for e in (2, 4, 6, 8)]
        assert all(b > 5 * a for a, b in zip(vals, vals[1:]))

    def test_out_of_support(self):
        with pytest.raises(OutOfSupportError):
            konno_mu(0.8, SQRT1_2)
        with pytest.raises(OutOfSupportError):
            konno_mu(SQRT1_2, SQRT1_2)

    def test_degenerate_u(self):
        with pytest.raises(DegenerateCoinError):
            konno_mu(0.0, 1.0)


class TestAsymmetry:
    def test_plain_qubit_gives_one(self):
        assert asymmetry_factor(Qubit(1, 0), STRIPPED) == pytest.approx(1.0, abs=1e-14)

    def test_symmetric_qubit_gives_zero(self):
        assert asymmetry_factor(SYMMETRIC_QUBIT, STRIPPED) == pytest.approx(
            0.0, abs=1e-14
        )

    def test_down_qubit_gives_minus_one(self):
        assert asymmetry_factor(Qubit(0, 1), STRIPPED) == pytest.approx(-1.0, abs=1e-14)

    def test_real_for_random_inputs(self):
        rng = np.random.default_rng(50)
        for _ in range(100):
            c = asymmetry_factor(random_qubit(rng), random_special_coin(rng))
            assert isinstance(c, float)

    def test_degenerate_coins_rejected(self):
        with pytest.raises(DegenerateCoinError):
            asymmetry_factor(Qubit(1, 0), SpecialCoin(1.0, 0.0))
        with pytest.raises(DegenerateCoinError):
            asymmetry_factor(Qubit(1, 0), SpecialCoin(0.0, 1.0))


class TestDensity:
    def test_zero_outside_support(self):
        law = KonnoLaw(SQRT1_2, 1.0)
        assert konno_nu(0.9, law) == 0.0
        assert konno_nu(-SQRT1_2, law) == 0.0

    def test_symmetric_case_reduces_to_weight(self):
        law = KonnoLaw(SQRT1_2, 0.0)
        y = np.linspace(-0.7, 0.7, 101)
        inside = np.abs(y) < law.u
        np.testing.assert_allclose(
            konno_nu(y[inside], law), konno_mu(y[inside], law.u)
        )

    def test_normalization_against_mp_oracle(self):
        rng = np.random.default_rng(51)
        for _ in range(5):
            law = KonnoLaw.from_state(random_qubit(rng), random_special_coin(rng))
            mp.mp.dps = 25
            uu = mp.mpf(law.u)
            c = mp.mpf(law.c_asym)

            def nu(y):
                w = mp.sqrt(1 - uu**2) / (mp.pi * (1 - y**2) * mp.sqrt(uu**2 - y**2))
                return w * (1 - c * y)

            total = float(mp.quad(nu, [-uu, 0, uu]))
            assert total == pytest.approx(1.0, abs=1e-8)

    def test_nonnegative_on_support(self):
        rng = np.random.default_rng(52)
        for _ in range(20):
            law = KonnoLaw.from_state(random_qubit(rng), random_special_coin(rng))
            y = np.linspace(-law.u, law.u, 4001)[1:-1]
            assert np.min(konno_nu(y, law)) > -1e-12

    def test_law_rejects_degenerate_u(self):
        with pytest.raises(DegenerateCoinError):
            KonnoLaw(1.0, 0.0)
        with pytest.raises(DegenerateCoinError):
            KonnoLaw(0.0, 0.0)


class TestLimitMoments:
    def test_zeroth_is_one(self):
        law = KonnoLaw(SQRT1_2, 1.0)
        assert limit_moment(0, law) == pytest.approx(1.0, abs=1e-10)

    def test_odd_vanish_when_symmetric(self):
        law = KonnoLaw(0.42, 0.0)
        for r in (1, 3, 5, 7):
            assert limit_moment(r, law) == 0.0

    def test_second_moment_hadamard(self):
        # oracle value: adaptive y-quadrature of the singular integrand,
        # frozen below; equals 1 - 1/sqrt(2)
        oracle = mp_weight_moment(SQRT1_2, 2)
        assert oracle == pytest.approx(1.0 - SQRT1_2, abs=1e-12)
        law = KonnoLaw(SQRT1_2, 1.0)
        assert limit_moment(2, law) == pytest.approx(0.29289321881345247, abs=1e-8)

    def test_fourth_moment_hadamard(self):
        law = KonnoLaw(SQRT1_2, 0.3)
        assert limit_moment(4, law) == pytest.approx(0.11611652351681559, abs=1e-8)

    def test_second_moment_closed_form_random_u(self):
        rng = np.random.default_rng(53)
        for _ in range(10):
            u = rng.uniform(0.1, 0.9)
            law = KonnoLaw(u, 0.0)
            assert limit_moment(2, law) == pytest.approx(
                1.0 - math.sqrt(1.0 - u * u), abs=1e-8
            )

    def test_odd_moment_is_tilted_even_moment(self):
        law = KonnoLaw(0.6, 0.7)
        assert limit_moment(1, law) == pytest.approx(
            -0.7 * limit_moment(2, KonnoLaw(0.6, 0.0)), abs=1e-12
        )


class TestWavenumberRoute:
    def test_zeroth_is_one(self):
        assert limit_moment_k(0, Qubit(1, 0), CK) == pytest.approx(1.0, abs=1e-10)

    def test_hadamard_first_moment(self):
        got = limit_moment_k(1, Qubit(1, 0), CK)
        assert got == pytest.approx(-(1.0 - SQRT1_2), abs=1e-7)

    def test_agrees_with_density_route(self):
        rng = np.random.default_rng(54)
        for _ in range(20):
            ck = random_cayley_klein(rng)
            coin = from_cayley_klein(ck)
            qubit = random_qubit(rng)
            law = KonnoLaw.from_state(qubit, coin)
            for r in range(7):
                assert limit_moment_k(r, qubit, ck) == pytest.approx(
                    limit_moment(r, law), abs=1e-8
                )

    def test_agrees_with_mp_oracle(self):
        rng = np.random.default_rng(55)
        ck = random_cayley_klein(rng)
        qubit = random_qubit(rng)
        coin = from_cayley_klein(ck)
        c = asymmetry_factor(qubit, coin)
        for r in (2, 4):
            assert limit_moment_k(r, qubit, ck) == pytest.approx(
                mp_weight_moment(ck.u, r), abs=1e-8
            )
        assert limit_moment_k(1, qubit, ck) == pytest.approx(
            -c * mp_weight_moment(ck.u, 2), abs=1e-8
        )


class TestPhaseInvariance:
    def test_law_unchanged_by_global_phase(self):
        rng = np.random.default_rng(56)
        for _ in range(10):
            base = random_special_coin(rng)
            qubit = random_qubit(rng)
            phase = rng.uniform(-math.pi / 2, math.pi / 2)
            shifted, _ = strip_phase(base.to_unitary().scaled_by_phase(phase))
            law0 = KonnoLaw.from_state(qubit, base)
            law1 = KonnoLaw.from_state(qubit, shifted)
            assert abs(law0.u - law1.u) < 1e-12
            assert abs(law0.c_asym - law1.c_asym) < 1e-12


class TestConvergenceReport:
    def test_zeroth_order_gap_is_zero(self):
        rows = convergence_report(HADAMARD, Qubit(1, 0), 0, [50, 100])
        for row in rows:
            assert row.gap < 1e-10

    def test_gaps_shrink_with_slack(self):
        rows = convergence_report(HADAMARD, SYMMETRIC_QUBIT, 2, [100, 200, 400])
        by_r = {}
        for row in rows:
            by_r.setdefault(row.r, []).append(row.gap)
        for gaps in by_r.values():
            for earlier, later in zip(gaps, gaps[1:]):
                assert later <= 1.1 * earlier + 1e-12

    def test_symmetric_second_moment_converges(self):
        rows = convergence_report(HADAMARD, SYMMETRIC_QUBIT, 2, [400])
        row = next(r for r in rows if r.r == 2)
        assert row.limit == pytest.approx(1.0 - SQRT1_2, abs=1e-8)
        assert row.gap <= 0.01

    def test_first_moment_tracks_initial_qubit(self):
        rows = convergence_report(HADAMARD, Qubit(1, 0), 1, [100, 200, 400])
        finite = [r.finite for r in rows if r.r == 1]
        target = -(1.0 - SQRT1_2)
        gaps = [abs(f - target) for f in finite]
        assert gaps[-1] < gaps[0]
        assert gaps[-1] < 0.001

    def test_rejects_nonpositive_steps(self):
        with pytest.raises(ValueError):
            convergence_report(HADAMARD, Qubit(1, 0), 2, [0, 10])

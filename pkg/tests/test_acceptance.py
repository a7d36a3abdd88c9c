"""Acceptance suite: one test per release criterion, printed pass/fail.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.  Tolerances are fixed here and must not be loosened.
"""

import json
import math
import time
from fractions import Fraction

import mpmath as mp
import numpy as np

from weylwalk.cli import main as cli_main
from weylwalk.coin import (
    CayleyKlein,
    Qubit,
    from_cayley_klein,
    preset_coin,
    strip_phase,
    to_cayley_klein,
)
from weylwalk.limitlaw import KonnoLaw, limit_moment, limit_moment_k
from weylwalk.sampling import random_cayley_klein, random_qubit, random_special_coin
from weylwalk.spectral import coeff_weights, decompose_qubit, reconstruct_Uk
from weylwalk.walk import (
    ClassicalTurnParams,
    build_Uk,
    classical_evolve,
    distribution,
    evolve_kspace,
    evolve_position,
    heat_kernel,
    kspectrum_to_position,
    moment_position,
)
from weylwalk.weylmap import (
    gamma_of_k,
    integrate_over_orbit,
    jacobian,
    k_of_gamma,
    orbit_frame,
    q_hat_of_k,
    q_norm,
)

SQRT1_2 = 1.0 / math.sqrt(2.0)
HADAMARD = preset_coin("hadamard")


def report(num: int, name: str, err: float, tol: float, extra: str = "") -> None:
    status = "PASS" if err <= tol else "FAIL"
    suffix = f" {extra}" if extra else ""
    print(f"[criterion {num:02d}] {name}: {status} "
          f"(max_error={err:.3e}, tolerance={tol:.1e}){suffix}")
    assert err <= tol, f"criterion {num} ({name}): {err:.3e} > {tol:.1e}"


def k_grid(n):
    return -np.pi + 2 * np.pi * np.arange(n) / n


def test_criterion_01_exponential_map_identity():
    rng = np.random.default_rng(101)
    ks = k_grid(256)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        ck = random_cayley_klein(rng)
        coin = from_cayley_klein(ck)
        worst = max(worst, np.max(np.abs(build_Uk(coin, ks) - reconstruct_Uk(ck, ks))))
    elapsed = time.perf_counter() - start
    report(1, "exponential-map identity", worst, 1e-12, f"runtime={elapsed:.2f}s")
    assert elapsed < 1.0


def test_criterion_02_path_equivalence():
    rng = np.random.default_rng(102)
    start = time.perf_counter()
    worst = 0.0
    coins = [HADAMARD] + [random_special_coin(rng) for _ in range(10)]
    for coin in coins:
        qubit = random_qubit(rng)
        direct = evolve_position(qubit, coin, 64)
        via_k = kspectrum_to_position(evolve_kspace(qubit, coin, 64, 256), 64)
        worst = max(worst, np.max(np.abs(direct.amps - via_k.amps)))
    elapsed = time.perf_counter() - start
    report(2, "position/k-space path equivalence", worst, 1e-10, f"runtime={elapsed:.2f}s")
    assert elapsed < 1.0


def test_criterion_03_hadamard_two_step_distribution():
    dist = distribution(evolve_position(Qubit(1, 0), HADAMARD, 2))
    expected = {-2: 0.25, 0: 0.5, 2: 0.25}
    worst = max(abs(dist.probability(x) - p) for x, p in expected.items())
    report(3, "two-step Hadamard distribution", worst, 1e-14)


def test_criterion_04_orbit_planarity():
    rng = np.random.default_rng(104)
    ks = k_grid(1024)
    worst = 0.0
    for _ in range(20):
        ck = random_cayley_klein(rng)
        qvec = q_norm(ck, ks)[:, None] * q_hat_of_k(ck, ks)
        worst = max(worst, np.max(np.abs(qvec @ orbit_frame(ck).e3)))
    report(4, "orbit planarity", worst, 1e-12)


def test_criterion_05_orbit_equation():
    rng = np.random.default_rng(105)
    ks = k_grid(1024)
    worst_regular = 0.0
    worst_pole = 0.0
    for _ in range(20):
        ck = random_cayley_klein(rng)
        q = q_norm(ck, ks)
        g = gamma_of_k(ck, ks)
        w = math.sqrt(1 - ck.u**2)
        regular = np.abs(np.cos(g)) > 1e-3
        worst_regular = max(
            worst_regular,
            np.max(np.abs(np.tan(q[regular]) * np.cos(g[regular]) - w / ck.u)),
        )
        if np.any(~regular):
            worst_pole = max(worst_pole, np.max(np.abs(q[~regular] - math.pi / 2)))
    circle = np.max(np.abs(q_norm(CayleyKlein(0.0, 0.2, -0.7), ks) - math.pi / 2))
    report(5, "orbit equation (regular part)", worst_regular, 1e-9)
    report(5, "orbit equation (near poles)", worst_pole, 2e-3)
    report(5, "orbit equation (u=0 circle)", circle, 1e-12)


def test_criterion_06_jacobian_finite_difference():
    rng = np.random.default_rng(106)
    h = 1e-5
    g = -np.pi + 2 * np.pi * np.arange(1000) / 1000
    worst = 0.0
    for _ in range(20):
        ck = random_cayley_klein(rng)
        diff = k_of_gamma(ck, g + h) - k_of_gamma(ck, g - h)
        fd = np.abs(np.mod(diff + np.pi, 2 * np.pi) - np.pi) / (2 * h)
        worst = max(worst, np.max(np.abs(jacobian(ck, g) - fd)))
    report(6, "Jacobian vs finite difference", worst, 1e-8)


def test_criterion_07_change_of_variables():
    rng = np.random.default_rng(107)
    N = 4096
    ks = k_grid(N)
    worst = 0.0
    for _ in range(20):
        ck = random_cayley_klein(rng)
        cos_c = rng.normal(size=6)
        sin_c = rng.normal(size=6)

        def f(kk):
            out = np.full_like(np.asarray(kk, dtype=float), cos_c[0])
            for m in range(1, 6):
                out = out + cos_c[m] * np.cos(m * kk) + sin_c[m] * np.sin(m * kk)
            return out

        worst = max(worst, abs(integrate_over_orbit(ck, f, N) - math.fsum(f(ks)) / N))
    report(7, "orbit change of variables", worst, 1e-9)


def test_criterion_08_density_normalization():
    rng = np.random.default_rng(108)
    N = 4096
    g = -np.pi + 2 * np.pi * np.arange(N) / N
    worst = 0.0
    for _ in range(50):
        law = KonnoLaw.from_state(random_qubit(rng), random_special_coin(rng))
        ck = CayleyKlein(law.u, 0.0, 0.0)
        total = math.fsum(jacobian(ck, g) * (1.0 - law.c_asym * law.u * np.sin(g))) / N
        worst = max(worst, abs(total - 1.0))
    report(8, "limit-density normalization", worst, 1e-8)


def test_criterion_09_limit_moment_routes_agree():
    rng = np.random.default_rng(109)
    worst = 0.0
    for _ in range(20):
        ck = random_cayley_klein(rng)
        qubit = random_qubit(rng)
        law = KonnoLaw.from_state(qubit, from_cayley_klein(ck))
        for r in range(7):
            worst = max(worst, abs(limit_moment_k(r, qubit, ck) - limit_moment(r, law)))
    report(9, "wave-number vs density limit moments", worst, 1e-8)


def test_criterion_10_projection_vs_closed_form_weights():
    rng = np.random.default_rng(110)
    worst = 0.0
    for _ in range(1000):
        ck = random_cayley_klein(rng)
        qubit = random_qubit(rng)
        gamma = rng.uniform(-math.pi, math.pi)
        frame = orbit_frame(ck)
        p_hat = math.cos(gamma) * frame.e1 + math.sin(gamma) * frame.e2
        w = decompose_qubit(qubit, p_hat)
        plus, minus = coeff_weights(qubit, ck, gamma)
        worst = max(
            worst,
            abs(abs(w.c_plus) ** 2 - plus),
            abs(abs(w.c_minus) ** 2 - minus),
        )
    report(10, "projection vs closed-form weights", worst, 1e-12)


def test_criterion_11_weak_limit_reproduction():
    # independent oracle for the target value: adaptive quadrature of the
    # singular y-integral
    mp.mp.dps = 25
    u = 1 / mp.sqrt(2)
    target = float(
        mp.quad(
            lambda y: y**2
            * mp.sqrt(1 - u**2)
            / (mp.pi * (1 - y**2) * mp.sqrt(u**2 - y**2)),
            [-u, 0, u],
        )
    )
    assert abs(target - (1 - SQRT1_2)) < 1e-12

    start = time.perf_counter()
    n = 500
    sym = Qubit(SQRT1_2, 1j * SQRT1_2)
    field = evolve_position(sym, HADAMARD, n)
    worst = abs(moment_position(field, 2) / n**2 - target)
    odd_worst = max(abs(moment_position(field, r) / n**r) for r in (1, 3))

    plain = evolve_position(Qubit(1, 0), HADAMARD, n)
    first_gap = abs(moment_position(plain, 1) / n + target)
    elapsed = time.perf_counter() - start

    report(11, "weak limit (symmetric qubit, 2nd moment)", worst, 0.01)
    report(11, "weak limit (symmetric qubit, odd moments)", odd_worst, 0.01)
    report(11, "weak limit (plain qubit, 1st moment)", first_gap, 0.01,
           f"runtime={elapsed:.2f}s")
    assert elapsed < 10.0


def test_criterion_12_classical_baseline():
    n = 20
    dist, _ = classical_evolve(ClassicalTurnParams(Fraction(1, 2), Fraction(1, 5)), n)
    exact_err = Fraction(0)
    for x in range(-n, n + 1, 2):
        expected = Fraction(math.comb(n, (n + x) // 2), 2**n)
        exact_err = max(exact_err, abs(dist.probability(x) - expected))
    report(12, "classical binomial (exact rational)", float(exact_err), 0.0)

    m = 400
    dist, _ = classical_evolve(ClassicalTurnParams(0.5, 0.5), m)
    x = dist.sites()
    even = x % 2 == 0
    y = x[even] / math.sqrt(m)
    density = dist.probs[even] * math.sqrt(m) / 2.0
    gap = float(np.max(np.abs(density - heat_kernel(1.0, y))))
    report(12, "classical diffusive limit", gap, 0.01)


def test_criterion_13_global_phase_invariance():
    rng = np.random.default_rng(113)
    worst = 0.0
    ks = k_grid(256)
    for _ in range(10):
        base = random_special_coin(rng)
        qubit = random_qubit(rng)
        phase = rng.uniform(-math.pi / 2, math.pi / 2)
        shifted = base.to_unitary().scaled_by_phase(phase)

        d0 = distribution(evolve_position(qubit, base, 50))
        d1 = distribution(evolve_position(qubit, shifted, 50))
        worst = max(worst, np.max(np.abs(d0.probs - d1.probs)))

        ck0 = to_cayley_klein(base)
        ck1 = to_cayley_klein(strip_phase(shifted)[0])
        worst = max(worst, np.max(np.abs(q_norm(ck0, ks) - q_norm(ck1, ks))))
        worst = max(worst, np.max(np.abs(gamma_of_k(ck0, ks) - gamma_of_k(ck1, ks))))

        law0 = KonnoLaw.from_state(qubit, base)
        law1 = KonnoLaw.from_state(qubit, strip_phase(shifted)[0])
        for r in range(4):
            worst = max(worst, abs(limit_moment(r, law0) - limit_moment(r, law1)))
    report(13, "global-phase invariance", worst, 1e-12)


def test_criterion_14_verify_command(tmp_path):
    out = tmp_path / "report.json"
    start = time.perf_counter()
    rc = cli_main(["verify", "--out", str(out)])
    elapsed = time.perf_counter() - start
    payload = json.loads(out.read_text())
    err = 0.0 if (rc == 0 and payload["pass"]) else 1.0
    report(14, "verify command", err, 0.0, f"runtime={elapsed:.2f}s, exit={rc}")
    assert elapsed < 60.0

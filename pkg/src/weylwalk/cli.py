"""Command-line front end.

Subcommands::

    walk      evolve the walk (or its classical counterpart) and emit the
              site distribution
    orbit     tabulate the momentum-space orbit over a wave-number grid
    limit     evaluate the limit density and its moments
    converge  compare finite-step moments against their limits
    verify    run the full invariant suite and report pass/fail

Outputs are CSV (floats printed with 17 significant digits, so values
round-trip exactly) or JSON via ``--format``.  Exit codes: 0 success,
1 verification/invariant failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from contextlib import nullcontext

import numpy as np

from .coin import Qubit, UnitaryCoin, parse_coin, strip_phase, to_cayley_klein
from .errors import WeylWalkError
from .limitlaw import KonnoLaw, convergence_report, konno_mu, konno_nu, limit_moment
from .verify import DEFAULT_SEED, run_all
from .walk import (
    ClassicalTurnParams,
    classical_evolve,
    distribution,
    evolve_position,
)
from .weylmap import gamma_of_k, jacobian, q_hat_of_k, q_norm

__all__ = ["main", "build_parser"]

GRID_ENV_VAR = "WEYLWALK_GRID"


class _UsageError(Exception):
    """Bad configuration; maps to exit code 2."""


# --------------------------------------------------------------------------- #
#                            parsing and formatting                           #
# --------------------------------------------------------------------------- #


def _parse_coin_arg(text: str) -> UnitaryCoin:
    try:
        return parse_coin(text)
    except WeylWalkError as exc:
        raise _UsageError(f"bad --coin value: {exc}") from exc


def _parse_qubit_arg(text: str) -> Qubit:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise _UsageError(f"bad --qubit value {text!r}: expected four reals") from exc
    if len(parts) != 4:
        raise _UsageError("--qubit needs four fields: a_re,a_im,b_re,b_im")
    alpha = complex(parts[0], parts[1])
    beta = complex(parts[2], parts[3])
    norm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
    err = abs(norm - 1.0)
    if err > 1e-6:
        raise _UsageError(f"--qubit norm deviates from 1 by {err:.2e} (limit 1e-6)")
    if err > 1e-9:
        print(
            f"warning: qubit renormalized (norm off by {err:.2e})", file=sys.stderr
        )
    return Qubit(alpha / norm, beta / norm)


def _resolve_grid(value, fallback: int) -> int:
    if value is not None:
        grid = value
    else:
        env = os.environ.get(GRID_ENV_VAR, "").strip()
        if env:
            try:
                grid = int(env)
            except ValueError as exc:
                raise _UsageError(f"{GRID_ENV_VAR}={env!r} is not an integer") from exc
        else:
            grid = fallback
    if grid < 2:
        raise _UsageError(f"grid must be at least 2, got {grid}")
    return grid


def _orbit_params(coin: UnitaryCoin):
    stripped, _ = strip_phase(coin)
    ck = to_cayley_klein(stripped)
    if ck.u >= 1.0:
        raise _UsageError("a diagonal coin (u = 1) has no orbit; pick u < 1")
    return ck


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _out_stream(path):
    if path in (None, "-"):
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _emit_table(path, fmt: str, columns: list[str], rows) -> None:
    with _out_stream(path) as fh:
        if fmt == "json":
            records = [
                {c: float(v) for c, v in zip(columns, row)} for row in rows
            ]
            json.dump(records, fh, indent=2)
            fh.write("\n")
        else:
            fh.write(",".join(columns) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")


# --------------------------------------------------------------------------- #
#                                  commands                                   #
# --------------------------------------------------------------------------- #


def cmd_walk(args) -> int:
    n = args.steps
    if n < 0:
        raise _UsageError("--steps must be non-negative")
    if args.classical:
        if not 0.0 <= args.p_turn <= 1.0 or not 0.0 <= args.q_left <= 1.0:
            raise _UsageError("--p-turn and --q-left must lie in [0, 1]")
        dist, _ = classical_evolve(ClassicalTurnParams(args.p_turn, args.q_left), n)
        field = None
    else:
        coin = _parse_coin_arg(args.coin)
        qubit = _parse_qubit_arg(args.qubit)
        field = evolve_position(qubit, coin, n)
        dist = distribution(field)

    sites = dist.sites()
    keep = (np.asarray(sites) - n) % 2 == 0
    rows = [(int(x), float(p)) for x, p in zip(sites[keep], np.asarray(dist.probs)[keep])]
    _emit_table(args.out, args.format, ["x", "prob"], rows)

    if args.field_out is not None:
        if field is None:
            raise _UsageError("--field-out requires a quantum walk (drop --classical)")
        frows = [
            (int(x), a1.real, a1.imag, a2.real, a2.imag)
            for x, a1, a2 in zip(field.sites()[keep], field.amps[0][keep], field.amps[1][keep])
        ]
        _emit_table(args.field_out, args.format, ["x", "re1", "im1", "re2", "im2"], frows)
    return 0


def cmd_orbit(args) -> int:
    ck = _orbit_params(_parse_coin_arg(args.coin))
    N = _resolve_grid(args.grid, 360)
    k = -np.pi + 2.0 * np.pi * np.arange(N) / N
    gamma = gamma_of_k(ck, k)
    q = q_norm(ck, k)
    qvec = q[:, None] * q_hat_of_k(ck, k)
    jac = jacobian(ck, gamma)
    rows = zip(k, gamma, q, qvec[:, 0], qvec[:, 1], qvec[:, 2], jac)
    _emit_table(args.out, args.format, ["k", "gamma", "q", "qx", "qy", "qz", "jacobian"], rows)
    return 0


def _limit_law(args):
    coin = _parse_coin_arg(args.coin)
    qubit = _parse_qubit_arg(args.qubit)
    ck = _orbit_params(coin)
    if ck.u <= 0.0:
        raise _UsageError("the limit law needs u strictly inside (0, 1)")
    stripped, _ = strip_phase(coin)
    try:
        law = KonnoLaw.from_state(qubit, stripped)
    except WeylWalkError as exc:
        raise _UsageError(str(exc)) from exc
    return qubit, law


def cmd_limit(args) -> int:
    _, law = _limit_law(args)
    M = _resolve_grid(args.grid, 401)
    i = np.arange(M)
    y = -law.u + (i + 1) * (2.0 * law.u / (M + 1))
    rows = zip(y, konno_mu(y, law.u), konno_nu(y, law))
    moments = {f"m{r}": limit_moment(r, law) for r in range(args.r_max + 1)}
    payload = {"u": law.u, "c_asym": law.c_asym, "moments": moments}

    if args.format == "json":
        with _out_stream(args.out) as fh:
            payload["density"] = [
                {"y": float(a), "mu": float(b), "nu": float(c)} for a, b, c in rows
            ]
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        _emit_table(args.out, "csv", ["y", "mu", "nu"], rows)
        with _out_stream(args.moments_out) as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_converge(args) -> int:
    coin = _parse_coin_arg(args.coin)
    qubit = _parse_qubit_arg(args.qubit)
    _orbit_params(coin)
    try:
        steps = sorted(int(s) for s in args.steps.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad --steps list {args.steps!r}") from exc
    if not steps or steps[0] <= 0:
        raise _UsageError("--steps must be positive integers")
    N = _resolve_grid(args.grid, 4096)
    try:
        rows = convergence_report(coin, qubit, args.r_max, steps, N)
    except WeylWalkError as exc:
        raise _UsageError(str(exc)) from exc
    table = [(row.n, row.r, row.finite, row.limit, row.gap) for row in rows]
    _emit_table(args.out, args.format, ["n", "r", "finite", "limit", "gap"], table)
    return 0


def cmd_verify(args) -> int:
    report = run_all(args.seed)
    with _out_stream(args.out) as fh:
        json.dump(report.as_dict(), fh, indent=2)
        fh.write("\n")
    return 0 if report.passed else 1


# --------------------------------------------------------------------------- #
#                                   parser                                    #
# --------------------------------------------------------------------------- #


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylwalk",
        description="Quantum-walk simulation, momentum-space orbits, and limit-law checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, coin=True, qubit=True):
        if coin:
            p.add_argument(
                "--coin",
                default="hadamard",
                help="preset name, 'a_re,a_im,b_re,b_im', or 'u,theta,phi'",
            )
        if qubit:
            p.add_argument(
                "--qubit",
                default="1,0,0,0",
                help="initial state as 'a_re,a_im,b_re,b_im'",
            )
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p_walk = sub.add_parser("walk", help="evolve the walk and emit the distribution")
    add_common(p_walk)
    p_walk.add_argument("--steps", type=int, default=100)
    p_walk.add_argument("--classical", action="store_true", help="run the random-turn chain")
    p_walk.add_argument("--p-turn", type=float, default=0.5, help="classical turn probability")
    p_walk.add_argument("--q-left", type=float, default=0.5, help="classical initial left weight")
    p_walk.add_argument("--field-out", default=None, help="also write the raw amplitudes here")
    p_walk.set_defaults(func=cmd_walk)

    p_orbit = sub.add_parser("orbit", help="tabulate the momentum-space orbit")
    add_common(p_orbit, qubit=False)
    p_orbit.add_argument("--grid", type=int, default=None, help=f"k samples (default 360; ${GRID_ENV_VAR})")
    p_orbit.set_defaults(func=cmd_orbit)

    p_limit = sub.add_parser("limit", help="limit density and moments")
    add_common(p_limit)
    p_limit.add_argument("--grid", type=int, default=None, help=f"y samples (default 401; ${GRID_ENV_VAR})")
    p_limit.add_argument("--r-max", type=int, default=4, help="highest moment in the JSON block")
    p_limit.add_argument("--moments-out", default=None, help="moment JSON path (default stdout)")
    p_limit.set_defaults(func=cmd_limit)

    p_conv = sub.add_parser("converge", help="finite-step moments vs limits")
    add_common(p_conv)
    p_conv.add_argument("--steps", default="100,200,400", help="comma-separated step counts")
    p_conv.add_argument("--r-max", type=int, default=2)
    p_conv.add_argument("--grid", type=int, default=None, help=f"quadrature points (default 4096; ${GRID_ENV_VAR})")
    p_conv.set_defaults(func=cmd_converge)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except (WeylWalkError, AssertionError, ValueError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: sum, zeta, check, coeff, mollify, casimir, table.  Global
flags --format {text|json|csv} and --quiet.  The quadrature tolerance is
read from DIVSUM_QUAD_TOL (default 1e-10).

Exit status: 0 success, 1 internal-consistency failure (a cross-check that
can only fail on a library bug), 2 usage or precondition error.  All
floats print with 12 significant digits and rationals as "p/q", so output
is byte-stable for golden tests.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .casimir import CavityConfig, casimir_force, ground_state_energy
from .distributions import (
    all_plus_series_action,
    alternating_series_action,
    dirichlet_comb_ladder,
    fourier_coefficient_numeric,
    jump_average,
    mollified_limit,
)
from .errors import ConsistencyError
from .extrapolation import EpsilonLimit
from .sums import (
    alternating_sum_powers,
    functional_equation_residual,
    sum_powers,
    zeta_negative_oracle,
)

CHECK_TOLERANCE = 1e-8
COEFF_TOLERANCE = 1e-6

_JUMP_FUNCTIONS = {
    "heaviside": lambda t: np.where(np.asarray(t) > 0, 1.0, 0.0),
    "sign": lambda t: np.sign(np.asarray(t)),
    "cos": np.cos,
}

_MOLLIFY_TARGETS = ("S", "H2S", "T0", "dirichlet") + tuple(
    f"jump:{name}" for name in _JUMP_FUNCTIONS
)


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _round12(obj):
    """Normalize floats to 12 significant digits for stable JSON output."""
    if isinstance(obj, float):
        return float(fmt_float(obj)) if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit_json(obj) -> None:
    print(json.dumps(_round12(obj)))


def _emit_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _ladder_csv_rows(limit: EpsilonLimit):
    return [
        [fmt_float(p), fmt_float(v.real), fmt_float(v.imag)]
        for p, v in limit.samples
    ]


def _print_ladder_text(limit: EpsilonLimit, quiet: bool) -> None:
    if quiet:
        return
    for p, v in limit.samples:
        print(f"  {fmt_float(p)}  {fmt_float(v.real)}  {fmt_float(v.imag)}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_sum(args) -> int:
    if not 1 <= args.k <= 200:
        raise ValueError("k must satisfy 1 <= k <= 200")
    result = alternating_sum_powers(args.k) if args.alternating else sum_powers(args.k)
    if args.format == "json":
        _emit_json(result.to_json_obj())
    elif args.format == "csv":
        _emit_csv(
            ["k", "kind", "value", "method"],
            [[result.k, result.kind.value, str(result.value), result.method.value]],
        )
    else:
        print(result.value)
    return 0


def cmd_zeta(args) -> int:
    if args.neg_k < 1:
        raise ValueError("--neg-k must be >= 1")
    value = zeta_negative_oracle(args.neg_k)
    if args.format == "json":
        _emit_json({"neg_k": args.neg_k, "value": str(value)})
    elif args.format == "csv":
        _emit_csv(["neg_k", "value"], [[args.neg_k, str(value)]])
    else:
        print(value)
    return 0


def cmd_check(args) -> int:
    if args.k < 1:
        raise ValueError("k must be >= 1")
    if args.terms < 10:
        raise ValueError("--terms must be >= 10")
    residual = functional_equation_residual(args.k, args.terms)
    passed = residual < CHECK_TOLERANCE
    status = "pass" if passed else "fail"
    if args.format == "json":
        _emit_json(
            {
                "k": args.k,
                "terms": args.terms,
                "residual": residual,
                "tolerance": CHECK_TOLERANCE,
                "status": status,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["k", "terms", "residual", "status"],
            [[args.k, args.terms, fmt_float(residual), status]],
        )
    else:
        if not args.quiet:
            print(f"residual {fmt_float(residual)}")
        print(status)
    return 0 if passed else 1


def cmd_coeff(args) -> int:
    if abs(args.n) > 32:
        raise ValueError("|n| must be <= 32")
    if args.levels < 3:
        raise ValueError("--levels must be >= 3")
    limit = fourier_coefficient_numeric(args.n, levels=args.levels)
    expected = float((-1) ** (args.n - 1) * args.n) if args.n >= 1 else 0.0
    passed = (
        limit.converged
        and limit.extrapolated is not None
        and abs(limit.extrapolated - expected) <= COEFF_TOLERANCE
    )
    status = "pass" if passed else "fail"
    if args.format == "json":
        obj = limit.to_json_obj()
        obj.update({"n": args.n, "expected": expected, "status": status})
        _emit_json(obj)
    elif args.format == "csv":
        _emit_csv(["parameter", "value_re", "value_im"], _ladder_csv_rows(limit))
    else:
        _print_ladder_text(limit, args.quiet)
        ex = limit.extrapolated if limit.extrapolated is not None else float("nan")
        print(f"extrapolant {fmt_float(ex.real)} {fmt_float(ex.imag)}")
        print(f"expected {fmt_float(expected)}")
        print(status)
    return 0 if passed else 1


def _mollify_limit(args) -> EpsilonLimit:
    target = args.target
    p = args.p
    if target == "T0" and p < 2:
        raise ValueError("target T0 requires vanishing order p >= 2")
    if target == "dirichlet" and p != 0:
        raise ValueError("target dirichlet requires p = 0")
    levels = args.levels
    if target == "S":
        return mollified_limit(alternating_series_action, p, levels)
    if target == "H2S":
        return mollified_limit(
            lambda tf: 0.5 * alternating_series_action(tf.dilated(0.5)), p, levels
        )
    if target == "T0":
        return mollified_limit(all_plus_series_action, p, levels)
    if target == "dirichlet":
        return dirichlet_comb_ladder(levels)
    name = target.split(":", 1)[1]
    return jump_average(_JUMP_FUNCTIONS[name], levels=levels, vanishing_order=p)


def cmd_mollify(args) -> int:
    if args.p not in (0, 2, 4):
        raise ValueError("p must be one of 0, 2, 4")
    if args.levels < 3:
        raise ValueError("--levels must be >= 3")
    limit = _mollify_limit(args)
    sign = 0
    if limit.samples:
        last = limit.samples[-1][1].real
        sign = (last > 0) - (last < 0)
    if args.format == "json":
        obj = limit.to_json_obj()
        obj.update({"target": args.target, "p": args.p, "sign": sign})
        _emit_json(obj)
    elif args.format == "csv":
        _emit_csv(["parameter", "value_re", "value_im"], _ladder_csv_rows(limit))
    else:
        _print_ladder_text(limit, args.quiet)
        if limit.converged and limit.extrapolated is not None:
            print(f"extrapolant {fmt_float(limit.extrapolated.real)} "
                  f"{fmt_float(limit.extrapolated.imag)}")
            print(f"error_estimate {fmt_float(limit.error_estimate)}")
            print("converged")
        elif limit.growth_exponent is not None:
            print(f"diverges exponent {fmt_float(limit.growth_exponent)} "
                  f"sign {'-' if sign < 0 else '+'}")
        else:
            print("not converged")
    return 0


def cmd_casimir(args) -> int:
    if not args.d > 0:
        raise ValueError("separation d must be > 0")
    cfg = CavityConfig.si(args.d) if args.units == "si" else CavityConfig(d=args.d)
    energy = ground_state_energy(cfg)
    force = casimir_force(cfg)
    if args.format == "json":
        _emit_json(
            {"d": args.d, "energy": energy, "force": force, "units": args.units}
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "energy", "force", "units"],
            [[fmt_float(args.d), fmt_float(energy), fmt_float(force), args.units]],
        )
    else:
        print(f"energy {fmt_float(energy)}")
        print(f"force {fmt_float(force)}")
    return 0


def cmd_table(args) -> int:
    if not 1 <= args.k_max <= 100:
        raise ValueError("k-max must satisfy 1 <= k-max <= 100")
    rows = []
    all_match = True
    for k in range(1, args.k_max + 1):
        closed = sum_powers(k).value
        oracle = zeta_negative_oracle(k)
        match = closed == oracle
        all_match &= match
        rows.append((k, closed, oracle, match))
    if args.format == "json":
        _emit_json(
            [
                {
                    "k": k,
                    "sum": str(closed),
                    "zeta": str(oracle),
                    "match": match,
                }
                for k, closed, oracle, match in rows
            ]
        )
    elif args.format == "csv":
        _emit_csv(
            ["k", "sum", "zeta", "match"],
            [[k, str(c), str(o), str(m).lower()] for k, c, o, m in rows],
        )
    else:
        for k, closed, oracle, match in rows:
            flag = "ok" if match else "MISMATCH"
            print(f"{k}\t{closed}\t{oracle}\t{flag}")
    if not all_match:
        print("table mismatch: closed form disagrees with the zeta oracle",
              file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divsum",
        description="Regularized sums of divergent power series and their "
        "distributional underpinnings.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress ladder rows in text output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="regularized power sum (exact rational)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alternating", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("zeta", help="zeta(-k) from the Bernoulli oracle")
    p.add_argument("--neg-k", type=int, required=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("check", help="functional-equation residual")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, default=10**6)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("coeff", help="numerical Fourier coefficient c_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--levels", type=int, default=10)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("mollify", help="mollified limit or divergence ladder")
    p.add_argument("--target", choices=_MOLLIFY_TARGETS, required=True)
    p.add_argument("--p", type=int, default=0, help="vanishing order (0, 2, 4)")
    p.add_argument("--levels", type=int, default=None)
    p.set_defaults(func=cmd_mollify)

    p = sub.add_parser("casimir", help="toy-model vacuum energy and force")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("table", help="closed form vs zeta oracle for k <= k-max")
    p.add_argument("--k-max", dest="k_max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    return parser


_DEFAULT_LEVELS = {"T0": 8, "dirichlet": 8}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "levels", 0) is None:
        args.levels = _DEFAULT_LEVELS.get(args.target, 10)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

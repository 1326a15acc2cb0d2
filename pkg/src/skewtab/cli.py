"""Command-line entry point: compute counts, reproduce the closed-form
table, run cross-checks, and emit asymptotic comparison reports.

Subcommands: ``skew``, ``contain``, ``table``, ``asym``.  Every command
supports ``--json``, emitting a single JSON object per invocation in which
big integers are decimal strings (never floats) and rationals are "p/q"
strings in lowest terms with the sign on the numerator.

Exit codes: 0 ok (all requested agreement flags true), 1 disagreement,
2 parse error, 3 invalid skew shape, 4 internal integrality violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asymptotics, containment, sequences, skew_count
from .exact import IntegralityError
from .partitions import InvalidSkewShapeError, SkewShape, format_partition, parse_partition

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_INVALID_SHAPE = 3
EXIT_INTEGRALITY = 4

SKEW_METHODS = ("brute", "det", "char")
CONTAIN_METHODS = containment.METHODS


def _fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def render_json(record: dict) -> str:
    """Canonical JSON rendering; re-rendering a parsed record is bit-identical."""
    return json.dumps(record, indent=2, sort_keys=True)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse rational from {text!r}") from None


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(_parse_rational(item) for item in text.split(","))


def _emit(record: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(render_json(record))
    else:
        for line in lines:
            print(line)


def _cmd_skew(args) -> int:
    shape = SkewShape(parse_partition(args.outer), parse_partition(args.inner))
    wanted = SKEW_METHODS if args.method == "all" else (args.method,)
    compute = {
        "brute": skew_count.skew_syt_brute,
        "det": skew_count.skew_syt_det,
        "char": skew_count.skew_syt_char,
    }
    values = {name: compute[name](shape) for name in wanted}
    agree = len(set(values.values())) == 1
    record = {
        "command": "skew",
        "inputs": {
            "outer": format_partition(shape.outer),
            "inner": format_partition(shape.inner),
            "method": args.method,
        },
        "results": {
            "count": str(next(iter(values.values()))),
            "by_method": {name: str(v) for name, v in values.items()},
        },
        "agree": agree,
    }
    lines = [f"f[{args.outer or '()'} / {args.inner or '()'}]"]
    lines += [f"  {name:5s} = {v}" for name, v in values.items()]
    if args.method == "all":
        lines.append(f"  agree = {agree}")
    _emit(record, args.json, lines)
    return EXIT_OK if agree else EXIT_DISAGREE


def _cmd_contain(args) -> int:
    alpha = parse_partition(args.alpha)
    n = args.n
    wanted = CONTAIN_METHODS if args.method == "all" else (args.method,)
    values = {
        name: containment.count_containing(n, alpha, name).value for name in wanted
    }
    agree = len(set(values.values())) == 1
    prob = containment.containment_probability(n, alpha)
    record = {
        "command": "contain",
        "inputs": {"n": n, "alpha": format_partition(alpha), "method": args.method},
        "results": {
            "N": str(next(iter(values.values()))),
            "P": _fmt_fraction(prob),
            "by_method": {name: str(v) for name, v in values.items()},
        },
        "agree": agree,
    }
    lines = [f"N({n}; {args.alpha or '()'})"]
    lines += [f"  {name:9s} = {v}" for name, v in values.items()]
    lines.append(f"  P         = {_fmt_fraction(prob)}")
    if args.method == "all":
        lines.append(f"  agree     = {agree}")
    _emit(record, args.json, lines)
    return EXIT_OK if agree else EXIT_DISAGREE


def _cmd_table(args) -> int:
    from .partitions import partitions_of

    rows = []
    all_match = True
    for k in range(1, args.max_k + 1):
        for alpha in partitions_of(k):
            has_form = alpha in containment.CLOSED_FORMS
            for n in range(args.n_max + 1):
                value = containment.N_expansion(n, alpha)
                row = {
                    "alpha": format_partition(alpha),
                    "n": n,
                    "expansion": str(value),
                    "closed_form": None,
                    "match": None,
                }
                if has_form:
                    golden = containment.N_closed_form(n, alpha)
                    row["closed_form"] = str(golden)
                    row["match"] = golden == value
                    all_match = all_match and row["match"]
                rows.append(row)
    record = {
        "command": "table",
        "inputs": {"max_k": args.max_k, "n_max": args.n_max},
        "results": {"rows": rows},
        "agree": all_match,
    }
    lines = [f"{'alpha':12s} {'n':>3s} {'expansion':>14s} {'closed form':>14s} match"]
    for row in rows:
        golden = row["closed_form"] if row["closed_form"] is not None else "-"
        match = {True: "yes", False: "NO", None: "-"}[row["match"]]
        lines.append(
            f"{row['alpha']:12s} {row['n']:3d} {row['expansion']:>14s} "
            f"{golden:>14s} {match}"
        )
    lines.append(f"all match: {all_match}")
    _emit(record, args.json, lines)
    return EXIT_OK if all_match else EXIT_DISAGREE


def _asym_tn(args) -> tuple[dict, list[str]]:
    exact = sequences.involutions(args.n)
    log_est = asymptotics.mw_log_involutions_estimate(args.n, args.order)
    rel = asymptotics.relative_error(log_est, exact)
    results = {
        "estimate": asymptotics.mw_involutions_estimate(args.n, args.order),
        "exact": str(exact),
        "rel_err": rel,
    }
    lines = [
        f"t({args.n}) estimate (order {args.order}) = {results['estimate']:.6e}",
        f"t({args.n}) exact = {exact}",
        f"relative error = {rel:.3e}",
    ]
    return results, lines


def _asym_shift(args) -> tuple[dict, list[str]]:
    j = args.m
    exact = sequences.involutions(args.n - j)
    log_est = asymptotics.mw_log_shifted_estimate(args.n, j)
    rel = asymptotics.relative_error(log_est, exact)
    results = {
        "estimate": asymptotics.mw_shifted_estimate(args.n, j),
        "exact": str(exact),
        "rel_err": rel,
    }
    lines = [
        f"t({args.n}-{j}) estimate = {results['estimate']:.6e}",
        f"t({args.n - j}) exact = {exact}",
        f"relative error = {rel:.3e}",
    ]
    return results, lines


def _asym_prob(args) -> tuple[dict, list[str]]:
    alpha = parse_partition(args.alpha)
    estimate = asymptotics.containment_probability_estimate(args.n, alpha)
    exact = containment.containment_probability(args.n, alpha)
    residual = float(exact) - estimate
    results = {
        "estimate": estimate,
        "exact": _fmt_fraction(exact),
        "residual": residual,
    }
    lines = [
        f"P({args.n}; {args.alpha}) estimate = {estimate:.10f}",
        f"P({args.n}; {args.alpha}) exact = {_fmt_fraction(exact)} = {float(exact):.10f}",
        f"residual = {residual:.3e}",
    ]
    return results, lines


def _asym_vk(args) -> tuple[dict, list[str]]:
    alpha = parse_partition(args.alpha)
    a = _parse_rational_list(args.a)
    b = _parse_rational_list(args.b)
    m = args.m
    if m < 1:
        raise ValueError("kind=vk needs --m >= 1 (the two-row size)")
    estimate = asymptotics.super_schur_value(alpha, a, b)
    lam = (m, m)
    f_lam = skew_count.skew_syt_det(SkewShape(lam, ()))
    f_skew = skew_count.skew_syt_det(SkewShape(lam, alpha))
    exact_ratio = Fraction(f_skew, f_lam)
    rel = float(estimate / exact_ratio - 1) if exact_ratio else float("nan")
    results = {
        "estimate_ratio": _fmt_fraction(estimate),
        "exact_ratio": _fmt_fraction(exact_ratio),
        "lambda": format_partition(lam),
        "rel_err": rel,
    }
    lines = [
        f"limit ratio s_alpha(a/-b) = {_fmt_fraction(estimate)}",
        f"exact ratio at lambda=({m},{m}): {_fmt_fraction(exact_ratio)}",
        f"relative error = {rel:.3e}",
    ]
    return results, lines


def _asym_mass(args) -> tuple[dict, list[str]]:
    eps = _parse_rational(args.eps)
    mass = asymptotics.bulk_mass(args.n, eps)
    results = {"mass": _fmt_fraction(mass), "mass_float": float(mass)}
    lines = [f"bulk mass(n={args.n}, eps={args.eps}) = {_fmt_fraction(mass)} = {float(mass):.6f}"]
    return results, lines


def _cmd_asym(args) -> int:
    handlers = {
        "tn": _asym_tn,
        "shift": _asym_shift,
        "prob": _asym_prob,
        "vk": _asym_vk,
        "mass": _asym_mass,
    }
    results, lines = handlers[args.kind](args)
    record = {
        "command": "asym",
        "inputs": {
            "kind": args.kind,
            "n": args.n,
            "alpha": args.alpha,
            "order": args.order,
            "eps": args.eps,
            "a": args.a,
            "b": args.b,
            "m": args.m,
        },
        "results": results,
        "agree": None,
    }
    _emit(record, args.json, lines)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewtab",
        description="Exact SYT counting with cross-validated formulas",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_skew = sub.add_parser("skew", help="count SYT of a skew shape")
    p_skew.add_argument("--outer", required=True, help="outer partition, e.g. 2,2,1")
    p_skew.add_argument("--inner", default="", help="inner partition (default empty)")
    p_skew.add_argument("--method", choices=SKEW_METHODS + ("all",), default="all")
    p_skew.add_argument("--json", action="store_true")
    p_skew.set_defaults(run=_cmd_skew)

    p_contain = sub.add_parser("contain", help="count n-cell SYT containing a shape")
    p_contain.add_argument("--n", type=int, required=True)
    p_contain.add_argument("--alpha", required=True, help="contained shape, e.g. 2,1")
    p_contain.add_argument("--method", choices=CONTAIN_METHODS + ("all",), default="all")
    p_contain.add_argument("--json", action="store_true")
    p_contain.set_defaults(run=_cmd_contain)

    p_table = sub.add_parser("table", help="containment counts vs closed forms")
    p_table.add_argument("--max-k", dest="max_k", type=int, default=5)
    p_table.add_argument("--n-max", dest="n_max", type=int, default=12)
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(run=_cmd_table)

    p_asym = sub.add_parser("asym", help="asymptotic estimates vs exact values")
    p_asym.add_argument("kind", choices=("tn", "shift", "prob", "vk", "mass"))
    p_asym.add_argument("--n", type=int, default=50)
    p_asym.add_argument("--alpha", default="", help="shape for prob/vk kinds")
    p_asym.add_argument("--order", type=int, default=2, help="corrections for kind=tn")
    p_asym.add_argument("--eps", default="1/2", help="window width for kind=mass")
    p_asym.add_argument("--a", default="", help="row frequencies for kind=vk")
    p_asym.add_argument("--b", default="", help="column frequencies for kind=vk")
    p_asym.add_argument(
        "--m", type=int, default=0, help="two-row size for kind=vk; shift for kind=shift"
    )
    p_asym.add_argument("--json", action="store_true")
    p_asym.set_defaults(run=_cmd_asym)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except InvalidSkewShapeError as exc:
        print(f"invalid skew shape: {exc}", file=sys.stderr)
        return EXIT_INVALID_SHAPE
    except IntegralityError as exc:
        print(f"internal integrality violation: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands:
  represent  minimal N and witness for one residue
  nmax       minimal-N profile over all residues of one prime
  scan       nmax rows over a range of primes (JSON or CSV)
  grow       base set construction plus the sum-product growth run
  expsum     exponential-sum profile, bilinear bound, covering counts
  baseset    prime reciprocal-power base set with distinctness report
  smoothset  smooth multiplicative set with closure/density checks

Exponents are exact rationals written as "num/den" (or a bare integer);
floating-point forms are rejected. JSON output is canonical (sorted keys);
repeated runs with the same arguments produce byte-identical reports.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from fractions import Fraction

from . import __version__
from .basesets import (
    BaseSetSpec,
    build_prime_reciprocal_set,
    build_smooth_set,
    check_multiplicative_conditions,
)
from .bruteforce import exhaustive_depth_table, exhaustive_min_terms
from .errors import Error
from .expsums import (
    check_covering_positivity,
    compute_J,
    exp_sum_profile,
    minimal_covering_J,
    verify_bilinear_bound,
)
from .field import make_field
from .growth import GrowthConfig, grow_until, n_bound, term_budget
from .intmath import pow_floor
from .represent import ReprProblem, build_layer_table, min_terms, n_max, scan
from .sets import ResidueSet

_ORACLE_PRIME_LIMIT = 100

CSV_COLUMNS = ["p", "H", "base_size", "n_max", "max_layer", "elapsed_ms"]


def rational(text: str) -> Fraction:
    """Parse an exact rational "num/den" or a bare integer string."""
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"expected an exact rational like 2/3, got {text!r}"
        ) from exc


def prime_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a range like 2..499, got {text!r}") from exc
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _frac_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _json_safe(value):
    if isinstance(value, Fraction):
        return _frac_str(value)
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _render_text(doc: dict) -> str:
    lines: list[str] = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}[{i}]", item)
        else:
            lines.append(f"{prefix}: {value}")

    walk("", doc)
    return "\n".join(lines) + "\n"


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(["" if row.get(col) is None else row.get(col) for col in CSV_COLUMNS])
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _document(config: dict, result, diagnostics: dict) -> dict:
    return {
        "version": __version__,
        "config": _json_safe(config),
        "result": _json_safe(result),
        "diagnostics": _json_safe(diagnostics),
    }


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_represent(args) -> tuple[dict, dict]:
    problem = ReprProblem(make_field(args.p), args.k, args.epsilon)
    witness = min_terms(args.a, problem)
    result = {"target": witness.target.value, "N": witness.n, "witness": list(witness.xs)}
    diagnostics: dict = {"H": problem.height, "base_size": build_layer_table(problem).base.card}
    if args.oracle:
        oracle_n, oracle_witness = exhaustive_min_terms(args.a, problem)
        if oracle_n != witness.n:
            raise Error(
                f"oracle disagreement: layered N = {witness.n}, exhaustive N = {oracle_n}"
            )
        diagnostics["oracle_N"] = oracle_n
        diagnostics["oracle_witness"] = list(oracle_witness)
    return result, diagnostics


def _cmd_nmax(args) -> tuple[dict, dict]:
    problem = ReprProblem(make_field(args.p), args.k, args.epsilon)
    value, histogram = n_max(problem)
    result = {"n_max": value, "histogram": histogram}
    diagnostics: dict = {"H": problem.height}
    if args.oracle:
        oracle = exhaustive_depth_table(problem)
        if oracle != histogram:
            raise Error("oracle disagreement: per-residue term counts differ")
        diagnostics["oracle_agrees"] = True
    return result, diagnostics


def _cmd_scan(args) -> tuple[list[dict], dict]:
    from .basesets import primes_up_to

    lo, hi = args.primes
    primes = [p for p in primes_up_to(hi) if p >= lo]
    rows = scan(primes, args.k, args.epsilon, workers=args.workers, timing=args.timing)
    diagnostics = {"prime_count": len(rows), "timing_suppressed": not args.timing}
    return rows, diagnostics


def _cmd_grow(args) -> tuple[dict, dict]:
    field = make_field(args.p)
    spec = BaseSetSpec(field, args.k, args.beta, u=args.u)
    base, report = build_prime_reciprocal_set(spec)
    cfg = GrowthConfig(
        threshold_exponent=args.threshold_exponent,
        max_iters=args.max_iters,
        delta=Fraction(1, 4 * args.k),
    )
    final, trace = grow_until(base, cfg, spec.tuple_length, args.beta)
    result = {
        "base": {
            "u": spec.tuple_length,
            "prime_height": report.prime_height,
            "prime_count": report.prime_count,
            "tuple_count": report.tuple_count,
            "set_size": report.set_size,
            "regime_holds": report.regime_holds,
            "size_bound_holds": report.size_bound_holds,
            "small_beta_regime": report.small_beta_regime,
        },
        "steps": [
            {
                "op": s.op_chosen,
                "size_before": s.size_before,
                "size_after": s.size_after,
                "theta_hat": s.theta_hat,
            }
            for s in trace.steps
        ],
        "n": trace.n,
        "final_size": final.card,
        "threshold_exponent": cfg.threshold_exponent,
        "threshold_value": pow_floor(args.p, cfg.threshold_exponent),
        "term_bound": trace.term_bound,
        "term_bound_capped": trace.term_bound_capped,
        "height_exponent": trace.height_exponent,
    }
    diagnostics: dict = {"delta": cfg.delta}
    thetas = [s.theta_hat for s in trace.steps if not math.isnan(s.theta_hat)]
    if thetas and min(thetas) > 0:
        theta_min = min(thetas)
        diagnostics["theta_hat_min"] = theta_min
        diagnostics["n_bound"] = n_bound(args.k, theta_min)
        try:
            h = term_budget(spec.tuple_length, args.k, theta_min)
            diagnostics["term_budget"] = h
            diagnostics["covering_terms_bound"] = 16 * h * h
        except OverflowError:
            diagnostics["term_budget"] = None
    return result, diagnostics


def _build_expsum_set(args) -> tuple[ResidueSet, dict]:
    field = make_field(args.p)
    if args.members is not None:
        t = ResidueSet.from_members(field, args.members)
        source = {"source": "members"}
    elif args.random_size is not None:
        rng = random.Random(args.seed)
        picks = rng.sample(range(field.p), args.random_size)
        t = ResidueSet.from_members(field, picks)
        source = {"source": "random", "seed": args.seed, "requested_size": args.random_size}
    elif args.grow:
        spec = BaseSetSpec(field, args.k, args.beta, u=args.u)
        base, _ = build_prime_reciprocal_set(spec)
        cfg = GrowthConfig()
        t, trace = grow_until(base, cfg, spec.tuple_length, args.beta)
        source = {"source": "grow", "growth_steps": trace.n}
    else:
        raise Error("expsum needs one of --members, --random-size, or --grow")
    if t.card == 0:
        raise Error("the set T is empty")
    return t, source


def _cmd_expsum(args) -> tuple[dict, dict]:
    t, diagnostics = _build_expsum_set(args)
    profile = exp_sum_profile(t)
    bilinear = verify_bilinear_bound(profile)
    result = {
        "set_size": profile.set_size,
        "h0": float(profile.h_abs[0]),
        "f0": profile.f0,
        "parseval_relative_error": profile.parseval_relative_error,
        "bilinear": {
            "max_ratio": bilinear.max_ratio,
            "worst_a": bilinear.worst_a,
            "holds": bilinear.holds,
        },
    }
    j = args.J
    if args.auto_J:
        if t.card * t.card <= t.field.p:
            raise Error(f"--auto-J needs |T| > sqrt(p); |T| = {t.card}, p = {t.field.p}")
        j = compute_J(math.log(t.card) / math.log(t.field.p) - 0.5)
        diagnostics["auto_J"] = j
    if j is not None:
        positivity = check_covering_positivity(t, j)
        result["covering"] = {
            "J": positivity.j,
            "min_count": positivity.min_count,
            "min_residue": positivity.min_residue,
            "all_covered": positivity.all_covered,
            "beta_excess": positivity.beta_excess,
            "j_required": positivity.j_required,
            "j_sufficient": positivity.j_sufficient,
        }
    if args.min_J:
        result["minimal_J"] = minimal_covering_J(t, j_cap=args.min_J_cap)
    return result, diagnostics


def _cmd_baseset(args) -> tuple[dict, dict]:
    field = make_field(args.p)
    spec = BaseSetSpec(field, args.k, args.beta, u=args.u)
    members, report = build_prime_reciprocal_set(spec)
    result = {
        "u": spec.tuple_length,
        "prime_height": report.prime_height,
        "prime_count": report.prime_count,
        "tuple_count": report.tuple_count,
        "set_size": report.set_size,
        "regime_holds": report.regime_holds,
        "size_bound_holds": report.size_bound_holds,
        "small_beta_regime": report.small_beta_regime,
    }
    if args.list_members:
        result["members"] = members.to_list()
    return result, {}


def _cmd_smoothset(args) -> tuple[dict, dict]:
    field = make_field(args.p)
    smooth = build_smooth_set(field, args.bound)
    result: dict = {"bound": args.bound, "size": len(smooth)}
    if args.epsilon is not None and args.theta is not None:
        report = check_multiplicative_conditions(smooth, field, args.epsilon, args.theta)
        result["conditions"] = {
            "contains_one": report.contains_one,
            "closed_under_product": report.closed_under_product,
            "closure_holds": report.closure_holds,
            "count_up_to_height": report.count_up_to_height,
            "density_holds": report.density_holds,
            "height": report.height,
        }
    if args.list_members:
        result["members"] = list(smooth.integers)
    return result, {}


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recipsums",
        description="Reciprocal-power sums, sum-product growth, and covering counts mod p.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--output", "-o", help="write the report to this path instead of stdout")
        sp.add_argument(
            "--format",
            choices=["json", "csv", "text"],
            default="json",
            help="output format (csv is valid for scan only)",
        )

    sp = sub.add_parser("represent", help="minimal N and witness for one residue")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--epsilon", type=rational, required=True)
    sp.add_argument("--a", type=int, required=True, help="target residue")
    sp.add_argument("--oracle", action="store_true", help="cross-check with exhaustive search")
    add_common(sp)

    sp = sub.add_parser("nmax", help="minimal-N profile over all residues")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--epsilon", type=rational, required=True)
    sp.add_argument("--oracle", action="store_true")
    add_common(sp)

    sp = sub.add_parser("scan", help="nmax rows over a prime range")
    sp.add_argument("--primes", type=prime_range, required=True, help="inclusive range, e.g. 2..499")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--epsilon", type=rational, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument(
        "--timing",
        action="store_true",
        help="report wall-clock per row (makes output non-reproducible)",
    )
    add_common(sp)

    sp = sub.add_parser("grow", help="base set plus sum-product growth run")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--beta", type=rational, required=True)
    sp.add_argument("--u", type=int, default=None, help="override the tuple length")
    sp.add_argument("--threshold-exponent", type=rational, default=Fraction(2, 3))
    sp.add_argument("--max-iters", type=int, default=64)
    add_common(sp)

    sp = sub.add_parser("expsum", help="exponential sums and covering counts for a set T")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--members", type=int_list, default=None, help="explicit T, e.g. 1,2,4")
    sp.add_argument("--random-size", type=int, default=None, help="|T| for a seeded random T")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--grow", action="store_true", help="take T from a growth run")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--beta", type=rational, default=Fraction(1, 4))
    sp.add_argument("--u", type=int, default=None)
    sp.add_argument("--J", type=int, default=None, help="covering count exponent")
    sp.add_argument("--auto-J", action="store_true", help="derive J from the size of T")
    sp.add_argument("--min-J", action="store_true", help="search for the minimal covering J")
    sp.add_argument("--min-J-cap", type=int, default=64)
    add_common(sp)

    sp = sub.add_parser("baseset", help="prime reciprocal-power base set")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--beta", type=rational, required=True)
    sp.add_argument("--u", type=int, default=None)
    sp.add_argument("--list-members", action="store_true")
    add_common(sp)

    sp = sub.add_parser("smoothset", help="smooth multiplicative set and its conditions")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--epsilon", type=rational, default=None)
    sp.add_argument("--theta", type=rational, default=None)
    sp.add_argument("--list-members", action="store_true")
    add_common(sp)

    return parser


_HANDLERS = {
    "represent": _cmd_represent,
    "nmax": _cmd_nmax,
    "scan": _cmd_scan,
    "grow": _cmd_grow,
    "expsum": _cmd_expsum,
    "baseset": _cmd_baseset,
    "smoothset": _cmd_smoothset,
}


def _config_dict(args) -> dict:
    skip = {"output", "format"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        if isinstance(value, tuple) and key == "primes":
            value = f"{value[0]}..{value[1]}"
        out[key] = value
    out["format"] = args.format
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.format == "csv" and args.command != "scan":
        sys.stderr.write("error: --format csv is only supported by scan\n")
        return 2
    if getattr(args, "oracle", False) and args.p > _ORACLE_PRIME_LIMIT:
        sys.stderr.write(f"error: --oracle refuses primes above {_ORACLE_PRIME_LIMIT}\n")
        return 2

    config = _config_dict(args)
    try:
        result, diagnostics = _HANDLERS[args.command](args)
    except (Error, ValueError, OverflowError) as exc:
        err_doc = {
            "version": __version__,
            "config": _json_safe(config),
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        _emit(json.dumps(err_doc, sort_keys=True, indent=2) + "\n", args.output)
        return 1

    if args.format == "csv":
        text = _render_csv(result)
    else:
        doc = _document(config, result, diagnostics)
        if args.format == "text":
            text = _render_text(doc)
        else:
            text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

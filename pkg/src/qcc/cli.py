"""Command-line front end: ``qcc <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails or a required witness
cannot be found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import size_fraction_curve, verify_bounds
from .cache import Cache
from .constructions import RationalRate, join_construction, plan_join, simple_upper_witness
from .canon import canonical_form
from .enumerate import DEFAULT_LIMIT, HARD_LIMIT
from .graph import CapacityError
from .qnc import DomainError, q_general, q_small, qnc_bruteforce, qnc_formula, qnc_table
from .ramsey import (
    WitnessImpossible,
    WitnessUnavailable,
    default_table,
    inverse_ramsey,
    inverse_ramsey_bruteforce,
    omega_witness,
)
from .records import Kind, Method, WitnessRecord

log = logging.getLogger("qcc")


class UsageError(Exception):
    pass


def _rate(text: str) -> RationalRate:
    try:
        return RationalRate.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rates(text: str) -> list[RationalRate]:
    return [_rate(part) for part in text.split(",") if part.strip()]


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--cache-dir", default=d(None), help="witness cache directory (default: $QCC_CACHE_DIR)")
    p.add_argument("--format", choices=["text", "json", "csv", "g6"], default=d("text"))
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomised witness search")
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--time-limit", type=float, default=d(60.0), help="seconds allowed per witness search")
    p.add_argument("--limit", type=int, default=d(DEFAULT_LIMIT),
                   help=f"largest n for exhaustive enumeration (max {HARD_LIMIT})")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcc", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"qcc {__version__}")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text):
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        _add_common(p, suppress=True)
        return p

    p = cmd("ramsey", "classical Ramsey number R(s,t) as an interval with its source")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = cmd("omega", "inverse Ramsey number omega(n,k) with a witness graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="exhaustive search instead of the Ramsey table")

    p = cmd("qnc", "Q(n,c): least clique number at n vertices and chromatic number c")
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--n-max", type=int, help="tabulate every 1 <= c <= n <= N (brute force)")
    p.add_argument("--method", choices=["brute", "formula"], default="brute")

    p = cmd("qsmall", "partition minimum over at most three parts used by the Q(n, n-k) formula")
    p.add_argument("--k", type=int, required=True)

    p = cmd("qgen", "partition minimum of omega(alpha*beta_i, alpha) over beta = sum beta_i")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)

    p = cmd("construct", "build a certified graph with chi = ceil(rn)")
    p.add_argument("--r", type=_rate, required=True, help="rate as an exact fraction P/Q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["simple", "join"], default="simple")
    p.add_argument("--out", type=Path, help="write the graph in graph6 to this file")

    p = cmd("verify", "check every bound against brute force for the given rates")
    p.add_argument("--r", type=_rates, required=True, help="comma-separated fractions, e.g. 1/2,2/5")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", type=Path, help="report file (CSV, or JSON with --format json)")
    p.add_argument("--no-plot", action="store_true", help="skip the PNG figure next to the report")
    p.add_argument("--witnesses", action="store_true", help="also build and certify constructive witnesses")

    p = cmd("constants", "tabulate c_r and d_r over (1/(k+1), 1/k] for k = 1..K")
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--out", type=Path)
    p.add_argument("--no-plot", action="store_true")
    return parser


# -- output helpers -------------------------------------------------------


def _csv(rows: list[dict], fields: list[str] | None = None) -> str:
    buf = io.StringIO()
    fields = fields or (list(rows[0]) if rows else [])
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _record_row(rec: WitnessRecord, names: tuple[str, ...], value_name: str) -> dict:
    row = dict(zip(names, rec.params))
    row[value_name] = rec.value.lo if rec.value.is_exact else str(rec.value)
    row["witness_g6"] = rec.witness_g6 or ""
    row["method"] = rec.method.value
    return row


def _emit_records(args, recs: list[WitnessRecord], names: tuple[str, ...], value_name: str) -> None:
    for rec in recs:
        rec.certify()
    if args.format == "json":
        _emit(_json([r.to_json() for r in recs] if len(recs) != 1 else recs[0].to_json()))
    elif args.format == "g6":
        _emit("".join(f"{r.witness_g6}\n" for r in recs if r.witness_g6))
    elif args.format == "csv" or len(recs) > 1:
        _emit(_csv([_record_row(r, names, value_name) for r in recs],
                   list(names) + [value_name, "witness_g6", "method"]))
    else:
        rec = recs[0]
        args_text = ",".join(str(x) for x in rec.params)
        shown = rec.value.lo if rec.value.is_exact else rec.value
        _emit(f"{value_name}({args_text}) = {shown}\n")
        if rec.witness_g6:
            _emit(f"witness: {rec.witness_g6}\n")
        _emit(f"method: {rec.method.value}\n")


# -- subcommands ----------------------------------------------------------


def cmd_ramsey(args, cache) -> int:
    entry = default_table().lookup(args.s, args.t)
    v = entry.value
    data = {"s": args.s, "t": args.t, "lo": v.lo, "hi": v.hi, "exact": v.is_exact, "source": entry.source}
    if args.format == "json":
        _emit(_json(data))
    elif args.format == "csv":
        _emit(_csv([data]))
    else:
        _emit(f"{v}\nsource: {entry.source}\n")
    return 0


def cmd_omega(args, cache) -> int:
    if args.brute:
        rec = cache.get(Kind.OMEGA_NK, (args.n, args.k))
        if rec is None or rec.method is not Method.BRUTE_FORCE:
            _, rec = inverse_ramsey_bruteforce(args.n, args.k, limit=args.limit)
            cache.put(rec)
    else:
        bound = inverse_ramsey(args.n, args.k)
        try:
            wit = omega_witness(args.n, args.k, cache=cache, limit=args.limit,
                                seed=args.seed, time_limit=args.time_limit)
        except WitnessUnavailable as exc:
            log.warning("%s", exc)
            wit = None
        if bound.is_exact and wit is not None:
            rec = WitnessRecord(Kind.OMEGA_NK, (args.n, args.k), bound, wit.witness_g6, Method.TABLE)
        else:
            # An inexact value cannot be certified by a single graph.
            extra = {"upper_witness": wit.witness_g6} if wit is not None else {}
            rec = WitnessRecord(Kind.OMEGA_NK, (args.n, args.k), bound, None, Method.TABLE, extra)
    _emit_records(args, [rec], ("n", "k"), "omega")
    return 0


def _qnc_record(n, c, args, cache) -> WitnessRecord:
    rec = cache.get(Kind.QNC, (n, c))
    if rec is not None and rec.method is Method.BRUTE_FORCE:
        return rec
    table = qnc_table(n, limit=args.limit, threads=args.threads)
    for r in table.values():
        if cache.get(Kind.QNC, r.params) is None:
            cache.put(r)
    return table[c]


def cmd_qnc(args, cache) -> int:
    if args.n_max is not None:
        if args.method != "brute":
            raise UsageError("--n-max tabulates brute-force values only")
        recs = [_qnc_record(n, c, args, cache) for n in range(1, args.n_max + 1) for c in range(1, n + 1)]
        if args.format == "text":
            args.format = "csv"
        _emit_records(args, recs, ("n", "c"), "Q")
        return 0
    if args.n is None or args.c is None:
        raise UsageError("qnc needs --n and --c (or --n-max)")
    if not 1 <= args.c <= args.n:
        raise UsageError("need 1 <= c <= n")
    if args.method == "formula":
        value = qnc_formula(args.n, args.n - args.c)
        rec = WitnessRecord(Kind.QNC, (args.n, args.c), value, None, Method.TABLE)
    else:
        rec = _qnc_record(args.n, args.c, args, cache)
    _emit_records(args, [rec], ("n", "c"), "Q")
    return 0


def _partition_out(args, res) -> int:
    data = {"value": res.value.to_json(), "exact": res.value.is_exact,
            "partition": list(res.partition), "terms": [t.to_json() for t in res.terms]}
    if args.format == "json":
        _emit(_json(data))
    elif args.format == "csv":
        _emit(_csv([{"value": str(res.value), "partition": "+".join(map(str, res.partition))}]))
    else:
        _emit(f"{res.value}\npartition: {' + '.join(map(str, res.partition))}\n")
    return 0


def cmd_qsmall(args, cache) -> int:
    return _partition_out(args, q_small(args.k))


def cmd_qgen(args, cache) -> int:
    return _partition_out(args, q_general(args.beta, args.alpha))


def cmd_construct(args, cache) -> int:
    kw = dict(cache=cache, limit=args.limit, seed=args.seed, time_limit=args.time_limit)
    if args.kind == "simple":
        g, omega = simple_upper_witness(args.r, args.n, **kw)
        g = canonical_form(g)
        k = args.r.k
        report = {"r": str(args.r), "n": args.n, "k": k, "c": args.r.ceil_times(args.n),
                  "omega_nk": inverse_ramsey(args.n, k).to_json(), "omega": omega,
                  "chi": args.r.ceil_times(args.n), "graph6": g.to_graph6()}
    else:
        res = join_construction(plan_join(args.r, args.n), **kw)
        g = canonical_form(res.graph)
        report = res.to_json()
        report["graph6"] = g.to_graph6()
    if args.out:
        args.out.write_text(g.to_graph6() + "\n")
    if args.format == "g6":
        _emit(g.to_graph6() + "\n")
    elif args.format == "csv":
        flat = {key: val for key, val in report.items() if not isinstance(val, (list, dict))}
        _emit(_csv([flat]))
    else:
        _emit(_json(report))
    return 0


def cmd_verify(args, cache) -> int:
    ver = verify_bounds(args.r, args.n_max, limit=args.limit, threads=args.threads,
                          witnesses=args.witnesses, cache=cache, seed=args.seed, time_limit=args.time_limit)
    rows = [b.row() for b in ver.bounds]
    if args.format == "json":
        body = _json(ver.to_json())
    else:
        body = _csv(rows)
    if args.out:
        args.out.write_text(body)
        if not args.no_plot:
            from .plotting import plot_bounds

            plot_bounds(ver.bounds, args.out.with_suffix(".png"))
        formula_path = args.out.with_name(args.out.stem + "_formula.csv")
        formula_path.write_text(_csv([f.row() for f in ver.formula],
                                     ["n", "k", "c", "brute", "formula", "partition", "status"]))
        s = ver.summary()
        _emit(" ".join(f"{k}={v}" for k, v in s.items()) + "\n")
    else:
        _emit(body)
    return 0 if ver.passed else 1


def cmd_constants(args, cache) -> int:
    from .bounds import ceil_fraction

    rows = []
    for r, k, c in size_fraction_curve(args.k_max, args.points):
        rows.append({"r": str(r), "k": k, "c_r": str(c), "d_r": str(Fraction(1, ceil_fraction(1 / c))),
                     "c_r_float": f"{float(c):.6f}"})
    body = _json(rows) if args.format == "json" else _csv(rows)
    if args.out:
        args.out.write_text(body)
        if not args.no_plot:
            from .plotting import plot_size_fraction

            plot_size_fraction(size_fraction_curve(args.k_max, args.points), args.out.with_suffix(".png"))
    else:
        _emit(body)
    return 0


COMMANDS = {
    "ramsey": cmd_ramsey,
    "omega": cmd_omega,
    "qnc": cmd_qnc,
    "qsmall": cmd_qsmall,
    "qgen": cmd_qgen,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "constants": cmd_constants,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.limit > HARD_LIMIT:
        parser.error(f"--limit may not exceed {HARD_LIMIT}")
    if args.threads < 1:
        parser.error("--threads must be positive")
    cache = Cache(args.cache_dir)
    out = getattr(args, "out", None)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
    try:
        return COMMANDS[args.command](args, cache)
    except (UsageError, DomainError, CapacityError, ValueError, OSError) as exc:
        print(f"qcc {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (WitnessUnavailable, WitnessImpossible) as exc:
        print(f"qcc {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

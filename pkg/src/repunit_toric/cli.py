"""Command line front end.

Subcommands: info, verify, sweep, groebner, betti, unique.  Exit codes:
0 all checks passed, 1 a verification failed, 2 usage error or a claim
refused the instance.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .binomials import format_binomial
from .families import (
    minors_closed_chain,
    minors_open_chain,
    projective_grading,
    scalar_grading,
    toric_ideal,
)
from .fibers import betti_degrees, has_unique_minimal_system
from .groebner import groebner_reduced
from .orders import build_order_i, five_variable_order
from .reports import exit_code, render_json, render_text
from .semigroup import InstanceParams, gcd_of_generators, generators, repunit
from .verify import CLAIMS, run_claim

SOURCES = ("minors-x", "minors-y", "toric-i", "toric-j")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repunit-toric",
        description="Exact verification toolkit for repunit-curve binomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, ranges: bool = False) -> None:
        kind = str if ranges else int
        p.add_argument("--a", type=kind, help="instance parameter a >= 1")
        p.add_argument("--b", type=kind, help="instance parameter b >= 1")
        p.add_argument("--n", type=kind, help="number of generators, n >= 2")
        p.add_argument(
            "--format", choices=("text", "json", "json-like"), default="text",
            help="output format (json and json-like are synonyms)",
        )
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument(
            "--trace", action="store_true",
            help="stream one line per Buchberger S-pair to stderr (engine commands)",
        )

    p_info = sub.add_parser("info", help="print instance basics")
    add_common(p_info)

    p_verify = sub.add_parser("verify", help="verify a named claim")
    add_common(p_verify)
    p_verify.add_argument("claim_pos", nargs="?", metavar="CLAIM",
                          help=f"one of {', '.join(sorted(CLAIMS))}")
    p_verify.add_argument("--claim", dest="claim_opt", help="claim name (same as positional)")
    idx = p_verify.add_mutually_exclusive_group()
    idx.add_argument("--i", type=int, help="order index for per-index claims")
    idx.add_argument("--all-i", action="store_true", help="run per-index claims for every i")

    p_sweep = sub.add_parser("sweep", help="tabulate a parameter grid")
    add_common(p_sweep, ranges=True)
    p_sweep.add_argument("--jobs", type=int, default=0,
                         help="worker count (default: cpu count, capped at 8)")

    p_gb = sub.add_parser("groebner", help="list a reduced basis")
    add_common(p_gb)
    p_gb.add_argument("--source", choices=SOURCES, required=True)
    p_gb.add_argument("--order", default="prec-i",
                      help="prec-i (with --i), prec-<k>, or example5")
    p_gb.add_argument("--i", type=int, help="cheap variable index for prec-i")

    p_betti = sub.add_parser("betti", help="fiber-oracle generator counts per degree")
    add_common(p_betti)
    p_betti.add_argument("--source", choices=SOURCES, required=True)

    p_unique = sub.add_parser("unique", help="is the minimal binomial system unique")
    add_common(p_unique)
    p_unique.add_argument("--source", choices=SOURCES, required=True)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _params_from_args(args, defaults: dict | None = None) -> InstanceParams:
    values = {}
    for field in ("a", "b", "n"):
        v = getattr(args, field)
        if v is None and defaults:
            v = defaults.get(field)
        if v is None:
            raise ValueError(f"missing --{field}")
        values[field] = int(v)
    return InstanceParams(**values)


def _trace_fn(args):
    if not getattr(args, "trace", False):
        return None
    return lambda line: print(f"trace: {line}", file=sys.stderr)


def cmd_info(args) -> int:
    params = _params_from_args(args)
    gens = generators(params)
    g = gcd_of_generators(params)
    if g != 1:
        predicted = "n/a (generators not coprime)"
    elif params.n <= 3:
        predicted = "n/a (n <= 3)"
    else:
        predicted = "yes" if params.a < params.b - 1 else "no"
    if args.format == "text":
        lines = [
            f"instance: a={params.a} b={params.b} n={params.n}",
            f"repunit r_b(n): {repunit(params.b, params.n)}",
            "generators: " + " ".join(str(x) for x in gens),
            f"gcd: {g} ({'coprime' if g == 1 else 'not coprime'})",
            f"unique minimal system predicted (a < b-1): {predicted}",
        ]
        _emit("\n".join(lines), args.out)
    else:
        _emit(json.dumps({
            "instance": {"a": params.a, "b": params.b, "n": params.n},
            "repunit": repunit(params.b, params.n),
            "generators": list(gens),
            "gcd": g,
            "unique_predicted": predicted,
        }, indent=2), args.out)
    return 0


def cmd_verify(args) -> int:
    claim = args.claim_pos or args.claim_opt
    if not claim:
        raise ValueError("verify needs a claim name (positional or --claim)")
    if args.claim_pos and args.claim_opt and args.claim_pos != args.claim_opt:
        raise ValueError("positional claim and --claim disagree")
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    spec = CLAIMS[claim]
    params = _params_from_args(args, dict(spec.defaults))
    reports = run_claim(claim, params, i=args.i, all_indices=args.all_i)
    if args.format == "text":
        _emit(render_text(reports), args.out)
    else:
        _emit(render_json(reports), args.out)
    return exit_code(reports)


_RANGE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def _parse_range(text: str, flag: str) -> list[int]:
    m = _RANGE.match(text.strip())
    if not m:
        raise ValueError(f"--{flag} wants K or LO..HI, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return list(range(lo, hi + 1))


def _sweep_row(params: InstanceParams) -> dict:
    g = gcd_of_generators(params)
    grading = scalar_grading(params)
    order = build_order_i(generators(params), 1)
    tor = toric_ideal(grading, order)
    count = sum(betti_degrees(list(tor.elements), grading).values())
    unique = has_unique_minimal_system(list(tor.elements), grading)
    predicate = params.a < params.b - 1
    if g == 1 and params.n > 3:
        agree = "yes" if unique == predicate else "NO"
    else:
        agree = "-"
    return {
        "a": params.a, "b": params.b, "n": params.n, "gcd": g,
        "mingens": count, "unique": unique, "predicate": predicate, "agree": agree,
    }


def cmd_sweep(args) -> int:
    for field in ("a", "b", "n"):
        if getattr(args, field) is None:
            raise ValueError(f"missing --{field} (K or LO..HI)")
    grid = [
        InstanceParams(a, b, n)
        for a in _parse_range(args.a, "a")
        for b in _parse_range(args.b, "b")
        for n in _parse_range(args.n, "n")
    ]
    jobs = args.jobs or min(8, os.cpu_count() or 1)
    if grid:
        with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
            rows = list(pool.map(_sweep_row, grid))
    else:
        rows = []
    if args.format == "text":
        header = f"{'a':>3} {'b':>3} {'n':>3} {'gcd':>5} {'mingens':>8} {'unique':>7} {'a<b-1':>6} {'agree':>6}"
        lines = [header]
        for r in rows:
            lines.append(
                f"{r['a']:>3} {r['b']:>3} {r['n']:>3} {r['gcd']:>5} {r['mingens']:>8} "
                f"{'yes' if r['unique'] else 'no':>7} "
                f"{'yes' if r['predicate'] else 'no':>6} {r['agree']:>6}"
            )
        _emit("\n".join(lines), args.out)
    else:
        _emit(json.dumps({"rows": rows}, indent=2), args.out)
    return 0


def _resolve_order(args, params: InstanceParams):
    name = args.order
    weights = generators(params)
    if name == "example5":
        if params.n != 5:
            raise ValueError("the example5 order needs n=5")
        return name, five_variable_order(weights)
    m = re.match(r"^prec-(i|\d+)$", name)
    if not m:
        raise ValueError(f"unknown order {name!r}; use prec-i, prec-<k>, or example5")
    if m.group(1) == "i":
        if args.i is None:
            raise ValueError("--order prec-i needs --i")
        idx = args.i
    else:
        idx = int(m.group(1))
    return f"prec-{idx}", build_order_i(weights, idx)


def _source_basis(source: str, params: InstanceParams, order, trace):
    if source == "minors-y":
        return groebner_reduced(minors_open_chain(params).binomials, order, trace)
    if source == "minors-x":
        return groebner_reduced(minors_closed_chain(params).binomials, order, trace)
    if source == "toric-i":
        return toric_ideal(scalar_grading(params), order, trace)
    if source == "toric-j":
        return toric_ideal(projective_grading(params), order, trace)
    raise ValueError(f"unknown source {source!r}")


def cmd_groebner(args) -> int:
    params = _params_from_args(args)
    label, order = _resolve_order(args, params)
    gb = _source_basis(args.source, params, order, _trace_fn(args))
    listing = [format_binomial(g) for g in gb.elements]
    if args.format == "text":
        head = (
            f"source={args.source} order={label} elements={len(listing)} "
            f"minimal={'yes' if gb.minimal else 'no'} reduced={'yes' if gb.reduced else 'no'}"
        )
        _emit("\n".join([head] + listing), args.out)
    else:
        _emit(json.dumps({
            "source": args.source, "order": label,
            "minimal": gb.minimal, "reduced": gb.reduced,
            "elements": listing,
        }, indent=2), args.out)
    return 0


def _source_for_oracle(source: str, params: InstanceParams, trace):
    if source == "minors-y":
        return list(minors_open_chain(params).binomials), projective_grading(params)
    if source == "minors-x":
        return list(minors_closed_chain(params).binomials), scalar_grading(params)
    if source == "toric-i":
        grading = scalar_grading(params)
        return list(toric_ideal(grading, trace=trace).elements), grading
    if source == "toric-j":
        grading = projective_grading(params)
        return list(toric_ideal(grading, trace=trace).elements), grading
    raise ValueError(f"unknown source {source!r}")


def cmd_betti(args) -> int:
    params = _params_from_args(args)
    gens, grading = _source_for_oracle(args.source, params, _trace_fn(args))
    degs = betti_degrees(gens, grading)
    items = sorted(degs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    if args.format == "text":
        lines = [f"source={args.source} degrees={len(items)} total={sum(degs.values())}"]
        for d, k in items:
            label = d[0] if len(d) == 1 else d
            lines.append(f"degree {label}: {k}")
        _emit("\n".join(lines), args.out)
    else:
        _emit(json.dumps({
            "source": args.source,
            "degrees": [{"degree": list(d), "count": k} for d, k in items],
            "total": sum(degs.values()),
        }, indent=2), args.out)
    return 0


def cmd_unique(args) -> int:
    params = _params_from_args(args)
    gens, grading = _source_for_oracle(args.source, params, _trace_fn(args))
    unique = has_unique_minimal_system(gens, grading)
    if args.format == "text":
        _emit(
            f"source={args.source} unique minimal binomial system: "
            f"{'yes' if unique else 'no'}",
            args.out,
        )
    else:
        _emit(json.dumps({"source": args.source, "unique": unique}, indent=2), args.out)
    return 0


_HANDLERS = {
    "info": cmd_info,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "groebner": cmd_groebner,
    "betti": cmd_betti,
    "unique": cmd_unique,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line interface: gen, solve, compare, render, export-blp.

Exit codes: 0 success (including unproven exact results), 1 usage error,
2 invalid input, 3 internal invariant violation. Outputs carry no
timestamps, so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import BarpackError
from .exact import export_blp, lower_bound, solve_exact
from .generators import GenSpec, generate, tight_family_forced_pairs
from .model import (
    Instance,
    instance_from_json,
    instance_to_json,
    packing_from_json,
)
from .packers import (
    pack_first_fit,
    pack_forced_first_matching,
    pack_matching,
    pack_result_to_json,
    pack_weighted_matching,
)
from .render import render_svg
from .report import (
    CSV_HEADER,
    ReportRow,
    max_ratio_by_algo,
    row_for_run,
    rows_to_csv,
)

FAMILIES = ("big-nonincreasing", "big", "general", "tight")
ALGOS = ("m", "mw", "ff", "exact")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="barpack",
                     description="Pack two-bar charts into a unit-height strip.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="generate an instance file")
    p_gen.add_argument("--family", required=True, choices=FAMILIES)
    p_gen.add_argument("--n", type=int, help="chart count for random families")
    p_gen.add_argument("--k", type=int, help="size parameter of the tight family")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--denominator", type=int, default=1_000_000)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_solve = sub.add_parser("solve", help="pack one instance")
    p_solve.add_argument("instance")
    p_solve.add_argument("--algo", required=True, choices=ALGOS)
    p_solve.add_argument("--force-first", default=None,
                         help='first-round pairing for --algo mw: "g-r" or "0-2,1-3"')
    p_solve.add_argument("--budget", type=int, default=None,
                         help="node budget for --algo exact")
    p_solve.add_argument("--out", default=None, help="result JSON path")
    p_solve.set_defaults(func=_cmd_solve)

    p_cmp = sub.add_parser("compare", help="run algorithms over an instance set")
    p_cmp.add_argument("instances", nargs="*", help="instance JSON files")
    p_cmp.add_argument("--family", choices=FAMILIES, help="generate a sweep instead")
    p_cmp.add_argument("--n", type=int)
    p_cmp.add_argument("--k", type=int)
    p_cmp.add_argument("--count", type=int, default=1, help="instances in the sweep")
    p_cmp.add_argument("--seed0", type=int, default=0, help="first seed of the sweep")
    p_cmp.add_argument("--denominator", type=int, default=1_000_000)
    p_cmp.add_argument("--algos", default="m,mw", help="comma list from m,mw,ff")
    p_cmp.add_argument("--force-first", default=None)
    p_cmp.add_argument("--oracle", action="store_true", help="add exact OPT per instance")
    p_cmp.add_argument("--budget", type=int, default=None)
    p_cmp.add_argument("--out", default=None, help="CSV path (appends if present)")
    p_cmp.set_defaults(func=_cmd_compare)

    p_render = sub.add_parser("render", help="draw a packing as SVG")
    p_render.add_argument("instance")
    p_render.add_argument("packing", help="packing or result JSON file")
    p_render.add_argument("--out", required=True)
    p_render.set_defaults(func=_cmd_render)

    p_blp = sub.add_parser("export-blp", help="write the boolean model as LP text")
    p_blp.add_argument("instance")
    p_blp.add_argument("--jmax", type=int, default=None,
                       help="cell horizon (default: weighted-matching length)")
    p_blp.add_argument("--out", required=True)
    p_blp.set_defaults(func=_cmd_export_blp)

    return parser


def _load_instance(path: str) -> Instance:
    return instance_from_json(Path(path).read_text())


def _parse_forced(spec: str, inst: Instance) -> list[tuple[int, int]]:
    if spec == "g-r":
        return tight_family_forced_pairs(inst)
    pairs = []
    for part in spec.split(","):
        left, _, right = part.partition("-")
        pairs.append((int(left), int(right)))
    return pairs


def _cmd_gen(args) -> int:
    if args.family == "tight":
        if args.k is None:
            raise BarpackError("--family tight needs --k")
        size = args.k
    else:
        if args.n is None:
            raise BarpackError(f"--family {args.family} needs --n")
        size = args.n
    inst = generate(GenSpec(args.family, size, args.seed, args.denominator))
    Path(args.out).write_text(instance_to_json(inst))
    print(f"wrote {args.out} n={inst.n}")
    return 0


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    if args.force_first is not None and args.algo != "mw":
        raise BarpackError("--force-first only applies to --algo mw")
    if args.algo == "exact":
        budget = args.budget if args.budget is not None else 10 ** 8
        res = solve_exact(inst, budget=budget)
        payload = {"length": res.opt_length,
                   "starts": list(res.packing.starts),
                   "trace": [],
                   "proven": res.proven}
        text = json.dumps(payload, separators=(",", ":"))
        print(f"algo=exact n={inst.n} L={res.opt_length} rounds=0 "
              f"proven={'true' if res.proven else 'false'}")
    else:
        if args.algo == "m":
            result = pack_matching(inst)
        elif args.algo == "ff":
            result = pack_first_fit(inst)
        elif args.force_first is not None:
            result = pack_forced_first_matching(inst, _parse_forced(args.force_first, inst))
        else:
            result = pack_weighted_matching(inst)
        text = pack_result_to_json(result)
        print(f"algo={args.algo} n={inst.n} L={result.length} "
              f"rounds={len(result.trace.rounds)}")
    if args.out:
        Path(args.out).write_text(text)
    return 0


def _compare_worker(payload) -> list[ReportRow]:
    name, inst_json, algos, forced_spec, oracle, budget = payload
    try:
        inst = instance_from_json(inst_json)
    except (BarpackError, ValueError, KeyError, TypeError) as exc:
        return [ReportRow(name, 0, "-", None, None, None, None, None,
                          status=f"error: {exc}")]
    lb = lower_bound(inst)
    opt = None
    rows = []
    if oracle:
        try:
            res = solve_exact(inst, budget=budget if budget is not None else 10 ** 8)
            if res.proven:
                opt = res.opt_length
        except BarpackError as exc:
            rows.append(ReportRow(name, inst.n, "exact", None, None, None,
                                  None, lb, status=f"error: {exc}"))
    for algo in algos:
        try:
            matching_based = True
            if algo == "m":
                result = pack_matching(inst)
                label = "m"
            elif algo == "ff":
                result = pack_first_fit(inst)
                label = "ff"
                matching_based = False
            elif forced_spec is not None:
                result = pack_forced_first_matching(inst, _parse_forced(forced_spec, inst))
                label = "mw-forced"
            else:
                result = pack_weighted_matching(inst)
                label = "mw"
            rows.append(row_for_run(name, inst, label, result, opt, lb,
                                    matching_based=matching_based))
        except BarpackError as exc:
            rows.append(ReportRow(name, inst.n, algo, None, None, None,
                                  opt, lb, status=f"error: {exc}"))
    return rows


def _cmd_compare(args) -> int:
    algos = tuple(a for a in args.algos.split(",") if a)
    for a in algos:
        if a not in ("m", "mw", "ff"):
            raise BarpackError(f"unknown algo {a!r} (compare accepts m, mw, ff)")

    payloads = []
    for path in args.instances:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            text = f"unreadable: {exc}"  # parses as junk -> error row
        payloads.append((Path(path).name, text, algos,
                         args.force_first, args.oracle, args.budget))
    if args.family:
        size = args.k if args.family == "tight" else args.n
        if size is None:
            raise BarpackError("sweep needs --n (or --k for the tight family)")
        for seed in range(args.seed0, args.seed0 + args.count):
            spec = GenSpec(args.family, size, seed, args.denominator)
            name = f"{args.family}-{size}-s{seed}"
            payloads.append((name, instance_to_json(generate(spec)), algos,
                             args.force_first, args.oracle, args.budget))

    threads = int(os.environ.get("BARPACK_THREADS", "1"))
    if threads > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            per_instance = list(pool.map(_compare_worker, payloads))
    else:
        per_instance = [_compare_worker(p) for p in payloads]
    rows = [row for batch in per_instance for row in batch]

    if args.out:
        out = Path(args.out)
        fresh = not out.exists() or out.stat().st_size == 0
        csv_text = rows_to_csv(rows, include_header=fresh)
        if fresh:
            csv_text = "# barpack report v1\n" + csv_text
        with out.open("a") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(CSV_HEADER + "\n" + rows_to_csv(rows, include_header=False))

    for algo, worst in sorted(max_ratio_by_algo(rows).items()):
        print(f"algo={algo} max_ratio={worst:.3f}")
    return 0


def _cmd_render(args) -> int:
    inst = _load_instance(args.instance)
    packing = packing_from_json(Path(args.packing).read_text())
    svg = render_svg(inst, packing)
    Path(args.out).write_text(svg)
    print(f"wrote {args.out}")
    return 0


def _cmd_export_blp(args) -> int:
    inst = _load_instance(args.instance)
    jmax = args.jmax
    if jmax is None:
        jmax = pack_weighted_matching(inst).length
    text = export_blp(inst, jmax)
    Path(args.out).write_text(text)
    print(f"wrote {args.out} jmax={jmax}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BarpackError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"barpack: {exc}", file=sys.stderr)
        return 2
    except AssertionError:
        print("barpack: internal invariant violation", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: enumerate, render, compute, export, batch-verify.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error.
Partitions are written as comma-separated parts (no exponent syntax);
the BLOCKLAB_MAX_N environment variable caps enumeration sizes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import abacus as ab
from . import block as bl
from . import decomp as dc
from .mullineux import mullineux as mullineux_map
from . import pyramid as pyr
from . import subs as sb
from .partitions import (
    check_odd_prime,
    format_partition,
    p_core_weight,
    parse_partition,
    render_young,
)

USAGE_ERROR = 2


class CliError(Exception):
    pass


def _max_n() -> int:
    try:
        return int(os.environ.get("BLOCKLAB_MAX_N", "120"))
    except ValueError:
        return 120


def _out(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_p(args) -> int:
    try:
        return check_odd_prime(args.p)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_core(args) -> int:
    p = _parse_p(args)
    lam = parse_partition(args.partition)
    core, weight = p_core_weight(lam, p)
    a = ab.from_partition(lam, p)
    if args.format == "json":
        payload = {
            "p": p,
            "partition": list(lam),
            "core": list(core),
            "weight": weight,
            "quotient": [list(q) for q in ab.p_quotient(a)],
            "abacus": ab.abacus_json(a),
        }
        _out(args, json.dumps(payload, indent=2, sort_keys=True))
        return 0
    lines = []
    if weight == 0:
        lines.append(f"{format_partition(lam)} is a {p}-core")
    else:
        lines.append(f"partition: {format_partition(lam)}")
        lines.append(f"{p}-core:   {format_partition(core)}   weight: {weight}")
    quotient = ab.p_quotient(a)
    lines.append("quotient:  (" + ", ".join(format_partition(q) for q in quotient) + ")")
    lines.append(ab.render_abacus(a))
    _out(args, "\n".join(lines))
    return 0


def cmd_block(args) -> int:
    p = _parse_p(args)
    core = parse_partition(args.core)
    try:
        cat = bl.enumerate_block(core, p)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        _out(args, json.dumps(bl.block_json(cat), indent=2, sort_keys=True))
        return 0
    lines = [bl.render_block_table(cat), "", pyr.render_pyramid(cat.pyramid)]
    if cat.self_conjugate_core:
        lines.append("")
        for k in range(len(cat.nu)):
            lines.append(
                f"nu_{k + 1} = {format_partition(cat.nu[k])} in d"
                f"{cat.record(cat.nu[k]).partial}   "
                f"mu_{k + 1} = {format_partition(cat.mu[k])} in d"
                f"{cat.record(cat.mu[k]).partial}"
            )
    _out(args, "\n".join(lines))
    return 0


def cmd_subs(args) -> int:
    p = _parse_p(args)
    core = parse_partition(args.core)
    try:
        cat = bl.enumerate_block(core, p)
        m = dc.decomp_matrix(cat)
        subs = sb.build_subs_w2(cat)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    u = sb.subs_to_ubs(subs, cat)
    report = sb.verify_ubs(u, m)
    report = report.merged_with(sb.verify_stability(u, p))
    dm = sb.subs_matrix(subs, m)
    report = report.merged_with(sb.check_w2_pattern(subs, dm))
    verdict = "PASS" if report.passed else "FAIL"
    if args.format == "json":
        payload = {
            "p": p,
            "core": list(core),
            "n": cat.n,
            "delta": cat.delta,
            "members": [list(x) for x in subs.members],
            "psi": [[list(k), list(v)] for k, v in
                    ((r, subs.psi[r]) for r in subs.members)],
            "matrix": dc.matrix_json(dm),
            "passed": report.passed,
            "violations": list(report.violations),
        }
        _out(args, json.dumps(payload, indent=2, sort_keys=True))
        return 0 if report.passed else 1
    lines = [f"basic set for core {format_partition(core)}, p={p}, "
             f"n={cat.n}, delta={cat.delta}"]
    for r in subs.members:
        lines.append(f"  {format_partition(r)}  ->  {format_partition(subs.psi[r])}")
    lines.append("")
    lines.append(dc.render_matrix(dm))
    lines.append(f"verdict: {verdict}")
    if report.violations:
        lines.extend("  " + v for v in report.violations)
    _out(args, "\n".join(lines))
    return 0 if report.passed else 1


def _verify_task(task):
    p, core = task
    report = sb.check_self_conjugate_block(core, p)
    return {
        "passed": report.passed,
        "violations": list(report.violations),
        **report.context,
    }


def cmd_verify(args) -> int:
    try:
        primes = sorted({check_odd_prime(int(x)) for x in args.primes.split(",")})
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.max_core_rank < 0:
        raise CliError("--max-core-rank must be non-negative")
    tasks = []
    for p in primes:
        for core in ab.self_conjugate_p_cores_up_to(p, args.max_core_rank):
            tasks.append((p, core))
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_task, tasks))
    else:
        results = [_verify_task(t) for t in tasks]
    passed = all(r["passed"] for r in results)
    if args.format == "json":
        payload = {
            "primes": primes,
            "max_core_rank": args.max_core_rank,
            "blocks": results,
            "passed": passed,
        }
        _out(args, json.dumps(payload, indent=2, sort_keys=True))
        return 0 if passed else 1
    lines = []
    for r in results:
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append(
            f"{mark}  p={r['p']}  core={format_partition(tuple(r['core']))}"
            f"  n={r['n']}  delta={r['delta']}"
        )
        lines.extend("      " + v for v in r["violations"])
    lines.append(
        f"{'PASS' if passed else 'FAIL'}: {len(results)} blocks checked "
        f"(p in {{{','.join(str(q) for q in primes)}}}, core rank <= "
        f"{args.max_core_rank})"
    )
    _out(args, "\n".join(lines))
    return 0 if passed else 1


def cmd_mull(args) -> int:
    p = _parse_p(args)
    lam = parse_partition(args.partition)
    try:
        image = mullineux_map(lam, p)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        _out(args, json.dumps({"input": list(lam), "image": list(image)}))
    else:
        _out(args, format_partition(image))
    return 0


def cmd_matrix(args) -> int:
    p = _parse_p(args)
    if (args.core is None) == (args.n is None):
        raise CliError("matrix needs exactly one of --core or --n")
    try:
        if args.core is not None:
            core = parse_partition(args.core)
            m = dc.decomp_matrix(bl.enumerate_block(core, p))
        else:
            if args.n > _max_n():
                raise CliError(f"n={args.n} exceeds BLOCKLAB_MAX_N={_max_n()}")
            m = dc.full_matrix(args.n, p, bound=_max_n())
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        _out(args, json.dumps(dc.matrix_json(m), sort_keys=True))
    elif args.format == "csv":
        _out(args, dc.matrix_csv(m))
    else:
        _out(args, dc.render_matrix(m))
    return 0


def cmd_young(args) -> int:
    lam = parse_partition(args.partition)
    _out(args, render_young(lam))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blocklab",
        description="combinatorics of symmetric-group blocks of weight 2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("text", "json")):
        sp.add_argument("--format", choices=fmt, default="text")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("core", help="p-core, weight, quotient, abacus drawing")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--partition", required=True)
    common(sp)
    sp.set_defaults(func=cmd_core)

    sp = sub.add_parser("block", help="weight-2 block catalog over a core")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--core", required=True)
    common(sp)
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("subs", help="basic set of a self-conjugate block + verdict")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--core", required=True)
    common(sp)
    sp.set_defaults(func=cmd_subs)

    sp = sub.add_parser("verify", help="sweep self-conjugate cores and verify")
    sp.add_argument("--primes", default="3,5,7,11")
    sp.add_argument("--max-core-rank", type=int, default=40)
    sp.add_argument("--jobs", type=int, default=1,
                    help="0 means one worker per cpu")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mull", help="Mullineux image of a p-regular partition")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--partition", required=True)
    common(sp)
    sp.set_defaults(func=cmd_mull)

    sp = sub.add_parser("matrix", help="decomposition matrix of a block or of n")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--core", default=None)
    sp.add_argument("--n", type=int, default=None)
    common(sp, fmt=("text", "json", "csv"))
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("young", help="render a Young diagram")
    sp.add_argument("--partition", required=True)
    common(sp)
    sp.set_defaults(func=cmd_young)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

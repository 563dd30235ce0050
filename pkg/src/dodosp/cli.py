"""Command-line interface.

Exit codes: 0 success/feasible, 1 infeasible or invalid, 2 unreadable input
or usage error, 3 undecided (hard instance above the brute-force limit).
"""

from __future__ import annotations

import argparse
import sys

from . import certify, files, optimize, oracle, reduction, solver
from .core import (
    DodospError,
    InvalidInstance,
    ScheduleShapeError,
    SizeLimitExceeded,
    check_schedule,
    classify_instance,
)

OK, INFEASIBLE, BAD_INPUT, UNDECIDED = 0, 1, 2, 3


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _instance(path, need_workers=True):
    inst = files.instance_from_json(path)
    if need_workers and inst.workers is None:
        raise files.FormatError("this command needs 'workers' in the instance file")
    return inst


def cmd_validate(args) -> int:
    inst = _instance(args.instance, need_workers=False)
    b = inst.bounds
    print(f"valid instance: D={inst.days}, N={inst.workers}")
    print("bounds: " + ", ".join(f"{k}={v}" for k, v in b.as_dict().items()))
    print(f"class: {classify_instance(inst).value}")
    return OK


def cmd_solve(args) -> int:
    inst = _instance(args.instance)
    res = solver.solve(inst, limit=args.limit)
    print(f"# method: {res.method.value}", file=sys.stderr)
    if res.status == solver.UNDECIDED:
        print(f"undecided: {res.detail}", file=sys.stderr)
        return UNDECIDED
    if not res.feasible:
        print("infeasible")
        if res.witness is not None:
            print("negative cycle in the constraint graph:")
            for line in res.witness_lines():
                print("  " + line)
        elif res.detail:
            print(res.detail)
        return INFEASIBLE
    fmt = args.format
    if fmt == "compact" and res.schedule.intervals is None:
        print("# schedule is not cyclic-interval shaped; writing dense rows", file=sys.stderr)
        fmt = "dense"
    _emit(files.dump(files.schedule_to_json(res.schedule, fmt)), args.output)
    return OK


def cmd_check(args) -> int:
    inst = _instance(args.instance)
    sched = files.schedule_from_json(args.schedule)
    report = check_schedule(inst, sched)
    if report.feasible:
        print("feasible")
        return OK
    print(f"infeasible: {len(report.violations)} violation(s)")
    for v in report.violations:
        print(f"  {v}")
    return INFEASIBLE


def cmd_certify(args) -> int:
    inst = _instance(args.instance)
    if args.schedule:
        sched = files.schedule_from_json(args.schedule)
        report = check_schedule(inst, sched)
        if not report.feasible:
            print("schedule is infeasible; no certificate", file=sys.stderr)
            for v in report.violations:
                print(f"  {v}", file=sys.stderr)
            return INFEASIBLE
    else:
        res = solver.solve(inst, limit=args.limit)
        if res.status == solver.UNDECIDED:
            print(f"undecided: {res.detail}", file=sys.stderr)
            return UNDECIDED
        if not res.feasible:
            print("instance is infeasible; no certificate", file=sys.stderr)
            return INFEASIBLE
        sched = res.schedule
    cert = certify.schedule_to_flow(inst, sched)
    _emit(files.dump(files.certificate_to_json(cert)), args.output)
    return OK


def cmd_verify(args) -> int:
    inst = _instance(args.instance)
    cert = files.certificate_from_json(args.certificate, inst.days)
    try:
        problems = certify.certificate_violations(inst, cert)
    except certify.CertificateStructureError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return BAD_INPUT
    if not problems:
        print("certificate valid")
        return OK
    print("certificate invalid")
    for p in problems:
        print(f"  {p}")
    return INFEASIBLE


def cmd_generate(args) -> int:
    tp = files.three_partition_from_json(args.from_3partition)
    variant = reduction.ReductionVariant(args.variant)
    inst = reduction.encode_exact(tp, variant) if variant.exact else reduction.encode_onesided(tp, variant)
    _emit(files.dump(files.instance_to_json(inst)), args.output)
    return OK


def cmd_optimize_bound(args) -> int:
    inst = _instance(args.instance)
    target = optimize.BoundTarget(args.target)
    try:
        value = optimize.optimize_bound(inst, target, limit=args.limit)
    except SizeLimitExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED
    if value is None:
        print(f"{args.target}: no feasible value")
        return INFEASIBLE
    print(f"{args.target} = {value} ({target.direction}d)")
    return OK


def cmd_optimize_workers(args) -> int:
    inst = _instance(args.instance, need_workers=False)
    try:
        res = optimize.minimize_workers(inst)
    except ValueError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED
    for n, cls in res.probes:
        print(f"# N={n}: {cls.value}", file=sys.stderr)
    if res.workers is None:
        print(res.classification.value)
        if res.witness is not None:
            graph = optimize.potential_graph(inst)
            print("last negative cycle:")
            for line in res.witness.describe(graph):
                print("  " + line)
        return INFEASIBLE
    print(f"minimal N = {res.workers}")
    return OK


def cmd_brute(args) -> int:
    inst = _instance(args.instance)
    try:
        out = oracle.brute_force(inst, args.mode, limit=args.limit, symmetric=args.symmetric)
    except SizeLimitExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED
    if args.mode == "decide":
        print("feasible" if out else "infeasible")
        return OK if out else INFEASIBLE
    if args.mode == "find_one":
        if out is None:
            print("infeasible")
            return INFEASIBLE
        print(files.dump(files.schedule_to_json(out)))
        return OK
    print(files.dump([s.rows() for s in out]))
    print(f"# {len(out)} schedule(s)", file=sys.stderr)
    return OK if out else INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dodosp", description="Days-on/days-off scheduling toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    def limit_arg(sp):
        sp.add_argument(
            "--limit",
            type=int,
            default=oracle.DEFAULT_LIMIT,
            help="largest N*D handed to brute force (default %(default)s)",
        )

    sp = sub.add_parser("validate", help="parse an instance and report its complexity class")
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("solve", help="find a schedule or an infeasibility witness")
    sp.add_argument("instance")
    sp.add_argument("--format", choices=("dense", "compact"), default="compact")
    sp.add_argument("-o", "--output")
    limit_arg(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("check", help="list every constraint a schedule violates")
    sp.add_argument("instance")
    sp.add_argument("schedule")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("certify", help="write a flow certificate for a schedule (solving first if none given)")
    sp.add_argument("instance")
    sp.add_argument("--schedule")
    sp.add_argument("-o", "--output")
    limit_arg(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("verify", help="verify a flow certificate")
    sp.add_argument("instance")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="build a hard instance from a 3-partition input")
    sp.add_argument("--from-3partition", required=True, metavar="FILE")
    sp.add_argument(
        "--variant", choices=[v.value for v in reduction.ReductionVariant], default="UW_LW"
    )
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("optimize-bound", help="tightest feasible value of one bound")
    sp.add_argument("instance")
    sp.add_argument("--target", required=True, choices=optimize.UPPER + optimize.LOWER)
    limit_arg(sp)
    sp.set_defaults(func=cmd_optimize_bound)

    sp = sub.add_parser("optimize-workers", help="smallest worker count admitting a schedule")
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_optimize_workers)

    sp = sub.add_parser("brute", help="exhaustive search on a small instance")
    sp.add_argument("instance")
    sp.add_argument("--mode", choices=oracle.MODES, default="decide")
    sp.add_argument("--symmetric", action="store_true", help="list schedules up to worker order")
    limit_arg(sp)
    sp.set_defaults(func=cmd_brute)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (files.FormatError, InvalidInstance, ScheduleShapeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except DodospError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

    finchar run JOB.json [--out report.json]
    finchar verify JOB.json
    finchar components --group GL_3 --order 2 --numerators 1,1,0 --lambda 1,0,0
    finchar char ...
    finchar asymptote ...

Exit status: 0 when every requested check passes, 1 on a verification
failure, 2 on a usage or job error, 3 when a resource cap is hit.
"""
from __future__ import annotations

import argparse
import sys
import time

from .jobs import (Job, JobError, dumps_report, load_job, parse_job, report_passed, run_job,
                   summarize, with_overrides)
from .rootdata import CapExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

SUBCOMMAND_TASKS = {
    "run": None,
    "verify": ("verify",),
    "components": ("components", "counting"),
    "char": ("character",),
    "asymptote": ("asymptotics",),
}


def _int_csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _n_range(text: str) -> list[int]:
    lo, sep, hi = text.partition(":")
    try:
        return [int(lo), int(hi)] if sep else [int(lo), int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finchar",
        description="Characters of reductive groups at finite-order torus elements, "
                    "computed from fixed loci of flag varieties and checked against "
                    "weight multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMAND_TASKS:
        p = sub.add_parser(name)
        p.add_argument("job", nargs="?", help="job file (JSON); '-' reads standard input")
        inline = p.add_argument_group("inline job (used when no job file is given)")
        inline.add_argument("--group", help="group name, e.g. SL_2, GL_3, Sp_4, G2")
        inline.add_argument("--order", type=int, default=1, help="order r of t")
        inline.add_argument("--numerators", type=_int_csv,
                            help="t = exp(2 pi i k / r) for these k (default: identity)")
        inline.add_argument("--lambda", dest="lam", type=_int_csv, help="dominant weight")
        inline.add_argument("--parabolic", default="auto",
                            help="'auto', 'borel', or comma-separated 1-based Levi simples")
        inline.add_argument("--n-range", type=_n_range, help="N or LO:HI for the character table")
        p.add_argument("--out", help="write the full JSON report here")
        p.add_argument("--seed", type=int, help="seed for the perturbed cocharacter")
        p.add_argument("--max-weyl", type=int, help="cap on the Weyl group order")
        p.add_argument("--max-weights", type=int, help="cap on weight-orbit pairs in the oracle")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for residue classes")
    return parser


def _job_from_args(args) -> Job:
    if args.job:
        text = sys.stdin.read() if args.job == "-" else open(args.job, encoding="utf-8").read()
        job = load_job(text)
    else:
        if not args.group or args.lam is None:
            raise JobError("give a job file or at least --group and --lambda")
        data = {"group": args.group, "lambda": args.lam}
        if args.numerators is not None:
            data["t"] = {"order": args.order, "numerators": args.numerators}
        if args.parabolic not in ("auto", "borel"):
            data["parabolic"] = _int_csv(args.parabolic)
        else:
            data["parabolic"] = args.parabolic
        if args.n_range:
            data["n_range"] = args.n_range
        if SUBCOMMAND_TASKS[args.command] is None:
            data["tasks"] = ["components", "character"]
        job = parse_job(data)
    tasks = SUBCOMMAND_TASKS[args.command]
    if tasks == ("verify",):
        tasks = tuple(job.tasks) + ("counting", "verify")
    return with_overrides(job, tasks=tasks, seed=args.seed, max_weyl=args.max_weyl,
                          max_weights=args.max_weights)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = _job_from_args(args)
    except (JobError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = run_job(job, workers=max(1, args.jobs))
    except CapExceeded as exc:
        print(f"error: resource cap {exc.cap_name} = {exc.cap} exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    elapsed = time.perf_counter() - start
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps_report(report))
    for line in summarize(report):
        print(line)
    ok = report_passed(report)
    print(f"{'PASS' if ok else 'FAIL'} in {elapsed:.2f}s")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

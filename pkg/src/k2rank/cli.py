"""Command line front end.

Exit codes: 0 success, 1 usage or domain error, 2 invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .classify import classify
from .criteria import FastPath, check_p, class_group_for, split_generator
from .errors import DomainError, InvariantViolation, K2RankError
from .report import TABLE1_KEYS, TABLE2_KEYS, density_series, enumerate_omega, tabulate


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    p_list: tuple[int, ...]
    limit: int = 10**6
    format: str = "csv"
    out: str | None = None
    jobs: int = 1
    fast_path: FastPath = FastPath.OFF

    def __post_init__(self):
        if not self.p_list:
            raise UsageError("at least one p is required")
        for p in self.p_list:
            check_p(p)
        if self.limit < 2:
            raise DomainError(f"--limit must be >= 2, got {self.limit}")
        if self.jobs < 1:
            raise DomainError(f"--jobs must be >= 1, got {self.jobs}")


def _p_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(tok) for tok in text.split(",") if tok.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, metavar="J")
    common.add_argument(
        "--fast-path", choices=[m.value for m in FastPath], default=FastPath.OFF.value,
        help="off: brute-force scans; on: class-group route; verify: both, error on disagreement",
    )

    parser = _Parser(prog="k2rank", description="4-rank tuples of K2 and their densities over Omega(p).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cmd = sub.add_parser("omega", parents=[common], help="list the members of Omega(p) up to N")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--limit", type=int, required=True)

    cmd = sub.add_parser("classify", parents=[common], help="classify one prime l")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--l", type=int, required=True)

    for name in ("table1", "table2"):
        cmd = sub.add_parser(name, parents=[common], help=f"{name} counts for one or more p")
        cmd.add_argument("--p", type=_p_list, required=True, metavar="P[,P...]")
        cmd.add_argument("--limit", type=int, required=True)

    cmd = sub.add_parser("densities", parents=[common], help="cumulative density series")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--limit", type=int, required=True)
    cmd.add_argument("--checkpoints", type=int, default=10)

    cmd = sub.add_parser("classgroup", parents=[common], help="reduced forms of discriminant -8p")
    cmd.add_argument("--p", type=int, required=True)

    cmd = sub.add_parser("splitgen", parents=[common], help="smallest solution of a^2 - 2b^2 = -p")
    cmd.add_argument("--p", type=int, required=True)
    return parser


def _config(args) -> RunConfig:
    p = args.p if isinstance(args.p, tuple) else (args.p,)
    return RunConfig(
        p_list=p,
        limit=args.limit if getattr(args, "limit", None) is not None else 10**6,
        format=args.format,
        out=args.out,
        jobs=args.jobs,
        fast_path=FastPath(args.fast_path),
    )


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _report_json(report, keys) -> dict:
    counts = report.counts()
    fractions = report.fractions()
    return {
        "p": report.p,
        "limit": report.limit,
        "omega": report.omega_count,
        "counts": {k: counts[k] for k in keys},
        "fractions": {k: fractions[k] for k in keys},
    }


def _render(args, cfg: RunConfig) -> str:
    cmd = args.command
    fmt = cfg.format
    p = cfg.p_list[0]

    if cmd == "omega":
        omega = enumerate_omega(p, cfg.limit)
        if fmt == "json":
            return _json({"p": p, "limit": cfg.limit, "count": len(omega), "members": list(omega.members)})
        return _csv(["p", "l"], ([p, l] for l in omega.members))

    if cmd == "classify":
        rec = classify(args.l, p, class_group_for(p), cfg.fast_path)
        d = rec.to_dict()
        if fmt == "json":
            return _json(d)
        header = ["l", "p", "sat_1_32", "quartic", "l_mod_16", "case", "upsilon", "mu", "sigma", "tau"]
        row = [d["l"], d["p"], int(d["sat_1_32"]), d["quartic"], d["l_mod_16"], d["case"], *d["tuple"]]
        return _csv(header, [row])

    if cmd in ("table1", "table2"):
        keys = TABLE1_KEYS if cmd == "table1" else TABLE2_KEYS
        reports = [tabulate(q, cfg.limit, cfg.jobs, cfg.fast_path) for q in cfg.p_list]
        if fmt == "json":
            return _json([_report_json(r, keys) for r in reports])
        rows = ([r.p, r.limit, r.omega_count, *(r.counts()[k] for k in keys)] for r in reports)
        return _csv(["p", "limit", "omega", *keys], rows)

    if cmd == "densities":
        series = density_series(p, cfg.limit, args.checkpoints, cfg.jobs, cfg.fast_path)
        keys = TABLE1_KEYS + TABLE2_KEYS
        if fmt == "json":
            return _json([_report_json(r, keys) for r in series])
        rows = ([r.p, r.limit, r.omega_count, *(r.counts()[k] for k in keys)] for r in series)
        return _csv(["p", "n", "omega", *keys], rows)

    if cmd == "classgroup":
        cg = class_group_for(p)
        if fmt == "json":
            return _json({"p": p, "disc": cg.disc, "h": cg.h, "forms": [list(f.as_tuple()) for f in cg.forms]})
        return _csv(["disc", "a", "b", "c"], ([cg.disc, *f.as_tuple()] for f in cg.forms))

    if cmd == "splitgen":
        sg = split_generator(p)
        if fmt == "json":
            return _json({"p": p, "a": sg.a, "b": sg.b})
        return _csv(["p", "a", "b"], [[p, sg.a, sg.b]])

    raise UsageError(f"unknown command {cmd}")


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        text = _render(args, cfg)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except K2RankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())

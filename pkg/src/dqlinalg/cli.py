"""Command line interface: ``dqlinalg {eig,svd,norm,check,gen,verify}``.

Exit codes: 0 success / inequality holds, 1 inequality violated,
2 usage, parse or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators as gen
from .decompositions import dq_hermitian_eig, dq_svd, spectral_norm
from .dual_scalar import DualNumber
from .errors import DQError
from .inequalities import (
    cauchy_schwarz_check,
    hermitian_part_vs_singular,
    hermitian_trace_check,
    hoffman_wielandt_hermitian,
    hoffman_wielandt_singular,
    ky_fan_all,
    ky_fan_partial_trace_check,
    von_neumann_check,
)
from .io import read_dqm, write_dqm
from .matrix import DQMatrix, DQVector, frobenius_norm
from .rng import stream
from .verify import DEFAULT_SEED, DEFAULT_TRIALS, run_suite

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR = 0, 1, 2

CHECKS = ("vn", "vn-herm", "hw", "hw-herm", "kyfan", "lem43", "cauchy")
NEEDS_B = {"vn", "vn-herm", "hw", "hw-herm", "cauchy"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _pair(d: DualNumber) -> list[float]:
    return [d.st, d.in_]


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dqlinalg", description="Dual quaternion matrix decompositions and inequality checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, tol=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if tol:
            sp.add_argument("--cluster-tol", type=float, default=None, help="merge standard-part gaps up to this size")

    sp = sub.add_parser("eig", help="eigenvalues of a Hermitian matrix")
    sp.add_argument("file")
    common(sp)

    sp = sub.add_parser("svd", help="dual singular values with appreciable rank r and rank t")
    sp.add_argument("file")
    common(sp)

    sp = sub.add_parser("norm", help="Frobenius or spectral norm")
    sp.add_argument("file")
    sp.add_argument("--kind", choices=("fro", "spec"), default="fro")
    common(sp)

    sp = sub.add_parser("check", help="evaluate one inequality")
    sp.add_argument("name", choices=CHECKS)
    sp.add_argument("file_a")
    sp.add_argument("file_b", nargs="?")
    sp.add_argument("--k", type=int, default=None, help="kyfan: number of leading terms (default: all)")
    common(sp, tol=False)

    sp = sub.add_parser("gen", help="write seeded random matrices")
    sp.add_argument("out", nargs="+", help="output path(s); pair kinds need two")
    sp.add_argument("--kind", choices=gen.KINDS, default="general")
    sp.add_argument("--m", type=int, default=4)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = sub.add_parser("verify", help="run the randomized verification suite")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sp.add_argument("--m", type=int, default=16, help="largest matrix dimension drawn")
    sp.add_argument("--n", type=int, default=None, help=argparse.SUPPRESS)
    sp.add_argument("--criteria", type=int, nargs="+", default=None, help="subset of criteria 1-10")
    sp.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    common(sp, tol=False)
    return p


def _cmd_eig(args, out) -> int:
    e = dq_hermitian_eig(read_dqm(args.file), args.cluster_tol)
    if args.json:
        json.dump({"lambdas": [_pair(x) for x in e.lambdas]}, out)
        out.write("\n")
    else:
        out.write(" ".join(str(x) for x in e.lambdas) + "\n")
    return EXIT_OK


def _cmd_svd(args, out) -> int:
    d = dq_svd(read_dqm(args.file), args.cluster_tol)
    if args.json:
        json.dump({"sigmas": [_pair(x) for x in d.sigmas], "r": d.appreciable_rank, "t": d.rank, "s": d.s}, out)
        out.write("\n")
    else:
        out.write(" ".join(str(x) for x in d.sigmas) + f"; r={d.appreciable_rank} t={d.rank} s={d.s}\n")
    return EXIT_OK


def _cmd_norm(args, out) -> int:
    a = read_dqm(args.file)
    value = spectral_norm(a, args.cluster_tol) if args.kind == "spec" else frobenius_norm(a)
    if args.json:
        json.dump({"kind": args.kind, "norm": _pair(value)}, out)
        out.write("\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _as_vector(a: DQMatrix) -> DQVector:
    m, n = a.shape
    return DQVector(a.st.reshape(m * n, 4), a.in_.reshape(m * n, 4))


def _cmd_check(args, out) -> int:
    a = read_dqm(args.file_a)
    if args.name in NEEDS_B:
        if args.file_b is None:
            raise _UsageError(f"check {args.name} needs two matrix files")
        b = read_dqm(args.file_b)
    name = args.name
    if name == "vn":
        reports = [von_neumann_check(a, b)]
    elif name == "vn-herm":
        reports = [hermitian_trace_check(a, b)]
    elif name == "hw":
        reports = [hoffman_wielandt_singular(a, b)]
    elif name == "hw-herm":
        reports = [hoffman_wielandt_hermitian(a, b)]
    elif name == "kyfan":
        reports = ky_fan_all(a) if args.k is None else [ky_fan_partial_trace_check(a, args.k)]
    elif name == "lem43":
        reports = hermitian_part_vs_singular(a)
    else:
        reports = [cauchy_schwarz_check(_as_vector(a), _as_vector(b))]

    condition = all(r.condition_met for r in reports)
    holds = all(r.holds for r in reports)
    code = EXIT_ERROR if not condition else (EXIT_OK if holds else EXIT_VIOLATED)
    worst = min((r.slack for r in reports), key=lambda s: (s.st, s.in_))
    if args.json:
        json.dump(
            {
                "command": " ".join(["check", name]),
                "instances": len(reports),
                "passed": holds and condition,
                "worst_slack": _pair(worst),
                "checks": [r.as_dict() for r in reports],
            },
            out,
        )
        out.write("\n")
    else:
        for r in reports:
            flag = "holds" if r.holds else "VIOLATED"
            if not r.condition_met:
                flag += " (condition not met: " + r.note + ")"
            out.write(f"{r.name}: lhs={r.lhs} rhs={r.rhs} slack={r.slack} {flag}\n")
        verdict = {EXIT_OK: "PASS", EXIT_VIOLATED: "FAIL", EXIT_ERROR: "CONDITION NOT MET"}[code]
        out.write(f"check {name}: {verdict}; worst slack {worst}\n")
    return code


def _cmd_gen(args, out) -> int:
    n = args.m if args.n is None else args.n
    if args.m < 1 or n < 1:
        raise _UsageError("--m and --n must be positive")
    pair = args.kind in gen.PAIR_KINDS
    if len(args.out) != (2 if pair else 1):
        raise _UsageError(f"kind {args.kind} writes {2 if pair else 1} file(s), got {len(args.out)} path(s)")
    if pair and n != args.m:
        raise _UsageError(f"kind {args.kind} produces square matrices; drop --n or set it to --m")
    rs = stream(args.seed, 100 + gen.KINDS.index(args.kind))
    mats = gen.generate(args.kind, rs, args.m, n)
    for i, (path, mat) in enumerate(zip(args.out, mats)):
        label = f" ({'AB'[i]})" if pair else ""
        write_dqm(mat, path, f"kind={args.kind}{label} m={mat.rows} n={mat.cols} seed={args.seed}")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be at least 1")
    if args.m < 1:
        raise _UsageError("--m must be at least 1")
    max_size = args.m if args.n is None else max(args.m, args.n)
    progress = None if args.json else (lambda r: (out.write(r.line() + "\n"), out.flush()))
    try:
        report = run_suite(args.seed, args.trials, max_size, args.criteria, args.inject_failure, progress=progress)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.json:
        json.dump(report.as_dict(), out)
        out.write("\n")
    else:
        out.write(report.lines()[-1] + "\n")
    return EXIT_OK if report.passed else EXIT_VIOLATED


COMMANDS = {
    "eig": _cmd_eig,
    "svd": _cmd_svd,
    "norm": _cmd_norm,
    "check": _cmd_check,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_ERROR
    except (DQError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

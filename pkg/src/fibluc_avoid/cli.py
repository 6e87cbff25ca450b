"""Command-line front end.

Exit codes: 0 every requested check passed, 1 a verification failed,
2 invalid input, 3 a resource limit was hit.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import builtins
from .certificate import AvoidanceCertificate, verify_certificate
from .covering import CoveringSystem, is_covering
from .errors import InvalidModulusError, ResourceLimitError
from .primality import PrimalityPolicy
from .repsets import AvoiderSet, check_progression, enumerate_avoiders, rep_counts
from .sequences import SequenceKind, chi, residue_table

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
THREADS_ENV = "FIBLUC_THREADS"


class InputError(Exception):
    pass


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_covering(args) -> CoveringSystem:
    if args.builtin:
        try:
            return builtins.builtin_covering(args.builtin)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    try:
        return CoveringSystem.from_json(_load_json(args.file))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad covering system JSON: {exc}") from exc


def _load_certificate(args) -> AvoidanceCertificate:
    if args.builtin:
        try:
            return builtins.builtin_certificate(args.builtin)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    try:
        return AvoidanceCertificate.from_json(_load_json(args.file))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad certificate JSON: {exc}") from exc


def cmd_verify_covering(args) -> int:
    system = _load_covering(args)
    report = is_covering(system)
    if args.json:
        _dump({"name": system.name, "classes": len(system), **report.to_json()})
    else:
        print(f"classes: {len(system)}")
        print(f"lcm: {report.lcm}")
        print(f"covers: {'yes' if report.covers else 'no'}")
        if report.uncovered_witness is not None:
            print(f"uncovered witness: {report.uncovered_witness}")
        print(f"multiplicity: min {report.multiplicity_min}, max {report.multiplicity_max}")
        if report.duplicates:
            print("duplicate classes: " + ", ".join(map(str, report.duplicates)))
        if report.has_trivial_class:
            print("note: contains a modulus-1 class")
    return EXIT_OK if report.covers else EXIT_FAILED


def cmd_verify_certificate(args) -> int:
    cert = _load_certificate(args)
    report = verify_certificate(cert)
    if args.json:
        _dump(report.to_json(verbose=args.verbose))
    else:
        print(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.ok else EXIT_FAILED


def _modulus(args) -> tuple[SequenceKind, int]:
    try:
        kind = SequenceKind.parse(args.kind)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.modulus < 2:
        raise InputError(f"modulus must be >= 2, got {args.modulus}")
    return kind, args.modulus


def cmd_chi(args) -> int:
    kind, d = _modulus(args)
    print(chi(kind, d))
    return EXIT_OK


def cmd_table(args) -> int:
    kind, d = _modulus(args)
    table = residue_table(kind, d)
    if args.json:
        _dump({"kind": kind.value, "modulus": str(d), "period": len(table), "residues": table})
    else:
        for i, r in enumerate(table, 1):
            print(f"{i}\t{r}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        which = AvoiderSet.parse(args.set)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.limit < 2:
        raise InputError("limit must be >= 2")
    if args.out is None:
        count = enumerate_avoiders(which, args.limit, threads=args.threads)
        print(f"count {count}")
        return EXIT_OK
    handle = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n"])
        count = enumerate_avoiders(which, args.limit, sink=lambda n: writer.writerow([n]), threads=args.threads)
    finally:
        if handle is not sys.stdout:
            handle.close()
    print(f"count {count}", file=sys.stderr)
    return EXIT_OK


def cmd_rep(args) -> int:
    if args.n < 2:
        raise InputError("n must be >= 2")
    counts = rep_counts(args.n)
    if args.json:
        _dump({"n": str(args.n), "r_f": counts.r_f, "r_l": counts.r_l})
    else:
        print(f"r_f={counts.r_f} r_l={counts.r_l}")
    return EXIT_OK


def cmd_check_progression(args) -> int:
    if args.builtin:
        cert = _load_certificate(args)
        report = verify_certificate(cert)
        if report.progression is None:
            print(report.to_text(), file=sys.stderr)
            return EXIT_FAILED
        step, offset = report.progression.step, report.progression.offset
        which = AvoiderSet.parse(args.set or cert.target_set())
    else:
        if args.step is None or args.offset is None:
            raise InputError("give --builtin or both --step and --offset")
        step, offset = args.step, args.offset
        which = AvoiderSet.parse(args.set or "B")
    if step < 1 or not 0 <= offset < step:
        raise InputError("need step >= 1 and 0 <= offset < step")

    every = max(1, args.report_every)

    def progress(k, n):
        if not args.json and k % every == 0:
            print(f"k={k} ok", file=sys.stderr)

    policy = PrimalityPolicy(extra_rounds=args.rounds)
    result = check_progression(step, offset, which, args.kmax, policy, progress)
    if args.json:
        _dump({"S": str(step), "T": str(offset), "set": which.value, "k_max": args.kmax,
               **result.to_json(timing=False)})
    else:
        print(f"S = {step}")
        print(f"T = {offset}")
        if result.ok:
            print(f"all {result.checked} terms lie in {which.value} ({result.seconds:.2f}s)")
        else:
            print(f"failure at k={result.first_failure}: {result.reason}")
    return EXIT_OK if result.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibluc-avoid", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=int(os.environ.get(THREADS_ENV, "1")),
                        help=f"worker threads (default from ${THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify a covering system or a certificate")
    vsub = verify.add_subparsers(dest="what", required=True)
    for name, func, choices in (("covering", cmd_verify_covering, builtins.COVERING_SYSTEMS),
                                ("certificate", cmd_verify_certificate, builtins.CERTIFICATES)):
        p = vsub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", choices=sorted(choices))
        src.add_argument("--file")
        p.add_argument("--json", action="store_true")
        p.add_argument("--verbose", action="store_true")
        p.set_defaults(func=func)

    for name, func in (("chi", cmd_chi), ("table", cmd_table)):
        p = sub.add_parser(name)
        p.add_argument("--kind", required=True, help="fib or lucas")
        p.add_argument("--modulus", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", help="count (and optionally list) avoiders below a limit")
    p.add_argument("--set", default="B", help="B, B_f or B_l")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--out", help="CSV destination, '-' for stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rep", help="print r_f(n) and r_l(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("check-progression", help="test S*k + T for k = 0..kmax directly")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", choices=sorted(builtins.CERTIFICATES))
    src.add_argument("--file")
    p.add_argument("--step", type=int)
    p.add_argument("--offset", type=int)
    p.add_argument("--set", help="B, B_f or B_l (default: the certificate's target)")
    p.add_argument("--kmax", type=int, default=100)
    p.add_argument("--rounds", type=int, default=0, help="extra random Miller-Rabin rounds above 2**64")
    p.add_argument("--report-every", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_progression)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, InvalidModulusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())

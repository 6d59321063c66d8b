"""Command-line front end.

Subcommands: decompose, verify, check-range, stats, selftest.
Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from collections import Counter

from . import backend, oracle
from .blocks import COMPLEMENT_TABLE, complement, double_block, power_palindrome
from .decomposer import (
    AMOUNTS,
    ConstructionError,
    Decomposition,
    Trace,
    decompose,
    select_total,
    verify,
)
from .digits import ZERO, DigitString, InputFormatError

SCHEMA_VERSION = "1"
DEFAULT_MAX_DIGITS = 10**6

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# -- certificate serialization -----------------------------------------------


def _class_json(cls):
    return {"length": cls.length, "shift": cls.shift, "digit": cls.digit}


def _sparse_json(terms):
    if terms is None:
        return None
    return {
        "budget": terms.budget,
        "ones_digit": terms.ones_digit,
        "terms": [[j, d] for j, d in terms.terms],
    }


def _trace_json(trace):
    if trace is None:
        return None
    doc = {"path": trace.path}
    if trace.path == "small":
        doc["small_terms"] = _sparse_json(trace.small_terms)
        return doc
    red = trace.reduce
    doc["reduce"] = {
        "case": red.case,
        "m": red.m,
        "a": red.a,
        "b": red.b,
        "class": _class_json(red.cls),
    }
    doc["passages"] = [
        {
            "step": rec.step,
            "total": rec.total,
            "amounts": list(rec.amounts),
            "spread": rec.spread,
            "pairs": [[t, u] for t, u in rec.pairs],
            "class_before": _class_json(rec.class_before),
            "class_after": _class_json(rec.class_after),
        }
        for rec in trace.passages
    ]
    doc["tail"] = _sparse_json(trace.tail)
    doc["chains"] = [
        {"a": list(c.a_digits), "b": list(c.b_digits)} for c in trace.chains
    ]
    return doc


def certificate(decomposition: Decomposition, checked: bool) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": str(decomposition.value),
        "palindromes": [str(p) for p in decomposition.parts],
        "trace": _trace_json(decomposition.trace),
        "checked": checked,
    }


# -- decompose ----------------------------------------------------------------


def _cmd_decompose(args) -> int:
    text = args.number
    if len(text) > args.max_digits:
        print(f"error: input longer than {args.max_digits} digits", file=sys.stderr)
        return EXIT_USAGE
    try:
        n = DigitString.from_decimal(text)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.force_main and len(n) < 5:
        print("error: --force-main needs at least 5 significant digits", file=sys.stderr)
        return EXIT_USAGE
    try:
        decomposition = decompose(n, force_main=args.force_main)
        checked = False
        if args.verify:
            report = verify(decomposition)
            if not report.ok:
                for where, reason in report.failures:
                    print(f"internal error: {where}: {reason}", file=sys.stderr)
                return EXIT_INTERNAL
            checked = True
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    doc = certificate(decomposition, checked)
    if args.text:
        _print_text(doc)
    else:
        print(json.dumps(doc, indent=1))
    return EXIT_OK


def _print_text(doc):
    n = doc["n"]
    print(f"n = {n} ({len(n)} digits)")
    print(f"path: {doc['trace']['path']}")
    nonzero = sum(1 for p in doc["palindromes"] if p != "0")
    print(f"palindromes ({nonzero} nonzero of {len(doc['palindromes'])}):")
    for i, p in enumerate(doc["palindromes"]):
        print(f"  [{i:2d}] {p}")
    print(f"checked: {'yes' if doc['checked'] else 'no'}")


# -- verify -------------------------------------------------------------------


def _load_certificate(path):
    """Returns (n, part_strings) or raises ValueError for malformed documents."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("certificate must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    n = doc.get("n")
    parts = doc.get("palindromes")
    if not isinstance(n, str):
        raise ValueError("field 'n' must be a string")
    if not isinstance(parts, list) or not all(isinstance(p, str) for p in parts):
        raise ValueError("field 'palindromes' must be a list of strings")
    return n, parts


def _cmd_verify(args) -> int:
    try:
        n_text, part_texts = _load_certificate(args.certificate)
        value = DigitString.from_decimal(n_text)
    except (OSError, json.JSONDecodeError, ValueError, InputFormatError) as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE

    failures = []
    parts = []
    for index, text in enumerate(part_texts):
        try:
            part = DigitString.from_decimal(text)
        except InputFormatError:
            failures.append((f"part[{index}]", "not a decimal string"))
            parts.append(ZERO)
            continue
        if str(part) != text:
            failures.append((f"part[{index}]", "not in canonical form"))
        parts.append(part)

    report = verify(Decomposition(value, tuple(parts), Trace(path="external")))
    failures.extend(report.failures)
    if failures:
        for where, reason in failures:
            print(f"FAIL {where}: {reason}")
        return EXIT_FAILED
    print(f"certificate ok: {len(parts)} palindromes sum to n")
    return EXIT_OK


# -- check-range ----------------------------------------------------------------


def _shard_worker(bounds):
    report = oracle.exhaustive_check(*bounds)
    return report.checked, report.failures


def _parse_bounds(args, limit):
    lo, hi = args.lo, args.hi
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    if hi > limit:
        raise ValueError(f"hi is capped at {limit}")
    return lo, hi


def _cmd_check_range(args) -> int:
    try:
        lo, hi = _parse_bounds(args, oracle.DESK_LIMIT)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    jobs = max(1, args.jobs)
    started = time.perf_counter()
    if lo <= oracle.TABLE_LIMIT:
        oracle.prepare_table(min(hi, oracle.TABLE_LIMIT))  # built before forking
    if jobs == 1:
        report = oracle.exhaustive_check(lo, hi)
        checked, failures = report.checked, list(report.failures)
    else:
        chunk = max(1, (hi - lo + 1 + jobs * 4 - 1) // (jobs * 4))
        bounds = [(a, min(a + chunk - 1, hi)) for a in range(lo, hi + 1, chunk)]
        checked = 0
        failures = []
        with multiprocessing.Pool(jobs) as pool:
            for shard_checked, shard_failures in pool.imap_unordered(
                _shard_worker, bounds
            ):
                checked += shard_checked
                failures.extend(shard_failures)
    failures.sort()
    elapsed = time.perf_counter() - started
    print(f"checked {checked} values in [{lo}, {hi}]")
    print(f"failures: {len(failures)}")
    for n, reasons in failures[:25]:
        print(f"  n={n}: {'; '.join(reasons)}")
    if len(failures) > 25:
        print(f"  ... and {len(failures) - 25} more")
    print(f"elapsed: {elapsed:.2f} s (jobs={jobs}, backend={backend.name()})")
    return EXIT_OK if not failures else EXIT_FAILED


# -- stats ----------------------------------------------------------------------


def _cmd_stats(args) -> int:
    try:
        lo, hi = _parse_bounds(args, oracle.TABLE_LIMIT)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    oracle.prepare_table(hi)
    minimal = Counter()
    emitted = Counter()
    for n in range(lo, hi + 1):
        minimal[oracle.min_palindromes(n).count] += 1
        decomposition = decompose(DigitString.from_int(n))
        emitted[sum(1 for part in decomposition.parts if part)] += 1
    if args.json:
        print(
            json.dumps(
                {
                    "lo": lo,
                    "hi": hi,
                    "minimal": {str(k): v for k, v in sorted(minimal.items())},
                    "decomposer_nonzero": {
                        str(k): v for k, v in sorted(emitted.items())
                    },
                },
                indent=1,
            )
        )
        return EXIT_OK
    print(f"range [{lo}, {hi}]")
    print("minimal palindrome count (oracle):")
    for k in sorted(minimal):
        print(f"  {k}: {minimal[k]}")
    print("nonzero parts emitted (decomposer):")
    for k in sorted(emitted):
        print(f"  {k}: {emitted[k]}")
    return EXIT_OK


# -- selftest ---------------------------------------------------------------------


def _check_complement_table():
    expected = (0, 1, 9, 8, 7, 6, 5, 4, 3, 2)
    got = tuple(complement(d) for d in range(10))
    assert got == expected, f"table reads {got}, expected {expected}"


def _check_double_block():
    got = str(double_block(10, 2, 7, 8))
    assert got == "7800001500", f"double_block(10, 2, 7, 8) = {got}"


def _check_total_selection():
    for prefix in range(500, 1000):
        matches = [
            h for h in range(171, 532, 10) if prefix - 80 < 2 * h <= prefix - 60
        ]
        assert len(matches) == 1, f"prefix {prefix} has candidates {matches}"
        assert select_total(prefix) == matches[0]


def _check_digit_sum_identity():
    g = lambda v: v // 10 + v % 10  # noqa: E731
    for s in AMOUNTS:
        assert g(s + 2) + g(s - 2) == 2 * g(s) - 9, f"identity fails at {s}"


def _check_power_palindromes():
    for power in range(1, 201):
        for digit in range(10):
            pal = power_palindrome(power, digit)
            assert pal.is_palindrome(), f"power={power} digit={digit} -> {pal}"
            shifted = DigitString(bytes(power) + bytes((digit,))) if digit else ZERO
            assert shifted - DigitString((complement(digit),)) == pal, (
                f"power={power} digit={digit}: pattern disagrees with subtraction"
            )


_SELFTEST_CHECKS = (
    ("complement-table", _check_complement_table),
    ("double-block-example", _check_double_block),
    ("total-selection", _check_total_selection),
    ("digit-sum-identity", _check_digit_sum_identity),
    ("power-palindromes", _check_power_palindromes),
)


def _cmd_selftest(args) -> int:  # noqa: ARG001 - uniform handler signature
    for name, check in _SELFTEST_CHECKS:
        try:
            check()
        except AssertionError as exc:
            print(f"FAIL {name}: {exc}")
            return EXIT_FAILED
        print(f"ok  {name}")
    print("selftest passed")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="palsum",
        description="Decompose natural numbers into exactly 49 decimal palindromes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="emit a 49-palindrome certificate for N")
    p.add_argument("number", help="the number, as a decimal string")
    p.add_argument("--verify", action="store_true", help="check the result first")
    p.add_argument(
        "--force-main",
        action="store_true",
        help="run the main pipeline even for short inputs (>= 5 digits)",
    )
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable output")
    p.add_argument(
        "--max-digits",
        type=int,
        default=DEFAULT_MAX_DIGITS,
        help=f"refuse longer inputs (default {DEFAULT_MAX_DIGITS})",
    )
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("certificate", help="path to a certificate JSON document")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-range", help="decompose and verify every n in [lo, hi]")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_check_range)

    p = sub.add_parser("stats", help="histogram minimal vs emitted palindrome counts")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("selftest", help="run the pinned internal checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

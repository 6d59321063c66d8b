"""Brute-force reference machinery for desk-scale validation.

Everything here works on machine integers and is deliberately independent of
the constructive decomposer: palindromes are enumerated by mirroring digit
prefixes, minimal palindrome counts come from reachability tables, and
``exhaustive_check`` sweeps a range running decompose + verify against the
oracle's minimal counts.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .decomposer import decompose, verify
from .digits import DigitString

DESK_LIMIT = 10**8  # enumeration / sweep ceiling
TABLE_LIMIT = 10**7  # minimal-count table ceiling


@dataclass(frozen=True)
class MinDecomposition:
    """A minimal representation of n as a sum of nonzero palindromes."""

    n: int
    count: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class CheckReport:
    checked: int
    failures: tuple[tuple[int, tuple[str, ...]], ...]


def palindromes_upto(limit: int) -> list[int]:
    """All palindromes in [1, limit], ascending, generated by mirroring
    digit prefixes rather than by filtering."""
    if limit > DESK_LIMIT:
        raise ValueError(f"enumeration is capped at {DESK_LIMIT}")
    out: list[int] = []
    if limit < 1:
        return out
    for length in range(1, len(str(limit)) + 1):
        half = (length + 1) // 2
        start = 1 if half == 1 else 10 ** (half - 1)
        for prefix in range(start, 10**half):
            s = str(prefix)
            pal = int(s + s[-2::-1]) if length % 2 else int(s + s[::-1])
            if pal > limit:
                break
            out.append(pal)
    return out


class _Table:
    """Palindrome membership plus two-palindrome reachability up to a limit."""

    __slots__ = ("limit", "pals", "pal_set", "two")

    def __init__(self, limit: int):
        self.limit = limit
        self.pals = palindromes_upto(limit)
        self.pal_set = frozenset(self.pals)
        flags = np.zeros(limit + 1, dtype=np.uint8)
        arr = np.array(self.pals, dtype=np.int64)
        for p in self.pals:
            cut = bisect_right(self.pals, limit - p)
            if cut:
                flags[arr[:cut] + p] = 1
        self.two = flags.tobytes()  # immutable, shareable across workers


_table: _Table | None = None


def prepare_table(limit: int) -> None:
    """Build (or extend) the shared minimal-count table.

    Useful before forking range-sweep workers so they inherit it.
    """
    global _table
    if limit > TABLE_LIMIT:
        raise ValueError(f"minimal-count tables are capped at {TABLE_LIMIT}")
    if _table is None or _table.limit < limit:
        _table = _Table(max(limit, 100))


def _require_table(n: int) -> _Table:
    prepare_table(n)
    assert _table is not None
    return _table


def _min_count(n: int, tab: _Table) -> int:
    if n == 0:
        return 0
    if n in tab.pal_set:
        return 1
    two = tab.two
    if two[n]:
        return 2
    pals = tab.pals
    for i in range(bisect_right(pals, n) - 1, -1, -1):
        if two[n - pals[i]]:
            return 3
    # No tested value gets here; four is checked for completeness.
    for i in range(bisect_right(pals, n) - 1, -1, -1):
        r = n - pals[i]
        if r in tab.pal_set or two[r] or any(
            two[r - p] for p in pals[: bisect_right(pals, r)]
        ):
            return 4
    raise RuntimeError(f"minimal palindrome count of {n} exceeds 4; extend the search")


def _witness(n: int, count: int, tab: _Table) -> tuple[int, ...]:
    if count == 0:
        return ()
    if count == 1:
        return (n,)
    pals = tab.pals
    if count == 2:
        for i in range(bisect_right(pals, n) - 1, -1, -1):
            r = n - pals[i]
            if r >= 1 and r in tab.pal_set:
                return (pals[i], r)
    else:
        for i in range(bisect_right(pals, n) - 1, -1, -1):
            r = n - pals[i]
            if r >= 1 and _min_count(r, tab) == count - 1:
                return (pals[i],) + _witness(r, count - 1, tab)
    raise RuntimeError(f"witness reconstruction failed for {n}")


def min_palindromes(n: int, bound: int = 49) -> MinDecomposition | None:
    """Minimal number of nonzero palindromes summing to n, with a witness,
    or None when that minimum exceeds `bound`."""
    if n < 0 or n > TABLE_LIMIT:
        raise ValueError(f"n must lie in 0..{TABLE_LIMIT}")
    tab = _require_table(n)
    count = _min_count(n, tab)
    if count > bound:
        return None
    return MinDecomposition(n, count, _witness(n, count, tab))


def exhaustive_check(lo: int, hi: int) -> CheckReport:
    """Run decompose + verify for every n in [lo, hi].

    For n within the table limit, additionally insist that the oracle's
    minimal count never beats the number of nonzero parts the decomposer
    emitted.  Failures are collected, not raised.
    """
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    if hi > DESK_LIMIT:
        raise ValueError(f"range sweeps are capped at {DESK_LIMIT}")
    oracle_top = min(hi, TABLE_LIMIT)
    tab = _require_table(oracle_top) if lo <= oracle_top else None
    failures: list[tuple[int, tuple[str, ...]]] = []
    for n in range(lo, hi + 1):
        decomposition = decompose(DigitString.from_int(n))
        report = verify(decomposition)
        if not report.ok:
            failures.append(
                (n, tuple(f"{where}: {reason}" for where, reason in report.failures))
            )
            continue
        if tab is not None and n <= oracle_top:
            nonzero = sum(1 for part in decomposition.parts if part)
            if _min_count(n, tab) > nonzero:
                failures.append(
                    (n, ("oracle: minimal count exceeds the emitted nonzero parts",))
                )
    return CheckReport(hi - lo + 1, tuple(failures))

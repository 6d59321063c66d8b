"""Oracle tests: palindrome enumeration, minimal counts, range sweeps."""

import random

import pytest

from palsum import oracle
from palsum.decomposer import Decomposition, decompose
from palsum.digits import DigitString


def is_pal_str(n):
    s = str(n)
    return s == s[::-1]


class TestEnumeration:
    def test_upto_10(self):
        assert oracle.palindromes_upto(10) == list(range(1, 10))

    def test_upto_30(self):
        assert oracle.palindromes_upto(30) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 22]

    def test_count_below_10000(self):
        assert len(oracle.palindromes_upto(9999)) == 198

    def test_mirror_equals_filter(self):
        limit = 10**5
        assert oracle.palindromes_upto(limit) == [
            n for n in range(1, limit + 1) if is_pal_str(n)
        ]

    def test_ascending_and_edge_cases(self):
        pals = oracle.palindromes_upto(12345)
        assert pals == sorted(pals)
        assert oracle.palindromes_upto(0) == []
        with pytest.raises(ValueError):
            oracle.palindromes_upto(10**8 + 1)


class TestMinPalindromes:
    def test_zero(self):
        md = oracle.min_palindromes(0)
        assert (md.count, md.witness) == (0, ())

    def test_single(self):
        md = oracle.min_palindromes(5)
        assert (md.count, md.witness) == (1, (5,))

    def test_21_needs_three(self):
        md = oracle.min_palindromes(21)
        assert md.count == 3
        assert md.witness == (11, 9, 1)  # deterministic greedy reconstruction
        assert sum(md.witness) == 21

    def test_bound_exceeded_returns_none(self):
        assert oracle.min_palindromes(21, bound=2) is None
        assert oracle.min_palindromes(21, bound=3) is not None

    def test_witnesses_are_valid(self):
        rng = random.Random(4)
        for _ in range(2000):
            n = rng.randrange(10**5)
            md = oracle.min_palindromes(n)
            assert sum(md.witness) == n
            assert all(is_pal_str(p) and p > 0 for p in md.witness)
            assert len(md.witness) == md.count

    def test_monotone_sanity(self):
        rng = random.Random(9)
        pals = oracle.palindromes_upto(10**4)
        for _ in range(500):
            n = rng.randrange(100, 10**4)
            base = oracle.min_palindromes(n).count
            p = rng.choice([q for q in pals if q <= n])
            assert base <= oracle.min_palindromes(n - p).count + 1

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            oracle.min_palindromes(-1)
        with pytest.raises(ValueError):
            oracle.min_palindromes(oracle.TABLE_LIMIT + 1)


class TestExhaustiveCheck:
    def test_small_range(self):
        report = oracle.exhaustive_check(0, 1000)
        assert report.checked == 1001
        assert report.failures == ()

    def test_single_value(self):
        report = oracle.exhaustive_check(0, 0)
        assert report.checked == 1 and report.failures == ()

    def test_reports_broken_decompositions(self, monkeypatch):
        real = decompose

        def broken(n, **kwargs):
            d = real(n, **kwargs)
            if str(d.value) == "7":
                parts = (DigitString.from_int(8),) + d.parts[1:]
                return Decomposition(d.value, parts, d.trace)
            return d

        monkeypatch.setattr(oracle, "decompose", broken)
        report = oracle.exhaustive_check(0, 20)
        assert report.checked == 21
        assert len(report.failures) == 1
        n, reasons = report.failures[0]
        assert n == 7 and any("sum" in r for r in reasons)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            oracle.exhaustive_check(5, 4)
        with pytest.raises(ValueError):
            oracle.exhaustive_check(-1, 4)
        with pytest.raises(ValueError):
            oracle.exhaustive_check(0, oracle.DESK_LIMIT + 1)

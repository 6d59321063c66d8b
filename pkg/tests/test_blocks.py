"""Block constructors and class membership, checked against integer arithmetic."""

import pytest

from palsum.blocks import (
    COMPLEMENT_TABLE,
    ClassDescriptor,
    block,
    complement,
    digit_sum,
    double_block,
    in_class,
    power_palindrome,
    shifted_block,
)
from palsum.digits import ZERO, DigitString


def val(ds):
    return int(str(ds))


class TestBlock:
    def test_degenerate_cases(self):
        assert block(0, 7) == ZERO
        assert val(block(1, 7)) == 7
        assert block(3, 0) == ZERO

    def test_example(self):
        assert val(block(5, 3)) == 30003  # 3 * 10**4 + 3

    def test_palindrome_and_length_sweep(self):
        for length in range(51):
            for d in range(10):
                b = block(length, d)
                assert b.is_palindrome()
                if d and length >= 1:
                    assert len(b) == length
                assert val(b) == (0 if d == 0 or length == 0 else
                                  d if length == 1 else 10 ** (length - 1) * d + d)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            block(-1, 3)
        with pytest.raises(ValueError):
            block(3, 11)


class TestShiftedBlock:
    def test_examples(self):
        assert val(shifted_block(5, 2, 4)) == 40400
        assert shifted_block(4, 4, 9) == ZERO
        assert val(shifted_block(3, 2, 9)) == 900

    def test_matches_scaled_block(self):
        for length in range(30):
            for shift in range(length + 1):
                for d in (0, 1, 5, 9):
                    assert val(shifted_block(length, shift, d)) == 10**shift * val(
                        block(length - shift, d)
                    )

    def test_rejects_shift_above_length(self):
        with pytest.raises(ValueError):
            shifted_block(3, 4, 1)


class TestDoubleBlock:
    def test_pinned_example(self):
        assert str(double_block(10, 2, 7, 8)) == "7800001500"

    def test_more_examples(self):
        assert val(double_block(5, 0, 3, 7)) == 37010
        assert double_block(8, 2, 0, 0) == ZERO

    def test_two_routes_agree_everywhere(self):
        # digit placement vs sum of two shifted blocks vs the integer formula
        for length in range(4, 51):
            for shift in range(0, length - 3):
                for a in (0, 1, 4, 9):
                    for b in (0, 2, 9):
                        q = double_block(length, shift, a, b)
                        assert q == shifted_block(length, shift, a) + shifted_block(
                            length - 1, shift, b
                        )
                        assert val(q) == 10 ** (length - 1) * a + 10 ** (
                            length - 2
                        ) * b + 10**shift * (a + b)

    def test_rejects_narrow_window(self):
        with pytest.raises(ValueError):
            double_block(5, 2, 1, 1)


class TestComplement:
    def test_table(self):
        assert COMPLEMENT_TABLE == (0, 1, 9, 8, 7, 6, 5, 4, 3, 2)
        assert complement(0) == 0
        assert complement(2) == 9
        assert complement(9) == 2

    def test_values_are_single_digit_palindromes(self):
        for d in range(10):
            assert DigitString((complement(d),)).is_palindrome()


class TestPowerPalindrome:
    def test_examples(self):
        assert power_palindrome(5, 0) == ZERO
        assert val(power_palindrome(2, 1)) == 99
        assert val(power_palindrome(3, 2)) == 1991

    def test_rejects_power_zero(self):
        with pytest.raises(ValueError):
            power_palindrome(0, 3)

    def test_pattern_matches_subtraction_oracle(self):
        # independent route: build d * 10**power digit-wise and subtract
        for power in range(1, 201):
            for d in range(10):
                pal = power_palindrome(power, d)
                assert pal.is_palindrome()
                scaled = DigitString(bytes(power) + bytes((d,)))
                assert scaled - DigitString((complement(d),)) == pal


def test_digit_sum_identity_on_amount_menu():
    for s in (19, 29, 39, 49, 59):
        g = lambda v: digit_sum(DigitString.from_int(v))  # noqa: E731
        assert g(s + 2) + g(s - 2) == 2 * g(s) - 9


class TestClassMembership:
    def test_examples(self):
        assert in_class(DigitString.from_int(6339), ClassDescriptor(4, 0, 9))
        assert in_class(DigitString.from_int(77999820), ClassDescriptor(8, 1, 2))
        assert not in_class(DigitString.from_int(12345), ClassDescriptor(5, 0, 5))

    def test_divisibility_is_a_lower_bound(self):
        # pinned digit 0 at shift 1 must accept values divisible by more than 10
        cls = ClassDescriptor(5, 1, 0)
        assert in_class(DigitString.from_int(55000), cls)
        assert in_class(DigitString.from_int(50000), cls)
        assert not in_class(DigitString.from_int(55010), cls)

    def test_each_condition_can_fail(self):
        cls = ClassDescriptor(5, 1, 3)
        assert in_class(DigitString.from_int(60030), cls)
        assert not in_class(DigitString.from_int(600300), cls)  # wrong length
        assert not in_class(DigitString.from_int(40030), cls)  # small lead
        assert not in_class(DigitString.from_int(60040), cls)  # wrong pinned digit
        assert not in_class(DigitString.from_int(60031), cls)  # not divisible

    def test_descriptor_validation(self):
        with pytest.raises(ValueError):
            ClassDescriptor(4, 1, 3)  # length < shift + 4
        with pytest.raises(ValueError):
            ClassDescriptor(5, -1, 3)
        with pytest.raises(ValueError):
            ClassDescriptor(10, 0, 12)

"""Palindromic digit blocks and the class predicate the decomposer tracks.

The construction sums numbers of a few fixed digit shapes:

  block(5, 3)            -> 30003          d 0...0 d
  shifted_block(5, 2, 4) -> 40400          d 0...0 d 0...0  (k low zeros)
  double_block(10, 2, 7, 8) -> 7800001500  a b 0...0 hi lo 0...0

where hi/lo are the two digits of a+b.  ``power_palindrome`` realizes
d*10**j - complement(d), which is always a palindrome; together with the
single digit complement(d) it lets one digit of a sparse number be replaced
by two palindromes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digits import ZERO, DigitString

# complement(d) is the unique table value making d*10**j - complement(d)
# palindromic for every j >= 1 (11 - d for d >= 2, fixed points 0 and 1).
COMPLEMENT_TABLE = (0, 1, 9, 8, 7, 6, 5, 4, 3, 2)


def _check_digit(value, name="digit"):
    if not 0 <= value <= 9:
        raise ValueError(f"{name} must be a single digit, got {value}")


def complement(digit: int) -> int:
    _check_digit(digit)
    return COMPLEMENT_TABLE[digit]


def block(length: int, digit: int) -> DigitString:
    """The palindrome d 0...0 d of the given total length (0 if d = 0)."""
    _check_digit(digit)
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0 or digit == 0:
        return ZERO
    if length == 1:
        return DigitString._wrap(bytes((digit,)))
    buf = bytearray(length)
    buf[0] = digit
    buf[-1] = digit
    return DigitString._wrap(bytes(buf))


def shifted_block(length: int, shift: int, digit: int) -> DigitString:
    """block(length - shift, digit) scaled by 10**shift.

    Not itself a palindrome once shifted; it is the raw summand out of
    which double blocks and chain palindromes are assembled.
    """
    if shift < 0 or length < shift:
        raise ValueError(f"need length >= shift >= 0, got {length}, {shift}")
    core = block(length - shift, digit)
    if not core:
        return ZERO
    return DigitString._wrap(bytes(shift) + core.digits)


def double_block(length: int, shift: int, a: int, b: int) -> DigitString:
    """shifted_block(length, shift, a) + shifted_block(length - 1, shift, b).

    Digit picture: a, b, zeros, the two digits of a+b, then `shift` zeros.
    Requires length >= shift + 4 so the four written digits cannot collide.
    """
    _check_digit(a, "a")
    _check_digit(b, "b")
    if shift < 0 or length < shift + 4:
        raise ValueError(f"need length >= shift + 4, got {length}, {shift}")
    if a == 0 and b == 0:
        return ZERO
    buf = bytearray(length)
    buf[length - 1] = a
    buf[length - 2] = b
    lo, hi = (a + b) % 10, (a + b) // 10
    buf[shift] = lo
    buf[shift + 1] = hi
    return DigitString(buf)


def power_palindrome(power: int, digit: int) -> DigitString:
    """The palindrome equal to digit * 10**power - complement(digit), power >= 1.

    Built directly from its digit pattern; the subtraction form serves as an
    independent oracle in the tests.  For power >= 2 and digit >= 2 the
    pattern is (d-1), then power-1 nines, then (d-1).
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    _check_digit(digit)
    if digit == 0:
        return ZERO
    if power == 1:
        if digit == 1:
            return DigitString._wrap(b"\x09")
        return DigitString._wrap(bytes((digit - 1, digit - 1)))
    if digit == 1:
        return DigitString._wrap(b"\x09" * power)
    buf = bytearray(b"\x09" * (power + 1))
    buf[0] = digit - 1
    buf[-1] = digit - 1
    return DigitString._wrap(bytes(buf))


def digit_sum(n: DigitString) -> int:
    return n.digit_sum()


@dataclass(frozen=True)
class ClassDescriptor:
    """Identifies the set of numbers with `length` digits, leading digit at
    least 5, digit `digit` at position `shift`, and divisible by 10**shift."""

    length: int
    shift: int
    digit: int

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be >= 0")
        if self.length < self.shift + 4:
            raise ValueError(
                f"class length must be at least shift + 4, got {self.length}, {self.shift}"
            )
        _check_digit(self.digit)


def in_class(n: DigitString, cls: ClassDescriptor) -> bool:
    """Membership test for cls.  Divisibility is a lower bound: deeper
    trailing zeros than cls.shift still qualify."""
    return (
        len(n) == cls.length
        and n.digit_at(cls.length - 1) >= 5
        and n.digit_at(cls.shift) == cls.digit
        and n.trailing_zeros() >= cls.shift
    )

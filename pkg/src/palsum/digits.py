"""Arbitrary-precision natural numbers as little-endian decimal digit vectors.

A DigitString stores one digit per byte; index j carries weight 10**j.  The
representation is canonical: the highest digit is nonzero, except for the
number zero, which is the single digit 0 (so zero has length 1).  Values are
immutable and freely shareable; arithmetic returns new instances.

Only the operations the palindrome construction needs are provided: exact
addition and subtraction, comparison, and digit-level queries.  There is no
multiplication or division.  The digit loops live in a kernel module with a
compiled variant, chosen at import time (see palsum.backend).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from . import backend

_ops = backend.active()
_add = _ops.add
_sub = _ops.sub
_compare = _ops.compare
_is_pal = _ops.is_pal
_digit_sum = _ops.digit_sum
_count_nonzero = _ops.count_nonzero
_trailing_zeros = _ops.trailing_zeros

_TO_VALUES = bytes.maketrans(b"0123456789", bytes(range(10)))
_TO_ASCII = bytes.maketrans(bytes(range(10)), b"0123456789")


class InputFormatError(ValueError):
    """Raised for input that is not a plain string of decimal digits."""


class UnderflowError(ArithmeticError):
    """Raised when a subtraction would go negative.

    The construction only ever subtracts a smaller value from a larger one,
    so hitting this from inside the decomposer indicates a bug there.
    """


class DigitString:
    """Canonical little-endian digit vector."""

    __slots__ = ("_raw",)

    def __init__(self, digits: Iterable[int]):
        """Build from an iterable of digit values 0..9, least significant first.

        High zeros are stripped; an empty or all-zero sequence is the
        number zero.
        """
        try:
            raw = bytes(digits)
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"invalid digit sequence: {exc}") from None
        if raw and max(raw) > 9:
            raise InputFormatError("digit values must lie in 0..9")
        self._raw = raw.rstrip(b"\x00") or b"\x00"

    @classmethod
    def _wrap(cls, raw: bytes) -> "DigitString":
        # Internal constructor for bytes already known to be canonical.
        ds = object.__new__(cls)
        ds._raw = raw
        return ds

    @classmethod
    def from_decimal(cls, text: str) -> "DigitString":
        """Parse a decimal string.  Leading zeros are permitted and stripped."""
        if not text:
            raise InputFormatError("empty digit string")
        try:
            raw = text.encode("ascii")
        except UnicodeEncodeError:
            raise InputFormatError("non-decimal character in input") from None
        if raw.translate(None, b"0123456789"):
            raise InputFormatError("non-decimal character in input")
        little = raw[::-1].translate(_TO_VALUES).rstrip(b"\x00")
        return cls._wrap(little or b"\x00")

    @classmethod
    def from_int(cls, value: int) -> "DigitString":
        if value < 0:
            raise InputFormatError("negative values are not representable")
        return cls._wrap(str(value).encode("ascii")[::-1].translate(_TO_VALUES))

    @property
    def digits(self) -> bytes:
        """The raw little-endian digit bytes (index = power of ten)."""
        return self._raw

    def to_decimal(self) -> str:
        return self._raw[::-1].translate(_TO_ASCII).decode("ascii")

    def digit_at(self, j: int) -> int:
        """Digit of weight 10**j; positions above the top read as zero."""
        if j < 0:
            raise ValueError("digit position must be >= 0")
        return self._raw[j] if j < len(self._raw) else 0

    def is_palindrome(self) -> bool:
        return _is_pal(self._raw)

    def count_nonzero(self) -> int:
        return _count_nonzero(self._raw)

    def trailing_zeros(self) -> int:
        """Largest k with 10**k dividing the value; 0 for the value zero."""
        return _trailing_zeros(self._raw)

    def digit_sum(self) -> int:
        return _digit_sum(self._raw)

    def compare(self, other: "DigitString") -> int:
        """-1, 0 or 1 according to numeric order."""
        return _compare(self._raw, other._raw)

    def __add__(self, other):
        if not isinstance(other, DigitString):
            return NotImplemented
        return DigitString._wrap(_add(self._raw, other._raw))

    def __sub__(self, other):
        if not isinstance(other, DigitString):
            return NotImplemented
        try:
            return DigitString._wrap(_sub(self._raw, other._raw))
        except ValueError:
            raise UnderflowError(
                f"cannot subtract {other!r} from the smaller value {self!r}"
            ) from None

    def __eq__(self, other):
        return isinstance(other, DigitString) and self._raw == other._raw

    def __hash__(self):
        return hash(self._raw)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __len__(self) -> int:
        return len(self._raw)

    def __iter__(self) -> Iterator[int]:
        return iter(self._raw)

    def __bool__(self) -> bool:
        return self._raw != b"\x00"

    def __str__(self) -> str:
        return self.to_decimal()

    def __repr__(self) -> str:
        s = self.to_decimal()
        if len(s) > 40:
            s = f"{s[:16]}...{s[-16:]} [{len(s)} digits]"
        return f"DigitString({s})"


ZERO = DigitString._wrap(b"\x00")

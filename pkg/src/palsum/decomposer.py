"""Decomposition of any natural number into exactly 49 decimal palindromes.

Numbers of at most 24 digits are handled by ``decompose_sparse`` alone: each
nonzero digit above the units is replaced by the pair complement(d) and
power_palindrome(j, d), giving at most 2*24 + 1 palindromes.

Longer numbers run the main pipeline:

  1. ``reduce_leading`` subtracts at most two blocks so the leading digit is
     at least 5, entering a tracked class (length, shift, digit).
  2. ``passage_step``, repeated: subtract eighteen double blocks chosen from
     a fixed menu of two-digit amounts.  Each step trades one digit of
     length for one more guaranteed trailing zero and keeps the leading
     digit at least 5, so it can run while length >= shift + 6.
  3. The final remainder has at most five nonzero digits and goes through
     ``decompose_sparse`` with budget 5 (eleven parts).
  4. ``collapse_chains`` regroups all double blocks subtracted in step 2,
     per chain index, into 18 + 18 palindromes.

Either way the certificate carries 2 + 11 + 36 = 49 palindromic parts (zeros
padding) that sum exactly to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blocks import (
    ClassDescriptor,
    block,
    complement,
    in_class,
    power_palindrome,
    shifted_block,
)
from .digits import ZERO, DigitString

PART_COUNT = 49
SPARSE_LENGTH_LIMIT = 24  # lengths up to this go through the sparse path
TAIL_BUDGET = 5

# Menu of two-digit amounts for passage steps.  Raising any entry by 2 or
# lowering it by 2 still leaves both digits nonzero, which is what makes the
# collapsed chains palindromes of full length.
AMOUNTS = (19, 29, 39, 49, 59)
_MIN_TOTAL = 9 * AMOUNTS[0]  # 171
_MAX_TOTAL = 9 * AMOUNTS[-1]  # 531


class ConstructionError(RuntimeError):
    """An internal invariant of the construction failed: a bug, not bad input."""


def _check_amount_digit_sums():
    # digit_sum(s + 2) + digit_sum(s - 2) == 2 * digit_sum(s) - 9 for the menu;
    # select_spread relies on this trade-off being exactly 9 per adjusted slot.
    g = lambda v: v // 10 + v % 10  # noqa: E731
    return all(g(s + 2) + g(s - 2) == 2 * g(s) - 9 for s in AMOUNTS)


assert _check_amount_digit_sums()


@dataclass(frozen=True)
class PassageRecord:
    """One passage step: which eighteen digit pairs were subtracted where.

    ``step`` is 2 for the first passage after reduce_leading and counts up.
    ``pairs[i]`` holds (tens, units) of amounts[i] + 2 for i < spread,
    amounts[i] for spread <= i < 9, and the mirrored -2/+0 variants for
    i >= 9.
    """

    step: int
    total: int
    amounts: tuple[int, ...]
    spread: int
    pairs: tuple[tuple[int, int], ...]
    class_before: ClassDescriptor
    class_after: ClassDescriptor

    def __post_init__(self):
        if self.step < 2:
            raise ValueError("step numbering starts at 2")
        if len(self.amounts) != 9 or any(a not in AMOUNTS for a in self.amounts):
            raise ValueError("amounts must be nine menu entries")
        if sum(self.amounts) != self.total:
            raise ValueError("amounts do not sum to the total")
        if not 0 <= self.spread <= 9:
            raise ValueError("spread must lie in 0..9")
        if len(self.pairs) != 18:
            raise ValueError("expected eighteen digit pairs")
        for i, (tens, units) in enumerate(self.pairs):
            if not (1 <= tens <= 9 and 1 <= units <= 9):
                raise ValueError(f"pair {i} has a zero digit")
            delta = 2 if i % 9 < self.spread else 0
            expected = self.amounts[i % 9] + (delta if i < 9 else -delta)
            if 10 * tens + units != expected:
                raise ValueError(f"pair {i} does not match its amount")
        if self.class_after.length != self.class_before.length - 1:
            raise ValueError("a passage shrinks the length by one")
        if self.class_after.shift != self.class_before.shift + 1:
            raise ValueError("a passage raises the shift by one")


@dataclass(frozen=True)
class SparseTerms:
    """How decompose_sparse expanded a number: the units digit plus one
    (position, digit) term per nonzero higher digit."""

    budget: int
    ones_digit: int
    terms: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LeadingReduction:
    """Outcome of reduce_leading: two palindromes (possibly zero), the
    remainder, and the class the remainder lies in."""

    first: DigitString
    second: DigitString
    remainder: DigitString
    cls: ClassDescriptor
    case: str  # "leading" | "single-block" | "double-block"
    m: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None


@dataclass(frozen=True)
class ChainDigits:
    """Per chain index: the tens digits and units digits subtracted at each
    passage step, i.e. the nonzero halves of one a-chain and one b-chain."""

    a_digits: tuple[int, ...]
    b_digits: tuple[int, ...]


@dataclass(frozen=True)
class Trace:
    path: str  # "small" | "main" | "external"
    small_terms: Optional[SparseTerms] = None
    reduce: Optional[LeadingReduction] = None
    passages: tuple[PassageRecord, ...] = ()
    tail: Optional[SparseTerms] = None
    chains: tuple[ChainDigits, ...] = ()


@dataclass(frozen=True)
class Decomposition:
    """The certificate: the input value, its palindromic parts, and a trace
    of how they were found.  ``verify`` checks the part count rather than
    the constructor, so externally sourced instances can be validated."""

    value: DigitString
    parts: tuple[DigitString, ...]
    trace: Optional[Trace] = None


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failures: tuple[tuple[str, str], ...]


def _sparse_terms(n: DigitString) -> tuple[tuple[int, int], ...]:
    raw = n.digits
    return tuple((j, raw[j]) for j in range(1, len(raw)) if raw[j])


def decompose_sparse(n: DigitString, budget: int) -> list[DigitString]:
    """Write n as exactly 2*budget + 1 palindromes, zeros padding.

    Requires at most `budget` nonzero digits above the units position: each
    such digit d at position j contributes complement(d) and
    power_palindrome(j, d), whose sum is d * 10**j.
    """
    terms = _sparse_terms(n)
    if len(terms) > budget:
        raise ValueError(
            f"{len(terms)} nonzero digits above the units exceed the budget {budget}"
        )
    parts = [DigitString((n.digit_at(0),))]
    parts.extend(DigitString((complement(d),)) for _, d in terms)
    parts.extend(power_palindrome(j, d) for j, d in terms)
    parts.extend([ZERO] * (2 * budget + 1 - len(parts)))
    return parts


def reduce_leading(n: DigitString) -> LeadingReduction:
    """Subtract at most two block palindromes so the leading digit is >= 5.

    Keeps the length if it already is; otherwise the remainder is one digit
    shorter with leading digit 5 or 6.  Needs at least 5 digits.
    """
    size = len(n)
    if size < 5:
        raise ValueError(f"reduce_leading needs at least 5 digits, got {size}")
    lead = n.digit_at(size - 1)
    if lead >= 5:
        cls = ClassDescriptor(size, 0, n.digit_at(0))
        return LeadingReduction(ZERO, ZERO, n, cls, case="leading")
    # 4 <= m <= 43 because 1 <= lead <= 4
    m = 10 * lead + n.digit_at(size - 2) - 6
    if m <= 9:
        case = "single-block"
        a = b = None
        first, second = block(size - 1, m), ZERO
    else:
        case = "double-block"
        a, b = divmod(m, 10)
        first, second = shifted_block(size, 0, a), shifted_block(size - 1, 0, b)
    remainder = n - first - second
    if len(remainder) != size - 1 or remainder.digit_at(size - 2) < 5:
        raise ConstructionError(f"leading reduction failed for {n!r}")
    cls = ClassDescriptor(size - 1, 0, remainder.digit_at(0))
    return LeadingReduction(first, second, remainder, cls, case, m=m, a=a, b=b)


def select_total(prefix: int) -> int:
    """The unique nine-amount total h with prefix - 80 < 2h <= prefix - 60.

    The window spans twenty integers and candidate doubles run through
    residue 2 mod 20, so exactly one candidate fits; scanning keeps any
    violation of that loud.
    """
    if not 500 <= prefix <= 999:
        raise ValueError(f"prefix must lie in 500..999, got {prefix}")
    found = [
        h
        for h in range(_MIN_TOTAL, _MAX_TOTAL + 1, 10)
        if prefix - 80 < 2 * h <= prefix - 60
    ]
    if len(found) != 1:
        raise ConstructionError(f"expected one total for prefix {prefix}, found {found}")
    return found[0]


def split_total(total: int) -> tuple[int, ...]:
    """Nine menu amounts summing to `total`, greedily largest-first."""
    if total % 10 != 1 or not _MIN_TOTAL <= total <= _MAX_TOTAL:
        raise ValueError(f"total must lie in {{171, 181, ..., 531}}, got {total}")
    increments = (total - _MIN_TOTAL) // 10
    out = []
    for _ in range(9):
        take = min(4, increments)
        out.append(AMOUNTS[0] + 10 * take)
        increments -= take
    return tuple(out)


def select_spread(pinned_digit: int, amounts: tuple[int, ...]) -> int:
    """How many amounts receive the +2/-2 spread.

    Each spread slot lowers the combined digit sum of the eighteen
    subtracted values by 9, so the unique residue below makes the pinned
    digit of the remainder land on zero.
    """
    base = sum(a // 10 + a % 10 for a in amounts)
    return (pinned_digit - 2 * base) % 10


@dataclass(frozen=True)
class _PassagePlan:
    total: int
    amounts: tuple[int, ...]
    spread: int
    pairs: tuple[tuple[int, int], ...]
    pair_digit_sum: int
    drop: int  # prefix - 2 * total, always in 60..79


def _plan_passage(top: int, top2: int, top3: int, pinned: int) -> _PassagePlan:
    prefix = 100 * top + 10 * top2 + top3
    if not 500 <= prefix <= 999:
        raise ConstructionError(f"leading digit fell below 5 (prefix {prefix})")
    total = select_total(prefix)
    amounts = split_total(total)
    spread = select_spread(pinned, amounts)
    values = [amounts[i] + (2 if i < spread else 0) for i in range(9)]
    values += [amounts[i] - (2 if i < spread else 0) for i in range(9)]
    pairs = tuple(divmod(v, 10) for v in values)
    pair_digit_sum = sum(t + u for t, u in pairs)
    return _PassagePlan(total, amounts, spread, pairs, pair_digit_sum, prefix - 2 * total)


def _apply_passage(buf: bytearray, size: int, shift: int, plan: _PassagePlan) -> int:
    """Apply a planned passage to the digit buffer in place.

    Replaces the top three digits by the two digits of plan.drop and
    subtracts plan.pair_digit_sum at position `shift`.  Returns the digit
    left at position shift + 1.  The logical size shrinks to size - 1.
    """
    buf[size - 1] = 0
    buf[size - 2] = plan.drop // 10
    buf[size - 3] = plan.drop % 10
    value = plan.pair_digit_sum
    borrow = 0
    i = shift
    while value or borrow:
        if i > size - 2:
            raise ConstructionError("borrow ran past the top of the buffer")
        value, d = divmod(value, 10)
        t = buf[i] - d - borrow
        if t < 0:
            t += 10
            borrow = 1
        else:
            borrow = 0
        buf[i] = t
        i += 1
    if buf[shift] != 0:
        raise ConstructionError("pinned digit did not clear to zero")
    if buf[size - 2] < 5:
        raise ConstructionError("leading digit fell below 5 after a passage")
    return buf[shift + 1]


def passage_step(
    n: DigitString, cls: ClassDescriptor, step: int = 2
) -> tuple[PassageRecord, DigitString, ClassDescriptor]:
    """One passage: subtract eighteen double blocks from n.

    Requires n in cls with cls.length >= cls.shift + 6.  The remainder is
    one digit shorter, gains one trailing zero, and keeps a leading digit
    of at least 5, so successive passages can chain until the length bound
    fails.
    """
    if not in_class(n, cls):
        raise ValueError(f"{n!r} is not in class {cls}")
    if cls.length < cls.shift + 6:
        raise ValueError(
            f"passage needs length >= shift + 6, got {cls.length}, {cls.shift}"
        )
    size, shift = cls.length, cls.shift
    buf = bytearray(n.digits)
    plan = _plan_passage(buf[size - 1], buf[size - 2], buf[size - 3], buf[shift])
    next_digit = _apply_passage(buf, size, shift, plan)
    remainder = DigitString._wrap(bytes(buf[: size - 1]))
    after = ClassDescriptor(size - 1, shift + 1, next_digit)
    record = PassageRecord(
        step, plan.total, plan.amounts, plan.spread, plan.pairs, cls, after
    )
    return record, remainder, after


def collapse_chains(
    passages: tuple[PassageRecord, ...], length: int
) -> list[DigitString]:
    """Regroup everything the passages subtracted into 36 palindromes.

    For chain index j, the tens digits subtracted at successive steps sit at
    positions 0, 1, ... and mirror at positions length-2, length-3, ... of a
    single palindrome of length length - 1; the units digits likewise form a
    palindrome of length length - 2.  Returns the 18 tens-chains followed by
    the 18 units-chains.
    """
    if not passages:
        raise ValueError("no passage records to collapse")
    first = passages[0]
    if first.class_before.length != length or first.class_before.shift != 0:
        raise ValueError("passages do not start from a shift-0 class of the given length")
    for prev, cur in zip(passages, passages[1:]):
        if cur.class_before != prev.class_after or cur.step != prev.step + 1:
            raise ValueError("passage records are not consecutive")
    depth = len(passages)
    a_chains: list[DigitString] = []
    b_chains: list[DigitString] = []
    for j in range(18):
        abuf = bytearray(length - 1)
        bbuf = bytearray(length - 2)
        for t, record in enumerate(passages):
            tens, units = record.pairs[j]
            ahi = length - 2 - t
            bhi = length - 3 - t
            if t >= ahi or t >= bhi or abuf[t] or abuf[ahi] or bbuf[t] or bbuf[bhi]:
                raise ConstructionError("chain positions collided")
            abuf[t] = abuf[ahi] = tens
            bbuf[t] = bbuf[bhi] = units
        a = DigitString._wrap(bytes(abuf))
        b = DigitString._wrap(bytes(bbuf))
        if a.count_nonzero() != 2 * depth or b.count_nonzero() != 2 * depth:
            raise ConstructionError("chain has an unexpected number of nonzero digits")
        a_chains.append(a)
        b_chains.append(b)
    return a_chains + b_chains


def decompose(n: DigitString, *, force_main: bool = False) -> Decomposition:
    """Write n as exactly 49 palindromes (zeros permitted).

    Lengths up to 24 take the sparse path unless force_main is set, which
    requires at least 5 digits and exists so the main pipeline can be
    exercised on values small enough to cross-check with machine integers.
    """
    if force_main and len(n) < 5:
        raise ValueError("force_main needs at least 5 digits")
    if len(n) <= SPARSE_LENGTH_LIMIT and not force_main:
        budget = (PART_COUNT - 1) // 2
        parts = decompose_sparse(n, budget)
        trace = Trace(
            path="small",
            small_terms=SparseTerms(budget, n.digit_at(0), _sparse_terms(n)),
        )
        return Decomposition(n, tuple(parts), trace)

    reduction = reduce_leading(n)
    start = reduction.cls
    buf = bytearray(reduction.remainder.digits)
    size, shift = start.length, start.shift
    cls = start
    passages: list[PassageRecord] = []
    step = 2
    while size >= shift + 6:
        plan = _plan_passage(buf[size - 1], buf[size - 2], buf[size - 3], buf[shift])
        next_digit = _apply_passage(buf, size, shift, plan)
        size -= 1
        after = ClassDescriptor(size, shift + 1, next_digit)
        passages.append(
            PassageRecord(step, plan.total, plan.amounts, plan.spread, plan.pairs, cls, after)
        )
        cls = after
        shift += 1
        step += 1

    tail_value = DigitString._wrap(bytes(buf[:size]))
    tail_parts = decompose_sparse(tail_value, TAIL_BUDGET)
    if passages:
        chain_parts = collapse_chains(tuple(passages), start.length)
        chain_digits = tuple(
            ChainDigits(
                tuple(rec.pairs[j][0] for rec in passages),
                tuple(rec.pairs[j][1] for rec in passages),
            )
            for j in range(18)
        )
    else:
        chain_parts = [ZERO] * 36
        chain_digits = ()
    parts = [reduction.first, reduction.second] + tail_parts + chain_parts
    if len(parts) != PART_COUNT:
        raise ConstructionError(f"assembled {len(parts)} parts instead of {PART_COUNT}")
    trace = Trace(
        path="main",
        reduce=reduction,
        passages=tuple(passages),
        tail=SparseTerms(TAIL_BUDGET, tail_value.digit_at(0), _sparse_terms(tail_value)),
        chains=chain_digits,
    )
    return Decomposition(n, tuple(parts), trace)


def verify(decomposition: Decomposition) -> VerificationReport:
    """Independently check a decomposition using digit-level operations only:
    49 parts, each a palindrome, summing exactly to the input."""
    failures: list[tuple[str, str]] = []
    parts = decomposition.parts
    if len(parts) != PART_COUNT:
        failures.append(("count", f"expected {PART_COUNT} parts, found {len(parts)}"))
    total = ZERO
    for index, part in enumerate(parts):
        if not part.is_palindrome():
            failures.append((f"part[{index}]", "not a palindrome"))
        if part:  # zero contributes nothing to the sum
            total = total + part
    if total != decomposition.value:
        failures.append(("sum", "parts do not sum to the input"))
    return VerificationReport(ok=not failures, failures=tuple(failures))

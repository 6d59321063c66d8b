"""palsum: every natural number as a sum of exactly 49 decimal palindromes.

The public surface is the digit-vector number type, the palindromic block
constructors, the constructive decomposer with its independent verifier, and
a brute-force oracle for desk-scale cross-checking.
"""

from .blocks import (
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
from .decomposer import (
    AMOUNTS,
    PART_COUNT,
    ChainDigits,
    ConstructionError,
    Decomposition,
    LeadingReduction,
    PassageRecord,
    SparseTerms,
    Trace,
    VerificationReport,
    collapse_chains,
    decompose,
    decompose_sparse,
    passage_step,
    reduce_leading,
    select_spread,
    select_total,
    split_total,
    verify,
)
from .digits import ZERO, DigitString, InputFormatError, UnderflowError
from .oracle import (
    CheckReport,
    MinDecomposition,
    exhaustive_check,
    min_palindromes,
    palindromes_upto,
)

__version__ = "0.1.0"

__all__ = [
    "AMOUNTS",
    "COMPLEMENT_TABLE",
    "ChainDigits",
    "CheckReport",
    "ClassDescriptor",
    "ConstructionError",
    "Decomposition",
    "DigitString",
    "InputFormatError",
    "LeadingReduction",
    "MinDecomposition",
    "PART_COUNT",
    "PassageRecord",
    "SparseTerms",
    "Trace",
    "UnderflowError",
    "VerificationReport",
    "ZERO",
    "block",
    "collapse_chains",
    "complement",
    "decompose",
    "decompose_sparse",
    "digit_sum",
    "double_block",
    "exhaustive_check",
    "in_class",
    "min_palindromes",
    "palindromes_upto",
    "passage_step",
    "power_palindrome",
    "reduce_leading",
    "select_spread",
    "select_total",
    "shifted_block",
    "split_total",
    "verify",
]

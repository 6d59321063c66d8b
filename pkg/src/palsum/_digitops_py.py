"""Pure-Python digit-vector kernels.

Operands are little-endian bytes, one decimal digit (value 0..9) per byte,
in canonical form: no high zero bytes, the number zero being the single
byte b"\\x00".  The compiled module ``palsum._digitops`` implements the
exact same contract; ``palsum.backend`` picks one at import time.
"""

BACKEND = "py"


def _strip(buf):
    n = len(buf)
    while n > 1 and buf[n - 1] == 0:
        n -= 1
    del buf[n:]
    return bytes(buf)


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = bytearray(a)
    out.append(0)
    carry = 0
    for i, d in enumerate(b):
        s = out[i] + d + carry
        if s >= 10:
            out[i] = s - 10
            carry = 1
        else:
            out[i] = s
            carry = 0
    i = len(b)
    while carry:
        s = out[i] + 1
        if s == 10:
            out[i] = 0
            i += 1
        else:
            out[i] = s
            carry = 0
    return _strip(out)


def sub(a, b):
    if len(a) < len(b):
        raise ValueError("underflow")
    out = bytearray(a)
    borrow = 0
    for i, d in enumerate(b):
        t = out[i] - d - borrow
        if t < 0:
            out[i] = t + 10
            borrow = 1
        else:
            out[i] = t
            borrow = 0
    i = len(b)
    while borrow:
        if i == len(out):
            raise ValueError("underflow")
        if out[i] == 0:
            out[i] = 9
        else:
            out[i] -= 1
            borrow = 0
        i += 1
    return _strip(out)


def compare(a, b):
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    if a == b:
        return 0
    return -1 if a[::-1] < b[::-1] else 1


def is_pal(a):
    return a == a[::-1]


def digit_sum(a):
    return sum(a)


def count_nonzero(a):
    return len(a) - a.count(0)


def trailing_zeros(a):
    stripped = a.lstrip(b"\x00")
    if not stripped:  # the value zero; zero positions are a convention here
        return 0
    return len(a) - len(stripped)

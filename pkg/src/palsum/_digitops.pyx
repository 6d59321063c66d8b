# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled digit-vector kernels.

Same contract as palsum._digitops_py: little-endian byte vectors, one
decimal digit per byte, canonical form (no high zeros, zero is b"\\x00").
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

BACKEND = "c"


def add(const unsigned char[::1] a, const unsigned char[::1] b):
    cdef const unsigned char[::1] big
    cdef const unsigned char[::1] small
    if a.shape[0] >= b.shape[0]:
        big, small = a, b
    else:
        big, small = b, a
    cdef Py_ssize_t nb = big.shape[0]
    cdef Py_ssize_t ns = small.shape[0]
    out_buf = bytearray(nb + 1)
    cdef unsigned char[::1] out = out_buf
    cdef Py_ssize_t i
    cdef int carry = 0
    cdef int s
    for i in range(ns):
        s = big[i] + small[i] + carry
        if s >= 10:
            out[i] = <unsigned char> (s - 10)
            carry = 1
        else:
            out[i] = <unsigned char> s
            carry = 0
    for i in range(ns, nb):
        s = big[i] + carry
        if s >= 10:
            out[i] = <unsigned char> (s - 10)
            carry = 1
        else:
            out[i] = <unsigned char> s
            carry = 0
    out[nb] = <unsigned char> carry
    cdef Py_ssize_t n = nb + 1
    while n > 1 and out[n - 1] == 0:
        n -= 1
    return PyBytes_FromStringAndSize(<const char *> &out[0], n)


def sub(const unsigned char[::1] a, const unsigned char[::1] b):
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    if na < nb:
        raise ValueError("underflow")
    out_buf = bytearray(na)
    cdef unsigned char[::1] out = out_buf
    cdef Py_ssize_t i
    cdef int borrow = 0
    cdef int t
    for i in range(nb):
        t = a[i] - b[i] - borrow
        if t < 0:
            out[i] = <unsigned char> (t + 10)
            borrow = 1
        else:
            out[i] = <unsigned char> t
            borrow = 0
    for i in range(nb, na):
        t = a[i] - borrow
        if t < 0:
            out[i] = <unsigned char> (t + 10)
            borrow = 1
        else:
            out[i] = <unsigned char> t
            borrow = 0
    if borrow:
        raise ValueError("underflow")
    cdef Py_ssize_t n = na
    while n > 1 and out[n - 1] == 0:
        n -= 1
    return PyBytes_FromStringAndSize(<const char *> &out[0], n)


def compare(const unsigned char[::1] a, const unsigned char[::1] b):
    cdef Py_ssize_t na = a.shape[0]
    cdef Py_ssize_t nb = b.shape[0]
    if na != nb:
        return -1 if na < nb else 1
    cdef Py_ssize_t i = na - 1
    while i >= 0:
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
        i -= 1
    return 0


def is_pal(const unsigned char[::1] a):
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t j = a.shape[0] - 1
    while i < j:
        if a[i] != a[j]:
            return False
        i += 1
        j -= 1
    return True


def digit_sum(const unsigned char[::1] a):
    cdef Py_ssize_t i
    cdef long long total = 0
    for i in range(a.shape[0]):
        total += a[i]
    return total


def count_nonzero(const unsigned char[::1] a):
    cdef Py_ssize_t i
    cdef Py_ssize_t n = 0
    for i in range(a.shape[0]):
        if a[i] != 0:
            n += 1
    return n


def trailing_zeros(const unsigned char[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i = 0
    while i < n and a[i] == 0:
        i += 1
    if i == n:  # the value zero
        return 0
    return i

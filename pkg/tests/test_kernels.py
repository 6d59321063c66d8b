"""Kernel-level tests, run against every available backend.

Vectors are canonical little-endian digit bytes.  Machine integers are the
oracle throughout.
"""

import random

import pytest

from palsum import backend

BACKENDS = [pytest.param(backend.get(name), id=name) for name in backend.available()]


def to_vec(n):
    return str(n).encode()[::-1].translate(bytes.maketrans(b"0123456789", bytes(range(10))))


def to_int(vec):
    return int(bytes(reversed(vec)).translate(bytes.maketrans(bytes(range(10)), b"0123456789")))


@pytest.fixture(params=BACKENDS)
def ops(request):
    return request.param


def test_both_backends_present():
    # the build is expected to produce the compiled module here
    assert "py" in backend.available()
    assert backend.name() in ("c", "py")


def test_add_small_exhaustive(ops):
    for a in range(0, 250):
        for b in range(0, 250):
            assert to_int(ops.add(to_vec(a), to_vec(b))) == a + b


def test_add_sub_random_vs_int(ops):
    rng = random.Random(101)
    for _ in range(20_000):
        a = rng.randrange(10**6)
        b = rng.randrange(10**6)
        assert to_int(ops.add(to_vec(a), to_vec(b))) == a + b
        lo, hi = min(a, b), max(a, b)
        assert to_int(ops.sub(to_vec(hi), to_vec(lo))) == hi - lo


def test_add_carry_chain(ops):
    assert ops.add(to_vec(99), to_vec(1)) == to_vec(100)
    assert ops.add(to_vec(10**50 - 1), to_vec(1)) == to_vec(10**50)


def test_sub_underflow(ops):
    with pytest.raises(ValueError):
        ops.sub(to_vec(5), to_vec(6))
    with pytest.raises(ValueError):
        ops.sub(to_vec(100), to_vec(101))
    with pytest.raises(ValueError):
        ops.sub(to_vec(5), to_vec(10))


def test_sub_to_zero_is_canonical(ops):
    assert ops.sub(to_vec(12345), to_vec(12345)) == b"\x00"
    assert ops.sub(to_vec(1000), to_vec(999)) == b"\x01"


def test_compare(ops):
    rng = random.Random(7)
    for _ in range(5000):
        a = rng.randrange(10**8)
        b = rng.randrange(10**8)
        want = (a > b) - (a < b)
        assert ops.compare(to_vec(a), to_vec(b)) == want
    assert ops.compare(b"\x00", b"\x00") == 0


def test_is_pal(ops):
    for n in range(20_000):
        s = str(n)
        assert ops.is_pal(to_vec(n)) == (s == s[::-1])


def test_scans(ops):
    assert ops.digit_sum(to_vec(0)) == 0
    assert ops.digit_sum(to_vec(987654321)) == 45
    assert ops.count_nonzero(to_vec(0)) == 0
    assert ops.count_nonzero(to_vec(7800001500)) == 4
    assert ops.trailing_zeros(to_vec(0)) == 0
    assert ops.trailing_zeros(to_vec(7)) == 0
    assert ops.trailing_zeros(to_vec(7800001500)) == 2
    assert ops.trailing_zeros(to_vec(10**9)) == 9


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")
def test_backends_agree_on_random_vectors():
    mods = [backend.get(name) for name in backend.available()]
    rng = random.Random(55)
    for _ in range(300):
        a = rng.randrange(10 ** rng.randint(1, 60))
        b = rng.randrange(10 ** rng.randint(1, 60))
        va, vb = to_vec(a), to_vec(b)
        results = set()
        for mod in mods:
            hi, lo = (va, vb) if mod.compare(va, vb) >= 0 else (vb, va)
            results.add(
                (
                    mod.add(va, vb),
                    mod.sub(hi, lo),
                    mod.compare(va, vb),
                    mod.is_pal(va),
                    mod.digit_sum(va),
                    mod.count_nonzero(va),
                    mod.trailing_zeros(va),
                )
            )
        assert len(results) == 1

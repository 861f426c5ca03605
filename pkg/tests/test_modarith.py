import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import binary_gcd, euclid_recursive, naive_pow
from rmverify.errors import InvalidArgumentError, InvalidModulusError, NoInverseError
from rmverify.modarith import (
    decompose_pow2,
    ext_gcd,
    gcd,
    mod_inverse,
    mul_mod,
    pow_mod,
    pow_mod_array,
    pow_mod_counted,
)

u32 = st.integers(0, 2**32 - 1)


def test_mul_mod_examples():
    assert mul_mod(7, 8, 9) == 2
    assert mul_mod(0, 5, 11) == 0
    for n in (2, 3, 97, 2**64 + 13):
        assert mul_mod(n - 1, n - 1, n) == 1


def test_mul_mod_is_exact_past_64_bits():
    n = 2**127 - 1
    a, b = n - 2, n - 3
    assert mul_mod(a, b, n) == 6


@pytest.mark.parametrize("fn", [lambda n: mul_mod(0, 0, n), lambda n: pow_mod(0, 3, n)])
@pytest.mark.parametrize("n", [0, 1])
def test_small_modulus_rejected(fn, n):
    with pytest.raises(InvalidModulusError):
        fn(n)


def test_pow_mod_examples():
    assert pow_mod(2, 10, 1000) == 24
    assert pow_mod(4, 8, 9) == naive_pow(4, 8, 9) == 7
    for a, n in [(0, 2), (5, 7), (12, 13)]:
        assert pow_mod(a, 0, n) == 1


def test_pow_mod_small_grid_matches_naive():
    for n in range(2, 40):
        for a in range(n):
            for e in range(0, 70):
                assert pow_mod(a, e, n) == naive_pow(a, e, n)


@given(st.integers(0, 2**200), st.integers(2, 2**64))
def test_multiplication_count_bound(e, n):
    _, mults = pow_mod_counted(3, e, n)
    assert mults <= 2 * e.bit_length()


@given(st.integers(0, 2**80), st.integers(0, 5000), st.integers(2, 2**80))
def test_pow_mod_matches_builtin(a, e, n):
    assert pow_mod(a % n, e, n) == pow(a, e, n)


@pytest.mark.parametrize("n", [2, 9, 561, 4093, 2**31 - 1, 2**31 + 11, 2**61 - 1])
def test_pow_mod_array_matches_scalar(n):
    rng = random.Random(n)
    bases = [rng.randrange(n) for _ in range(200)]
    for e in (0, 1, 2, 17, n - 1):
        got = pow_mod_array(np.array(bases, dtype=object), e, n)
        assert [int(v) for v in got] == [pow_mod(a, e, n) for a in bases]


def test_gcd_examples():
    assert gcd(12, 8) == 4
    assert gcd(3, 5) == 1
    assert gcd(17, 0) == 17
    assert gcd(0, 0) == 0


def test_ext_gcd_examples():
    assert ext_gcd(12, 8) == (1, -1, 4)
    assert ext_gcd(3, 5) == (2, -1, 1)
    assert ext_gcd(0, 0) == (1, 0, 0)
    for a in (1, 2, 99, 2**40):
        assert ext_gcd(a, 0) == (1, 0, a)


def test_ext_gcd_matches_recursion_exhaustively():
    for a in range(0, 120):
        for b in range(0, 120):
            assert ext_gcd(a, b) == euclid_recursive(a, b)


@given(u32, u32)
def test_ext_gcd_bezout(a, b):
    x, y, d = ext_gcd(a, b)
    assert a * x + b * y == d
    assert d == binary_gcd(a, b)
    if d:
        assert a % d == 0 and b % d == 0
    assert (x, y, d) == euclid_recursive(a, b)


def test_ext_gcd_deep_fibonacci_input():
    # consecutive Fibonacci numbers maximise the quotient chain
    a, b = 1, 1
    for _ in range(3000):
        a, b = b, a + b
    x, y, d = ext_gcd(b, a)
    assert d == 1 and b * x + a * y == 1


def test_mod_inverse_examples():
    assert mod_inverse(4, 9) == 7
    for n in (2, 3, 10, 561):
        assert mod_inverse(1, n) == 1
    with pytest.raises(NoInverseError) as info:
        mod_inverse(2, 4)
    assert info.value.gcd == 2


def test_mod_inverse_range_checked():
    with pytest.raises(InvalidArgumentError):
        mod_inverse(0, 9)
    with pytest.raises(InvalidArgumentError):
        mod_inverse(9, 9)


def test_mod_inverse_exists_iff_coprime():
    for n in range(2, 200):
        for a in range(1, n):
            if binary_gcd(a, n) == 1:
                t = mod_inverse(a, n)
                assert 1 <= t < n and mul_mod(a, t, n) == 1
            else:
                with pytest.raises(NoInverseError):
                    mod_inverse(a, n)


def test_decompose_pow2_examples():
    assert decompose_pow2(560) == (35, 4)
    assert decompose_pow2(1) == (1, 0)
    assert decompose_pow2(4) == (1, 2)
    with pytest.raises(InvalidArgumentError):
        decompose_pow2(0)


def test_decompose_pow2_first_million():
    for m in range(1, 10**6 + 1):
        s, h = decompose_pow2(m)
        assert s & 1 and s << h == m

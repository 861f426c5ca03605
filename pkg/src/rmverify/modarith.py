"""
Exact modular arithmetic and the extended Euclid algorithm.

Python integers are arbitrary precision, so every product here is exact.
The array helpers switch to object dtype once ``n`` is too large for a
product of two residues to fit in int64.
"""
import math
from typing import NamedTuple

import numpy as np

from .errors import InvalidArgumentError, InvalidModulusError, NoInverseError

# residues below this bound multiply without leaving int64
_INT64_SAFE = 1 << 31


class BezoutTriple(NamedTuple):
    x: int
    y: int
    d: int


class PowTwoDecomposition(NamedTuple):
    s: int
    h: int


def _check_modulus(n):
    if n < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {n}")


def mul_mod(a, b, n):
    _check_modulus(n)
    return a * b % n


def pow_mod_counted(a, e, n):
    """Right-to-left square-and-multiply.

    Returns ``(a**e % n, multiplications)`` where the count covers every
    modular product performed, and never exceeds ``2 * e.bit_length()``.
    """
    _check_modulus(n)
    if e < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
    result = 1
    base = a % n
    mults = 0
    while e:
        if e & 1:
            result = result * base % n
            mults += 1
        e >>= 1
        if e:
            base = base * base % n
            mults += 1
    return result % n, mults


def pow_mod(a, e, n):
    return pow_mod_counted(a, e, n)[0]


def pow_mod_array(a, e, n):
    """Elementwise ``a**e % n`` for an array of residues ``a``."""
    _check_modulus(n)
    if e < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
    dtype = np.int64 if n < _INT64_SAFE else object
    base = np.asarray(a).astype(dtype) % n
    result = np.ones_like(base)
    while e:
        if e & 1:
            result = result * base % n
        e >>= 1
        if e:
            base = base * base % n
    return result % n


def gcd(a, b):
    return math.gcd(a, b)


def ext_gcd(a, b):
    """Extended Euclid, returning ``(x, y, d)`` with ``a*x + b*y == d == gcd(a, b)``.

    Iterative, but returns exactly the triple the textbook recursion gives:
    swap when ``a < b``, ``(1, 0, a)`` at ``b == 0``, and on the way back up
    ``(x, z - (a // b) * x)`` from the child's ``(z, x)``.
    """
    if a < 0 or b < 0:
        raise InvalidArgumentError("ext_gcd takes natural numbers")
    swapped = a < b
    if swapped:
        a, b = b, a
    quotients = []
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    x, y = 1, 0
    for q in reversed(quotients):
        x, y = y, x - q * y
    if swapped:
        x, y = y, x
    return BezoutTriple(x, y, a)


def mod_inverse(a, n):
    _check_modulus(n)
    if not 1 <= a < n:
        raise InvalidArgumentError(f"need 1 <= a < n, got a={a}, n={n}")
    x, _, d = ext_gcd(a, n)
    if d != 1:
        raise NoInverseError(a, n, d)
    return x % n


def decompose_pow2(m):
    """Split ``m`` as ``s * 2**h`` with ``s`` odd."""
    if m < 1:
        raise InvalidArgumentError(f"decompose_pow2 needs m >= 1, got {m}")
    h = (m & -m).bit_length() - 1
    return PowTwoDecomposition(m >> h, h)

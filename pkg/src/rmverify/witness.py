"""
Witnesses of compositeness and the certificates that bound them.

A base ``A`` is a non-witness for odd ``P`` when the Rabin-Miller rounds
accept ``(P, A)``. For a composite ``P`` with a known divisor we build a unit
``t`` (with inverse ``t_inv``) such that ``A -> A*t mod P`` sends every
non-witness to a witness. Multiplication by a unit is injective, so at most
half of ``1..P-1`` can be non-witnesses.

The certificate comes from one of three constructions:

* ``P == q**e``: ``t = 1 + q**(e-1)``, whose ``P-1`` power is never 1.
* some ``z`` has ``z**(P-1) == -1``: ``t = z``.
* otherwise, with ``P == q*r`` coprime, ``t`` is ``z`` modulo ``q`` and 1
  modulo ``r``, where ``z**(s*2**i) == -1`` at the largest level ``i`` that
  has such a ``z``.

The second construction is kept for completeness. No odd ``P`` admits it:
``z**(P-1) == -1`` would force ``2**(h+1)`` to divide ``p-1`` for every prime
``p | P``, and then ``P == 1 (mod 2**(h+1))``, contradicting ``P-1 == s*2**h``.
"""
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import (
    InvalidArgumentError,
    InvalidModulusError,
    SearchCapExceeded,
    WrongCaseError,
)
from .modarith import decompose_pow2, ext_gcd, mul_mod, pow_mod, pow_mod_array
from .splitfactor import PerfectPower, split_from_divisor

DEFAULT_SEARCH_CAP = 1 << 20

# integer codes used by classify_all
NON_WITNESS, TYPE1, TYPE2 = 0, 1, 2


@dataclass(frozen=True)
class NonWitness:
    kind = "non_witness"


@dataclass(frozen=True)
class Type1:
    """``A**(P-1) != 1 (mod P)``: the Fermat check fails."""
    kind = "type1"


@dataclass(frozen=True)
class Type2:
    """The last non-1 entry of the squaring chain is not ``P-1``.

    ``last_non_one`` squares to 1 modulo ``P``, so it is a nontrivial
    square root of unity.
    """
    last_non_one: int
    position: int

    kind = "type2"


WitnessClass = Union[NonWitness, Type1, Type2]


@dataclass(frozen=True)
class PrimePowerCase:
    q: int
    e: int

    kind = "prime_power"


@dataclass(frozen=True)
class AlphaTopCase:
    z: int

    kind = "alpha_top"


@dataclass(frozen=True)
class MinimalIndexCase:
    i: int
    z: int
    q: int
    r: int
    x: int
    y: int

    kind = "minimal_index"


CertificateCase = Union[PrimePowerCase, AlphaTopCase, MinimalIndexCase]


@dataclass(frozen=True)
class WitnessCertificate:
    case: CertificateCase
    t: int
    t_inv: int
    s: int
    h: int


@dataclass
class CertificateReport:
    """Outcome of :func:`verify_certificate`.

    ``failed_check`` is one of ``"inverse"``, ``"decomposition"``,
    ``"maps_to_witness"`` or ``"injective"`` when ``passed`` is false, and
    ``offending`` names the base that broke it (if a base did).
    """
    passed: bool
    non_witnesses: int = 0
    type1_images: int = 0
    type2_images: int = 0
    failed_check: Optional[str] = None
    offending: Optional[int] = None


def _check_odd_modulus(P):
    if P < 3 or P % 2 == 0:
        raise InvalidModulusError(f"need an odd modulus >= 3, got {P}")


def _check_base(P, A):
    if not 1 <= A < P:
        raise InvalidArgumentError(f"base must lie in [1, {P - 1}], got {A}")


def rm_sequence(P, A):
    """``[A**(s*2**j) % P for j in 0..h]`` where ``P - 1 == s * 2**h``."""
    _check_odd_modulus(P)
    _check_base(P, A)
    s, h = decompose_pow2(P - 1)
    x = pow_mod(A, s, P)
    seq = [x]
    for _ in range(h):
        x = mul_mod(x, x, P)
        seq.append(x)
    return seq


def classify(P, A):
    seq = rm_sequence(P, A)
    if seq[-1] != 1:
        return Type1()
    for j in range(len(seq) - 1, -1, -1):
        if seq[j] != 1:
            if seq[j] == P - 1:
                return NonWitness()
            return Type2(last_non_one=seq[j], position=j)
    return NonWitness()


def classify_all(P):
    """Witness codes for every base ``1..P-1`` at once.

    Entry ``A - 1`` is ``NON_WITNESS``, ``TYPE1`` or ``TYPE2``, matching
    :func:`classify` on ``(P, A)``.
    """
    _check_odd_modulus(P)
    s, h = decompose_pow2(P - 1)
    x = pow_mod_array(np.arange(1, P), s, P)
    last = np.ones_like(x)
    for j in range(h + 1):
        if j:
            x = x * x % P
        last = np.where(x != 1, x, last)
    codes = np.full(P - 1, TYPE2, dtype=np.int8)
    codes[(last == 1) | (last == P - 1)] = NON_WITNESS
    codes[x != 1] = TYPE1
    return codes


def _check_cap(P, max_search):
    if max_search is not None and P - 1 > max_search:
        raise SearchCapExceeded(P - 1, max_search)


def alpha_witness(P, s, i, max_search=DEFAULT_SEARCH_CAP):
    """Smallest ``z`` in ``[1, P-1]`` with ``z**(s*2**i) == P-1 (mod P)``, or None."""
    _check_cap(P, max_search)
    e = s << i
    for z in range(1, P):
        if pow_mod(z, e, P) == P - 1:
            return z
    return None


def alpha_table(P, max_search=DEFAULT_SEARCH_CAP):
    """Smallest witness of ``z**(s*2**i) == -1`` for every level ``i = 0..h``.

    Same answers as calling :func:`alpha_witness` per level, computed in one
    vectorised pass over all ``z``.
    """
    _check_odd_modulus(P)
    _check_cap(P, max_search)
    s, h = decompose_pow2(P - 1)
    x = pow_mod_array(np.arange(1, P), s, P)
    table = []
    for i in range(h + 1):
        if i:
            x = x * x % P
        hits = np.flatnonzero(x == P - 1)
        table.append(int(hits[0]) + 1 if hits.size else None)
    return table


def find_minimal_index(P, max_search=DEFAULT_SEARCH_CAP):
    """Least ``i`` with a ``-1`` root at level ``i`` but none at ``i + 1``.

    Returns ``(i, z)`` with ``z`` the smallest root at level ``i``.
    """
    table = alpha_table(P, max_search)
    if table[-1] is not None:
        raise WrongCaseError(f"{table[-1]}**({P - 1}) == -1 mod {P}; no minimal index exists")
    i = next(j for j in range(len(table) - 1) if table[j + 1] is None)
    return i, table[i]


def build_certificate(P, D, max_search=DEFAULT_SEARCH_CAP):
    if P < 9 or P % 2 == 0:
        raise InvalidArgumentError(f"certificates need an odd composite P >= 9, got {P}")
    if not 1 < D < P or P % D:
        raise InvalidArgumentError(f"{D} is not a nontrivial divisor of {P}")
    s, h = decompose_pow2(P - 1)
    split = split_from_divisor(P, D)

    if isinstance(split, PerfectPower):
        t = 1 + split.q ** (split.e - 1)
        return WitnessCertificate(PrimePowerCase(split.q, split.e), t, pow_mod(t, P - 1, P), s, h)

    table = alpha_table(P, max_search)
    if table[h] is not None:
        z = table[h]
        return WitnessCertificate(AlphaTopCase(z), z, pow_mod(z, 2 * (P - 1) - 1, P), s, h)

    i = next(j for j in range(h) if table[j + 1] is None)
    z = table[i]
    q, r = split.q, split.r
    x, y, _ = ext_gcd(q, r)
    t = (x * q + y * z * r) % P
    t_inv = pow_mod(t, (s << (i + 1)) - 1, P)
    return WitnessCertificate(MinimalIndexCase(i, z, q, r, x, y), t, t_inv, s, h)


def verify_certificate(P, cert):
    _check_odd_modulus(P)
    t = cert.t
    if not (1 <= t < P and 1 <= cert.t_inv < P and t * cert.t_inv % P == 1):
        return CertificateReport(passed=False, failed_check="inverse")
    if cert.s % 2 == 0 or cert.s << cert.h != P - 1:
        return CertificateReport(passed=False, failed_check="decomposition")

    codes = classify_all(P)
    bases = np.flatnonzero(codes == NON_WITNESS) + 1
    images = bases.astype(object) * t % P if P >= 1 << 31 else bases * t % P
    report = CertificateReport(passed=True, non_witnesses=len(bases))

    if np.any(images == 0):
        report.passed, report.failed_check = False, "injective"
        report.offending = int(bases[np.flatnonzero(images == 0)[0]])
        return report
    image_codes = codes[images.astype(np.int64) - 1]
    bad = np.flatnonzero(image_codes == NON_WITNESS)
    if bad.size:
        report.passed, report.failed_check = False, "maps_to_witness"
        report.offending = int(bases[bad[0]])
        return report
    _, first, counts = np.unique(images, return_index=True, return_counts=True)
    if np.any(counts > 1):
        report.passed, report.failed_check = False, "injective"
        dup = images[first[np.flatnonzero(counts > 1)[0]]]
        report.offending = int(bases[np.flatnonzero(images == dup)[1]])
        return report
    report.type1_images = int(np.count_nonzero(image_codes == TYPE1))
    report.type2_images = int(np.count_nonzero(image_codes == TYPE2))
    return report

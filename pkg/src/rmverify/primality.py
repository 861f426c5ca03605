"""
Fermat and Rabin-Miller tests, seeded amplification, and brute-force oracles.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Union

from .errors import InvalidArgumentError, SearchCapExceeded
from .modarith import gcd, pow_mod
from .witness import NonWitness, WitnessClass, classify

DEFAULT_ORACLE_CAP = 10**6

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Accept:
    pass


@dataclass(frozen=True)
class Reject:
    """``witness_class`` is None when the input was rejected for being even or 1."""
    witness_class: Optional[WitnessClass] = None


TestVerdict = Union[Accept, Reject]


@dataclass(frozen=True)
class RandomState:
    """splitmix64 generator state; ``next()`` returns the draw and the new state."""
    state: int = 0

    def next(self):
        state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31), RandomState(state)


@dataclass
class ProbablePrimeResult:
    verdict: str
    rounds_run: int
    witnesses_found: List[int] = field(default_factory=list)
    witness_class: Optional[WitnessClass] = None

    @property
    def is_composite(self):
        return self.verdict == "composite"


def fermat_test(p, a):
    if p < 3:
        raise InvalidArgumentError(f"fermat_test needs p >= 3, got {p}")
    if not 1 <= a < p:
        raise InvalidArgumentError(f"base must lie in [1, {p - 1}], got {a}")
    return pow_mod(a, p - 1, p) == 1


def rabin_miller(p, a):
    if p % 2 == 0:
        return Accept() if p == 2 else Reject()
    if p == 1:
        return Reject()
    if not 1 <= a < p:
        raise InvalidArgumentError(f"base must lie in [1, {p - 1}], got {a}")
    cls = classify(p, a)
    if isinstance(cls, NonWitness):
        return Accept()
    return Reject(cls)


def sample_base(p, rng):
    """Uniform base in ``[1, p-1]`` by rejection sampling on 64-bit draws."""
    if p < 3:
        raise InvalidArgumentError(f"sample_base needs p >= 3, got {p}")
    span = p - 1
    if span > 1 << 64:
        raise InvalidArgumentError("sample space exceeds a 64-bit draw")
    limit = ((1 << 64) // span) * span
    while True:
        r, rng = rng.next()
        if r < limit:
            return r % span + 1, rng


def probable_prime(p, rounds, seed):
    """Amplified Rabin-Miller: ``rounds`` bases drawn from splitmix64(seed)."""
    if rounds < 1:
        raise InvalidArgumentError(f"rounds must be >= 1, got {rounds}")
    if p < 3 or p % 2 == 0:
        verdict = rabin_miller(p, 1)
        return ProbablePrimeResult("probably_prime" if isinstance(verdict, Accept) else "composite", 0)
    rng = RandomState(seed & _MASK64)
    for k in range(rounds):
        a, rng = sample_base(p, rng)
        verdict = rabin_miller(p, a)
        if isinstance(verdict, Reject):
            return ProbablePrimeResult("composite", k + 1, [a], verdict.witness_class)
    return ProbablePrimeResult("probably_prime", rounds)


def smallest_divisor(n):
    """Least ``d >= 2`` dividing ``n`` (``n`` itself when prime); None for ``n < 2``."""
    if n < 2:
        return None
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def is_prime_oracle(n):
    return n >= 2 and smallest_divisor(n) == n


def _check_oracle_cap(n, cap):
    if cap is not None and n > cap:
        raise SearchCapExceeded(n, cap)


def is_carmichael(n, cap=DEFAULT_ORACLE_CAP):
    if n < 3 or is_prime_oracle(n):
        return False
    _check_oracle_cap(n, cap)
    return all(fermat_test(n, a) for a in range(1, n) if gcd(a, n) == 1)


def totient(n, cap=DEFAULT_ORACLE_CAP):
    """Count of ``a`` in ``[1, n-1]`` coprime to ``n``; ``totient(1) == 0``."""
    if n < 1:
        raise InvalidArgumentError(f"totient needs n >= 1, got {n}")
    _check_oracle_cap(n, cap)
    return sum(1 for a in range(1, n) if gcd(a, n) == 1)

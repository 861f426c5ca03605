"""
Turn one nontrivial divisor of a composite into a perfect power or a
coprime factorisation.
"""
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import InvalidDivisorError
from .modarith import gcd


@dataclass(frozen=True)
class PerfectPower:
    """``P == q ** e`` with ``q > 1`` and ``e > 1``."""
    q: int
    e: int

    kind = "perfect_power"


@dataclass(frozen=True)
class CoprimeSplit:
    """``P == q * r`` with ``q, r > 1`` and ``gcd(q, r) == 1``."""
    q: int
    r: int

    kind = "coprime_split"


SplitResult = Union[PerfectPower, CoprimeSplit]


def split_from_divisor(P, D, on_step: Optional[Callable[[int, int, int], None]] = None):
    """Run the gcd-refinement loop from the state ``(D, 1, P // D)``.

    While ``G = gcd(Q, R) > 1`` the state moves to ``(Q, E + 1, R / Q)`` when
    ``G == Q`` and to ``(Q / G, E, G**E * R)`` otherwise; ``P == Q**E * R``
    holds throughout. ``on_step(Q, E, R)`` is called on the initial state
    and after every iteration.
    """
    if P < 4 or not 1 < D < P or P % D:
        raise InvalidDivisorError(f"{D} is not a nontrivial divisor of {P}")
    q, e, r = D, 1, P // D
    if on_step is not None:
        on_step(q, e, r)
    while (g := gcd(q, r)) > 1:
        if g == q:
            e, r = e + 1, r // q
        else:
            q, r = q // g, g**e * r
        if on_step is not None:
            on_step(q, e, r)
    if r == 1:
        return PerfectPower(q, e)
    return CoprimeSplit(q**e, r)


def verify_split(P, result):
    if isinstance(result, PerfectPower):
        return result.q > 1 and result.e > 1 and result.q**result.e == P
    if isinstance(result, CoprimeSplit):
        q, r = result.q, result.r
        return q > 1 and r > 1 and q * r == P and gcd(q, r) == 1
    return False

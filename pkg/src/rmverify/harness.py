"""
Exhaustive sweeps over ranges of odd moduli.

Every function here classifies all bases of every modulus it touches, so
cost grows quadratically with the range; they are meant for moduli up to a
few tens of thousands. ``workers > 1`` spreads moduli over processes; rows
are sorted by ``p`` afterwards, so output does not depend on scheduling.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .errors import InvalidModulusError, SearchCapExceeded
from .primality import is_carmichael, is_prime_oracle, smallest_divisor
from .witness import (
    DEFAULT_SEARCH_CAP,
    NON_WITNESS,
    TYPE1,
    TYPE2,
    AlphaTopCase,
    MinimalIndexCase,
    PrimePowerCase,
    build_certificate,
    classify_all,
    verify_certificate,
)

CERTIFICATE_CASES = (PrimePowerCase.kind, AlphaTopCase.kind, MinimalIndexCase.kind)


@dataclass
class CensusRow:
    p: int
    is_prime: bool
    non_witness_count: int
    type1_count: int
    type2_count: int
    sample_space: int
    # always True for primes, where the bound does not apply
    half_bound_ok: bool

    def to_dict(self):
        return asdict(self)


@dataclass
class CertificateOutcome:
    p: int
    divisor: int
    case: Optional[str]
    passed: bool
    failed_check: Optional[str] = None
    offending: Optional[int] = None
    error: Optional[str] = None


@dataclass
class CertificateSweep:
    outcomes: List[CertificateOutcome] = field(default_factory=list)
    case_tally: Dict[str, int] = field(default_factory=dict)

    @property
    def failures(self):
        return [o for o in self.outcomes if not o.passed]

    @property
    def cases_never_fired(self):
        return [c for c in CERTIFICATE_CASES if not self.case_tally.get(c)]

    def summary(self):
        return {
            "certificates_checked": len(self.outcomes),
            "case_tally": {c: self.case_tally.get(c, 0) for c in CERTIFICATE_CASES},
            "cases_never_fired": self.cases_never_fired,
            "failures": [asdict(o) for o in self.failures],
        }


def witness_census(p):
    if p < 3 or p % 2 == 0:
        raise InvalidModulusError(f"census needs an odd modulus >= 3, got {p}")
    codes = classify_all(p)
    counts = np.bincount(codes, minlength=3)
    nw, t1, t2 = int(counts[NON_WITNESS]), int(counts[TYPE1]), int(counts[TYPE2])
    prime = is_prime_oracle(p)
    return CensusRow(
        p=p,
        is_prime=prime,
        non_witness_count=nw,
        type1_count=t1,
        type2_count=t2,
        sample_space=p - 1,
        half_bound_ok=prime or 2 * nw <= p - 1,
    )


def _odd_moduli(lo, hi):
    start = max(lo, 3) | 1
    return list(range(start, hi + 1, 2))


def _map(fn, items, workers):
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
    return [fn(x) for x in items]


def sweep_density(lo, hi, workers=None):
    rows = _map(witness_census, _odd_moduli(lo, hi), workers)
    return sorted(rows, key=lambda row: row.p)


def half_bound_violations(rows):
    return [row.p for row in rows if not row.is_prime and not row.half_bound_ok]


def false_negatives(rows):
    return [row.p for row in rows if row.is_prime and row.non_witness_count != row.sample_space]


def check_certificate(p, max_search=DEFAULT_SEARCH_CAP):
    d = smallest_divisor(p)
    try:
        cert = build_certificate(p, d, max_search=max_search)
    except (ValueError, SearchCapExceeded) as exc:
        return CertificateOutcome(p, d, None, False, error=str(exc))
    report = verify_certificate(p, cert)
    return CertificateOutcome(p, d, cert.case.kind, report.passed, report.failed_check, report.offending)


def sweep_certificates(lo, hi, workers=None):
    composites = [p for p in _odd_moduli(max(lo, 9), hi) if not is_prime_oracle(p)]
    outcomes = sorted(_map(check_certificate, composites, workers), key=lambda o: o.p)
    tally = Counter(o.case for o in outcomes if o.case is not None)
    return CertificateSweep(outcomes, dict(tally))


def carmichael_scan(hi):
    return [n for n in range(3, hi + 1) if is_carmichael(n)]

"""Exit criteria, each run at its full range with exact integer checks."""
import random
import subprocess
import sys

import numpy as np
import pytest

from oracles import binary_gcd, naive_pow, rabin_miller_reference, sieve
from rmverify.harness import (
    CERTIFICATE_CASES,
    carmichael_scan,
    half_bound_violations,
    sweep_certificates,
    sweep_density,
)
from rmverify.modarith import ext_gcd, gcd, pow_mod, pow_mod_array
from rmverify.primality import (
    Accept,
    RandomState,
    fermat_test,
    is_carmichael,
    rabin_miller,
    sample_base,
)
from rmverify.splitfactor import split_from_divisor, verify_split
from rmverify.witness import NonWitness, Type1, Type2, classify

pytestmark = pytest.mark.acceptance

PRIME = sieve(100_000)
_KIND = {NonWitness: "accept", Type1: "type1", Type2: "type2"}


def test_1_half_bound(criterion):
    rows = [r for r in sweep_density(9, 10_001) if not r.is_prime]
    bad = half_bound_violations(rows)
    assert len(rows) == sum(1 for p in range(9, 10_002, 2) if not PRIME[p])
    criterion("1 half bound, odd composites 9..10001", not bad, f"{len(rows)} moduli, violations={bad[:5]}")


@pytest.fixture(scope="module")
def certificate_sweep():
    return sweep_certificates(9, 5_001)


def test_2_certificate_soundness(criterion, certificate_sweep):
    sweep = certificate_sweep
    expected = [p for p in range(9, 5_002, 2) if not PRIME[p]]
    ok = [o.p for o in sweep.outcomes] == expected and not sweep.failures
    criterion(
        "2 certificate soundness, odd composites 9..5001",
        ok,
        f"{len(sweep.outcomes)} certificates, failures={[o.p for o in sweep.failures][:5]}",
    )


def test_2_certificate_case_coverage(criterion, certificate_sweep):
    missing = certificate_sweep.cases_never_fired
    tally = {c: certificate_sweep.case_tally.get(c, 0) for c in CERTIFICATE_CASES}
    criterion("2 every certificate case fires", not missing, f"tally={tally} never fired={missing}")


def test_3_no_false_negatives(criterion):
    exhaustive = [
        (p, a) for p in range(2, 2_001) if PRIME[p] for a in range(1, p) if rabin_miller(p, a) != Accept()
    ]
    sampled = []
    for p in range(3, 100_001, 2):
        if not PRIME[p]:
            continue
        rng = RandomState(p)
        for _ in range(64):
            a, rng = sample_base(p, rng)
            if rabin_miller(p, a) != Accept():
                sampled.append((p, a))
    criterion("3 no false negatives", not exhaustive and not sampled, f"rejections={(exhaustive + sampled)[:5]}")


def test_4_fermat_lemma(criterion):
    bad, checked = [], 0
    for p in range(9, 5_001, 2):
        if PRIME[p] or is_carmichael(p):
            continue
        units = np.array([a for a in range(1, p) if gcd(a, p) == 1])
        passers = int(np.count_nonzero(pow_mod_array(units, p - 1, p) == 1))
        if p < 1_000:
            assert passers == sum(fermat_test(p, int(a)) for a in units)
        checked += 1
        if 2 * passers > len(units):
            bad.append(p)
    criterion("4 Fermat lemma, non-Carmichael odd composites <= 5000", not bad, f"{checked} moduli, violations={bad[:5]}")


def test_5_carmichael(criterion):
    found = carmichael_scan(2_000)
    criterion("5 Carmichael numbers <= 2000", found == [561, 1105, 1729], f"found={found}")


def test_6_extended_euclid(criterion):
    rng = random.Random(20240601)
    bad = []
    for _ in range(100_000):
        a, b = rng.getrandbits(32), rng.getrandbits(32)
        x, y, d = ext_gcd(a, b)
        if a * x + b * y != d or d != binary_gcd(a, b) or (d and (a % d or b % d)):
            bad.append((a, b))
    pinned = ext_gcd(12, 8) == (1, -1, 4) and all(ext_gcd(a, 0) == (1, 0, a) for a in (0, 1, 7, 2**32 - 1))
    criterion("6 extended Euclid, 1e5 random 32-bit pairs", not bad and pinned, f"bad={bad[:5]} pinned={pinned}")


def test_7_split_invariants(criterion):
    bad, runs = [], 0
    for P in range(4, 10_001):
        if PRIME[P]:
            continue
        for D in range(2, P):
            if P % D:
                continue
            steps = []
            result = split_from_divisor(P, D, on_step=lambda q, e, r: steps.append((q, e, r)))
            runs += 1
            invariants = all(q**e * r == P and q > 1 and (r != 1 or e > 1) for q, e, r in steps)
            if not (verify_split(P, result) and invariants):
                bad.append((P, D))
    criterion("7 split invariants, composites <= 10000, every divisor", not bad, f"{runs} runs, bad={bad[:5]}")


def test_8_oracle_agreement(criterion):
    rng = random.Random(8)
    pow_bad, triples = [], 0
    for _ in range(245):
        n = rng.randint(2, 4096)
        a = rng.randrange(n)
        acc = 1 % n
        for e in range(4097):
            if pow_mod(a, e, n) != acc:
                pow_bad.append((a, e, n))
            acc = acc * a % n
            triples += 1
    assert acc == naive_pow(a, 4097, n)

    classify_bad = [
        (p, a) for p in range(3, 2_001, 2) for a in range(1, p) if _KIND[type(classify(p, a))] != rabin_miller_reference(p, a)
    ]
    criterion(
        "8 oracle agreement",
        triples >= 10**6 and not pow_bad and not classify_bad,
        f"{triples} pow triples, mismatches={(pow_bad + classify_bad)[:5]}",
    )


def test_9_reproducibility(criterion):
    argv = [sys.executable, "-m", "rmverify", "test", "561", "--rounds", "20", "--seed", "0"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    ok = runs[0] == runs[1] and b'"verdict":"composite"' in runs[0]
    criterion("9 reproducible `test 561 --rounds 20 --seed 0`", ok, runs[0].decode().strip())

"""
Carmichael numbers fool Fermat, not Rabin-Miller
================================================

561 passes the Fermat check for every base coprime to it. The squaring
chain of a Rabin-Miller round still exposes it.
"""
from math import gcd

from rmverify import fermat_test, probable_prime, rabin_miller, rm_sequence, totient
from rmverify.harness import carmichael_scan

print("Carmichael numbers up to 3000:", carmichael_scan(3000))

n = 561
fermat_passers = sum(fermat_test(n, a) for a in range(1, n))
units = sum(gcd(a, n) == 1 for a in range(1, n))
print(f"{n}: {fermat_passers} Fermat passers, {units} units, totient = {totient(n)}")

# base 2 passes Fermat, yet the chain ends 67 -> 1 and 67 is not -1
print("sequence for base 2:", rm_sequence(n, 2))
print("Rabin-Miller verdict:", rabin_miller(n, 2))

# amplified test: reproducible for a fixed seed
for p in (561, 1105, 7919, 2**61 - 1):
    result = probable_prime(p, rounds=20, seed=0)
    print(f"probable_prime({p}) -> {result.verdict} after {result.rounds_run} round(s)", result.witnesses_found)

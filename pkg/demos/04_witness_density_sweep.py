"""
How close do composites get to the one-half bound?
==================================================

Classify every base of every odd modulus in a range and list the
composites with the largest share of non-witnesses.
"""
from rmverify.harness import false_negatives, half_bound_violations, sweep_certificates, sweep_density

rows = sweep_density(3, 3001)
composites = [r for r in rows if not r.is_prime]
print(f"{len(rows)} odd moduli, {len(composites)} composite")
print("half-bound violations:", half_bound_violations(rows))
print("primes with a witness:", false_negatives(rows))

worst = sorted(composites, key=lambda r: r.non_witness_count / r.sample_space, reverse=True)[:8]
print("\n    p  non-witnesses  share")
for r in worst:
    print(f"{r.p:5d}  {r.non_witness_count:13d}  {r.non_witness_count / r.sample_space:.4f}")

certs = sweep_certificates(9, 3001)
print("\ncertificate cases:", certs.summary()["case_tally"])
print("failures:", len(certs.failures))

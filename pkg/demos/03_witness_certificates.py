"""
Certificates: every non-witness maps to a witness
=================================================

For a composite P with a known divisor we build a unit t. Multiplying any
non-witness by t gives a witness, and since t is invertible no two
non-witnesses share an image. That pairing caps non-witnesses at half of
the bases.
"""
from rmverify import build_certificate, classify, smallest_divisor, split_from_divisor, verify_certificate
from rmverify.witness import NonWitness

for P in (9, 15, 45, 561, 1105):
    D = smallest_divisor(P)
    split = split_from_divisor(P, D)
    cert = build_certificate(P, D)
    report = verify_certificate(P, cert)
    print(f"P={P} D={D} split={split}")
    print(f"  case={cert.case} t={cert.t} t_inv={cert.t_inv} passed={report.passed}")
    pairs = [(A, A * cert.t % P) for A in range(1, P) if classify(P, A) == NonWitness()]
    shown = ", ".join(f"{A}->{img} ({classify(P, img).kind})" for A, img in pairs[:6])
    print(f"  {report.non_witnesses} non-witnesses: {shown}{' ...' if len(pairs) > 6 else ''}")

"""
Extended Euclid and modular inverses
====================================

Bezout coefficients come straight out of the recursive Euclid algorithm;
they can be negative, and only the inverse is normalised into [1, n).
"""
from rmverify import decompose_pow2, ext_gcd, mod_inverse, pow_mod
from rmverify.modarith import pow_mod_counted

for a, b in [(12, 8), (3, 5), (240, 46), (17, 0)]:
    x, y, d = ext_gcd(a, b)
    print(f"ext_gcd({a}, {b}) = ({x}, {y}, {d})   check: {a}*{x} + {b}*{y} = {a * x + b * y}")

# the inverse of 4 mod 9 comes from the Bezout coefficient of 4
print("inverse of 4 mod 9:", mod_inverse(4, 9))

# square-and-multiply never needs more than two products per exponent bit
e = 2**64 - 59
value, mults = pow_mod_counted(3, e, 10**9 + 7)
print(f"3^e mod 1e9+7 = {value} using {mults} multiplications for a {e.bit_length()}-bit exponent")
print("2^10 mod 1000 =", pow_mod(2, 10, 1000))

# p - 1 = s * 2^h drives the squaring chain of a Rabin-Miller round
print("560 =", "{} * 2^{}".format(*decompose_pow2(560)))

"""Rabin-Miller primality testing with exhaustively checkable witness certificates."""
from .errors import (
    InvalidArgumentError,
    InvalidDivisorError,
    InvalidModulusError,
    NoInverseError,
    SearchCapExceeded,
    WrongCaseError,
)
from .modarith import (
    BezoutTriple,
    PowTwoDecomposition,
    decompose_pow2,
    ext_gcd,
    gcd,
    mod_inverse,
    mul_mod,
    pow_mod,
)
from .primality import (
    Accept,
    RandomState,
    Reject,
    fermat_test,
    is_carmichael,
    is_prime_oracle,
    probable_prime,
    rabin_miller,
    sample_base,
    smallest_divisor,
    totient,
)
from .splitfactor import CoprimeSplit, PerfectPower, split_from_divisor, verify_split
from .witness import (
    NonWitness,
    Type1,
    Type2,
    WitnessCertificate,
    alpha_witness,
    build_certificate,
    classify,
    find_minimal_index,
    rm_sequence,
    verify_certificate,
)

__version__ = "0.1.0"

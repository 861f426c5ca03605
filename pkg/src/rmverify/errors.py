"""Exception types raised across the package."""


class InvalidModulusError(ValueError):
    pass


class InvalidArgumentError(ValueError):
    pass


class NoInverseError(ValueError):
    def __init__(self, a, n, gcd):
        super().__init__(f"{a} has no inverse modulo {n} (gcd = {gcd})")
        self.gcd = gcd


class InvalidDivisorError(ValueError):
    pass


class WrongCaseError(ValueError):
    pass


class SearchCapExceeded(RuntimeError):
    """An exhaustive search was asked to scan more candidates than allowed."""

    def __init__(self, size, cap):
        super().__init__(f"exhaustive search over {size} candidates exceeds cap {cap}")
        self.size = size
        self.cap = cap

class NotDivisible(ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""

    def __init__(self, num=None, den=None):
        self.num, self.den = num, den
        msg = "not divisible" if num is None else f"{num} is not divisible by {den}"
        super().__init__(msg)


class ConsistencyError(ArithmeticError):
    """A matrix is not the matrix of an inner automorphism (to its order)."""

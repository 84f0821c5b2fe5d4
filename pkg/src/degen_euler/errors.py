"""Exception types raised by the engine."""


class NonUnitConstantTerm(ValueError):
    """Series reciprocal requires a nonzero rational constant term."""


class IndexOutOfRange(IndexError):
    """Sequence index outside the defined triangle/range."""


class ParityViolation(ValueError):
    """An identity hypothesis requires an odd parameter."""


class NonOddPrime(ValueError):
    """Fermionic sums are defined for odd primes only."""


class DenominatorNotInvertible(ValueError):
    """A denominator shares a factor with p, so no congruence mod p^M exists."""


class BudgetExceeded(ValueError):
    """The requested fermionic sum exceeds the configured term budget."""

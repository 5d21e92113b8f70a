"""Exception hierarchy shared by every module of the package."""


class QuarticTorsionError(Exception):
    """Base class for all errors raised by quartic_torsion."""


class PolynomialSyntaxError(QuarticTorsionError, ValueError):
    """Malformed polynomial text. ``position`` is a 0-based column."""

    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class UnknownVariable(PolynomialSyntaxError):
    def __init__(self, position, symbol):
        self.symbol = symbol
        super().__init__(position, f"unknown variable {symbol!r} (expected X, Y or Z)")


class CurveValidationError(QuarticTorsionError, ValueError):
    """The input polynomial cannot define the kind of curve we work with."""


class ZeroPolynomial(CurveValidationError):
    pass


class NotHomogeneous(CurveValidationError):
    pass


class WrongDegree(CurveValidationError):
    def __init__(self, degree, expected=4):
        self.degree = degree
        self.expected = expected
        super().__init__(f"expected a form of degree {expected}, got degree {degree}")


class NotSemiInvariant(CurveValidationError):
    """Two monomials of the polynomial carry different characters."""

    def __init__(self, first, second, modulus):
        # first/second are (monomial, character) pairs
        self.first = first
        self.second = second
        self.modulus = modulus
        (m1, c1), (m2, c2) = first, second
        super().__init__(
            f"not semi-invariant: {m1} has character {c1} but {m2} has "
            f"character {c2} (mod {modulus})"
        )


class WrongDimension(QuarticTorsionError, ValueError):
    pass


class ModulusMismatch(QuarticTorsionError, ValueError):
    pass


class ConfigError(QuarticTorsionError, ValueError):
    pass

"""Sparse homogeneous polynomials in X, Y, Z with exact rational coefficients.

Polynomials are immutable.  The canonical term order is graded reverse
lexicographic with X > Y > Z; printing always lists terms from the largest
monomial down, so ``str(f)`` is a canonical, reproducible form and
``parse_polynomial(str(f)) == f``.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import NotHomogeneous, PolynomialSyntaxError, UnknownVariable

VARIABLES = ("X", "Y", "Z")

Rational = Union[int, Fraction]


class Monomial(NamedTuple):
    """Exponent triple (i, j, k) standing for X^i Y^j Z^k."""

    x: int = 0
    y: int = 0
    z: int = 0

    def degree(self) -> int:
        return self.x + self.y + self.z

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.x + other.x, self.y + other.y, self.z + other.z)

    def divides(self, other: Monomial) -> bool:
        return self.x <= other.x and self.y <= other.y and self.z <= other.z

    def quotient(self, divisor: Monomial) -> Monomial:
        return Monomial(self.x - divisor.x, self.y - divisor.y, self.z - divisor.z)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.x, other.x), max(self.y, other.y), max(self.z, other.z))

    def is_coprime_to(self, other: Monomial) -> bool:
        return not (self.x and other.x or self.y and other.y or self.z and other.z)

    def __str__(self) -> str:
        factors = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"


def grevlex_key(m: Monomial) -> tuple:
    """Sort key realising degrevlex with X > Y > Z (larger key = larger monomial)."""
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def monomials_of_degree(d: int) -> list[Monomial]:
    """All monomials of total degree d, largest first."""
    out = [Monomial(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]
    out.sort(key=grevlex_key, reverse=True)
    return out


def _axis_index(var) -> int:
    if isinstance(var, int) and 0 <= var < 3:
        return var
    try:
        return VARIABLES.index(str(var).upper())
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps Monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for mono, coeff in items:
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in {tuple(mono)}")
            clean[mono] = clean.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms = {m: c for m, c in clean.items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> Polynomial:
        # trusted constructor: keys are Monomials, values nonzero Fractions
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Rational) -> Polynomial:
        return cls({Monomial(0, 0, 0): c})

    @classmethod
    def variable(cls, name) -> Polynomial:
        exps = [0, 0, 0]
        exps[_axis_index(name)] = 1
        return cls({Monomial(*exps): 1})

    @classmethod
    def monomial(cls, mono, coeff: Rational = 1) -> Polynomial:
        return cls({Monomial(*mono): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(Monomial(*mono), Fraction(0))

    def monomials(self) -> list[Monomial]:
        """Support in canonical (degrevlex, descending) order."""
        return sorted(self._terms, key=grevlex_key, reverse=True)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.degree() for m in self._terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degrees = {m.degree() for m in self._terms}
        if d is None:
            return len(degrees) <= 1
        return degrees <= {d}

    # arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self, var) -> Polynomial:
        idx = _axis_index(var)
        out = {}
        for m, c in self._terms.items():
            e = m[idx]
            if e:
                exps = list(m)
                exps[idx] -= 1
                out[Monomial(*exps)] = c * e
        return Polynomial._wrap(out)

    def relabel(self, perm) -> Polynomial:
        """Rename variables: new variable i is old variable ``perm[i]``."""
        return Polynomial._wrap(
            {Monomial(m[perm[0]], m[perm[1]], m[perm[2]]): c for m, c in self._terms.items()}
        )

    def scale_variables(self, factors) -> Polynomial:
        """Substitute X -> aX, Y -> bY, Z -> cZ for rationals (a, b, c)."""
        a, b, c = (Fraction(t) for t in factors)
        return Polynomial(
            {m: k * a ** m[0] * b ** m[1] * c ** m[2] for m, k in self._terms.items()}
        )

    def evaluate(self, point) -> Fraction:
        x, y, z = (Fraction(t) for t in point)
        return sum((c * x ** m[0] * y ** m[1] * z ** m[2] for m, c in self._terms.items()),
                   Fraction(0))

    # printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, m in enumerate(self.monomials()):
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = str(m)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


# parsing

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message):
        raise PolynomialSyntaxError(self.pos, message)

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def factor(self) -> Monomial:
        ch = self.peek()
        if ch.upper() != ch or ch not in VARIABLES:
            if ch.isalpha() or ch == "_":
                raise UnknownVariable(self.pos, ch)
            self.error(f"expected X, Y or Z, found {ch!r}" if ch else "unexpected end of input")
        self.pos += 1
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.uint()
        exps = [0, 0, 0]
        exps[VARIABLES.index(ch)] = power
        return Monomial(*exps)

    def term(self) -> tuple[Monomial, Fraction]:
        coeff = Fraction(1)
        mono = Monomial(0, 0, 0)
        if self.peek().isdigit():
            coeff = Fraction(self.uint())
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.uint()
                if den == 0:
                    raise PolynomialSyntaxError(at, "zero denominator")
                coeff /= den
        else:
            mono = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
            elif not (ch.isalpha() or ch == "_"):
                break
            mono = mono.times(self.factor())
        return mono, coeff

    def parse(self) -> Polynomial:
        terms: dict[Monomial, Fraction] = {}
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        while True:
            mono, coeff = self.term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = 1 if ch == "+" else -1
            self.pos += 1
        return Polynomial(terms)


def parse_polynomial(text: str) -> Polynomial:
    """Parse the ASCII grammar used throughout the package.

    >>> str(parse_polynomial("X^4 + X*Z^3 + Y^3*Z"))
    'X^4 + Y^3*Z + X*Z^3'
    >>> str(parse_polynomial("2XY^2 - 1/3*Z^3"))
    '2*X*Y^2 - 1/3*Z^3'
    """
    return _Parser(text).parse()


def partial_derivative(f: Polynomial, var) -> Polynomial:
    return f.derivative(var)


def evaluate_at_coordinate_point(f: Polynomial, axis) -> Fraction:
    """Value of f at the coordinate point of ``axis``, i.e. its pure-power coefficient."""
    if not f.is_homogeneous():
        raise NotHomogeneous(f"{f} is not homogeneous")
    if f.is_zero():
        return Fraction(0)
    exps = [0, 0, 0]
    exps[_axis_index(axis)] = f.degree()
    return f.coefficient(exps)

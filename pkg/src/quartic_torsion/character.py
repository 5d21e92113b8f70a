"""Eigenvalue multisets of a finite cyclic action, stored as exponents mod n.

An eigenvalue omega^e of a diagonalisable action of order n is recorded by the
residue e.  Duals negate exponents, tensor products add them, and exterior
powers of a 3-dimensional space take sums over 2- or 3-element subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ModulusMismatch, WrongDimension


@dataclass(frozen=True)
class CharacterMultiset:
    modulus: int
    exponents: tuple

    def __init__(self, modulus: int, exponents: Iterable[int]):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "exponents", tuple(sorted(e % modulus for e in exponents)))

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, e) -> bool:
        return e % self.modulus in self.exponents

    def __str__(self) -> str:
        return f"mod {self.modulus}: [{', '.join(map(str, self.exponents))}]"

    def scaled(self, u: int) -> CharacterMultiset:
        """Exponents multiplied by u (change of primitive root when u is a unit)."""
        return CharacterMultiset(self.modulus, (u * e for e in self.exponents))


def _require_size(c: CharacterMultiset, size: int, what: str) -> None:
    if len(c) != size:
        raise WrongDimension(f"{what} needs a {size}-dimensional character, got {len(c)}")


def _require_same_modulus(a: CharacterMultiset, b: CharacterMultiset) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")


def dual(c: CharacterMultiset) -> CharacterMultiset:
    return CharacterMultiset(c.modulus, (-e for e in c.exponents))


def wedge2(c: CharacterMultiset) -> CharacterMultiset:
    _require_size(c, 3, "wedge2")
    return CharacterMultiset(c.modulus, (a + b for a, b in combinations(c.exponents, 2)))


def wedge3(c: CharacterMultiset) -> CharacterMultiset:
    _require_size(c, 3, "wedge3")
    return CharacterMultiset(c.modulus, [sum(c.exponents)])


def tensor(a: CharacterMultiset, b: CharacterMultiset) -> CharacterMultiset:
    _require_same_modulus(a, b)
    return CharacterMultiset(a.modulus, (x + y for x in a.exponents for y in b.exponents))


def direct_sum(a: CharacterMultiset, b: CharacterMultiset) -> CharacterMultiset:
    _require_same_modulus(a, b)
    return CharacterMultiset(a.modulus, a.exponents + b.exponents)


def contains_trivial(c: CharacterMultiset) -> bool:
    """Whether the eigenvalue 1 (exponent 0) occurs."""
    return 0 in c.exponents

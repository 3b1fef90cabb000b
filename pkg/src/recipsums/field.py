"""Exact arithmetic in Z/pZ: inverses, powers, reciprocal k-th powers.

All values are plain Python integers reduced to [0, p-1]; intermediate
products never touch floating point. Inversion goes through extended
Euclid; Fermat exponentiation is available as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertible, NotPrime, ZeroInverse
from .intmath import inv_mod, is_prime


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ for a prime modulus p."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    def residue(self, value: int) -> "Residue":
        return Residue(value % self.p, self)

    def inv(self, x: int) -> int:
        """Inverse of x mod p as an integer; raises ZeroInverse on x = 0."""
        if x % self.p == 0:
            raise ZeroInverse(f"0 has no inverse modulo {self.p}")
        return inv_mod(x, self.p)

    def recip_power(self, x: int, k: int) -> int:
        """(x**k)^{-1} mod p as an integer, for p not dividing x, k >= 1."""
        if k < 1:
            raise ValueError("power k must be >= 1")
        if x % self.p == 0:
            raise NotInvertible(f"{x} is divisible by {self.p}")
        return inv_mod(pow(x, k, self.p), self.p)


@dataclass(frozen=True)
class Residue:
    """An element of Z/pZ, stored reduced to [0, p-1]."""

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise ValueError(f"residue {self.value} out of range [0, {self.field.p - 1}]")

    def __add__(self, other: "Residue") -> "Residue":
        return Residue((self.value + other.value) % self.field.p, self.field)

    def __sub__(self, other: "Residue") -> "Residue":
        return Residue((self.value - other.value) % self.field.p, self.field)

    def __mul__(self, other: "Residue") -> "Residue":
        return Residue(self.value * other.value % self.field.p, self.field)

    def inv(self) -> "Residue":
        return Residue(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value


def make_field(p: int) -> PrimeField:
    """Validate p with the deterministic primality check and wrap it."""
    return PrimeField(p)


def mod_inv(x: Residue) -> Residue:
    """Multiplicative inverse; raises ZeroInverse for the zero residue."""
    return x.inv()


def recip_power(x: int, k: int, field: PrimeField) -> Residue:
    """The residue 1/x^k mod p, via square-and-multiply then inversion."""
    return Residue(field.recip_power(x, k), field)


def recip_power_fermat(x: int, k: int, field: PrimeField) -> Residue:
    """Cross-check path: 1/x^k computed as x^{k(p-2)} mod p."""
    if x % field.p == 0:
        raise NotInvertible(f"{x} is divisible by {field.p}")
    return Residue(pow(pow(x, k, field.p), field.p - 2, field.p), field)

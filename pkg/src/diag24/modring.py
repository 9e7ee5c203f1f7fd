"""Exact arithmetic in Z_n on the canonical representatives 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError

MAX_MODULUS = 2**32 - 1


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def check_modulus(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"modulus must be an int, got {n!r}")
    if not 1 <= n <= MAX_MODULUS:
        raise DomainError(f"modulus {n} outside [1, {MAX_MODULUS}]")
    return n


@dataclass(frozen=True)
class ResidueRing:
    """The ring Z_n.

    ``Z_1`` is the trivial ring ``{0}`` in which ``0`` is also the identity,
    so ``one`` is ``1 % n`` rather than the literal 1.
    """

    n: int

    def __post_init__(self):
        check_modulus(self.n)

    @property
    def one(self) -> int:
        return 1 % self.n

    def _canon(self, a: int) -> int:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.n:
            raise DomainError(f"{a!r} is not a canonical residue mod {self.n}")
        return a

    def mul(self, a: int, b: int) -> int:
        return (self._canon(a) * self._canon(b)) % self.n

    def inverse(self, a: int) -> int | None:
        """Inverse of ``a`` by the extended Euclidean algorithm, or None."""
        self._canon(a)
        if self.n == 1:
            return 0
        g, x, _ = egcd(a, self.n)
        if g != 1:
            return None
        return x % self.n

    def is_unit(self, a: int) -> bool:
        return gcd(self._canon(a), self.n) == 1

    def iter_units(self):
        n = self.n
        if n == 1:
            yield 0
            return
        for a in range(1, n):
            if gcd(a, n) == 1:
                yield a

    def units(self) -> list[int]:
        return list(self.iter_units())

    def __contains__(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n


def make_ring(n: int) -> ResidueRing:
    return ResidueRing(n)


def mul(ring: ResidueRing, a: int, b: int) -> int:
    return ring.mul(a, b)


def inverse(ring: ResidueRing, a: int) -> int | None:
    return ring.inverse(a)


def units(ring: ResidueRing) -> list[int]:
    return ring.units()

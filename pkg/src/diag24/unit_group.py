"""Structure of the unit group R_n of Z_n.

R_n splits over the prime powers of n by the Chinese remainder theorem and
each local factor is cyclic, except at 2^c with c >= 3 where it is
C_2 + C_{2^(c-2)}.  Structures are kept in primary form: one cyclic order
per local cyclic factor, in ascending prime order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt, lcm, prod
from typing import Callable, NamedTuple

from .errors import DomainError
from .modring import check_modulus, egcd, make_ring
from .tables_cubes import DiagonalReport


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]
    two_adic: tuple[int, int] = field(init=False)

    def __post_init__(self):
        if prod(p**c for p, c in self.factors) != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")
        t = dict(self.factors).get(2, 0)
        object.__setattr__(self, "two_adic", (t, self.n >> t))

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


@dataclass(frozen=True)
class AbelianGroupStructure:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if not self.cyclic_orders or any(c < 1 for c in self.cyclic_orders):
            raise ValueError(f"bad cyclic orders {self.cyclic_orders}")

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders)

    def to_dict(self) -> dict:
        return {
            "cyclic_orders": list(self.cyclic_orders),
            "order": self.order,
            "exponent": self.exponent,
        }


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, isqrt(p) + 1, 2))


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (sqrt(n) <= 2^16 at capacity)."""
    check_modulus(n)
    factors = []
    m = n
    for d in (2, 3):
        c = 0
        while m % d == 0:
            m //= d
            c += 1
        if c:
            factors.append((d, c))
    # 6k +- 1 wheel
    d, step = 5, 2
    while d * d <= m:
        c = 0
        while m % d == 0:
            m //= d
            c += 1
        if c:
            factors.append((d, c))
        d += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    return prod(p ** (c - 1) * (p - 1) for p, c in factorize(n).factors)


def local_unit_structure(p: int, c: int) -> AbelianGroupStructure:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if c < 1:
        raise DomainError(f"exponent must be >= 1, got {c}")
    if p == 2:
        if c == 1:
            return AbelianGroupStructure((1,))
        if c == 2:
            return AbelianGroupStructure((2,))
        return AbelianGroupStructure((2, 2 ** (c - 2)))
    return AbelianGroupStructure((p ** (c - 1) * (p - 1),))


def unit_group_structure(n: int) -> AbelianGroupStructure:
    orders = []
    for p, c in factorize(n).factors:
        orders.extend(o for o in local_unit_structure(p, c).cyclic_orders if o > 1)
    return AbelianGroupStructure(tuple(orders) or (1,))


def group_exponent(s: AbelianGroupStructure) -> int:
    return lcm(*s.cyclic_orders)


def check_diagonal_structural(n: int) -> DiagonalReport:
    """Decide the diagonal property from the exponent of R_n.

    On failure the witness is the smallest unit whose square is not 1,
    paired with its inverse.
    """
    if 2 % group_exponent(unit_group_structure(n)) == 0:
        return DiagonalReport(n, True, None, "structural")
    ring = make_ring(n)
    for a in ring.iter_units():
        if (a * a) % n != 1:
            return DiagonalReport(n, False, (a, ring.inverse(a)), "structural")
    raise AssertionError(f"exponent of R_{n} exceeds 2 but every unit squares to 1")


def is_f2_vector_space(n: int) -> bool:
    return check_diagonal_structural(n).holds


class CrtMaps(NamedTuple):
    forward: Callable[[int], tuple[int, int]]
    backward: Callable[[int, int], int]


def crt_isomorphism(a: int, b: int) -> CrtMaps:
    """Ring isomorphism Z_ab -> Z_a + Z_b and its inverse, for coprime a, b."""
    check_modulus(a)
    check_modulus(b)
    if gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) != 1")
    n = check_modulus(a * b)
    _, s, t = egcd(a, b)
    # s*a + t*b == 1, so t*b is 1 mod a / 0 mod b and s*a the reverse
    e_a = (t * b) % n
    e_b = (s * a) % n
    zn, za, zb = make_ring(n), make_ring(a), make_ring(b)

    def forward(x: int) -> tuple[int, int]:
        zn._canon(x)
        return x % a, x % b

    def backward(x: int, y: int) -> int:
        za._canon(x)
        zb._canon(y)
        return (x * e_a + y * e_b) % n

    return CrtMaps(forward, backward)

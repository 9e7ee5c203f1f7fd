"""Sieve-backed prime queries: pi(x), prime intervals, Ramanujan primes and
bounded Dirichlet searches.

All interval queries are over *open* intervals ``(n, 2n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .errors import DomainError, Inconclusive, RangeError, SizeError, TheoremViolation

SIEVE_GUARD = 10**8
DEFAULT_SIEVE_LIMIT = 10**6


@dataclass(frozen=True, eq=False)
class PrimeTable:
    limit: int
    is_prime: np.ndarray
    pi_prefix: np.ndarray
    primes: np.ndarray

    def _check(self, x: int) -> None:
        if x > self.limit:
            raise RangeError(f"{x} exceeds sieve limit {self.limit}")

    def count_open(self, lo: int, hi: int) -> int:
        """Number of primes p with lo < p < hi."""
        if hi - 1 <= lo:
            return 0
        self._check(hi - 1)
        return int(self.pi_prefix[hi - 1] - self.pi_prefix[max(lo, 0)])

    def primes_open(self, lo: int, hi: int) -> np.ndarray:
        i = np.searchsorted(self.primes, lo, side="right")
        j = np.searchsorted(self.primes, hi, side="left")
        if hi - 1 > self.limit:
            raise RangeError(f"{hi - 1} exceeds sieve limit {self.limit}")
        return self.primes[i:j]


def sieve(limit: int) -> PrimeTable:
    if limit < 0:
        raise DomainError(f"negative sieve limit {limit}")
    if limit > SIEVE_GUARD:
        raise SizeError(f"sieve limit {limit} exceeds guard {SIEVE_GUARD}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[: min(2, limit + 1)] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    flags.flags.writeable = False
    pi_prefix = np.cumsum(flags, dtype=np.int64)
    pi_prefix.flags.writeable = False
    primes = np.flatnonzero(flags)
    primes.flags.writeable = False
    return PrimeTable(limit, flags, pi_prefix, primes)


def pi(table: PrimeTable, x: int) -> int:
    if x < 0:
        return 0
    table._check(x)
    return int(table.pi_prefix[x])


def bertrand_witness(table: PrimeTable, n: int) -> int:
    """Smallest prime strictly between n and 2n."""
    if n < 2:
        raise DomainError(f"Bertrand needs n >= 2, got {n}")
    found = table.primes_open(n, 2 * n)
    if found.size == 0:
        raise TheoremViolation(f"no prime in ({n}, {2 * n})")
    return int(found[0])


def erdos_witnesses(table: PrimeTable, n: int) -> tuple[int, int]:
    """The two smallest primes strictly between n and 2n (n >= 6)."""
    if n < 6:
        raise DomainError(f"two-prime interval needs n >= 6, got {n}")
    found = table.primes_open(n, 2 * n)
    if found.size < 2:
        raise TheoremViolation(f"fewer than two primes in ({n}, {2 * n})")
    return int(found[0]), int(found[1])


def interval_prime_counts(table: PrimeTable, lo: int, hi: int) -> np.ndarray:
    """Counts of primes in (n, 2n) for every n in [lo, hi]."""
    table._check(2 * hi - 1)
    n = np.arange(lo, hi + 1)
    return table.pi_prefix[2 * n - 1] - table.pi_prefix[n]


def interval_violations(table: PrimeTable, lo: int, hi: int, need: int) -> list[int]:
    """Every n in [lo, hi] whose interval (n, 2n) holds fewer than ``need`` primes."""
    counts = interval_prime_counts(table, lo, hi)
    return (np.flatnonzero(counts < need) + lo).tolist()


def ramanujan_primes(table: PrimeTable, count: int) -> list[int]:
    """First ``count`` Ramanujan primes under the integer convention.

    p_k is one past the last x <= limit where pi(x) - pi(x // 2) < k.  The
    value is trusted only when limit >= 4 * p_k.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    x = np.arange(table.limit + 1)
    excess = table.pi_prefix - table.pi_prefix[x // 2]
    out = []
    for k in range(1, count + 1):
        below = np.flatnonzero(excess < k)
        p_k = int(below[-1]) + 1
        if 4 * p_k > table.limit:
            raise Inconclusive(
                f"sieve limit {table.limit} too small to certify p_{k} (candidate {p_k})"
            )
        if not table.is_prime[p_k]:
            raise TheoremViolation(f"Ramanujan threshold p_{k} = {p_k} is not prime")
        out.append(p_k)
    return out


@dataclass(frozen=True)
class DirichletQuery:
    """Primes p == r (mod q) with ``above < p <= bound`` not dividing ``avoid``.

    ``bound=None`` means the table limit.
    """

    q: int
    r: int
    avoid: int = 1
    bound: int | None = None
    above: int = 0

    def __post_init__(self):
        if self.q < 1 or not 0 <= self.r < self.q:
            raise DomainError(f"need 0 <= r < q, got q={self.q}, r={self.r}")
        if gcd(self.q, self.r) != 1:
            raise DomainError(f"gcd({self.q}, {self.r}) != 1; progression has no guaranteed primes")


def dirichlet_witness(table: PrimeTable, query: DirichletQuery) -> int | None:
    """Smallest matching prime, or None when the bounded search is exhausted."""
    bound = table.limit if query.bound is None else query.bound
    table._check(bound)
    cand = table.primes_open(query.above, bound + 1)
    cand = cand[(cand % query.q == query.r) & (query.avoid % cand != 0)]
    return int(cand[0]) if cand.size else None


def smallest_nondividing_prime(table: PrimeTable, n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    for p in table.primes:
        if n % int(p):
            return int(p)
    raise RangeError(f"every prime up to {table.limit} divides {n}")


@lru_cache(maxsize=8)
def shared_table(limit: int) -> PrimeTable:
    """Memoized ``sieve``; tables are immutable so sharing is safe."""
    return sieve(limit)

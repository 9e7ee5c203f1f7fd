"""Replays of the five arguments that the diagonal property holds exactly
for the divisors of 24, each as a list of numerically checked claims.

The Bertrand and Erdos routes only bound n by 24, so both finish with an
exhaustive re-check of n <= 24.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .errors import DomainError, SizeError
from .modring import check_modulus, make_ring
from .primes import (
    DEFAULT_SIEVE_LIMIT,
    DirichletQuery,
    PrimeTable,
    dirichlet_witness,
    shared_table,
    smallest_nondividing_prime,
)
from .tables_cubes import TABLE_SCAN_CAP, check_diagonal_table, check_diagonal_units
from .unit_group import (
    crt_isomorphism,
    factorize,
    group_exponent,
    is_prime,
    local_unit_structure,
    unit_group_structure,
)

PROOF_IDS = ("crt", "dirichlet", "unit_structure", "bertrand", "erdos", "proposition")
DIVISORS_OF_24 = [1, 2, 3, 4, 6, 8, 12, 24]


@dataclass
class Step:
    description: str
    checked: bool
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"description": self.description, "checked": self.checked, "evidence": self.evidence}


@dataclass
class ProofVerdict:
    proof_id: str
    steps: list[Step] = field(default_factory=list)
    inconclusive: bool = False

    def __post_init__(self):
        if self.proof_id not in PROOF_IDS:
            raise ValueError(f"unknown proof id {self.proof_id!r}")

    @property
    def overall(self) -> bool:
        return all(s.checked for s in self.steps)

    def step(self, description: str, checked, **evidence) -> bool:
        self.steps.append(Step(description, bool(checked), evidence))
        return bool(checked)

    def to_dict(self) -> dict:
        return {
            "proof": self.proof_id,
            "overall": self.overall,
            "inconclusive": self.inconclusive,
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def diag(n: int) -> bool:
    return check_diagonal_units(n).holds


def _divisors_of_24_upto(limit: int) -> list[int]:
    return [d for d in DIVISORS_OF_24 if d <= limit]


def verify_proposition_equivalence(
    n: int, prime_bound: int = 10**4, table: PrimeTable | None = None
) -> ProofVerdict:
    """Evaluate the four equivalent forms of the diagonal property for one n.

    Form (4) quantifies over all primes, so it is only sampled up to
    ``prime_bound`` and flagged as such in its evidence.
    """
    check_modulus(n)
    table = table or shared_table(prime_bound)
    v = ProofVerdict("proposition")

    rep2 = check_diagonal_units(n)
    s2 = rep2.holds
    v.step(
        "(2) every unit a of Z_n satisfies a^2 = 1",
        True,
        value=s2,
        witness=list(rep2.witness) if rep2.witness else None,
    )

    if n <= TABLE_SCAN_CAP:
        rep1 = check_diagonal_table(n)
        v.step(
            "(1) 1's in the multiplication table occur only on the diagonal; agrees with (2)",
            rep1.holds == s2,
            value=rep1.holds,
            witness=list(rep1.witness) if rep1.witness else None,
        )
    else:
        v.step("(1) skipped: table scan cap exceeded", True, value=None, skipped=True)

    a = np.arange(n, dtype=np.int64)
    coprime = a[np.gcd(a, n) == 1]
    bad3 = coprime[(coprime * coprime - 1) % n != 0]
    s3 = bad3.size == 0
    v.step(
        "(3) n | a^2 - 1 for every a coprime to n; agrees with (2)",
        s3 == s2,
        value=s3,
        tested=int(coprime.size),
        first_failure=int(bad3[0]) if bad3.size else None,
    )

    ps = table.primes[table.primes <= prime_bound].astype(object if n > 2**31 else np.int64)
    ps = ps[n % ps != 0]
    bad4 = ps[(ps * ps - 1) % n != 0]
    s4 = bad4.size == 0
    v.step(
        "(4) n | p^2 - 1 for every prime p not dividing n; agrees with (2)",
        s4 == s2,
        value=s4,
        sampled=True,
        prime_bound=prime_bound,
        primes_tested=int(ps.size),
        first_failure=int(bad4[0]) if bad4.size else None,
    )
    return v


def verify_proof_crt(limit: int = 5000, crt_check_limit: int = 256) -> ProofVerdict:
    if not 1 <= limit <= 5000:
        raise SizeError(f"limit must lie in [1, 5000], got {limit}")
    v = ProofVerdict("crt")
    holds = {n: diag(n) for n in range(1, limit + 1)}

    # the ring isomorphism itself, on every product of coprime parts
    bad_maps = []
    for n in range(2, min(limit, crt_check_limit) + 1):
        t, k = factorize(n).two_adic
        a, b = 1 << t, k
        fwd, back = crt_isomorphism(a, b)
        xs = np.arange(n, dtype=np.int64)
        pairs = [fwd(x) for x in range(n)]
        bij = len(set(pairs)) == n and all(
            back(int(x), int(y)) == i for i, (x, y) in enumerate(pairs)
        )
        prod_ok = np.array_equal(
            (np.outer(xs, xs) % n) % a, np.outer(xs % a, xs % a) % a
        ) and np.array_equal((np.outer(xs, xs) % n) % b, np.outer(xs % b, xs % b) % b)
        if not (bij and prod_ok):
            bad_maps.append(n)
    v.step(
        "Z_n = Z_{2^t} + Z_k (n = 2^t k, k odd) is a bijection preserving products",
        not bad_maps,
        checked_up_to=min(limit, crt_check_limit),
        failures=bad_maps,
    )

    split_bad = []
    for n in range(1, limit + 1):
        t, k = factorize(n).two_adic
        if holds[n] != (holds[1 << t] and holds[k]):
            split_bad.append(n)
    v.step(
        "diag(n) iff diag(2^t) and diag(k)",
        not split_bad,
        checked_up_to=limit,
        failures=split_bad,
    )

    odd_survivors = [n for n in range(1, limit + 1, 2) if holds[n]]
    v.step(
        "odd n: gcd(2, n) = 1 forces n | 2^2 - 1 = 3, and 1, 3 both qualify",
        all(3 % n == 0 for n in odd_survivors) and odd_survivors == [d for d in (1, 3) if d <= limit],
        odd_survivors=odd_survivors,
    )

    two_powers = [1 << t for t in range(limit.bit_length()) if 1 << t <= limit]
    two_survivors = [m for m in two_powers if holds[m]]
    v.step(
        "n = 2^t: gcd(3, n) = 1 forces n | 3^2 - 1 = 8, and every divisor of 8 qualifies",
        two_survivors == [m for m in two_powers if 8 % m == 0],
        power_of_two_survivors=two_survivors,
    )

    survivors = [n for n in range(1, limit + 1) if holds[n]]
    v.step(
        "surviving moduli are exactly the divisors of (8)(3) = 24",
        survivors == _divisors_of_24_upto(limit),
        surviving=survivors,
    )
    return v


def verify_proof_dirichlet(
    n: int = 24, bound: int = DEFAULT_SIEVE_LIMIT, table: PrimeTable | None = None
) -> ProofVerdict:
    check_modulus(n)
    table = table or shared_table(bound)
    v = ProofVerdict("dirichlet")
    fac = factorize(n)
    big = [q for q in fac.primes if q > 3]
    if big:
        q0, r = big[0], 2
        v.step(
            "n has a prime divisor q0 > 3; pick the class r = 2, not 0, 1 or q0 - 1",
            r not in (0, 1, q0 - 1) and gcd(q0, r) == 1,
            n=n,
            q0=q0,
            r=r,
        )
        p = dirichlet_witness(table, DirichletQuery(q0, r, avoid=n, bound=bound, above=n))
        if p is None:
            v.inconclusive = True
            v.step(
                f"no prime p = {r} (mod {q0}) with {n} < p <= {bound}",
                False,
                q0=q0,
                r=r,
                bound=bound,
            )
            return v
        v.step(
            "a prime p0 in the progression q0 x + r that does not divide n",
            is_prime(p) and p % q0 == r and n % p != 0,
            p=p,
            q0=q0,
            r=r,
        )
        v.step(
            "p0 is neither 1 nor -1 mod q0, so n does not divide p0^2 - 1",
            (p * p - 1) % q0 != 0 and (p * p - 1) % n != 0,
            p=p,
            p_squared_minus_1=p * p - 1,
            residue_mod_n=(p * p - 1) % n,
        )
        rep = check_diagonal_units(n)
        v.step(
            "so n lacks the diagonal property",
            not rep.holds,
            witness=list(rep.witness) if rep.witness else None,
        )
        return v

    u, w = dict(fac.factors).get(2, 0), dict(fac.factors).get(3, 0)
    v.step("every prime divisor of n is at most 3: n = 2^u 3^v", True, n=n, u=u, v=w)
    p_family = smallest_nondividing_prime(table, 6)
    v.step(
        "the smallest prime coprime to every 2^u 3^v is 5",
        p_family == 5,
        smallest_nondividing_prime=p_family,
    )
    p_n = smallest_nondividing_prime(table, n)
    holds = diag(n)
    v.step(
        "diag(n) forces n | 5^2 - 1 = 24",
        (not holds) or (24 % n == 0 and (p_n * p_n - 1) % n == 0),
        n=n,
        holds=holds,
        smallest_nondividing_prime_of_n=p_n,
        five_squared_minus_1=p_family**2 - 1,
        divides_24=24 % n == 0,
    )
    v.step(
        "and conversely n | 24 gives the diagonal property",
        holds == (24 % n == 0),
        holds=holds,
    )
    return v


def _brute_exponent(m: int) -> int:
    """Exponent of the unit group of Z_m from powers of its units alone."""
    a = np.array(make_ring(m).units(), dtype=np.int64)
    e = a.size
    q = 2
    rest = e
    while rest > 1:
        if rest % q == 0:
            while rest % q == 0:
                rest //= q
            while e % q == 0 and np.all(_powmod(a, e // q, m) == 1 % m):
                e //= q
        q += 1
    return max(e, 1)


def _powmod(a: np.ndarray, e: int, m: int) -> np.ndarray:
    result = np.ones_like(a) % m
    base = a % m
    while e:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    return result


def verify_proof_unit_structure(max_prime_power: int = 10**4) -> ProofVerdict:
    if not 2 <= max_prime_power <= 10**4:
        raise SizeError(f"max_prime_power must lie in [2, 10^4], got {max_prime_power}")
    v = ProofVerdict("unit_structure")
    mismatches, small = [], []
    for p in range(2, max_prime_power + 1):
        if not is_prime(p):
            continue
        c, q = 1, p
        while q <= max_prime_power:
            brute = _brute_exponent(q)
            formula = group_exponent(local_unit_structure(p, c))
            if brute != formula:
                mismatches.append([q, brute, formula])
            if formula <= 2:
                small.append(q)
            c, q = c + 1, q * p
    v.step(
        "brute-force exponent of R_{p^c} matches the classification C_1, C_2, C_2+C_{2^(c-2)}, C_phi",
        not mismatches,
        max_prime_power=max_prime_power,
        mismatches=mismatches,
    )
    expected = sorted(q for q in (2, 3, 4, 8) if q <= max_prime_power)
    v.step(
        "exponent <= 2 exactly for p^c in {2, 4, 8} and, for odd p, only p^c = 3",
        sorted(small) == expected,
        prime_powers_with_exponent_le_2=sorted(small),
    )
    allowed = sorted(2**u * 3**w for u in range(4) for w in range(2))
    v.step(
        "the diagonal moduli are 2^u 3^v with u <= 3, v <= 1: the divisors of 24",
        allowed == DIVISORS_OF_24
        and all(group_exponent(unit_group_structure(d)) <= 2 for d in allowed),
        moduli=allowed,
    )
    return v


def harvest_candidates(scan_limit: int) -> list[int]:
    """Every n <= scan_limit divisible by all primes p < sqrt(n + 1)."""
    primes = [p for p in range(2, isqrt(scan_limit) + 2) if is_prime(p)]
    out, prod, i = [], 1, 0
    for n in range(1, scan_limit + 1):
        while i < len(primes) and primes[i] * primes[i] < n + 1:
            prod *= primes[i]
            i += 1
        if prod > n:
            if prod > scan_limit:
                break
            continue
        if n % prod == 0:
            out.append(n)
    return out


def _primes_between_roots(table: PrimeTable, s: int, lo_div: int, hi_div: int) -> list[int]:
    """Primes p with sqrt(s)/lo_div < p < sqrt(s)/hi_div, compared exactly via squares."""
    hi = isqrt(s) // hi_div + 1
    return [
        int(p) for p in table.primes_open(isqrt(s) // lo_div - 1, hi + 1)
        if lo_div * lo_div * p * p > s and hi_div * hi_div * p * p < s
    ]


def _small_case_eliminations(v: ProofVerdict, upper: int) -> None:
    """The shared tail: n <= upper down to n <= 48, then n <= 24."""
    mult_210 = [m for m in range(49, upper + 1) if m % 210 == 0]
    expected = [210] if upper >= 210 else []
    a, b = 11, 191
    v.step(
        "if sqrt(n+1) > 7 then 210 | n; the only such n in range is eliminated",
        mult_210 == expected
        and (not mult_210 or ((a * b) % 210 == 1 and a != b and not diag(210))),
        upper_bound=upper,
        multiples_of_210=mult_210,
        witness=[a, b] if mult_210 else None,
        product=a * b,
        product_mod_210=(a * b) % 210,
    )
    mult_30 = [m for m in range(25, 49) if m % 30 == 0]
    a, b = 13, 7
    v.step(
        "n <= 48; if sqrt(n+1) > 5 then 30 | n, and 30 is eliminated",
        mult_30 == [30] and (a * b) % 30 == 1 and not diag(30),
        multiples_of_30=mult_30,
        witness=[a, b],
        product=a * b,
        product_mod_30=(a * b) % 30,
    )


def _finish(v: ProofVerdict, candidates: list[int], scan_limit: int) -> None:
    above = [n for n in candidates if n > 24]
    v.step(
        "every harvested candidate above 24 lacks the diagonal property",
        all(not diag(n) for n in above),
        candidates_above_24=above,
    )
    exhaust = [n for n in range(1, 25) if diag(n)]
    v.step(
        "so n <= 24; exhaustive re-check of n <= 24 leaves the divisors of 24",
        exhaust == DIVISORS_OF_24,
        surviving=exhaust,
    )
    lim = min(scan_limit, 10**4)
    cset = set(candidates)
    missed = [n for n in range(1, lim + 1) if diag(n) and n not in cset]
    v.step(
        "every diagonal n is a candidate (p < sqrt(n+1) implies p | n)",
        not missed,
        checked_up_to=lim,
        missed=missed,
    )


def _harvest(v: ProofVerdict, scan_limit: int) -> list[int]:
    candidates = harvest_candidates(scan_limit)
    v.step(
        "contrapositive harvest: n such that every prime p < sqrt(n+1) divides n",
        True,
        scan_limit=scan_limit,
        candidates=candidates,
    )
    return candidates


def verify_proof_bertrand(scan_limit: int = 10**5) -> ProofVerdict:
    if scan_limit < 399:
        raise DomainError(f"scan_limit must be >= 399, got {scan_limit}")
    table = shared_table(max(isqrt(scan_limit + 1) + 2, 1000))
    v = ProofVerdict("bertrand")
    candidates = _harvest(v, scan_limit)

    gaps, small_product, first = [], [], None
    for n in range(399, scan_limit + 1):
        s = n + 1
        lo = _primes_between_roots(table, s, 4, 2)
        hi = _primes_between_roots(table, s, 2, 1)
        if not lo or not hi or lo[0] <= 5:
            gaps.append(n)
            continue
        if 30 * lo[0] * hi[0] <= n:
            small_product.append(n)
        if first is None:
            first = {"n": n, "lower_interval_prime": lo[0], "upper_interval_prime": hi[0]}
    v.step(
        "for n+1 >= 400 both (sqrt(n+1)/4, sqrt(n+1)/2) and (sqrt(n+1)/2, sqrt(n+1)) hold a prime above 5",
        not gaps,
        range=[399, scan_limit],
        failures=gaps[:20],
        example=first,
    )
    ineq = [n for n in range(399, scan_limit + 1) if 15 * (n + 1) <= 4 * n]
    v.step(
        "so (2)(3)(5)(sqrt(n+1)/4)(sqrt(n+1)/2) <= n, i.e. 15(n+1) <= 4n, which never holds",
        not ineq and not small_product,
        inequality="15(n+1) <= 4n",
        satisfied_at=ineq,
        products_not_exceeding_n=small_product[:20],
    )
    v.step(
        "hence n+1 < 400, i.e. n <= 398; no candidate exceeds it",
        all(n <= 398 for n in candidates),
        bound=398,
    )
    _small_case_eliminations(v, 398)
    _finish(v, candidates, scan_limit)
    v.steps[-2].evidence["bound_chain"] = [398, 48, 24]
    return v


def verify_proof_erdos(scan_limit: int = 10**5) -> ProofVerdict:
    if scan_limit < 144:
        raise DomainError(f"scan_limit must be >= 144, got {scan_limit}")
    table = shared_table(max(isqrt(scan_limit + 1) + 2, 1000))
    v = ProofVerdict("erdos")
    candidates = _harvest(v, scan_limit)

    gaps, small_product, at_143 = [], [], None
    for n in range(143, scan_limit + 1):
        s = n + 1
        ps = _primes_between_roots(table, s, 2, 1)
        if len(ps) < 2 or ps[0] <= 5:
            gaps.append(n)
            continue
        if 30 * ps[0] * ps[1] <= n:
            small_product.append(n)
        if n == 143:
            at_143 = ps[:2]
    v.step(
        "for n+1 >= 144 the interval (sqrt(n+1)/2, sqrt(n+1)) holds two primes above 5",
        not gaps,
        range=[143, scan_limit],
        failures=gaps[:20],
        primes_at_n_143=at_143,
    )
    ineq = [n for n in range(143, scan_limit + 1) if 30 * (n + 1) <= 4 * n]
    v.step(
        "so (2)(3)(5)(sqrt(n+1)/2)^2 <= n, i.e. 30(n+1) <= 4n, a contradiction",
        not ineq and not small_product,
        inequality="30(n+1) <= 4n",
        satisfied_at=ineq,
        products_not_exceeding_n=small_product[:20],
    )
    v.step(
        "hence n+1 < 144; no candidate exceeds 142",
        all(n <= 142 for n in candidates),
        bound=142,
    )
    _small_case_eliminations(v, 142)
    _finish(v, candidates, scan_limit)
    v.steps[-2].evidence["bound_chain"] = ["n+1 < 144", 48, 24]
    return v

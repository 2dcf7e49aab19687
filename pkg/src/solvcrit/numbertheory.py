"""Primitive prime divisors of q^e - 1 and related arithmetic.

A prime r is a primitive prime divisor of q^e - 1 when r divides q^e - 1
but no q^i - 1 with i < e; equivalently the multiplicative order of q mod r
is exactly e, so e divides r - 1 and r >= e + 1.  For q = p^k, the *basic*
primitive prime divisors of q^e - 1 are the primitive prime divisors of
p^(ke) - 1.  The *large* variants keep only primes r > e + 1, together with
the composite (e+1)^2 when e + 1 is itself a (basic) primitive prime divisor
and (e+1)^2 divides q^e - 1.

All arithmetic is exact; inputs are range-checked against VALUE_LIMIT
(2^96) rather than silently overflowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

VALUE_LIMIT = 2**96
TRIAL_DIVISION_BOUND = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
             41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class ValueOutOfRangeError(ValueError):
    """Input exceeds the supported exact-arithmetic range."""


def _check_range(n: int, what: str = "value") -> None:
    if n >= VALUE_LIMIT:
        raise ValueOutOfRangeError(
            f"{what} {n} is not below 2**96; refusing to factor")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin with the fixed witness set 2..97.

    The 12-witness prefix is proven correct below 3.3e24; the full set has
    no known failures anywhere near the 2^96 working range.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_small_primes: list | None = None


def _sieve_primes() -> list:
    global _small_primes
    if _small_primes is None:
        bound = TRIAL_DIVISION_BOUND
        mask = bytearray([1]) * (bound + 1)
        mask[0] = mask[1] = 0
        for i in range(2, math.isqrt(bound) + 1):
            if mask[i]:
                mask[i * i::i] = bytearray(len(mask[i * i::i]))
        _small_primes = [i for i in range(bound + 1) if mask[i]]
    return _small_primes


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant).

    The polynomial increments c = 1, 2, 3, ... are tried in order, so the
    factor found for a given n never varies between runs.
    """
    for c in range(1, 10_000):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> tuple:
    """Exact prime factorization of n as a sorted multiset (tuple) of primes.

    Trial division by the sieved primes up to 10^6 strips small factors
    (stopping as soon as the cofactor is provably prime); any remaining
    composite cofactor is split by deterministic Pollard rho.
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}; need n >= 2")
    _check_range(n)
    factors: list = []
    remaining = n
    for p in _sieve_primes():
        if p * p > remaining:
            break
        if remaining % p:
            continue
        while remaining % p == 0:
            factors.append(p)
            remaining //= p
        if remaining == 1 or is_prime(remaining):
            break
    if remaining > 1:
        stack = [remaining]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors.append(m)
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    factors.sort()
    return tuple(factors)


def prime_factors(n: int) -> tuple:
    """Distinct prime factors of n, sorted."""
    return tuple(sorted(set(factorize(n))))


@dataclass(frozen=True)
class PrimePower:
    """q = p^k with p prime and k >= 1."""

    p: int
    k: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1 or self.p ** self.k != self.q:
            raise ValueError(f"{self.q} != {self.p}^{self.k}")

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        """Parse an integer >= 2 as a prime power, or raise ValueError."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        fs = factorize(q)
        if len(set(fs)) != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(fs[0], len(fs), q)

    def __str__(self) -> str:
        return str(self.q) if self.k == 1 else f"{self.p}^{self.k}"


def _as_prime_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.of(q)


@dataclass(frozen=True)
class DivisorSet:
    """Primes from a primitive-prime-divisor computation, plus the optional
    composite entry (e+1)^2 used by the large variants.

    The square entry is kept apart from ``primes`` so that no caller can
    mistake it for a prime.
    """

    flavor: str
    q: PrimePower
    e: int
    primes: tuple
    square_entry: int | None = None

    def values(self) -> tuple:
        """All members, primes first, square entry (if any) last."""
        if self.square_entry is None:
            return self.primes
        return self.primes + (self.square_entry,)

    def is_empty(self) -> bool:
        return not self.primes and self.square_entry is None

    def __str__(self) -> str:
        body = ", ".join(str(v) for v in self.values())
        return "{" + body + "}"


def _ppd_primes(base: int, e: int) -> tuple:
    """Primes r with r | base^e - 1 and r not dividing base^i - 1 for i < e."""
    value = base ** e - 1
    _check_range(value, f"{base}^{e} - 1")
    if value == 1:
        return ()
    out = []
    for r in prime_factors(value):
        if all(pow(base, i, r) != 1 for i in range(1, e)):
            out.append(r)
    return tuple(out)


def ppd(q, e: int) -> DivisorSet:
    """Primitive prime divisors of q^e - 1."""
    qq = _as_prime_power(q)
    if e < 1:
        raise ValueError("e must be at least 1")
    return DivisorSet("ppd", qq, e, _ppd_primes(qq.q, e))


def bppd(q, e: int) -> DivisorSet:
    """Basic primitive prime divisors of q^e - 1: those of p^(ke) - 1."""
    qq = _as_prime_power(q)
    if e < 1:
        raise ValueError("e must be at least 1")
    return DivisorSet("bppd", qq, e, _ppd_primes(qq.p, qq.k * e))


def _enlarge(base_set: DivisorSet, flavor: str) -> DivisorSet:
    e = base_set.e
    threshold = e + 1
    large = tuple(r for r in base_set.primes if r > threshold)
    square = None
    if threshold in base_set.primes:
        candidate = threshold * threshold
        if (base_set.q.q ** e - 1) % candidate == 0:
            square = candidate
    return DivisorSet(flavor, base_set.q, e, large, square)


def lpd(q, e: int) -> DivisorSet:
    """Large primitive divisors: ppd primes above e+1, plus (e+1)^2 when
    e+1 is a ppd prime and (e+1)^2 divides q^e - 1."""
    return _enlarge(ppd(q, e), "lpd")


def lbpd(q, e: int) -> DivisorSet:
    """Large basic primitive divisors (the bppd analogue of lpd)."""
    return _enlarge(bppd(q, e), "lbpd")


def is_mersenne_prime(n: int) -> bool:
    """Is n a prime of the form 2^m - 1?"""
    return n >= 3 and (n & (n + 1)) == 0 and is_prime(n)


def zsigmondy_empty(q, e: int) -> bool:
    """Closed form for bppd(q, e) being empty, for e >= 2.

    Exactly three exceptional families lack a basic primitive prime
    divisor: q a Mersenne prime with e = 2; (q, e) = (2, 6); and
    (q, e) in {(4, 3), (8, 2)}.
    """
    qq = _as_prime_power(q)
    if e < 2:
        raise ValueError("e must be at least 2")
    if e == 2 and qq.k == 1 and is_mersenne_prime(qq.p):
        return True
    return (qq.q, e) in {(2, 6), (4, 3), (8, 2)}


LBPD_EMPTY_PAIRS = frozenset({
    (2, 4), (2, 6), (2, 10), (2, 12), (2, 18),
    (3, 4), (3, 6), (4, 3), (5, 6),
})


def lbpd_empty_closed_form(q, e: int) -> bool:
    """Closed form for lbpd(q, e) being empty, for e >= 3: exactly nine
    (q, e) pairs qualify."""
    qq = _as_prime_power(q)
    if e < 3:
        raise ValueError("e must be at least 3")
    return (qq.q, e) in LBPD_EMPTY_PAIRS


def smallest_prime_above(bound_twice: int) -> int:
    """Smallest prime p with 2p > bound_twice (i.e. p > bound_twice / 2)."""
    p = bound_twice // 2 + 1
    while not is_prime(p):
        p += 1
    return p


def largest_prime_upto(n: int) -> int:
    while n >= 2 and not is_prime(n):
        n -= 1
    if n < 2:
        raise ValueError("no prime available")
    return n


def alternating_pair(m: int) -> tuple:
    """The prime pair (p, q) attached to the alternating group on m points.

    Explicit small-range choices: (3, 5) for m in 5..6, (5, 7) for m in
    7..10 and (11, 13) for m in 14..16; elsewhere q is the largest prime
    at most m and p the smallest prime above m/2.  Always m/2 <= p < q <= m,
    with equality only inside the explicit windows (m = 6 and m = 10; for
    m = 6 no two primes lie strictly between m/2 and m at all).
    """
    if m < 5:
        raise ValueError("need m >= 5")
    if m <= 6:
        p, q = 3, 5
    elif m <= 10:
        p, q = 5, 7
    elif m <= 13:
        p, q = smallest_prime_above(m), largest_prime_upto(m)
    elif m <= 16:
        p, q = 11, 13
    else:
        p, q = smallest_prime_above(m), largest_prime_upto(m)
    if not (2 * p >= m and p < q <= m):
        raise AssertionError(
            f"pair ({p}, {q}) violates m/2 <= p < q <= m for m={m}")
    return p, q


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    fs = factorize(n)
    if len(fs) != len(set(fs)):
        return 0
    return -1 if len(fs) % 2 else 1


def divisors(n: int) -> Iterator[int]:
    """Divisors of n in increasing order."""
    small, big = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                big.append(n // d)
    yield from small
    yield from reversed(big)


def cyclotomic_value(k: int, q: int) -> int:
    """The k-th cyclotomic polynomial evaluated at q, for k <= 120.

    Computed exactly from the Moebius product over divisors of k:
    the product of (q^d - 1)^mu(k/d)."""
    if not 1 <= k <= 120:
        raise ValueError("need 1 <= k <= 120")
    if q < 2:
        raise ValueError("need q >= 2")
    _check_range(q ** k, f"{q}^{k}")
    numerator = 1
    denominator = 1
    for d in divisors(k):
        mu = _mobius(k // d)
        if mu == 1:
            numerator *= q ** d - 1
        elif mu == -1:
            denominator *= q ** d - 1
    value, rem = divmod(numerator, denominator)
    if rem:
        raise AssertionError("cyclotomic product did not divide exactly")
    return value


def prime_powers_upto(limit: int) -> list:
    """All prime powers q <= limit, ascending, as PrimePower objects."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        k, q = 1, p
        while q <= limit:
            out.append(PrimePower(p, k, q))
            k += 1
            q *= p
    return sorted(out, key=lambda pp: pp.q)

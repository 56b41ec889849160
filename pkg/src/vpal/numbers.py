"""Exact integer primitives: digit reversal, budgeted factoring, factorization
sums, repeated concatenation, p-adic orders, and multiplicative orders.

Everything here is a pure function of its arguments; results for expensive
calls are memoized on the argument values.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime

from .errors import BudgetExceeded, InvalidPrime, NotCoprime

#: Brent iterations allowed per factorize() call.  Large enough that every
#: composite of up to ~26 digits splits (worst case: a balanced semiprime
#: needs on the order of sqrt(p) iterations for its smaller factor p).
DEFAULT_BUDGET = 20_000_000

_TRIAL_LIMIT = 10_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization as a sorted tuple of (prime, exponent) pairs.

    The empty tuple represents 1.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            last = p

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def merge(self, other: "Factorization") -> "Factorization":
        """Factorization of the product: exponents added prime by prime."""
        counts = self.as_dict()
        for p, e in other:
            counts[p] = counts.get(p, 0) + e
        return Factorization(tuple(sorted(counts.items())))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


class _Budget:
    """Mutable iteration allowance threaded through the factoring loop."""

    __slots__ = ("n", "limit", "remaining")

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        self.remaining = limit

    def spend(self, amount: int, cofactor: int) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceeded(self.n, cofactor, self.limit)


def _brent_factor(n: int, budget: _Budget) -> int:
    """One nontrivial factor of an odd composite n, by Brent's cycle method.

    Deterministic (the parameter stream is seeded from n) and metered: every
    modular multiplication spends budget, so a hard semiprime surfaces as
    BudgetExceeded rather than an open-ended loop.
    """
    rng = random.Random(n & 0xFFFFFFFF)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            budget.spend(r, n)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget.spend(min(m, r - k), n)
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                budget.spend(1, n)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Complete factorization of n >= 1; empty for n = 1.

    Trial division by primes below 10^4 first, then Brent's method on what
    survives, certifying every emitted prime with a primality test.  Raises
    BudgetExceeded when a cofactor resists within the iteration budget; the
    caller decides whether that means "skip", never "assume prime".
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    result = _factorize_cached(n, budget if budget is not None else DEFAULT_BUDGET)
    if isinstance(result, BudgetExceeded):
        raise result
    return result


@lru_cache(maxsize=1 << 15)
def _factorize_cached(n: int, budget: int) -> Factorization | BudgetExceeded:
    # budget failures are cached too, so one hard cofactor burns at most once
    counts: dict[int, int] = {}
    rem = n
    for p in _SMALL_PRIMES:
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    tracker = _Budget(n, budget)
    stack = [rem] if rem > 1 else []
    while stack:
        m = stack.pop()
        # survivors of trial division below the limit squared are prime
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT or isprime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        try:
            d = _brent_factor(m, tracker)
        except BudgetExceeded as exc:
            return exc
        stack.append(d)
        stack.append(m // d)
    return Factorization(tuple(sorted(counts.items())))


def digit_count(n: int) -> int:
    """Number of decimal digits of |n| (1 for 0)."""
    return len(str(abs(n)))


def reverse_digits(n: int) -> int:
    """Integer obtained by reversing the decimal digits of n >= 1.

    Same digit count as n when 10 does not divide n; fewer digits otherwise
    (trailing zeros become dropped leading zeros).
    """
    if n < 1:
        raise ValueError("reverse_digits requires n >= 1")
    return int(str(n)[::-1])


@dataclass(frozen=True)
class DigitNumber:
    """A nonnegative integer paired with its validated decimal digit string."""

    value: int
    digits: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("value must be nonnegative")
        if not self.digits or int(self.digits) != self.value:
            raise ValueError("digit string does not re-parse to value")
        if self.digits != "0" and self.digits.lstrip("0") != self.digits:
            raise ValueError("leading zero in digit string")

    @classmethod
    def from_int(cls, value: int) -> "DigitNumber":
        return cls(value, str(value))

    @property
    def digit_count(self) -> int:
        return len(self.digits)

    def reversed(self) -> "DigitNumber":
        return DigitNumber.from_int(int(self.digits[::-1]))


def factorization_sum_of(factorization: Factorization) -> int:
    """Sum of the primes, plus each exponent that exceeds 1.

    The empty factorization (the number 1) sums to 1 by convention.
    """
    if not factorization.factors:
        return 1
    return sum(p + (e if e >= 2 else 0) for p, e in factorization)


def factorization_sum(n: int, budget: int | None = None) -> int:
    """The factorization sum of n >= 1; 1 for n = 1 by convention."""
    return factorization_sum_of(factorize(n, budget))


def is_v_palindrome(n: int, budget: int | None = None) -> bool:
    """True when 10 does not divide n, n is not a palindrome, and n and its
    digit reversal have equal factorization sums."""
    if n < 1:
        raise ValueError("is_v_palindrome requires n >= 1")
    if n % 10 == 0:
        return False
    rev = reverse_digits(n)
    if rev == n:
        return False
    return factorization_sum(n, budget) == factorization_sum(rev, budget)


def repetition_number(k: int, digits: int) -> int:
    """The integer written as k ones separated by runs of digits-1 zeros.

    Multiplying a digits-digit number by it repeats that number's digit
    string k times.
    """
    if k < 1 or digits < 1:
        raise ValueError("repetition_number requires k >= 1 and digits >= 1")
    return (10 ** (digits * k) - 1) // (10**digits - 1)


def concat(n: int, k: int) -> int:
    """The integer whose digit string is that of n repeated k times."""
    if n < 1 or k < 1:
        raise ValueError("concat requires n >= 1 and k >= 1")
    by_string = int(str(n) * k)
    assert by_string == n * repetition_number(k, digit_count(n))
    return by_string


def padic_order(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1, p >= 2)."""
    if n < 1 or p < 2:
        raise ValueError("padic_order requires n >= 1 and p >= 2")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def multiplicative_order(a: int, m: int, budget: int | None = None) -> int:
    """Least t >= 1 with a**t = 1 (mod m).

    Starts from the group order (Euler phi of m, with its known factorization)
    and strips prime factors while the power stays 1; the result is verified
    by a final modular exponentiation.
    """
    if m < 1:
        raise ValueError("multiplicative_order requires m >= 1")
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"{a} is not invertible modulo {m}")
    phi = 1
    phi_factors: dict[int, int] = {}
    for p, e in factorize(m, budget):
        phi *= (p - 1) * p ** (e - 1)
        if e >= 2:
            phi_factors[p] = phi_factors.get(p, 0) + e - 1
        for q, f in factorize(p - 1, budget):
            phi_factors[q] = phi_factors.get(q, 0) + f
    t = phi
    for q in phi_factors:
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    assert pow(a, t, m) == 1
    return t


@lru_cache(maxsize=1 << 16)
def repetition_order(p: int, alpha: int, digits: int, budget: int | None = None) -> int:
    """Least t >= 1 with (10**digits)**t = 1 modulo p**(alpha + e0), where e0
    is the p-adic order of 10**digits - 1.

    This is the period controlling extra p-divisibility of repetition numbers:
    the repetition number for count k (at this digit width) gains p-adic order
    at least alpha exactly when t divides k.  Always > 1, because by choice of
    e0 the base is not congruent to 1 at the target power of p.
    """
    if p in (2, 5) or not isprime(p):
        raise InvalidPrime(f"repetition_order requires a prime other than 2 and 5, got {p}")
    if alpha < 1 or digits < 1:
        raise ValueError("repetition_order requires alpha >= 1 and digits >= 1")
    e0 = padic_order(10**digits - 1, p)
    modulus = p ** (alpha + e0)
    return multiplicative_order(pow(10, digits, modulus), modulus, budget)


def divisors(n: int, budget: int | None = None) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n, budget):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)

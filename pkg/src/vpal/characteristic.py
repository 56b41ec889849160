"""From crucial primes to divisibility constraints.

A prime whose exponent differs between n and its digit reversal contributes a
small set of possible "balance weights" to an integer equation; each solution
of that equation translates, prime by prime, into divisibility conditions on
the repetition count.  This module builds the records, solves the equation,
and assembles the per-solution constraint sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidInput
from .numbers import factorize, repetition_order, reverse_digits


def check_eligible(n: int) -> None:
    """Inputs must be positive, not multiples of 10, and not palindromes."""
    if n < 1:
        raise InvalidInput("n must be a positive integer")
    if n % 10 == 0:
        raise InvalidInput(f"{n} is a multiple of 10")
    if reverse_digits(n) == n:
        raise InvalidInput(f"{n} is a palindrome")


@dataclass(frozen=True)
class CrucialPrimeRecord:
    """A prime whose exponent differs between n and reverse_digits(n)."""

    p: int
    exp_n: int
    exp_reverse: int

    def __post_init__(self):
        if self.exp_n == self.exp_reverse:
            raise ValueError(f"{self.p} has equal exponents on both sides")

    @property
    def delta(self) -> int:
        return self.exp_n - self.exp_reverse

    @property
    def mu(self) -> int:
        return min(self.exp_n, self.exp_reverse)

    @property
    def sign(self) -> int:
        return 1 if self.delta > 0 else -1


def crucial_primes(n: int, budget: int | None = None) -> tuple[CrucialPrimeRecord, ...]:
    """Records for every prime with differing exponents, sorted by prime.

    Nonempty for eligible n: a non-palindrome prime-by-prime equal to its
    reversal would be its reversal.
    """
    check_eligible(n)
    fn = factorize(n, budget).as_dict()
    fr = factorize(reverse_digits(n), budget).as_dict()
    records = tuple(
        CrucialPrimeRecord(p, fn.get(p, 0), fr.get(p, 0))
        for p in sorted(set(fn) | set(fr))
        if fn.get(p, 0) != fr.get(p, 0)
    )
    assert records
    return records


def balance_weight(p: int, delta: int, alpha: int) -> int:
    """Contribution of prime p to the factorization-sum balance when the
    smaller of its two exponents is raised to alpha and the gap is delta >= 1.

    Three-step function of alpha: one value at 0, one at 1, one for >= 2.
    """
    if delta < 1:
        raise ValueError("balance_weight requires delta >= 1")
    if delta == 1:
        if p == 2:
            return 2 if alpha <= 1 else 1
        return p if alpha == 0 else 2 if alpha == 1 else 1
    return p + delta if alpha == 0 else 1 + delta if alpha == 1 else delta


def weight_range(p: int, delta: int) -> frozenset[int]:
    """All values balance_weight(p, delta, .) can take.

    Two elements exactly when (p, delta) = (2, 1), otherwise three.
    """
    return frozenset(balance_weight(p, delta, alpha) for alpha in (0, 1, 2))


class Preimage(Enum):
    """Which lift exponents alpha map to a given weight."""

    ZERO = "0"
    ONE = "1"
    ZERO_OR_ONE = "0,1"
    TWO_OR_MORE = ">=2"


def weight_preimage(p: int, delta: int, u: int) -> Preimage:
    if u not in weight_range(p, delta):
        raise ValueError(f"{u} is not a possible weight for (p={p}, delta={delta})")
    if (p, delta) == (2, 1):
        return Preimage.ZERO_OR_ONE if u == 2 else Preimage.TWO_OR_MORE
    if u == balance_weight(p, delta, 0):
        return Preimage.ZERO
    if u == balance_weight(p, delta, 1):
        return Preimage.ONE
    return Preimage.TWO_OR_MORE


class CaseLabel(Enum):
    """The seven mutually exclusive constraint cases for a (p, delta, u, mu)
    quadruple, named by lowercase roman numerals."""

    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"
    VII = "vii"

    def __str__(self) -> str:
        return f"[{self.value}]"


def classify(p: int, delta: int, u: int, mu: int) -> CaseLabel:
    """Sort the quadruple into exactly one of the seven cases.

    The case determines which divisibility conditions (if any) the prime
    imposes on the repetition count; [vii] marks weight/exponent combinations
    that no repetition count can realize.
    """
    if mu < 0:
        raise ValueError("classify requires mu >= 0")
    pre = weight_preimage(p, delta, u)
    if mu == 0:
        if pre is Preimage.ZERO:
            return CaseLabel.I
        if pre is Preimage.ONE:
            return CaseLabel.II
        if pre is Preimage.ZERO_OR_ONE:
            return CaseLabel.III
        return CaseLabel.V
    if mu == 1:
        if pre in (Preimage.ONE, Preimage.ZERO_OR_ONE):
            return CaseLabel.I
        if pre is Preimage.TWO_OR_MORE:
            return CaseLabel.IV
        return CaseLabel.VII
    return CaseLabel.VI if pre is Preimage.TWO_OR_MORE else CaseLabel.VII


@dataclass(frozen=True)
class CharSolution:
    """One admissible assignment of balance weights, ordered by crucial prime."""

    values: tuple[int, ...]


def solve_characteristic(
    records: tuple[CrucialPrimeRecord, ...],
) -> tuple[CharSolution, ...]:
    """All weight tuples that zero out the signed sum, in lexicographic order.

    Depth-first over the primes; a branch is abandoned as soon as the
    reachable partial sums exclude zero.
    """
    if not records:
        raise ValueError("solve_characteristic requires at least one record")
    ranges = [sorted(weight_range(r.p, abs(r.delta))) for r in records]
    signs = [r.sign for r in records]
    m = len(records)
    lo = [0] * (m + 1)
    hi = [0] * (m + 1)
    for i in reversed(range(m)):
        if signs[i] > 0:
            lo[i] = lo[i + 1] + ranges[i][0]
            hi[i] = hi[i + 1] + ranges[i][-1]
        else:
            lo[i] = lo[i + 1] - ranges[i][-1]
            hi[i] = hi[i + 1] - ranges[i][0]
    out: list[CharSolution] = []
    prefix: list[int] = []

    def walk(i: int, total: int) -> None:
        if total + lo[i] > 0 or total + hi[i] < 0:
            return
        if i == m:
            out.append(CharSolution(tuple(prefix)))
            return
        for u in ranges[i]:
            prefix.append(u)
            walk(i + 1, total + signs[i] * u)
            prefix.pop()

    walk(0, 0)
    return tuple(out)


@dataclass(frozen=True)
class ConstraintPair:
    """Conditions one prime puts on the repetition count k: k must be
    divisible by everything in required and by nothing in excluded.

    Each set holds at most one modulus.
    """

    required: frozenset[int]
    excluded: frozenset[int]

    def __post_init__(self):
        if len(self.required) > 1 or len(self.excluded) > 1:
            raise ValueError("a constraint pair holds at most one modulus per side")


_EMPTY: frozenset[int] = frozenset()
_ONE: frozenset[int] = frozenset({1})


def constraint_pair(
    record: CrucialPrimeRecord, u: int, digits: int, budget: int | None = None
) -> ConstraintPair:
    """Divisibility conditions under which record.p realizes weight u.

    For p = 2 and p = 5 the repetition number is never divisible by p, so the
    pair is either vacuous or impossible; impossible combinations get the
    always-false pair (nothing required, 1 excluded).
    """
    p = record.p
    case = classify(p, abs(record.delta), u, record.mu)
    if case is CaseLabel.VI:
        return ConstraintPair(_EMPTY, _EMPTY)
    if case is CaseLabel.VII:
        return ConstraintPair(_EMPTY, _ONE)
    if p in (2, 5):
        if case in (CaseLabel.I, CaseLabel.III):
            return ConstraintPair(_EMPTY, _EMPTY)
        return ConstraintPair(_EMPTY, _ONE)
    if case is CaseLabel.I:
        return ConstraintPair(_EMPTY, frozenset({repetition_order(p, 1, digits, budget)}))
    if case is CaseLabel.II:
        return ConstraintPair(
            frozenset({repetition_order(p, 1, digits, budget)}),
            frozenset({repetition_order(p, 2, digits, budget)}),
        )
    if case is CaseLabel.III:
        return ConstraintPair(_EMPTY, frozenset({repetition_order(p, 2, digits, budget)}))
    if case is CaseLabel.IV:
        return ConstraintPair(frozenset({repetition_order(p, 1, digits, budget)}), _EMPTY)
    return ConstraintPair(frozenset({repetition_order(p, 2, digits, budget)}), _EMPTY)


@dataclass(frozen=True)
class SolutionConstraints:
    """A characteristic solution with its assembled divisibility constraints.

    degenerate means the constraint set is unsatisfiable: some excluded
    modulus already divides the lcm of the required ones.
    """

    solution: CharSolution
    required: frozenset[int]
    excluded: frozenset[int]
    degenerate: bool
    pairs: tuple[ConstraintPair, ...]
    cases: tuple[CaseLabel, ...]


def assemble_constraints(
    solution: CharSolution,
    records: tuple[CrucialPrimeRecord, ...],
    digits: int,
    budget: int | None = None,
) -> SolutionConstraints:
    """Union the per-prime pairs and flag unsatisfiable solutions."""
    pairs = []
    cases = []
    for record, u in zip(records, solution.values, strict=True):
        cases.append(classify(record.p, abs(record.delta), u, record.mu))
        pairs.append(constraint_pair(record, u, digits, budget))
    required = frozenset().union(*(pair.required for pair in pairs))
    excluded = frozenset().union(*(pair.excluded for pair in pairs))
    base = math.lcm(*required) if required else 1
    degenerate = any(base % b == 0 for b in excluded)
    return SolutionConstraints(solution, required, excluded, degenerate, tuple(pairs), tuple(cases))


def in_divisibility_set(
    required: frozenset[int] | set[int], excluded: frozenset[int] | set[int], x: int
) -> bool:
    """True when x is divisible by every required modulus and no excluded one."""
    return all(x % a == 0 for a in required) and not any(x % b == 0 for b in excluded)

"""The canonical indicator combination for a number, and everything read off
it: the order (first qualifying repetition count), the fundamental period, and
the two coarser period bounds omega_f and omega_b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from .characteristic import (
    CharSolution,
    CrucialPrimeRecord,
    SolutionConstraints,
    assemble_constraints,
    check_eligible,
    crucial_primes,
    in_divisibility_set,
    solve_characteristic,
)
from .numbers import Factorization, digit_count, factorize, repetition_order, reverse_digits


class Infinite:
    """Order of a number none of whose repeated concatenations qualifies."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Infinite()

Order = Union[int, Infinite]


@dataclass(frozen=True)
class IndicatorCombination:
    """Integer combination of divisibility indicators in canonical form:
    strictly increasing moduli, every coefficient nonzero.

    terms is a tuple of (modulus, coefficient) pairs; empty means the zero
    function.
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for modulus, coeff in self.terms:
            if modulus <= last:
                raise ValueError("moduli must be strictly increasing")
            if coeff == 0:
                raise ValueError("coefficients must be nonzero")
            last = modulus

    @classmethod
    def collect(cls, pairs: Iterable[tuple[int, int]]) -> "IndicatorCombination":
        """Canonical form from arbitrary (modulus, coefficient) pairs: like
        terms added, zero coefficients dropped, moduli sorted."""
        acc: dict[int, int] = {}
        for modulus, coeff in pairs:
            acc[modulus] = acc.get(modulus, 0) + coeff
        return cls(tuple(sorted((m, c) for m, c in acc.items() if c != 0)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (modulus, coeff) in enumerate(self.terms):
            mag = f"I_{modulus}" if abs(coeff) == 1 else f"{abs(coeff)}I_{modulus}"
            if i == 0:
                parts.append(mag if coeff > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if coeff > 0 else f"- {mag}")
        return " ".join(parts)


def evaluate(comb: IndicatorCombination, x: int) -> int:
    """Value at x: the sum of coefficients whose modulus divides x."""
    return sum(coeff for modulus, coeff in comb.terms if x % modulus == 0)


def expand_solution(constraints: SolutionConstraints) -> IndicatorCombination:
    """Indicator of one solution's divisibility set, by inclusion-exclusion
    over the excluded moduli on top of the lcm of the required ones."""
    if constraints.degenerate:
        raise ValueError("cannot expand a degenerate solution")
    base = math.lcm(*constraints.required) if constraints.required else 1
    excluded = sorted(constraints.excluded)
    pairs = []
    for r in range(len(excluded) + 1):
        for subset in combinations(excluded, r):
            pairs.append((math.lcm(base, *subset), (-1) ** r))
    return IndicatorCombination.collect(pairs)


def fundamental_period(comb: IndicatorCombination) -> int:
    """lcm of the moduli; 1 for the zero combination."""
    return math.lcm(*(modulus for modulus, _ in comb.terms)) if comb.terms else 1


def order(comb: IndicatorCombination) -> Order:
    """Smallest positive argument where the combination is nonzero: its
    smallest modulus, or INFINITE for the zero combination."""
    return comb.terms[0][0] if comb.terms else INFINITE


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline derives for one number, kept together so the
    intermediate tables stay consistent with the final quantities."""

    n: int
    reverse: int
    digits: int
    n_factorization: Factorization
    reverse_factorization: Factorization
    records: tuple[CrucialPrimeRecord, ...]
    constraints: tuple[SolutionConstraints, ...]
    combination: IndicatorCombination
    order: Order
    omega0: int
    omega_f: int
    omega_b: int

    @property
    def solutions(self) -> tuple[CharSolution, ...]:
        return tuple(c.solution for c in self.constraints)

    @property
    def nondegenerate(self) -> tuple[SolutionConstraints, ...]:
        return tuple(c for c in self.constraints if not c.degenerate)

    def to_json_dict(self) -> dict:
        """Stable JSON shape; all integers as decimal strings."""
        return {
            "n": str(self.n),
            "reverse": str(self.reverse),
            "digits": str(self.digits),
            "crucial_primes": [
                {
                    "p": str(r.p),
                    "exp_n": str(r.exp_n),
                    "exp_reverse": str(r.exp_reverse),
                    "delta": str(r.delta),
                    "mu": str(r.mu),
                }
                for r in self.records
            ],
            "solutions": [
                {
                    "values": [str(v) for v in c.solution.values],
                    "cases": [case.value for case in c.cases],
                    "pairs": [
                        {
                            "p": str(r.p),
                            "required": [str(a) for a in sorted(pair.required)],
                            "excluded": [str(b) for b in sorted(pair.excluded)],
                        }
                        for r, pair in zip(self.records, c.pairs)
                    ],
                    "required": [str(a) for a in sorted(c.required)],
                    "excluded": [str(b) for b in sorted(c.excluded)],
                    "degenerate": c.degenerate,
                }
                for c in self.constraints
            ],
            "indicator": [
                {"c": str(modulus), "lambda": str(coeff)} for modulus, coeff in self.combination.terms
            ],
            "order": "infinity" if isinstance(self.order, Infinite) else str(self.order),
            "omega0": str(self.omega0),
            "omega_f": str(self.omega_f),
            "omega_b": str(self.omega_b),
        }


@lru_cache(maxsize=1 << 12)
def analyze(n: int, budget: int | None = None) -> AnalysisReport:
    """Run the whole pipeline for one number.

    Steps: factor n and its reversal, pick out the crucial primes, solve the
    characteristic equation, assemble constraints per solution, discard the
    degenerate ones, expand the survivors into the canonical combination, and
    read off order and periods.
    """
    check_eligible(n)
    rev = reverse_digits(n)
    d = digit_count(n)
    fn = factorize(n, budget)
    fr = factorize(rev, budget)
    records = crucial_primes(n, budget)
    solutions = solve_characteristic(records)
    constraints = tuple(assemble_constraints(s, records, d, budget) for s in solutions)
    live = [c for c in constraints if not c.degenerate]
    comb = IndicatorCombination.collect(
        pair for c in live for pair in expand_solution(c).terms
    )
    omega_f_parts = [repetition_order(r.p, 2, d, budget) for r in records if r.p not in (2, 5)]
    moduli = set()
    for c in live:
        moduli |= c.required | c.excluded
    return AnalysisReport(
        n=n,
        reverse=rev,
        digits=d,
        n_factorization=fn,
        reverse_factorization=fr,
        records=records,
        constraints=constraints,
        combination=comb,
        order=order(comb),
        omega0=fundamental_period(comb),
        omega_f=math.lcm(*omega_f_parts) if omega_f_parts else 1,
        omega_b=math.lcm(*moduli) if moduli else 1,
    )


def indicator_for(n: int, budget: int | None = None) -> IndicatorCombination:
    """Canonical indicator combination deciding which repetition counts k make
    the k-fold concatenation of n qualify."""
    return analyze(n, budget).combination


def omega_f(n: int, budget: int | None = None) -> int:
    """Period bound built from the squared-prime repetition orders of every
    crucial prime other than 2 and 5; 1 when there are none."""
    return analyze(n, budget).omega_f


def omega_b(n: int, budget: int | None = None) -> int:
    """Period bound built from every constraint modulus of the surviving
    solutions; 1 when none survive."""
    return analyze(n, budget).omega_b


def type_of(n: int, k: int, budget: int | None = None) -> CharSolution | None:
    """The unique surviving solution whose divisibility set contains k, or
    None; uniqueness holds because the sets are pairwise disjoint."""
    if k < 1:
        raise ValueError("type_of requires k >= 1")
    for cons in analyze(n, budget).nondegenerate:
        if in_divisibility_set(cons.required, cons.excluded, k):
            return cons.solution
    return None

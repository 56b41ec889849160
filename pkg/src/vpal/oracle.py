"""Ground truth by direct construction, and searches built on top of it.

The oracle decides each case by actually building the concatenated integer,
reversing its digit string, and factoring both sides; nothing is shared with
the indicator pipeline except the integer primitives, so agreement between
the two is evidence, not tautology.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .characteristic import balance_weight, check_eligible, in_divisibility_set
from .errors import BudgetExceeded, InvalidInput
from .indicator import AnalysisReport, analyze, evaluate, indicator_for, type_of
from .numbers import (
    digit_count,
    factorization_sum_of,
    factorize,
    is_v_palindrome,
    padic_order,
    repetition_number,
    reverse_digits,
)


class Unverified:
    """Stands where the factoring budget ran out; compares equal to nothing."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNVERIFIED"


UNVERIFIED = Unverified()

Flag = Union[bool, Unverified]


def brute_force_flag(
    n: int, k: int, budget: int | None = None, accelerated: bool = False
) -> Flag:
    """Decide the k-fold concatenation of n by explicit construction.

    Direct mode builds the digit string, reverses it as a string, and factors
    both integers from scratch.  Accelerated mode factors n, its reversal, and
    the repetition number separately and merges exponents; this is sound
    because the concatenation is n times the repetition number and, when 10
    does not divide n, reversal distributes over the repetition.  Returns
    UNVERIFIED instead of raising when the factoring budget runs out.
    """
    check_eligible(n)
    if k < 1:
        raise ValueError("brute_force_flag requires k >= 1")
    try:
        if accelerated:
            rep = factorize(repetition_number(k, digit_count(n)), budget)
            left = factorization_sum_of(factorize(n, budget).merge(rep))
            right = factorization_sum_of(factorize(reverse_digits(n), budget).merge(rep))
            return left == right
        return is_v_palindrome(int(str(n) * k), budget)
    except BudgetExceeded:
        return UNVERIFIED


@dataclass(frozen=True)
class VerificationRow:
    """One k compared between prediction and brute force."""

    k: int
    predicted: bool
    observed: Flag

    @property
    def agrees(self) -> bool | None:
        """True/False agreement, or None (skipped) when unverified."""
        if isinstance(self.observed, Unverified):
            return None
        return self.predicted == self.observed


def verify(
    n: int,
    k_max: int,
    budget: int | None = None,
    accelerated: bool = False,
) -> tuple[VerificationRow, ...]:
    """Compare the indicator prediction with brute force for k = 1..k_max."""
    if k_max < 1:
        raise InvalidInput("k_max must be >= 1")
    comb = indicator_for(n, budget)
    rows = []
    for k in range(1, k_max + 1):
        predicted = evaluate(comb, k) == 1
        rows.append(VerificationRow(k, predicted, brute_force_flag(n, k, budget, accelerated)))
    return tuple(rows)


def cross_check(n: int, k: int, budget: int | None = None) -> bool:
    """Check the constraint encoding against direct p-adic computation.

    For every characteristic solution, the weight tuple computed on the
    explicit repetition number must match the solution exactly when k lies in
    the solution's divisibility set.  Returns True when every solution's two
    verdicts agree (including the no-match case).
    """
    report = analyze(n, budget)
    rep = repetition_number(k, report.digits)
    weights = tuple(
        balance_weight(r.p, abs(r.delta), r.mu + padic_order(rep, r.p)) for r in report.records
    )
    for cons in report.constraints:
        direct = weights == cons.solution.values
        via_sets = in_divisibility_set(cons.required, cons.excluded, k)
        if direct != via_sets:
            return False
    return True


class SearchProperty(Enum):
    """What a scan looks for.  Values double as the CLI tokens."""

    #: fundamental period differs from both 1 and omega_f
    CONJ1_COUNTEREXAMPLE = "conj1"
    #: fundamental period differs from both 1 and omega_b
    OMEGA_B_COUNTEREXAMPLE = "omegab"
    #: some indicator modulus does not divide the largest one
    DIVISIBILITY_ANOMALY = "anomaly"


@dataclass(frozen=True)
class SearchHit:
    n: int
    property: SearchProperty
    evidence: AnalysisReport


def anomaly_witness(report: AnalysisReport) -> tuple[int, int] | None:
    """The first indicator modulus that fails to divide the largest one,
    paired with that largest modulus."""
    terms = report.combination.terms
    if not terms:
        return None
    largest = terms[-1][0]
    for modulus, _ in terms:
        if largest % modulus != 0:
            return modulus, largest
    return None


def _is_hit(report: AnalysisReport, prop: SearchProperty) -> bool:
    if prop is SearchProperty.CONJ1_COUNTEREXAMPLE:
        return report.omega0 not in (1, report.omega_f)
    if prop is SearchProperty.OMEGA_B_COUNTEREXAMPLE:
        return report.omega0 not in (1, report.omega_b)
    return anomaly_witness(report) is not None


def _eligible(n: int) -> bool:
    return n % 10 != 0 and reverse_digits(n) != n


def _scan_chunk(args: tuple[int, int, str, int | None]) -> list[SearchHit]:
    start, stop, prop_value, budget = args
    prop = SearchProperty(prop_value)
    hits = []
    for n in range(start, stop):
        if not _eligible(n):
            continue
        report = analyze(n, budget)
        if _is_hit(report, prop):
            hits.append(SearchHit(n, prop, report))
    return hits


def search(
    range_end: int,
    prop: SearchProperty,
    workers: int = 1,
    budget: int | None = None,
    chunk_size: int = 512,
) -> tuple[SearchHit, ...]:
    """Scan eligible n in 2..range_end for the property, in increasing order.

    Work is sharded into contiguous chunks of n; the hit list is identical
    whatever the worker count.
    """
    if range_end < 2:
        raise InvalidInput("range_end must be >= 2")
    chunks = [
        (start, min(start + chunk_size, range_end + 1), prop.value, budget)
        for start in range(2, range_end + 1, chunk_size)
    ]
    if workers <= 1:
        results = map(_scan_chunk, chunks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, chunks))
    hits = [hit for chunk_hits in results for hit in chunk_hits]
    hits.sort(key=lambda h: h.n)
    return tuple(hits)


def search_iter(
    range_end: int,
    prop: SearchProperty,
    workers: int = 1,
    budget: int | None = None,
    chunk_size: int = 512,
):
    """Like search(), but yields hits as their chunk completes (still in
    increasing n order)."""
    if range_end < 2:
        raise InvalidInput("range_end must be >= 2")
    chunks = [
        (start, min(start + chunk_size, range_end + 1), prop.value, budget)
        for start in range(2, range_end + 1, chunk_size)
    ]
    if workers <= 1:
        for chunk in chunks:
            yield from _scan_chunk(chunk)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk_hits in pool.map(_scan_chunk, chunks):
                yield from chunk_hits


@dataclass(frozen=True)
class TypeInvarianceRecord:
    """All base/count splittings of one qualifying number's digit string, with
    the type each splitting assigns."""

    m: int
    representations: tuple[tuple[int, int], ...]
    types: tuple[tuple[int, ...] | None, ...]
    consistent: bool


def _splittings(m: int) -> list[tuple[int, int]]:
    s = str(m)
    out = []
    for width in range(1, len(s) + 1):
        if len(s) % width == 0 and s[:width] * (len(s) // width) == s:
            out.append((int(s[:width]), len(s) // width))
    return out


def type_invariance_scan(limit: int, budget: int | None = None) -> tuple[TypeInvarianceRecord, ...]:
    """Empirically check that a qualifying number's type does not depend on
    how its digit string is split into a base and a repetition count.

    Every splitting of a non-palindromic string has a non-palindromic base, so
    each one can be typed; the record is consistent when all splittings give
    the same weight tuple.  Evidence only, not a proof.
    """
    out = []
    for m in range(12, limit + 1):
        if not _eligible(m):
            continue
        try:
            if not is_v_palindrome(m, budget):
                continue
        except BudgetExceeded:
            continue
        reps = _splittings(m)
        types = []
        for base, k in reps:
            sol = type_of(base, k, budget)
            types.append(sol.values if sol is not None else None)
        consistent = None not in types and len(set(types)) == 1
        out.append(TypeInvarianceRecord(m, tuple(reps), tuple(types), consistent))
    return tuple(out)

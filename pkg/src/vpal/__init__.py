"""Exact analysis of which repeated digit concatenations of a number keep
their factorization sum unchanged under digit reversal.

The public surface: integer primitives (`numbers`), crucial-prime machinery
(`characteristic`), the canonical indicator combination with its order and
periods (`indicator`), root-of-unity spectra (`spectrum`), a brute-force
oracle with searches (`oracle`), and a CLI (`cli`).
"""

from .errors import (
    BudgetExceeded,
    InvalidInput,
    InvalidPrime,
    NotCoprime,
    PeriodMismatch,
    VpalError,
)
from .numbers import (
    DEFAULT_BUDGET,
    DigitNumber,
    Factorization,
    concat,
    digit_count,
    divisors,
    factorization_sum,
    factorization_sum_of,
    factorize,
    is_v_palindrome,
    multiplicative_order,
    padic_order,
    repetition_number,
    repetition_order,
    reverse_digits,
)
from .characteristic import (
    CaseLabel,
    CharSolution,
    ConstraintPair,
    CrucialPrimeRecord,
    SolutionConstraints,
    assemble_constraints,
    balance_weight,
    check_eligible,
    classify,
    constraint_pair,
    crucial_primes,
    in_divisibility_set,
    solve_characteristic,
    weight_range,
)
from .indicator import (
    INFINITE,
    AnalysisReport,
    IndicatorCombination,
    Infinite,
    analyze,
    evaluate,
    expand_solution,
    fundamental_period,
    indicator_for,
    omega_b,
    omega_f,
    order,
    type_of,
)
from .spectrum import (
    PeriodicSamples,
    RootIndex,
    SpectralMap,
    combination_spectrum,
    eval_spectrum,
    gcd_period,
    indicator_spectrum,
    naive_fundamental_period,
    net_coefficients,
    ramanujan_components,
    samples_to_spectrum,
    spectrum_to_samples,
    support_period,
)
from .oracle import (
    UNVERIFIED,
    SearchHit,
    SearchProperty,
    TypeInvarianceRecord,
    Unverified,
    VerificationRow,
    anomaly_witness,
    brute_force_flag,
    cross_check,
    search,
    search_iter,
    type_invariance_scan,
    verify,
)

__version__ = "0.1.0"

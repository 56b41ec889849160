"""Periodic functions on the integers as finite root-of-unity spectra.

A finitely supported map from roots of unity to coefficients determines a
periodic function x -> sum of coeff * zeta**x, and every periodic function
arises that way from exactly one map.  This module converts between the two
representations, computes the fundamental period three independent ways, and
expresses indicator combinations exactly in spectral form.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import PeriodMismatch
from .indicator import IndicatorCombination
from .numbers import divisors

#: Inverse-transform coefficients below this magnitude count as zero.
ZERO_TOLERANCE = 1e-9

Coefficient = Union[int, Fraction, float, complex]


def _to_complex(value: Coefficient) -> complex:
    if isinstance(value, Fraction):
        return complex(float(value))
    return complex(value)


def _is_exact(value) -> bool:
    return isinstance(value, (int, Fraction))


@dataclass(frozen=True)
class RootIndex:
    """A root of unity e(num/den) = exp(2*pi*i*num/den), indexed by its phase
    in lowest terms; den is the primitive order of the root."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or not 0 <= self.num < self.den:
            raise ValueError("need 0 <= num < den")
        if math.gcd(self.num, self.den) != 1 and self.den != 1:
            raise ValueError("num/den must be in lowest terms")

    @classmethod
    def reduced(cls, num: int, den: int) -> "RootIndex":
        if den < 1:
            raise ValueError("den must be positive")
        num %= den
        g = math.gcd(num, den)
        return cls(num // g, den // g)

    def as_complex(self) -> complex:
        return cmath.exp(2j * math.pi * self.num / self.den)

    def power(self, x: int) -> complex:
        return cmath.exp(2j * math.pi * (self.num * x % self.den) / self.den)


class SpectralMap:
    """Finitely supported map RootIndex -> coefficient.

    Exact zero coefficients are dropped at construction; float/complex ones
    are dropped below the tolerance.  Entries iterate sorted by (den, num).
    """

    def __init__(
        self,
        entries: Mapping[RootIndex, Coefficient],
        tolerance: float = ZERO_TOLERANCE,
    ):
        kept = {}
        for root, coeff in entries.items():
            if _is_exact(coeff):
                if coeff == 0:
                    continue
            elif abs(coeff) < tolerance:
                continue
            kept[root] = coeff
        self._entries = dict(sorted(kept.items(), key=lambda kv: (kv[0].den, kv[0].num)))

    def items(self):
        return self._entries.items()

    def coefficient(self, root: RootIndex) -> Coefficient:
        return self._entries.get(root, 0)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, SpectralMap) and self._entries == other._entries

    def __repr__(self) -> str:
        inner = ", ".join(f"e({r.num}/{r.den}): {c}" for r, c in self.items())
        return f"SpectralMap({{{inner}}})"


@dataclass(frozen=True)
class PeriodicSamples:
    """One window of a periodic function: values[x] = f(x) for 0 <= x < period."""

    period: int
    values: tuple

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if len(self.values) != self.period:
            raise ValueError("need exactly one value per residue")


def eval_spectrum(g: SpectralMap, x: int) -> complex:
    """The finite sum of coeff * root**x over the support."""
    return sum((_to_complex(c) * root.power(x) for root, c in g.items()), 0j)


def support_period(g: SpectralMap) -> int:
    """lcm of the primitive orders over the support; 1 for the empty map.

    This is the fundamental period of the function the map represents.
    """
    return math.lcm(*(root.den for root, _ in g.items())) if len(g) else 1


def samples_to_spectrum(s: PeriodicSamples, tolerance: float = ZERO_TOLERANCE) -> SpectralMap:
    """Invert one window of samples into root-of-unity coefficients.

    Direct O(period^2) inverse transform; the interpolant of the result
    reproduces the samples on all of the integers.
    """
    w = s.period
    entries: dict[RootIndex, complex] = {}
    for r in range(w):
        coeff = (
            sum(_to_complex(v) * cmath.exp(-2j * math.pi * (r * x % w) / w) for x, v in enumerate(s.values))
            / w
        )
        entries[RootIndex.reduced(r, w)] = coeff
    return SpectralMap(entries, tolerance)


def spectrum_to_samples(g: SpectralMap, omega: int) -> PeriodicSamples:
    """Evaluate on 0..omega-1; omega must be a multiple of the support period."""
    if omega < 1:
        raise ValueError("omega must be >= 1")
    if omega % support_period(g) != 0:
        raise PeriodMismatch(f"{omega} is not a multiple of the support period {support_period(g)}")
    acc = [0j] * omega
    for root, coeff in g.items():
        c = _to_complex(coeff)
        step = root.as_complex()
        cur = 1 + 0j
        for x in range(omega):
            acc[x] += c * cur
            cur *= step
    return PeriodicSamples(omega, tuple(acc))


def gcd_period(s: PeriodicSamples, tolerance: float = ZERO_TOLERANCE) -> int:
    """Fundamental period via frequency indices: write the window in the basis
    zeta**(-x*k) for k = 1..period, take the active k's, and divide the window
    length by the gcd of those indices and the window length."""
    w = s.period
    active = []
    for k in range(1, w + 1):
        coeff = (
            sum(_to_complex(v) * cmath.exp(2j * math.pi * (k * x % w) / w) for x, v in enumerate(s.values))
            / w
        )
        if abs(coeff) > tolerance:
            active.append(k)
    return w // math.gcd(w, *active)


def naive_fundamental_period(s: PeriodicSamples) -> int:
    """Smallest divisor of the window length whose cyclic shift fixes the
    samples.  Exact comparison for int/Fraction entries, tolerance otherwise."""
    w = s.period
    vals = s.values
    exact = all(_is_exact(v) for v in vals)
    for t in divisors(w):
        if exact:
            ok = all(vals[(i + t) % w] == vals[i] for i in range(w))
        else:
            ok = all(
                abs(_to_complex(vals[(i + t) % w]) - _to_complex(vals[i])) <= ZERO_TOLERANCE
                for i in range(w)
            )
        if ok:
            return t
    return w


def ramanujan_components(g: SpectralMap) -> dict[int, SpectralMap]:
    """Split the support by primitive order: the component at order d is the
    part of the function spanned by the primitive d-th roots of unity."""
    by_den: dict[int, dict[RootIndex, Coefficient]] = defaultdict(dict)
    for root, coeff in g.items():
        by_den[root.den][root] = coeff
    return {den: SpectralMap(entries) for den, entries in sorted(by_den.items())}


def indicator_spectrum(a: int) -> SpectralMap:
    """The divisibility-by-a indicator as coefficient 1/a on every a-th root
    of unity (exactly a entries, one per reduced fraction with denominator
    dividing a)."""
    if a < 1:
        raise ValueError("indicator_spectrum requires a >= 1")
    entries: dict[RootIndex, Fraction] = {}
    coeff = Fraction(1, a)
    for den in divisors(a):
        for num in range(den):
            if math.gcd(num, den) == 1:
                entries[RootIndex(num, den)] = coeff
    return SpectralMap(entries)


def net_coefficients(comb: IndicatorCombination) -> dict[int, Fraction]:
    """Exact net coefficient per primitive order d: the sum of coeff/modulus
    over the moduli that d divides.  Orders with net zero are omitted.

    The fundamental period of the combination equals the lcm of the keys.
    """
    dens: set[int] = set()
    for modulus, _ in comb.terms:
        dens.update(divisors(modulus))
    nets = {}
    for den in sorted(dens):
        net = sum(
            (Fraction(coeff, modulus) for modulus, coeff in comb.terms if modulus % den == 0),
            Fraction(0),
        )
        if net != 0:
            nets[den] = net
    return nets


def combination_spectrum(comb: IndicatorCombination) -> SpectralMap:
    """Exact spectrum of an indicator combination.

    The support holds one entry per reduced fraction whose denominator has a
    nonzero net coefficient, so its size is bounded by the fundamental period;
    intended for combinations with periods up to a few thousand.
    """
    entries: dict[RootIndex, Fraction] = {}
    for den, net in net_coefficients(comb).items():
        for num in range(den):
            if math.gcd(num, den) == 1:
                entries[RootIndex(num, den)] = net
    return SpectralMap(entries)

"""Root-of-unity spectra: conversions, period formulas, and components."""

import math
import random
from fractions import Fraction

import pytest

from vpal import (
    IndicatorCombination,
    PeriodicSamples,
    PeriodMismatch,
    RootIndex,
    SpectralMap,
    combination_spectrum,
    eval_spectrum,
    evaluate,
    fundamental_period,
    gcd_period,
    indicator_for,
    indicator_spectrum,
    naive_fundamental_period,
    net_coefficients,
    ramanujan_components,
    samples_to_spectrum,
    spectrum_to_samples,
    support_period,
)


class TestRootIndex:
    def test_reduction(self):
        assert RootIndex.reduced(6, 4) == RootIndex(1, 2)
        assert RootIndex.reduced(-1, 4) == RootIndex(3, 4)
        assert RootIndex.reduced(0, 7) == RootIndex(0, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            RootIndex(2, 4)
        with pytest.raises(ValueError):
            RootIndex(5, 4)

    def test_power_wraps_exponent(self):
        root = RootIndex(1, 3)
        assert abs(root.power(7) - root.as_complex()) < 1e-12


class TestEvalSpectrum:
    def test_constant(self):
        g = SpectralMap({RootIndex(0, 1): 1})
        for x in (-3, 0, 5):
            assert abs(eval_spectrum(g, x) - 1) < 1e-12

    def test_alternating(self):
        g = SpectralMap({RootIndex(1, 2): 1})
        assert abs(eval_spectrum(g, 3) - (-1)) < 1e-12

    def test_indicator_of_two_at_four(self):
        assert abs(eval_spectrum(indicator_spectrum(2), 4) - 1) < 1e-12


class TestSupportPeriod:
    def test_lcm_of_denominators(self):
        g = SpectralMap({RootIndex(1, 3): 1.0, RootIndex(1, 4): 2.0})
        assert support_period(g) == 12

    def test_empty(self):
        assert support_period(SpectralMap({})) == 1

    def test_combination_126(self):
        assert support_period(combination_spectrum(indicator_for(126))) == 3542


class TestSamplesToSpectrum:
    def test_constant(self):
        g = samples_to_spectrum(PeriodicSamples(1, (5,)))
        assert len(g) == 1
        assert abs(g.coefficient(RootIndex(0, 1)) - 5) < 1e-12

    def test_two_point(self):
        g = samples_to_spectrum(PeriodicSamples(2, (1, 0)))
        for root in (RootIndex(0, 1), RootIndex(1, 2)):
            assert abs(g.coefficient(root) - 0.5) < 1e-12

    def test_four_point_pulse(self):
        g = samples_to_spectrum(PeriodicSamples(4, (1, 0, 0, 0)))
        assert len(g) == 4
        assert all(abs(c - 0.25) < 1e-12 for _, c in g.items())

    def test_matches_exact_indicator_spectrum(self):
        a = 6
        samples = PeriodicSamples(a, tuple(1 if x % a == 0 else 0 for x in range(a)))
        g = samples_to_spectrum(samples)
        exact = indicator_spectrum(a)
        assert {r for r, _ in g.items()} == {r for r, _ in exact.items()}
        for root, coeff in exact.items():
            assert abs(g.coefficient(root) - float(coeff)) < 1e-12


class TestSpectrumToSamples:
    def test_alternating(self):
        s = spectrum_to_samples(SpectralMap({RootIndex(1, 2): 1}), 2)
        assert abs(s.values[0] - 1) < 1e-12 and abs(s.values[1] + 1) < 1e-12

    def test_indicator_window(self):
        s = spectrum_to_samples(indicator_spectrum(3), 3)
        assert [round(v.real) for v in s.values] == [1, 0, 0]
        assert max(abs(v.imag) for v in s.values) < 1e-12

    def test_period_mismatch(self):
        with pytest.raises(PeriodMismatch):
            spectrum_to_samples(indicator_spectrum(3), 4)

    def test_round_trip_corpus(self):
        rng = random.Random(2024)
        for _ in range(60):
            w = rng.randint(1, 48)
            if rng.random() < 0.5:
                vals = tuple(rng.randint(-5, 5) for _ in range(w))
            else:
                vals = tuple(
                    complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(w)
                )
            s = PeriodicSamples(w, vals)
            back = spectrum_to_samples(samples_to_spectrum(s), w)
            assert max(abs(a - b) for a, b in zip(back.values, s.values)) < 1e-9


class TestPeriodFormulas:
    def test_constant_window(self):
        s = PeriodicSamples(12, (3,) * 12)
        assert gcd_period(s) == 1
        assert naive_fundamental_period(s) == 1

    def test_restricted_indicator(self):
        s = PeriodicSamples(6, (1, 0, 0, 1, 0, 0))
        assert gcd_period(s) == 3
        assert naive_fundamental_period(s) == 3
        assert support_period(samples_to_spectrum(s)) == 3

    def test_naive_examples(self):
        assert naive_fundamental_period(PeriodicSamples(4, (1, 0, 1, 0))) == 2
        assert naive_fundamental_period(PeriodicSamples(6, (1, 2, 3, 1, 2, 3))) == 3

    def test_three_formulas_agree_on_random_windows(self):
        rng = random.Random(31337)
        for _ in range(60):
            w = rng.randint(1, 48)
            vals = tuple(rng.randint(-2, 2) for _ in range(w))
            s = PeriodicSamples(w, vals)
            assert support_period(samples_to_spectrum(s)) == gcd_period(s) == naive_fundamental_period(s)

    def test_shift_fixes_iff_multiple_of_fundamental(self):
        rng = random.Random(11)
        for _ in range(30):
            w = rng.randint(2, 40)
            vals = tuple(rng.randint(0, 2) for _ in range(w))
            s = PeriodicSamples(w, vals)
            w0 = naive_fundamental_period(s)
            for t in range(1, 3 * w0 + 1):
                fixes = all(vals[(i + t) % w] == vals[i] for i in range(w))
                assert fixes == (t % w0 == 0)

    def test_indicator_window_period_126(self):
        comb = indicator_for(126)
        w0 = fundamental_period(comb)
        window = 2 * w0
        vals = tuple(evaluate(comb, x) for x in range(window))
        assert naive_fundamental_period(PeriodicSamples(window, vals)) == w0


class TestRamanujanComponents:
    def test_indicator_of_four(self):
        comps = ramanujan_components(indicator_spectrum(4))
        assert sorted(comps) == [1, 2, 4]
        for den, comp in comps.items():
            assert all(root.den == den for root, _ in comp.items())

    def test_single_root(self):
        comps = ramanujan_components(SpectralMap({RootIndex(1, 3): 2.0}))
        assert sorted(comps) == [3]

    def test_net_coefficients_of_difference(self):
        comb = IndicatorCombination(((2, 1), (6, -1)))
        nets = net_coefficients(comb)
        assert nets == {
            1: Fraction(1, 3),
            2: Fraction(1, 3),
            3: Fraction(-1, 6),
            6: Fraction(-1, 6),
        }
        comps = ramanujan_components(combination_spectrum(comb))
        assert sorted(comps) == [1, 2, 3, 6]
        assert comps[1].coefficient(RootIndex(0, 1)) == Fraction(1, 3)
        assert comps[2].coefficient(RootIndex(1, 2)) == Fraction(1, 3)

    def test_component_lcm_is_support_period(self):
        for n in (48, 56, 126):
            g = combination_spectrum(indicator_for(n))
            assert math.lcm(*ramanujan_components(g)) == support_period(g)


class TestIndicatorSpectrum:
    def test_small(self):
        assert len(indicator_spectrum(1)) == 1
        g = indicator_spectrum(2)
        assert g.coefficient(RootIndex(0, 1)) == Fraction(1, 2)
        assert g.coefficient(RootIndex(1, 2)) == Fraction(1, 2)

    def test_six(self):
        g = indicator_spectrum(6)
        assert len(g) == 6
        assert {root.den for root, _ in g.items()} == {1, 2, 3, 6}
        assert all(c == Fraction(1, 6) for _, c in g.items())

    def test_interpolates_divisibility(self):
        for a in (1, 2, 3, 4, 6, 10):
            g = indicator_spectrum(a)
            for x in range(2 * a):
                want = 1 if x % a == 0 else 0
                assert abs(eval_spectrum(g, x) - want) < 1e-9


class TestCombinationSpectrum:
    def test_constant(self):
        g = combination_spectrum(IndicatorCombination(((1, 1),)))
        assert len(g) == 1
        assert g.coefficient(RootIndex(0, 1)) == 1

    def test_support_period_equals_fundamental_period(self):
        for n in (13, 18, 48, 56, 122, 126):
            comb = indicator_for(n)
            assert support_period(combination_spectrum(comb)) == fundamental_period(comb)

    def test_pointwise_bridge(self):
        for n in (18, 48, 56):
            comb = indicator_for(n)
            g = combination_spectrum(comb)
            w0 = fundamental_period(comb)
            samples = spectrum_to_samples(g, w0)
            for x, got in enumerate(samples.values):
                want = evaluate(comb, x)
                assert abs(got - want) < 1e-6
                assert round(got.real) in (0, 1)

    def test_pointwise_bridge_spot_checks_large_window(self):
        comb = indicator_for(13)  # fundamental period 6045
        g = combination_spectrum(comb)
        rng = random.Random(6045)
        for x in rng.sample(range(2 * 6045), 100):
            got = eval_spectrum(g, x)
            want = evaluate(comb, x)
            assert abs(got - want) < 1e-6
            assert round(got.real) in (0, 1)

    def test_net_criterion_on_random_combinations(self):
        rng = random.Random(404)
        for _ in range(40):
            moduli = sorted(rng.sample(range(2, 40), k=rng.randint(1, 4)))
            terms = tuple((m, rng.choice([-2, -1, 1, 2])) for m in moduli)
            comb = IndicatorCombination(terms)
            nets = net_coefficients(comb)
            g = combination_spectrum(comb)
            dens = {root.den for root, _ in g.items()}
            assert dens == set(nets)
            for den in dens:
                direct = sum(
                    (Fraction(c, m) for m, c in comb.terms if m % den == 0),
                    Fraction(0),
                )
                assert direct != 0 and nets[den] == direct


class TestRamanujanSums:
    def test_sum_of_spaces_has_lcm_period(self):
        # random nonzero members of distinct primitive-order spaces
        rng = random.Random(777)
        for _ in range(15):
            count = rng.randint(2, 3)
            moduli = rng.sample(range(1, 31), k=count)
            while math.lcm(*moduli) > 20000:
                moduli = rng.sample(range(1, 31), k=count)
            entries = {}
            for w in moduli:
                for num in range(w):
                    if math.gcd(num, w) == 1:
                        entries[RootIndex(num, w)] = complex(
                            rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5)
                        )
            g = SpectralMap(entries)
            window = math.lcm(*moduli)
            s = spectrum_to_samples(g, window)
            assert naive_fundamental_period(s) == window

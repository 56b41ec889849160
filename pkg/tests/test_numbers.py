"""Integer primitives: reversal, factoring, factorization sums, repetition."""

import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from vpal import (
    BudgetExceeded,
    DigitNumber,
    Factorization,
    InvalidPrime,
    NotCoprime,
    concat,
    digit_count,
    divisors,
    factorization_sum,
    factorize,
    is_v_palindrome,
    multiplicative_order,
    padic_order,
    repetition_number,
    repetition_order,
    reverse_digits,
)


class TestReverseDigits:
    def test_known_values(self):
        assert reverse_digits(56056) == 65065
        assert reverse_digits(7) == 7
        assert reverse_digits(560) == 65  # trailing zeros drop

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            reverse_digits(0)

    @given(st.integers(min_value=1, max_value=10**12))
    def test_involution_off_multiples_of_ten(self, n):
        if n % 10 != 0:
            assert reverse_digits(reverse_digits(n)) == n

    @given(st.integers(min_value=1, max_value=10**12))
    def test_digit_count_behaviour(self, n):
        r = reverse_digits(n)
        if n % 10 == 0:
            assert digit_count(r) < digit_count(n)
        else:
            assert digit_count(r) == digit_count(n)


class TestFactorize:
    def test_known_values(self):
        assert factorize(56056).as_dict() == {2: 3, 7: 2, 11: 1, 13: 1}
        assert factorize(65065).as_dict() == {5: 1, 7: 1, 11: 1, 13: 2}
        assert factorize(1).factors == ()

    def test_soundness_against_sympy(self):
        rng = random.Random(20240)
        for _ in range(200):
            n = rng.randint(2, 10**12)
            f = factorize(n)
            assert f.as_dict() == sympy.factorint(n)
            assert f.value() == n
            assert all(sympy.isprime(p) for p, _ in f)

    def test_large_composite(self):
        n = 1000003 * 1000033 * 1000037  # beyond trial division, needs the rho stage
        f = factorize(n)
        assert f.as_dict() == {1000003: 1, 1000033: 1, 1000037: 1}

    def test_budget_exceeded_on_hard_semiprime(self):
        hard = 1000000000000066600000000000001  # 31-digit prime ("Belphegor")
        semiprime = hard * (10**30 + 57)  # 10**30 + 57 is prime
        with pytest.raises(BudgetExceeded) as info:
            factorize(semiprime, budget=10_000)
        assert info.value.budget == 10_000
        assert info.value.n == semiprime

    def test_determinism(self):
        n = 10**24 - 1
        assert factorize(n) == factorize(n)

    def test_merge(self):
        a = factorize(56056)
        b = factorize(65065)
        assert a.merge(b).value() == 56056 * 65065

    def test_validation(self):
        with pytest.raises(ValueError):
            Factorization(((3, 1), (2, 1)))  # out of order
        with pytest.raises(ValueError):
            Factorization(((2, 0),))  # zero exponent

    def test_str(self):
        assert str(factorize(126)) == "2 * 3^2 * 7"
        assert str(factorize(1)) == "1"


class TestFactorizationSum:
    def test_known_values(self):
        assert factorization_sum(18) == 7
        assert factorization_sum(81) == 7
        assert factorization_sum(1) == 1
        assert factorization_sum(56056) == (2 + 3) + (7 + 2) + 11 + 13
        assert factorization_sum(56056) == factorization_sum(65065)

    @given(
        st.integers(min_value=2, max_value=10**6),
        st.integers(min_value=2, max_value=10**6),
    )
    @settings(max_examples=200)
    def test_additive_on_coprime_arguments(self, m, n):
        if math.gcd(m, n) == 1:
            assert factorization_sum(m * n) == factorization_sum(m) + factorization_sum(n)


class TestIsVPalindrome:
    def test_known_values(self):
        assert is_v_palindrome(18) is True
        assert is_v_palindrome(560) is False  # multiple of 10
        assert is_v_palindrome(121) is False  # palindrome
        assert is_v_palindrome(56056) is True
        assert is_v_palindrome(12) is False

    def test_smallest_is_18(self):
        assert [n for n in range(1, 100) if is_v_palindrome(n)] == [18, 81]


class TestRepetitionNumber:
    def test_known_values(self):
        assert repetition_number(1, 3) == 1
        assert repetition_number(3, 2) == 10101
        assert repetition_number(2, 1) == 11

    @given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=8))
    def test_digit_structure(self, k, d):
        r = repetition_number(k, d)
        assert r == sum(10 ** (d * i) for i in range(k))
        assert str(r)[-1] == "1"
        assert digit_count(r) == d * (k - 1) + 1


class TestConcat:
    def test_known_values(self):
        assert concat(18, 3) == 181818
        assert concat(56056, 4) == 56056560565605656056
        assert concat(7, 1) == 7

    @given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=20))
    @settings(max_examples=200)
    def test_string_and_product_agree(self, n, k):
        assert concat(n, k) == n * repetition_number(k, digit_count(n))
        assert str(concat(n, k)) == str(n) * k


class TestPadicOrder:
    def test_known_values(self):
        assert padic_order(999, 3) == 3
        assert padic_order(7, 5) == 0
        assert padic_order(56056, 2) == 3

    @given(st.integers(min_value=1, max_value=10**9))
    def test_definition(self, n):
        e = padic_order(n, 3)
        assert n % 3**e == 0 and n % 3 ** (e + 1) != 0


class TestMultiplicativeOrder:
    def test_known_values(self):
        assert multiplicative_order(6, 7) == 2
        assert multiplicative_order(1, 97) == 1
        assert multiplicative_order(10, 81) == 9

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            multiplicative_order(6, 8)

    def test_against_scan(self):
        rng = random.Random(5)
        for _ in range(100):
            m = rng.randint(2, 400)
            a = rng.randint(1, m - 1)
            if math.gcd(a, m) != 1:
                continue
            t = multiplicative_order(a, m)
            x, scan = a % m, 1
            while x != 1:
                x = x * a % m
                scan += 1
            assert t == scan


class TestRepetitionOrder:
    def test_table_values(self):
        assert repetition_order(7, 2, 3) == 14
        assert repetition_order(23, 1, 3) == 22
        assert repetition_order(23, 2, 3) == 506
        assert repetition_order(3, 2, 3) == 9
        assert repetition_order(7, 1, 3) == 2

    def test_rejects_bad_primes(self):
        for p in (2, 5, 9):
            with pytest.raises(InvalidPrime):
                repetition_order(p, 1, 2)

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_properties_up_to_100(self, d):
        for p in [q for q in range(3, 101) if sympy.isprime(q) and q != 5]:
            h1 = repetition_order(p, 1, d)
            h2 = repetition_order(p, 2, d)
            assert h1 > 1 and h2 > 1
            assert h2 % h1 == 0
            # minimality: the power is 1 at h, not at h/q for any prime q | h
            for alpha, h in ((1, h1), (2, h2)):
                e0 = padic_order(10**d - 1, p)
                modulus = p ** (alpha + e0)
                assert pow(10, d * h, modulus) == 1
                for q in {f for f, _ in factorize(h)}:
                    assert pow(10, d * (h // q), modulus) != 1


class TestDivisors:
    def test_known(self):
        assert divisors(1) == [1]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(3542) == sorted(sympy.divisors(3542))


class TestDigitNumber:
    def test_round_trip(self):
        d = DigitNumber.from_int(560)
        assert d.digits == "560"
        assert d.digit_count == 3
        assert d.reversed().value == 65

    def test_rejects_mismatch(self):
        with pytest.raises(ValueError):
            DigitNumber(56, "056")
        with pytest.raises(ValueError):
            DigitNumber(56, "57")

"""Exact number engines and zeta machinery against independent oracles."""

import math
from fractions import Fraction

import pytest

from tanfrac.numbers import (
    bernoulli,
    euler,
    euler_from_bernoulli,
    hurwitz_zeta,
    lambda_even,
    lambda_odd_denominator,
    zeta_even,
)
from tanfrac.precision import PrecisionPolicy, Real, const_pi

BERNOULLI_LISTED = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}

EULER_LISTED = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    3: Fraction(1, 4),
    5: Fraction(-1, 2),
    7: Fraction(17, 8),
    9: Fraction(-31, 2),
    11: Fraction(691, 4),
    13: Fraction(-5461, 2),
    15: Fraction(929569, 16),
    17: Fraction(-3202291, 2),
    19: Fraction(221930581, 4),
}


class TestBernoulli:
    @pytest.mark.parametrize("n,expected", sorted(BERNOULLI_LISTED.items()))
    def test_listed_values(self, n, expected):
        assert bernoulli(n) == expected

    def test_odd_indices_vanish(self):
        assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 20))

    def test_sign_alternation(self):
        for k in range(1, 20):
            sign = 1 if (k + 1) % 2 == 0 else -1
            assert bernoulli(2 * k) * sign > 0

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)


class TestEuler:
    @pytest.mark.parametrize("n,expected", sorted(EULER_LISTED.items()))
    def test_listed_values(self, n, expected):
        assert euler(n) == expected

    def test_even_indices_vanish(self):
        assert all(euler(2 * k) == 0 for k in range(1, 20))

    def test_odd_sign_pattern(self):
        for k in range(10):
            assert euler(4 * k + 1) < 0
            assert euler(4 * k + 3) > 0

    def test_equals_bernoulli_route_to_60(self):
        for n in range(61):
            assert euler(n) == euler_from_bernoulli(n)

    def test_odd_euler_from_even_bernoulli(self):
        # E_{2n-1} = -(2^{2n} - 1)/n * B_{2n}
        for n in range(1, 31):
            assert euler(2 * n - 1) == Fraction(-(4**n - 1), n) * bernoulli(2 * n)

    def test_from_bernoulli_base_cases(self):
        assert euler_from_bernoulli(0) == 1
        assert euler_from_bernoulli(1) == Fraction(-1, 2)
        assert euler_from_bernoulli(13) == Fraction(-5461, 2)


class TestZetaEven:
    def test_zeta2_is_pi_squared_over_six(self, policy, pi256):
        assert zeta_even(1, policy).overlaps(pi256.pow_int(2) / 6)

    def test_zeta4_is_pi_fourth_over_ninety(self, policy, pi256):
        assert zeta_even(2, policy).overlaps(pi256.pow_int(4) / 90)

    def test_against_direct_summation(self, policy):
        # brute-force oracle: partial sum + integral-test tail interval
        for n in (1, 2, 5, 10):
            terms = 10_000
            partial = Fraction(0)
            for k in range(1, terms + 1):
                partial += Fraction(1, k ** (2 * n))
            tail = Fraction(1, (2 * n - 1) * terms ** (2 * n - 1))
            oracle = Real.from_rational(partial, 256).widen(tail) + Real.from_rational(
                tail / 2, 256
            )
            z = zeta_even(n, policy)
            assert z.overlaps(oracle)
            assert z.radius_fraction() < Fraction(1, 10**20)

    def test_invalid_index(self, policy):
        with pytest.raises(ValueError):
            zeta_even(0, policy)


class TestLambda:
    def test_lambda2(self, policy, pi256):
        assert lambda_odd_denominator(1, policy).overlaps(pi256.pow_int(2) / 8)

    def test_lambda4(self, policy, pi256):
        assert lambda_odd_denominator(2, policy).overlaps(pi256.pow_int(4) / 96)

    def test_odd_euler_consistency(self, policy, pi256):
        # 4 (2n-1)! (-1)^n pi^{-2n} lambda(2n) = E_{2n-1}
        for n in range(1, 9):
            sign = -1 if n % 2 else 1
            value = (
                lambda_odd_denominator(n, policy)
                * (4 * sign * math.factorial(2 * n - 1))
                / pi256.pow_int(2 * n)
            )
            assert value.contains_rational(euler(2 * n - 1))

    def test_hybrid_direct_branch_matches_closed_form(self, policy):
        # s = 66 goes through direct summation; 2*33 = 66 through Bernoulli
        direct = lambda_even(66, policy)
        closed = lambda_odd_denominator(33, policy)
        assert direct.overlaps(closed)
        assert direct.radius_fraction() < Fraction(1, 10**70)


class TestHurwitzZeta:
    def test_reduces_to_zeta_at_a_equal_one(self, policy):
        assert hurwitz_zeta(2, Fraction(1), policy).overlaps(zeta_even(1, policy))

    def test_half_argument(self, policy, pi256):
        # sum (n + 1/2)^-2 = pi^2 / 2
        v = hurwitz_zeta(2, Fraction(1, 2), policy)
        assert v.overlaps(pi256.pow_int(2) / 2)

    def test_quarter_difference_cubed(self, policy, pi256):
        v = hurwitz_zeta(3, Fraction(1, 4), policy) - hurwitz_zeta(
            3, Fraction(3, 4), policy
        )
        assert v.overlaps(pi256.pow_int(3) * 2)

    def test_quarter_difference_brute_force(self, policy):
        # independent summation oracle for sum (1/(4k+1)^3 - 1/(4k+3)^3)
        acc = Fraction(0)
        terms = 2000
        for k in range(terms):
            acc += Fraction(1, (4 * k + 1) ** 3) - Fraction(1, (4 * k + 3) ** 3)
        # leftover pairs are positive and below 2/(4k)^3 summed
        crude_tail = Fraction(2, (4 * terms) ** 2)
        oracle = Real.from_rational(acc, 256).widen(crude_tail)
        v = (
            hurwitz_zeta(3, Fraction(1, 4), policy)
            - hurwitz_zeta(3, Fraction(3, 4), policy)
        ) * Fraction(1, 64)
        assert v.overlaps(oracle)

    @pytest.mark.parametrize("s", (2, 3, 5, 9))
    @pytest.mark.parametrize("a", (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)))
    def test_grid_against_direct_partial_sums(self, policy, s, a):
        terms = 4000
        partial = Fraction(0)
        for n in range(terms):
            partial += (n + a) ** -s
        crude_tail = Fraction(2, (s - 1) * terms ** (s - 1))
        oracle = Real.from_rational(partial, 256).widen(crude_tail)
        assert hurwitz_zeta(s, a, policy).overlaps(oracle)

    def test_precision_scales(self):
        wide = hurwitz_zeta(5, Fraction(1, 4), PrecisionPolicy(64))
        tight = hurwitz_zeta(5, Fraction(1, 4), PrecisionPolicy(256))
        assert tight.radius_fraction() < wide.radius_fraction()
        assert wide.overlaps(tight)

    def test_validation(self, policy):
        with pytest.raises(ValueError):
            hurwitz_zeta(1, Fraction(1, 2), policy)
        with pytest.raises(ValueError):
            hurwitz_zeta(3, Fraction(5, 4), policy)


def test_euler_generating_function_coefficients(policy):
    """Jet division of 2 by (e^z + 1) reproduces euler(n)/n! for n <= 20."""
    from tanfrac.taylor import Jet, jet_arith

    bits = policy.working_bits
    order = 20
    zero = Real.exact_zero(bits)
    num = Jet(
        zero,
        tuple(
            [Real.from_rational(2, bits)] + [Real.exact_zero(bits)] * order
        ),
    )
    den_coeffs = [
        Real.from_rational(Fraction(1, math.factorial(j)), bits)
        for j in range(order + 1)
    ]
    den_coeffs[0] = den_coeffs[0] + 1  # e^z + 1 at z = 0
    quotient = jet_arith("div", num, Jet(zero, tuple(den_coeffs)))
    for n in range(order + 1):
        expected = euler(n) / math.factorial(n)
        assert quotient.coeffs[n].contains_rational(expected)

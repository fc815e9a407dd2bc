"""Ball arithmetic: containment, refinement, and the independent pi."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tanfrac.precision import (
    DomainError,
    PoleStraddleError,
    PrecisionPolicy,
    Real,
    const_pi,
    eval_elementary,
)

# first 40 decimal digits of pi, cross-checked against mpmath in a test below
PI_DIGITS = "3.141592653589793238462643383279502884197"

LOG_COSH_HALF = Fraction("0.12011450695827752463176337350968")  # mpmath, 32 digits


def _ball(value, bits=256):
    return Real.from_rational(Fraction(value), bits)


class TestPolicy:
    def test_defaults(self):
        pol = PrecisionPolicy()
        assert pol.working_bits == 256
        assert pol.target_tolerance == Fraction(1, 10**30)

    def test_validation(self):
        with pytest.raises(ValueError):
            PrecisionPolicy(working_bits=32)
        with pytest.raises(ValueError):
            PrecisionPolicy(target_tolerance=Fraction(0))


class TestConstPi:
    def test_matches_published_digits(self, pi256):
        assert pi256.decimal(40).startswith(PI_DIGITS[:2])
        mid = str(pi256.decimal(40))
        # compare digit strings: "3.14159..." vs our "3.14159...e+0"
        assert mid.replace("e+0", "")[:41] == PI_DIGITS

    def test_matches_mpmath(self, pi256):
        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 75
        approx = Fraction(int(mpmath.floor(mpmath.pi * 10**70)), 10**70)
        box = Real.from_rational(approx, 256).widen(Fraction(1, 10**69))
        assert pi256.overlaps(box)

    def test_radius_contract_64_bits(self):
        pi64 = const_pi(PrecisionPolicy(64))
        assert pi64.radius_fraction() <= Fraction(1, 2**60)

    def test_trivial_bounds(self, pi256):
        assert pi256.midpoint_fraction() > 3
        assert pi256.midpoint_fraction() < 4

    def test_doubling_bits_at_least_halves_radius(self):
        prev = const_pi(PrecisionPolicy(64)).radius_fraction()
        for bits in (128, 256, 512):
            cur = const_pi(PrecisionPolicy(bits)).radius_fraction()
            assert cur <= prev / 2
            prev = cur


class TestArithmetic:
    def test_exact_rational_round_trip(self):
        x = _ball(Fraction(3, 8))  # dyadic, exactly representable
        assert x.radius_fraction() == 0
        assert x.midpoint_fraction() == Fraction(3, 8)

    def test_non_dyadic_is_outward(self):
        x = _ball(Fraction(1, 3))
        assert x.radius_fraction() > 0
        assert x.contains_rational(Fraction(1, 3))

    @given(
        a=st.fractions(max_denominator=10**6),
        b=st.fractions(max_denominator=10**6),
    )
    @settings(max_examples=300, deadline=None)
    def test_ring_ops_contain_exact_values(self, a, b):
        xa, xb = _ball(a, 128), _ball(b, 128)
        assert (xa + xb).contains_rational(a + b)
        assert (xa - xb).contains_rational(a - b)
        assert (xa * xb).contains_rational(a * b)
        if b != 0 and abs(b) > Fraction(1, 10**7):
            assert (xa / xb).contains_rational(a / b)

    @given(st.fractions(max_denominator=10**4), st.integers(min_value=0, max_value=9))
    @settings(max_examples=200, deadline=None)
    def test_pow_contains_exact(self, a, n):
        assert _ball(a, 128).pow_int(n).contains_rational(a**n)

    def test_pow_negative_exponent(self):
        x = _ball(Fraction(2, 3))
        assert x.pow_int(-2).contains_rational(Fraction(9, 4))

    def test_even_power_of_straddling_interval(self):
        x = _ball(0).widen(Fraction(1, 2))  # [-1/2, 1/2]
        sq = x.pow_int(2)
        assert sq.contains_rational(0)
        assert sq.contains_rational(Fraction(1, 4))

    def test_division_by_zero_interval(self):
        with pytest.raises(DomainError):
            _ball(1) / _ball(0).widen(Fraction(1, 10))

    def test_abs(self):
        x = _ball(Fraction(-1, 2)).widen(1)  # [-3/2, 1/2]
        a = abs(x)
        assert a.contains_rational(0)
        assert a.contains_rational(Fraction(3, 2))
        assert not a.contains_rational(Fraction(-1, 10))


# spec'd invariant: rational arithmetic is exact, checked on 1000 random pairs
@given(
    a=st.fractions(max_denominator=10**9),
    b=st.fractions(max_denominator=10**9),
)
@settings(max_examples=1000, deadline=None)
def test_rational_cross_multiplication_identity(a, b):
    s = a + b
    assert s.numerator * a.denominator * b.denominator == (
        a.numerator * b.denominator + b.numerator * a.denominator
    ) * s.denominator


_SAFE_ARGS = {
    "tan": st.fractions(min_value=Fraction(-7, 5), max_value=Fraction(7, 5), max_denominator=1000),
    "tanh": st.fractions(min_value=-5, max_value=5, max_denominator=1000),
    "cos": st.fractions(min_value=-8, max_value=8, max_denominator=1000),
    "cosh": st.fractions(min_value=-5, max_value=5, max_denominator=1000),
    "exp": st.fractions(min_value=-20, max_value=20, max_denominator=1000),
    "log": st.fractions(min_value=Fraction(1, 1000), max_value=100, max_denominator=1000),
    "sqrt": st.fractions(min_value=0, max_value=100, max_denominator=1000),
}


@pytest.mark.parametrize("name", sorted(_SAFE_ARGS))
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_containment_higher_precision_inside_lower(name, data):
    """A 10x-precision evaluation must land inside the low-precision ball."""
    q = data.draw(_SAFE_ARGS[name])
    lo = eval_elementary(name, _ball(q, 64), PrecisionPolicy(64))
    hi = eval_elementary(name, _ball(q, 640), PrecisionPolicy(640))
    assert lo.contains_interval(hi)


@pytest.mark.parametrize("name", sorted(_SAFE_ARGS))
def test_monotone_refinement(name):
    q = Fraction(7, 9) if name != "log" else Fraction(16, 9)
    x = _ball(q, 64)
    r_low = eval_elementary(name, x, PrecisionPolicy(64)).radius_fraction()
    r_high = eval_elementary(name, x, PrecisionPolicy(128)).radius_fraction()
    assert r_high <= r_low


class TestElementary:
    def test_tan_quarter_pi_is_one(self, policy, pi256):
        x = pi256 * Fraction(1, 4)
        assert eval_elementary("tan", x, policy).contains_rational(1)

    def test_cos_zero_exact(self, policy):
        c = eval_elementary("cos", Real.exact_zero(256), policy)
        assert c.contains_rational(1)
        assert c.radius_fraction() == 0

    def test_log_cosh_half_matches_oracle(self, policy):
        v = eval_elementary(
            "log", eval_elementary("cosh", _ball(Fraction(1, 2)), policy), policy
        )
        assert v.gap_to(_ball(LOG_COSH_HALF).widen(Fraction(1, 10**31))) == 0

    def test_log_domain_error(self, policy):
        with pytest.raises(DomainError):
            eval_elementary("log", _ball(-1), policy)
        with pytest.raises(DomainError):
            eval_elementary("log", _ball(0).widen(Fraction(1, 10)), policy)

    def test_sqrt_domain_error(self, policy):
        with pytest.raises(DomainError):
            eval_elementary("sqrt", _ball(-4), policy)

    def test_tan_pole_straddle(self, policy, pi256):
        with pytest.raises(PoleStraddleError):
            eval_elementary("tan", pi256 * Fraction(1, 2), policy)
        with pytest.raises(PoleStraddleError):
            eval_elementary("tan", pi256 * Fraction(3, 2), policy)

    def test_tan_near_pi_contains_zero(self, policy, pi256):
        assert eval_elementary("tan", pi256, policy).contains_zero()

    def test_unknown_function(self, policy):
        with pytest.raises(ValueError):
            eval_elementary("sin", _ball(1), policy)

"""Truncated Taylor jets and exact derivative polynomials of tan.

A jet stores scaled derivatives f(a), f'(a), f''(a)/2!, ... as ball-valued
coefficients, so jet arithmetic yields enclosures of the true Taylor
coefficients of the combined function.  Derivatives of tan are never taken
by finite differences: jets are propagated through t' = 1 + t*t, and the
exact integer polynomials P_k with d^k tan / dx^k = P_k(tan x) are produced
by the recurrence P_{k+1} = (1 + t^2) P_k'.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numbers import bernoulli
from .precision import (
    DEFAULT_POLICY,
    PrecisionPolicy,
    Real,
    const_pi,
    eval_elementary,
)

__all__ = [
    "DerivativePolynomial",
    "Jet",
    "JetDivisionError",
    "cot_series_check",
    "iterated_operator_lhs",
    "jet_arith",
    "jet_lift_identity",
    "jet_tan",
    "tan_derivative_poly",
    "theorem23_lhs",
]


class JetDivisionError(ArithmeticError):
    """Divisor jet has a constant term whose interval contains zero."""


@dataclass(frozen=True)
class Jet:
    """Truncated Taylor expansion at a point: coeffs[j] encloses f^(j)(a)/j!."""

    center: Real
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a jet needs at least the order-0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def value(self) -> Real:
        return self.coeffs[0]


def _same_center(f: Jet, g: Jet):
    fc, gc = f.center, g.center
    if fc.midpoint != gc.midpoint or fc.radius != gc.radius:
        raise ValueError("jet arithmetic requires equal centers")


def jet_lift_identity(a: Real, order: int) -> Jet:
    """Jet of f(x) = x at a: [a, 1, 0, ..., 0]."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    bits = a.precision
    coeffs = [a]
    if order >= 1:
        coeffs.append(Real.from_rational(1, bits))
        coeffs.extend(Real.exact_zero(bits) for _ in range(order - 1))
    return Jet(a, tuple(coeffs))


def jet_const(value: Real, center: Real, order: int) -> Jet:
    coeffs = [value] + [Real.exact_zero(value.precision) for _ in range(order)]
    return Jet(center, tuple(coeffs))


def _jet_add(f: Jet, g: Jet) -> Jet:
    _same_center(f, g)
    n = min(len(f.coeffs), len(g.coeffs))
    return Jet(f.center, tuple(f.coeffs[i] + g.coeffs[i] for i in range(n)))


def _jet_sub(f: Jet, g: Jet) -> Jet:
    _same_center(f, g)
    n = min(len(f.coeffs), len(g.coeffs))
    return Jet(f.center, tuple(f.coeffs[i] - g.coeffs[i] for i in range(n)))


def _jet_mul(f: Jet, g: Jet) -> Jet:
    _same_center(f, g)
    n = min(len(f.coeffs), len(g.coeffs))
    out = []
    for k in range(n):
        acc = f.coeffs[0] * g.coeffs[k]
        for i in range(1, k + 1):
            acc = acc + f.coeffs[i] * g.coeffs[k - i]
        out.append(acc)
    return Jet(f.center, tuple(out))


def _jet_div(f: Jet, g: Jet) -> Jet:
    _same_center(f, g)
    n = min(len(f.coeffs), len(g.coeffs))
    if not g.coeffs[0].excludes_zero():
        raise JetDivisionError("constant term of divisor jet contains zero")
    out = []
    for k in range(n):
        acc = f.coeffs[k]
        for i in range(k):
            acc = acc - out[i] * g.coeffs[k - i]
        out.append(acc / g.coeffs[0])
    return Jet(f.center, tuple(out))


def _jet_square(f: Jet) -> Jet:
    return _jet_mul(f, f)


_JET_OPS = {
    "add": _jet_add,
    "sub": _jet_sub,
    "mul": _jet_mul,
    "div": _jet_div,
}


def jet_arith(op: str, f: Jet, g: Jet | None = None) -> Jet:
    """Combine jets: op in {add, sub, mul, div, square} (square ignores g)."""
    if op == "square":
        return _jet_square(f)
    try:
        fn = _JET_OPS[op]
    except KeyError:
        raise ValueError(f"unknown jet operation: {op!r}") from None
    if g is None:
        raise ValueError(f"jet operation {op!r} needs two operands")
    return fn(f, g)


def jet_scale(f: Jet, scalar) -> Jet:
    return Jet(f.center, tuple(c * scalar for c in f.coeffs))


def jet_derivative(f: Jet) -> Jet:
    """Jet of f', one order shorter: coefficient j becomes (j+1) c_{j+1}."""
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 jet")
    return Jet(f.center, tuple(f.coeffs[j + 1] * (j + 1) for j in range(f.order)))


def jet_tan(a: Real, order: int, policy: PrecisionPolicy | None = None) -> Jet:
    """Jet of tan at a, seeded by an enclosure of tan(a).

    Coefficients follow from t' = 1 + t^2:
    (j+1) c_{j+1} = [u^j](1 + T(u)^2).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    pol = policy or PrecisionPolicy(a.precision)
    c0 = eval_elementary("tan", a, pol)
    coeffs = [c0]
    for j in range(order):
        # coefficient j of T^2 plus the constant 1 at j = 0
        acc = coeffs[0] * coeffs[j]
        for i in range(1, j + 1):
            acc = acc + coeffs[i] * coeffs[j - i]
        if j == 0:
            acc = acc + 1
        coeffs.append(acc / (j + 1))
    return Jet(a, tuple(coeffs))


def cot_series_check(order: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> bool:
    """Verify the even Taylor coefficients of z*cot(z) against Bernoulli numbers.

    z*cot(z) is formed as the jet quotient (z cos z) / (sin z) at 0 with one
    factor of z cancelled, i.e. cos-jet divided by (sin z / z)-jet.  Returns
    True when coefficient 2n encloses (-1)^n 4^n B_{2n} / (2n)! for every
    n <= order.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    bits = policy.working_bits
    zero = Real.exact_zero(bits)
    top = 2 * order
    cos_coeffs = []
    sinz_coeffs = []
    for j in range(top + 1):
        if j % 2:
            cos_coeffs.append(zero)
            sinz_coeffs.append(zero)
        else:
            m = j // 2
            cos_coeffs.append(
                Real.from_rational(Fraction((-1) ** m, math.factorial(j)), bits)
            )
            sinz_coeffs.append(
                Real.from_rational(Fraction((-1) ** m, math.factorial(j + 1)), bits)
            )
    center = zero
    quotient = _jet_div(Jet(center, tuple(cos_coeffs)), Jet(center, tuple(sinz_coeffs)))
    for n in range(order + 1):
        expected = Fraction((-1) ** n * 4**n, math.factorial(2 * n)) * bernoulli(2 * n)
        if not quotient.coeffs[2 * n].contains_rational(expected):
            return False
    return True


@dataclass(frozen=True)
class DerivativePolynomial:
    """Integer polynomial P_k with d^k tan / dx^k = P_k(tan x).

    coeffs[i] is the coefficient of t^i; deg P_k = k + 1 and P_k only has
    terms whose parity matches k + 1.
    """

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, t):
        """Horner evaluation; works for Fraction and Real arguments alike."""
        acc = t * 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


_TAN_POLYS = [(0, 1)]
_TAN_POLY_LOCK = threading.Lock()


def tan_derivative_poly(k: int) -> DerivativePolynomial:
    """Exact P_k via P_0 = t, P_{k+1} = (1 + t^2) P_k'."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k >= len(_TAN_POLYS):
        with _TAN_POLY_LOCK:
            while len(_TAN_POLYS) <= k:
                prev = _TAN_POLYS[-1]
                deriv = tuple((i + 1) * prev[i + 1] for i in range(len(prev) - 1))
                nxt = [0] * (len(deriv) + 2)
                for i, c in enumerate(deriv):
                    nxt[i] += c
                    nxt[i + 2] += c
                _TAN_POLYS.append(tuple(nxt))
    return DerivativePolynomial(_TAN_POLYS[k])


def theorem23_lhs(n: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """(pi/4)^{2n-1} / (2n-2)! times P_{2n-2}(1), the tan-derivative side
    of the quarter-pi Hurwitz-difference identity (n = 1 gives pi/4)."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = tan_derivative_poly(2 * n - 2)
    scale = Fraction(poly.value_at_one(), math.factorial(2 * n - 2))
    quarter_pi = const_pi(policy) * Fraction(1, 4)
    return quarter_pi.pow_int(2 * n - 1) * scale


def iterated_operator_lhs(
    n: int, x: Real, policy: PrecisionPolicy = DEFAULT_POLICY
) -> Real:
    """Apply the stages (1/(8jx)) d/dx, j = 1..n, to tan(x)/(8x) + 1/(4x^2 - pi^2).

    The seed jet has order exactly n, each stage consumes one order, and the
    surviving order-0 coefficient is returned.  x must exclude 0 and the
    poles of both summands (odd multiples of pi/2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not x.excludes_zero():
        raise ZeroDivisionError("x interval must exclude zero")
    tan_jet = jet_tan(x, n, policy)
    ident = jet_lift_identity(x, n)
    g = _jet_div(tan_jet, jet_scale(ident, 8))
    pi_sq = const_pi(policy).pow_int(2)
    den = _jet_sub(jet_scale(_jet_mul(ident, ident), 4), jet_const(pi_sq, x, n))
    one = jet_const(Real.from_rational(1, x.precision), x, n)
    g = _jet_add(g, _jet_div(one, den))
    for j in range(1, n + 1):
        d = jet_derivative(g)
        divisor = jet_scale(jet_lift_identity(x, d.order), 8 * j)
        g = _jet_div(d, divisor)
    return g.coeffs[0]

"""Exact Bernoulli and Euler numbers, even zeta values, Hurwitz zeta.

The Euler numbers here are the coefficients of 2/(e^z + 1), not the classical
secant numbers: E_0 = 1, E_1 = -1/2, and E_{2k} = 0 for k >= 1.  The defining
relation E_n = -sum_{i<=n} C(n,i) E_i includes the i = n term on the right,
so it is applied in the rearranged form 2 E_n = -sum_{i<n} C(n,i) E_i; this
reading reproduces the standard table (E_3 = 1/4, E_7 = 17/8, ...).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .precision import DEFAULT_POLICY, PrecisionPolicy, Real

__all__ = [
    "BernoulliTable",
    "EulerTable",
    "bernoulli",
    "euler",
    "euler_from_bernoulli",
    "zeta_even",
    "lambda_odd_denominator",
    "hurwitz_zeta",
]


class BernoulliTable:
    """Append-only memo of B_0..B_N, grown by the binomial recurrence.

    sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1, which fixes B_1 = -1/2.
    Growth happens under a lock; reads of computed prefixes are safe
    concurrently.
    """

    def __init__(self):
        self._values = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be nonnegative")
        if n >= len(self._values):
            with self._lock:
                self._extend(n)
        return self._values[n]

    def _extend(self, n: int):
        values = self._values
        for m in range(len(values), n + 1):
            if m % 2 == 1 and m > 1:
                values.append(Fraction(0))
                continue
            acc = Fraction(0)
            # odd B_k vanish for k >= 3; skipping them only skips zeros
            for k in range(0, m, 2) if m > 2 else range(m):
                acc += math.comb(m + 1, k) * values[k]
            if m > 2:
                acc += math.comb(m + 1, 1) * values[1]
            values.append(-acc / (m + 1))


class EulerTable:
    """Append-only memo of E_0..E_N for the 2/(e^z + 1) convention."""

    def __init__(self):
        self._values = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Euler index must be nonnegative")
        if n >= len(self._values):
            with self._lock:
                self._extend(n)
        return self._values[n]

    def _extend(self, n: int):
        values = self._values
        for m in range(len(values), n + 1):
            acc = values[0]  # i = 0 term, C(m,0) E_0 = 1
            if m >= 2:
                acc += math.comb(m, 1) * values[1]
            # even E_i vanish for i >= 2
            for i in range(3, m, 2):
                acc += math.comb(m, i) * values[i]
            values.append(-acc / 2)


_BERNOULLI = BernoulliTable()
_EULER = EulerTable()


def bernoulli(n: int) -> Fraction:
    """Exact B_n for the generating function z/(e^z - 1)."""
    return _BERNOULLI.value(n)


def euler(n: int) -> Fraction:
    """Exact E_n for the generating function 2/(e^z + 1)."""
    return _EULER.value(n)


def euler_from_bernoulli(n: int) -> Fraction:
    """E_n computed from B_{n+1}: E_n = -2 (2^{n+1} - 1) B_{n+1} / (n+1)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return Fraction(-2 * (2 ** (n + 1) - 1), n + 1) * bernoulli(n + 1)


def zeta_even(n: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of zeta(2n) from the Bernoulli closed form.

    zeta(2n) = (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!), so the radius is
    dominated by the pi enclosure.
    """
    if n < 1:
        raise ValueError("zeta_even requires n >= 1")
    from .precision import const_pi

    coeff = (
        Fraction((-1) ** (n - 1) * 4**n, 2 * math.factorial(2 * n))
        * bernoulli(2 * n)
    )
    return const_pi(policy).pow_int(2 * n) * coeff


def lambda_odd_denominator(n: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of lambda(2n) = sum_{k>=0} (2k+1)^{-2n} = (1 - 4^{-n}) zeta(2n)."""
    if n < 1:
        raise ValueError("lambda_odd_denominator requires n >= 1")
    return zeta_even(n, policy) * Fraction(4**n - 1, 4**n)


# Above this exponent the odd-denominator sum converges fast enough that
# direct summation beats building ever-larger Bernoulli numbers.
_LAMBDA_DIRECT_CUTOFF = 64
_LAMBDA_CACHE: dict = {}


def lambda_even(s: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of lambda(s) for even s >= 2 (internal workhorse).

    Small s uses the exact Bernoulli closed form; large s sums directly with
    an integral-test tail, which needs only O(working_bits / s) terms.
    """
    if s < 2 or s % 2:
        raise ValueError("lambda_even requires even s >= 2")
    key = (s, policy.working_bits)
    cached = _LAMBDA_CACHE.get(key)
    if cached is not None:
        return cached
    if s <= _LAMBDA_DIRECT_CUTOFF:
        value = lambda_odd_denominator(s // 2, policy)
    else:
        bits = policy.working_bits
        # (2M+1)^-s <= 2^-(bits+16)
        m_terms = 1
        while (2 * m_terms + 1) ** s < 1 << (bits + 16):
            m_terms += 1
        acc = Real.exact_zero(bits)
        for k in range(m_terms):
            acc = acc + Real.from_rational(Fraction(1, (2 * k + 1) ** s), bits)
        q = 2 * m_terms + 1
        tail = Fraction(1, q**s) + Fraction(1, 2 * (s - 1) * q ** (s - 1))
        value = acc.widen(tail)
    _LAMBDA_CACHE[key] = value
    return value


def _rising(s: int, count: int) -> int:
    out = 1
    for i in range(count):
        out *= s + i
    return out


def hurwitz_zeta(s: int, a: Fraction, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of zeta(s, a) = sum_{n>=0} (n+a)^{-s} for integer s >= 2.

    Direct summation to a cut M plus an Euler-Maclaurin tail.  For
    f(x) = (x+a)^{-s} every derivative has constant sign on [M, inf), so the
    truncation error after the order-J correction is bounded by the magnitude
    of that correction term; M is grown until the proven bound drops below
    2^-(working_bits - 8).  All tail quantities are exact rationals.
    """
    if s < 2:
        raise ValueError("hurwitz_zeta requires s >= 2")
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("hurwitz_zeta requires 0 < a <= 1")
    bits = policy.working_bits
    j_order = max(8, bits // 8)
    b2j = abs(bernoulli(2 * j_order))
    rise = _rising(s, 2 * j_order - 1)
    fact = math.factorial(2 * j_order)
    threshold = Fraction(1, 1 << (bits - 8))
    m_cut = max(16, 2 * j_order)
    while True:
        remainder = b2j * rise / fact * (m_cut + a) ** (-(s + 2 * j_order - 1))
        if remainder < threshold:
            break
        m_cut *= 2
        if m_cut > 1 << 24:  # pragma: no cover - unreachable safety stop
            raise RuntimeError("Euler-Maclaurin cut grew without bound")

    acc = Real.exact_zero(bits)
    for n in range(m_cut):
        acc = acc + Real.from_rational((n + a) ** (-s), bits)
    macc = m_cut + a
    acc = acc + Real.from_rational(macc ** (1 - s) / (s - 1), bits)
    acc = acc + Real.from_rational(macc ** (-s) / 2, bits)
    for j in range(1, j_order + 1):
        term = (
            bernoulli(2 * j)
            / math.factorial(2 * j)
            * _rising(s, 2 * j - 1)
            * macc ** (-(s + 2 * j - 1))
        )
        acc = acc + Real.from_rational(term, bits)
    return acc.widen(remainder)

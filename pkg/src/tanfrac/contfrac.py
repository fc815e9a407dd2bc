"""Generalized continued fractions with exact rational convergents.

A GCF is b_0 + a_1/(b_1 + a_2/(b_2 + ...)); convergents follow the
three-term recurrence p_k = b_k p_{k-1} + a_k p_{k-2} (q likewise) seeded
with p_{-1} = 1, q_{-1} = 0, p_0 = b_0, q_0 = 1.  Convergents are kept
exact because negative partial denominators (as in the tanh-tan family)
make floating forward recurrences unstable; q_k may legitimately hit zero
there, and such singular indices are flagged and skipped when extracting a
value estimate.

The value radius attached by `eval_gcf` is the gap between the last two
non-singular convergents.  That is a heuristic, not a proven enclosure;
identity checks built on it use convergence-trend criteria.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from gmpy2 import mpz

from .precision import DEFAULT_POLICY, PrecisionPolicy, Real

__all__ = [
    "GCF",
    "ConvergentSequence",
    "SingularConvergentError",
    "cf_pi_eq5",
    "cf_pi_eq6",
    "cf_quarter_pi_thm21",
    "cf_thm26",
    "convergent_error_samples",
    "eval_gcf",
    "stabilized_value",
]


class SingularConvergentError(ArithmeticError):
    """Every requested convergent had q_k = 0."""


@dataclass(frozen=True)
class GCF:
    """Lazily generated continued fraction.

    `term_fn(k)` must be a pure function of k >= 1 returning the pair
    (a_k, b_k); determinism of the generator is therefore structural.
    """

    name: str
    leading: Fraction
    term_fn: Callable[[int], tuple[Fraction, Fraction]]

    def term(self, k: int) -> tuple[Fraction, Fraction]:
        if k < 1:
            raise ValueError("terms are indexed from 1")
        a, b = self.term_fn(k)
        a, b = Fraction(a), Fraction(b)
        if a == 0:
            raise ValueError(f"{self.name}: partial numerator a_{k} is zero")
        return a, b


@dataclass
class ConvergentSequence:
    """Exact convergent data up to some depth.

    `singular` lists indices whose q_k vanished; `values()` skips them.
    The heuristic nature of any radius derived from successive gaps is
    flagged by `radius_is_heuristic`.
    """

    p: list = field(default_factory=list)
    q: list = field(default_factory=list)
    singular: list = field(default_factory=list)
    radius_is_heuristic: bool = True

    def values(self) -> list:
        out = []
        for pk, qk in zip(self.p, self.q):
            if qk != 0:
                out.append(Fraction(pk, qk))
        return out

    def last_two_values(self):
        vals = self.values()
        if not vals:
            raise SingularConvergentError("no non-singular convergent available")
        prev = vals[-2] if len(vals) >= 2 else None
        return vals[-1], prev


def _raw_stream(cf: GCF, max_depth: int) -> Iterator[tuple[int, object, object, int]]:
    """Yield (k, p, q, scale) with convergent = p/(scale*q) when q != 0.

    Rolling state only; big integers while every term is integral (the
    common case), exact Fractions otherwise.  No gcd is taken here, so
    callers pay normalization cost only where they actually read a value.
    """
    scale = cf.leading.denominator
    # gmpy2 integers keep deep runs fast; they interoperate with Fraction
    p_prev, q_prev = mpz(scale), mpz(0)  # scaled p_{-1} = scale * 1
    p_cur, q_cur = mpz(cf.leading.numerator), mpz(1)
    integral = True
    yield 0, p_cur, q_cur, scale
    for k in range(1, max_depth + 1):
        a, b = cf.term(k)
        if integral and a.denominator == 1 and b.denominator == 1:
            a, b = mpz(a.numerator), mpz(b.numerator)
        elif integral:
            # switch the rolling state to exact Fractions from here on
            integral = False
            p_prev, q_prev = Fraction(int(p_prev)), Fraction(int(q_prev))
            p_cur, q_cur = Fraction(int(p_cur)), Fraction(int(q_cur))
        p_cur, p_prev = b * p_cur + a * p_prev, p_cur
        q_cur, q_prev = b * q_cur + a * q_prev, q_cur
        yield k, p_cur, q_cur, scale


def _value_of(p, q, scale) -> Fraction | None:
    if q == 0:
        return None
    if isinstance(p, Fraction) or isinstance(q, Fraction):
        return Fraction(p, scale * q)
    return Fraction(int(p), int(scale * q))


def eval_gcf(
    cf: GCF, depth: int, policy: PrecisionPolicy = DEFAULT_POLICY
) -> tuple[Real, ConvergentSequence]:
    """Exact convergents to `depth` plus a Real estimate of the value.

    The estimate is the last non-singular convergent with radius equal to
    its gap from the previous non-singular one (heuristic, see module
    docstring).  Memory grows with depth; use `convergent_error_samples`
    or `stabilized_value` for deep streaming runs.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    seq = ConvergentSequence()
    p_prev, q_prev = Fraction(1), Fraction(0)
    p_cur, q_cur = cf.leading, Fraction(1)
    seq.p.append(p_cur)
    seq.q.append(q_cur)
    for k in range(1, depth + 1):
        a, b = cf.term(k)
        p_cur, p_prev = b * p_cur + a * p_prev, p_cur
        q_cur, q_prev = b * q_cur + a * q_prev, q_cur
        seq.p.append(p_cur)
        seq.q.append(q_cur)
        if q_cur == 0:
            seq.singular.append(k)
    last, prev = seq.last_two_values()
    bits = policy.working_bits
    value = Real.from_rational(last, bits)
    if prev is not None:
        value = value.widen(abs(last - prev))
    return value, seq


def convergent_error_samples(
    cf: GCF, depths: Sequence[int], reference: Real
) -> dict[int, Fraction]:
    """|convergent(d) - midpoint(reference)| at each sampled depth, exact.

    The reference radius must be negligible against the sampled errors for
    the result to be meaningful (true for the pi enclosures used here).
    At a singular sampled depth the nearest earlier non-singular convergent
    stands in.
    """
    want = sorted(set(depths))
    if not want or want[0] < 0:
        raise ValueError("depths must be nonnegative")
    ref = reference.midpoint_fraction()
    out: dict[int, Fraction] = {}
    last_good: tuple | None = None
    idx = 0
    for k, p, q, scale in _raw_stream(cf, want[-1]):
        if q != 0:
            last_good = (p, q, scale)
        if idx < len(want) and k == want[idx]:
            if last_good is None:
                raise SingularConvergentError("no convergent before first sample")
            out[k] = abs(_value_of(*last_good) - ref)
            idx += 1
    return out


def stabilized_value(
    cf: GCF,
    agree_tol: Fraction,
    max_depth: int,
    runs: int = 3,
) -> dict:
    """Walk convergents until `runs` consecutive non-singular gaps stay
    within `agree_tol`, or the depth cap is reached.

    Returns a report dict: value (last convergent), depth, stabilized flag,
    singular count, and the final gap.  Never raises on singular indices.
    """
    last: tuple | None = None
    gap_run = 0
    singular = 0
    final_gap: Fraction | None = None
    depth_reached = 0
    good: tuple | None = None
    for k, p, q, scale in _raw_stream(cf, max_depth):
        depth_reached = k
        if q == 0:
            singular += 1
            continue
        if last is not None:
            lp, lq = last
            # |p/(sq) - lp/(s lq)| <= tol by cross-multiplication: no gcd
            num = abs(p * lq - lp * q)
            den = abs(scale * q * lq)
            within = num * agree_tol.denominator <= agree_tol.numerator * den
            gap_run = gap_run + 1 if within else 0
            final_gap = (num, den)
        last = (p, q)
        good = (p, q, scale)
        if gap_run >= runs:
            break
    if final_gap is not None:
        num, den = final_gap
        gap = Fraction(num, den) if isinstance(num, Fraction) else Fraction(int(num), int(den))
    else:
        gap = None
    return {
        "value": _value_of(*good) if good else None,
        "depth": depth_reached,
        "stabilized": gap_run >= runs,
        "singular": singular,
        "final_gap": gap,
    }


# -- the concrete continued fractions -----------------------------------------


def cf_pi_eq5() -> GCF:
    """pi = 4/(1 + 1^2/(2 + 3^2/(2 + 5^2/(2 + ...))))."""

    def term(k: int):
        if k == 1:
            return Fraction(4), Fraction(1)
        return Fraction((2 * k - 3) ** 2), Fraction(2)

    return GCF("pi-eq5", Fraction(0), term)


def cf_pi_eq6() -> GCF:
    """pi = 3 + 1^2/(6 + 3^2/(6 + 5^2/(6 + ...)))."""

    def term(k: int):
        return Fraction((2 * k - 1) ** 2), Fraction(6)

    return GCF("pi-eq6", Fraction(3), term)


def cf_quarter_pi_thm21() -> GCF:
    """pi/4 = 2/3 + 1/(5 + 5^2/(2 + 7^2/(2 + 9^2/(2 + ...))))."""

    def term(k: int):
        if k == 1:
            return Fraction(1), Fraction(5)
        return Fraction((2 * k + 1) ** 2), Fraction(2)

    return GCF("quarter-pi-thm21", Fraction(2, 3), term)


def cf_thm26(n: int, leading_reading: str = "plus-one") -> GCF:
    """The tanh-tan continued fraction family, indexed by n >= 1.

    With N = (2n+1)^2 the terms come in pairs for j >= 1:
    a_{2j-1} = ((2j-1)^2 N + 1)^2 with b_{2j-1} = -2, and
    a_{2j} = ((2j-1)^2 N - 1)^2 with b_{2j} = 8jN + 2.

    The printed leading term is N + 1 (`plus-one`); the alternative reading
    `square` uses N.  Both are provided so the verification suite can test
    each against the tanh/tan oracle instead of assuming either.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if leading_reading not in ("plus-one", "square"):
        raise ValueError("leading_reading must be 'plus-one' or 'square'")
    big_n = (2 * n + 1) ** 2
    lead = big_n + 1 if leading_reading == "plus-one" else big_n

    def term(k: int):
        j = (k + 1) // 2
        odd_sq = (2 * j - 1) ** 2
        if k % 2 == 1:
            return Fraction((odd_sq * big_n + 1) ** 2), Fraction(-2)
        return Fraction((odd_sq * big_n - 1) ** 2), Fraction(8 * j * big_n + 2)

    return GCF(f"tanh-tan-n{n}-{leading_reading}", Fraction(lead), term)

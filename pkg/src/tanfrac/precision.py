"""Arbitrary-precision ball arithmetic with rigorous error tracking.

A `Real` is a midpoint-radius enclosure: the exact quantity it stands for is
guaranteed to lie in [midpoint - radius, midpoint + radius].  Midpoints are
MPFR floats at the working precision; radii are kept at a fixed small
precision and always rounded upward, so every operation returns an interval
that contains the exact image of its input intervals.

The module also provides the exact rational carrier (`fractions.Fraction`,
re-exported as `Rational`), an independently computed enclosure of pi, and
enclosures of the seven elementary functions used by the verification
suites (tan, tanh, cos, cosh, log, sqrt, exp).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq

Rational = Fraction

ScalarLike = Union[int, Fraction, "Real"]

__all__ = [
    "DomainError",
    "PoleStraddleError",
    "PrecisionPolicy",
    "Rational",
    "Real",
    "const_pi",
    "eval_elementary",
    "real_from_rational",
]


class DomainError(ValueError):
    """Argument interval leaves the domain of the requested function."""


class PoleStraddleError(DomainError):
    """Argument interval may contain a pole of tan (or of a series term)."""


# Radii carry few significant bits; 64 is ample because they are only ever
# accumulated upward, never relied on for cancellation.
_RAD_BITS = 64
_GUARD = 32

_EMIN = gmpy2.get_emin_min()
_EMAX = gmpy2.get_emax_max()

_CTX_CACHE: dict = {}
_EPS_CACHE: dict = {}
_PI_CACHE: dict = {}


def _ctx(bits, rnd):
    key = (bits, rnd)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = gmpy2.context(
            precision=bits,
            round=rnd,
            emin=_EMIN,
            emax=_EMAX,
            trap_underflow=False,
            trap_overflow=False,
            trap_inexact=False,
            trap_invalid=False,
            trap_erange=False,
            trap_divzero=False,
        )
        _CTX_CACHE[key] = ctx
    return ctx


def _nr(bits):
    return _ctx(bits, gmpy2.RoundToNearest)


def _dn(bits):
    return _ctx(bits, gmpy2.RoundDown)


def _up(bits):
    return _ctx(bits, gmpy2.RoundUp)


_RUP = _ctx(_RAD_BITS, gmpy2.RoundUp)
_RDN = _ctx(_RAD_BITS, gmpy2.RoundDown)
_ZERO = mpfr(0)


def _eps(bits):
    # 2**-bits, an exact power of two; bounds the relative error of one
    # nearest-rounded operation at `bits` bits of precision.
    e = _EPS_CACHE.get(bits)
    if e is None:
        e = gmpy2.exp2(_nr(_RAD_BITS).minus(bits))
        _EPS_CACHE[bits] = e
    return e


@dataclass(frozen=True)
class PrecisionPolicy:
    """Working precision in bits plus the tolerance targeted by callers."""

    working_bits: int = 256
    target_tolerance: Fraction = Fraction(1, 10**30)

    def __post_init__(self):
        if self.working_bits < 64:
            raise ValueError("working_bits must be at least 64")
        if self.target_tolerance <= 0:
            raise ValueError("target_tolerance must be positive")

    def with_bits(self, bits: int) -> "PrecisionPolicy":
        return PrecisionPolicy(bits, self.target_tolerance)


DEFAULT_POLICY = PrecisionPolicy()


class Real:
    """Midpoint-radius enclosure of a real number.

    Instances are immutable.  All arithmetic is outward-rounded: the result
    interval contains every value f(x, y) with x, y ranging over the operand
    intervals.  Mixed arithmetic with int and Fraction converts the scalar
    exactly (rounded outward when it is not representable).
    """

    __slots__ = ("midpoint", "radius", "precision")

    def __init__(self, midpoint, radius, precision: int):
        object.__setattr__(self, "midpoint", midpoint)
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("Real is immutable")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_rational(value, bits: int) -> "Real":
        """Enclosure of an exact int/Fraction, outward-rounded at `bits`."""
        if isinstance(value, int):
            num, den = value, 1
        else:
            num, den = value.numerator, value.denominator
        lo = _dn(bits).div(num, den)
        hi = _up(bits).div(num, den)
        return Real._from_endpoints(lo, hi, bits)

    @staticmethod
    def exact_zero(bits: int) -> "Real":
        return Real(mpfr(0), _ZERO, bits)

    @staticmethod
    def _from_endpoints(lo, hi, bits: int) -> "Real":
        if lo > hi:  # pragma: no cover - internal misuse guard
            raise ValueError("endpoints out of order")
        mid = _nr(bits).mul(_nr(bits).add(lo, hi), mpfr("0.5"))
        rad = max(_RUP.sub(mid, lo), _RUP.sub(hi, mid), _ZERO)
        return Real(mid, rad, bits)

    # -- endpoint access ---------------------------------------------------

    def lower(self):
        """Certified lower endpoint (mpfr, rounded toward -inf)."""
        return _dn(self.precision + _GUARD).sub(self.midpoint, self.radius)

    def upper(self):
        """Certified upper endpoint (mpfr, rounded toward +inf)."""
        return _up(self.precision + _GUARD).add(self.midpoint, self.radius)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Real):
            return other
        if isinstance(other, (int, Fraction)):
            return Real.from_rational(other, self.precision)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.precision, o.precision)
        m = _nr(p).add(self.midpoint, o.midpoint)
        r = _RUP.add(_RUP.add(self.radius, o.radius), _RUP.mul(_eps(p), abs(m)))
        return Real(m, r, p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.precision, o.precision)
        m = _nr(p).sub(self.midpoint, o.midpoint)
        r = _RUP.add(_RUP.add(self.radius, o.radius), _RUP.mul(_eps(p), abs(m)))
        return Real(m, r, p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.precision, o.precision)
        m = _nr(p).mul(self.midpoint, o.midpoint)
        # |xy - m| <= |x||y - bm| + |bm||x - am| + rounding of m itself,
        # bounded via |am| rb + |bm| ra + ra rb + 2^-p |m|.
        t1 = _RUP.mul(abs(self.midpoint), o.radius)
        t2 = _RUP.mul(abs(o.midpoint), self.radius)
        t3 = _RUP.mul(self.radius, o.radius)
        t4 = _RUP.mul(_eps(p), abs(m))
        r = _RUP.add(_RUP.add(t1, t2), _RUP.add(t3, t4))
        return Real(m, r, p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.precision, o.precision)
        bm = abs(o.midpoint)
        if not bm > o.radius:
            raise DomainError("division by an interval containing zero")
        m = _nr(p).div(self.midpoint, o.midpoint)
        num = _RUP.add(
            _RUP.mul(self.radius, bm), _RUP.mul(abs(self.midpoint), o.radius)
        )
        den = _RDN.mul(bm, _RDN.sub(bm, o.radius))
        if not den > 0:
            raise DomainError("divisor interval too wide to separate from zero")
        r = _RUP.add(_RUP.div(num, den), _RUP.mul(_eps(p), abs(m)))
        return Real(m, r, p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Real(-self.midpoint, self.radius, self.precision)

    def __abs__(self):
        lo, hi = self.lower(), self.upper()
        p = self.precision
        if lo >= 0:
            return self
        if hi <= 0:
            return -self
        return Real._from_endpoints(_ZERO, max(-lo, hi), p)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return self.pow_int(n)

    def pow_int(self, n: int) -> "Real":
        """Enclosure of x**n for integer n (negative n inverts)."""
        if n == 0:
            return Real.from_rational(1, self.precision)
        if n == 1:
            return self
        if n < 0:
            return Real.from_rational(1, self.precision) / self.pow_int(-n)
        p = self.precision
        pe = p + _GUARD
        lo, hi = self.lower(), self.upper()
        if n % 2 == 1 or lo >= 0:
            return Real._from_endpoints(_dn(pe).pow(lo, n), _up(pe).pow(hi, n), p)
        if hi <= 0:
            return Real._from_endpoints(_dn(pe).pow(hi, n), _up(pe).pow(lo, n), p)
        return Real._from_endpoints(_ZERO, _up(pe).pow(max(-lo, hi), n), p)

    # -- interval queries ---------------------------------------------------

    def contains_zero(self) -> bool:
        return not abs(self.midpoint) > self.radius

    def excludes_zero(self) -> bool:
        return abs(self.midpoint) > self.radius

    def is_positive(self) -> bool:
        return self.midpoint > self.radius

    def is_negative(self) -> bool:
        return -self.midpoint > self.radius

    def contains_rational(self, value) -> bool:
        q = mpq(value.numerator, value.denominator) if isinstance(value, Fraction) else mpq(value)
        d = abs(mpq(self.midpoint) - q)
        return d <= mpq(self.radius)

    def overlaps(self, other: "Real") -> bool:
        d = abs(mpq(self.midpoint) - mpq(other.midpoint))
        return d <= mpq(self.radius) + mpq(other.radius)

    def contains_interval(self, other: "Real") -> bool:
        """True when `other` lies entirely inside this interval (exact test)."""
        sm, sr = mpq(self.midpoint), mpq(self.radius)
        om, orad = mpq(other.midpoint), mpq(other.radius)
        return sm - sr <= om - orad and om + orad <= sm + sr

    def gap_to(self, other: "Real") -> Fraction:
        """Distance between the two intervals (0 when they overlap), exact."""
        d = abs(mpq(self.midpoint) - mpq(other.midpoint))
        g = d - mpq(self.radius) - mpq(other.radius)
        return Fraction(g.numerator, g.denominator) if g > 0 else Fraction(0)

    def radius_fraction(self) -> Fraction:
        r = mpq(self.radius)
        return Fraction(r.numerator, r.denominator)

    def midpoint_fraction(self) -> Fraction:
        m = mpq(self.midpoint)
        return Fraction(m.numerator, m.denominator)

    def widen(self, extra) -> "Real":
        """Add a nonnegative bound to the radius (tail bounds etc.)."""
        if isinstance(extra, Real):
            e = extra.upper()
        elif isinstance(extra, (int, Fraction)):
            e = _RUP.div(extra.numerator, getattr(extra, "denominator", 1))
        else:
            e = extra
        if e < 0:
            raise ValueError("widen expects a nonnegative bound")
        return Real(self.midpoint, _RUP.add(self.radius, e), self.precision)

    # -- formatting ----------------------------------------------------------

    def decimal(self, digits: int = 40) -> str:
        return _decimal_string(self.midpoint, digits)

    def radius_decimal(self) -> str:
        return _radius_string(self.radius)

    def __float__(self):
        return float(self.midpoint)

    def __repr__(self):
        return f"Real({self.decimal(20)} +/- {self.radius_decimal()}, bits={self.precision})"


def real_from_rational(value, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Outward-rounded enclosure of an exact int or Fraction."""
    return Real.from_rational(value, policy.working_bits)


def _decimal_string(x, digits: int) -> str:
    if x == 0:
        return "0"
    ds, exp, _ = gmpy2.digits(x, 10, digits)
    sign = ""
    if ds.startswith("-"):
        sign, ds = "-", ds[1:]
    return f"{sign}{ds[0]}.{ds[1:]}e{exp - 1:+d}"


def _radius_string(r) -> str:
    if r == 0:
        return "0"
    ds, exp, _ = gmpy2.digits(r, 10, 3)
    # never understate a radius: bump the 3-digit mantissa by one
    mant = int(ds) + 1
    if mant >= 1000:
        mant //= 10
        exp += 1
    return f"{mant / 100:.2f}e{exp - 1:+d}"


# -- pi ----------------------------------------------------------------------


def _machin_pi(bits: int) -> Real:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239), summed in fixed point with
    # scale 2**s.  Each floored term errs by < 1 downward and the alternating
    # truncation errs by < 1, giving the integer error budget below.
    s = bits + 64

    def scaled_atan_inv(q: int):
        total = 0
        k = 0
        power = q
        qq = q * q
        one = 1 << s
        while True:
            t = one // ((2 * k + 1) * power)
            if t == 0:
                break
            total += -t if (k & 1) else t
            power *= qq
            k += 1
        return total, k + 1

    a5, e5 = scaled_atan_inv(5)
    a239, e239 = scaled_atan_inv(239)
    value = 16 * a5 - 4 * a239
    err = 16 * e5 + 4 * e239
    lo = _dn(bits).div(value - err, 1 << s)
    hi = _up(bits).div(value + err, 1 << s)
    return Real._from_endpoints(lo, hi, bits)


def const_pi(policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of pi at the policy's working precision.

    Computed by Machin's arctangent formula in exact integer arithmetic,
    deliberately independent of the continued fractions and series that the
    rest of the package verifies against it.
    """
    return _pi_bits(policy.working_bits)


def _pi_bits(bits: int) -> Real:
    v = _PI_CACHE.get(bits)
    if v is None:
        v = _machin_pi(bits)
        _PI_CACHE[bits] = v
    return v


# -- elementary functions -----------------------------------------------------

_MONOTONE = {
    "exp": (None, None),
    "tanh": (None, None),
    "sqrt": (0, None),
    "log": (0, None),
}

ELEMENTARY_FUNCTIONS = ("tan", "tanh", "cos", "cosh", "log", "sqrt", "exp")


def eval_elementary(name: str, x: Real, policy: PrecisionPolicy = DEFAULT_POLICY) -> Real:
    """Enclosure of f(x) for f in {tan, tanh, cos, cosh, log, sqrt, exp}.

    Raises DomainError when the argument interval leaves f's domain and
    PoleStraddleError when a tan argument may contain a pole.
    """
    if name not in ELEMENTARY_FUNCTIONS:
        raise ValueError(f"unsupported elementary function: {name!r}")
    p = policy.working_bits
    pe = p + _GUARD
    lo, hi = x.lower(), x.upper()

    if name in ("exp", "tanh"):
        fn_lo = getattr(_dn(pe), name)
        fn_hi = getattr(_up(pe), name)
        return Real._from_endpoints(fn_lo(lo), fn_hi(hi), p)

    if name == "sqrt":
        if lo < 0:
            raise DomainError("sqrt requires a nonnegative interval")
        return Real._from_endpoints(_dn(pe).sqrt(lo), _up(pe).sqrt(hi), p)

    if name == "log":
        if not lo > 0:
            raise DomainError("log requires a strictly positive interval")
        return Real._from_endpoints(_dn(pe).log(lo), _up(pe).log(hi), p)

    if name == "cosh":
        if lo >= 0:
            return Real._from_endpoints(_dn(pe).cosh(lo), _up(pe).cosh(hi), p)
        if hi <= 0:
            return Real._from_endpoints(_dn(pe).cosh(hi), _up(pe).cosh(lo), p)
        return Real._from_endpoints(mpfr(1), _up(pe).cosh(max(-lo, hi)), p)

    if name == "cos":
        # cos is 1-Lipschitz: evaluate at the midpoint, widen by the radius.
        cl = _dn(pe).cos(x.midpoint)
        ch = _up(pe).cos(x.midpoint)
        out_lo = max(_dn(pe).sub(cl, x.radius), mpfr(-1))
        out_hi = min(_up(pe).add(ch, x.radius), mpfr(1))
        return Real._from_endpoints(out_lo, out_hi, p)

    # tan: certify the interval avoids every pole (k + 1/2) pi, then use
    # monotonicity on the enclosing branch.
    _check_tan_poles(lo, hi, pe)
    return Real._from_endpoints(_dn(pe).tan(lo), _up(pe).tan(hi), p)


def _check_tan_poles(lo, hi, pe: int):
    pi = _pi_bits(pe)
    pi_lo, pi_hi = pi.lower(), pi.upper()
    # lower bound of lo/pi
    a = _dn(pe).div(lo, pi_hi if lo >= 0 else pi_lo)
    # upper bound of hi/pi
    b = _up(pe).div(hi, pi_lo if hi >= 0 else pi_hi)
    ka = gmpy2.ceil(_dn(pe).sub(a, mpfr("0.5")))
    kb = gmpy2.floor(_up(pe).sub(b, mpfr("0.5")))
    if ka <= kb:
        raise PoleStraddleError("argument interval may straddle a pole of tan")

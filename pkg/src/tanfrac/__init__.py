"""Rigorous evaluation of tangent partial-fraction identities and friends.

The package cross-verifies a family of classical-style explicit formulas:
Bernoulli and Euler number engines, even zeta values, Hurwitz zeta at
integer arguments, partial-fraction series for tan and tanh with proven
tail bounds, infinite products for cos and cosh, Taylor-jet derivative
machinery, and generalized continued fractions for pi.  Everything is
computed in ball arithmetic so that every reported identity carries a
provable error bound.
"""

from .precision import (
    DEFAULT_POLICY,
    DomainError,
    PoleStraddleError,
    PrecisionPolicy,
    Rational,
    Real,
    const_pi,
    eval_elementary,
    real_from_rational,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_POLICY",
    "DomainError",
    "PoleStraddleError",
    "PrecisionPolicy",
    "Rational",
    "Real",
    "const_pi",
    "eval_elementary",
    "real_from_rational",
    "__version__",
]

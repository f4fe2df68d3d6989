"""Floor modulo and the sign-aware modular inverse.

The inverse here differs from the textbook one in two ways: for a negative
modulus the representative is taken in ``[m + 1, -1]``, and for ``|m| == 1``
it is ``|m|(sgn(m) - sgn(a))/2 + sgn(a)`` instead of 0.  That choice is what
makes the reciprocity identity

    a * inv(a, b) + b * inv(b, a) == 1 + a * b

hold for every co-prime pair of nonzero integers, signs included.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional


class ZeroModulusError(ZeroDivisionError, ValueError):
    """Raised when a modulus (or the product ``a * m``) is zero."""


class NotCoprimeError(ValueError):
    """Raised when an inverse is requested for a non-co-prime pair."""

    def __init__(self, a: int, m: int, gcd: int):
        super().__init__(f"{a} and {m} are not coprime, gcd={gcd}")
        self.a = a
        self.m = m
        self.gcd = gcd


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def floor_mod(a: int, m: int) -> int:
    """Return ``a - m * floor(a / m)``.

    The result carries the sign of the modulus: it lies in ``[0, m)`` for
    ``m > 0`` and in ``(m, 0]`` for ``m < 0``.  Python's ``%`` already has
    these semantics; the wrapper only adds the zero check.
    """
    if m == 0:
        raise ZeroModulusError("modulus must be nonzero")
    return a % m


class ModInverseStatus(enum.Enum):
    DEFINED = "defined"
    UNDEFINED_ZERO_MODULUS = "undefined-zero-modulus"
    UNDEFINED_NOT_COPRIME = "undefined-not-coprime"


@dataclass(frozen=True)
class ModInverseOutcome:
    status: ModInverseStatus
    value: Optional[int] = None
    gcd: Optional[int] = None

    @property
    def defined(self) -> bool:
        return self.status is ModInverseStatus.DEFINED

    def unwrap(self, a: int = 0, m: int = 0) -> int:
        if self.status is ModInverseStatus.DEFINED:
            return self.value
        if self.status is ModInverseStatus.UNDEFINED_ZERO_MODULUS:
            raise ZeroModulusError("inverse undefined when a*m == 0")
        raise NotCoprimeError(a, m, self.gcd)


def mod_inverse(a: int, m: int) -> ModInverseOutcome:
    """Sign-aware inverse of ``a`` modulo ``m``.

    ``a`` may lie outside the canonical range; it is reduced first.  Failures
    come back as a non-``DEFINED`` outcome rather than an exception.
    """
    if a == 0 or m == 0:
        return ModInverseOutcome(ModInverseStatus.UNDEFINED_ZERO_MODULUS)
    g = math.gcd(a, m)
    if g != 1:
        return ModInverseOutcome(ModInverseStatus.UNDEFINED_NOT_COPRIME, gcd=g)
    if abs(m) == 1:
        # integer-valued: |m| == 1 and sgn(m) - sgn(a) is even
        value = (sgn(m) - sgn(a)) // 2 + sgn(a)
        return ModInverseOutcome(ModInverseStatus.DEFINED, value=value)
    x = pow(a % abs(m), -1, abs(m))
    if m < 0:
        x -= abs(m)
    return ModInverseOutcome(ModInverseStatus.DEFINED, value=x)


def inv(a: int, m: int) -> int:
    """Like :func:`mod_inverse` but returns the value or raises."""
    return mod_inverse(a, m).unwrap(a, m)


def _require_coprime(a: int, b: int) -> None:
    if a == 0 or b == 0:
        raise ZeroModulusError("operands must be nonzero")
    g = math.gcd(a, b)
    if g != 1:
        raise NotCoprimeError(a, b, g)


def reciprocity_residual(a: int, b: int) -> int:
    """``a*inv(a,b) + b*inv(b,a) - (1 + a*b)``; zero for every valid pair."""
    _require_coprime(a, b)
    return a * inv(a, b) + b * inv(b, a) - (1 + a * b)


def shifted_inverse(k: int, a: int, b: int) -> int:
    """``inv(k*a + b, a)`` obtained from ``inv(b, a)`` without a new inversion.

    For ``|a| > 1`` the shift is invisible.  For ``|a| == 1`` the value moves
    by ``(sgn(k*a + b) - sgn(b)) / 2`` because the ``|m| == 1`` inverse
    depends on the sign of its argument.
    """
    _require_coprime(a, b)
    c = k * a + b
    if c == 0:
        raise ZeroModulusError("k*a + b must be nonzero")
    base = inv(b, a)
    if abs(a) > 1:
        return base
    return base + (sgn(c) - sgn(b)) // 2


def inverse_mod_shifted(k: int, a: int, b: int, sign: int = 1) -> int:
    """``inv(a, k*a + b)`` (``sign=+1``) or ``inv(a, k*a - b)`` (``sign=-1``).

    Both come from the small inverses ``inv(a, b)`` and ``inv(b, a)``:

        inv(a, k*a + b) = k*(a - inv(b, a)) + inv(a, b)
        inv(a, k*a - b) = k*inv(b, a) - (b - inv(a, b))

    Requires ``|a| > 1``.  When ``|b| == 1`` the ``|m| == 1`` inverse rule is
    essential; with the textbook ``inv(x, +-1) == 0`` these identities fail.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if abs(a) <= 1:
        raise ValueError("|a| must exceed 1")
    _require_coprime(a, b)
    if k * a + sign * b == 0:
        raise ZeroModulusError("k*a +/- b must be nonzero")
    if sign == 1:
        return k * (a - inv(b, a)) + inv(a, b)
    return k * inv(b, a) - (b - inv(a, b))

"""Arithmetic of the ring of integers O = Z + Z*omega of Q(sqrt(-d)).

The basis element omega depends on d mod 4:

    omega = sqrt(-d)          if d = 1, 2 (mod 4)
    omega = (1+sqrt(-d))/2    if d = 3 (mod 4)

Elements are stored as coordinate pairs (a, b) meaning a + b*omega.  The
norm is then an integer quadratic form in (a, b):

    a^2 + d*b^2                     on the sqrt(-d) branch
    a^2 + a*b + ((1+d)/4)*b^2       on the half-integer branch

Only fields with class number 1, 2 or 3 are supported; the membership
lists are compiled-in constants.  Norms are computed exactly in Python
integers but the library promises results fit in signed 64 bits, so any
larger value raises Overflow instead of being returned.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

INT64_MAX = 2**63 - 1


class NotSquarefree(ValueError):
    """d is divisible by a square larger than 1."""


class UnsupportedField(ValueError):
    """d is squarefree but Q(sqrt(-d)) has class number outside {1, 2, 3}."""


class Overflow(OverflowError):
    """A computed value left the signed 64-bit contract."""


class OmegaBranch(enum.Enum):
    SQRT_MINUS_D = "SqrtMinusD"
    HALF_ONE_PLUS_SQRT_MINUS_D = "HalfOnePlusSqrtMinusD"


# Squarefree d with h(Q(sqrt(-d))) = 1, 2, 3.  These lists are data, not
# something we compute: class numbers for other d are out of scope.
CLASS_NUMBER_1_FIELDS = (1, 2, 3, 7, 11, 19, 43, 67, 163)
CLASS_NUMBER_2_FIELDS = (5, 6, 10, 13, 15, 22, 35, 37, 51, 58, 91, 115, 123, 187, 235, 267, 403, 427)
CLASS_NUMBER_3_FIELDS = (23, 31, 59, 83, 107, 139, 211, 283, 307, 331, 379, 499, 547, 643, 883, 907)

SUPPORTED_FIELDS = tuple(sorted(CLASS_NUMBER_1_FIELDS + CLASS_NUMBER_2_FIELDS + CLASS_NUMBER_3_FIELDS))


@dataclass(frozen=True)
class FieldParams:
    d: int
    omega_branch: OmegaBranch
    class_number: int

    @property
    def is_half_branch(self) -> bool:
        return self.omega_branch is OmegaBranch.HALF_ONE_PLUS_SQRT_MINUS_D

    def form_coefficients(self) -> tuple[int, int, int]:
        """Coefficients (p, q, r) with norm(a, b) = p*a^2 + q*a*b + r*b^2."""
        if self.is_half_branch:
            return (1, 1, (1 + self.d) // 4)
        return (1, 0, self.d)


@dataclass(frozen=True)
class RingElement:
    a: int
    b: int

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def _is_squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 2
    return True


def make_field(d: int) -> FieldParams:
    """Build FieldParams for Q(sqrt(-d)), validating d.

    Raises NotSquarefree for square-divisible d and UnsupportedField for
    squarefree d outside the class-number-1/2/3 lists.
    """
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"d must be an integer, got {type(d).__name__}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if d in CLASS_NUMBER_1_FIELDS:
        h = 1
    elif d in CLASS_NUMBER_2_FIELDS:
        h = 2
    elif d in CLASS_NUMBER_3_FIELDS:
        h = 3
    else:
        if not _is_squarefree(d):
            raise NotSquarefree(f"d={d} is divisible by a square > 1")
        raise UnsupportedField(f"Q(sqrt(-{d})) has class number outside {{1, 2, 3}}")
    branch = OmegaBranch.HALF_ONE_PLUS_SQRT_MINUS_D if d % 4 == 3 else OmegaBranch.SQRT_MINUS_D
    return FieldParams(d=d, omega_branch=branch, class_number=h)


def norm(f: FieldParams, e: RingElement) -> int:
    """N(a + b*omega) as a nonnegative integer; Overflow past 2^63 - 1."""
    a, b = e.a, e.b
    if f.is_half_branch:
        n = a * a + a * b + ((1 + f.d) // 4) * b * b
    else:
        n = a * a + f.d * b * b
    if n > INT64_MAX:
        raise Overflow(f"norm {n} exceeds the 64-bit contract")
    return n


def scaled_form_value(f: FieldParams, k: int, e: RingElement) -> Fraction:
    """N(a + b*omega) / k^2 as an exact rational (the scaled form P_d)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Fraction(norm(f, e), k * k)


def conjugate(f: FieldParams, e: RingElement) -> RingElement:
    """Coordinates of the complex conjugate in the basis {1, omega}.

    On the half-integer branch conj(a + b*omega) = (a+b) - b*omega, so
    (a, b) -> (a+b, -b); on the sqrt(-d) branch (a, b) -> (a, -b).  An
    involution in both cases, and it preserves the norm.
    """
    if f.is_half_branch:
        return RingElement(e.a + e.b, -e.b)
    return RingElement(e.a, -e.b)


def isqrt_floor(n: int) -> int:
    """floor(sqrt(n)) for n >= 0, 0 for negative n (loop-bound helper)."""
    if n < 0:
        return 0
    return math.isqrt(n)

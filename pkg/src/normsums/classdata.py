"""Ideal class representatives and their congruence predicates.

Every supported field with class number 2 or 3 carries one ideal class
representative per non-principal class, written U = (k, s + t*omega)
with U*conj(U) = k*O and h(v) = 1/k.  The (k, s, t) values are stored
as data constants: computing them would drag in ideal arithmetic that
the rest of the library never needs, and the representative tables are
the ground truth everything else is checked against.

A summand gamma = a + b*omega is admissible for a class exactly when
two divisibility conditions on (a, b) hold; those conditions, with
their coefficients spelled out per omega branch, are what
congruence_for produces.  The full two-constraint form is kept even
when one constraint implies the other; a single-constraint shortcut is
only used after an explicit equivalence check over a full residue
period (see simplify_condition).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .quadfield import (
    CLASS_NUMBER_2_FIELDS,
    CLASS_NUMBER_3_FIELDS,
    SUPPORTED_FIELDS,
    FieldParams,
    RingElement,
    make_field,
    norm,
)

# Non-principal representative (k, s) with t = 1 for each class-number-2 field.
_CLASS2_REPS: dict[int, tuple[int, int]] = {
    5: (2, 1),
    6: (2, 0),
    10: (2, 0),
    13: (2, 1),
    15: (2, 1),
    22: (2, 0),
    35: (5, 2),
    37: (2, 1),
    51: (5, 1),
    58: (2, 0),
    91: (7, 3),
    115: (5, -3),
    123: (3, 1),
    187: (7, -2),
    235: (5, 2),
    267: (3, 1),
    403: (11, 6),
    427: (7, 3),
}

# (k, s2, s3) with t = 1 for both non-principal classes of each
# class-number-3 field.  The pair always satisfies s2 + s3 = -1.
_CLASS3_REPS: dict[int, tuple[int, int, int]] = {
    23: (2, 0, -1),
    31: (2, 0, -1),
    59: (3, 0, -1),
    83: (3, 0, -1),
    107: (3, 0, -1),
    139: (5, 0, -1),
    211: (5, 1, -2),
    283: (7, 2, -3),
    307: (7, 0, -1),
    331: (5, 1, -2),
    379: (5, 0, -1),
    499: (5, 0, -1),
    547: (11, 2, -3),
    643: (7, 0, -1),
    883: (13, 0, -1),
    907: (13, 4, -5),
}


@dataclass(frozen=True)
class IdealClassRep:
    class_index: int
    k: int
    s: int
    t: int

    @property
    def h_scale(self) -> Fraction:
        return Fraction(1, self.k)

    @property
    def is_principal(self) -> bool:
        return self.class_index == 1


class ConditionKind(enum.Enum):
    BRANCH12 = "Branch12"
    BRANCH3 = "Branch3"


@dataclass(frozen=True)
class CongruenceCondition:
    """Pair of constraints k | (c1a*a + c1b*b) and k | (c2a*a + c2b*b)."""

    k: int
    kind: ConditionKind
    c1a: int
    c1b: int
    c2a: int
    c2b: int


def class_reps(f: FieldParams) -> list[IdealClassRep]:
    """All ideal class representatives of f, class_index ascending.

    class_index 1 is the principal class, by convention (k, s, t) = (1, 0, 0).
    """
    reps = [IdealClassRep(class_index=1, k=1, s=0, t=0)]
    if f.class_number == 2:
        k, s = _CLASS2_REPS[f.d]
        reps.append(IdealClassRep(class_index=2, k=k, s=s, t=1))
    elif f.class_number == 3:
        k, s2, s3 = _CLASS3_REPS[f.d]
        reps.append(IdealClassRep(class_index=2, k=k, s=s2, t=1))
        reps.append(IdealClassRep(class_index=3, k=k, s=s3, t=1))
    return reps


def rep_for(f: FieldParams, class_index: int) -> IdealClassRep:
    reps = class_reps(f)
    if not 1 <= class_index <= len(reps):
        raise ValueError(f"class_index {class_index} out of range for d={f.d} (class number {f.class_number})")
    return reps[class_index - 1]


def congruence_for(f: FieldParams, rep: IdealClassRep) -> CongruenceCondition:
    """Divisibility conditions an admissible summand gamma = a + b*omega
    must satisfy for this class.

    Branch sqrt(-d):        k | (s*a - d*t*b)            and k | (t*a + s*b)
    Branch (1+sqrt(-d))/2:  k | (s*a - ((1+d)/4)*t*b)    and k | (t*a + (s+t)*b)

    For the principal class k = 1 and both constraints hold vacuously.
    """
    s, t, k = rep.s, rep.t, rep.k
    if f.is_half_branch:
        c = (1 + f.d) // 4
        return CongruenceCondition(k=k, kind=ConditionKind.BRANCH3, c1a=s, c1b=-c * t, c2a=t, c2b=s + t)
    return CongruenceCondition(k=k, kind=ConditionKind.BRANCH12, c1a=s, c1b=-f.d * t, c2a=t, c2b=s)


def predicate_holds(c: CongruenceCondition, a: int, b: int) -> bool:
    return (c.c1a * a + c.c1b * b) % c.k == 0 and (c.c2a * a + c.c2b * b) % c.k == 0


def simplify_condition(c: CongruenceCondition) -> tuple[int, int] | None:
    """Reduce the two constraints to one of the form k | (alpha*a + beta*b).

    Works by normalizing the second constraint modulo k (scaling by the
    inverse of its a-coefficient when invertible) and then checking, over
    the full residue period [0, k)^2, that the single constraint is
    equivalent to the original pair.  Returns (alpha, beta) with
    0 <= alpha, beta < k, or None when no equivalent single constraint of
    that shape exists.  Safe to use in enumeration hot loops.
    """
    k = c.k
    if k == 1:
        return (0, 0)
    for ca, cb in ((c.c2a, c.c2b), (c.c1a, c.c1b)):
        ca %= k
        cb %= k
        try:
            inv = pow(ca, -1, k)
        except ValueError:
            continue
        alpha, beta = 1, (cb * inv) % k
        ok = all(
            (((alpha * a + beta * b) % k == 0) == predicate_holds(c, a, b))
            for a in range(k)
            for b in range(k)
        )
        if ok:
            return (alpha, beta)
    return None


def condition_display(c: CongruenceCondition) -> str:
    """Human-readable form, e.g. '5|(a+3b)', preferring the one-constraint
    reduction when it is equivalent; otherwise both constraints joined."""
    k = c.k
    if k == 1:
        return "always"
    simple = simplify_condition(c)
    if simple is not None:
        return _format_constraint(k, *simple)
    return f"{_format_constraint(k, c.c1a % k, c.c1b % k)} and {_format_constraint(k, c.c2a % k, c.c2b % k)}"


def _format_constraint(k: int, alpha: int, beta: int) -> str:
    alpha %= k
    beta %= k
    terms = []
    if alpha:
        terms.append("a" if alpha == 1 else f"{alpha}a")
    if beta:
        terms.append("b" if beta == 1 else f"{beta}b")
    if not terms:
        return "always"
    body = "+".join(terms)
    if len(terms) > 1:
        return f"{k}|({body})"
    return f"{k}|{body}"


def odd_sqrt_of_minus_d(f: FieldParams) -> int:
    """Smallest positive odd n with n^2 = -d (mod k), for class-number-3 fields.

    Pinned down by the representative table: n = 2*s + 1 for the
    class_index-2 representative.  validate_tables checks minimality.
    """
    if f.class_number != 3:
        raise ValueError(f"d={f.d} has class number {f.class_number}, need 3")
    _, s2, _ = _CLASS3_REPS[f.d]
    return 2 * s2 + 1


def validate_tables() -> list[str]:
    """Consistency sweep over every encoded representative row.

    Checks, for each non-principal representative: k divides N(s + t*omega)
    (necessary for U*conj(U) = k*O).  For class-number-3 fields also checks
    the paired-row pattern s2 + s3 = -1, t2 = t3 = 1, and that n = 2*s2 + 1
    is the smallest positive odd solution of n^2 = -d (mod k).  Returns a
    list of violation strings, expected empty.
    """
    violations: list[str] = []
    for d in SUPPORTED_FIELDS:
        f = make_field(d)
        reps = class_reps(f)
        if len(reps) != f.class_number:
            violations.append(f"d={d}: {len(reps)} reps for class number {f.class_number}")
        for rep in reps[1:]:
            n = norm(f, RingElement(rep.s, rep.t))
            if n % rep.k != 0:
                violations.append(f"d={d} class {rep.class_index}: k={rep.k} does not divide N(s+t*omega)={n}")
        if f.class_number == 3:
            r2, r3 = reps[1], reps[2]
            if r2.t != 1 or r3.t != 1:
                violations.append(f"d={d}: class-3 representatives must have t=1")
            if r2.s + r3.s != -1:
                violations.append(f"d={d}: s2+s3 = {r2.s + r3.s}, expected -1")
            if r2.k != r3.k:
                violations.append(f"d={d}: paired classes have different k")
            n = 2 * r2.s + 1
            if n <= 0 or n % 2 == 0 or (n * n + d) % r2.k != 0:
                violations.append(f"d={d}: n={n} is not an odd square root of -d mod {r2.k}")
            else:
                smaller = [m for m in range(1, n, 2) if (m * m + d) % r2.k == 0]
                if smaller:
                    violations.append(f"d={d}: n={n} not minimal, {smaller[0]} also works")
    return violations


def reps_as_rows() -> list[dict]:
    """Every representative as a flat row dict (column order d, class_index,
    k, s, t), for JSON and CSV export."""
    rows = []
    for d in SUPPORTED_FIELDS:
        f = make_field(d)
        for rep in class_reps(f):
            rows.append({"d": d, "class_index": rep.class_index, "k": rep.k, "s": rep.s, "t": rep.t})
    return rows


def class_number_fields(class_number: int) -> tuple[int, ...]:
    if class_number == 2:
        return CLASS_NUMBER_2_FIELDS
    if class_number == 3:
        return CLASS_NUMBER_3_FIELDS
    raise ValueError(f"class_number must be 2 or 3, got {class_number}")

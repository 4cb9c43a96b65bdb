"""Independent reference implementations used only by the test suite.

Deliberately separate from the library's search code: the admissible
coordinate pairs come from a plain box scan with its own loop bounds, the
congruences are evaluated in raw two-constraint form straight off the
representative constants, and the minimum count comes from a top-down
exact-m depth-first search instead of the library's bottom-up layered
reachability.  Agreement between the two routes is what the equivalence
tests assert; sharing the algorithms would make that assertion circular.
"""

from __future__ import annotations

import math

from normsums.classdata import class_reps
from normsums.quadfield import make_field


def oracle_values(d: int, class_index: int, bound: int) -> list[int]:
    """Admissible norm values up to bound, by box scan."""
    f = make_field(d)
    rep = class_reps(f)[class_index - 1]
    k, s, t = rep.k, rep.s, rep.t
    vals: set[int] = set()
    if d % 4 == 3:
        c = (1 + d) // 4
        # N(a,b) = (a + b/2)^2 + d*b^2/4, so |b| <= 2*sqrt(bound/d)
        bb = math.isqrt(4 * bound // d) + 1
        amax = math.isqrt(bound) + bb // 2 + 2
        for b in range(-bb, bb + 1):
            for a in range(-amax, amax + 1):
                n = a * a + a * b + c * b * b
                if not 0 < n <= bound:
                    continue
                if (s * a - c * t * b) % k == 0 and (t * a + (s + t) * b) % k == 0:
                    vals.add(n)
    else:
        amax = math.isqrt(bound)
        bmax = math.isqrt(bound // d)
        for b in range(-bmax, bmax + 1):
            for a in range(-amax, amax + 1):
                n = a * a + d * b * b
                if not 0 < n <= bound:
                    continue
                if (s * a - d * t * b) % k == 0 and (t * a + s * b) % k == 0:
                    vals.add(n)
    return sorted(vals)


def oracle_min_terms(d: int, class_index: int, r: int, m_max: int = 6) -> int | None:
    """Smallest m <= m_max with r*k a sum of m admissible values, else None.

    None means 'not with m_max or fewer summands'; callers comparing
    against the exact search must account for that cutoff.
    """
    f = make_field(d)
    rep = class_reps(f)[class_index - 1]
    target = r * rep.k
    values = oracle_values(d, class_index, target)
    if not values:
        return None
    vmax = values[-1]
    for m in range(1, m_max + 1):
        dead: set[tuple[int, int, int]] = set()

        def search(remaining: int, slots: int, start: int) -> bool:
            if slots == 0:
                return remaining == 0
            if remaining > slots * vmax:
                return False
            key = (remaining, slots, start)
            if key in dead:
                return False
            for i in range(start, len(values)):
                v = values[i]
                if v * slots > remaining:
                    break
                if search(remaining - v, slots - 1, i):
                    return True
            dead.add(key)
            return False

        if search(target, m, 0):
            return m
    return None

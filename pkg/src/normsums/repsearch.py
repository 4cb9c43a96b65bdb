"""Representability searches: minimum summand counts, certificates,
exceptional sets, and the uniform invariant g.

Everything runs on integers.  A lattice with h(v^r) = r/k is a sum of m
scaled norms N(gamma/k) exactly when r*k is a sum of m congruence-
admissible norm values N(gamma), so the whole problem is unbounded
subset-sum over the target T = r*k.

Minimum counts come from a layered reachability table: layer j is the
bitmask of all T reachable as a sum of at most j admissible values.  The
layers grow monotonically and the first repeated layer is a fixpoint, at
which point every bit still unset is unreachable by any number of
summands; that makes Unrepresentable an exact verdict, not a timeout.
Layer tables are cached per (field, class, target bound), so sweeping a
whole exceptional set costs one table, not one table per r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classdata import (
    IdealClassRep,
    class_reps,
    congruence_for,
    predicate_holds,
    rep_for,
    simplify_condition,
)
from .quadfield import (
    FieldParams,
    Overflow,
    RingElement,
    conjugate,
    isqrt_floor,
    make_field,
    norm,
)

DEFAULT_DP_CAP = 10**7

# witness preference: small |b|, then small |a|, then nonnegative signs
def _witness_key(a: int, b: int) -> tuple:
    return (abs(b), abs(a), a < 0, b < 0)


@dataclass(frozen=True)
class LatticeQuery:
    field: FieldParams
    class_index: int
    r: int

    def __post_init__(self):
        if not 1 <= self.class_index <= self.field.class_number:
            raise ValueError(
                f"class_index {self.class_index} out of range for d={self.field.d} "
                f"(class number {self.field.class_number})"
            )
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")

    @property
    def k(self) -> int:
        return rep_for(self.field, self.class_index).k

    @property
    def target(self) -> int:
        return self.r * self.k


@dataclass(frozen=True)
class NormValueSet:
    k: int
    bound: int
    values: tuple[int, ...]
    witnesses: tuple[RingElement, ...]

    def witness_for(self, value: int) -> RingElement:
        return self.witnesses[self.values.index(value)]


@dataclass(frozen=True)
class RepCertificate:
    query: LatticeQuery
    m: int
    gammas: tuple[RingElement, ...]

    def to_json_dict(self) -> dict:
        f = self.query.field
        return {
            "d": f.d,
            "class_index": self.query.class_index,
            "k": self.query.k,
            "r": self.query.r,
            "m": self.m,
            "gammas": [[g.a, g.b] for g in self.gammas],
            "check": sum(norm(f, g) for g in self.gammas),
        }


@dataclass(frozen=True)
class MinTermsResult:
    outcome: str  # "representable" | "unrepresentable"
    m: int | None = None

    @property
    def is_representable(self) -> bool:
        return self.outcome == "representable"

    @staticmethod
    def representable(m: int) -> "MinTermsResult":
        return MinTermsResult("representable", m)

    @staticmethod
    def unrepresentable() -> "MinTermsResult":
        return MinTermsResult("unrepresentable")


def enumerate_norm_values(f: FieldParams, rep: IdealClassRep, bound: int) -> NormValueSet:
    """All positive admissible norm values up to bound, with one canonical
    coordinate witness each (preferred: small |b|, then small |a|, then
    nonnegative a, then nonnegative b).

    Enumeration ranges follow from the norm form: |a| <= sqrt(bound) and
    |b| <= sqrt(bound/d) on the sqrt(-d) branch; |2a+b| <= 2*sqrt(bound)
    and |b| <= sqrt(4*bound/d) on the half-integer branch.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    cond = congruence_for(f, rep)
    simple = simplify_condition(cond)
    best: dict[int, tuple] = {}

    def consider(a: int, b: int, n: int) -> None:
        if n <= 0 or n > bound:
            return
        if simple is not None:
            alpha, beta = simple
            if (alpha * a + beta * b) % cond.k != 0:
                return
        elif not predicate_holds(cond, a, b):
            return
        key = _witness_key(a, b)
        cur = best.get(n)
        if cur is None or key < cur[0]:
            best[n] = (key, a, b)

    if f.is_half_branch:
        d = f.d
        c = (1 + d) // 4
        bmax = isqrt_floor(4 * bound // d)
        for b in range(-bmax, bmax + 1):
            umax = isqrt_floor(4 * bound - d * b * b)
            # a runs over (u - b)/2 for u = 2a+b in [-umax, umax]
            lo = -((umax + b) // 2)
            hi = (umax - b) // 2
            for a in range(lo, hi + 1):
                consider(a, b, a * a + a * b + c * b * b)
    else:
        d = f.d
        amax = isqrt_floor(bound)
        bmax = isqrt_floor(bound // d)
        for b in range(-bmax, bmax + 1):
            for a in range(-amax, amax + 1):
                consider(a, b, a * a + d * b * b)

    values = tuple(sorted(best))
    witnesses = tuple(RingElement(best[v][1], best[v][2]) for v in values)
    return NormValueSet(k=rep.k, bound=bound, values=values, witnesses=witnesses)


@lru_cache(maxsize=None)
def _layer_masks(d: int, class_index: int, t_max: int) -> tuple[int, ...]:
    """Cumulative reachability bitmasks: masks[j] has bit T set iff T <= t_max
    is a sum of at most j admissible norm values.  The last entry is the
    fixpoint, so a bit unset there is unreachable outright."""
    f = make_field(d)
    rep = rep_for(f, class_index)
    values = enumerate_norm_values(f, rep, t_max).values if t_max >= 1 else ()
    window = (1 << (t_max + 1)) - 1
    masks = [1]
    while True:
        cur = masks[-1]
        nxt = cur
        for v in values:
            nxt |= (cur << v) & window
        if nxt == cur:
            return tuple(masks)
        masks.append(nxt)


def _min_count(masks: tuple[int, ...], t: int) -> int | None:
    if not (masks[-1] >> t) & 1:
        return None
    for j, mask in enumerate(masks):
        if (mask >> t) & 1:
            return j
    return None  # unreachable; masks[-1] check already answered


def _require_cap(t: int, dp_cap: int) -> None:
    if t > dp_cap:
        raise Overflow(f"target {t} exceeds the table size cap {dp_cap}")


def min_terms(q: LatticeQuery, dp_cap: int = DEFAULT_DP_CAP) -> MinTermsResult:
    """Exact minimum number of admissible norms summing to r*k, or the
    exact verdict that no number of norms works."""
    _require_cap(q.target, dp_cap)
    masks = _layer_masks(q.field.d, q.class_index, q.target)
    m = _min_count(masks, q.target)
    if m is None:
        return MinTermsResult.unrepresentable()
    return MinTermsResult.representable(m)


def find_certificate(q: LatticeQuery, m: int, dp_cap: int = DEFAULT_DP_CAP) -> RepCertificate | None:
    """Lexicographically least certificate with exactly m summands, or None.

    Exactly m is a sharper contract than m >= minimum: padding is not
    always possible, so each m is decided on its own.  The certificate is
    canonical: the multiset of norm values is the lexicographically least
    nondecreasing sequence summing to r*k, each value is realized by its
    preferred witness (small |b|, then |a|, then nonnegative), and the
    summands are sorted by (norm, a, b).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    _require_cap(q.target, dp_cap)
    f = q.field
    vset = enumerate_norm_values(f, rep_for(f, q.class_index), q.target)
    values = vset.values
    if not values:
        return None
    target = q.target
    vmax = values[-1]
    dead: set[tuple[int, int, int]] = set()

    def search(i: int, remaining: int, slots: int, acc: list[int]) -> bool:
        if slots == 0:
            return remaining == 0
        state = (i, remaining, slots)
        if state in dead:
            return False
        for j in range(i, len(values)):
            v = values[j]
            if v * slots > remaining:
                break
            if remaining > v + (slots - 1) * vmax:
                continue
            acc.append(v)
            if search(j, remaining - v, slots - 1, acc):
                return True
            acc.pop()
        dead.add(state)
        return False

    seq: list[int] = []
    if not search(0, target, m, seq):
        return None
    gammas = sorted(
        (vset.witness_for(v) for v in seq),
        key=lambda g: (norm(f, g), g.a, g.b),
    )
    return RepCertificate(query=q, m=m, gammas=tuple(gammas))


def min_count_table(f: FieldParams, class_index: int, r_max: int, dp_cap: int = DEFAULT_DP_CAP) -> tuple[int | None, ...]:
    """min_terms for every r in [1, r_max] from one shared layer table;
    entry r-1 is the minimum count or None for unrepresentable."""
    if r_max < 1:
        raise ValueError(f"r_max must be positive, got {r_max}")
    k = rep_for(f, class_index).k
    _require_cap(r_max * k, dp_cap)
    masks = _layer_masks(f.d, class_index, r_max * k)
    return tuple(_min_count(masks, r * k) for r in range(1, r_max + 1))


def exceptional_set(f: FieldParams, class_index: int, r_max: int, dp_cap: int = DEFAULT_DP_CAP) -> list[int]:
    """All r in [1, r_max] whose lattice is a sum of norms for no m at all."""
    if r_max < 1:
        raise ValueError(f"r_max must be positive, got {r_max}")
    k = rep_for(f, class_index).k
    _require_cap(r_max * k, dp_cap)
    masks = _layer_masks(f.d, class_index, r_max * k)
    final = masks[-1]
    return [r for r in range(1, r_max + 1) if not (final >> (r * k)) & 1]


@dataclass(frozen=True)
class GInvariantResult:
    g: int
    witness: LatticeQuery
    stable: bool


def g_invariant(f: FieldParams, r_max: int, dp_cap: int = DEFAULT_DP_CAP) -> GInvariantResult:
    """Largest minimum summand count over every class and every representable
    r <= r_max; witness is the first (class, r) attaining it.

    stable reports whether the running maximum was already attained on
    r <= r_max/2, i.e. the upper half changed nothing.  That is a
    stabilization heuristic for the finite window, not a proof.

    Requires r_max >= 2*k + 1 (in target space T = r*k that is
    T_max >= 2*k^2 + k) so padding by the always-admissible value k^2 has
    room to act within the window.
    """
    reps = class_reps(f)
    kmax = max(rep.k for rep in reps)
    if r_max < 2 * kmax + 1:
        raise ValueError(f"r_max={r_max} too small: need at least 2*k+1 = {2 * kmax + 1} for k={kmax}")
    g = 0
    witness: LatticeQuery | None = None
    half_max = 0
    half = r_max // 2
    for rep in reps:
        _require_cap(r_max * rep.k, dp_cap)
        masks = _layer_masks(f.d, rep.class_index, r_max * rep.k)
        for r in range(1, r_max + 1):
            mc = _min_count(masks, r * rep.k)
            if mc is None:
                continue
            if r <= half and mc > half_max:
                half_max = mc
            if mc > g:
                g = mc
                witness = LatticeQuery(field=f, class_index=rep.class_index, r=r)
    if witness is None:
        raise RuntimeError(f"no representable r <= {r_max} for d={f.d}; window too small")
    return GInvariantResult(g=g, witness=witness, stable=half_max == g)


def transfer_certificate(cert: RepCertificate) -> RepCertificate:
    """Map a certificate between the two paired non-principal classes of a
    class-number-3 field by conjugating every summand: (a, b) -> (a+b, -b).

    Norms are preserved, so the image certifies the same r in the other
    class; summands are re-sorted to keep the canonical order.
    """
    q = cert.query
    f = q.field
    if f.class_number != 3 or q.class_index not in (2, 3):
        raise ValueError("certificate transfer only applies to the paired classes of a class-number-3 field")
    other = 5 - q.class_index
    new_q = LatticeQuery(field=f, class_index=other, r=q.r)
    gammas = sorted(
        (conjugate(f, g) for g in cert.gammas),
        key=lambda g: (norm(f, g), g.a, g.b),
    )
    return RepCertificate(query=new_q, m=cert.m, gammas=tuple(gammas))

"""Galois-group identification from Frobenius factorization statistics.

For an irreducible monic integer polynomial, the factor-degree multiset of
its reduction mod an unramified prime is the cycle type of a Frobenius
conjugacy class in the Galois group.  Sweeping a prime window therefore
samples the group's cycle-type distribution.  On top of that sampling this
module layers:

* a proof rule for the full symmetric group (non-square discriminant +
  transposition-shaped prime + either prime degree or a long prime-cycle
  witness, the latter flagged as an extension of the prime-degree rule);
* statistical identification against exact reference distributions
  (symmetric/alternating via conjugacy-class sizes, other candidates via
  explicit permutation-group closure).

Verdicts never upgrade on statistical evidence alone: alternating and
named-group identifications stay labeled Statistical.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclesweep import cycle_types_batched
from .discrim import closed_form_disc_f1n, discriminant
from .irred import VERDICT_IRREDUCIBLE, scan_one
from .modp import factor_cycle_type, reduce_mod_p
from .numutil import is_prime, is_square, primes_in
from .polyz import IntPolynomial, build_f1n

KIND_SYMMETRIC_PROVED = "SymmetricProved"
KIND_ALTERNATING_STATISTICAL = "AlternatingStatistical"
KIND_NAMED_STATISTICAL = "NamedGroupStatistical"
KIND_INCONCLUSIVE = "Inconclusive"

_ORDER_CAP = 10**6
_DEGREE_CAP = 16


class Permutation:
    """Bijection of {0..d-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a bijection")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) = self(other(x))."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(out)

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * len(self.images)
        parts = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            parts.append(length)
        return tuple(sorted(parts))

    def is_even(self) -> bool:
        return (self.degree - len(self.cycle_type())) % 2 == 0

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class PermGroup:
    """Fully enumerated permutation group with its cycle-type statistics."""

    degree: int
    elements: frozenset[Permutation]
    order: int
    cycle_type_distribution: dict[tuple[int, ...], Fraction]


class GroupClosureError(RuntimeError):
    pass


def group_closure(generators: list[Permutation]) -> PermGroup:
    """Breadth-first closure of the generator set.

    Caps: common degree <= 16, order <= 10^6; exceeding either raises
    (use the exact symmetric/alternating reference formulas instead).
    """
    if not generators:
        raise ValueError("at least one generator required")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators must share a degree")
    if degree > _DEGREE_CAP:
        raise GroupClosureError(f"degree {degree} above enumeration cap {_DEGREE_CAP}")
    identity = Permutation(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in generators:
                h = gen * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > _ORDER_CAP:
                        raise GroupClosureError("order cap exceeded")
        frontier = nxt
    counts = Counter(p.cycle_type() for p in seen)
    order = len(seen)
    dist = {ct: Fraction(c, order) for ct, c in sorted(counts.items())}
    return PermGroup(degree=degree, elements=frozenset(seen), order=order, cycle_type_distribution=dist)


def _partitions(d: int, maxpart: int | None = None):
    if d == 0:
        yield ()
        return
    if maxpart is None:
        maxpart = d
    for first in range(min(d, maxpart), 0, -1):
        for rest in _partitions(d - first, first):
            yield (first,) + rest


def sn_an_cycle_distribution(d: int, alternating: bool = False) -> dict[tuple[int, ...], Fraction]:
    """Exact cycle-type distribution of the symmetric group of degree d,
    or of its even half, keyed by ascending-sorted cycle type."""
    if d < 1 or d > 25:
        raise ValueError("d must be in 1..25")
    total = math.factorial(d)
    dist: dict[tuple[int, ...], Fraction] = {}
    for part in _partitions(d):
        mult = Counter(part)
        size = total
        for length, k in mult.items():
            size //= length**k * math.factorial(k)
        if alternating and (d - len(part)) % 2 == 1:
            continue
        key = tuple(sorted(part))
        denom = total // 2 if alternating else total
        dist[key] = dist.get(key, Fraction(0)) + Fraction(size, denom)
    return dict(sorted(dist.items()))


def projective_linear_group(psl_only: bool = False) -> PermGroup:
    """PGL(2,5) (or PSL(2,5)) acting on the six points of the projective
    line over the five-element field.  Point 5 plays the role of infinity.

    z -> z+1 and z -> 1/z generate only PSL(2,5): the inversion matrix has
    determinant -1, a square mod 5.  The full PGL needs a representative of
    the non-square-determinant coset, here the scaling z -> 2z.
    """
    q = 5
    inf = q

    def translate(z):
        return (z + 1) % q if z != inf else inf

    def invert(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return pow(z, q - 2, q)

    def scale2(z):
        return 2 * z % q if z != inf else inf

    gens = [
        Permutation([translate(z) for z in range(q + 1)]),
        Permutation([invert(z) for z in range(q + 1)]),
    ]
    if not psl_only:
        gens.append(Permutation([scale2(z) for z in range(q + 1)]))
    return group_closure(gens)


@dataclass(frozen=True)
class FrobeniusSample:
    """Cycle-type counts over the unramified primes of a window."""

    prime_window: tuple[int, int]
    samples: dict[tuple[int, ...], int]
    skipped: tuple[int, ...]

    @property
    def usable(self) -> int:
        return sum(self.samples.values())

    def frequencies(self) -> dict[tuple[int, ...], Fraction]:
        n = self.usable
        return {ct: Fraction(c, n) for ct, c in sorted(self.samples.items())}


def frobenius_sample(
    f: IntPolynomial, lo: int, hi: int, disc: int | None = None
) -> FrobeniusSample:
    """Cycle types of f mod every prime in [lo, hi].

    Ramified primes (dividing the discriminant or the leading coefficient)
    are recorded in skipped.  Deterministic: the sweep is exhaustive.
    """
    if f.degree < 2:
        raise ValueError("sampling requires degree >= 2")
    primes = primes_in(lo, hi)
    if not primes:
        raise ValueError(f"no primes in window [{lo}, {hi}]")
    if disc is None:
        disc = discriminant(f).disc
    skipped = [p for p in primes if disc % p == 0 or f.leading % p == 0]
    skipped_set = set(skipped)
    good = [p for p in primes if p not in skipped_set]
    counts: Counter = Counter()
    small = [p for p in good if p <= f.degree or f.leading != 1]
    large = [p for p in good if p > f.degree and f.leading == 1]
    for p in small:
        ct = factor_cycle_type(reduce_mod_p(f, p))
        if not ct.squarefree:
            raise AssertionError(f"unramified prime {p} gave non-squarefree reduction")
        counts[ct.degrees] += 1
    if large:
        for ct in cycle_types_batched(f, large):
            counts[ct] += 1
    return FrobeniusSample(
        prime_window=(lo, hi),
        samples=dict(sorted(counts.items())),
        skipped=tuple(skipped),
    )


def total_variation(emp: dict, ref: dict) -> float:
    keys = set(emp) | set(ref)
    return float(sum(abs(Fraction(emp.get(k, 0)) - Fraction(ref.get(k, 0))) for k in keys)) / 2.0


def chi_square(samples: dict[tuple[int, ...], int], ref: dict, total: int) -> float:
    """Pearson statistic; infinite when a sampled class has zero reference mass."""
    stat = 0.0
    keys = set(samples) | set(ref)
    for k in keys:
        expect = float(ref.get(k, 0)) * total
        obs = samples.get(k, 0)
        if expect == 0.0:
            if obs:
                return float("inf")
            continue
        stat += (obs - expect) ** 2 / expect
    return stat


@dataclass(frozen=True)
class GaloisVerdict:
    """Identification outcome with its witnesses and fit diagnostics."""

    n: int
    kind: str
    group_name: str | None
    group_order: int | None
    degree: int
    disc_is_square: bool
    transposition_prime: int | None
    long_cycle_prime: int | None
    long_cycle_length: int | None
    used_prime_degree_rule: bool
    used_jordan_extension: bool
    usable_primes: int
    transposition_shape: tuple[int, ...] | None = None
    fit: dict[str, dict[str, float]] = field(default_factory=dict)
    note: str = ""


def _is_transposition_witness(ct: tuple[int, ...]) -> bool:
    """True when the cycle type forces a transposition into the group.

    The exact shape (2, 1, ..., 1) qualifies, but so does any type with
    exactly one part equal to 2 and every other part odd: raising the
    Frobenius element to the lcm of the odd parts (an odd number) kills
    the odd cycles and preserves the 2-cycle.  The strict shape has
    density 1/(2 (d-2)!) and is unobservable for d beyond ~8, so the
    power-trick shape is what makes the proof rule usable.
    """
    twos = sum(1 for part in ct if part == 2)
    return twos == 1 and all(part % 2 == 1 for part in ct if part != 2)


def _find_witnesses(sample: FrobeniusSample, d: int):
    """Transposition-forcing type and long prime-cycle length, if sampled.

    The sample only stores counts, so witness primes themselves are located
    afterwards by a direct scan over the window.
    """
    transposition_type = None
    for ct in sample.samples:
        if _is_transposition_witness(ct):
            transposition_type = ct
            break
    # primes q with d/2 < q <= d-2 qualify for the long-cycle extension
    long_primes = [q for q in range(d // 2 + 1, d - 1) if is_prime(q)]
    long_present = None
    for ct in sample.samples:
        for part in ct:
            if part in long_primes or (part == d and is_prime(d)):
                long_present = part
                break
        if long_present:
            break
    return transposition_type, long_present


def _locate_prime_with_type(f, disc, lo, hi, predicate):
    """First prime in the window whose cycle type satisfies the predicate."""
    for p in primes_in(lo, hi):
        if disc % p == 0 or f.leading % p == 0:
            continue
        if p <= f.degree:
            ct = factor_cycle_type(reduce_mod_p(f, p)).degrees
        else:
            ct = cycle_types_batched(f, [p])[0]
        if predicate(ct):
            return p
    return None


def classify_galois(
    n: int,
    window: tuple[int, int] = (2, 100_000),
    tv_threshold: float = 0.05,
    min_primes: int = 500,
    tie_margin: float = 0.01,
    prime_budget: int = 200,
) -> GaloisVerdict:
    """Identify the Galois group of build_f1n(n) over the rationals.

    Decision order: irreducibility gate, discriminant square test,
    symmetric-group proof rule, then statistical fits. See module docstring.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    d = n - 1
    f = build_f1n(n)
    disc = closed_form_disc_f1n(n)
    row = scan_one(n, prime_budget=prime_budget)
    if row.verdict != VERDICT_IRREDUCIBLE:
        return GaloisVerdict(
            n=n, kind=KIND_INCONCLUSIVE, group_name=None, group_order=None,
            degree=d, disc_is_square=False, transposition_prime=None,
            long_cycle_prime=None, long_cycle_length=None,
            used_prime_degree_rule=False, used_jordan_extension=False,
            usable_primes=0, note="irreducibility not certified",
        )

    sample = frobenius_sample(f, window[0], window[1], disc=disc)
    usable = sample.usable
    disc_square = discriminant_is_square_f1n(n)

    if usable < 30:
        return GaloisVerdict(
            n=n, kind=KIND_INCONCLUSIVE, group_name=None, group_order=None,
            degree=d, disc_is_square=disc_square, transposition_prime=None,
            long_cycle_prime=None, long_cycle_length=None,
            used_prime_degree_rule=False, used_jordan_extension=False,
            usable_primes=usable, note="fewer than 30 usable primes",
        )

    transposition_type, long_len = _find_witnesses(sample, d)
    tp = None
    lp = None
    if transposition_type is not None:
        tp = _locate_prime_with_type(
            f, disc, window[0], window[1], lambda ct: ct == transposition_type
        )
    if long_len:
        lp = _locate_prime_with_type(
            f, disc, window[0], window[1], lambda ct: long_len in ct
        )

    if not disc_square and transposition_type is not None:
        prime_degree_rule = is_prime(d)
        jordan = long_len is not None and long_len != d
        if prime_degree_rule or jordan:
            return GaloisVerdict(
                n=n, kind=KIND_SYMMETRIC_PROVED, group_name=f"S{d}",
                group_order=math.factorial(d), degree=d,
                disc_is_square=False, transposition_prime=tp,
                long_cycle_prime=lp,
                long_cycle_length=long_len,
                used_prime_degree_rule=prime_degree_rule,
                used_jordan_extension=not prime_degree_rule and jordan,
                usable_primes=usable,
                transposition_shape=transposition_type,
                note="" if prime_degree_rule else "proved via long-prime-cycle extension of the prime-degree rule",
            )

    freqs = sample.frequencies()
    fit: dict[str, dict[str, float]] = {}
    candidates: dict[str, tuple[dict, int]] = {}
    if disc_square:
        candidates[f"A{d}"] = (sn_an_cycle_distribution(d, alternating=True), math.factorial(d) // 2)
    else:
        candidates[f"S{d}"] = (sn_an_cycle_distribution(d, alternating=False), math.factorial(d))
        candidates[f"A{d}"] = (sn_an_cycle_distribution(d, alternating=True), math.factorial(d) // 2)
        if n == 7:
            pgl = projective_linear_group(psl_only=False)
            psl = projective_linear_group(psl_only=True)
            candidates["PGL(2,5)"] = (pgl.cycle_type_distribution, pgl.order)
            candidates["PSL(2,5)"] = (psl.cycle_type_distribution, psl.order)
    for name, (ref, _order) in candidates.items():
        fit[name] = {
            "tv": total_variation(freqs, ref),
            "chi_square": chi_square(sample.samples, ref, usable),
        }

    ranked = sorted(fit.items(), key=lambda kv: kv[1]["tv"])
    best, best_stats = ranked[0]
    statistical_ok = best_stats["tv"] < tv_threshold and usable >= min_primes
    tie = len(ranked) > 1 and ranked[1][1]["tv"] - best_stats["tv"] < tie_margin

    if statistical_ok and not tie:
        kind = KIND_ALTERNATING_STATISTICAL if best.startswith("A") else KIND_NAMED_STATISTICAL
        return GaloisVerdict(
            n=n, kind=kind, group_name=best,
            group_order=candidates[best][1], degree=d,
            disc_is_square=disc_square, transposition_prime=tp,
            long_cycle_prime=lp, long_cycle_length=long_len,
            used_prime_degree_rule=False, used_jordan_extension=False,
            usable_primes=usable, transposition_shape=transposition_type, fit=fit,
        )
    note = "tied candidates: " + ", ".join(name for name, _ in ranked[:2]) if tie else (
        f"best fit {best} at tv={best_stats['tv']:.4f} misses the statistical bar"
    )
    return GaloisVerdict(
        n=n, kind=KIND_INCONCLUSIVE, group_name=None, group_order=None,
        degree=d, disc_is_square=disc_square, transposition_prime=tp,
        long_cycle_prime=lp, long_cycle_length=long_len,
        used_prime_degree_rule=False, used_jordan_extension=False,
        usable_primes=usable, fit=fit, note=note,
    )


def discriminant_is_square_f1n(n: int) -> bool:
    return is_square(closed_form_disc_f1n(n))


TABLE1_EXPECTED = {
    4: "S3", 5: "S4", 6: "S5", 7: "PGL(2,5)", 8: "S7", 9: "S8", 10: "S9",
    11: "S10", 12: "S11", 13: "S12", 14: "S13", 15: "S14", 16: "S15",
    17: "A16", 18: "A17", 19: "S18", 20: "S19", 21: "S20", 22: "S21",
}


@dataclass(frozen=True)
class Table1Row:
    n: int
    expected: str
    computed: str | None
    kind: str
    agree: bool
    usable_primes: int
    used_jordan_extension: bool


def verify_table1(window: tuple[int, int] = (2, 100_000), **kwargs) -> list[Table1Row]:
    """Reproduce the identification table for 4 <= n <= 22."""
    rows = []
    for n in sorted(TABLE1_EXPECTED):
        verdict = classify_galois(n, window=window, **kwargs)
        rows.append(
            Table1Row(
                n=n,
                expected=TABLE1_EXPECTED[n],
                computed=verdict.group_name,
                kind=verdict.kind,
                agree=verdict.group_name == TABLE1_EXPECTED[n],
                usable_primes=verdict.usable_primes,
                used_jordan_extension=verdict.used_jordan_extension,
            )
        )
    return rows

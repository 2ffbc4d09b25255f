"""Arithmetic of Z[sqrt(-2)] and the split-prime theta-series criterion.

The ring Z[sqrt(-2)] has class number one and units {1, -1}, so ideals are
canonical generators.  Ideals coprime to the modulus (5 sqrt(-2)) fall into
three ray classes; the class map sends the generator a + b sqrt(-2) to the
coset of a*b mod 5 (members of the trivial class are exactly those with
5 | ab).  A cubic character on the class group weights the theta series

    theta(q) = sum over coprime ideals of chi(ideal) * q^norm(ideal),

whose prime coefficients detect the rational primes splitting completely in
the splitting field of x^3 + 2x^2 + 3x + 4: a(p) = 2 exactly for them, and
equivalently p = x^2 + 2y^2 with 15 | xy.

Character values live in Z[omega] for the primitive cube root omega,
stored exactly as integer pairs (u, v) = u + v*omega with
omega^2 = -1 - omega.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modp import factor_cycle_type, reduce_mod_p
from .numutil import is_prime, is_square, primes_up_to
from .polyz import build_f1n

_MODULUS_NORM = 50  # norm of (5 sqrt(-2))


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(-2) of Z[sqrt(-2)]."""

    a: int
    b: int

    @property
    def norm(self) -> int:
        return self.a * self.a + 2 * self.b * self.b

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(
            self.a * other.a - 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def canonical(self) -> "QuadInt":
        """The associate with a > 0, or a = 0 and b > 0 (units are +-1)."""
        if self.a > 0 or (self.a == 0 and self.b > 0):
            return self
        if self.a == 0 and self.b == 0:
            return self
        return -self


@dataclass(frozen=True)
class QuadIdeal:
    """Nonzero principal ideal, stored by its canonical generator."""

    generator: QuadInt

    def __post_init__(self):
        g = self.generator
        if g.a == 0 and g.b == 0:
            raise ValueError("zero ideal not supported")
        object.__setattr__(self, "generator", g.canonical())

    @property
    def norm(self) -> int:
        return self.generator.norm

    def conjugate(self) -> "QuadIdeal":
        return QuadIdeal(self.generator.conjugate())


P3 = QuadIdeal(QuadInt(1, 1))  # the class-group generator, norm 3
MODULUS = QuadIdeal(QuadInt(0, 5))  # (5 sqrt(-2)), norm 50


@dataclass(frozen=True)
class RayClassContext:
    """The three-element ray class structure modulo (5 sqrt(-2))."""

    modulus: QuadIdeal = MODULUS
    group_order: int = 3
    generator: QuadIdeal = P3


def coprime_to_modulus(z: QuadInt) -> bool:
    return math.gcd(z.norm, _MODULUS_NORM) == 1


def h_membership(z: QuadInt) -> bool:
    """Trivial-class test for coprime z: 5 divides a*b.

    This is the reduced form of the two-part congruence definition, see
    h_membership_definitional.
    """
    if not coprime_to_modulus(z):
        raise ValueError("element is not coprime to the modulus")
    return z.a * z.b % 5 == 0


def h_membership_definitional(z: QuadInt) -> bool:
    """Direct reading of the congruence subgroup as a union of two sets:
    z congruent to a rational integer mod (5 sqrt(-2)) -- equivalently
    5 | b -- or a*b*sqrt(-2) divisible by (5 sqrt(-2)) -- equivalently
    5 | a*b."""
    if not coprime_to_modulus(z):
        raise ValueError("element is not coprime to the modulus")
    congruent_to_rational = z.b % 5 == 0
    product_condition = z.a * z.b % 5 == 0
    return congruent_to_rational or product_condition


def ray_class(ideal: QuadIdeal, ctx: RayClassContext = RayClassContext()) -> int:
    """Class index t in {0, 1, 2}: the unique t with
    generator * p3^(3-t) in the trivial class, checked on both associates."""
    z = ideal.generator
    if not coprime_to_modulus(z):
        raise ValueError("ideal is not coprime to the modulus")
    p3 = ctx.generator.generator
    found = []
    for t in range(3):
        w = z
        for _ in range(3 - t):
            w = w * p3
        members = {h_membership(w), h_membership(-w)}
        if len(members) != 1:
            raise AssertionError("class membership depends on the unit choice")
        if members.pop():
            found.append(t)
    if len(found) != 1:
        raise AssertionError(f"ray class not unique for {z}: {found}")
    return found[0]


def ideals_of_norm(n: int) -> list[QuadIdeal]:
    """All ideals of norm n, canonical generators, conjugates listed apart."""
    if n < 1:
        raise ValueError("norm must be >= 1")
    out = []
    for b in range(-math.isqrt(n // 2), math.isqrt(n // 2) + 1):
        rest = n - 2 * b * b
        if rest < 0:
            continue
        a = math.isqrt(rest)
        if a * a != rest:
            continue
        # a >= 0 here, so canonical means a > 0, or a = 0 with b > 0
        if a > 0 or b > 0:
            out.append(QuadIdeal(QuadInt(a, b)))
    return sorted(out, key=lambda i: (i.generator.a, i.generator.b))


# --- exact Z[omega] pairs: (u, v) = u + v*omega, omega^2 = -1 - omega ------

_OMEGA_POWERS = ((1, 0), (0, 1), (-1, -1))


def _omega_add(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return (x[0] + y[0], x[1] + y[1])


@dataclass(frozen=True)
class HeckeCharacter:
    """Cubic character: class t maps to omega^t, stored as exact pairs."""

    def value(self, t: int) -> tuple[int, int]:
        return _OMEGA_POWERS[t % 3]

    def on_ideal(self, ideal: QuadIdeal) -> tuple[int, int]:
        return self.value(ray_class(ideal))


@dataclass(frozen=True)
class ThetaSeries:
    """Exact q-expansion coefficients a(1..n_max) of the weighted ideal count.

    values holds Z[omega] pairs; integral is the per-coefficient check that
    the omega part cancelled (conjugate-ideal pairing guarantees it).
    """

    n_max: int
    values: tuple[tuple[int, int], ...]
    integral: tuple[bool, ...]

    def coefficient(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"coefficient index {n} out of range")
        u, v = self.values[n - 1]
        if v:
            raise AssertionError(f"a({n}) is not rational: {u} + {v} omega")
        return u

    def coefficients(self) -> list[int]:
        return [self.coefficient(n) for n in range(1, self.n_max + 1)]


def theta_coefficients(n_max: int) -> ThetaSeries:
    """a(n) = sum of character values over ideals of norm n coprime to the
    modulus, for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    chi = HeckeCharacter()
    acc = [(0, 0)] * (n_max + 1)
    bmax = math.isqrt(n_max // 2)
    for b in range(-bmax, bmax + 1):
        base = 2 * b * b
        amax = math.isqrt(max(n_max - base, 0))
        for a in range(0, amax + 1):
            n = a * a + base
            if n < 1 or n > n_max:
                continue
            z = QuadInt(a, b)
            if z.canonical() != z:
                continue
            if a == 0 and b <= 0:
                continue
            if math.gcd(n, _MODULUS_NORM) != 1:
                continue
            acc[n] = _omega_add(acc[n], chi.on_ideal(QuadIdeal(z)))
    values = tuple(acc[1:])
    integral = tuple(v == 0 for _, v in values)
    return ThetaSeries(n_max=n_max, values=values, integral=integral)


def split_in_L(p: int) -> bool:
    """True iff p splits completely in the splitting field of the cubic
    x^3 + 2x^2 + 3x + 4: three distinct linear factors mod p."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if 200 % p == 0:
        raise ValueError(f"{p} is ramified (divides 200)")
    ct = factor_cycle_type(reduce_mod_p(build_f1n(4), p))
    return ct.squarefree and ct.degrees == (1, 1, 1)


def rep_x2_2y2(p: int) -> tuple[list[tuple[int, int]], bool]:
    """Nonnegative representations p = x^2 + 2y^2, with the flag that some
    representation has x*y divisible by 15."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    reps = []
    for y in range(math.isqrt(p // 2) + 1):
        rest = p - 2 * y * y
        if rest < 0:
            break
        x = math.isqrt(rest)
        if x * x == rest:
            reps.append((x, y))
    fifteen = any(x * y % 15 == 0 for x, y in reps)
    return reps, fifteen


@dataclass(frozen=True)
class EquivalenceReport:
    p_max: int
    checked: int
    violations: tuple[dict, ...]


def theorem51_equivalence(p_max: int) -> EquivalenceReport:
    """Three-way equivalence over unramified primes p <= p_max:
    split completely <=> representation with 15 | xy <=> a(p) = 2."""
    if p_max < 10:
        raise ValueError("p_max must be >= 10")
    theta = theta_coefficients(p_max)
    violations = []
    checked = 0
    for p in primes_up_to(p_max):
        if 200 % p == 0:
            continue
        checked += 1
        split = split_in_L(p)
        reps, fifteen = rep_x2_2y2(p)
        ap = theta.coefficient(p)
        if not (split == fifteen == (ap == 2)):
            violations.append(
                {"p": p, "split": split, "rep15": fifteen, "a_p": ap, "reps": reps}
            )
    return EquivalenceReport(p_max=p_max, checked=checked, violations=tuple(violations))


@dataclass(frozen=True)
class FactReport:
    bound: int
    checked: int
    violations: tuple[tuple, ...]


def fact_xy_mod3(p_max: int) -> FactReport:
    """Every representation p = x^2 + 2y^2 of a prime p (p not 2 or 3)
    satisfies 3 | xy."""
    violations = []
    checked = 0
    for p in primes_up_to(p_max):
        if p in (2, 3):
            continue
        reps, _ = rep_x2_2y2(p)
        if not reps:
            continue
        checked += 1
        for x, y in reps:
            if x * y % 3 != 0:
                violations.append((p, x, y))
    return FactReport(bound=p_max, checked=checked, violations=tuple(violations))


def fact_cube_mod5(bound: int) -> FactReport:
    """Cubes (a + b sqrt(-2))^3 = X + Y sqrt(-2) satisfy 5 | XY for all
    |a|, |b| <= bound; the closed forms X = a(a^2 - 6b^2) and
    Y = b(3a^2 - 2b^2) are verified against exact ring arithmetic."""
    violations = []
    checked = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            z = QuadInt(a, b)
            cube = z * z * z
            x_closed = a * (a * a - 6 * b * b)
            y_closed = b * (3 * a * a - 2 * b * b)
            if (cube.a, cube.b) != (x_closed, y_closed):
                violations.append((a, b, "closed-form mismatch"))
                continue
            checked += 1
            if cube.a * cube.b % 5 != 0:
                violations.append((a, b, cube.a, cube.b))
    return FactReport(bound=bound, checked=checked, violations=tuple(violations))


# --- eta products -----------------------------------------------------------

def pentagonal_series(scale: int, n_max: int) -> list[int]:
    """Coefficients of prod_{k>=1} (1 - q^{scale*k}) up to q^n_max, by the
    pentagonal-number expansion sum_k (-1)^k q^{scale*k(3k-1)/2}."""
    out = [0] * (n_max + 1)
    k = 0
    while True:
        placed = False
        for kk in ((k, -k) if k else (0,)):
            e = scale * kk * (3 * kk - 1) // 2
            if e <= n_max:
                out[e] += (-1) ** (kk % 2)
                placed = True
        if not placed and k > 0:
            break
        k += 1
    return out


def eta_product_expansion(a: int, b: int, n_max: int) -> list[int]:
    """q-expansion of eta(a tau) eta(b tau) for a + b = 24: the prefactor
    q^{(a+b)/24} = q contributes one shift, the rest is the product of two
    pentagonal series.  Index i of the result is the coefficient of q^i."""
    if a + b != 24:
        raise ValueError("leading exponent must be 1, so a + b must be 24")
    pa = pentagonal_series(a, n_max)
    pb = pentagonal_series(b, n_max)
    prod = [0] * (n_max + 1)
    for i, ca in enumerate(pa):
        if ca:
            for j, cb in enumerate(pb):
                if i + j + 1 > n_max:
                    break
                if cb:
                    prod[i + j + 1] += ca * cb
    return prod


def eq52_solutions(a: int, b: int, target: int) -> list[tuple[int, int]]:
    """Integer pairs (n, m) with a(6n-1)^2 + b(6m-1)^2 = target."""
    candidates = []
    k = 0
    while a * (6 * k - 1) ** 2 <= target or k == 0:
        for v in ((-1,) if k == 0 else (6 * k - 1, -6 * k - 1)):
            if a * v * v <= target:
                candidates.append(v)
        k += 1
    sols = []
    for v in candidates:
        rest = target - a * v * v
        if rest < 0 or rest % b:
            continue
        q = rest // b
        if is_square(q):
            s = math.isqrt(q)
            for u in {s, -s}:
                if (u + 1) % 6 == 0:
                    sols.append(((v + 1) // 6, (u + 1) // 6))
    return sorted(set(sols))


@dataclass(frozen=True)
class EtaMismatchRow:
    a: int
    b: int
    first_mismatch_index: int
    eta_coefficient: int
    theta_coefficient: int
    eq52_12p_solvable_primes: tuple[int, ...]
    eq52_24p_solvable_primes: tuple[int, ...]


def eta_product_mismatch(n_max: int, split_prime_bound: int = 200) -> list[EtaMismatchRow]:
    """For every pair a <= b with a + b = 24: the first index where the
    eta-product expansion differs from the theta coefficients, plus the
    split primes (up to the bound) for which the index equation
    a(6n-1)^2 + b(6m-1)^2 = 12p (printed form) or = 24p (form implied by
    the pentagonal exponents) has integer solutions."""
    if n_max < 5:
        raise ValueError("n_max must be >= 5")
    theta = theta_coefficients(n_max).coefficients()
    split_primes = [
        p for p in primes_up_to(split_prime_bound) if 200 % p and split_in_L(p)
    ]
    rows = []
    for a in range(1, 13):
        b = 24 - a
        eta = eta_product_expansion(a, b, n_max)
        idx = None
        for n in range(1, n_max + 1):
            if eta[n] != theta[n - 1]:
                idx = n
                break
        if idx is None:
            raise AssertionError(f"eta({a},{b}) matched theta to {n_max}")
        rows.append(
            EtaMismatchRow(
                a=a,
                b=b,
                first_mismatch_index=idx,
                eta_coefficient=eta[idx],
                theta_coefficient=theta[idx - 1],
                eq52_12p_solvable_primes=tuple(
                    p for p in split_primes if eq52_solutions(a, b, 12 * p)
                ),
                eq52_24p_solvable_primes=tuple(
                    p for p in split_primes if eq52_solutions(a, b, 24 * p)
                ),
            )
        )
    return rows

"""Prime-field polynomial arithmetic and factorization degree structure.

The one consumer-facing question this module answers is: for a squarefree
reduction f mod p, what is the multiset of degrees of its irreducible
factors (its cycle type)?  Distinct-degree factorization answers it without
ever splitting equal-degree products, so the whole module is deterministic.

Internals operate on plain lists of residues (ascending degree); the
public surface wraps them in small value types.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .numutil import is_prime
from .polyz import IntPolynomial


@dataclass(frozen=True)
class PrimeModulus:
    """A certified prime modulus."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


@dataclass(frozen=True)
class ModPolynomial:
    """Polynomial over Z/p, residues ascending by degree, trimmed."""

    modulus: PrimeModulus
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus.p
        c = [x % p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class CycleType:
    """Multiset of irreducible-factor degrees of a squarefree reduction.

    degrees is sorted ascending; it is empty (and meaningless) when
    squarefree is False.
    """

    degrees: tuple[int, ...] = field(default=())
    squarefree: bool = True

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    def as_counter(self) -> Counter:
        return Counter(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)


def reduce_mod_p(f: IntPolynomial, p: PrimeModulus | int) -> ModPolynomial:
    """Coefficientwise reduction of f modulo p; degree may drop."""
    if isinstance(p, int):
        p = PrimeModulus(p)
    return ModPolynomial(p, tuple(f.coeffs))


# ---------------------------------------------------------------------------
# list-level helpers (residues ascending, no trailing zeros guaranteed by use)

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return a
    inv = pow(lc, p - 2, p)
    return [c * inv % p for c in a]


def _mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """a * b reduced mod monic f and mod p."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _redmod(out, f, p)


def _redmod(c: list[int], f: list[int], p: int) -> list[int]:
    d = len(f) - 1
    for k in range(len(c) - 1, d - 1, -1):
        ck = c[k]
        if ck:
            c[k] = 0
            for j in range(d):
                if f[j]:
                    c[k - d + j] = (c[k - d + j] - ck * f[j]) % p
    del c[d:]
    return _trim(c)


def _powmod_x(e: int, f: list[int], p: int) -> list[int]:
    """x^e reduced mod monic f."""
    d = len(f) - 1
    if d == 1:
        return [pow((-f[0]) % p, e, p)]
    r = [1]
    x = [0, 1]
    for bit in bin(e)[2:]:
        r = _mulmod(r, r, f, p)
        if bit == "1":
            r = _mulmod(r, x, f, p)
    return r


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd over Z/p."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a = _remainder(a, b, p)
        a, b = b, a
    return _monic(a, p)


def _remainder(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            a[k] = 0
            for j in range(db):
                if b[j]:
                    a[k - db + j] = (a[k - db + j] - c * b[j]) % p
        else:
            a[k] = 0
    return _trim(a)


def _quotient_exact(a: list[int], b: list[int], p: int) -> list[int]:
    """a / b over Z/p when b divides a."""
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        q[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return q


def _derivative(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def factor_cycle_type(f: ModPolynomial) -> CycleType:
    """Multiset of irreducible-factor degrees of f, by distinct-degree stages.

    Stage d computes gcd(x^{p^d} - x, remaining) whose degree is d times the
    number of degree-d factors; the gcd is divided out and the sweep stops
    once at most one factor can remain.  A nontrivial gcd(f, f') reports
    squarefree=False with no degrees.
    """
    if f.is_zero:
        raise ValueError("cycle type of the zero polynomial is undefined")
    if f.degree < 1:
        raise ValueError("cycle type requires degree >= 1")
    p = f.modulus.p
    work = _monic(list(f.coeffs), p)
    if len(_gcd(work, _derivative(work, p), p)) - 1 > 0:
        return CycleType(degrees=(), squarefree=False)
    parts: list[int] = []
    h = [0, 1]  # x^{p^0}
    d = 0
    while True:
        deg = len(work) - 1
        if deg <= 0:
            break
        d += 1
        if 2 * d > deg:
            parts.append(deg)
            break
        h = _powmod_x(p, work, p) if d == 1 else _mulpow(h, work, p)
        hm = list(h) + [0] * max(0, 2 - len(h))
        hm[1] = (hm[1] - 1) % p
        g = _gcd(work, _trim(hm), p)
        dg = len(g) - 1
        if dg > 0:
            parts.extend([d] * (dg // d))
            work = _monic(_trim(_quotient_exact(work, g, p)), p)
            h = _redmod(list(h), work, p) if len(work) - 1 > 0 else h
    return CycleType(degrees=tuple(parts), squarefree=True)


def _mulpow(h: list[int], f: list[int], p: int) -> list[int]:
    """h^p mod f by square and multiply on the exponent p."""
    r = [1]
    for bit in bin(p)[2:]:
        r = _mulmod(r, r, f, p)
        if bit == "1":
            r = _mulmod(r, h, f, p)
    return r


def is_irreducible_mod_p(f: ModPolynomial) -> bool:
    """True iff f is irreducible over Z/p."""
    if f.degree < 1:
        raise ValueError("irreducibility requires degree >= 1")
    ct = factor_cycle_type(f)
    return ct.squarefree and ct.degrees == (f.degree,)

"""Exact polynomials over the integers and the package's polynomial families.

The central family is the triangular-coefficient polynomial

    f_{1,n}(x) = x^{n-1} + 2x^{n-2} + 3x^{n-3} + ... + (n-1)x + n,

together with its relatives: the telescoped product g_{1,n} = (x-1)*f_{1,n},
the binomial generalization mf_{1,n} whose coefficients are C(m+i, i+1)
(the truncation of (1 + x + x^2 + ...)^m), and the base-p digit quotient
f_{p,N} = (digit polynomial of N minus N) / (x - p).

Coefficients are stored dense, ascending by degree, as arbitrary-precision
integers.  Nothing here normalizes content implicitly; primitive-part
extraction is its own method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class IntPolynomial:
    """Dense integer-coefficient polynomial, coefficient i belongs to x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        """Exact evaluation by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero or other.is_zero:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial([k * c for c in self.coeffs])

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Polynomial division; requires every quotient step to divide exactly
        by the leading coefficient of the divisor (always true for monic)."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        if dq < 0:
            return IntPolynomial([]), self
        lead = other.leading
        quot = [0] * (dq + 1)
        for k in range(self.degree, other.degree - 1, -1):
            c, r = divmod(rem[k], lead)
            if r:
                raise ValueError("non-exact division step")
            if c:
                quot[k - other.degree] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - other.degree + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def content(self) -> int:
        """GCD of the coefficients (nonnegative; 0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> IntPolynomial:
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([c // g for c in self.coeffs])

    def shifted(self, a: int) -> IntPolynomial:
        """The polynomial f(x + a), computed by repeated synthetic addition."""
        out = list(self.coeffs)
        n = len(out)
        # Horner-style Taylor shift: O(n^2) exact integer operations.
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                out[k] += a * out[k + 1]
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}{xs}"
            terms.append(f"{sign}{body}" if not terms else f" {sign} {body}")
        return "".join(terms)


@dataclass(frozen=True)
class DigitExpansion:
    """Base-b digit vector of a positive integer, least significant first."""

    base: int
    digits: tuple[int, ...]
    value: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if not self.digits or self.digits[0] == 0 or self.digits[-1] == 0:
            raise ValueError("first and last digits must be nonzero")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError("digits out of range")
        if sum(d * self.base**i for i, d in enumerate(self.digits)) != self.value:
            raise ValueError("digits do not reconstruct value")


def build_f1n(n: int) -> IntPolynomial:
    """The degree n-1 polynomial with coefficient k on x^{n-k}:
    x^{n-1} + 2x^{n-2} + ... + (n-1)x + n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return IntPolynomial([n - i for i in range(n)])


def build_g1n(n: int) -> IntPolynomial:
    """x^n + x^{n-1} + ... + x - n, the product (x - 1) * build_f1n(n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return IntPolynomial([-n] + [1] * n)


def build_mf1n(m: int, n: int) -> IntPolynomial:
    """Monic degree n-1 polynomial with C(m+i, i+1) on x^{n-2-i}.

    These are the truncations of the power series (1 + x + x^2 + ...)^m
    read backwards; m = 2 reproduces build_f1n(n).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if n < 3:
        raise ValueError("n must be >= 3")
    coeffs = [0] * n
    for i in range(-1, n - 1):
        coeffs[n - 2 - i] = math.comb(m + i, i + 1)
    return IntPolynomial(coeffs)


def expand_digits(p: int, big_n: int) -> DigitExpansion:
    """Base-p digit expansion of big_n; requires p >= 2 and p not dividing big_n.

    Single-digit expansions (big_n < p) are allowed.
    """
    if p < 2:
        raise ValueError("base must be >= 2")
    if big_n < 1:
        raise ValueError("value must be >= 1")
    if big_n % p == 0:
        raise ValueError(f"{big_n} is divisible by base {p}")
    digits = []
    v = big_n
    while v:
        v, d = divmod(v, p)
        digits.append(d)
    return DigitExpansion(base=p, digits=tuple(digits), value=big_n)


def build_fpN(p: int, big_n: int) -> IntPolynomial:
    """Quotient of (digit polynomial of big_n in base p, minus big_n) by (x - p).

    The digit polynomial has base-p digits of big_n as coefficients, so p is
    a root of it minus big_n and the division is exact; a nonzero remainder
    is an internal error.
    """
    exp = expand_digits(p, big_n)
    numer = list(exp.digits)
    numer[0] -= big_n
    quot, rem = IntPolynomial(numer).divmod(IntPolynomial([-p, 1]))
    if not rem.is_zero:
        raise AssertionError("digit polynomial division left a remainder")
    return quot


def shift_by_one(f: IntPolynomial) -> IntPolynomial:
    """The polynomial f(x + 1)."""
    return f.shifted(1)


def poly_eval(f: IntPolynomial, x: int) -> int:
    """Exact value f(x)."""
    return f(x)


def _comb0(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def binom_identity_check(n: int, k: int) -> bool:
    """Check C(n+1, k-1) == sum_{j=1}^{k+1} j * C(n-j, k-j).

    This is the identity behind the coefficients of build_f1n(n) shifted by
    one; it must hold for every n >= 4 and 2 <= k <= n-1.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    if not 2 <= k <= n - 1:
        raise ValueError("k must satisfy 2 <= k <= n-1")
    rhs = sum(j * _comb0(n - j, k - j) for j in range(1, k + 2))
    return math.comb(n + 1, k - 1) == rhs

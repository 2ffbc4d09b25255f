"""Exact resultants and discriminants via fraction-free elimination.

Resultants come from the determinant of the Sylvester matrix, computed by
Bareiss one-step fraction-free Gaussian elimination: every division in the
pivot update is exact over the integers, so no rationals ever appear.
Discriminant reports carry the exact value, its prime factorization, the
signed squarefree part, and the radicand of the quadratic field it cuts out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numutil import factorize
from .polyz import IntPolynomial


@dataclass(frozen=True)
class DiscriminantReport:
    """Exact discriminant with its multiplicative anatomy.

    squarefree_part carries the sign; quad_field is the radicand d of the
    quadratic extension generated by a square root of the discriminant, or
    None when the discriminant is a perfect square.  factor_complete is
    False when a cofactor resisted factorization (the disc itself is still
    exact).
    """

    disc: int
    factorization: dict[int, int]
    squarefree_part: int
    is_square: bool
    quad_field: int | None
    factor_complete: bool = True


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    """(deg f + deg g)-square Sylvester matrix, f-rows above g-rows."""
    m, n = f.degree, g.degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, fraction-free."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, size):
            row_i = m[i]
            a_ik = row_i[k]
            if a_ik:
                m[i] = [0] * (k + 1) + [
                    (row_i[j] * pivot - a_ik * row_k[j]) // prev for j in range(k + 1, size)
                ]
            else:
                m[i] = [0] * (k + 1) + [row_i[j] * pivot // prev for j in range(k + 1, size)]
        prev = pivot
    return sign * m[size - 1][size - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Exact resultant of nonzero f and g."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return bareiss_determinant(sylvester_matrix(f, g))


def discriminant(f: IntPolynomial) -> DiscriminantReport:
    """Exact discriminant report of f with deg f >= 1.

    disc = (-1)^{d(d-1)/2} * resultant(f, f') / leading(f).
    """
    d = f.degree
    if d < 1:
        raise ValueError("discriminant requires degree >= 1")
    if d == 1:
        disc = 1
    else:
        res = resultant(f, f.derivative())
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        disc, rem = divmod(sign * res, f.leading)
        if rem:
            raise AssertionError("leading-coefficient division must be exact")
    return _report_from_disc(disc)


def _report_from_disc(disc: int) -> DiscriminantReport:
    if disc == 0:
        return DiscriminantReport(
            disc=0, factorization={}, squarefree_part=0, is_square=False, quad_field=None
        )
    factors, complete = factorize(disc)
    part = -1 if disc < 0 else 1
    for p, e in factors.items():
        if e % 2:
            part *= p
    square = part == 1
    return DiscriminantReport(
        disc=disc,
        factorization=factors,
        squarefree_part=part,
        is_square=square,
        quad_field=None if square else part,
        factor_complete=complete,
    )


def closed_form_disc_f1n(n: int) -> int:
    """Discriminant of build_f1n(n) in closed form:
    (-1)^{(n-1)(n+2)/2} * 2 * n^{n-3} * (n+1)^{n-2}.

    At n = 2 the exponent n-3 is negative; the value is evaluated in exact
    rationals and asserted integral (it equals 1, the linear convention).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    sign = -1 if ((n - 1) * (n + 2) // 2) % 2 else 1
    value = Fraction(2) * Fraction(n) ** (n - 3) * Fraction(n + 1) ** (n - 2)
    if value.denominator != 1:
        raise AssertionError("closed form is not integral")
    return sign * int(value)


def disc_report_f1n(n: int) -> DiscriminantReport:
    """Discriminant report of build_f1n(n) from the closed form (no Bareiss)."""
    return _report_from_disc(closed_form_disc_f1n(n))


def quadratic_subfield(n: int):
    """Radicand of the quadratic field cut out by the discriminant of
    build_f1n(n), or the string "degenerate" when the discriminant is a
    perfect square (no quadratic field)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    report = _report_from_disc(closed_form_disc_f1n(n))
    if not report.factor_complete:
        raise ArithmeticError("squarefree part incomplete")
    if report.is_square:
        return "degenerate"
    return report.squarefree_part


def subfield_case_value(n: int) -> int:
    """Discriminant of build_f1n(n) assembled from the n mod 4 case split:

        n = 4l:     -2l * 4 * (4l)^{4l-4} * (4l+1)^{4l-2}
        n = 4l+1:   {2^{2l} * (4l+1)^{2l-1} * (2l+1)^{2l}}^2 / (2l+1)
        n = 4l+2:   {2(2l+1)(4l+3)}^{4l} / (2l+1)
        n = 4l+3:   -2(l+1) * 4^{4l+1} * (4l+3)^{4l} * (l+1)^{4l}

    Exposes the square/nonsquare anatomy behind quadratic_subfield.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    l, r = divmod(n, 4)
    if r == 0:
        return -2 * l * 4 * (4 * l) ** (4 * l - 4) * (4 * l + 1) ** (4 * l - 2)
    if r == 1:
        num = (2 ** (2 * l) * (4 * l + 1) ** (2 * l - 1) * (2 * l + 1) ** (2 * l)) ** 2
        quot, rem = divmod(num, 2 * l + 1)
        if rem:
            raise AssertionError("case value must be integral")
        return quot
    if r == 2:
        num = (2 * (2 * l + 1) * (4 * l + 3)) ** (4 * l)
        quot, rem = divmod(num, 2 * l + 1)
        if rem:
            raise AssertionError("case value must be integral")
        return quot
    return -2 * (l + 1) * 4 ** (4 * l + 1) * (4 * l + 3) ** (4 * l) * (l + 1) ** (4 * l)


def disc_mf1n_closed(m: int, n: int) -> int:
    """Closed-form discriminants for the binomial family at n = 3 and 4:
    -m(m+2) and -m^2 (m+1)(m+2)(m+3)^2 / 6."""
    if n == 3:
        return -m * (m + 2)
    if n == 4:
        num = -(m**2) * (m + 1) * (m + 2) * (m + 3) ** 2
        quot, rem = divmod(num, 6)
        if rem:
            raise AssertionError("closed form must be integral")
        return quot
    raise ValueError("closed forms exist only for n in {3, 4}")

import math

import pytest

from nacf.polyz import (
    DigitExpansion,
    IntPolynomial,
    binom_identity_check,
    build_f1n,
    build_fpN,
    build_g1n,
    build_mf1n,
    expand_digits,
    poly_eval,
    shift_by_one,
)


def naive_mul(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook product, independent of IntPolynomial internals."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_int_polynomial_basics():
    f = IntPolynomial([4, 3, 2, 1])
    assert f.degree == 3
    assert f.leading == 1
    assert f[0] == 4 and f[5] == 0
    assert str(f) == "x^3 + 2x^2 + 3x + 4"
    assert IntPolynomial([0, 0]).is_zero
    assert (f - f).is_zero


def test_int_polynomial_mul_matches_naive():
    a = IntPolynomial([1, -2, 0, 5])
    b = IntPolynomial([3, 4, -1])
    assert list((a * b).coeffs) == naive_mul([1, -2, 0, 5], [3, 4, -1])


def test_int_polynomial_divmod_exact_and_remainder():
    f = IntPolynomial([-4, 0, 1])  # x^2 - 4
    q, r = f.divmod(IntPolynomial([-2, 1]))
    assert list(q.coeffs) == [2, 1] and r.is_zero
    g = IntPolynomial([1, 1, 1])
    q, r = g.divmod(IntPolynomial([-1, 1]))
    assert list(r.coeffs) == [3]


def test_int_polynomial_content():
    f = IntPolynomial([6, -9, 12])
    assert f.content() == 3
    assert list(f.primitive_part().coeffs) == [2, -3, 4]


def test_build_f1n_anchors():
    assert list(build_f1n(4).coeffs) == [4, 3, 2, 1]
    assert list(build_f1n(5).coeffs) == [5, 4, 3, 2, 1]
    assert list(build_f1n(2).coeffs) == [2, 1]
    with pytest.raises(ValueError):
        build_f1n(1)


def test_build_g1n_examples():
    assert list(build_g1n(4).coeffs) == [-4, 1, 1, 1, 1]
    assert list(build_g1n(2).coeffs) == [-2, 1, 1]
    lhs = build_g1n(9)
    rhs = IntPolynomial([-1, 1]) * build_f1n(9)
    assert lhs == rhs


def test_g1n_product_identity_full_range():
    x_minus_1 = [-1, 1]
    for n in range(2, 301):
        expect = naive_mul(x_minus_1, list(build_f1n(n).coeffs))
        assert list(build_g1n(n).coeffs) == expect


def test_build_mf1n_examples():
    assert list(build_mf1n(2, 3).coeffs) == [3, 2, 1]
    assert build_mf1n(2, 4) == build_f1n(4)
    assert list(build_mf1n(3, 4).coeffs) == [10, 6, 3, 1]
    with pytest.raises(ValueError):
        build_mf1n(1, 4)
    with pytest.raises(ValueError):
        build_mf1n(2, 2)


def test_mf1n_matches_power_series_convolution():
    # Coefficients must agree with the truncated expansion of
    # (1 + x + x^2 + ...)^m: repeated convolution with all-ones vectors.
    for m in range(2, 21):
        for n in range(3, 101, 7):
            series = [1] * n
            acc = [1]
            for _ in range(m):
                acc = naive_mul(acc, series)[:n]
            poly = build_mf1n(m, n)
            # coefficient of x^{n-2-i} is acc[i+1]
            got = [poly[n - 2 - i] for i in range(-1, n - 1)]
            assert got == acc[:n]


def test_expand_digits_examples():
    assert expand_digits(2, 5).digits == (1, 0, 1)
    assert expand_digits(3, 10).digits == (1, 0, 1)
    assert expand_digits(10, 1234).digits == (4, 3, 2, 1)
    assert expand_digits(5, 3).digits == (3,)
    with pytest.raises(ValueError):
        expand_digits(3, 9)


def test_digit_expansion_invariants():
    with pytest.raises(ValueError):
        DigitExpansion(base=2, digits=(0, 1), value=2)
    with pytest.raises(ValueError):
        DigitExpansion(base=2, digits=(1, 1), value=5)


def test_build_fpN_examples():
    assert list(build_fpN(2, 5).coeffs) == [2, 1]
    assert list(build_fpN(3, 10).coeffs) == [3, 1]
    assert list(build_fpN(2, 7).coeffs) == [3, 1]


def test_build_fpN_reconstruction():
    # (x - p) * f_{p,N} + N must reproduce the digit polynomial exactly.
    for p in (2, 3, 5, 7, 10):
        for big_n in (5, 7, 11, 101, 12345, 999999):
            if big_n % p == 0:
                continue
            q = build_fpN(p, big_n)
            digits = expand_digits(p, big_n).digits
            recon = IntPolynomial([-p, 1]) * q
            recon = recon + IntPolynomial([big_n])
            assert list(recon.coeffs) == list(digits)


def test_shift_by_one_expansion_oracle():
    # (x+1)^3 + 2(x+1)^2 + 3(x+1) + 4 expanded by naive multiplication
    xp1 = [1, 1]
    acc = [0]
    powers = [[1]]
    for _ in range(3):
        powers.append(naive_mul(powers[-1], xp1))
    for coeff, power in zip([4, 3, 2, 1], powers):
        term = [coeff * c for c in power]
        acc = [a + b for a, b in zip(acc + [0] * len(term), term + [0] * len(acc))]
    f = shift_by_one(build_f1n(4))
    expect = [c for c in acc]
    while expect and expect[-1] == 0:
        expect.pop()
    assert list(f.coeffs) == expect == [10, 10, 5, 1]


def test_shift_by_one_trivial():
    assert shift_by_one(IntPolynomial([7])) == IntPolynomial([7])
    assert shift_by_one(IntPolynomial([0, 1])) == IntPolynomial([1, 1])


def test_shift_by_one_binomial_pattern():
    # f(x+1) for build_f1n(n) must carry C(n+1, k-1) on x^{n-k} and
    # constant term n(n+1)/2.
    for n in range(2, 301):
        shifted = shift_by_one(build_f1n(n))
        assert shifted[0] == n * (n + 1) // 2
        for k in range(1, n):
            assert shifted[n - k] == math.comb(n + 1, k - 1)


def test_shift_round_trip():
    f = build_f1n(12)
    assert f.shifted(1).shifted(-1) == f


def test_binom_identity_examples():
    assert binom_identity_check(4, 2)  # 3 + 2 = 5 = C(5,1)
    assert binom_identity_check(4, 3)  # 3 + 4 + 3 = 10 = C(5,2)
    assert binom_identity_check(100, 57)


def test_binom_identity_exhaustive():
    for n in range(4, 101):
        for k in range(2, n):
            assert binom_identity_check(n, k), (n, k)


def test_poly_eval_examples():
    f4 = build_f1n(4)
    assert poly_eval(f4, 1) == 10
    assert poly_eval(f4, 0) == 4
    assert poly_eval(build_f1n(5), -1) == 3


def test_poly_eval_matches_term_sum():
    f = build_f1n(9)
    for x in (-3, -1, 0, 2, 10):
        assert f(x) == sum(c * x**i for i, c in enumerate(f.coeffs))

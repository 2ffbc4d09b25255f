import math
import random

import pytest

from nacf.qfield import (
    MODULUS,
    P3,
    EtaMismatchRow,
    HeckeCharacter,
    QuadIdeal,
    QuadInt,
    RayClassContext,
    eq52_solutions,
    eta_product_expansion,
    eta_product_mismatch,
    fact_cube_mod5,
    fact_xy_mod3,
    h_membership,
    h_membership_definitional,
    ideals_of_norm,
    pentagonal_series,
    ray_class,
    rep_x2_2y2,
    split_in_L,
    theorem51_equivalence,
    theta_coefficients,
)


def test_quadint_norm_and_product():
    z = QuadInt(1, 1)
    assert z.norm == 3
    w = z * z
    assert (w.a, w.b) == (-1, 2)
    cube = w * z
    assert (cube.a, cube.b) == (-5, 1)  # (1 + sqrt(-2))^3 = -5 + sqrt(-2)


def test_norm_multiplicativity_random():
    rng = random.Random(17)
    for _ in range(100):
        z = QuadInt(rng.randrange(-50, 51), rng.randrange(-50, 51))
        w = QuadInt(rng.randrange(-50, 51), rng.randrange(-50, 51))
        assert (z * w).norm == z.norm * w.norm


def test_ideal_canonicalization():
    assert QuadIdeal(QuadInt(-3, 1)).generator == QuadInt(3, -1)
    assert QuadIdeal(QuadInt(0, -5)).generator == QuadInt(0, 5)
    with pytest.raises(ValueError):
        QuadIdeal(QuadInt(0, 0))
    assert MODULUS.norm == 50 and P3.norm == 3


def test_ideals_of_norm_examples():
    assert [i.generator for i in ideals_of_norm(1)] == [QuadInt(1, 0)]
    assert [(i.generator.a, i.generator.b) for i in ideals_of_norm(3)] == [(1, -1), (1, 1)]
    assert ideals_of_norm(5) == []
    assert [(i.generator.a, i.generator.b) for i in ideals_of_norm(2)] == [(0, 1)]


def test_ideals_of_norm_exhaustive_scan_oracle():
    for n in range(1, 400):
        got = {(i.generator.a, i.generator.b) for i in ideals_of_norm(n)}
        brute = set()
        for a in range(-30, 31):
            for b in range(-30, 31):
                if a * a + 2 * b * b == n and (a > 0 or (a == 0 and b > 0)):
                    brute.add((a, b))
        assert got == brute, n


def test_h_membership_examples():
    assert not h_membership(QuadInt(1, 1))
    assert h_membership(QuadInt(-5, 1))
    assert h_membership(QuadInt(7, 0))
    with pytest.raises(ValueError):
        h_membership(QuadInt(0, 5))  # norm 50, not coprime


def test_h_membership_definitional_agrees():
    for a in range(-50, 51):
        for b in range(-50, 51):
            z = QuadInt(a, b)
            if math.gcd(z.norm, 50) != 1:
                continue
            assert h_membership(z) == h_membership_definitional(z)


def test_h_multiplicatively_closed():
    members = [
        QuadInt(a, b)
        for a in range(-30, 31)
        for b in range(-30, 31)
        if math.gcd(QuadInt(a, b).norm, 50) == 1 and QuadInt(a, b).a * QuadInt(a, b).b % 5 == 0
    ]
    rng = random.Random(29)
    for _ in range(300):
        z, w = rng.choice(members), rng.choice(members)
        assert h_membership(z * w)


def test_ray_class_examples():
    assert ray_class(QuadIdeal(QuadInt(1, 0))) == 0
    assert ray_class(P3) == 1
    assert ray_class(QuadIdeal(QuadInt(1, -1))) == 2
    # conjugate classes are inverse: (1+sqrt(-2))(1-sqrt(-2)) = 3 is rational
    prod = QuadInt(1, 1) * QuadInt(1, -1)
    assert (prod.a, prod.b) == (3, 0) and h_membership(prod)


def test_ray_class_is_homomorphism():
    rng = random.Random(31)
    pool = [
        QuadInt(a, b)
        for a in range(-50, 51)
        for b in range(-50, 51)
        if math.gcd(QuadInt(a, b).norm, 50) == 1 and (a, b) != (0, 0)
    ]
    for _ in range(400):
        z, w = rng.choice(pool), rng.choice(pool)
        tz = ray_class(QuadIdeal(z))
        tw = ray_class(QuadIdeal(w))
        assert ray_class(QuadIdeal(z * w)) == (tz + tw) % 3


def test_order_three_anchor():
    z = QuadInt(1, 1)
    square = z * z
    cube = square * z
    assert not h_membership(z)
    assert not h_membership(square)
    assert h_membership(cube)


def test_hecke_character_values():
    chi = HeckeCharacter()
    assert chi.value(0) == (1, 0)
    assert chi.value(1) == (0, 1)
    assert chi.value(2) == (-1, -1)  # omega^2 = -1 - omega
    assert chi.on_ideal(P3) == (0, 1)


def test_theta_first_coefficients():
    theta = theta_coefficients(20)
    assert theta.coefficient(1) == 1
    assert theta.coefficient(2) == 0  # (sqrt(-2)) divides the modulus
    assert theta.coefficient(3) == -1  # omega + omega^2
    assert theta.coefficient(9) == 0  # 1 + omega + omega^2
    assert all(theta.integral)


def test_theta_integrality_to_10000():
    theta = theta_coefficients(10_000)
    assert all(theta.integral)


def test_split_in_L_examples():
    assert not split_in_L(3)
    assert split_in_L(43)
    assert not split_in_L(41)
    with pytest.raises(ValueError):
        split_in_L(5)


def test_rep_x2_2y2_examples():
    reps, fifteen = rep_x2_2y2(43)
    assert reps == [(5, 3)] and fifteen
    reps, fifteen = rep_x2_2y2(41)
    assert reps == [(3, 4)] and not fifteen
    reps, fifteen = rep_x2_2y2(7)
    assert reps == [] and not fifteen


def test_theorem51_small():
    report = theorem51_equivalence(100)
    assert report.checked == 23  # 25 primes below 100 minus the ramified 2, 5
    assert report.violations == ()


def test_fact_xy_mod3():
    report = fact_xy_mod3(500)
    assert report.violations == ()
    reps, _ = rep_x2_2y2(11)
    assert reps == [(3, 1)]  # xy = 3
    reps, _ = rep_x2_2y2(17)
    assert reps == [(3, 2)]  # xy = 6


def test_fact_cube_mod5():
    report = fact_cube_mod5(30)
    assert report.violations == ()
    z = QuadInt(2, 1)
    cube = z * z * z
    assert (cube.a, cube.b) == (-4, 10)


def test_pentagonal_series_matches_product_oracle():
    # direct truncated product of (1 - q^{c k}) factors
    for c in (1, 7, 12):
        n_max = 120
        prod = [1] + [0] * n_max
        k = 1
        while c * k <= n_max:
            new = prod[:]
            for i in range(n_max + 1 - c * k):
                if prod[i]:
                    new[i + c * k] -= prod[i]
            prod = new
            k += 1
        assert pentagonal_series(c, n_max) == prod, c


def test_eta_expansion_anchor_pair():
    ex = eta_product_expansion(1, 23, 60)
    assert ex[1] == 1 and ex[2] == -1
    ex12 = eta_product_expansion(12, 12, 60)
    support = [i for i, c in enumerate(ex12) if c]
    assert all(i % 12 == 1 for i in support)
    with pytest.raises(ValueError):
        eta_product_expansion(1, 5, 30)


def test_eta_product_mismatch_rows():
    rows = eta_product_mismatch(50)
    assert len(rows) == 12
    by_pair = {(r.a, r.b): r for r in rows}
    anchor = by_pair[(1, 23)]
    assert anchor.first_mismatch_index == 2
    assert anchor.eta_coefficient == -1 and anchor.theta_coefficient == 0
    alt = by_pair[(12, 12)]
    assert alt.first_mismatch_index == 3
    assert all(r.first_mismatch_index <= 50 for r in rows)


def test_eq52_solutions():
    # 1*(6n-1)^2 + 23*(6m-1)^2 = 24: n = 0, m = 0 gives 1 + 23
    assert (0, 0) in eq52_solutions(1, 23, 24)
    assert eq52_solutions(1, 23, 12 * 43) == []
    assert eq52_solutions(1, 23, 24 * 43) == []


def test_eq52_12p_form_always_insoluble():
    # (6n-1)^2 = 1 mod 24, so the left side is a + b = 0 mod 24 while
    # 12p = 12 mod 24 for odd p: the printed form is insoluble outright.
    rows = eta_product_mismatch(50, split_prime_bound=200)
    for row in rows:
        assert row.eq52_12p_solvable_primes == ()


def test_eq52_24p_form_is_sometimes_soluble():
    # the true index equation can have solutions, so the corollary rests on
    # the coefficient comparison, not on insolvability.  At p = 59 the pair
    # (1,23) even matches theta pointwise: the two lattice points both carry
    # sign +1 and sum to a(59) = 2.
    assert eq52_solutions(1, 23, 24 * 59) == [(3, -1), (5, 1)]
    rows = eta_product_mismatch(50, split_prime_bound=200)
    by_pair = {(r.a, r.b): r for r in rows}
    assert 59 in by_pair[(1, 23)].eq52_24p_solvable_primes
    ex = eta_product_expansion(1, 23, 60)
    assert ex[59] == 2 == theta_coefficients(60).coefficient(59)
    # a split prime with an insoluble index equation still exists for every
    # pair and pins the coefficient there to 0 != 2
    assert 43 not in by_pair[(1, 23)].eq52_24p_solvable_primes
    assert ex[43] == 0 and theta_coefficients(60).coefficient(43) == 2

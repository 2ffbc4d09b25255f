"""Shared independent oracles for the test suite.

Everything here is deliberately naive: trial division over enumerated
irreducibles, schoolbook polynomial arithmetic.  Nothing imports the
package's own factorization or resultant paths.
"""

import functools
import itertools


def poly_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    while a and a[-1] % p == 0:
        a.pop()
    return a


def poly_divide(a, b, p):
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
    while q and q[-1] % p == 0:
        q.pop()
    return q


def monic_polys(deg, p):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


@functools.lru_cache(maxsize=None)
def irreducibles_up_to(maxdeg, p):
    irr = {d: [] for d in range(1, maxdeg + 1)}
    for d in range(1, maxdeg + 1):
        for cand in monic_polys(d, p):
            divisible = False
            for e in range(1, d // 2 + 1):
                for g in irr[e]:
                    if not poly_mod(cand, g, p):
                        divisible = True
                        break
                if divisible:
                    break
            if not divisible:
                irr[d].append(tuple(cand))
    return irr


def brute_cycle_type(coeffs, p):
    """Cycle type by trial division over monic irreducibles of degree up to
    deg/2 (a surviving remainder is necessarily one irreducible factor);
    None when a repeated factor shows up."""
    work = [c % p for c in coeffs]
    while work and work[-1] % p == 0:
        work.pop()
    deg = len(work) - 1
    half = max(deg // 2, 1)
    irr = irreducibles_up_to(half, p)
    parts = []
    for d in range(1, half + 1):
        for g in irr[d]:
            count = 0
            while len(work) - 1 >= d and not poly_mod(work, list(g), p):
                work = poly_divide(work, list(g), p)
                count += 1
            if count > 1:
                return None
            parts.extend([d] * count)
    if len(work) - 1 > 0:
        parts.append(len(work) - 1)
    return tuple(sorted(parts))

"""Integer utilities: primality, prime sieves, and exact factorization.

Everything here is deterministic.  Primality uses Miller-Rabin with a fixed
witness set that is proven correct for all n < 3.3 * 10^24, far beyond any
modulus this package touches.  Factorization is trial division up to a
configurable bound followed by Brent-cycle rho on cofactors of bounded size;
oversized cofactors are reported rather than guessed at.
"""

import math

# Witness set deterministic for n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT_DEFAULT = 10**6
_RHO_BIT_LIMIT = 96


def is_prime(n: int) -> bool:
    """Deterministic primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi."""
    if hi < lo or hi < 2:
        return []
    return [p for p in primes_up_to(hi) if p >= lo]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    while not is_prime(k):
        k += 1
    return k


def _brent_rho(n: int) -> int:
    """Nontrivial factor of composite odd n via Brent's cycle method.

    Deterministic: constants are swept in a fixed order until a factor
    appears, which for composite n always happens.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _perfect_power(n: int) -> tuple[int, int]:
    """Return (b, k) with n = b^k and k maximal; (n, 1) if no power."""
    for k in range(n.bit_length(), 1, -1):
        b = round(n ** (1.0 / k))
        for cand in (b - 1, b, b + 1):
            if cand >= 2 and cand**k == n:
                sub, sk = _perfect_power(cand)
                return sub, sk * k
    return n, 1


def factorize(n: int, trial_limit: int = _TRIAL_LIMIT_DEFAULT) -> tuple[dict[int, int], bool]:
    """Factor |n| into primes.

    Returns (factors, complete).  factors maps prime -> exponent for the
    part that was split; complete is False when a cofactor above the rho
    bit budget survived, in which case it appears in factors under its own
    (composite) value with the flag cleared.
    """
    n = abs(n)
    if n <= 1:
        return {}, True
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    wi = 0
    while f * f <= n and f <= trial_limit:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += wheel[wi]
        wi = (wi + 1) % 8
    complete = True
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        b, k = _perfect_power(m)
        if k > 1:
            if is_prime(b):
                factors[b] = factors.get(b, 0) + k
                continue
            stack.extend([b] * k)
            continue
        if m.bit_length() > _RHO_BIT_LIMIT:
            factors[m] = factors.get(m, 0) + 1
            complete = False
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors, complete


def squarefree_part(n: int) -> tuple[int, bool]:
    """Signed squarefree part of n: the d with n = d * (square), d squarefree.

    Returns (d, complete); an incomplete factorization leaves the unsplit
    cofactor inside d and clears the flag.
    """
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    factors, complete = factorize(n)
    d = sign
    for p, e in factors.items():
        if e % 2:
            d *= p
    return d, complete


def is_square(n: int) -> bool:
    """True iff n is a perfect square of an integer."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n

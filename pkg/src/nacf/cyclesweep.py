"""Fast deterministic cycle-type engines.

Two accelerated paths replicate modp.factor_cycle_type bit for bit on
squarefree reductions:

* cycle_types_batched -- one polynomial, many primes at once (numpy int64).
  Builds the matrix of the p-power map on Z/p[x]/(f) per prime and reads
  the factor-degree counts from traces of its powers: the trace of the
  k-th power equals the summed degrees of factors whose degree divides k.
  Requires every prime to exceed deg f so traces are unambiguous mod p.

* cycle_type_charpoly -- one polynomial, one prime, large degree.  The
  characteristic polynomial of the p-power matrix is the product of
  (t^d - 1) over factor degrees d; greedy extraction of the lowest
  surviving term recovers the multiset.  Also requires p > deg f.

Callers must pre-filter ramified primes (p dividing the discriminant or
the leading coefficient); both engines assume a squarefree reduction.
Primes p <= deg f go through the pure modp path instead.
"""

from __future__ import annotations

import numpy as np

from .polyz import IntPolynomial

# int64 products p^2 * deg must not overflow; 2^25 leaves room for deg <= 512.
_P_LIMIT_BATCHED = 1 << 25


def _counts_to_type(counts: dict[int, int], total: int) -> tuple[int, ...]:
    parts: list[int] = []
    acc = 0
    for e, c in counts.items():
        parts.extend([e] * c)
        acc += e * c
    if acc < total:
        parts.append(total - acc)
    return tuple(sorted(parts))


def _types_from_subfield_degrees(s: np.ndarray, d: int) -> list[tuple[int, ...]]:
    """Recover cycle types from s[k] = sum of factor degrees dividing k, k <= d//2."""
    out = []
    kmax = d // 2
    for row in s:
        counts: dict[int, int] = {}
        for k in range(1, kmax + 1):
            t = int(row[k]) - sum(e * c for e, c in counts.items() if k % e == 0)
            if t < 0 or t % k:
                raise ArithmeticError("inconsistent factor-degree data")
            if t:
                counts[k] = t // k
        out.append(_counts_to_type(counts, d))
    return out


def cycle_types_batched(f: IntPolynomial, primes) -> list[tuple[int, ...]]:
    """Cycle types of f mod p for every p in primes (sorted degree multisets).

    Preconditions: f monic with deg >= 2, every p prime, p > deg f,
    p < 2^25, and p unramified (squarefree reduction).
    """
    d = f.degree
    if d < 2:
        raise ValueError("degree must be >= 2")
    if f.leading != 1:
        raise ValueError("monic polynomial required")
    P = np.asarray(primes, dtype=np.int64)
    if P.size == 0:
        return []
    if int(P.min()) <= d or int(P.max()) >= _P_LIMIT_BATCHED:
        raise ValueError("batched engine needs deg f < p < 2^25")
    n = P.size
    fm = np.empty((n, d + 1), dtype=np.int64)
    for i in range(d + 1):
        fm[:, i] = f[i] % P

    def reduce_tail(c):
        # c has width d + extra; fold x^k = -(f mod x^d) * x^{k-d} downward
        for k in range(c.shape[1] - 1, d - 1, -1):
            ck = c[:, k]
            c[:, k - d : k] = (c[:, k - d : k] - ck[:, None] * fm[:, :d]) % P[:, None]
            c[:, k] = 0
        return c[:, :d]

    def mul(a, b):
        c = np.zeros((n, 2 * d - 1), dtype=np.int64)
        for i in range(d):
            c[:, i : i + d] += a[:, i : i + 1] * b
            c %= P[:, None]
        return reduce_tail(c)

    # h = x^p mod f, left-to-right square and multiply on each prime's bits
    maxbits = int(P.max()).bit_length()
    cur = np.zeros((n, d), dtype=np.int64)
    cur[:, 1] = 1
    started = np.zeros(n, dtype=bool)
    for bit in range(maxbits - 1, -1, -1):
        bits = (P >> bit) & 1
        if started.any():
            sq = mul(cur, cur)
            cur = np.where(started[:, None], sq, cur)
            m = started & (bits == 1)
            if m.any():
                c = np.zeros((n, d + 1), dtype=np.int64)
                c[:, 1:] = cur
                shifted = reduce_tail(c)
                cur = np.where(m[:, None], shifted, cur)
        started |= bits == 1
    h = cur

    # rows of M are h^i: the matrix of v -> v^p in the power basis
    M = np.zeros((n, d, d), dtype=np.int64)
    M[:, 0, 0] = 1
    M[:, 1, :] = h
    r = h
    for i in range(2, d):
        r = mul(r, h)
        M[:, i, :] = r

    kmax = d // 2
    s = np.zeros((n, kmax + 1), dtype=np.int64)
    s[:, 1] = np.trace(M, axis1=1, axis2=2) % P
    X = M
    for k in range(2, kmax + 1):
        X = np.matmul(X, M) % P[:, None, None]
        s[:, k] = np.trace(X, axis1=1, axis2=2) % P
    return _types_from_subfield_degrees(s, d)


def cycle_type_charpoly(f: IntPolynomial, p: int) -> tuple[int, ...]:
    """Cycle type of f mod p for a single large-degree polynomial.

    Preconditions: f monic, deg f >= 2, p prime with deg f < p < 2^25,
    p unramified (squarefree reduction).
    """
    d = f.degree
    if d < 2:
        raise ValueError("degree must be >= 2")
    if f.leading != 1:
        raise ValueError("monic polynomial required")
    if p <= d or p >= _P_LIMIT_BATCHED:
        raise ValueError("charpoly engine needs deg f < p < 2^25")
    fm = np.array([f[i] % p for i in range(d + 1)], dtype=np.int64)

    # reduction table: row j holds x^{d+j} mod f
    R = np.zeros((d - 1, d), dtype=np.int64) if d >= 2 else np.zeros((0, d), dtype=np.int64)
    row = (-fm[:d]) % p
    if d >= 2:
        R[0] = row
        for j in range(1, d - 1):
            lead = row[d - 1]
            row = np.concatenate(([0], row[: d - 1]))
            row = (row + lead * R[0]) % p
            R[j] = row

    def mulmod(a, b):
        c = np.convolve(a, b) % p
        if len(c) <= d:
            out = np.zeros(d, dtype=np.int64)
            out[: len(c)] = c
            return out
        return (c[:d] + c[d:] @ R[: len(c) - d]) % p

    h = np.zeros(d, dtype=np.int64)
    h[1] = 1
    for bit in bin(p)[3:]:
        h = mulmod(h, h)
        if bit == "1":
            c = np.concatenate(([0], h))
            h = (c[:d] + c[d:] @ R[:1]) % p

    M = np.zeros((d, d), dtype=np.int64)
    M[0, 0] = 1
    M[1] = h
    r = h
    for i in range(2, d):
        r = mulmod(r, h)
        M[i] = r

    H = _hessenberg_mod(M, p)
    charpoly = _hessenberg_charpoly(H, p)
    return _extract_unit_cyclotomic_parts(charpoly, d, p)


def _hessenberg_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Similarity reduction to upper Hessenberg form over Z/p."""
    H = M.copy()
    d = H.shape[0]
    for j in range(d - 2):
        piv = int(H[j + 1, j])
        if piv == 0:
            nz = np.nonzero(H[j + 2 :, j])[0]
            if nz.size == 0:
                continue
            r = j + 2 + int(nz[0])
            H[[j + 1, r]] = H[[r, j + 1]]
            H[:, [j + 1, r]] = H[:, [r, j + 1]]
            piv = int(H[j + 1, j])
        inv = pow(piv, p - 2, p)
        mult = H[j + 2 :, j] * inv % p
        H[j + 2 :] = (H[j + 2 :] - mult[:, None] * H[j + 1]) % p
        H[:, j + 1] = (H[:, j + 1] + H[:, j + 2 :] @ mult) % p
    return H


def _hessenberg_charpoly(H: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial coefficients (ascending) of Hessenberg H mod p."""
    d = H.shape[0]
    P = np.zeros((d + 1, d + 1), dtype=np.int64)
    P[0, 0] = 1
    for k in range(1, d + 1):
        poly = np.concatenate(([0], P[k - 1][:d])) % p  # t * P[k-1]
        poly = (poly - int(H[k - 1, k - 1]) * P[k - 1]) % p
        beta = 1
        weights = np.zeros(k - 1, dtype=np.int64)
        for m in range(1, k):
            beta = beta * int(H[k - m, k - m - 1]) % p
            if beta == 0:
                break
            weights[k - 1 - m] = int(H[k - 1 - m, k - 1]) * beta % p
        if k > 1 and weights.any():
            poly = (poly - weights @ P[: k - 1]) % p
        P[k] = poly
    return P[d] % p


def _extract_unit_cyclotomic_parts(c: np.ndarray, d: int, p: int) -> tuple[int, ...]:
    """Read the multiset {d_i} out of prod_i (t^{d_i} - 1) mod p (needs p > d)."""
    parts: list[int] = []
    deg = d
    c = c.copy()
    while deg > 0:
        nz = np.nonzero(c[1 : deg + 1])[0]
        if nz.size == 0:
            raise ArithmeticError("characteristic polynomial is not a unit-cyclotomic product")
        e = int(nz[0]) + 1
        q = np.zeros(deg - e + 1, dtype=np.int64)
        for i in range(deg - e, -1, -1):
            acc = int(c[i + e])
            if i + e <= deg - e:
                acc += int(q[i + e])
            q[i] = acc % p
        # remainder check: low-order terms must equal -q's low block
        for i in range(e):
            want = (-q[i]) % p if i <= deg - e else 0
            if int(c[i]) % p != want:
                raise ArithmeticError("inexact division by t^e - 1")
        parts.append(e)
        c = np.zeros(d + 1, dtype=np.int64)
        c[: deg - e + 1] = q
        deg -= e
    return tuple(sorted(parts))

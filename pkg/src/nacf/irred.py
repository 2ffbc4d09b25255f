"""Irreducibility certificates over the integers.

Three theoretical certificate routes cover the triangular family: a shifted
Eisenstein criterion when n+1 is prime, a root-of-unity exclusion argument
when n is prime, and a coefficient-comparison argument when n is a prime
power.  Everything else goes through the degree-set sieve: factor-degree
multisets modulo several unramified primes constrain the degrees any true
integer factor could have, and an empty constraint set certifies
irreducibility.  The sieve can stay Unknown forever on genuinely reducible
inputs or on swapping-resistant ones (x^4 + 1 style), which is fine: it
never overclaims, and explicit Reducible verdicts come only from integer
roots found by the rational-root check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import modp
from .cyclesweep import cycle_type_charpoly
from .discrim import disc_mf1n_closed
from .numutil import factorize, is_prime, next_prime
from .polyz import IntPolynomial, build_f1n, build_mf1n, shift_by_one

KIND_EISENSTEIN_SHIFT = "EisensteinShift"
KIND_PRIME_N = "PrimeN"
KIND_PRIME_POWER_N = "PrimePowerN"
KIND_DEGREE_SET_SIEVE = "DegreeSetSieve"
KIND_QUADRATIC_NEGATIVE_DISC = "QuadraticNegativeDisc"
KIND_NONE = "None"

VERDICT_IRREDUCIBLE = "Irreducible"
VERDICT_REDUCIBLE = "Reducible"
VERDICT_UNKNOWN = "Unknown"

_CHARPOLY_DEGREE_CUTOFF = 30
_CANDIDATE_CAP_FACTOR = 10


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Certificate kind, verdict, and its supporting witness data."""

    kind: str
    verdict: str
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.kind == KIND_NONE) != (self.verdict == VERDICT_UNKNOWN):
            raise ValueError("kind None exactly corresponds to verdict Unknown")


def theoretical_certificate(n: int) -> IrreducibilityCertificate:
    """Certificate for build_f1n(n) from the structure of n alone.

    Priority EisensteinShift > PrimeN > PrimePowerN; every applicable kind
    is listed in details["applicable"].  The Eisenstein certificate is only
    emitted after verifying the divisibility pattern on the actual shifted
    coefficients.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    applicable = []
    details: dict = {}
    if is_prime(n + 1) and _eisenstein_shift_verified(n):
        applicable.append(KIND_EISENSTEIN_SHIFT)
        details["shift_prime"] = n + 1
    if is_prime(n):
        applicable.append(KIND_PRIME_N)
        details["prime"] = n
    base_exp = _prime_power(n)
    if base_exp is not None and base_exp[1] >= 2:
        applicable.append(KIND_PRIME_POWER_N)
        details["base"], details["exponent"] = base_exp
    if not applicable:
        return IrreducibilityCertificate(KIND_NONE, VERDICT_UNKNOWN)
    details["applicable"] = tuple(applicable)
    return IrreducibilityCertificate(applicable[0], VERDICT_IRREDUCIBLE, details)


def _eisenstein_shift_verified(n: int) -> bool:
    """Check that every non-leading coefficient of f(x+1) is divisible by
    n+1 and the constant term not by (n+1)^2."""
    q = n + 1
    shifted = shift_by_one(build_f1n(n))
    if any(shifted[i] % q for i in range(shifted.degree)):
        return False
    return shifted[0] % (q * q) != 0


def _prime_power(n: int) -> tuple[int, int] | None:
    factors, complete = factorize(n)
    if complete and len(factors) == 1:
        ((p, k),) = factors.items()
        return p, k
    return None


def integer_roots(f: IntPolynomial) -> list[int]:
    """All integer roots, from divisors of the constant term under the
    Cauchy bound.  A zero constant term contributes the root 0."""
    roots = []
    g = f
    if g[0] == 0:
        roots.append(0)
        coeffs = list(g.coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        g = IntPolynomial(coeffs)
        if g.degree < 1:
            return roots
    bound = 1 + max(abs(c) for c in g.coeffs) // abs(g.leading)
    factors, complete = factorize(g[0])
    divisors = [1]
    for p, e in factors.items():
        divisors = [d * p**i for d in divisors for i in range(e + 1) if d * p**i <= bound]
    if not complete:
        divisors = list(range(1, min(bound, 10**6) + 1))
    for d in sorted(set(divisors)):
        if g(d) == 0:
            roots.append(d)
        if g(-d) == 0:
            roots.append(-d)
    return roots


def _cycle_type_for(f: IntPolynomial, p: int) -> modp.CycleType:
    """Dispatch between the pure and the accelerated cycle-type engines."""
    if f.degree >= _CHARPOLY_DEGREE_CUTOFF and p > f.degree and f.leading == 1:
        fbar = modp.reduce_mod_p(f, p)
        if _squarefree_mod(fbar):
            return modp.CycleType(degrees=cycle_type_charpoly(f, p), squarefree=True)
        return modp.CycleType(degrees=(), squarefree=False)
    return modp.factor_cycle_type(modp.reduce_mod_p(f, p))


def _squarefree_mod(fbar: modp.ModPolynomial) -> bool:
    p = fbar.modulus.p
    work = modp._monic(list(fbar.coeffs), p)
    return len(modp._gcd(work, modp._derivative(work, p), p)) == 1


def degree_set_sieve(f: IntPolynomial, prime_budget: int = 200) -> IrreducibilityCertificate:
    """Intersect achievable factor degrees across unramified primes.

    Each squarefree reduction contributes the subset sums of its cycle
    type; if the running intersection meets (0, deg f) nowhere, no proper
    factor degree is possible and f is irreducible.  Witness primes are
    stored for re-checking.
    """
    if f.degree < 2:
        raise ValueError("sieve requires degree >= 2")
    if f.content() != 1:
        raise ValueError("sieve requires a primitive polynomial")
    deg = f.degree
    proper_mask = ((1 << deg) - 1) & ~1  # bits 1 .. deg-1
    surviving = (1 << (deg + 1)) - 1
    witnesses: list[int] = []
    used = 0
    tried = 0
    p = deg if deg >= _CHARPOLY_DEGREE_CUTOFF else 1
    while used < prime_budget and tried < _CANDIDATE_CAP_FACTOR * prime_budget:
        p = next_prime(p)
        tried += 1
        if f.leading % p == 0:
            continue
        ct = _cycle_type_for(f, p)
        if not ct.squarefree:
            continue
        used += 1
        mask = 1
        for part in ct.degrees:
            mask |= mask << part
        surviving &= mask
        witnesses.append(p)
        if surviving & proper_mask == 0:
            return IrreducibilityCertificate(
                KIND_DEGREE_SET_SIEVE,
                VERDICT_IRREDUCIBLE,
                {"witness_primes": tuple(witnesses), "primes_used": used},
            )
    return IrreducibilityCertificate(
        KIND_NONE,
        VERDICT_UNKNOWN,
        {
            "witness_primes": tuple(witnesses),
            "primes_used": used,
            "surviving_degrees": tuple(
                d for d in range(1, deg) if surviving >> d & 1
            ),
        },
    )


def recheck_sieve_certificate(f: IntPolynomial, cert: IrreducibilityCertificate) -> bool:
    """Recompute the degree-set intersection over the stored witness primes."""
    if cert.kind != KIND_DEGREE_SET_SIEVE:
        raise ValueError("not a sieve certificate")
    deg = f.degree
    surviving = (1 << (deg + 1)) - 1
    for p in cert.details["witness_primes"]:
        ct = _cycle_type_for(f, p)
        if not ct.squarefree:
            return False
        mask = 1
        for part in ct.degrees:
            mask |= mask << part
        surviving &= mask
    return surviving & (((1 << deg) - 1) & ~1) == 0


@dataclass(frozen=True)
class ScanRow:
    n: int
    m: int | None
    kind: str
    verdict: str
    applicable: tuple[str, ...] = ()
    sieve_verdict: str = VERDICT_UNKNOWN
    witness_primes: tuple[int, ...] = ()


def scan_one(n: int, m: int | None = None, prime_budget: int = 200) -> ScanRow:
    """Irreducibility verdict for one family member.

    With m absent this is build_f1n(n): theoretical certificates are tried
    first and the sieve always runs as an independent computational witness.
    With m present it is build_mf1n(m, n): a negative-discriminant shortcut
    handles the quadratic case and the sieve does the rest.
    """
    if m is None:
        f = build_f1n(n)
        cert = theoretical_certificate(n)
        if f.degree < 2:
            # linear polynomials are irreducible outright
            sieve = IrreducibilityCertificate(
                KIND_DEGREE_SET_SIEVE, VERDICT_IRREDUCIBLE, {"witness_primes": ()}
            )
        else:
            sieve = degree_set_sieve(f, prime_budget)
        if cert.verdict == VERDICT_IRREDUCIBLE:
            return ScanRow(
                n=n,
                m=None,
                kind=cert.kind,
                verdict=VERDICT_IRREDUCIBLE,
                applicable=cert.details.get("applicable", ()),
                sieve_verdict=sieve.verdict,
                witness_primes=sieve.details.get("witness_primes", ()),
            )
        verdict = sieve.verdict
        if verdict == VERDICT_UNKNOWN and integer_roots(f):
            verdict = VERDICT_REDUCIBLE
        return ScanRow(
            n=n,
            m=None,
            kind=sieve.kind,
            verdict=verdict,
            sieve_verdict=sieve.verdict,
            witness_primes=sieve.details.get("witness_primes", ()),
        )
    f = build_mf1n(m, n)
    if f.degree == 2 and disc_mf1n_closed(m, 3) < 0:
        return ScanRow(
            n=n, m=m, kind=KIND_QUADRATIC_NEGATIVE_DISC, verdict=VERDICT_IRREDUCIBLE
        )
    sieve = degree_set_sieve(f, prime_budget)
    verdict = sieve.verdict
    if verdict == VERDICT_UNKNOWN and integer_roots(f):
        verdict = VERDICT_REDUCIBLE
    return ScanRow(
        n=n,
        m=m,
        kind=sieve.kind,
        verdict=verdict,
        sieve_verdict=sieve.verdict,
        witness_primes=sieve.details.get("witness_primes", ()),
    )


def conjecture_scan(
    n_lo: int, n_hi: int, m: int | None = None, prime_budget: int = 200
) -> list[ScanRow]:
    """One verdict row per n in [n_lo, n_hi] for the selected family."""
    if n_lo > n_hi:
        raise ValueError("empty scan range")
    lo = max(n_lo, 3 if m is not None else 2)
    return [scan_one(n, m, prime_budget) for n in range(lo, n_hi + 1)]

"""Simultaneous root finding with residual certification.

The solver runs Aberth-Ehrlich sweeps in double precision from
deterministic perturbed-circle starting points.  Iterates that wander
outside the unit circle are evaluated through the reversed polynomial in
w = 1/z, which keeps magnitudes bounded for high degrees.  If the residual
target cannot be met in doubles, the solve escalates to mpmath with the
working precision doubled per retry (four retries, then an explicit
failure).

Certification: around each approximation z the disk of radius
deg * |f(z)/f'(z)| contains at least one true root (the log-derivative
bound), so per-root modulus intervals use that radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from .polyz import IntPolynomial, build_f1n, build_fpN

_MAX_SWEEPS = 1000
_MP_RETRIES = 4


class RootSolveError(RuntimeError):
    """Raised when the iteration fails to reach the residual target."""


@dataclass(frozen=True)
class ComplexRootSet:
    """All roots of a polynomial with residuals and certified modulus bands."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    radii: tuple[float, ...]
    tol: float
    precision_bits: int = 53

    @property
    def modulus_bounds(self) -> tuple[tuple[float, float], ...]:
        """Per-root interval [|z| - r, |z| + r] from the certification radius."""
        return tuple((abs(z) - r, abs(z) + r) for z, r in zip(self.roots, self.radii))


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking a root-modulus bound for one polynomial."""

    degree: int
    min_modulus: float
    max_modulus: float
    lower: float
    upper: float
    bound_ok: bool
    max_unit_deviation: float
    eps_num: float
    vacuous: bool = False
    intervals: tuple[tuple[float, float], ...] = field(default=(), repr=False)


def _aberth_double(coeffs: list[float], tol: float):
    d = len(coeffs) - 1
    c_asc = np.array(coeffs, dtype=float)
    c_desc = c_asc[::-1]
    dc_desc = (np.arange(1, d + 1) * c_asc[1:])[::-1]
    # reversed polynomial g(w) = w^d f(1/w): descending coeffs of g = ascending of f
    g_desc = c_asc
    dg_desc = (np.arange(1, d + 1) * c_asc[::-1][1:])[::-1]

    radius = abs(c_asc[0] / c_asc[-1]) ** (1.0 / d) if c_asc[0] != 0 else 1.0
    if radius == 0.0:
        radius = 1.0
    k = np.arange(d)
    z = radius * np.exp(1j * (2 * np.pi * k / d + 0.7 / d + 0.4))

    fz = np.zeros(d, dtype=complex)
    newt = np.zeros(d, dtype=complex)
    best_z = z.copy()
    best_res = float("inf")
    stall = 0
    for sweep in range(_MAX_SWEEPS):
        near = np.abs(z) <= 1.0
        if near.any():
            zs = z[near]
            v = np.polyval(c_desc, zs)
            vp = np.polyval(dc_desc, zs)
            fz[near] = v
            safe = np.where(vp == 0, 1.0, vp)
            newt[near] = np.where(vp == 0, 0.1, v / safe)
        far = ~near
        if far.any():
            zb = z[far]
            w = 1.0 / zb
            gw = np.polyval(g_desc, w)
            gpw = np.polyval(dg_desc, w)
            denom = d * gw - w * gpw
            with np.errstate(over="ignore", invalid="ignore"):
                fz[far] = zb**d * gw
            safe = np.where(denom == 0, 1.0, denom)
            newt[far] = np.where(denom == 0, 0.1, zb * gw / safe)
        res = np.abs(fz)
        if np.all(np.isfinite(res)):
            worst = float(res.max())
            if worst < 0.9 * best_res:
                stall = 0
            else:
                stall += 1
            if worst < best_res:
                best_res = worst
                best_z = z.copy()
            if worst < tol:
                return z, sweep
            # residual plateau: the iteration sits at its rounding floor
            if stall >= 12:
                return best_z, (sweep if best_res < tol else -1)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            repulse = np.sum(1.0 / diff, axis=1) - 1.0
            corr = newt / (1.0 - newt * repulse)
        corr = np.where(np.isfinite(corr), corr, newt)
        # keep steps proportionate so transients cannot fling iterates away
        mag = np.abs(corr)
        lim = 0.2 * np.maximum(np.abs(z), 0.5)
        scale = np.where(mag > lim, lim / np.where(mag == 0, 1.0, mag), 1.0)
        step = corr * scale
        z = z - step
        # stagnation: the iteration reached its floating-point fixed point,
        # so further sweeps only shuffle rounding noise
        if np.max(np.abs(step) / (1.0 + np.abs(z))) < 64 * np.finfo(float).eps:
            return best_z, (sweep if best_res < tol else -1)
    return best_z, (_MAX_SWEEPS - 1 if best_res < tol else -1)


def _aberth_mp(coeffs: list[int], tol: float, prec_bits: int, warm_start=None):
    d = len(coeffs) - 1
    with mp.workprec(prec_bits):
        c = [mp.mpc(x) for x in coeffs]
        dc = [mp.mpc(i * coeffs[i]) for i in range(1, d + 1)]
        if warm_start is not None:
            z = [mp.mpc(v) for v in warm_start]
        else:
            radius = mp.mpf(abs(coeffs[0])) / abs(coeffs[-1])
            radius = radius ** (mp.mpf(1) / d) if radius != 0 else mp.mpf(1)
            z = [radius * mp.exp(1j * (2 * mp.pi * k / d + mp.mpf(0.7) / d + mp.mpf("0.4"))) for k in range(d)]

        def val(poly, x):
            acc = mp.mpc(0)
            for cc in reversed(poly):
                acc = acc * x + cc
            return acc

        for sweep in range(_MAX_SWEEPS):
            fz = [val(c, zi) for zi in z]
            if max(abs(v) for v in fz) < tol:
                return z, sweep, prec_bits
            new_z = []
            for i, zi in enumerate(z):
                vp = val(dc, zi)
                ni = fz[i] / vp if vp != 0 else mp.mpc(0.1)
                s = mp.mpc(0)
                for j, zj in enumerate(z):
                    if j != i and zi != zj:
                        s += 1 / (zi - zj)
                denom = 1 - ni * s
                corr = ni / denom if denom != 0 else ni
                new_z.append(zi - corr)
            z = new_z
    return z, -1, prec_bits


def solve_roots(f: IntPolynomial, tol: float = 1e-9) -> ComplexRootSet:
    """All complex roots of f with residuals below tol.

    Deterministic for fixed (f, tol).  Escalates to multiprecision when
    double precision cannot reach tol; raises RootSolveError after the
    retry budget.
    """
    if f.degree < 1:
        raise ValueError("root solving requires degree >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    d = f.degree
    if d == 1:
        z = complex(-f[0] / f[1])
        # linear: the root is exact up to one division rounding
        resid = abs(f[0] + f[1] * z)
        return ComplexRootSet(roots=(z,), residuals=(resid,), radii=(abs(z) * 1e-15,), tol=tol)

    coeffs = [float(c) for c in f.coeffs]
    warm = None
    if all(math.isfinite(c) for c in coeffs):
        z, sweeps = _aberth_double(coeffs, tol)
        if sweeps < 0:
            # the plain residual estimate saturates at its rounding floor;
            # an accurate re-evaluation often shows tol is already met
            res = _residuals_compensated(np.array(coeffs), np.asarray(z, dtype=complex))
            if np.all(np.isfinite(res)) and res.max() < tol:
                sweeps = _MAX_SWEEPS
        if sweeps >= 0:
            return _certify(f, [complex(v) for v in z], tol, 53)
        warm = [complex(v) for v in z]  # near-converged seed for the retries

    prec = 106
    for _ in range(_MP_RETRIES):
        z, sweeps, prec_used = _aberth_mp(list(f.coeffs), tol, prec, warm_start=warm)
        if sweeps >= 0:
            return _certify(f, [complex(v) for v in z], tol, prec_used, exact_z=z)
        warm = z
        prec *= 2
    raise RootSolveError(f"no convergence to tol={tol} for degree {d} after multiprecision retries")


def _certify(f: IntPolynomial, roots: list[complex], tol: float, prec: int, exact_z=None):
    d = f.degree
    if exact_z is not None:
        # multiprecision path: evaluate at the high-precision iterates
        fp = f.derivative()
        residuals = []
        radii = []
        with mp.workprec(max(prec, 106)):
            for zi in exact_z:
                z = mp.mpc(zi)
                v = _mp_eval(f.coeffs, z)
                vp = _mp_eval(fp.coeffs, z)
                residuals.append(float(abs(v)))
                radii.append(float(d * abs(v) / abs(vp)) if vp != 0 else float("inf"))
        return ComplexRootSet(
            roots=tuple(roots), residuals=tuple(residuals), radii=tuple(radii),
            tol=tol, precision_bits=prec,
        )

    z = np.asarray(roots, dtype=complex)
    c_asc = np.array([float(x) for x in f.coeffs])
    _, fpz, err = _eval_split(c_asc, z)
    residuals = _residuals_compensated(c_asc, z)
    # compensated evaluation leaves only second-order rounding in err
    err = np.finfo(float).eps * residuals + np.finfo(float).eps * err
    with np.errstate(divide="ignore", invalid="ignore"):
        radii = d * (residuals + err) / np.abs(fpz)
    radii = np.where(np.isfinite(radii), radii, float("inf"))
    return ComplexRootSet(
        roots=tuple(complex(v) for v in z),
        residuals=tuple(float(r) for r in residuals),
        radii=tuple(float(r) for r in radii),
        tol=tol,
        precision_bits=prec,
    )


_SPLITTER = 134217729.0  # 2^27 + 1, Dekker splitting constant for doubles


def _two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLITTER * b
    bh = cb - (cb - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _comp_horner(c_desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Compensated Horner evaluation of a real-coefficient polynomial at
    complex points: one extra working variable carries the rounding errors,
    giving close to double-double accuracy for the dominant cancellation."""
    xr, xi = z.real.astype(float), z.imag.astype(float)
    sr = np.full(z.shape, float(c_desc[0]))
    si = np.zeros(z.shape)
    er = np.zeros(z.shape)
    ei = np.zeros(z.shape)
    for ck in c_desc[1:]:
        p1, e1 = _two_prod(sr, xr)
        p2, e2 = _two_prod(si, xi)
        p3, e3 = _two_prod(sr, xi)
        p4, e4 = _two_prod(si, xr)
        rr, e5 = _two_sum(p1, -p2)
        ri, e6 = _two_sum(p3, p4)
        nr, e7 = _two_sum(rr, float(ck))
        er, ei = (
            er * xr - ei * xi + (e1 - e2 + e5 + e7),
            er * xi + ei * xr + (e3 + e4 + e6),
        )
        sr, si = nr, ri
    return (sr + er) + 1j * (si + ei)


def _residuals_compensated(c_asc: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Accurate |f(z)|.  Direct evaluation whenever |z|^deg stays in range
    (rounding w = 1/z perturbs the evaluation point, so the reversed form
    is a last resort against overflow only)."""
    d = len(c_asc) - 1
    out = np.empty(z.shape, dtype=float)
    az = np.abs(z)
    with np.errstate(divide="ignore"):
        direct = np.where(az > 0, d * np.log2(np.maximum(az, 1e-300)), 0.0) < 500.0
    if direct.any():
        out[direct] = np.abs(_comp_horner(c_asc[::-1], z[direct]))
    far = ~direct
    if far.any():
        zb = z[far]
        w = 1.0 / zb
        gw = _comp_horner(c_asc, w)
        out[far] = np.abs(zb**d * gw)
    return out


def _eval_split(c_asc: np.ndarray, z: np.ndarray):
    """f(z), f'(z), and a Horner rounding-error bound on |f(z)|, evaluated
    through the reversed polynomial where |z| > 1 to avoid overflow."""
    d = len(c_asc) - 1
    c_desc = c_asc[::-1]
    dc_desc = (np.arange(1, d + 1) * c_asc[1:])[::-1]
    g_desc = c_asc
    dg_desc = (np.arange(1, d + 1) * c_asc[::-1][1:])[::-1]
    abs_desc = np.abs(c_desc)
    abs_g_desc = np.abs(g_desc)
    gamma = 2.0 * (d + 1) * np.finfo(float).eps

    fz = np.empty(z.shape, dtype=complex)
    fpz = np.empty(z.shape, dtype=complex)
    err = np.empty(z.shape, dtype=float)
    near = np.abs(z) <= 1.0
    if near.any():
        zs = z[near]
        fz[near] = np.polyval(c_desc, zs)
        fpz[near] = np.polyval(dc_desc, zs)
        err[near] = gamma * np.polyval(abs_desc, np.abs(zs))
    far = ~near
    if far.any():
        zb = z[far]
        w = 1.0 / zb
        gw = np.polyval(g_desc, w)
        gpw = np.polyval(dg_desc, w)
        zd = zb**d
        fz[far] = zd * gw
        fpz[far] = zd / zb * (d * gw - w * gpw)
        err[far] = gamma * np.abs(zd) * np.polyval(abs_g_desc, np.abs(w))
    return fz, fpz, err


def _mp_eval(coeffs, z):
    acc = mp.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def check_bounds_f1n(n: int, tol: float = 1e-9) -> BoundReport:
    """Verify that every root modulus of build_f1n(n) lies in
    [1 - eps_num, (n+1)^(2/n) + eps_num), reporting the unit-circle trend."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f = build_f1n(n)
    upper = (n + 1) ** (2.0 / n)
    return _check_annulus(f, lower=1.0, upper=upper, tol=tol)


def check_bounds_fpN(p: int, big_n: int, tol: float = 1e-9) -> BoundReport:
    """Verify that every root modulus of build_fpN(p, big_n) lies in
    [p - eps_num, p^2 + eps_num).  Degree-zero quotients are vacuously true."""
    f = build_fpN(p, big_n)
    if f.degree < 1:
        return BoundReport(
            degree=f.degree,
            min_modulus=float("nan"),
            max_modulus=float("nan"),
            lower=float(p),
            upper=float(p * p),
            bound_ok=True,
            max_unit_deviation=float("nan"),
            eps_num=0.0,
            vacuous=True,
        )
    return _check_annulus(f, lower=float(p), upper=float(p * p), tol=tol)


def _check_annulus(f: IntPolynomial, lower: float, upper: float, tol: float) -> BoundReport:
    rs = solve_roots(f, tol)
    intervals = rs.modulus_bounds
    eps = max(rs.radii) + 1e-12
    ok = all(lo >= lower - eps and hi < upper + eps for lo, hi in intervals)
    mods = [abs(z) for z in rs.roots]
    return BoundReport(
        degree=f.degree,
        min_modulus=min(mods),
        max_modulus=max(mods),
        lower=lower,
        upper=upper,
        bound_ok=ok,
        max_unit_deviation=max(abs(m - 1.0) for m in mods),
        eps_num=eps,
        intervals=intervals,
    )

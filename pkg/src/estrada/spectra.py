"""Exact spectral reference machinery: dense symmetric eigensolver,
Estrada index, spectral moments, and an independent power-iteration
estimate of the spectral radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrices import SymNonnegMatrix, frobenius_norm

__all__ = [
    "Spectrum",
    "JacobiConvergenceError",
    "eigenvalues",
    "estrada_index",
    "spectral_moment",
    "power_radius",
]

# Termination: max |off-diagonal| <= JACOBI_TOL * frobenius_norm, within
# at most JACOBI_SWEEP_CAP cyclic sweeps.
JACOBI_TOL = 1e-12
JACOBI_SWEEP_CAP = 50


class JacobiConvergenceError(RuntimeError):
    """Eigensolver failed to reach its off-diagonal tolerance.

    Practically unreachable for symmetric input; carries the residual
    (max off-diagonal magnitude) at the sweep cap.
    """

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi sweeps exhausted after {sweeps} sweeps, residual {residual:.3e}"
        )
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the solver's final residual."""

    eigenvalues: tuple[float, ...]
    order: int
    residual: float

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues[0]


def eigenvalues(R: SymNonnegMatrix, *, sweep_cap: int = JACOBI_SWEEP_CAP) -> Spectrum:
    """Full spectrum of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run over the upper triangle in row-major order; elements
    already at or below the termination tolerance are not rotated.  The
    sweep order and rotation arithmetic are deterministic, so repeated
    calls produce bit-identical spectra.
    """
    n = R.ell
    a = R.entries.copy()
    fro = frobenius_norm(R)
    if n == 1 or fro == 0.0:
        vals = np.sort(np.diag(a))[::-1]
        return Spectrum(tuple(float(v) for v in vals), n, 0.0)
    tol = JACOBI_TOL * fro
    iu = np.triu_indices(n, 1)
    sweeps_done = 0
    while True:
        off = float(np.abs(a[iu]).max())
        if off <= tol:
            break
        if sweeps_done >= sweep_cap:
            raise JacobiConvergenceError(residual=off, sweeps=sweeps_done)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol:
                    continue
                h = a[q, q] - a[p, p]
                theta = h / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps_done += 1
    vals = np.sort(np.diag(a))[::-1]
    return Spectrum(tuple(float(v) for v in vals), n, off)


def estrada_index(s: Spectrum) -> float:
    """Sum of exp(eigenvalue), accumulated from the smallest eigenvalue up
    so the tiny terms are added first."""
    total = 0.0
    for lam in reversed(s.eigenvalues):
        total += math.exp(lam)
    return total


def spectral_moment(s: Spectrum, k: int) -> float:
    """k-th power sum of the eigenvalues (order 0 gives the matrix order)."""
    if k < 0:
        raise ValueError("moment order must be >= 0")
    if k == 0:
        return float(s.order)
    total = 0.0
    for lam in reversed(s.eigenvalues):
        total += lam ** k
    return total


def power_radius(R: SymNonnegMatrix, tol: float = 1e-12, kmax: int = 10000) -> float:
    """Spectral radius of a nonnegative symmetric matrix by shifted power
    iteration from the all-ones vector.

    Iterating with R + cI (c > 0) makes the largest eigenvalue strictly
    dominant in magnitude even when the spectrum contains -rho_1 (for a
    nonnegative matrix rho_1 + rho_min >= 0, so rho_1 + c beats
    |rho_min + c|).  The returned value is the Rayleigh quotient of R at
    the final iterate.
    """
    if tol <= 0.0:
        raise ValueError("tol must be > 0")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    n = R.ell
    a = R.entries
    v = np.full(n, 1.0 / math.sqrt(n))
    shift = 1.0 + float(np.diag(a).max())
    lam = 0.0
    have_prev = False
    for _ in range(kmax):
        rv = a @ v
        norm_rv = float(np.linalg.norm(rv))
        if norm_rv == 0.0:
            return 0.0
        new_lam = float(v @ rv)
        if have_prev and abs(new_lam - lam) <= tol:
            return new_lam
        lam = new_lam
        have_prev = True
        w = rv + shift * v
        v = w / float(np.linalg.norm(w))
    return lam

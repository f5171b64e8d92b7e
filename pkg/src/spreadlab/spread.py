"""Spread (spectral diameter) and the Perron eigenvalue."""

import math
from dataclasses import dataclass

import numpy as np

from .eigencore import Spectrum, as_square_matrix, eigenvalues, imag_tolerance
from .errors import NegativeEntry, PerronAnomaly

#: slack allowed when testing entrywise non-negativity.
NONNEG_TOL = 1e-12

PAIR_REAL_REAL = "real-real"
PAIR_REAL_NONREAL = "real-nonreal"
PAIR_NONREAL_NONREAL = "nonreal-nonreal"


@dataclass(frozen=True)
class SpreadResult:
    """Spread value plus the eigenvalue pair attaining it.

    ``perron`` is the Perron eigenvalue when the source matrix is
    entrywise non-negative and NaN otherwise.
    """

    value: float
    pair: tuple[complex, complex]
    pair_kind: str
    perron: float


def _is_nonnegative(arr) -> bool:
    return float(arr.min()) >= -NONNEG_TOL


def attain_tolerance(n: int, fro: float, rho: float) -> float:
    """How close to the spectral radius an eigenvalue must come to count
    as attaining it.

    A defective eigenvalue of multiplicity m is computed as a cluster of
    radius ~eps^(1/m) regardless of solver, so the flat 1e-8 term is
    widened by the worst-case cluster radius eps^(1/n); otherwise every
    nilpotent 0-1 digraph would be misreported as a solver failure.
    """
    eps = np.finfo(np.float64).eps
    return max(1e-8 * max(1.0, rho),
               4.0 * max(1.0, fro) * float(eps) ** (1.0 / n))


def _perron_from_spectrum(spec: Spectrum, fro: float) -> float:
    """Largest real part among the eigenvalues of maximum modulus."""
    moduli = np.abs(spec.values)
    rho = float(moduli.max())
    tol = attain_tolerance(spec.n, fro, rho)
    return float(max(v.real for v, m in zip(spec.values, moduli)
                     if m >= rho - tol))


def spread(a) -> SpreadResult:
    """Largest pairwise eigenvalue distance, with the attaining pair.

    Exact O(n^2) maximization over the canonical spectrum; strict
    improvement keeps the pair whose first member is lexicographically
    largest in (Re, Im), so ties resolve deterministically.
    """
    arr = as_square_matrix(a)
    spec = eigenvalues(arr)
    vals = spec.values
    n = len(vals)
    if n == 1:
        pair = (complex(vals[0]), complex(vals[0]))
        best = 0.0
    else:
        best = -1.0
        pair = (complex(vals[0]), complex(vals[1]))
        for i in range(n):
            for j in range(i + 1, n):
                d = abs(vals[i] - vals[j])
                if d > best:
                    best = d
                    pair = (complex(vals[i]), complex(vals[j]))
    tol_im = imag_tolerance(arr)
    nonreal = sum(1 for v in pair if abs(v.imag) > tol_im)
    kind = (PAIR_REAL_REAL, PAIR_REAL_NONREAL, PAIR_NONREAL_NONREAL)[nonreal]
    if _is_nonnegative(arr):
        lam = _perron_from_spectrum(spec, float(np.linalg.norm(arr)))
    else:
        lam = math.nan
    return SpreadResult(value=float(best), pair=pair, pair_kind=kind,
                        perron=lam)


def perron(a) -> float:
    """Spectral radius of a non-negative matrix.

    Perron-Frobenius guarantees a real non-negative attaining eigenvalue;
    its absence from the computed spectrum beyond the attainment
    tolerance is reported as PerronAnomaly, because it can only come from
    an eigensolver failure (defective-cluster round-off is already inside
    the tolerance; see attain_tolerance).
    """
    arr = as_square_matrix(a)
    if not _is_nonnegative(arr):
        raise NegativeEntry("matrix has a negative entry")
    spec = eigenvalues(arr)
    moduli = np.abs(spec.values)
    rho = float(moduli.max())
    tol = attain_tolerance(arr.shape[0], float(np.linalg.norm(arr)), rho)
    for v, m in zip(spec.values, moduli):
        if m >= rho - tol and abs(v.imag) <= tol:
            return rho
    raise PerronAnomaly(
        "no real eigenvalue attains the spectral radius within tolerance"
    )

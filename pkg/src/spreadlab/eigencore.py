"""Dense eigensolver front end.

Wraps the compiled pipeline (balance, Hessenberg, double-shift QR) with
input validation, the canonical eigenvalue ordering used everywhere in
reports, a symmetric-specialized path, and the Schur departure-from-
normality summary.  All results are immutable.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidMatrix, NonConvergence, NotSymmetric

#: floor of the non-real classification threshold; see imag_tolerance.
TOL_IM_FLOOR = 1e-9


def as_square_matrix(a) -> np.ndarray:
    """Validate and normalize input to a square float64 C-array."""
    arr = np.ascontiguousarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidMatrix(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidMatrix("matrix contains non-finite entries")
    return arr


def imag_tolerance(a) -> float:
    """Threshold below which an imaginary part is treated as round-off.

    max(1e-9, 1e-12 * ||A||_F): well above QR noise at desk scale, far
    below any genuine imaginary part of small 0-1 matrices.
    """
    fro = float(np.linalg.norm(np.asarray(a)))
    return max(TOL_IM_FLOOR, 1e-12 * fro)


def nonreal_cut(a) -> float:
    """Classification threshold for treating an eigenvalue as genuinely
    non-real (used by the non-real-only certificates).

    Repeated real eigenvalues split complex under round-off: a defective
    cluster of multiplicity m scatters at ~eps^(1/m), and reducible 0-1
    matrices routinely carry coupled copies of the same block (m up to
    n/2 at the Perron value, since a cluster there needs components of
    at least two vertices).  The cut therefore sits at the eps^(2/n)
    scale; an imaginary part below it cannot be distinguished from a
    split real cluster, and skipping such an eigenvalue is the safe
    direction (a certificate is merely not emitted).
    """
    arr = np.asarray(a)
    n = arr.shape[0]
    fro = float(np.linalg.norm(arr))
    eps = float(np.finfo(np.float64).eps)
    return max(imag_tolerance(arr), 8.0 * max(1.0, fro) * eps ** (2.0 / n))


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a real matrix, with multiplicity, in canonical order.

    Ordering: descending real part, ties by descending imaginary part,
    and each conjugate pair kept adjacent with the positive-imaginary
    member first.
    """

    values: np.ndarray  # complex128, read-only

    def __post_init__(self):
        self.values.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.values)

    @staticmethod
    def from_parts(wr, wi, tol_im: float) -> "Spectrum":
        vals = _canonical_order(np.asarray(wr, float), np.asarray(wi, float),
                                tol_im)
        return Spectrum(values=vals)


def _canonical_order(wr, wi, tol_im) -> np.ndarray:
    """Sort eigenvalues into the canonical report order.

    Conjugate partners are matched structurally (the QR pipeline emits
    exact pairs); a mismatch beyond the pairing tolerance means the input
    was not a real-matrix spectrum.
    """
    scale = float(np.max(np.hypot(wr, wi))) if len(wr) else 0.0
    tol_pair = 1e-8 * max(1.0, scale)
    units = []  # (sort_re, sort_im, [values...])
    pos = []
    neg = []
    for re, im in zip(wr, wi):
        if abs(im) <= tol_im:
            units.append((re, im, [complex(re, im)]))
        elif im > 0:
            pos.append((re, im))
        else:
            neg.append((re, -im))
    pos.sort()
    neg.sort()
    if len(pos) != len(neg):
        raise InvalidMatrix("spectrum is not closed under conjugation")
    for (pr, pi), (nr, ni) in zip(pos, neg):
        if abs(pr - nr) > tol_pair or abs(pi - ni) > tol_pair:
            raise InvalidMatrix("spectrum is not closed under conjugation")
        units.append((pr, pi, [complex(pr, pi), complex(nr, -ni)]))
    units.sort(key=lambda u: (-u[0], -u[1]))
    out = []
    for _, _, vals in units:
        out.extend(vals)
    return np.array(out, dtype=np.complex128)


def eigenvalues(a) -> Spectrum:
    """All eigenvalues of a general square matrix.

    Balance, Hessenberg reduction, then implicitly double-shifted QR;
    deterministic for a fixed input.  Raises NonConvergence if deflation
    stalls past the 40n sweep budget.
    """
    arr = as_square_matrix(a)
    wr, wi, status = _kernels.eig_copy(arr)
    if status < 0:
        raise NonConvergence(
            f"QR failed to deflate within {_kernels.QR_SWEEP_FACTOR}*n sweeps"
        )
    return Spectrum.from_parts(wr, wi, imag_tolerance(arr))


def symmetric_eigenvalues(s) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, descending, via cyclic Jacobi."""
    arr = as_square_matrix(s)
    if np.max(np.abs(arr - arr.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    w, converged = _kernels.jacobi_eigvals(arr.copy())
    if not converged:
        raise NonConvergence("Jacobi sweeps did not reduce the off-diagonal")
    w.flags.writeable = False
    return w


@dataclass(frozen=True)
class SchurSummary:
    """Unitarily invariant scalars of a Schur form A = U (D + N) U*.

    Only ||N||_F is needed downstream, and it follows from the invariants
    ||N||_F^2 = ||A||_F^2 - sum |lambda_i|^2, so the unitary factor is
    never formed.
    """

    nilpotent_frobenius: float
    frobenius_sq: float
    eigen_moduli_sq_sum: float


def schur_summary(a, spec: Spectrum) -> SchurSummary:
    """Schur scalars for ``a`` whose spectrum is ``spec``."""
    arr = as_square_matrix(a)
    if spec.n != arr.shape[0]:
        raise InvalidMatrix("spectrum order does not match the matrix")
    fro_sq = float(np.sum(arr * arr))
    moduli_sq = float(np.sum(np.abs(spec.values) ** 2))
    diff = fro_sq - moduli_sq
    if diff < -1e-8 * max(1.0, fro_sq):
        raise InvalidMatrix("spectrum is inconsistent with the matrix "
                            "(||A||_F^2 < sum |lambda|^2)")
    return SchurSummary(
        nilpotent_frobenius=float(np.sqrt(max(diff, 0.0))),
        frobenius_sq=fro_sq,
        eigen_moduli_sq_sum=moduli_sq,
    )

"""Machine-checkable bound certificates.

Every inequality the spread analysis rests on is emitted as a
BoundCertificate carrying the bound, the attained value, the slack, and
the named intermediates, so a report reader can re-derive the check.
Chain inequalities report their binding (smallest-slack) link as
bound/attained and keep every link slack in the context map.

All certificates share one tolerance tol_cert = 1e-8 * max(1, n).
"""

import math
from dataclasses import dataclass

import numpy as np

from .eigencore import as_square_matrix, eigenvalues, nonreal_cut, \
    schur_summary, symmetric_eigenvalues
from .errors import DimensionMismatch, DomainError, EntryOutOfRange, \
    NegativeEntry
from .scanlab import f_eval
from .spread import NONNEG_TOL, PAIR_REAL_NONREAL, perron, spread

#: entries may stray this far outside [0, 1] before being rejected.
RANGE_TOL = 1e-12


def tol_cert(n: int) -> float:
    """Shared certificate tolerance, scaling with the order."""
    return 1e-8 * max(1.0, float(n))


@dataclass(frozen=True)
class BoundCertificate:
    """One verified inequality: passed iff slack >= -tol_cert."""

    name: str
    bound: float
    attained: float
    slack: float
    passed: bool
    context: dict


def _certify(name, bound, attained, tol, context, slack=None):
    if slack is None:
        slack = bound - attained
    return BoundCertificate(
        name=name,
        bound=float(bound),
        attained=float(attained),
        slack=float(slack),
        passed=bool(slack >= -tol),
        context=context,
    )


def _require_unit_box(arr):
    if float(arr.min()) < -RANGE_TOL or float(arr.max()) > 1.0 + RANGE_TOL:
        raise EntryOutOfRange("matrix entries must lie in [0, 1]")


def _require_nonnegative(arr):
    if float(arr.min()) < -NONNEG_TOL:
        raise NegativeEntry("matrix has a negative entry")


@dataclass(frozen=True)
class GammaBreakdown:
    """The gamma defect split into its two provably non-negative addends.

    gamma = (n lambda_max - 1^T Ahat 1)
          + sum_{ij} (1 + Ahat_ij - A_ij^2 - A_ji^2)

    with Ahat_ij = min{A_ij, A_ji}.  gamma measures how far A is from a
    dense symmetric 0-1 matrix; it vanishes exactly on the all-ones
    matrix.
    """

    gamma: float
    addend_perron: float
    addend_entry: float
    a_hat_total: float


def gamma(a) -> GammaBreakdown:
    """Gamma defect of a matrix with entries in [0, 1]."""
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    lam = perron(arr)
    a_hat = np.minimum(arr, arr.T)
    a_hat_total = float(a_hat.sum())
    addend_perron = n * lam - a_hat_total
    addend_entry = float(
        (1.0 + a_hat - arr * arr - (arr * arr).T).sum()
    )
    return GammaBreakdown(
        gamma=addend_perron + addend_entry,
        addend_perron=addend_perron,
        addend_entry=addend_entry,
        a_hat_total=a_hat_total,
    )


def gamma_certificate(a) -> BoundCertificate:
    """Certifies gamma >= 0 along with both of its addends."""
    arr = as_square_matrix(a)
    gb = gamma(arr)
    tol = tol_cert(arr.shape[0])
    worst = min(gb.gamma, gb.addend_perron, gb.addend_entry)
    return _certify(
        "gamma_nonneg", bound=worst, attained=0.0, tol=tol,
        context={
            "gamma": gb.gamma,
            "addend_perron": gb.addend_perron,
            "addend_entry": gb.addend_entry,
            "a_hat_total": gb.a_hat_total,
        },
    )


def frobenius_identity(a) -> BoundCertificate:
    """||A||_F^2 = (n^2 + n lambda_max - gamma) / 2, as an identity.

    Slack is -|difference| so the shared pass rule (slack >= -tol_cert)
    accepts exactly the two-sided check |difference| <= tol_cert.
    """
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    lam = perron(arr)
    gb = gamma(arr)
    lhs = float(np.sum(arr * arr))
    rhs = (n * n + n * lam - gb.gamma) / 2.0
    diff = abs(lhs - rhs)
    return _certify(
        "frobenius_identity", bound=rhs, attained=lhs,
        tol=tol_cert(n), slack=-diff,
        context={
            "frobenius_sq": lhs,
            "identity_rhs": rhs,
            "abs_difference": diff,
            "perron": lam,
            "gamma": gb.gamma,
        },
    )


def _nonreal_values(arr):
    spec = eigenvalues(arr)
    cut = nonreal_cut(arr)
    return [(i, v) for i, v in enumerate(spec.values)
            if abs(v.imag) > cut]


def nonreal_eigenvalue_certificates(a) -> list:
    """Quadratic bounds on each non-real eigenvalue mu:

        |mu|^2   <= min{(n^2 + n lam - 2 lam^2 - gamma)/4, lam^2}
        Re(mu)^2 <= min{(n^2 + 3n lam - 4 lam^2 - gamma)/8, lam^2}

    Empty when the spectrum is real.
    """
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    lam = perron(arr)
    gb = gamma(arr)
    tol = tol_cert(n)
    certs = []
    for i, mu in _nonreal_values(arr):
        base = {
            "mu_re": mu.real,
            "mu_im": mu.imag,
            "perron": lam,
            "gamma": gb.gamma,
        }
        mod_bound = min((n * n + n * lam - 2 * lam * lam - gb.gamma) / 4.0,
                        lam * lam)
        certs.append(_certify(
            f"nonreal_modulus_sq[{i}]", bound=mod_bound,
            attained=abs(mu) ** 2, tol=tol, context=dict(base),
        ))
        re_bound = min((n * n + 3 * n * lam - 4 * lam * lam - gb.gamma) / 8.0,
                       lam * lam)
        certs.append(_certify(
            f"nonreal_realpart_sq[{i}]", bound=re_bound,
            attained=mu.real ** 2, tol=tol, context=dict(base),
        ))
    return certs


def nonreal_linear_certificates(a) -> list:
    """Linear-in-n bounds on each non-real eigenvalue mu:

        |mu| <= n/2        |Re(mu)| <= (3 + sqrt(57)) n / 24
    """
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    tol = tol_cert(n)
    re_coeff = (3.0 + math.sqrt(57.0)) / 24.0
    certs = []
    for i, mu in _nonreal_values(arr):
        base = {"mu_re": mu.real, "mu_im": mu.imag}
        certs.append(_certify(
            f"nonreal_modulus_linear[{i}]", bound=n / 2.0,
            attained=abs(mu), tol=tol, context=dict(base),
        ))
        certs.append(_certify(
            f"nonreal_realpart_linear[{i}]", bound=re_coeff * n,
            attained=abs(mu.real), tol=tol, context=dict(base),
        ))
    return certs


def bendixson_certificate(a) -> BoundCertificate:
    """Every Re(lambda) lies between the extreme eigenvalues of the
    symmetric part (A + A^T)/2.  Attained is the worst violation margin
    (negative when all eigenvalues are strictly inside)."""
    arr = as_square_matrix(a)
    n = arr.shape[0]
    sym = (arr + arr.T) / 2.0
    w = symmetric_eigenvalues(sym)
    hi, lo = float(w[0]), float(w[-1])
    spec = eigenvalues(arr)
    worst = -math.inf
    for v in spec.values:
        worst = max(worst, lo - v.real, v.real - hi)
    return _certify(
        "bendixson", bound=0.0, attained=worst, tol=tol_cert(n),
        context={
            "lambda_min_sym": lo,
            "lambda_max_sym": hi,
            "worst_violation": worst,
        },
    )


def realpart_floor_certificate(a) -> BoundCertificate:
    """Re(lambda) >= -n/2 for every eigenvalue of a [0, 1] matrix."""
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    spec = eigenvalues(arr)
    min_re = float(min(v.real for v in spec.values))
    return _certify(
        "realpart_floor", bound=n / 2.0, attained=-min_re,
        tol=tol_cert(n), context={"min_re": min_re},
    )


def trace_square_certificate(a) -> BoundCertificate:
    """The chain trace(A^2) <= 1^T Ahat 1 <= n lambda_max.

    The binding link is reported as bound/attained; both link slacks are
    kept in the context.
    """
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    lam = perron(arr)
    trace_sq = float(np.sum(arr * arr.T))
    a_hat_total = float(np.minimum(arr, arr.T).sum())
    n_perron = n * lam
    slack1 = a_hat_total - trace_sq
    slack2 = n_perron - a_hat_total
    if slack1 <= slack2:
        bound, attained = a_hat_total, trace_sq
    else:
        bound, attained = n_perron, a_hat_total
    return _certify(
        "trace_square_chain", bound=bound, attained=attained,
        tol=tol_cert(n), slack=min(slack1, slack2),
        context={
            "trace_sq": trace_sq,
            "a_hat_total": a_hat_total,
            "n_perron": n_perron,
            "slack_trace_to_ahat": slack1,
            "slack_ahat_to_nperron": slack2,
        },
    )


def rounding_defect_certificate(a) -> BoundCertificate:
    """The chain controlling rounding to the nearest 0-1 matrix:

        sum|Ahat - round(Ahat)| <= 2 sum|A - round(A)|
                                <= 4 sum A_ij (1 - A_ij) <= 2 gamma

    round() is nearest-integer with ties to even.
    """
    arr = as_square_matrix(a)
    _require_unit_box(arr)
    n = arr.shape[0]
    gb = gamma(arr)
    a_hat = np.minimum(arr, arr.T)
    s_hat = float(np.abs(a_hat - np.rint(a_hat)).sum())
    s_round = float(np.abs(arr - np.rint(arr)).sum())
    s_quad = float((arr * (1.0 - arr)).sum())
    slack1 = 2.0 * s_round - s_hat
    slack2 = 4.0 * s_quad - 2.0 * s_round
    slack3 = 2.0 * gb.gamma - 4.0 * s_quad
    links = [
        (slack1, 2.0 * s_round, s_hat),
        (slack2, 4.0 * s_quad, 2.0 * s_round),
        (slack3, 2.0 * gb.gamma, 4.0 * s_quad),
    ]
    worst = min(links, key=lambda t: t[0])
    return _certify(
        "rounding_defect_chain", bound=worst[1], attained=worst[2],
        tol=tol_cert(n), slack=worst[0],
        context={
            "sum_hat_defect": s_hat,
            "sum_round_defect": s_round,
            "sum_quadratic_defect": s_quad,
            "gamma": gb.gamma,
            "slack_hat_to_round": slack1,
            "slack_round_to_quadratic": slack2,
            "slack_quadratic_to_gamma": slack3,
        },
    )


def perturbation_bound(a0, e) -> BoundCertificate:
    """Eigenvalue displacement of A0 + E against the Schur-based bound

        max_mu min_lambda |lambda - mu| <= ||E||_F sum_k ||N||_F^k

    with ||N||_F taken from the Schur summary of A0 (Frobenius relaxation
    of the 2-norm bound on both factors).
    """
    base = as_square_matrix(a0)
    pert = as_square_matrix(e)
    if base.shape != pert.shape:
        raise DimensionMismatch(
            f"orders differ: {base.shape[0]} vs {pert.shape[0]}"
        )
    n = base.shape[0]
    spec0 = eigenvalues(base)
    summary = schur_summary(base, spec0)
    nf = summary.nilpotent_frobenius
    geometric = float(sum(nf ** k for k in range(n)))
    norm_e = float(np.linalg.norm(pert))
    bound = norm_e * geometric
    spec1 = eigenvalues(base + pert)
    attained = 0.0
    for mu in spec1.values:
        attained = max(attained,
                       float(min(abs(lam - mu) for lam in spec0.values)))
    return _certify(
        "schur_perturbation", bound=bound, attained=attained,
        tol=tol_cert(n),
        context={
            "norm_e_frobenius": norm_e,
            "nilpotent_frobenius": nf,
            "geometric_sum": geometric,
        },
    )


def main_bound_certificate(a) -> BoundCertificate:
    """The spread bound: diam(spectrum) <= (2n/sqrt(3)) ||A||_max.

    When the attaining pair is real/non-real, the context carries the
    profile-based estimate n ||A||_max sqrt(f(lam/n, gamma/n^2)) for
    cross-checking against the attained spread.
    """
    arr = as_square_matrix(a)
    _require_nonnegative(arr)
    n = arr.shape[0]
    a_max = float(np.abs(arr).max())
    bound = (2.0 * n / math.sqrt(3.0)) * a_max
    result = spread(arr)
    context = {
        "a_max": a_max,
        "pair_kind": result.pair_kind,
        "perron": result.perron,
    }
    if result.pair_kind == PAIR_REAL_NONREAL and a_max > 0.0:
        scaled = arr / a_max
        lam = perron(scaled)
        gb = gamma(scaled)
        try:
            f_val = f_eval(min(lam / n, 1.0), gb.gamma / (n * n))
        except DomainError:
            # a genuinely non-real eigenvalue forces the radicand
            # non-negative; a negative one means the attaining pair was a
            # split real cluster, where the estimate has no meaning
            f_val = None
        if f_val is not None:
            context["f_value"] = f_val
            context["f_estimate"] = a_max * n * math.sqrt(max(f_val, 0.0))
    return _certify(
        "spread_main_bound", bound=bound, attained=result.value,
        tol=tol_cert(n), context=context,
    )

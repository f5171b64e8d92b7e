"""spreadlab: eigenvalue spread of non-negative matrices.

Spread (spectral diameter) computation on a self-contained dense
eigensolver, machine-checkable certificates for the spread bound
2n/sqrt(3) and its supporting inequalities, exhaustive and local search
for extremal matrices, and the scalar bound-profile scan behind the
real/non-real eigenvalue pair analysis.
"""

from .certificates import BoundCertificate, GammaBreakdown, \
    bendixson_certificate, frobenius_identity, gamma, gamma_certificate, \
    main_bound_certificate, nonreal_eigenvalue_certificates, \
    nonreal_linear_certificates, perturbation_bound, \
    realpart_floor_certificate, rounding_defect_certificate, tol_cert, \
    trace_square_certificate
from .eigencore import SchurSummary, Spectrum, as_square_matrix, \
    eigenvalues, imag_tolerance, nonreal_cut, schur_summary, \
    symmetric_eigenvalues
from .extremal import SearchReport, construct_join, construct_kron_extremal, \
    exhaustive_search, local_search, small_spread_catalog
from .matrixio import format_matrix, parse_matrix, read_matrix, write_matrix
from .scanlab import FigurePanels, IntervalSet, ScanTable, f_eval, f_max, \
    f_sublevel, figure_tables, minimax_constants, quartic_critical_point
from .spread import SpreadResult, perron, spread

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "FigurePanels",
    "GammaBreakdown",
    "IntervalSet",
    "ScanTable",
    "SchurSummary",
    "SearchReport",
    "Spectrum",
    "SpreadResult",
    "as_square_matrix",
    "bendixson_certificate",
    "construct_join",
    "construct_kron_extremal",
    "eigenvalues",
    "exhaustive_search",
    "f_eval",
    "f_max",
    "f_sublevel",
    "figure_tables",
    "format_matrix",
    "frobenius_identity",
    "gamma",
    "gamma_certificate",
    "imag_tolerance",
    "local_search",
    "main_bound_certificate",
    "minimax_constants",
    "nonreal_cut",
    "nonreal_eigenvalue_certificates",
    "nonreal_linear_certificates",
    "parse_matrix",
    "perron",
    "perturbation_bound",
    "read_matrix",
    "realpart_floor_certificate",
    "rounding_defect_certificate",
    "schur_summary",
    "small_spread_catalog",
    "spread",
    "symmetric_eigenvalues",
    "tol_cert",
    "trace_square_certificate",
    "quartic_critical_point",
    "write_matrix",
]

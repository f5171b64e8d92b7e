"""Scalar analysis of the bound profile f(x, eta).

f(x, eta) = x^2 + 2x sqrt((1 + 3x - 4x^2 - eta)/8) + (1 + x - 2x^2 - eta)/4

bounds |lambda_max - mu|^2 / n^2 for a non-real eigenvalue mu of a
non-negative matrix with entries in [0, 1], where x = lambda_max/n and
eta = gamma/n^2.  This module evaluates f, locates its maximum and
super-level sets, solves the two branch-crossing minimax problems behind
the linear |mu| and |Re mu| bounds, and packages the two-panel figure
data the CLI renders.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidParameter

#: radicand values in [-RADICAND_EDGE, 0) count as the domain edge and clamp.
RADICAND_EDGE = 1e-12

#: threshold line drawn on the scan figure: 21/16.
FIGURE_THRESHOLD = 21.0 / 16.0

#: x-range plotted in the two-panel figure.
FIGURE_RANGE = (0.4, 1.0)

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ScanTable:
    """Sampled (x, f(x, eta)) rows plus the refined maximum.

    ``degenerate`` flags scans where the radicand went genuinely negative
    somewhere (beyond the -1e-12 edge) and was clamped to keep the table
    rectangular.
    """

    eta: float
    rows: np.ndarray  # (resolution, 2) columns x, f
    max_x: float
    max_value: float
    resolution: int
    degenerate: bool

    def __post_init__(self):
        self.rows.flags.writeable = False


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint closed subintervals of [0, 1], ascending."""

    intervals: tuple

    def __post_init__(self):
        prev = -math.inf
        for lo, hi in self.intervals:
            if not (prev < lo <= hi):
                raise InvalidParameter("intervals must be disjoint, "
                                       "ordered, and nonempty")
            prev = hi

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)


def _radicand(x, eta):
    return 1.0 + 3.0 * x - 4.0 * x * x - eta


def _f_clamped(x, eta):
    """f with negative radicand clamped to 0; also reports whether any
    clamping exceeded the domain edge."""
    rad = _radicand(x, eta)
    clamped = bool(np.any(rad < -RADICAND_EDGE))
    rad = np.maximum(rad, 0.0)
    val = x * x + 2.0 * x * np.sqrt(rad / 8.0) \
        + (1.0 + x - 2.0 * x * x - eta) / 4.0
    return val, clamped


def f_eval(x: float, eta: float) -> float:
    """Evaluate f(x, eta) for x in [0, 1], eta >= 0.

    The radicand is clamped at zero within the -1e-12 domain edge;
    anything lower raises DomainError.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x={x} outside [0, 1]")
    if eta < 0.0:
        raise DomainError(f"eta={eta} negative")
    rad = _radicand(x, eta)
    if rad < -RADICAND_EDGE:
        raise DomainError(f"radicand {rad} below the domain edge")
    val, _ = _f_clamped(float(x), float(eta))
    return float(val)


def _scan(eta: float, resolution: int, lo: float, hi: float) -> ScanTable:
    """Grid scan plus golden-section refinement of the maximum.

    Golden section alone resolves a smooth maximum only to ~sqrt(eps)
    because function values flatten below round-off there, so the argmax
    is polished with one fixed-stencil parabolic fit; that makes max_x
    reproducible to ~1e-12 regardless of the starting grid.
    """
    x = np.linspace(lo, hi, resolution)
    f, degenerate = _f_clamped(x, eta)
    k = int(np.argmax(f))
    best_x = float(x[k])
    best_f = float(f[k])
    a = float(x[max(k - 1, 0)])
    b = float(x[min(k + 1, resolution - 1)])
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, _ = _f_clamped(c, eta)
    fd, _ = _f_clamped(d, eta)
    while b - a > 1e-12:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc, _ = _f_clamped(c, eta)
            t, ft = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd, _ = _f_clamped(d, eta)
            t, ft = d, fd
        if ft > best_f:
            best_f = float(ft)
            best_x = float(t)
    h = 1e-5 * (hi - lo)
    if lo + h < best_x < hi - h:
        fm, _ = _f_clamped(best_x - h, eta)
        f0, _ = _f_clamped(best_x, eta)
        fp, _ = _f_clamped(best_x + h, eta)
        denom = fm - 2.0 * f0 + fp
        if denom < 0.0:
            vertex = best_x + 0.5 * h * (fm - fp) / denom
            vertex = min(max(vertex, lo), hi)
            fv, _ = _f_clamped(vertex, eta)
            best_x = float(vertex)
            best_f = max(best_f, float(fv))
    rows = np.column_stack([x, f])
    return ScanTable(eta=float(eta), rows=rows, max_x=best_x,
                     max_value=best_f, resolution=resolution,
                     degenerate=degenerate)


def f_max(eta: float, resolution: int = 4001) -> ScanTable:
    """Maximum of f(., eta) over [0, 1] from a uniform grid scan refined
    by golden section around the best cell."""
    if eta < 0.0:
        raise DomainError(f"eta={eta} negative")
    if resolution < 1000:
        raise InvalidParameter("resolution must be at least 1000")
    return _scan(eta, resolution, 0.0, 1.0)


def f_sublevel(threshold: float, eta: float,
               resolution: int = 4001) -> IntervalSet:
    """The set {x in [0, 1] : f(x, eta) >= threshold} as closed intervals.

    Boundary points between grid cells are bisection-refined to 1e-7.
    """
    if threshold <= 0.0:
        raise InvalidParameter("threshold must be positive")
    if eta < 0.0:
        raise DomainError(f"eta={eta} negative")
    if resolution < 1000:
        raise InvalidParameter("resolution must be at least 1000")
    x = np.linspace(0.0, 1.0, resolution)
    f, _ = _f_clamped(x, eta)
    above = f >= threshold

    def refine(a, b):
        # f(a) and f(b) straddle the threshold; bisect to 1e-7 in x
        fa, _ = _f_clamped(a, eta)
        ga = fa - threshold
        while b - a > 1e-7:
            m = 0.5 * (a + b)
            fm, _ = _f_clamped(m, eta)
            gm = fm - threshold
            if (ga > 0.0) == (gm > 0.0):
                a, ga = m, gm
            else:
                b = m
        return 0.5 * (a + b)

    intervals = []
    i = 0
    while i < resolution:
        if above[i]:
            j = i
            while j + 1 < resolution and above[j + 1]:
                j += 1
            lo = 0.0 if i == 0 else refine(float(x[i - 1]), float(x[i]))
            hi = 1.0 if j == resolution - 1 else refine(float(x[j]),
                                                        float(x[j + 1]))
            intervals.append((lo, hi))
            i = j + 1
        else:
            i += 1
    return IntervalSet(intervals=tuple(intervals))


def quartic_critical_point() -> float:
    """Largest root in [0, 1] of 576x^4 - 592x^3 - 2x^2 + 61x + 7.

    This is the critical point of f(., 0); the scan maximum is asserted to
    agree with it within 1e-6 as a cross-check of both routes.
    """

    def q(x):
        return (((576.0 * x - 592.0) * x - 2.0) * x + 61.0) * x + 7.0

    grid = np.linspace(0.0, 1.0, 10001)
    vals = q(grid)
    root = None
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            root = float(grid[i])
        elif vals[i] * vals[i + 1] < 0.0:
            a, b = float(grid[i]), float(grid[i + 1])
            fa = q(a)
            while b - a > 1e-14:
                m = 0.5 * (a + b)
                fm = q(m)
                if (fa > 0.0) == (fm > 0.0):
                    a, fa = m, fm
                else:
                    b = m
            root = 0.5 * (a + b)
    if vals[-1] == 0.0:
        root = float(grid[-1])
    if root is None:
        raise DomainError("quartic has no root in [0, 1]")
    scan = f_max(0.0)
    if abs(scan.max_x - root) > 1e-6:
        raise DomainError(
            f"scan maximum {scan.max_x} disagrees with the quartic root "
            f"{root}"
        )
    return root


def minimax_constants() -> tuple:
    """Solve both branch-crossing problems on [0, 1]:

        max min{(1 + x - 2x^2)/4,  x^2}   -> (1/2, 1/4)
        max min{(1 + 3x - 4x^2)/8, x^2}   -> ((3 + sqrt(57))/24, argmax^2)

    Each maximum sits where the rising x^2 branch crosses the falling
    concave branch; the crossing is bisected to 1e-14.
    """

    def solve(branch):
        a, b = 0.0, 1.0
        ga = a * a - branch(a)
        while b - a > 1e-14:
            m = 0.5 * (a + b)
            gm = m * m - branch(m)
            if (ga > 0.0) == (gm > 0.0):
                a, ga = m, gm
            else:
                b = m
        xc = 0.5 * (a + b)
        return xc, min(xc * xc, branch(xc))

    first = solve(lambda x: (1.0 + x - 2.0 * x * x) / 4.0)
    second = solve(lambda x: (1.0 + 3.0 * x - 4.0 * x * x) / 8.0)
    return first, second


@dataclass(frozen=True)
class FigurePanels:
    """Data behind the two-panel scan figure: f(., 0) and f(., 1/200) over
    [0.4, 1], the 21/16 threshold, and the eta=0 super-level interval."""

    panel_a: ScanTable
    panel_b: ScanTable
    threshold: float
    highlight: IntervalSet


def figure_tables(resolution: int = 4001) -> FigurePanels:
    """Tables for the two-panel figure (eta = 0 and eta = 1/200)."""
    if resolution < 1000:
        raise InvalidParameter("resolution must be at least 1000")
    lo, hi = FIGURE_RANGE
    return FigurePanels(
        panel_a=_scan(0.0, resolution, lo, hi),
        panel_b=_scan(1.0 / 200.0, resolution, lo, hi),
        threshold=FIGURE_THRESHOLD,
        highlight=f_sublevel(FIGURE_THRESHOLD, 0.0, resolution),
    )

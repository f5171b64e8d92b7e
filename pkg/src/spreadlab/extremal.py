"""Extremal constructions and spread-maximizer search.

Constructors for the equality family (the 3x3 pattern blown up by a
Kronecker all-ones factor), the clique-join lower-bound family, and the
small catalog of known maximizers at orders 2..5; exhaustive enumeration
of 0-1 matrices at n <= 5; and projected coordinate ascent over the
weighted box [0, 1]^{n x n} at n <= 12.

Enumeration encodes a matrix as an integer: bit k of the code is entry
(k div n, k mod n) in the all-01 space, and the k-th off-diagonal cell in
row-major order in the zero-diag space.  Workers scan disjoint code
ranges; the reduction (max spread, smallest code on exact ties) is
associative, so any partition, and hence any thread count, produces the
identical report.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidParameter, NonConvergence, NotDivisibleByThree, \
    OrderTooLarge
from .spread import spread

SPACE_ALL = "all-01"
SPACE_ZERO_DIAG = "zero-diag-01"
SPACE_WEIGHTED = "weighted-box"

#: spreads within this tolerance of the maximum count as ties.
TIE_TOL = 1e-9

MAX_EXHAUSTIVE_ORDER = 5
MAX_LOCAL_ORDER = 12

#: coordinate-ascent knobs: golden-section x-tolerance, sweep improvement
#: cutoff, and a hard sweep cap that monotone ascent never reaches.
COORD_TOL = 1e-10
SWEEP_TOL = 1e-10
MAX_SWEEPS = 1000


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search run.

    ``matrices_examined`` is the full space size for exhaustive runs and
    the number of spread evaluations for local search.  ``ties`` counts
    distinct matrices attaining the best spread within 1e-9 (raw count,
    no isomorphism quotient).  ``seed`` is None for exhaustive runs.
    """

    n: int
    search_space: str
    best_spread: float
    best_matrix: np.ndarray
    is_symmetric: bool
    is_01: bool
    matrices_examined: int
    ties: int
    seed: int | None

    def __post_init__(self):
        self.best_matrix.flags.writeable = False


def construct_kron_extremal(n: int, pi=None) -> np.ndarray:
    """The unique spread maximizer for 3 | n: the permuted Kronecker
    product of [[1,1,1],[1,1,1],[1,1,0]] with the (n/3)-order all-ones
    matrix.  ``pi`` defaults to the identity permutation."""
    if n <= 0 or n % 3 != 0:
        raise NotDivisibleByThree(f"order {n} is not a positive multiple of 3")
    block = np.ones((3, 3))
    block[2, 2] = 0.0
    a = np.kron(block, np.ones((n // 3, n // 3)))
    if pi is not None:
        perm = np.asarray(pi, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(n)):
            raise InvalidParameter("pi is not a permutation of 0..n-1")
        a = a[np.ix_(perm, perm)]
    return a


def construct_join(n: int) -> np.ndarray:
    """Adjacency matrix of the join of a clique on floor(2n/3) vertices
    with an independent set on ceil(n/3) vertices (zero diagonal)."""
    if n < 2:
        raise InvalidParameter(f"join construction needs n >= 2, got {n}")
    k = (2 * n) // 3
    a = np.ones((n, n))
    np.fill_diagonal(a, 0.0)
    a[k:, k:] = 0.0
    return a


def small_spread_catalog() -> list:
    """The known maximizers at orders 2..5 with their exact spreads:
    sqrt(5), 2 sqrt(3), sqrt(21), sqrt(33)."""
    m2 = np.ones((2, 2))
    m2[1, 1] = 0.0
    m3 = np.ones((3, 3))
    m3[2, 2] = 0.0
    m4 = np.ones((4, 4))
    m4[3, 3] = 0.0
    m5 = np.ones((5, 5))
    m5[3:, 3:] = 0.0
    return [
        (m2, math.sqrt(5.0)),
        (m3, 2.0 * math.sqrt(3.0)),
        (m4, math.sqrt(21.0)),
        (m5, math.sqrt(33.0)),
    ]


def _bit_positions(n: int, space: str):
    if space == SPACE_ALL:
        cells = [(k // n, k % n) for k in range(n * n)]
    elif space == SPACE_ZERO_DIAG:
        cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        raise InvalidParameter(f"unknown search space {space!r}")
    rows = np.array([c[0] for c in cells], dtype=np.int64)
    cols = np.array([c[1] for c in cells], dtype=np.int64)
    return rows, cols


def _chunk_ranges(total: int, threads: int):
    chunks = max(1, min(threads * 4, total))
    step = (total + chunks - 1) // chunks
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _resolve_threads(threads) -> int:
    if threads is None:
        import os
        env = os.environ.get("SPREADLAB_THREADS")
        if env is not None:
            threads = int(env)
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise InvalidParameter("thread count must be positive")
    return int(threads)


def exhaustive_search(n: int, space: str = SPACE_ALL,
                      threads: int | None = None) -> SearchReport:
    """Enumerate every 0-1 matrix in the space and report the maximizer.

    Two passes: the first finds the maximum spread and its smallest code,
    the second counts ties against the final maximum, so the tie count is
    partition-independent.
    """
    rows, cols = _bit_positions(n, space)
    if n > MAX_EXHAUSTIVE_ORDER:
        raise OrderTooLarge(
            f"exhaustive search is limited to n <= {MAX_EXHAUSTIVE_ORDER}"
        )
    threads = _resolve_threads(threads)
    total = 1 << len(rows)
    ranges = _chunk_ranges(total, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        firsts = list(pool.map(
            lambda r: _kernels.enum_best(n, r[0], r[1], rows, cols), ranges
        ))
        best = -1.0
        best_code = 0
        fails = 0
        for b, code, f in firsts:
            fails += f
            if b > best:
                best = b
                best_code = code
        if fails:
            raise NonConvergence(f"{fails} matrices failed to converge")
        counts = list(pool.map(
            lambda r: _kernels.enum_count(n, r[0], r[1], rows, cols,
                                          best, TIE_TOL),
            ranges
        ))
    ties = int(sum(counts))
    best_matrix = _kernels.decode_matrix(best_code, n, rows, cols)
    return SearchReport(
        n=n,
        search_space=space,
        best_spread=float(best),
        best_matrix=best_matrix,
        is_symmetric=_is_symmetric(best_matrix),
        is_01=_is_01(best_matrix),
        matrices_examined=total,
        ties=ties,
        seed=None,
    )


def _is_symmetric(a, tol: float = 1e-9) -> bool:
    return bool(np.max(np.abs(a - a.T)) <= tol)


def _is_01(a, tol: float = 1e-6) -> bool:
    return bool(np.max(np.abs(a - np.rint(a))) <= tol)


def local_search(n: int, seed: int, restarts: int = 50,
                 zero_diag: bool = False,
                 threads: int | None = None) -> SearchReport:
    """Projected coordinate ascent over the weighted box [0, 1]^{n x n}.

    Each restart starts from a seeded uniform point and sweeps the free
    entries in random order, line-optimizing every entry by golden
    section over brackets seeded by {0, current, 1}; a restart stops when
    a whole sweep improves the spread by less than 1e-10.  Restarts use
    independent substreams of (seed, restart-index) and reduce
    deterministically (best spread, earliest restart on exact ties).
    """
    if n > MAX_LOCAL_ORDER:
        raise OrderTooLarge(f"local search is limited to n <= {MAX_LOCAL_ORDER}")
    if restarts < 1:
        raise InvalidParameter("restarts must be positive")
    space = SPACE_ZERO_DIAG if zero_diag else SPACE_ALL
    rows, cols = _bit_positions(n, space)
    threads = _resolve_threads(threads)

    def run(index: int):
        state = np.uint64(_kernels.stream_seed(seed, index))
        return _kernels.ascent_restart(n, state, rows, cols, COORD_TOL,
                                       SWEEP_TOL, MAX_SWEEPS)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run, range(restarts)))
    evals = 0
    best = -1.0
    best_matrix = None
    for a, value, ne, _converged in results:
        evals += ne
        if value < 0.0:
            raise NonConvergence("eigensolver failed during local search")
        if value > best:
            best = value
            best_matrix = a
    attaining = []
    for a, value, _ne, _conv in results:
        if value >= best - TIE_TOL:
            key = tuple(np.round(a, 9).ravel().tolist())
            if key not in attaining:
                attaining.append(key)
    return SearchReport(
        n=n,
        search_space=SPACE_WEIGHTED,
        best_spread=float(best),
        best_matrix=best_matrix,
        is_symmetric=_is_symmetric(best_matrix),
        is_01=_is_01(best_matrix),
        matrices_examined=evals,
        ties=len(attaining),
        seed=int(seed),
    )


def verify_search_report(report: SearchReport) -> float:
    """Recompute the spread of the reported best matrix through the
    public path; returns |difference| from the reported value."""
    return abs(spread(report.best_matrix).value - report.best_spread)

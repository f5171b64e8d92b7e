"""Compiled numerical kernels.

Everything here is numba-jitted, allocation-light, and GIL-free so the
exhaustive enumerator and the coordinate-ascent search can run millions of
small eigensolves at native speed and still be driven from worker threads.

The eigenvalue pipeline is the classical dense path: Parlett-Reinsch
balancing (exact powers of two, so the similarity is round-off free),
Householder reduction to upper Hessenberg form, then implicitly shifted
Francis double-shift QR with 1x1/2x2 deflation.  Only eigenvalues are
produced; Schur vectors are never accumulated.

All kernels are deterministic: fixed sweep orders, fixed tie handling, and
a self-contained splitmix64 generator for anything randomized.
"""

import math

import numpy as np
from numba import njit

EPS = float(np.finfo(np.float64).eps)

# QR sweep budget per matrix order (sweeps allowed = QR_SWEEP_FACTOR * n).
QR_SWEEP_FACTOR = 40


# ---------------------------------------------------------------------------
# splitmix64: tiny, fast, platform-independent PRNG for the search kernels
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True, inline="always")
def _sm64_next(state):
    """Advance a splitmix64 state; returns (uint64 output, new state)."""
    state = state + np.uint64(0x9E3779B97F4A7C15)
    z = state
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return z, state


@njit(cache=True, nogil=True, inline="always")
def _uniform01(state):
    """Uniform double in [0, 1) from a splitmix64 state."""
    z, state = _sm64_next(state)
    return (z >> np.uint64(11)) * (2.0 ** -53), state


@njit(cache=True, nogil=True)
def stream_seed(seed, index):
    """Derive the state of the (seed, index) substream."""
    s = np.uint64(seed) * np.uint64(0xD1342543DE82EF95)
    s = s + (np.uint64(index) + np.uint64(1)) * np.uint64(0x9E3779B97F4A7C15)
    z, _ = _sm64_next(s)
    return z


# ---------------------------------------------------------------------------
# dense eigenvalue pipeline
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _balance(a):
    """In-place diagonal similarity scaling (Parlett-Reinsch, radix 2)."""
    n = a.shape[0]
    radix = 2.0
    sqrdx = radix * radix
    done = False
    while not done:
        done = True
        for i in range(n):
            c = 0.0
            r = 0.0
            for j in range(n):
                if j != i:
                    c += abs(a[j, i])
                    r += abs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / radix
                f = 1.0
                s = c + r
                while c < g:
                    f *= radix
                    c *= sqrdx
                g = r * radix
                while c > g:
                    f /= radix
                    c /= sqrdx
                if (c + r) / f < 0.95 * s:
                    done = False
                    g = 1.0 / f
                    for j in range(n):
                        a[i, j] *= g
                    for j in range(n):
                        a[j, i] *= f


@njit(cache=True, nogil=True)
def _hessenberg(a, v):
    """In-place Householder reduction to upper Hessenberg form.

    ``v`` is an n-length scratch vector.  Entries below the first
    subdiagonal are zeroed exactly.
    """
    n = a.shape[0]
    for k in range(n - 2):
        sigma = 0.0
        for i in range(k + 2, n):
            sigma += a[i, k] * a[i, k]
        if sigma == 0.0:
            continue
        x0 = a[k + 1, k]
        mu = math.sqrt(x0 * x0 + sigma)
        if x0 <= 0.0:
            v0 = x0 - mu
        else:
            v0 = -sigma / (x0 + mu)
        beta = 2.0 * v0 * v0 / (sigma + v0 * v0)
        v[k + 1] = 1.0
        for i in range(k + 2, n):
            v[i] = a[i, k] / v0
        # left: rows k+1..n-1, all columns from k on
        for j in range(k, n):
            s = 0.0
            for i in range(k + 1, n):
                s += v[i] * a[i, j]
            s *= beta
            for i in range(k + 1, n):
                a[i, j] -= s * v[i]
        # right: columns k+1..n-1, all rows
        for i in range(n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * v[j]
            s *= beta
            for j in range(k + 1, n):
                a[i, j] -= s * v[j]
        for i in range(k + 2, n):
            a[i, k] = 0.0


@njit(cache=True, nogil=True, inline="always")
def _eig2x2(a, b, c, d):
    """Eigenvalues of [[a, b], [c, d]] as (re1, im1, re2, im2).

    Real roots are split with the stable product formula to avoid
    cancellation; complex roots are an exact conjugate pair.
    """
    m = 0.5 * (a + d)
    p = 0.5 * (a - d)
    disc = p * p + b * c
    if disc >= 0.0:
        sq = math.sqrt(disc)
        if m >= 0.0:
            lam1 = m + sq
        else:
            lam1 = m - sq
        if lam1 != 0.0:
            lam2 = (a * d - b * c) / lam1
        else:
            lam2 = 0.0
        return lam1, 0.0, lam2, 0.0
    sq = math.sqrt(-disc)
    return m, sq, m, -sq


@njit(cache=True, nogil=True)
def _hqr(h, wr, wi, max_sweeps):
    """Francis double-shift QR on an upper Hessenberg matrix (destroyed).

    Fills ``wr``/``wi`` with the eigenvalues (conjugate pairs exact) and
    returns the number of sweeps used, or -1 if the sweep budget was
    exhausted before full deflation.
    """
    n = h.shape[0]
    anorm = 0.0
    for i in range(n):
        lo = i - 1
        if lo < 0:
            lo = 0
        for j in range(lo, n):
            anorm += abs(h[i, j])
    if anorm == 0.0:
        for i in range(n):
            wr[i] = 0.0
            wi[i] = 0.0
        return 0

    nn = n - 1
    sweeps = 0
    its = 0
    while nn >= 0:
        # find the start l of the active block ending at nn
        l = nn
        while l > 0:
            s = abs(h[l - 1, l - 1]) + abs(h[l, l])
            if s == 0.0:
                s = anorm
            if abs(h[l, l - 1]) <= EPS * s:
                h[l, l - 1] = 0.0
                break
            l -= 1
        if l == nn:
            wr[nn] = h[nn, nn]
            wi[nn] = 0.0
            nn -= 1
            its = 0
            continue
        if l == nn - 1:
            re1, im1, re2, im2 = _eig2x2(
                h[l, l], h[l, nn], h[nn, l], h[nn, nn]
            )
            wr[l] = re1
            wi[l] = im1
            wr[nn] = re2
            wi[nn] = im2
            nn -= 2
            its = 0
            continue

        if sweeps >= max_sweeps:
            return -1
        sweeps += 1
        its += 1

        # implicit double shift from the trailing 2x2 (ad hoc values on
        # every tenth iteration to break symmetric stalls)
        if its % 10 == 0:
            s = abs(h[nn, nn - 1]) + abs(h[nn - 1, nn - 2])
            h11 = 0.75 * s + h[nn, nn]
            h12 = -0.4375 * s
            h21 = s
            h22 = h11
        else:
            h11 = h[nn - 1, nn - 1]
            h12 = h[nn - 1, nn]
            h21 = h[nn, nn - 1]
            h22 = h[nn, nn]
        tr = h11 + h22
        det = h11 * h22 - h12 * h21

        # first column of (H - aI)(H - bI) e1 on the active block
        x = h[l, l] * h[l, l] + h[l, l + 1] * h[l + 1, l] - tr * h[l, l] + det
        y = h[l + 1, l] * (h[l, l] + h[l + 1, l + 1] - tr)
        z = h[l + 1, l] * h[l + 2, l + 1]
        scale = abs(x) + abs(y) + abs(z)
        if scale != 0.0:
            x /= scale
            y /= scale
            z /= scale

        for k in range(l, nn - 1):
            # 3-point Householder annihilating (y, z) against x
            sigma = y * y + z * z
            if sigma == 0.0 and x >= 0.0:
                beta = 0.0
                v1 = 0.0
                v2 = 0.0
            elif sigma == 0.0:
                beta = 2.0
                v1 = 0.0
                v2 = 0.0
            else:
                mu = math.sqrt(x * x + sigma)
                if x <= 0.0:
                    v0 = x - mu
                else:
                    v0 = -sigma / (x + mu)
                beta = 2.0 * v0 * v0 / (sigma + v0 * v0)
                v1 = y / v0
                v2 = z / v0
            if beta != 0.0:
                q = k - 1
                if q < l:
                    q = l
                for j in range(q, nn + 1):
                    s = h[k, j] + v1 * h[k + 1, j] + v2 * h[k + 2, j]
                    s *= beta
                    h[k, j] -= s
                    h[k + 1, j] -= s * v1
                    h[k + 2, j] -= s * v2
                r = k + 3
                if r > nn:
                    r = nn
                for i in range(l, r + 1):
                    s = h[i, k] + v1 * h[i, k + 1] + v2 * h[i, k + 2]
                    s *= beta
                    h[i, k] -= s
                    h[i, k + 1] -= s * v1
                    h[i, k + 2] -= s * v2
            if k > l:
                h[k + 1, k - 1] = 0.0
                h[k + 2, k - 1] = 0.0
            x = h[k + 1, k]
            y = h[k + 2, k]
            if k < nn - 2:
                z = h[k + 3, k]
                scale = abs(x) + abs(y) + abs(z)
                if scale != 0.0:
                    x /= scale
                    y /= scale
                    z /= scale
            else:
                scale = abs(x) + abs(y)
                if scale != 0.0:
                    x /= scale
                    y /= scale

        # final 2-point reflector on rows nn-1, nn
        sigma = y * y
        if sigma != 0.0 or x < 0.0:
            if sigma == 0.0:
                beta = 2.0
                v1 = 0.0
            else:
                mu = math.sqrt(x * x + sigma)
                if x <= 0.0:
                    v0 = x - mu
                else:
                    v0 = -sigma / (x + mu)
                beta = 2.0 * v0 * v0 / (sigma + v0 * v0)
                v1 = y / v0
            for j in range(nn - 2, nn + 1):
                s = h[nn - 1, j] + v1 * h[nn, j]
                s *= beta
                h[nn - 1, j] -= s
                h[nn, j] -= s * v1
            for i in range(l, nn + 1):
                s = h[i, nn - 1] + v1 * h[i, nn]
                s *= beta
                h[i, nn - 1] -= s
                h[i, nn] -= s * v1
        h[nn, nn - 2] = 0.0
    return sweeps


@njit(cache=True, nogil=True)
def eig_inplace(a, v, wr, wi):
    """Full pipeline on ``a`` (destroyed): balance, Hessenberg, QR.

    Returns sweeps used, or -1 on non-convergence.
    """
    _balance(a)
    _hessenberg(a, v)
    return _hqr(a, wr, wi, QR_SWEEP_FACTOR * a.shape[0])


@njit(cache=True, nogil=True)
def eig_copy(a):
    """Eigenvalues of ``a`` without destroying it: (wr, wi, status)."""
    n = a.shape[0]
    h = a.copy()
    v = np.empty(n)
    wr = np.empty(n)
    wi = np.empty(n)
    status = eig_inplace(h, v, wr, wi)
    return wr, wi, status


@njit(cache=True, nogil=True)
def jacobi_eigvals(a):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi, sorted descending.

    ``a`` is destroyed.  Returns (values, converged).
    """
    n = a.shape[0]
    w = np.empty(n)
    if n == 1:
        w[0] = a[0, 0]
        return w, True
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    tol = (EPS * math.sqrt(fro)) ** 2
    converged = fro == 0.0
    for _sweep in range(50):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        if off <= tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip - s * (aiq + tau * aip)
                        a[i, q] = aiq + s * (aip - tau * aiq)
                        a[p, i] = a[i, p]
                        a[q, i] = a[i, q]
    for i in range(n):
        w[i] = a[i, i]
    w.sort()
    for i in range(n // 2):
        tmp = w[i]
        w[i] = w[n - 1 - i]
        w[n - 1 - i] = tmp
    return w, converged


@njit(cache=True, nogil=True, inline="always")
def spread_from_eigs(wr, wi):
    """Largest pairwise distance among eigenvalues given as (re, im) arrays."""
    n = wr.shape[0]
    best = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            dr = wr[i] - wr[j]
            di = wi[i] - wi[j]
            d = math.sqrt(dr * dr + di * di)
            if d > best:
                best = d
    return best


# ---------------------------------------------------------------------------
# exhaustive 0-1 enumeration
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True, inline="always")
def _decode_spread(code, n, rows, cols, a, v, wr, wi):
    """Spread of the 0-1 matrix encoded by ``code``; (-1.0, fail) on failure."""
    for i in range(n):
        for j in range(n):
            a[i, j] = 0.0
    c = code
    for b in range(rows.shape[0]):
        if c & 1:
            a[rows[b], cols[b]] = 1.0
        c >>= 1
    status = eig_inplace(a, v, wr, wi)
    if status < 0:
        return -1.0, True
    return spread_from_eigs(wr, wi), False


@njit(cache=True, nogil=True)
def enum_best(n, lo, hi, rows, cols):
    """Scan codes [lo, hi): returns (best spread, smallest best code, fails).

    Strict improvement keeps the smallest attaining code, so any partition
    of the code range reduces to the same answer.
    """
    a = np.empty((n, n))
    v = np.empty(n)
    wr = np.empty(n)
    wi = np.empty(n)
    best = -1.0
    best_code = lo
    fails = 0
    for code in range(lo, hi):
        s, failed = _decode_spread(code, n, rows, cols, a, v, wr, wi)
        if failed:
            fails += 1
            continue
        if s > best:
            best = s
            best_code = code
    return best, best_code, fails


@njit(cache=True, nogil=True)
def enum_count(n, lo, hi, rows, cols, ref, tol):
    """Count codes in [lo, hi) whose spread is within ``tol`` of ``ref``."""
    a = np.empty((n, n))
    v = np.empty(n)
    wr = np.empty(n)
    wi = np.empty(n)
    count = 0
    for code in range(lo, hi):
        s, failed = _decode_spread(code, n, rows, cols, a, v, wr, wi)
        if failed:
            continue
        if s >= ref - tol:
            count += 1
    return count


@njit(cache=True, nogil=True)
def decode_matrix(code, n, rows, cols):
    """Materialize the 0-1 matrix for an enumeration code."""
    a = np.zeros((n, n))
    c = code
    for b in range(rows.shape[0]):
        if c & 1:
            a[rows[b], cols[b]] = 1.0
        c >>= 1
    return a


# ---------------------------------------------------------------------------
# projected coordinate ascent over the weighted box [0, 1]^{n x n}
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True, inline="always")
def _spread_at(a, i, j, t, h, v, wr, wi):
    """Spread of ``a`` with entry (i, j) set to ``t`` (a left unchanged)."""
    n = a.shape[0]
    old = a[i, j]
    a[i, j] = t
    for r in range(n):
        for c in range(n):
            h[r, c] = a[r, c]
    a[i, j] = old
    status = eig_inplace(h, v, wr, wi)
    if status < 0:
        return -1.0
    return spread_from_eigs(wr, wi)


@njit(cache=True, nogil=True)
def _golden_max(a, i, j, lo, hi, tol, h, v, wr, wi):
    """Golden-section maximization of spread over entry (i, j) in [lo, hi].

    Returns (best t, best value, evaluations).  The best point ever
    evaluated is returned, so non-unimodal sections cannot lose to the
    final bracket midpoint.
    """
    invphi = 0.6180339887498949
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc = _spread_at(a, i, j, c, h, v, wr, wi)
    fd = _spread_at(a, i, j, d, h, v, wr, wi)
    evals = 2
    if fc >= fd:
        best_t = c
        best_f = fc
    else:
        best_t = d
        best_f = fd
    while hi - lo > tol:
        if fc > fd:
            hi = d
            d = c
            fd = fc
            c = hi - invphi * (hi - lo)
            fc = _spread_at(a, i, j, c, h, v, wr, wi)
            evals += 1
            if fc > best_f:
                best_f = fc
                best_t = c
        else:
            lo = c
            c = d
            fc = fd
            d = lo + invphi * (hi - lo)
            fd = _spread_at(a, i, j, d, h, v, wr, wi)
            evals += 1
            if fd > best_f:
                best_f = fd
                best_t = d
    return best_t, best_f, evals


@njit(cache=True, nogil=True)
def ascent_restart(n, state, rows, cols, coord_tol, sweep_tol, max_sweeps):
    """One coordinate-ascent restart from a seeded random box point.

    Sweeps the free entries in a freshly shuffled order, line-optimizing
    each over [0, 1] with golden-section runs bracketed by {0, current, 1},
    until a whole sweep improves the spread by less than ``sweep_tol``.

    Returns (matrix, spread, evaluations, converged_flag).
    """
    m = rows.shape[0]
    a = np.zeros((n, n))
    h = np.empty((n, n))
    v = np.empty(n)
    wr = np.empty(n)
    wi = np.empty(n)
    st = state
    for b in range(m):
        u, st = _uniform01(st)
        a[rows[b], cols[b]] = u
    cur = _spread_at(a, 0, 0, a[0, 0], h, v, wr, wi)
    evals = 1
    if cur < 0.0:
        return a, -1.0, evals, False
    order = np.arange(m)
    converged = False
    for _sweep in range(max_sweeps):
        start = cur
        for idx in range(m - 1, 0, -1):
            u, st = _uniform01(st)
            kswap = int(u * (idx + 1))
            if kswap > idx:
                kswap = idx
            tmp = order[idx]
            order[idx] = order[kswap]
            order[kswap] = tmp
        for tpos in range(m):
            b = order[tpos]
            i = rows[b]
            j = cols[b]
            tcur = a[i, j]
            best_t = tcur
            best_f = cur
            f0 = _spread_at(a, i, j, 0.0, h, v, wr, wi)
            f1 = _spread_at(a, i, j, 1.0, h, v, wr, wi)
            evals += 2
            if f0 > best_f:
                best_f = f0
                best_t = 0.0
            if f1 > best_f:
                best_f = f1
                best_t = 1.0
            if tcur > coord_tol:
                t, f, ne = _golden_max(a, i, j, 0.0, tcur, coord_tol,
                                       h, v, wr, wi)
                evals += ne
                if f > best_f:
                    best_f = f
                    best_t = t
            if 1.0 - tcur > coord_tol:
                t, f, ne = _golden_max(a, i, j, tcur, 1.0, coord_tol,
                                       h, v, wr, wi)
                evals += ne
                if f > best_f:
                    best_f = f
                    best_t = t
            t, f, ne = _golden_max(a, i, j, 0.0, 1.0, coord_tol,
                                   h, v, wr, wi)
            evals += ne
            if f > best_f:
                best_f = f
                best_t = t
            a[i, j] = best_t
            cur = best_f
        if cur - start < sweep_tol:
            converged = True
            break
    final = _spread_at(a, 0, 0, a[0, 0], h, v, wr, wi)
    evals += 1
    return a, final, evals, converged

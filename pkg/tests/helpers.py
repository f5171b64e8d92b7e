"""Shared sample suites and oracles for the property tests."""

import numpy as np

from spreadlab import construct_join, construct_kron_extremal, \
    small_spread_catalog


def unit_box_suite(seed, count, n_lo=2, n_hi=8):
    """Matrices with entries in [0, 1]: dense uniform, sparse 0-1
    digraphs, and near-extremal perturbations, round-robin."""
    rng = np.random.default_rng(seed)
    catalog = {m.shape[0]: m for m, _ in small_spread_catalog()}
    out = []
    for k in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        kind = k % 3
        if kind == 0:
            a = rng.uniform(0.0, 1.0, (n, n))
        elif kind == 1:
            p = float(rng.choice((0.2, 0.5, 0.8)))
            a = (rng.uniform(0.0, 1.0, (n, n)) < p).astype(float)
        else:
            if n % 3 == 0:
                base = construct_kron_extremal(n)
            elif n in catalog:
                base = catalog[n]
            else:
                base = construct_join(n)
            a = np.clip(base + rng.uniform(-0.05, 0.05, (n, n)), 0.0, 1.0)
        out.append(a)
    return out


def uniform_and_digraph_suite(seed, count, n_lo=2, n_hi=8):
    """Entries uniform in [0, 1] alternating with random 0-1 digraphs."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        if k % 2 == 0:
            out.append(rng.uniform(0.0, 1.0, (n, n)))
        else:
            p = float(rng.choice((0.2, 0.5, 0.8)))
            out.append((rng.uniform(0.0, 1.0, (n, n)) < p).astype(float))
    return out


def match_multisets(left, right):
    """Greedy complex multiset matching; returns the worst min-distance."""
    pool = list(right)
    worst = 0.0
    for v in left:
        dists = [abs(v - r) for r in pool]
        k = int(np.argmin(dists))
        worst = max(worst, dists[k])
        pool.pop(k)
    return worst


def numpy_spread(a):
    """Independent spread oracle through numpy's eigensolver."""
    vals = np.linalg.eigvals(np.asarray(a, dtype=float))
    best = 0.0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            best = max(best, abs(vals[i] - vals[j]))
    return best

"""Haar unitary sampling, rectangular truncation, and product chains.

Haar matrices are generated by the Ginibre + QR construction with the
diagonal phase correction; raw QR output is not Haar distributed.  All
randomness flows through named substreams of a single master seed so
that trials are reproducible independently of evaluation order.
"""

from __future__ import annotations

import numpy as np


class HaarSamplingError(RuntimeError):
    """QR repeatedly failed on a numerically rank-deficient Ginibre draw."""


def substream(master_seed: int, *key: int) -> np.random.Generator:
    """Derive an independent generator from a master seed and an integer key.

    The same (seed, key) pair always yields the same stream, regardless of
    how many other streams were created before it.
    """
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


def sample_ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """i.i.d. standard complex normal matrix (variance 1/2 per component)."""
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / np.sqrt(2.0)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw an n x n Haar unitary matrix.

    QR of a Ginibre matrix, then each column of Q is multiplied by the
    phase of the corresponding diagonal entry of R.  This makes the
    factorization the unique one with positive-diagonal R, which is the
    construction that is provably Haar.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for _ in range(3):
        g = sample_ginibre(n, n, rng)
        q, r = np.linalg.qr(g)
        d = np.diagonal(r)
        if np.any(np.abs(d) < n * np.finfo(float).tiny * 16):
            continue  # rank-deficient draw, probability zero in theory
        return q * (d / np.abs(d))
    raise HaarSamplingError(f"Ginibre draw rank-deficient 3 times at n={n}")


def truncate_block(u: np.ndarray, p: int, q: int) -> np.ndarray:
    """Left-uppermost p x q block of u."""
    rows, cols = u.shape
    if p > rows or q > cols:
        raise ValueError(f"block {p}x{q} exceeds matrix dimensions {rows}x{cols}")
    if p < 1 or q < 1:
        raise ValueError(f"block dimensions must be positive, got {p}x{q}")
    return u[:p, :q].copy()


def product_chain(config, master_seed: int, trial: int = 0) -> np.ndarray:
    """Product of k independent truncated Haar unitaries.

    Matrix i is the n_i x n_{i+1} corner block of its own Haar draw; the
    result is square of size n_1 and a contraction.  Each of the k draws
    uses substream (trial, i) of the master seed.
    """
    b = None
    for i in range(config.k):
        u = haar_unitary(config.n, substream(master_seed, trial, i))
        a = truncate_block(u, config.dims[i], config.dims[i + 1])
        b = a if b is None else b @ a
    return b


def trace_moment(b: np.ndarray, p: int) -> float:
    """Normalized trace (1/m) Tr((BB*)^p) of a square matrix B.

    Computed from singular values, which is exact and keeps the result
    real and nonnegative.  p = 0 returns 1 (normalized trace of I).
    """
    m, mm = b.shape
    if m != mm:
        raise ValueError(f"matrix must be square, got {m}x{mm}")
    if p < 0:
        raise ValueError(f"moment order must be nonnegative, got {p}")
    if p == 0:
        return 1.0
    sv = np.linalg.svd(b, compute_uv=False)
    return float(np.sum(sv ** (2 * p)) / m)

"""Dense linear algebra over F_q on small integer-code matrices.

Everything here is Gaussian elimination at desk scale.  F_2 is just the
q = 2 case, so binary and q-ary callers share one implementation.
"""

from __future__ import annotations

import numpy as np

from .field import GF


def as_matrix(M, ncols: int | None = None) -> np.ndarray:
    """Coerce to a 2-D int64 array; empty inputs become (0, ncols)."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        return A.reshape(0, ncols if ncols is not None else (A.shape[1] if A.ndim == 2 else 0))
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    return A


def rref_augmented(gf: GF, M, C) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Reduced row echelon form of M, applying identical row ops to C.

    Pivot entries are normalised to 1 and eliminated above and below, so
    the result is the unique canonical representative of the row space
    (with the carried columns transformed covariantly).
    """
    R = as_matrix(M).copy()
    A = np.asarray(C, dtype=np.int64).copy()
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(R[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
            A[[r, p]] = A[[p, r]]
        inv = gf.inv(int(R[r, c]))
        if inv != 1:
            R[r] = gf.mul_arr(R[r], inv)
            A[r] = gf.mul_arr(A[r], inv)
        for i in range(rows):
            f = int(R[i, c])
            if i != r and f:
                R[i] ^= gf.mul_arr(R[r], f)
                A[i] ^= gf.mul_arr(A[r], f)
        pivots.append(c)
        r += 1
    return R, A, pivots


def rref(gf: GF, M) -> tuple[np.ndarray, list[int]]:
    M = as_matrix(M)
    R, _, pivots = rref_augmented(gf, M, np.zeros((M.shape[0], 0), dtype=np.int64))
    return R, pivots


def rank(gf: GF, M) -> int:
    return len(rref(gf, M)[1])


def kernel_basis(gf: GF, M) -> np.ndarray:
    """Generator matrix of the right kernel {x : M x = 0}."""
    M = as_matrix(M)
    n = M.shape[1]
    R, pivots = rref(gf, M)
    free = [c for c in range(n) if c not in pivots]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for j, p in enumerate(pivots):
            K[i, p] = R[j, f]  # -R[j,f] == R[j,f] in characteristic 2
    return K


def solve(gf: GF, M, b) -> np.ndarray | None:
    """One particular solution of M x = b, or None if inconsistent."""
    M = as_matrix(M)
    b = np.asarray(b, dtype=np.int64)
    R, carried, pivots = rref_augmented(gf, M, b)
    r = len(pivots)
    if np.any(carried[r:]):
        return None
    x = np.zeros(M.shape[1], dtype=np.int64)
    for j, p in enumerate(pivots):
        x[p] = carried[j, 0]
    return x


def row_space_coefficients(gf: GF, M, w) -> np.ndarray | None:
    """Coefficients c with c @ M = w, or None if w is outside the row space.

    Unique when the rows of M are independent.
    """
    M = as_matrix(M)
    w = np.asarray(w, dtype=np.int64)
    if M.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(w) else None
    return solve(gf, M.T, w)


def in_row_space(gf: GF, M, w) -> bool:
    return row_space_coefficients(gf, M, w) is not None


def is_invertible(gf: GF, M) -> bool:
    M = as_matrix(M)
    return M.shape[0] == M.shape[1] and rank(gf, M) == M.shape[0]


def random_matrix(gf: GF, rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    return rng.integers(0, gf.q, size=(m, n), dtype=np.int64)


def random_full_rank(gf: GF, rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    """Rejection-sample an m x n matrix of rank m (requires m <= n)."""
    if m > n:
        raise ValueError("cannot have rank m > n")
    while True:
        M = random_matrix(gf, rng, m, n)
        if rank(gf, M) == m:
            return M


def random_invertible(gf: GF, rng: np.random.Generator, m: int) -> np.ndarray:
    return random_full_rank(gf, rng, m, m)

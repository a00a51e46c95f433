"""Vectorized exhaustive scans over prime-field algebras.

Pure-Python evaluation is exact but too slow to sweep |F|^d elements when
|F|^d runs into the hundreds of thousands, so the whole-space scans run on
numpy tensors.  Arithmetic is done in floating point to keep BLAS in play;
a magnitude bound picks the narrowest dtype whose integers stay exact, and
residues are only reduced mod p where the bound requires it.  Identity
arguments the law is *linear* in range over basis vectors only, which by
linearity loses nothing; the nonlinear slot is swept over every field vector.
"""

from __future__ import annotations

import numpy as np

BLOCK = 32768


def structure_tensor(A) -> np.ndarray:
    """Structure constants as a dense (d, d, d) float array of residues."""
    if A.field.kind != "prime":
        raise ValueError("structure_tensor needs a prime-field algebra")
    d = A.dim
    C = np.zeros((d, d, d), dtype=np.float64)
    for (i, j), terms in A.table.items():
        for k, c in terms:
            C[i, j, k] = c % A.field.p
    return C


def vector_blocks(p: int, d: int, block: int = BLOCK):
    """Yield all p^d coefficient vectors in lexicographic order, in blocks.

    Row n holds the base-p digits of n, most significant digit first, which
    matches itertools.product(range(p), repeat=d).
    """
    total = p ** d
    weights = np.array([p ** (d - 1 - i) for i in range(d)], dtype=np.int64)
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        yield start, ((idx[:, None] // weights[None, :]) % p).astype(np.float64)


def _strategy(p: int, d: int):
    """(dtype, staged_reduction) so that every intermediate stays exact."""
    bound = (d ** 4) * (p - 1) ** 5
    if bound < 2 ** 24:
        return np.float32, False
    if bound < 2 ** 53:
        return np.float64, False
    return np.float64, True


def _first_bad(lhs: np.ndarray, rhs: np.ndarray, p: int):
    """First multi-index whose residual is nonzero mod p, or None."""
    it = np.int32 if lhs.dtype == np.float32 else np.int64
    diff = (lhs - rhs).astype(it) % p
    if not diff.any():
        return None
    bad = np.argwhere(diff.any(axis=-1))
    return tuple(int(v) for v in bad[0])


def scan_middle_moufang(A):
    """Witness (x, y, z) with (xy)(zx) != (x(yz))x, or None.

    x sweeps all field vectors; y, z sweep basis vectors (the law is linear
    in both, so this decides the law for all arguments).
    """
    C = structure_tensor(A)
    p, d = A.field.p, A.dim
    dt, staged = _strategy(p, d)

    def red(a):
        return a % p if staged else a

    Cf = C.astype(dt)
    C2 = Cf.reshape(d, d * d)
    # M2[j, k, c, a] = sum_e C[j,k,e] C[c,e,a]  (matrix of x -> x (e_j e_k))
    M2 = np.tensordot(C, C, axes=([2], [1])) % p
    M2f = np.ascontiguousarray(M2.transpose(2, 0, 1, 3)).reshape(d, d ** 3).astype(dt)
    for start, X in vector_blocks(p, d):
        n = X.shape[0]
        Xf = X.astype(dt)
        P = red(np.tensordot(Xf, Cf, axes=([1], [0])))     # P[n,j,:] = x e_j
        G = red(np.tensordot(Xf, Cf, axes=([1], [1])))     # G[n,k,:] = e_k x
        T = red(np.matmul(P, C2)).reshape(n, d, d, d)      # T[n,j,b,m]
        # lhs[n,j,k,m] = sum_b G[n,k,b] T[n,j,b,m]
        T2 = np.ascontiguousarray(T.transpose(0, 2, 1, 3)).reshape(n, d, d * d)
        lhs = np.matmul(G, T2).reshape(n, d, d, d).transpose(0, 2, 1, 3)
        S = red(np.matmul(Xf, M2f)).reshape(n, d * d, d)   # x (e_j e_k)
        rhs = np.matmul(S, G).reshape(n, d, d, d)
        hit = _first_bad(lhs, rhs, p)
        if hit is not None:
            ni, j, k = hit
            return _witness_args(A, X[ni], (j, k))
    return None


def scan_jordan(A):
    """Witness (x, y) with (x^2, y, x) != 0, or None; y sweeps the basis."""
    C = structure_tensor(A)
    p, d = A.field.p, A.dim
    dt, staged = _strategy(p, d)

    def red(a):
        return a % p if staged else a

    Cf = C.astype(dt)
    C2 = Cf.reshape(d, d * d)
    for start, X in vector_blocks(p, d):
        n = X.shape[0]
        Xf = X.astype(dt)
        H = np.matmul(Xf, C2).reshape(n, d, d)             # sum_a x_a C[a,b,m]
        XX = red((Xf[:, :, None] * H).sum(axis=1))         # x x
        BJ = red(np.tensordot(XX, Cf, axes=([1], [0])))    # x^2 e_j
        G = red(np.tensordot(Xf, Cf, axes=([1], [1])))     # G[n,a,m]
        lhs = np.matmul(BJ, G)                             # (x^2 e_j) x
        rhs = np.matmul(G, BJ)                             # x^2 (e_j x)
        hit = _first_bad(lhs, rhs, p)
        if hit is not None:
            ni, j = hit
            return _witness_args(A, X[ni], (j,))
    return None


def scan_left_alternative(A):
    """Witness (x, y) with (x, x, y) != 0, or None (exhaustive in x)."""
    C = structure_tensor(A)
    p, d = A.field.p, A.dim
    dt, staged = _strategy(p, d)

    def red(a):
        return a % p if staged else a

    Cf = C.astype(dt)
    C2 = Cf.reshape(d, d * d)
    for start, X in vector_blocks(p, d):
        n = X.shape[0]
        Xf = X.astype(dt)
        H = np.matmul(Xf, C2).reshape(n, d, d)
        XX = red((Xf[:, :, None] * H).sum(axis=1))
        lhs = np.tensordot(XX, Cf, axes=([1], [0]))        # (xx) e_j
        P = red(np.tensordot(Xf, Cf, axes=([1], [0])))     # P[n,j,:] = x e_j
        rhs = np.matmul(P, P)                              # x (x e_j)
        hit = _first_bad(lhs, rhs, p)
        if hit is not None:
            ni, j = hit
            return _witness_args(A, X[ni], (j,))
    return None


def scan_right_alternative(A):
    """Witness (x, y) with (x, y, y) != 0, or None (exhaustive in y)."""
    C = structure_tensor(A)
    p, d = A.field.p, A.dim
    dt, staged = _strategy(p, d)

    def red(a):
        return a % p if staged else a

    Cf = C.astype(dt)
    C2 = Cf.reshape(d, d * d)
    for start, Y in vector_blocks(p, d):
        n = Y.shape[0]
        Yf = Y.astype(dt)
        G = red(np.tensordot(Yf, Cf, axes=([1], [1])))     # G[n,j,:] = e_j y
        H = np.matmul(Yf, C2).reshape(n, d, d)
        YY = red((Yf[:, :, None] * H).sum(axis=1))
        lhs = np.matmul(G, G)                              # (e_j y) y
        rhs = np.tensordot(YY, Cf, axes=([1], [1]))        # e_j (y y)
        hit = _first_bad(lhs, rhs, p)
        if hit is not None:
            ni, j = hit
            return _witness_args(A, Y[ni], (j,), basis_first=True)
    return None


def _witness_args(A, x, basis_idx, basis_first=False):
    xs = [_to_elem(A, x)]
    es = [A.basis_vec(int(j)) for j in basis_idx]
    return (es + xs) if basis_first else (xs + es)


def _to_elem(A, row) -> list:
    return [A.field.from_int(int(v)) for v in row]


def mulrows(A, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Row-wise algebra products of two (n, d) residue arrays."""
    C = structure_tensor(A)
    p, d = A.field.p, A.dim
    H = np.matmul(X, C.reshape(d, d * d)).reshape(X.shape[0], d, d) % p
    return ((Y[:, :, None] * H).sum(axis=1)) % p


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of (n, r, c) matrices over GF(p), vectorized Gauss."""
    A = (mats.astype(np.int64)) % p
    n, r, c = A.shape
    inv_table = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv_table[v] = pow(v, p - 2, p)
    ranks = np.zeros(n, dtype=np.int64)
    rows_idx = np.arange(r)[None, :]
    sel = np.arange(n)
    for col in range(c):
        colvals = A[:, :, col] % p
        eligible = (colvals != 0) & (rows_idx >= ranks[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        hn = sel[has]
        piv = eligible[has].argmax(axis=1)
        cur = ranks[has]
        # swap pivot row into position `cur`
        tmp = A[hn, piv].copy()
        A[hn, piv] = A[hn, cur]
        A[hn, cur] = tmp
        pivvals = A[hn, cur, col] % p
        A[hn, cur] = (A[hn, cur] * inv_table[pivvals][:, None]) % p
        factors = A[hn, :, col].copy()
        factors[np.arange(len(hn)), cur] = 0
        A[hn] = (A[hn] - factors[:, :, None] * A[hn, cur][:, None, :]) % p
        ranks[has] += 1
    return ranks


def find_invertible_combo(basis_flat: np.ndarray, p: int, d: int,
                          block: int = BLOCK):
    """First coefficient vector whose combination of the basis maps has full
    rank, scanning all p^m combinations in lexicographic order; None if none.

    basis_flat: (m, d*d) residue array, row-major flattened maps.
    """
    m = basis_flat.shape[0]
    B = basis_flat.astype(np.float64)
    for start, V in vector_blocks(p, m, block):
        W = np.matmul(V, B) % p
        ranks = batched_rank_mod_p(W.reshape(-1, d, d), p)
        hits = np.nonzero(ranks == d)[0]
        if hits.size:
            i = int(hits[0])
            return (V[i].astype(np.int64).tolist(),
                    W[i].reshape(d, d).astype(np.int64).tolist())
    return None

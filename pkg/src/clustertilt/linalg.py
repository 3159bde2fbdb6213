"""Exact linear algebra over a prime field GF(p).

Matrices are plain ``numpy.int64`` arrays whose entries are kept reduced into
``[0, p)``.  Module elements are column vectors and linear maps act on the
left, so a map ``k^n -> k^m`` is an ``m x n`` array.  The default prime is
small enough that a product of two reduced entries fits comfortably in int64,
and every matrix product is reduced immediately afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 1000003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def as_matrix(data, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce ``data`` into a reduced int64 matrix (negative entries allowed)."""
    m = np.array(data, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    """Reduced row echelon form of ``m`` and its rank."""
    a, pivots = _rref_with_pivots(m, p)
    return a, len(pivots)


def _rref_with_pivots(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(_rref_with_pivots(m, p)[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``k^ambient_dim`` stored as reduced echelon basis rows."""

    ambient_dim: int
    basis: np.ndarray  # (dim, ambient_dim), rref with no zero rows
    pivots: tuple[int, ...]
    prime: int = DEFAULT_PRIME

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def columns(self) -> np.ndarray:
        """Basis vectors as columns, shape ``(ambient_dim, dim)``."""
        return self.basis.T.copy()

    @classmethod
    def span(cls, vectors: np.ndarray, p: int) -> "Subspace":
        """Span of the *columns* of ``vectors``."""
        n = vectors.shape[0]
        if vectors.shape[1] == 0:
            return cls(n, zeros(0, n), (), p)
        a, piv = _rref_with_pivots(vectors.T, p)
        return cls(n, a[:len(piv)], tuple(piv), p)

    @classmethod
    def full(cls, n: int, p: int = DEFAULT_PRIME) -> "Subspace":
        return cls(n, identity(n), tuple(range(n)), p)

    @classmethod
    def zero(cls, n: int, p: int = DEFAULT_PRIME) -> "Subspace":
        return cls(n, zeros(0, n), (), p)


def _kernel(m: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    rows, cols = m.shape
    if rows == 0:
        return identity(cols), 0
    a, piv = _rref_with_pivots(m, p)
    pset = set(piv)
    free = [c for c in range(cols) if c not in pset]
    vecs = zeros(cols, len(free))
    for j, f in enumerate(free):
        vecs[f, j] = 1
        for r, pc in enumerate(piv):
            vecs[pc, j] = (-a[r, f]) % p
    return vecs, len(piv)


def kernel_basis(m: np.ndarray, p: int) -> Subspace:
    """Subspace ``{x : m x = 0}``."""
    vecs, r = _kernel(m, p)
    ker = Subspace.span(vecs, p)
    assert ker.dim + r == m.shape[1], "rank-nullity violated"
    return ker


def kernel_columns(m: np.ndarray, p: int) -> np.ndarray:
    """Kernel basis as columns; cheaper than building a Subspace."""
    vecs, r = _kernel(m, p)
    assert vecs.shape[1] + r == m.shape[1], "rank-nullity violated"
    return vecs


def image_basis(m: np.ndarray, p: int) -> Subspace:
    return Subspace.span(m, p)


def solve(m: np.ndarray, target: np.ndarray, p: int) -> np.ndarray | None:
    """Return some ``X`` with ``m X = target``, or ``None`` if there is none."""
    rows, cols = m.shape
    if target.shape[0] != rows:
        raise ValueError(f"row mismatch: {m.shape} vs {target.shape}")
    k = target.shape[1]
    if rows == 0:
        return zeros(cols, k)
    aug = np.concatenate([m % p, target % p], axis=1)
    a, piv = _rref_with_pivots(aug, p)
    if any(c >= cols for c in piv):
        return None
    x = zeros(cols, k)
    for r, c in enumerate(piv):
        x[c] = a[r, cols:]
    return x


def inverse(m: np.ndarray, p: int) -> np.ndarray | None:
    n = m.shape[0]
    if m.shape != (n, n):
        return None
    if n == 0:
        return zeros(0, 0)
    x = solve(m, identity(n), p)
    if x is None or not np.array_equal(matmul(m, x, p), identity(n)):
        return None
    return x


def quotient_basis(ambient_dim: int, sub: Subspace) -> tuple[np.ndarray, np.ndarray]:
    """Projection onto ``k^ambient_dim / sub`` and a section of it.

    The quotient is coordinatised by the non-pivot columns of ``sub``'s echelon
    basis.  Returns ``(proj, section)`` with ``proj @ section = I`` and
    ``proj`` vanishing on ``sub``.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace lives in a different ambient space")
    piv = list(sub.pivots)
    pset = set(piv)
    rest = [c for c in range(ambient_dim) if c not in pset]
    proj = zeros(len(rest), ambient_dim)
    section = zeros(ambient_dim, len(rest))
    for j, c in enumerate(rest):
        proj[j, c] = 1
        section[c, j] = 1
    if piv:
        # v - R^T v[piv] clears pivot coordinates; read off the rest.
        proj[:, piv] = (-sub.basis[:, rest].T) % sub.prime
    return proj, section

"""
Subspaces of Sym₂(3), the symmetric 3×3 matrices, with canonical RREF coordinates.

Coordinates of a symmetric matrix are (m11, m12, m13, m22, m23, m33); the
apolarity pairing with a quadric (x², xy, xz, y², yz, z²) is the dot product.
"""

import numpy as np

import gf
from errors import DependentBasis, NotSymmetric, SingularMatrix

SYM_INDEX = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def sym_to_coords(A):
    """(..., 3, 3) symmetric matrices -> (..., 6) coordinates."""
    return np.stack([A[..., i, j] for i, j in SYM_INDEX], axis=-1)


def coords_to_sym(c):
    """(..., 6) coordinates -> (..., 3, 3) symmetric matrices."""
    c = np.asarray(c)
    out = np.zeros(c.shape[:-1] + (3, 3), dtype=c.dtype)
    for k, (i, j) in enumerate(SYM_INDEX):
        out[..., i, j] = c[..., k]
        out[..., j, i] = c[..., k]
    return out


def unit_matrix(i, j, p):
    """E_ij + E_ji (or E_ii) over F_p."""
    A = np.zeros((3, 3), dtype=np.int64)
    A[i, j] = A[j, i] = 1
    return gf.extension(p, 1)(A)


class Subspace:
    """An r-dimensional subspace of Sym₂(3) over F_p, kept with the basis it was given."""

    dim = None

    def __init__(self, basis):
        if basis.ndim != 3 or basis.shape[1:] != (3, 3):
            raise ValueError(f"expected (r, 3, 3) matrices, got shape {basis.shape}")
        if self.dim is not None and basis.shape[0] != self.dim:
            raise DependentBasis(f"{type(self).__name__} needs {self.dim} matrices, got {basis.shape[0]}")
        if np.any(basis != np.swapaxes(basis, 1, 2)):
            raise NotSymmetric("basis matrices must be symmetric")
        self.basis = basis
        G = type(basis)
        rows = G(sym_to_coords(basis.view(np.ndarray)))
        R = rows.row_reduce()
        if np.any(np.all(R == 0, axis=1)):
            raise DependentBasis("basis matrices are linearly dependent")
        self.canonical = R

    @classmethod
    def from_ints(cls, matrices, p):
        GF = gf.extension(p, 1)
        arr = np.asarray(matrices, dtype=np.int64).reshape(-1, 3, 3) % p
        return cls(GF(arr))

    @classmethod
    def from_coords(cls, rows, p):
        return cls(gf.extension(p, 1)(coords_to_sym(np.asarray(rows, dtype=np.int64) % p)))

    @property
    def field(self):
        return type(self.basis)

    @property
    def p(self):
        return self.field.characteristic

    @property
    def key(self):
        """Canonical coordinates packed base p, row-major, most significant first."""
        key = 0
        for digit in self.canonical.view(np.ndarray).reshape(-1):
            key = key * self.p + int(digit)
        return key

    def canonical_basis(self):
        return self.field(coords_to_sym(self.canonical.view(np.ndarray)))

    def matrices(self):
        return [self.basis[i].copy() for i in range(self.basis.shape[0])]

    def member(self, t):
        """sum_i t_i * basis_i, at the level of t."""
        t = np.atleast_1d(t)
        k = gf.level(t)
        B = gf.embed(self.basis, k)
        out = type(B).Zeros((3, 3))
        for i in range(B.shape[0]):
            out = out + B[i] * t[i]
        return out

    def act(self, M):
        return act(M, self)

    def __eq__(self, other):
        if not isinstance(other, Subspace) or self.dim != other.dim or self.p != other.p:
            return NotImplemented
        return bool(np.all(self.canonical == other.canonical))

    def __hash__(self):
        return hash((self.p, self.key))

    def __repr__(self):
        mats = [[[int(v) for v in row] for row in A] for A in self.basis]
        return f"{type(self).__name__}(p={self.p}, {mats})"


def act(M, W):
    """Subspace spanned by Mᵀ A M for the basis A of W (a right action)."""
    G = W.field
    M = M if isinstance(M, G) else G(np.asarray(M, dtype=np.int64) % W.p)
    if np.linalg.det(M) == 0:
        raise SingularMatrix("acting matrix is singular")
    moved = G(np.stack([(M.T @ A @ M).view(np.ndarray) for A in W.basis]))
    return type(W)(moved)


def random_gl3(seed, p):
    """Uniform invertible 3×3 matrix over F_p, deterministic per seed."""
    rng = np.random.default_rng(seed)
    GF = gf.extension(p, 1)
    while True:
        M = GF(rng.integers(0, p, size=(3, 3)))
        if np.linalg.det(M) != 0:
            return M


def random_subspace(cls, seed, p):
    """Uniform r-plane of Sym₂(3) via a random full-rank coordinate matrix."""
    rng = np.random.default_rng(seed)
    GF = gf.extension(p, 1)
    while True:
        rows = GF(rng.integers(0, p, size=(cls.dim, 6)))
        if np.linalg.matrix_rank(rows) == cls.dim:
            return cls(GF(coords_to_sym(rows.view(np.ndarray))))


def annihilator_coords(W):
    """Quadric coefficient vectors pairing to zero with every member of W (RREF rows)."""
    return null_space_rows(W.canonical)


def null_space_rows(R):
    """RREF basis of {v : R v = 0} for a matrix R already in RREF."""
    G = type(R)
    n = R.shape[1]
    pivots = [int(np.flatnonzero(R[i].view(np.ndarray))[0]) for i in range(R.shape[0])
              if np.any(R[i] != 0)]
    vectors = []
    for f in (c for c in range(n) if c not in pivots):
        v = G.Zeros(n)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -R[i, f]
        vectors.append(v.view(np.ndarray))
    if not vectors:
        return G.Zeros((0, n))
    return G(np.stack(vectors)).row_reduce()

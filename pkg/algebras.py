"""
Rank-7 local algebras of type (3,3) and their correspondence with nets.

A net W pairs with the quadrics through the dot product of symmetric-matrix
coordinates (m11, m12, m13, m22, m23, m33) and quadric coefficients
(x², xy, xz, y², yz, z²). The algebra of W is k[x,y,z]/I with I₂ the
annihilator of W and I₃ everything; its multiplication table uses the basis
(1, x, y, z, e₁, e₂, e₃).
"""

import numpy as np

import gf
from config import log_message
from errors import (CharacteristicObstruction, NotLocal, NotType33,
                    SingularMatrix, WrongHilbert)
from forms import Form, TernaryQuadric, form_from_terms, monomial_name, monomials
from net_orbits import Net, OrbitLabel, classify_net
from subspaces import annihilator_coords

# Generators of the ideal printed next to each net representative
IDEALS = {
    OrbitLabel.I_a: ({'xx': 1}, {'xy': 1}, {'xz': 1},
                     {'yyy': 1}, {'yyz': 1}, {'yzz': 1}, {'zzz': 1}),
    OrbitLabel.I_b: ({'xx': 1}, {'xy': 1}, {'yy': 1}, {'zzz': 1}),
    OrbitLabel.II: ({'xz': 1, 'yy': -1}, {'yz': 1}, {'zz': 1},
                    {'xxx': 1}, {'xxy': 1}, {'xxz': 1}),
    OrbitLabel.III: ({'xy': 1}, {'yz': 1}, {'zz': 1},
                     {'xxx': 1}, {'xxz': 1}, {'yyy': 1}),
    OrbitLabel.IV_a: ({'xy': 1}, {'xz': 1}, {'yz': 1},
                      {'xxx': 1}, {'yyy': 1}, {'zzz': 1}),
    OrbitLabel.IV_b: ({'yy': 1, 'zz': 1, 'xx': -1, 'xz': 1}, {'xy': 1, 'xz': -1},
                      {'xz': 1, 'yz': -1}, {'xxy': 1}, {'xzz': 1}),
    OrbitLabel.V: ({'xy': 1}, {'yy': 1, 'xz': -1}, {'yz': 1},
                   {'xxx': 1}, {'zzz': 1}),
    OrbitLabel.VI: ({'xz': 1}, {'yz': 1}, {'xx': 1, 'xy': -2, 'yy': 1, 'zz': -1},
                    {'xxx': 1}, {'yyy': 1}),
    OrbitLabel.VII: ({'xy': 1}, {'yy': 1, 'xz': -1}, {'zz': 1}, {'xxx': 1}),
    OrbitLabel.VIII: ({'xy': 1, 'zz': -1}, {'yy': 1, 'xz': -1}, {'yz': 1}, {'xxx': 1}),
}

# The printed IV_b quadric y² + z² - x² + xz does not annihilate the printed
# representative; these three do.
APOLAR_QUADRICS_IV_B = ({'xy': 1, 'xz': -1}, {'xz': 1, 'yz': -1},
                        {'xx': 1, 'yy': 1, 'zz': 1, 'xz': -2})


def _span(rows):
    """RREF rows spanning the same space, zero rows dropped."""
    if rows.shape[0] == 0:
        return rows
    R = rows.row_reduce()
    return R[np.any(R != 0, axis=1)]


def _pivots(R):
    return [int(np.flatnonzero(row.view(np.ndarray))[0]) for row in R]


# =============================================================================
# QUADRIC SPACES
# =============================================================================

class QuadricSpace:
    """A subspace of ternary quadrics, kept as RREF coefficient rows."""

    def __init__(self, rows):
        self.rows = _span(rows)

    @classmethod
    def from_forms(cls, quadrics):
        G = quadrics[0].field
        return cls(G(np.stack([q.coeffs.view(np.ndarray) for q in quadrics])))

    @classmethod
    def from_terms(cls, terms, p):
        return cls.from_forms([form_from_terms(t, p) for t in terms])

    @property
    def dim(self):
        return self.rows.shape[0]

    @property
    def p(self):
        return type(self.rows).characteristic

    def forms(self):
        return [TernaryQuadric(row.copy()) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, QuadricSpace):
            return NotImplemented
        return self.rows.shape == other.rows.shape and bool(np.all(self.rows == other.rows))

    __hash__ = None

    def __repr__(self):
        return 'span{' + ', '.join(str(q) for q in self.forms()) + '}'


def apolar_annihilator(W):
    return QuadricSpace(annihilator_coords(W))


def ideal_generators(label, p):
    return [form_from_terms(terms, p) for terms in IDEALS[label]]


def ideal_quadrics(label, p):
    """Degree-2 part of the printed ideal."""
    return QuadricSpace.from_terms([t for t in IDEALS[label] if len(next(iter(t))) == 2], p)


# =============================================================================
# MULTIPLICATION TABLES
# =============================================================================

class MultTable:
    """Structure constants c[a, b, e]: basis_a · basis_b = sum_e c[a, b, e] basis_e.

    Basis element 0 is the unit.
    """

    def __init__(self, constants, notes=()):
        n = constants.shape[0]
        if constants.shape != (n, n, n):
            raise ValueError(f"expected (n, n, n) structure constants, got {constants.shape}")
        self.constants = constants
        self.notes = tuple(notes)

    @classmethod
    def from_ints(cls, values, p):
        GF = gf.extension(p, 1)
        return cls(GF(np.asarray(values, dtype=np.int64) % p))

    @property
    def field(self):
        return type(self.constants)

    @property
    def p(self):
        return self.field.characteristic

    @property
    def dim(self):
        return self.constants.shape[0]

    def to_ints(self):
        return self.constants.view(np.ndarray).astype(np.int64)

    def _products(self, U, V):
        """(len(U), len(V), n) integer products of the rows of U and V."""
        U = np.asarray(U.view(np.ndarray) if isinstance(U, self.field) else U, dtype=np.int64)
        V = np.asarray(V.view(np.ndarray) if isinstance(V, self.field) else V, dtype=np.int64)
        return np.einsum('ia,jb,abe->ije', U, V, self.to_ints()) % self.p

    def multiply(self, u, v):
        u = self.field(np.asarray(u, dtype=np.int64) % self.p) if not isinstance(u, self.field) else u
        v = self.field(np.asarray(v, dtype=np.int64) % self.p) if not isinstance(v, self.field) else v
        return self.field(self._products(u[np.newaxis], v[np.newaxis])[0, 0])

    def left_multiplication(self, b):
        """Matrix of v ↦ basis_b · v (column c is basis_b · basis_c)."""
        return self.constants[b].T.copy()

    def check_axioms(self):
        """Names of the failed axioms among commutativity, unit and associativity."""
        C = self.to_ints()
        p, n = self.p, self.dim
        failed = []
        if np.any(C != np.swapaxes(C, 0, 1)):
            failed.append('commutativity')
        if np.any(C[0] != np.eye(n, dtype=np.int64)) or np.any(C[:, 0] != np.eye(n, dtype=np.int64)):
            failed.append('unit')
        left = np.einsum('abe,ecf->abcf', C, C) % p
        right = np.einsum('bce,aef->abcf', C, C) % p
        if np.any(left != right):
            failed.append('associativity')
        return failed

    def change_basis(self, P):
        """Table in the basis given by the rows of P; row 0 must be the unit."""
        G = self.field
        P = P if isinstance(P, G) else G(np.asarray(P, dtype=np.int64) % self.p)
        if np.linalg.det(P) == 0:
            raise SingularMatrix("basis change is singular")
        unit = np.zeros(self.dim, dtype=np.int64)
        unit[0] = 1
        if np.any(P[0].view(np.ndarray) != unit):
            raise ValueError("the first new basis vector must be the unit")
        n = self.dim
        products = G(self._products(P, P).reshape(n * n, n))
        return MultTable((products @ np.linalg.inv(P)).reshape(n, n, n), self.notes)

    def __repr__(self):
        return f"MultTable(dim={self.dim}, p={self.p})"


def structure_constants(W):
    """Graded algebra of W on (1, x, y, z, e₁, e₂, e₃) with 𝔪³ = 0.

    x_a · x_b = sum_i A_i[a, b] e_i for the canonical basis A_i of W, so e_i is the
    class of a quadric dual to A_i under the apolarity pairing.
    """
    A = W.canonical_basis().view(np.ndarray).astype(np.int64)
    C = np.zeros((7, 7, 7), dtype=np.int64)
    C[0] = np.eye(7, dtype=np.int64)
    C[:, 0] = np.eye(7, dtype=np.int64)
    C[1:4, 1:4, 4:7] = np.transpose(A, (1, 2, 0))
    return MultTable(W.field(C))


def truncated_polynomial_table(n, p):
    """k[x]/(xⁿ) on the basis 1, x, ..., xⁿ⁻¹."""
    C = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n - a):
            C[a, b, a + b] = 1
    return MultTable.from_ints(C, p)


def quotient_algebra(generators, strict=False):
    """k[x,y,z]/(I + 𝔪⁴) truncated at 𝔪³, for a homogeneous ideal with I₂ of dimension 3.

    When the degree-3 part of I does not fill all cubics the table still
    truncates at 𝔪³ and records a note; strict=True raises WrongHilbert.
    """
    p = generators[0].p
    G = gf.extension(p, 1)
    quadrics, cubics = [], []
    for g in generators:
        if g.nvars != 3:
            raise ValueError("ideal generators must be ternary forms")
        if g.is_zero:
            continue
        if g.degree < 2:
            raise WrongHilbert(f"generator {g} of degree {g.degree} cuts the quotient below (1,3,3)")
        if g.degree == 2:
            quadrics.append(g.coeffs.view(np.ndarray))
        elif g.degree == 3:
            cubics.append(g)

    I2 = _span(G(np.stack(quadrics))) if quadrics else G.Zeros((0, 6))
    if I2.shape[0] != 3:
        raise WrongHilbert(f"degree-2 piece of the quotient has dimension {6 - I2.shape[0]}, expected 3")

    linear = [Form(G(row), 3, 1) for row in np.eye(3, dtype=np.int64)]
    multiples = [ell * q for ell in linear for q in (TernaryQuadric(r.copy()) for r in I2)] + cubics
    I3 = _span(G(np.stack([f.coeffs.view(np.ndarray) for f in multiples])))
    notes = []
    if I3.shape[0] < 10:
        taken = set(_pivots(I3))
        missing = [monomial_name(e) for c, e in enumerate(monomials(3, 3)) if c not in taken]
        message = (f"degree-3 part of the ideal has dimension {I3.shape[0]}; "
                   f"truncated at m^3 (missing {', '.join(missing)})")
        if strict:
            raise WrongHilbert(message)
        log_message(f"quotient_algebra: {message}")
        notes.append(message)

    pivots = _pivots(I2)
    standard = [c for c in range(6) if c not in pivots]
    index = {e: i for i, e in enumerate(monomials(3, 2))}
    R = I2.view(np.ndarray).astype(np.int64)
    C = np.zeros((7, 7, 7), dtype=np.int64)
    C[0] = np.eye(7, dtype=np.int64)
    C[:, 0] = np.eye(7, dtype=np.int64)
    for a in range(3):
        for b in range(3):
            e = [0, 0, 0]
            e[a] += 1
            e[b] += 1
            v = np.zeros(6, dtype=np.int64)
            v[index[tuple(e)]] = 1
            # reduce modulo I₂: clear every pivot column
            for row, c in zip(R, pivots):
                v = (v - v[c] * row) % p
            C[1 + a, 1 + b, 4:7] = v[standard]
    return MultTable(G(C), notes)


# =============================================================================
# HILBERT VECTOR AND THE INVERSE CORRESPONDENCE
# =============================================================================

def _filtration(T):
    """RREF bases of 𝔪, 𝔪², ... down to the last nonzero power."""
    p, n = T.p, T.dim
    if n % p == 0:
        raise CharacteristicObstruction(f"{n} is not invertible over F_{p}")
    failed = T.check_axioms()
    if failed:
        raise NotLocal(f"table fails {', '.join(failed)}")
    G = T.field
    C = T.to_ints()
    lam = np.einsum('bcc->b', C) * pow(n, -1, p) % p
    gens = np.eye(n, dtype=np.int64)
    gens[:, 0] = (gens[:, 0] - lam) % p
    m = _span(G(gens[1:]))

    closure = T._products(np.eye(n, dtype=np.int64), m).reshape(-1, n)
    if np.linalg.matrix_rank(G(np.concatenate([m.view(np.ndarray), closure]) % p)) > m.shape[0]:
        raise NotLocal("the traceless part is not an ideal")

    powers = [m]
    while powers[-1].shape[0] > 0:
        if len(powers) > n:
            raise NotLocal("the maximal ideal is not nilpotent")
        nxt = _span(G(T._products(powers[-1], m).reshape(-1, n)))
        powers.append(nxt)
    return powers[:-1]


def hilbert_vector(T):
    """(d₁, d₂, ...) with d_i = dim 𝔪ⁱ/𝔪ⁱ⁺¹."""
    dims = [P.shape[0] for P in _filtration(T)] + [0]
    return tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))


def recover_net(T):
    """Net of the symmetric forms 𝔪/𝔪² × 𝔪/𝔪² → 𝔪²."""
    powers = _filtration(T)
    dims = [P.shape[0] for P in powers] + [0]
    vector = tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))
    if vector != (3, 3):
        raise NotType33(f"Hilbert vector {vector}, expected (3, 3)")
    G = T.field
    m, m2 = powers[0], powers[1]
    basis = m2
    chosen = []
    for row in m:
        trial = G(np.concatenate([basis.view(np.ndarray), row.view(np.ndarray)[np.newaxis]]))
        if np.linalg.matrix_rank(trial) > basis.shape[0]:
            basis = trial
            chosen.append(row.view(np.ndarray))
    X = np.stack(chosen)
    products = T._products(X, X)
    # m2 is in RREF: coordinates of a vector of 𝔪² are its pivot entries
    S = products[:, :, _pivots(m2)]
    return Net(G(np.ascontiguousarray(np.transpose(S, (2, 0, 1)))))


def classify_algebra(T):
    return classify_net(recover_net(T))

"""
Homogeneous forms in 2 or 3 variables over the field tower.

Coefficients are FieldArrays in a fixed monomial order: descending
lexicographic exponents, so cubics read (x³, x²y, x²z, xy², xyz, xz², y³,
y²z, yz², z³), quadrics (x², xy, xz, y², yz, z²) and binary cubics
(x³, x²y, xy², y³).
"""

import itertools
import math
from enum import Enum
from functools import lru_cache

import galois
import numpy as np

import gf
from errors import NonReducedInput, UnsupportedField, ZeroForm

VARIABLES = 'xyz'


@lru_cache(maxsize=None)
def monomials(nvars, degree):
    """Exponent tuples of all monomials, descending lexicographic."""
    exps = [e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree]
    return tuple(sorted(exps, reverse=True))


def monomial_name(exponents, names=VARIABLES):
    """'x^2*z' for (2, 0, 1); empty for the constant monomial."""
    return '*'.join(f"{v}^{k}" if k > 1 else v for v, k in zip(names, exponents) if k)


@lru_cache(maxsize=None)
def _exponents(nvars, degree):
    return np.array(monomials(nvars, degree), dtype=np.int64).reshape(-1, nvars)


@lru_cache(maxsize=None)
def _index(nvars, degree):
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


@lru_cache(maxsize=None)
def _product_scatter(nvars, d1, d2):
    """0/1 matrix sending the flattened outer product of coefficients to the product form."""
    target = _index(nvars, d1 + d2)
    m1, m2 = monomials(nvars, d1), monomials(nvars, d2)
    S = np.zeros((len(m1) * len(m2), len(target)), dtype=np.int64)
    for i, a in enumerate(m1):
        for j, b in enumerate(m2):
            S[i * len(m2) + j, target[tuple(x + y for x, y in zip(a, b))]] = 1
    return S


def _common_level(*items):
    k = 1
    for item in items:
        k = math.lcm(k, gf.level(item))
    return k


def _lift_all(*arrays):
    k = _common_level(*arrays)
    return [gf.embed(a, k) for a in arrays]


# =============================================================================
# FORMS
# =============================================================================

class Form:
    """Homogeneous polynomial of a fixed degree in 2 or 3 variables."""

    nvars = None
    degree = None

    def __init__(self, coeffs, nvars=None, degree=None):
        if nvars is not None:
            self.nvars = nvars
        if degree is not None:
            self.degree = degree
        expected = len(monomials(self.nvars, self.degree))
        if coeffs.ndim != 1 or coeffs.shape[0] != expected:
            raise ValueError(f"expected {expected} coefficients, got shape {coeffs.shape}")
        self.coeffs = coeffs

    # --- construction ---

    @classmethod
    def zero(cls, field, nvars, degree):
        return make_form(field.Zeros(len(monomials(nvars, degree))), nvars, degree)

    @classmethod
    def from_ints(cls, values, p, nvars, degree):
        GF = gf.extension(p, 1)
        return make_form(GF(np.asarray(values, dtype=np.int64) % p), nvars, degree)

    # --- basic properties ---

    @property
    def field(self):
        return type(self.coeffs)

    @property
    def p(self):
        return self.field.characteristic

    @property
    def level(self):
        return self.field.degree

    @property
    def is_zero(self):
        return bool(np.all(self.coeffs == 0))

    def to_ints(self):
        if self.level != 1:
            raise UnsupportedField("integer coefficients only exist for forms over F_p")
        return [int(c) for c in self.coeffs]

    def signed_ints(self):
        p = self.p
        return [c - p if c > p // 2 else c for c in self.to_ints()]

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            return False
        a, b = _lift_all(self.coeffs, other.coeffs)
        return bool(np.all(a == b))

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if self.is_zero:
            return '0'
        names = VARIABLES if self.nvars == 3 else 'xy'
        values = self.signed_ints() if self.level == 1 else [int(c) for c in self.coeffs]
        terms = []
        for c, e in zip(values, monomials(self.nvars, self.degree)):
            if c == 0:
                continue
            mono = monomial_name(e, names)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return ' + '.join(terms).replace('+ -', '- ')

    # --- arithmetic ---

    def lift(self, k):
        return make_form(gf.embed(self.coeffs, k), self.nvars, self.degree)

    def descend(self):
        """Same form over F_p when every coefficient is rational."""
        if self.level == 1 or not gf.is_rational(self.coeffs):
            return self
        return Form.from_ints(self.coeffs.view(np.ndarray), self.p, self.nvars, self.degree)

    def _binary(self, other):
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ValueError("forms of different shape")
        return _lift_all(self.coeffs, other.coeffs)

    def __add__(self, other):
        a, b = self._binary(other)
        return make_form(a + b, self.nvars, self.degree)

    def __sub__(self, other):
        a, b = self._binary(other)
        return make_form(a - b, self.nvars, self.degree)

    def __neg__(self):
        return make_form(-self.coeffs, self.nvars, self.degree)

    def scale(self, c):
        """Multiply by a field element (or integer)."""
        if isinstance(c, (int, np.integer)):
            c = self.field(int(c) % self.p)
        a, s = _lift_all(self.coeffs, c)
        return make_form(a * s, self.nvars, self.degree)

    def __mul__(self, other):
        if not isinstance(other, Form):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("forms in different numbers of variables")
        a, b = _lift_all(self.coeffs, other.coeffs)
        G = type(a)
        outer = (a[:, np.newaxis] * b[np.newaxis, :]).reshape(1, -1)
        S = G(_product_scatter(self.nvars, self.degree, other.degree))
        return make_form((outer @ S)[0], self.nvars, self.degree + other.degree)

    def __pow__(self, n):
        result = Form(self.field.Ones(1), self.nvars, 0)
        for _ in range(n):
            result = result * self
        return result

    def normalized(self):
        """Scalar multiple whose first nonzero coefficient is 1 (zero stays zero)."""
        nz = np.flatnonzero(self.coeffs.view(np.ndarray))
        if len(nz) == 0:
            return self
        return make_form(self.coeffs / self.coeffs[nz[0]], self.nvars, self.degree)

    # --- calculus and substitution ---

    def derivative(self, var):
        G = self.field
        if self.degree == 0:
            return Form.zero(G, self.nvars, 0)
        target = _index(self.nvars, self.degree - 1)
        out = G.Zeros(len(target))
        for c, e in zip(self.coeffs, monomials(self.nvars, self.degree)):
            if e[var] == 0 or c == 0:
                continue
            lowered = list(e)
            lowered[var] -= 1
            i = target[tuple(lowered)]
            out[i] = out[i] + c * G(e[var] % self.p)
        return make_form(out, self.nvars, self.degree - 1)

    def partials(self):
        return tuple(self.derivative(v) for v in range(self.nvars))

    def evaluate(self, point):
        """Value at one point (ProjPoint or coordinate FieldArray)."""
        coords = point.coords if isinstance(point, ProjPoint) else point
        return self.evaluate_many(coords[np.newaxis, :])[0]

    def evaluate_many(self, points):
        """Values at the rows of an (N, nvars) FieldArray."""
        c, pts = _lift_all(self.coeffs, points)
        return (monomial_values(pts, self.degree) @ c[:, np.newaxis])[:, 0]

    def compose(self, M):
        """F∘M: substitute x_i -> sum_j M[i, j] y_j; M has shape (nvars, m)."""
        c, M = _lift_all(self.coeffs, M)
        G = type(c)
        m = M.shape[1]
        linear = [Form(M[i].copy(), m, 1) for i in range(self.nvars)]
        powers = [[Form(G.Ones(1), m, 0)] for _ in range(self.nvars)]
        for i in range(self.nvars):
            for _ in range(self.degree):
                powers[i].append(powers[i][-1] * linear[i])
        result = Form.zero(G, m, self.degree)
        for coeff, e in zip(c, monomials(self.nvars, self.degree)):
            if coeff == 0:
                continue
            term = powers[0][e[0]]
            for i in range(1, self.nvars):
                term = term * powers[i][e[i]]
            result = result + term.scale(coeff)
        return result


class BinaryCubic(Form):
    nvars, degree = 2, 3


class TernaryQuadric(Form):
    nvars, degree = 3, 2


class TernaryCubic(Form):
    nvars, degree = 3, 3


_FORM_CLASSES = {(2, 3): BinaryCubic, (3, 2): TernaryQuadric, (3, 3): TernaryCubic}


def make_form(coeffs, nvars, degree):
    cls = _FORM_CLASSES.get((nvars, degree))
    if cls is None:
        return Form(coeffs, nvars, degree)
    return cls(coeffs)


def evaluate(F, P):
    return F.evaluate(P)


def partials(F):
    return F.partials()


def monomial_values(points, degree):
    """(N, nmon) array of every monomial of the given degree at each point."""
    G = type(points)
    n, nvars = points.shape
    exps = _exponents(nvars, degree)
    result = G.Ones((n, exps.shape[0]))
    for v in range(nvars):
        table = G.Ones((degree + 1, n))
        for e in range(1, degree + 1):
            table[e] = table[e - 1] * points[:, v]
        result = result * table[exps[:, v]].T
    return result


def form_from_terms(terms, p):
    """Ternary form from {'xz': 1, 'yy': -1}-style monomial words."""
    degrees = {len(word) for word in terms}
    if len(degrees) != 1:
        raise ValueError(f"terms of mixed degree: {sorted(terms)}")
    degree = degrees.pop()
    index = _index(3, degree)
    values = np.zeros(len(index), dtype=np.int64)
    for word, c in terms.items():
        e = tuple(word.count(v) for v in VARIABLES)
        values[index[e]] += c
    return Form.from_ints(values, p, 3, degree)


def det_form(mats):
    """det(sum_i t_i * mats[i]) as a form of degree n in r variables.

    mats is an (r, n, n) FieldArray.
    """
    r, n, _ = mats.shape
    entries = [[Form(mats[:, a, b].copy(), r, 1) for b in range(n)] for a in range(n)]
    G = type(mats)
    total = Form.zero(G, r, n)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = entries[0][perm[0]]
        for a in range(1, n):
            term = term * entries[a][perm[a]]
        total = total - term if inversions % 2 else total + term
    return total


# =============================================================================
# POINTS
# =============================================================================

class ProjPoint:
    """Projective point, first nonzero coordinate scaled to 1.

    Rational points are stored over F_p; others at the level they were found.
    """

    __slots__ = ('coords',)

    def __init__(self, coords):
        nz = np.flatnonzero(coords.view(np.ndarray))
        if len(nz) == 0:
            raise ValueError("the zero vector is not a projective point")
        coords = coords / coords[nz[0]]
        if gf.level(coords) > 1 and gf.is_rational(coords):
            coords = gf.extension(gf.characteristic(coords), 1)(coords.view(np.ndarray))
        self.coords = coords

    @classmethod
    def from_ints(cls, values, p):
        return cls(gf.extension(p, 1)(np.asarray(values, dtype=np.int64) % p))

    @property
    def level(self):
        return gf.level(self.coords)

    @property
    def is_rational(self):
        return self.level == 1

    def ints(self):
        return tuple(int(c) for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.level == other.level and self.ints() == other.ints()

    def __hash__(self):
        return hash((self.level, self.ints()))

    def __repr__(self):
        return '[' + ':'.join(str(c) for c in self.ints()) + ']'


class RootMarker(Enum):
    IDENTICALLY_ZERO = 'identically zero'


IDENTICALLY_ZERO = RootMarker.IDENTICALLY_ZERO


# =============================================================================
# ROOTS AND FACTORS
# =============================================================================

def poly_roots(g):
    """[(root, multiplicity)] of a univariate galois.Poly over the closure.

    Each root is returned at level (level of g) * (degree of its irreducible factor),
    or over F_p when rational.
    """
    if g.degree <= 0:
        return []
    F = g.field
    p, a = F.characteristic, F.degree
    monic = galois.Poly(g.coeffs / g.coeffs[0])
    factors, mults = monic.factors()
    found = []
    for f, m in zip(factors, mults):
        k = a * f.degree
        G = gf.extension(p, k)
        lifted = galois.Poly(gf.embed(f.coeffs, k))
        for value in sorted(int(r) for r in lifted.roots()):
            r = G(value)
            if k > 1 and gf.is_rational(r):
                r = gf.extension(p, 1)(value)
            found.append((r, int(m)))
    return found


def binary_roots(f):
    """Projective roots of a binary form with multiplicities, or IDENTICALLY_ZERO."""
    if f.is_zero:
        return IDENTICALLY_ZERO
    c = f.coeffs
    roots = []
    at_infinity = int(np.flatnonzero(c.view(np.ndarray))[0])
    if at_infinity:
        roots.append((ProjPoint(f.field([1, 0])), at_infinity))
    for r, m in poly_roots(galois.Poly(c)):
        roots.append((ProjPoint(type(r)([int(r), 1])), m))
    return roots


def multiplicity_profile(f):
    roots = binary_roots(f)
    if roots is IDENTICALLY_ZERO:
        return None
    return tuple(sorted((m for _, m in roots), reverse=True))


def _nonvanishing_point(F):
    """First rational point (in enumeration order) where F is nonzero."""
    p = F.p
    pts = gf.extension(p, 1)(gf.projective_points(p, 1, F.nvars))
    values = F.evaluate_many(pts)
    nz = np.flatnonzero(values.view(np.ndarray))
    return pts[nz[0]]


def frame(v):
    """Invertible matrix whose last column is v; the others are standard vectors."""
    G = type(v)
    n = v.shape[0]
    lead = int(np.flatnonzero(v.view(np.ndarray))[0])
    M = G.Zeros((n, n))
    col = 0
    for i in range(n):
        if i != lead:
            M[i, col] = 1
            col += 1
    M[:, n - 1] = v
    return M


def line_frame(line):
    """Two points P, Q spanning the line l0*x + l1*y + l2*z = 0 (l normalized)."""
    ell = line.normalized().coeffs
    G = type(ell)
    P, Q = G.Zeros(3), G.Zeros(3)
    if ell[0] != 0:
        P[0], P[1] = -ell[1], 1
        Q[0], Q[2] = -ell[2], 1
    elif ell[1] != 0:
        P[0] = 1
        Q[1], Q[2] = -ell[2], 1
    else:
        P[0] = 1
        Q[1] = 1
    return P, Q


def restrict(F, line):
    """Binary form F(s*P + t*Q) on the line spanned by line_frame(line)."""
    P, Q = line_frame(line)
    M = type(P)(np.stack([P.view(np.ndarray), Q.view(np.ndarray)], axis=1))
    return F.compose(M)


def _solve_exact(A, b):
    """Unique solution of A q = b for full-column-rank A, or None if inconsistent."""
    G = type(A)
    n = A.shape[1]
    aug = G(np.concatenate([A.view(np.ndarray), b.view(np.ndarray)[:, np.newaxis]], axis=1))
    R = aug.row_reduce()
    if not np.all(R[:n, :n] == G.Identity(n)) or np.any(R[n:, n] != 0):
        return None
    return R[:n, n].copy()


def divide_linear(F, line):
    """Exact quotient F / line; ValueError when the line does not divide F."""
    c, ell = _lift_all(F.coeffs, line.coeffs)
    G = type(c)
    cols = []
    for e in monomials(F.nvars, F.degree - 1):
        mono = G.Zeros(len(monomials(F.nvars, F.degree - 1)))
        mono[_index(F.nvars, F.degree - 1)[e]] = 1
        cols.append((Form(ell, F.nvars, 1) * make_form(mono, F.nvars, F.degree - 1)).coeffs.view(np.ndarray))
    A = G(np.stack(cols, axis=1))
    q = _solve_exact(A, c)
    if q is None:
        raise ValueError(f"{line} does not divide {F}")
    return make_form(q, F.nvars, F.degree - 1)


def linear_factors(F):
    """All linear factors of F over the closure with multiplicities, plus the cofactor.

    Coordinates are changed so that F is monic in z; then every linear factor is
    z - a*x - b*y with a a root of F(1, 0, z) and b a root of F(0, 1, z).
    """
    if F.is_zero:
        raise ZeroForm("the zero form has no factorization")
    p = F.p
    M = frame(_nonvanishing_point(F))
    G = F.compose(M)
    Gx = [d for d in G.partials()]
    Gxx = [d2 for d in Gx for d2 in d.partials()]

    def _roots_along(axis):
        B = G.field.Zeros((3, 2))
        B[axis, 0] = 1
        B[2, 1] = 1
        binary = G.compose(B)
        return [r for r, _ in poly_roots(galois.Poly(binary.coeffs[::-1].copy()))]

    found = []
    for a in _roots_along(0):
        for b in _roots_along(1):
            a_, b_ = _lift_all(a, b)
            L = type(a_)
            B = L.Zeros((3, 2))
            B[0, 0], B[1, 1] = 1, 1
            B[2, 0], B[2, 1] = a_, b_
            if not G.compose(B).is_zero:
                continue
            mult = 1
            if all(d.compose(B).is_zero for d in Gx):
                mult = 2
                if all(d.compose(B).is_zero for d in Gxx):
                    mult = 3
            ell_new = L([0, 0, 1])
            ell_new[0], ell_new[1] = -a_, -b_
            Minv = np.linalg.inv(gf.embed(M, gf.level(ell_new)))
            ell = Form((ell_new[np.newaxis, :] @ Minv)[0], 3, 1).normalized().descend()
            found.append((ell, mult))

    residual = F
    if found:
        k = _common_level(F.coeffs, *[ell.coeffs for ell, _ in found])
        residual = F.lift(k)
        for ell, mult in found:
            for _ in range(mult):
                residual = divide_linear(residual, ell.lift(k))
        residual = residual.descend()
    found.sort(key=lambda item: (-item[1], item[0].level, [int(c) for c in item[0].coeffs]))
    return found, residual


def conic_rank(Q):
    return int(np.linalg.matrix_rank(quadric_matrix(Q)))


def quadric_matrix(Q):
    """Symmetric matrix q with Q(v) = vᵀ q v."""
    c = Q.coeffs
    G = Q.field
    half = G(1) / G(2)
    x2, xy, xz, y2, yz, z2 = (c[i] for i in range(6))
    q = G.Zeros((3, 3))
    q[0, 0], q[1, 1], q[2, 2] = x2, y2, z2
    q[0, 1] = q[1, 0] = xy * half
    q[0, 2] = q[2, 0] = xz * half
    q[1, 2] = q[2, 1] = yz * half
    return q


def quadric_from_matrix(q):
    G = type(q)
    two = G(2)
    c = G([0] * 6)
    c[0], c[3], c[5] = q[0, 0], q[1, 1], q[2, 2]
    c[1], c[2], c[4] = two * q[0, 1], two * q[0, 2], two * q[1, 2]
    return TernaryQuadric(c)


def _cross(u, v):
    u, v = _lift_all(u, v)
    G = type(u)
    w = G.Zeros(3)
    w[0] = u[1] * v[2] - u[2] * v[1]
    w[1] = u[2] * v[0] - u[0] * v[2]
    w[2] = u[0] * v[1] - u[1] * v[0]
    return w


def line_conic_points(conic, line):
    """Intersection points of a conic with a line it does not contain."""
    P, Q = line_frame(line)
    points = []
    for root, _ in binary_roots(restrict(conic, line)):
        st, P_, Q_ = _lift_all(root.coords, P, Q)
        points.append(ProjPoint(P_ * st[0] + Q_ * st[1]))
    return points


def singular_points(F, factorization=None):
    """Singular points of a reduced plane cubic.

    Components give the singular points of a reducible cubic; an irreducible
    cubic has at most one singular point, which is then rational.
    """
    if factorization is None:
        factorization = linear_factors(F)
    lines, residual = factorization
    if any(m > 1 for _, m in lines):
        raise NonReducedInput(f"{F} has a repeated linear factor")
    if not lines:
        p = F.p
        pts = gf.extension(p, 1)(gf.projective_points(p, 1, 3))
        mask = F.evaluate_many(pts) == 0
        for d in F.partials():
            mask &= d.evaluate_many(pts) == 0
        return [ProjPoint(pts[i]) for i in np.flatnonzero(mask)]
    found = []
    for (l1, _), (l2, _) in itertools.combinations(lines, 2):
        pt = ProjPoint(_cross(l1.coeffs, l2.coeffs))
        if pt not in found:
            found.append(pt)
    if residual.degree == 2:
        for ell, _ in lines:
            for pt in line_conic_points(residual, ell):
                if pt not in found:
                    found.append(pt)
    return found


# =============================================================================
# COMMON ZEROS OF CONICS
# =============================================================================

def _span_rows(forms):
    """Nonzero RREF rows spanning the coefficient vectors of the forms."""
    k = _common_level(*[f.coeffs for f in forms])
    G = gf.extension(forms[0].p, k)
    rows = np.stack([gf.embed(f.coeffs, k).view(np.ndarray) for f in forms])
    R = G(rows).row_reduce()
    return [R[i].copy() for i in range(R.shape[0]) if np.any(R[i] != 0)]


def _zeros_with_common_line(Q1, Q2, rest):
    """Q1 = l*m1 and Q2 = l*m2 share the line l."""
    for ell, _ in linear_factors(Q1)[0]:
        try:
            m2 = divide_linear(Q2, ell)
        except ValueError:
            continue
        m1 = divide_linear(Q1, ell)
        break
    else:
        raise ValueError(f"{Q1} and {Q2} have no common line")
    if not rest or all(restrict(Q, ell).is_zero for Q in rest):
        return IDENTICALLY_ZERO
    candidates = [ProjPoint(_cross(m1.coeffs, m2.coeffs))]
    for Q in rest:
        if not restrict(Q, ell).is_zero:
            candidates.extend(line_conic_points(Q, ell))
            break
    found = []
    for pt in candidates:
        if pt not in found and all(Q.evaluate(pt) == 0 for Q in (Q1, Q2, *rest)):
            found.append(pt)
    return found


def common_zeros(quadrics):
    """Common zeros of ternary quadrics over the closure: a list of points, or
    IDENTICALLY_ZERO when the common locus is a curve (or the whole plane)."""
    rows = _span_rows(quadrics)
    if len(rows) <= 1:
        return IDENTICALLY_ZERO
    basis = [TernaryQuadric(r) for r in rows]
    Q1, Q2 = basis[0], basis[1]
    p = Q1.p
    pts = gf.extension(p, 1)(gf.projective_points(p, 1, 3))
    off = (Q1.evaluate_many(pts) != 0) & (Q2.evaluate_many(pts) != 0)
    M = frame(pts[int(np.flatnonzero(off)[0])])
    A, B = Q1.compose(M), Q2.compose(M)
    field = A.field

    # Q = a2*z² + a1(x, y)*z + a0(x, y)
    def _split(Q):
        c = Q.coeffs
        return Form(c[[0, 1, 3]], 2, 2), Form(c[[2, 4]], 2, 1), Form(c[[5]], 2, 0)

    a0, a1, a2 = _split(A)
    b0, b1, b2 = _split(B)
    R = (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)
    if R.is_zero:
        return _zeros_with_common_line(Q1, Q2, basis[2:])
    found = []
    for root, _ in binary_roots(R):
        st = root.coords
        s, t = st[0], st[1]
        fibre = []
        for Q in (A, B):
            c = gf.embed(Q.coeffs, gf.level(st))
            z_poly = type(st).Zeros(3)
            z_poly[0] = c[5]
            z_poly[1] = c[2] * s + c[4] * t
            z_poly[2] = c[0] * s * s + c[1] * s * t + c[3] * t * t
            fibre.append(galois.Poly(z_poly))
        for z, _ in poly_roots(galois.gcd(*fibre)):
            s_, t_, z_ = _lift_all(s, t, z)
            w = type(s_).Zeros(3)
            w[0], w[1], w[2] = s_, t_, z_
            u = (gf.embed(M, gf.level(w)) @ w[:, np.newaxis])[:, 0]
            if all(Q.evaluate(u) == 0 for Q in basis[2:]):
                pt = ProjPoint(u)
                if pt not in found:
                    found.append(pt)
    return found

"""
Finite-field tower F_p ⊂ F_{p^k}, k in {1, 2, 3, 4, 6}.

Elements are galois FieldArrays. The integer representation of an element
of F_{p^k} is sum(c_i * p^i) for power-basis coordinates c_i, so prime-field
elements have the same integer at every level.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import galois
import numpy as np

from config import log_message
from errors import (CompositeModulus, DivisionByZero, IrreducibleSearchFailed,
                    SmallCharacteristic, UnsupportedField)

SUPPORTED_LEVELS = (1, 2, 3, 4, 6)


# =============================================================================
# TOWER CONSTRUCTION
# =============================================================================

def _check_prime(p):
    if not isinstance(p, (int, np.integer)) or p < 2 or not galois.is_prime(int(p)):
        raise CompositeModulus(f"modulus {p} is not prime")
    if p in (2, 3):
        raise SmallCharacteristic(f"characteristic {p} is excluded (need p >= 5)")


def _is_irreducible(f):
    """Irreducible iff gcd(x^(p^i) - x mod f, f) = 1 for every i <= deg/2."""
    GF = f.field
    p = GF.characteristic
    x = galois.Poly([1, 0], field=GF)
    for i in range(1, f.degree // 2 + 1):
        h = pow(x, p ** i, f) - x
        if galois.gcd(h, f).degree > 0:
            return False
    return True


@lru_cache(maxsize=None)
def tower_poly(p, k):
    """Lexicographically smallest monic irreducible polynomial of degree k."""
    _check_prime(p)
    if k not in SUPPORTED_LEVELS:
        raise UnsupportedField(f"level {k} is not in {SUPPORTED_LEVELS}")
    try:
        f = galois.irreducible_poly(p, k, method="min")
    except ValueError as e:
        raise IrreducibleSearchFailed(f"no irreducible polynomial of degree {k} over F_{p}: {e}")
    if not _is_irreducible(f):
        raise IrreducibleSearchFailed(f"tower polynomial {f} over F_{p} failed the gcd test")
    return f


@lru_cache(maxsize=None)
def extension(p, k=1):
    """FieldArray class for F_{p^k} defined by tower_poly(p, k)."""
    _check_prime(p)
    if k == 1:
        return galois.GF(p)
    return galois.GF(p ** k, irreducible_poly=tower_poly(p, k))


@lru_cache(maxsize=None)
def _tower_root(p, a, b):
    """Smallest root (by integer value) of tower_poly(p, a) inside F_{p^b}."""
    G = extension(p, b)
    f = tower_poly(p, a)
    lifted = galois.Poly(G(f.coeffs.view(np.ndarray)), field=G)
    roots = lifted.roots()
    if len(roots) == 0:
        raise IrreducibleSearchFailed(f"tower polynomial of level {a} has no root at level {b}")
    return G(min(int(r) for r in roots))


@dataclass(frozen=True)
class FieldCtx:
    """Prime field plus verified extension levels. Immutable once built."""
    p: int
    levels: tuple
    towers: dict = field(compare=False, repr=False)

    def field(self, k=1):
        if k not in self.levels:
            raise UnsupportedField(f"level {k} not built for this context (levels {self.levels})")
        return extension(self.p, k)

    def element(self, value, k=1):
        """Element (or array) of level k from integers; negatives reduce mod p."""
        self.field(k)
        base = self.prime_field(np.asarray(value, dtype=np.int64) % self.p)
        return embed(base, k)

    @property
    def prime_field(self):
        return extension(self.p, 1)


@lru_cache(maxsize=None)
def _make_field(p, levels):
    towers = {k: tower_poly(p, k) for k in levels}
    for a in levels:
        for b in levels:
            if a < b and b % a == 0 and a > 1:
                _tower_root(p, a, b)
    log_message(f"Field F_{p}: tower " + ", ".join(f"k={k}: {towers[k]}" for k in levels))
    return FieldCtx(p=p, levels=levels, towers=towers)


def make_field(p, levels=(1,)):
    """Build a FieldCtx for the prime p with the requested extension levels."""
    _check_prime(p)
    levels = tuple(sorted(set(levels) | {1}))
    bad = [k for k in levels if k not in SUPPORTED_LEVELS]
    if bad:
        raise UnsupportedField(f"levels {bad} are not in {SUPPORTED_LEVELS}")
    return _make_field(int(p), levels)


# =============================================================================
# ELEMENT OPERATIONS
# =============================================================================

def level(x):
    return type(x).degree


def characteristic(x):
    return type(x).characteristic


def coords(x):
    """Power-basis coordinates, lowest degree first, shape (..., k)."""
    F = type(x)
    p, k = F.characteristic, F.degree
    ints = np.asarray(x.view(np.ndarray), dtype=np.int64)
    return np.stack([(ints // p ** i) % p for i in range(k)], axis=-1)


def from_coords(p, k, c):
    c = np.asarray(c, dtype=np.int64) % p
    weights = p ** np.arange(k, dtype=np.int64)
    return extension(p, k)((c * weights).sum(axis=-1))


def embed(x, b):
    """Image of x under the tower embedding F_{p^a} -> F_{p^b} (a | b)."""
    F = type(x)
    p, a = F.characteristic, F.degree
    if b % a:
        raise UnsupportedField(f"cannot embed level {a} into level {b}")
    G = extension(p, b)
    if a == b:
        return x
    ints = np.asarray(x.view(np.ndarray), dtype=np.int64)
    if a == 1:
        return G(ints)
    r = _tower_root(p, a, b)
    powers = r ** np.arange(a)
    c = G(coords(x))
    return (c * powers).sum(axis=-1)


def inv(a):
    if np.any(a == 0):
        raise DivisionByZero("zero has no inverse")
    return np.reciprocal(a)


def frobenius(x):
    return x ** characteristic(x)


def is_rational(x):
    return bool(np.all(frobenius(x) == x))


def nth_roots(a, n, k):
    """All x in F_{p^k} with x^n = a, sorted by integer value."""
    p = characteristic(a)
    G = extension(p, k)
    target = embed(a, k)
    c = G.Zeros(n + 1)
    c[0] = 1
    c[-1] = -target
    roots = galois.Poly(c).roots()
    return [G(v) for v in sorted(int(r) for r in roots)]


def projective_points(p, k, n=3):
    """Points of P^{n-1}(F_{p^k}) as integer rows, first nonzero coordinate 1.

    Rows are ordered (1, *), then (0, 1, *), ... with * in lexicographic order.
    """
    return _projective_points(p, k, n).copy()


@lru_cache(maxsize=None)
def _projective_points(p, k, n):
    q = p ** k
    blocks = []
    for lead in range(n):
        free = n - lead - 1
        grid = np.indices((q,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
        block = np.zeros((grid.shape[0], n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = grid
        blocks.append(block)
    return np.concatenate(blocks)

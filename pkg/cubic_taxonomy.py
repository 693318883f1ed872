"""
Plane cubic taxonomy: geometric type of a ternary cubic, and the classical
degree-4 / degree-6 invariants with the j-invariant.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

import gf
from config import log_message
from errors import JUndefined, UnsupportedField
from forms import (Form, frame, linear_factors, monomials, restrict,
                   singular_points)


class CubicType(Enum):
    Zero = 'Zero'
    TripleLine = 'TripleLine'
    DoubleLinePlusLine = 'DoubleLinePlusLine'
    ThreeConcurrentLines = 'ThreeConcurrentLines'
    ThreeGeneralLines = 'ThreeGeneralLines'
    ConicPlusSecant = 'ConicPlusSecant'
    ConicPlusTangent = 'ConicPlusTangent'
    Cusp = 'Cusp'
    Node = 'Node'
    Nonsingular = 'Nonsingular'


# =============================================================================
# CLASSIFICATION
# =============================================================================

def _three_lines_type(lines):
    k = math.lcm(*[ell.level for ell, _ in lines])
    G = gf.extension(lines[0][0].p, k)
    rows = np.stack([gf.embed(ell.coeffs, k).view(np.ndarray) for ell, _ in lines])
    if np.linalg.det(G(rows)) == 0:
        return CubicType.ThreeConcurrentLines
    return CubicType.ThreeGeneralLines


def _tangent_cone_type(F, point):
    """Node or Cusp from the quadratic part of F at a singular point."""
    G = F.compose(frame(point.coords)[:, ::-1].copy())
    # point is now [1:0:0]; the tangent cone is a*y² + b*yz + c*z²
    c = G.coeffs
    a, b, cc = c[3], c[4], c[5]
    if b * b - a * cc * 4 != 0:
        return CubicType.Node
    return CubicType.Cusp


def classify_cubic(F):
    if F.is_zero:
        return CubicType.Zero
    lines, residual = linear_factors(F)
    total = sum(m for _, m in lines)
    if total == 3:
        mults = sorted((m for _, m in lines), reverse=True)
        if mults == [3]:
            return CubicType.TripleLine
        if mults == [2, 1]:
            return CubicType.DoubleLinePlusLine
        return _three_lines_type(lines)
    if total == 1:
        # residual is a smooth conic: rank <= 2 conics split into lines
        ell = lines[0][0]
        b = restrict(residual, ell).coeffs
        if b[1] * b[1] - b[0] * b[2] * 4 == 0:
            return CubicType.ConicPlusTangent
        return CubicType.ConicPlusSecant
    points = singular_points(F, (lines, residual))
    if not points:
        return CubicType.Nonsingular
    return _tangent_cone_type(F, points[0])


# =============================================================================
# ARONHOLD INVARIANTS
# =============================================================================

@lru_cache(maxsize=None)
def _levi_civita():
    eps = np.zeros((3, 3, 3), dtype=np.int64)
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        eps[perm] = -1 if inversions % 2 else 1
    return eps


def _derivative_tensor(coeffs, p):
    """Third-derivative tensor D[a, b, c] = ∂a∂b∂c F, integers mod p."""
    D = np.zeros((3, 3, 3), dtype=np.int64)
    for c, e in zip(coeffs, monomials(3, 3)):
        weight = math.factorial(e[0]) * math.factorial(e[1]) * math.factorial(e[2])
        index = [0] * e[0] + [1] * e[1] + [2] * e[2]
        for perm in set(itertools.permutations(index)):
            D[perm] = (weight * c) % p
    return D


def _contract(p, spec, *operands):
    return np.einsum(spec, *operands) % p


def _s_raw(D, eps, p):
    t = _contract(p, 'ABC,ADG->BCDG', D, eps)
    t = _contract(p, 'BCDG,BEJ->CDGEJ', t, eps)
    t = _contract(p, 'CDGEJ,CHK->DGEJHK', t, eps)
    t = _contract(p, 'DGEJHK,DEF->GJHKF', t, D)
    t = _contract(p, 'GJHKF,GHI->JKFI', t, D)
    t = _contract(p, 'JKFI,JKL->FIL', t, D)
    return int(_contract(p, 'FIL,FIL->', t, eps))


def _t_raw(D, eps, p):
    t = _contract(p, 'ABC,ADG->BCDG', D, eps)
    t = _contract(p, 'BCDG,BEJ->CDGEJ', t, eps)
    t = _contract(p, 'CDGEJ,CHM->DGEJHM', t, eps)
    t = _contract(p, 'DGEJHM,DEF->GJHMF', t, D)
    t = _contract(p, 'GJHMF,GHI->JMFI', t, D)
    t = _contract(p, 'JMFI,FIP->JMP', t, eps)
    t = _contract(p, 'JMP,JKL->MPKL', t, D)
    t = _contract(p, 'MPKL,MNO->PKLNO', t, D)
    t = _contract(p, 'PKLNO,PQR->KLNOQR', t, D)
    t = _contract(p, 'KLNOQR,KNQ->LOR', t, eps)
    return int(_contract(p, 'LOR,LOR->', t, eps))


def _invariants_mod_p(coeffs, p):
    """(S, T, Δ) as integers mod p.

    Scaled so that on x³ + y³ + z³ + 6m·xyz they read S = m - m⁴ and
    T = 1 - 20m³ - 8m⁶, with Δ = T² + 64S³.
    """
    D = _derivative_tensor(coeffs, p)
    eps = _levi_civita()
    S = _s_raw(D, eps, p) * pow(-24 * 6 ** 4, -1, p) % p
    T = _t_raw(D, eps, p) * pow(-6 ** 7, -1, p) % p
    delta = (T * T + 64 * S ** 3) % p
    return S, T, delta


def weierstrass_cubic(a, b, p):
    """y²z - x³ - a·xz² - b·z³."""
    values = {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -a, (0, 0, 3): -b}
    return Form.from_ints([values.get(e, 0) for e in monomials(3, 3)], p, 3, 3)


def weierstrass_j(a, b, p):
    """1728·4a³ / (4a³ + 27b²) mod p."""
    den = (4 * a ** 3 + 27 * b ** 2) % p
    if den == 0:
        raise JUndefined(f"y² = x³ + {a}x + {b} is singular over F_{p}")
    return gf.extension(p, 1)(1728 * 4 * a ** 3 * pow(den, -1, p) % p)


@lru_cache(maxsize=None)
def _j_constant(p):
    """c with j = c·S³/Δ.

    Calibrated on the single curve y²z = x³ + xz², whose j is 1728. Since S³/Δ is
    a GL(3) invariant of weight zero, one curve with S != 0 fixes c.
    """
    S, _, delta = _invariants_mod_p(weierstrass_cubic(1, 0, p).to_ints(), p)
    c = 1728 * delta * pow(S ** 3, -1, p) % p
    log_message(f"j normalisation over F_{p}: c = {c}")
    return c


@dataclass(frozen=True)
class CubicInvariants:
    p: int
    S: object
    T: object
    delta: object

    @property
    def j(self):
        if self.delta == 0:
            raise JUndefined("Δ = 0: the cubic is singular")
        GF = gf.extension(self.p, 1)
        return GF(_j_constant(self.p)) * self.S ** 3 / self.delta


def aronhold(F):
    if F.level != 1:
        raise UnsupportedField("invariants are computed for cubics over F_p")
    p = F.p
    S, T, delta = _invariants_mod_p(F.to_ints(), p)
    GF = gf.extension(p, 1)
    return CubicInvariants(p=p, S=GF(S), T=GF(T), delta=GF(delta))

"""
Nets of conics: 3-dimensional subspaces of Sym₂(3), their discriminant and
slice cubics, and the ten singular GL(3)-orbits.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

import gf
from cubic_taxonomy import CubicType, classify_cubic
from errors import ImpossibleDiscriminant
from forms import IDENTICALLY_ZERO, TernaryCubic, TernaryQuadric, common_zeros, det_form
from subspaces import Subspace, act, annihilator_coords, random_gl3, random_subspace


class OrbitLabel(Enum):
    I_a = 'I_a'
    I_b = 'I_b'
    II = 'II'
    III = 'III'
    IV_a = 'IV_a'
    IV_b = 'IV_b'
    V = 'V'
    VI = 'VI'
    VII = 'VII'
    VIII = 'VIII'
    Nonsingular = 'Nonsingular'


SINGULAR_LABELS = tuple(label for label in OrbitLabel if label is not OrbitLabel.Nonsingular)

# Discriminant type of each singular orbit
NET_CASE_TYPES = {
    OrbitLabel.I_a: CubicType.Zero,
    OrbitLabel.I_b: CubicType.Zero,
    OrbitLabel.II: CubicType.TripleLine,
    OrbitLabel.III: CubicType.DoubleLinePlusLine,
    OrbitLabel.IV_a: CubicType.ThreeGeneralLines,
    OrbitLabel.IV_b: CubicType.ThreeGeneralLines,
    OrbitLabel.V: CubicType.ConicPlusSecant,
    OrbitLabel.VI: CubicType.ConicPlusTangent,
    OrbitLabel.VII: CubicType.Cusp,
    OrbitLabel.VIII: CubicType.Node,
}

_J = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
_E11 = [[1, 0, 0], [0, 0, 0], [0, 0, 0]]
_E22 = [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
_E33 = [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
_E23 = [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
_D011 = [[0, 0, 0], [0, 1, 0], [0, 0, 1]]
_D101 = [[1, 0, 0], [0, 0, 0], [0, 0, 1]]

_CATALOGUE = {
    OrbitLabel.I_a: (_E33, _E22, _E23),
    OrbitLabel.I_b: ([[0, 0, 1], [0, 0, 0], [1, 0, 0]], _E23, _E33),
    OrbitLabel.II: (_E11, _J, [[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    OrbitLabel.III: (_E11, _J, _E22),
    OrbitLabel.IV_a: (_E11, _E22, _E33),
    OrbitLabel.IV_b: ([[0, 0, 0], [0, 1, 0], [0, 0, -1]],
                      [[1, 0, 0], [0, 0, 0], [0, 0, -1]],
                      [[2, 1, 1], [1, 0, 1], [1, 1, 0]]),
    OrbitLabel.V: (_E11, _J, _E33),
    OrbitLabel.VI: (_D011, _D101, [[2, 1, 0], [1, 0, 0], [0, 0, 0]]),
    OrbitLabel.VII: (_E11, _J, _E23),
    OrbitLabel.VIII: (_E11, _J, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
}


class Net(Subspace):
    dim = 3


def net_disc(W):
    """det(A₁x + A₂y + A₃z) for the stored basis, first nonzero coefficient 1."""
    return TernaryCubic(det_form(W.basis).normalized().coeffs)


def net_slice(W):
    """det of the regrouped pencil: the x-matrix has entry A_i[j, 0] at (j, i), etc."""
    regrouped = np.transpose(W.basis, (2, 1, 0))
    return TernaryCubic(det_form(regrouped).normalized().coeffs)


def disc_type(W):
    return classify_cubic(net_disc(W))


def slice_type(W):
    return classify_cubic(net_slice(W))


def has_rank_one(W):
    """Whether W ⊗ closure contains a rank-one matrix v·vᵀ.

    v·vᵀ lies in W exactly when every quadric of the apolar annihilator
    vanishes at v, so this asks for a common zero of three conics.
    """
    quadrics = [TernaryQuadric(row.copy()) for row in annihilator_coords(W)]
    zeros = common_zeros(quadrics)
    return zeros is IDENTICALLY_ZERO or len(zeros) > 0


def classify_net(W):
    kind = disc_type(W)
    if kind is CubicType.Zero:
        return OrbitLabel.I_a if slice_type(W) is CubicType.Zero else OrbitLabel.I_b
    if kind is CubicType.ThreeGeneralLines:
        return OrbitLabel.IV_a if has_rank_one(W) else OrbitLabel.IV_b
    if kind is CubicType.ThreeConcurrentLines:
        raise ImpossibleDiscriminant(f"{W!r} has three concurrent lines as discriminant")
    return {
        CubicType.TripleLine: OrbitLabel.II,
        CubicType.DoubleLinePlusLine: OrbitLabel.III,
        CubicType.ConicPlusSecant: OrbitLabel.V,
        CubicType.ConicPlusTangent: OrbitLabel.VI,
        CubicType.Cusp: OrbitLabel.VII,
        CubicType.Node: OrbitLabel.VIII,
        CubicType.Nonsingular: OrbitLabel.Nonsingular,
    }[kind]


def representatives(p):
    """The ten catalogue nets, exactly as printed, reduced mod p."""
    return {label: Net.from_ints(mats, p) for label, mats in _CATALOGUE.items()}


def random_net(seed, p):
    return random_subspace(Net, seed, p)


# =============================================================================
# EXPLICIT REDUCTIONS
# =============================================================================

@dataclass(frozen=True)
class Reduction:
    """A source net moved by explicit matrices into the orbit of a representative."""
    name: str
    target: OrbitLabel
    source: Net
    moves: tuple
    exact: bool     # the moved net equals the representative as a subspace

    def result(self):
        W = self.source
        for M in self.moves:
            W = act(M, W)
        return W


def _frac(n, d, p):
    return n * pow(d, -1, p) % p


def reductions(p):
    """(reductions, skipped): explicit moves into III, IV_b, V, VI, VII, VIII.

    Moves needing a square root of -1 are skipped (with a reason) when F_p lacks one.
    """
    GF = gf.extension(p, 1)
    found, skipped = [], []

    def _net(*mats):
        return Net(GF(np.asarray(mats, dtype=np.int64) % p))

    def _mat(rows):
        return GF(np.asarray(rows, dtype=np.int64) % p)

    a = 2
    found.append(Reduction(
        'reduction-III', OrbitLabel.III,
        _net(_E11, _J, [[0, a, 0], [a, 1, 0], [0, 0, 0]]),
        (_mat([[1, 0, 0], [-a, 1, 0], [0, a, 1]]),), True))

    # The printed V move lands on the representative only when c = 0; for c != 0
    # it reaches another member of the orbit.
    for name, b, c in (('reduction-V', 1, 2), ('reduction-V(c=0)', 1, 0)):
        a = c * (c * c - b)
        found.append(Reduction(
            name, OrbitLabel.V,
            _net(_E11, _J, [[0, a, 0], [a, b, c], [0, c, 1]]),
            (_mat([[0, 0, 1], [0, 1, c], [1, -c, b - c * c]]),), c == 0))

    a, b = 1, 2
    found.append(Reduction(
        'reduction-VII', OrbitLabel.VII,
        _net(_E11, _J, [[0, a, 0], [a, b, 1], [0, 1, 0]]),
        (_mat([[1, 0, 0], [_frac(b, 3, p), 1, 0],
               [(-_frac(2 * b * b, 9, p) - a) % p, _frac(-b, 3, p), 1]]),), True))

    for a, b, c in ((2, 1, 1), (1, 1, 1)):
        shifted = (a + b * c - c ** 3) % p
        cube_roots = gf.nth_roots(GF(shifted), 3, 1) if shifted else []
        if cube_roots:
            t = int(cube_roots[0])
            found.append(Reduction(
                'reduction-VIII', OrbitLabel.VIII,
                _net(_E11, _J, [[0, a, 0], [a, b, c], [0, c, 1]]),
                (_mat([[1, 0, 0], [c, 1, 0], [b - 2 * c * c, -c, 1]]),
                 _mat([[1, 0, 0], [0, 0, t], [0, t * t, 0]])), True))
            break

    found.append(Reduction(
        'reduction-VI-real', OrbitLabel.VI,
        _net(_D011, _D101, [[2, -1, 0], [-1, 0, 0], [0, 0, 0]]),
        (_mat([[1, 0, 0], [0, -1, 0], [0, 0, 1]]),), True))

    roots = gf.nth_roots(GF(p - 1), 2, 1)
    if not roots:
        reason = "requires a square root of -1 in F_p"
        skipped.extend((name, reason) for name in ('reduction-IV_b', 'reduction-VI-imaginary'))
        return found, skipped
    i = int(roots[0])

    # third basis matrix [[2i, ±i, ±1], ...]; diag(1, s1, i·s2) scales it to i times the representative's
    for s1, s2 in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
        found.append(Reduction(
            f'reduction-IV_b({"+" if s1 > 0 else "-"}i,{"+" if s2 > 0 else "-"}1)', OrbitLabel.IV_b,
            _net(_D011, _D101, [[2 * i, s1 * i, s2], [s1 * i, 0, s1 * s2], [s2, s1 * s2, 0]]),
            (_mat([[1, 0, 0], [0, s1, 0], [0, 0, i * s2]]),), True))
    found.append(Reduction(
        'reduction-VI-imaginary', OrbitLabel.VI,
        _net(_D011, _D101, [[2, 0, 0], [0, 0, i], [0, i, 0]]),
        (_mat([[0, 0, i], [0, 1, 0], [-i, 0, 0]]),), True))
    return found, skipped


__all__ = [
    'Net', 'OrbitLabel', 'SINGULAR_LABELS', 'NET_CASE_TYPES', 'Reduction', 'act', 'classify_net',
    'disc_type', 'has_rank_one', 'net_disc', 'net_slice', 'random_gl3', 'random_net',
    'reductions', 'representatives', 'slice_type',
]

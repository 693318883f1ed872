"""
Pencils of conics: 2-dimensional subspaces of Sym₂(3) and their eight
GL(3)-orbits.

The label of a pencil is read off an invariant vector. The vector -> label
dictionary is built from the catalogue representatives and must separate
them; orbit enumeration over F_5 confirms it is constant on orbits.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

import gf
from config import log_message
from errors import ConsistencyFailure, UnrecognizedPencil
from forms import (IDENTICALLY_ZERO, BinaryCubic, binary_roots, det_form,
                   multiplicity_profile)
from subspaces import Subspace, coords_to_sym, random_subspace, sym_to_coords

INFINITE = 'infinite'


class PencilLabel(Enum):
    P1_a = 'P1_a'
    P1_b = 'P1_b'
    P1_c = 'P1_c'
    Cube = 'Cube'
    SqOne_a = 'SqOne_a'
    SqOne_b = 'SqOne_b'
    SqOne_c = 'SqOne_c'
    Simple111 = 'Simple111'


# Root profile of the discriminant each catalogue row is listed under
PENCIL_HEADINGS = {
    PencilLabel.P1_a: None,
    PencilLabel.P1_b: None,
    PencilLabel.P1_c: None,
    PencilLabel.Cube: (3,),
    PencilLabel.SqOne_a: (2, 1),
    PencilLabel.SqOne_b: (2, 1),
    PencilLabel.SqOne_c: (2, 1),
    PencilLabel.Simple111: (1, 1, 1),
}

_CATALOGUE = {
    PencilLabel.P1_a: ([[0, 0, 0], [0, 0, 0], [0, 0, 1]],
                       [[0, 0, 0], [0, 1, 0], [0, 0, 0]]),
    PencilLabel.P1_b: ([[0, 0, 0], [0, 0, 0], [0, 0, 1]],
                       [[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    PencilLabel.P1_c: ([[0, 0, 1], [0, 0, 0], [1, 0, 0]],
                       [[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    PencilLabel.Cube: ([[1, 0, 0], [0, 0, 0], [0, 0, 0]],
                       [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
    PencilLabel.SqOne_a: ([[1, 0, 0], [0, -1, 0], [0, 0, 0]],
                          [[1, 0, 1], [0, 0, 1], [1, 1, 0]]),
    PencilLabel.SqOne_b: ([[0, 0, 0], [0, 0, 1], [0, 1, 0]],
                          [[1, 0, 0], [0, 0, 0], [0, 0, 0]]),
    PencilLabel.SqOne_c: ([[0, 0, 0], [0, 1, 0], [0, 0, 1]],
                          [[0, 0, 1], [0, 0, 0], [1, 0, 1]]),
    PencilLabel.Simple111: ([[0, 0, 0], [0, 1, 0], [0, 0, 1]],
                            [[1, 0, 0], [0, 0, 0], [0, 0, 1]]),
}


class Pencil(Subspace):
    dim = 2


@dataclass(frozen=True)
class PencilInvariants:
    disc_zero: bool
    profile: tuple          # root multiplicities of the disc, None when disc ≡ 0
    rank_one_points: object  # count over P¹(F_{p²}), or INFINITE
    ranks_at_multiple_roots: tuple
    common_kernel: bool

    def as_tuple(self):
        return (self.disc_zero, self.profile, self.rank_one_points,
                self.ranks_at_multiple_roots, self.common_kernel)


def pencil_disc(U):
    """det(x·A + y·B) for the stored basis (A, B)."""
    return BinaryCubic(det_form(U.basis).coeffs)


def _minors(m):
    """All 2×2 minors of a stack of 3×3 matrices, shape (N, 9)."""
    out = []
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for c, d in ((0, 1), (0, 2), (1, 2)):
            out.append(m[:, a, c] * m[:, b, d] - m[:, a, d] * m[:, b, c])
    G = type(m)
    return G(np.stack([o.view(np.ndarray) for o in out], axis=1))


def _rank_one_count(U):
    p = U.p
    G = gf.extension(p, 2)
    pts = G(gf.projective_points(p, 2, 2))
    coords = gf.embed(U.field(sym_to_coords(U.basis.view(np.ndarray))), 2)
    members = G(coords_to_sym((pts @ coords).view(np.ndarray)))
    vanish = np.all(_minors(members) == 0, axis=1)
    if np.all(vanish):
        return INFINITE
    return int(np.count_nonzero(vanish))


def _common_kernel(U):
    stacked = U.field(np.concatenate([A.view(np.ndarray) for A in U.basis], axis=0))
    return int(np.linalg.matrix_rank(stacked)) < 3


def pencil_invariants(U):
    disc = pencil_disc(U)
    roots = binary_roots(disc)
    ranks = []
    if roots is not IDENTICALLY_ZERO:
        for point, mult in roots:
            if mult >= 2:
                member = U.member(point.coords)
                ranks.append(int(np.linalg.matrix_rank(member)))
    return PencilInvariants(
        disc_zero=roots is IDENTICALLY_ZERO,
        profile=multiplicity_profile(disc),
        rank_one_points=_rank_one_count(U),
        ranks_at_multiple_roots=tuple(sorted(ranks, reverse=True)),
        common_kernel=_common_kernel(U),
    )


def pencil_representatives(p):
    """The eight catalogue pencils, exactly as printed, reduced mod p."""
    return {label: Pencil.from_ints(mats, p) for label, mats in _CATALOGUE.items()}


@lru_cache(maxsize=None)
def calibrate(p):
    """Invariant vector -> label, from the representatives; they must all differ."""
    table = {}
    for label, U in pencil_representatives(p).items():
        vector = pencil_invariants(U).as_tuple()
        if vector in table:
            raise ConsistencyFailure(
                f"pencil representatives {table[vector].value} and {label.value} share "
                f"invariants {vector}", subspace=U)
        table[vector] = label
    log_message(f"Pencil dictionary over F_{p}: {len(table)} classes")
    return table


def classify_pencil(U):
    vector = pencil_invariants(U).as_tuple()
    label = calibrate(U.p).get(vector)
    if label is None:
        raise UnrecognizedPencil(f"no pencil class has invariants {vector}")
    return label


def heading_discrepancies(p):
    """Representatives whose disc root profile differs from their catalogue heading."""
    found = []
    for label, U in pencil_representatives(p).items():
        profile = multiplicity_profile(pencil_disc(U))
        if profile != PENCIL_HEADINGS[label]:
            found.append((label, PENCIL_HEADINGS[label], profile))
    return found


def random_pencil(seed, p):
    return random_subspace(Pencil, seed, p)

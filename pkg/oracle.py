"""
Brute-force ground truth over F_5.

Subspaces are handled as canonical RREF coordinate arrays packed into int64
keys (base 5, row-major, most significant first; identical to Subspace.key).
Orbits are computed with plain integer numpy, in batches of group elements.
"""

import itertools
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from multiprocessing import Pool

import numpy as np
import pandas as pd

from config import (ORACLE_PRIME, ORBIT_CHUNK, ORBIT_MEMBER_CHECKS,
                    SAMPLE_ORBIT_CHECKS, SAMPLE_SEED, log_message)
from errors import (ConsistencyFailure, ImpossibleDiscriminant,
                    UnrecognizedPencil, UnsupportedField)
from forms import multiplicity_profile
from net_orbits import Net, classify_net, disc_type, random_net, slice_type
from pencil_orbits import Pencil, classify_pencil, pencil_disc, random_pencil
from subspaces import SYM_INDEX

_ROWS = np.array([i for i, _ in SYM_INDEX])
_COLS = np.array([j for _, j in SYM_INDEX])

KINDS = {'net': Net, 'pencil': Pencil}


def _check_prime(q):
    if q != ORACLE_PRIME:
        raise UnsupportedField(f"orbit enumeration runs over F_{ORACLE_PRIME} only, got q = {q}")


def gaussian_binomial(n, k, q):
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def pgl3_order(q):
    return (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q ** 2) // (q - 1)


# =============================================================================
# GROUP AND BATCHED LINEAR ALGEBRA
# =============================================================================

@lru_cache(maxsize=None)
def projective_group(q=ORACLE_PRIME):
    """Every invertible 3×3 matrix over F_q whose first nonzero entry is 1, shape (N, 3, 3).

    Scalars act trivially on subspaces, so this one-per-class set gives whole orbits.
    """
    digits = np.indices((q,) * 9, dtype=np.int8).reshape(9, -1)
    a, b, c, d, e, f, g, h, i = (row.astype(np.int64) for row in digits)
    det = (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % q
    first = digits.T[np.arange(digits.shape[1]), np.argmax(digits.T != 0, axis=1)]
    keep = (det != 0) & (first == 1)
    group = digits.T[keep].astype(np.int64).reshape(-1, 3, 3)
    if group.shape[0] != pgl3_order(q):
        raise ConsistencyFailure(f"PGL(3, {q}) has {pgl3_order(q)} elements, built {group.shape[0]}")
    log_message(f"Projective group over F_{q}: {group.shape[0]} matrices")
    return group


def generators(q=ORACLE_PRIME):
    """Generators of GL(3, F_q): a primitive diagonal, two permutations, a transvection."""
    primitive = next(g for g in range(2, q) if len({pow(g, k, q) for k in range(1, q)}) == q - 1)
    return np.array([
        [[primitive, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    ], dtype=np.int64)


def batched_rref(X, q):
    """Reduced row echelon form of every (r, n) matrix in a (B, r, n) integer stack."""
    X = X % q
    B, r, n = X.shape
    inverse = np.zeros(q, dtype=np.int64)
    inverse[1:] = [pow(a, -1, q) for a in range(1, q)]
    next_row = np.zeros(B, dtype=np.int64)
    rows = np.arange(r)
    for col in range(n):
        candidates = (X[:, :, col] != 0) & (rows[np.newaxis, :] >= next_row[:, np.newaxis])
        batch = np.flatnonzero(candidates.any(axis=1))
        if batch.size == 0:
            continue
        target = next_row[batch]
        source = np.argmax(candidates[batch], axis=1)
        pivot_rows = X[batch, source].copy()
        X[batch, source] = X[batch, target]
        pivot_rows = pivot_rows * inverse[pivot_rows[:, col]][:, np.newaxis] % q
        X[batch, target] = pivot_rows
        factors = X[batch, :, col].copy()
        factors[np.arange(batch.size), target] = 0
        X[batch] = (X[batch] - factors[:, :, np.newaxis] * pivot_rows[:, np.newaxis, :]) % q
        next_row[batch] += 1
    return X


def pack_keys(X, q):
    """(B, r, 6) canonical coordinates -> (B,) int64 keys."""
    flat = X.reshape(X.shape[0], -1)
    weights = q ** np.arange(flat.shape[1] - 1, -1, -1, dtype=np.int64)
    return flat @ weights


def unpack_keys(keys, r, q):
    weights = q ** np.arange(6 * r - 1, -1, -1, dtype=np.int64)
    return (np.asarray(keys, dtype=np.int64)[:, np.newaxis] // weights % q).reshape(-1, r, 6)


def _to_matrices(coords):
    """(..., 6) -> (..., 3, 3) symmetric."""
    out = np.zeros(coords.shape[:-1] + (3, 3), dtype=np.int64)
    out[..., _ROWS, _COLS] = coords
    out[..., _COLS, _ROWS] = coords
    return out


def moved_keys(coords, M, q):
    """Keys of span{Mᵀ A M}; coords (B or 1, r, 6) and M (B or 1, 3, 3) broadcast."""
    A = _to_matrices(coords)
    M = M[:, np.newaxis]
    moved = np.swapaxes(M, -1, -2) @ A @ M % q
    return pack_keys(batched_rref(moved[..., _ROWS, _COLS], q), q)


def subspace_from_key(cls, key, q=ORACLE_PRIME):
    return cls.from_coords(unpack_keys([key], cls.dim, q)[0], q)


# =============================================================================
# ORBITS
# =============================================================================

@lru_cache(maxsize=64)
def _orbit_keys(r, key, method):
    q = ORACLE_PRIME
    start = unpack_keys([key], r, q)
    if method == 'group':
        group = projective_group(q)
        parts = [np.unique(moved_keys(start, group[i:i + ORBIT_CHUNK], q))
                 for i in range(0, group.shape[0], ORBIT_CHUNK)]
        orbit = np.unique(np.concatenate(parts))
    elif method == 'bfs':
        gens = generators(q)
        seen = np.array([key], dtype=np.int64)
        frontier = seen
        while frontier.size:
            coords = unpack_keys(frontier, r, q)
            found = np.unique(np.concatenate(
                [moved_keys(coords, g[np.newaxis], q) for g in gens]))
            frontier = found[~np.isin(found, seen)]
            seen = np.union1d(seen, frontier)
        orbit = seen
    else:
        raise ValueError(f"unknown orbit method {method!r}")
    orbit.setflags(write=False)
    return orbit


def enumerate_orbit(W, method='group'):
    """Sorted int64 keys of the whole F_5-orbit of W."""
    _check_prime(W.p)
    return _orbit_keys(W.dim, W.key, method)


def orbits_equal(W1, W2):
    _check_prime(W1.p)
    _check_prime(W2.p)
    if W1.dim != W2.dim:
        return False
    orbit = enumerate_orbit(W1)
    i = np.searchsorted(orbit, W2.key)
    return bool(i < orbit.size and orbit[i] == W2.key)


def overlapping_orbits(subspaces):
    """Pairs of names (from a name -> subspace dict) whose orbits intersect."""
    orbits = {name: enumerate_orbit(W) for name, W in subspaces.items()}
    return [(a, b) for a, b in itertools.combinations(orbits, 2)
            if np.intersect1d(orbits[a], orbits[b]).size]


def _classifier(cls):
    return classify_net if cls is Net else classify_pencil


def _label(W):
    try:
        return _classifier(type(W))(W).value
    except (ImpossibleDiscriminant, UnrecognizedPencil) as e:
        raise ConsistencyFailure(f"{type(e).__name__}: {e}", subspace=W) from e


def check_orbit_constancy(W, members=None, seed=SAMPLE_SEED):
    """Classify members of W's orbit; None means every member. Returns (label, checked)."""
    orbit = enumerate_orbit(W)
    if members is not None and members < orbit.size:
        rng = np.random.default_rng([seed, int(W.key % (2 ** 32))])
        orbit = rng.choice(orbit, size=members, replace=False)
    label = _label(W)
    for key in orbit:
        member = subspace_from_key(type(W), int(key))
        other = _label(member)
        if other != label:
            raise ConsistencyFailure(
                f"orbit of {W!r} mixes labels {label} and {other}", subspace=member)
    return label, int(orbit.size)


def grassmannian_keys(r, q=ORACLE_PRIME):
    """Sorted keys of every r-plane of F_q⁶, one per canonical RREF."""
    parts = []
    weights = q ** np.arange(6 * r - 1, -1, -1, dtype=np.int64).reshape(r, 6)
    for pivots in itertools.combinations(range(6), r):
        base = sum(int(weights[i, c]) for i, c in enumerate(pivots))
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, 6) if c not in pivots]
        keys = np.full(q ** len(free), base, dtype=np.int64)
        if free:
            digits = np.indices((q,) * len(free), dtype=np.int8).reshape(len(free), -1)
            for (i, c), column in zip(free, digits):
                keys += column.astype(np.int64) * weights[i, c]
        parts.append(keys)
    return np.sort(np.concatenate(parts))


# =============================================================================
# CENSUS
# =============================================================================

@dataclass
class OrbitRecord:
    label: str
    size: int
    key: int
    disc: str       # disc CubicType for nets, root profile for pencils
    slice: str = ''


@dataclass
class ConstancyRecord:
    """Outcome of one orbit-constancy pass."""
    key: int
    label: str
    orbit_size: int
    checked: int


@dataclass
class OrbitCensus:
    kind: str
    mode: str
    p: int
    counts: dict = field(default_factory=dict)
    orbits: list = field(default_factory=list)
    constancy: list = field(default_factory=list)
    unclassified: int = 0
    impossible: int = 0
    notes: list = field(default_factory=list)

    @property
    def total(self):
        return sum(self.counts.values())

    def frame(self):
        """One row per F_5-orbit (full sweeps only)."""
        return pd.DataFrame([asdict(o) for o in self.orbits],
                            columns=['label', 'size', 'key', 'disc', 'slice'])

    def summary(self):
        """Per label: orbits and subspaces (full) or sampled subspaces."""
        if self.orbits:
            table = self.frame().groupby('label').agg(orbits=('size', 'count'),
                                                      subspaces=('size', 'sum'))
        else:
            table = pd.Series(self.counts, name='subspaces', dtype='int64').to_frame()
        return table.sort_index()

    def to_dict(self):
        return {
            'kind': self.kind,
            'mode': self.mode,
            'p': self.p,
            'total': self.total,
            'counts': dict(sorted(self.counts.items())),
            'unclassified': self.unclassified,
            'impossible_discriminants': self.impossible,
            'orbits': [asdict(o) for o in self.orbits],
            'constancy': [asdict(c) for c in self.constancy],
            'notes': list(self.notes),
        }


def _describe(W):
    if isinstance(W, Net):
        return disc_type(W).value, slice_type(W).value
    profile = multiplicity_profile(pencil_disc(W))
    return ('zero' if profile is None else ''.join(map(str, profile))), ''


def full_sweep(kind='net', members=ORBIT_MEMBER_CHECKS, seed=SAMPLE_SEED):
    """Orbit decomposition of the whole Grassmannian over F_5.

    Runs in one process: each orbit enumeration is already vectorised over the group.
    """
    cls = KINDS[kind]
    q = ORACLE_PRIME
    keys = grassmannian_keys(cls.dim, q)
    expected = gaussian_binomial(6, cls.dim, q)
    if keys.size != expected:
        raise ConsistencyFailure(f"Grassmannian has {expected} points, enumerated {keys.size}")
    log_message(f"Full {kind} sweep over F_{q}: {keys.size} subspaces")

    census = OrbitCensus(kind=kind, mode='full', p=q)
    visited = np.zeros(keys.size, dtype=bool)
    while not visited.all():
        start = int(keys[np.argmin(visited)])
        W = subspace_from_key(cls, start, q)
        orbit = enumerate_orbit(W)
        idx = np.searchsorted(keys, orbit)
        if np.any(visited[idx]) or np.any(keys[idx] != orbit):
            raise ConsistencyFailure("orbits overlap or leave the Grassmannian", subspace=W)
        visited[idx] = True
        if pgl3_order(q) % orbit.size:
            raise ConsistencyFailure(f"orbit size {orbit.size} does not divide |PGL(3,{q})|", subspace=W)
        label, checked = check_orbit_constancy(W, members=members, seed=seed)
        census.constancy.append(ConstancyRecord(key=start, label=label, orbit_size=int(orbit.size), checked=checked))
        disc, sl = _describe(W)
        census.orbits.append(OrbitRecord(label=label, size=int(orbit.size), key=start, disc=disc, slice=sl))
        census.counts[label] = census.counts.get(label, 0) + int(orbit.size)
        log_message(f"  orbit {len(census.orbits)}: {label} size {orbit.size} "
                    f"({int(visited.sum())}/{keys.size})")
        _orbit_keys.cache_clear()

    if census.total != expected:
        raise ConsistencyFailure(f"census covers {census.total} of {expected} subspaces")
    split = census.frame().groupby('label').size()
    for label, n in split[split > 1].items():
        census.notes.append(f"{label} splits into {n} orbits over F_{q}")
    return census


def _classify_batch(args):
    kind, p, seed, indices = args
    make = random_net if kind == 'net' else random_pencil
    return [_label(make([seed, int(i)], p)) for i in indices]


def sample_sweep(kind='net', n=1000, seed=SAMPLE_SEED, workers=1, p=ORACLE_PRIME,
                 orbits=SAMPLE_ORBIT_CHECKS, members=ORBIT_MEMBER_CHECKS):
    """Classify n random subspaces; item i is drawn from seed (seed, i).

    Over F_5 the orbits of the first `orbits` items are also checked for a constant
    label (`members` sampled members each, None for whole orbits).
    """
    census = OrbitCensus(kind=kind, mode=f'sample({n}, seed={seed})', p=p)
    if n == 0:
        return census
    chunks = [(kind, p, seed, chunk) for chunk in np.array_split(np.arange(n), max(1, workers) * 4)
              if chunk.size]
    if workers > 1:
        with Pool(workers) as pool:
            results = pool.map(_classify_batch, chunks)
    else:
        results = [_classify_batch(chunk) for chunk in chunks]
    labels = [label for batch in results for label in batch]
    census.counts = {k: int(v) for k, v in pd.Series(labels).value_counts().items()}
    _sample_constancy(census, kind, seed, min(orbits, n), members)
    log_message(f"Sample {kind} sweep: {n} subspaces, {len(census.counts)} labels")
    return census


def _sample_constancy(census, kind, seed, k, members):
    if k <= 0:
        return
    if census.p != ORACLE_PRIME:
        census.notes.append(f"orbit constancy needs F_{ORACLE_PRIME}; not checked over F_{census.p}")
        return
    make = random_net if kind == 'net' else random_pencil
    for i in range(k):
        W = make([seed, i], census.p)
        label, checked = check_orbit_constancy(W, members=members, seed=seed)
        size = int(enumerate_orbit(W).size)
        census.constancy.append(ConstancyRecord(key=W.key, label=label, orbit_size=size, checked=checked))
        log_message(f"  sample item {i}: {label} constant on {checked} of {size} orbit members")
        _orbit_keys.cache_clear()

import numpy as np
import pytest

import gf
from errors import CompositeModulus, DivisionByZero, SmallCharacteristic, UnsupportedField


def test_extension_rejects_bad_moduli():
    with pytest.raises(CompositeModulus):
        gf.extension(15)
    with pytest.raises(SmallCharacteristic):
        gf.extension(3)


def test_tower_poly_is_irreducible_of_right_degree():
    for k in (2, 3, 4):
        f = gf.tower_poly(5, k)
        assert f.degree == k
        assert f.is_irreducible()


def test_prime_field_ints_survive_embedding():
    GF = gf.extension(5, 1)
    x = GF([0, 1, 3, 4])
    for k in (2, 3, 4, 6):
        lifted = gf.embed(x, k)
        assert gf.level(lifted) == k
        assert [int(v) for v in lifted] == [0, 1, 3, 4]


def test_embedding_is_a_ring_map():
    G2 = gf.extension(5, 2)
    a, b = G2(7), G2(19)
    for k in (4, 6):
        assert gf.embed(a * b, k) == gf.embed(a, k) * gf.embed(b, k)
        assert gf.embed(a + b, k) == gf.embed(a, k) + gf.embed(b, k)


def test_embed_needs_divisible_levels():
    with pytest.raises(UnsupportedField):
        gf.embed(gf.extension(5, 2)(3), 3)


def test_nth_roots():
    GF = gf.extension(5, 1)
    assert [int(r) for r in gf.nth_roots(GF(4), 2, 1)] == [2, 3]
    assert gf.nth_roots(GF(2), 2, 1) == []
    # every element of F_5 is a square in F_25
    assert len(gf.nth_roots(GF(2), 2, 2)) == 2


def test_frobenius_fixes_exactly_the_prime_field():
    G2 = gf.extension(5, 2)
    values = G2(np.arange(25))
    rational = [int(v) for v in values if gf.is_rational(v)]
    assert rational == [0, 1, 2, 3, 4]


def test_inverse_of_zero():
    GF = gf.extension(7, 1)
    assert gf.inv(GF(3)) * GF(3) == 1
    with pytest.raises(DivisionByZero):
        gf.inv(GF(0))


def test_projective_points_are_normalized():
    pts = gf.projective_points(5, 1, 3)
    assert pts.shape == (31, 3)
    first = pts[np.arange(31), np.argmax(pts != 0, axis=1)]
    assert np.all(first == 1)
    assert len({tuple(p) for p in pts}) == 31
    assert gf.projective_points(5, 2, 2).shape == (26, 2)


def test_make_field_context():
    ctx = gf.make_field(13, levels=(2, 4))
    assert ctx.levels == (1, 2, 4)
    assert int(ctx.element(-1)) == 12
    assert gf.level(ctx.element([1, 2], 4)) == 4
    with pytest.raises(UnsupportedField):
        ctx.field(3)
    with pytest.raises(UnsupportedField):
        gf.make_field(5, levels=(5,))


def test_coords_round_trip_through_from_coords():
    G3 = gf.extension(7, 3)
    x = G3(200)
    assert gf.from_coords(7, 3, gf.coords(x)) == x


@pytest.mark.parametrize('p', [5, 7, 13])
@pytest.mark.parametrize('k', [1, 2, 3])
def test_field_axioms_on_random_elements(p, k):
    G = gf.extension(p, k)
    rng = np.random.default_rng([p, k])
    a, b, c = (G(rng.integers(0, p ** k, size=50)) for _ in range(3))
    assert np.all((a + b) + c == a + (b + c))
    assert np.all((a * b) * c == a * (b * c))
    assert np.all(a * b == b * a)
    assert np.all(a * (b + c) == a * b + a * c)
    assert np.all(a + (-a) == 0)
    nonzero = a[a != 0]
    assert np.all(nonzero * gf.inv(nonzero) == 1)


@pytest.mark.parametrize('p', [5, 7, 13])
@pytest.mark.parametrize('k', [1, 2, 3])
def test_full_frobenius_is_the_identity(p, k):
    x = gf.extension(p, k).elements
    assert np.all(x ** (p ** k) == x)
    assert int(np.count_nonzero(x ** p == x)) == p


@pytest.mark.parametrize('p', [5, 7, 13])
def test_embedding_respects_arithmetic(p):
    G2 = gf.extension(p, 2)
    rng = np.random.default_rng([p, 4])
    a, b = (G2(rng.integers(0, p ** 2, size=30)) for _ in range(2))
    assert np.all(gf.embed(a * b, 4) == gf.embed(a, 4) * gf.embed(b, 4))
    assert np.all(gf.embed(a + b, 4) == gf.embed(a, 4) + gf.embed(b, 4))

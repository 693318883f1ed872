import numpy as np
import pytest

import gf
from errors import NonReducedInput, ZeroForm
from forms import (IDENTICALLY_ZERO, Form, ProjPoint, binary_roots, common_zeros,
                   det_form, divide_linear, form_from_terms, linear_factors, monomials,
                   multiplicity_profile, quadric_from_matrix, quadric_matrix,
                   singular_points)

P = 5


def _cubic(terms, p=P):
    return form_from_terms(terms, p)


def _points(points):
    return {pt.ints() for pt in points}


def test_monomial_orders():
    assert monomials(3, 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert monomials(2, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))
    assert len(monomials(3, 3)) == 10


def test_form_from_terms_reduces_mod_p():
    Q = form_from_terms({'xz': 1, 'yy': -1}, P)
    assert Q.to_ints() == [0, 0, 1, 4, 0, 0]
    assert Q.signed_ints() == [0, 0, 1, -1, 0, 0]
    assert str(Q) == 'x*z - y^2'


def test_product_and_division():
    a = form_from_terms({'x': 1, 'y': 1}, P)
    b = form_from_terms({'x': 1, 'y': -1}, P)
    prod = a * b
    assert prod == form_from_terms({'xx': 1, 'yy': -1}, P)
    assert divide_linear(prod, a) == b
    with pytest.raises(ValueError):
        divide_linear(prod, form_from_terms({'z': 1}, P))


def test_compose_and_evaluate():
    F = _cubic({'xxx': 1, 'yyz': 2})
    GF = gf.extension(P, 1)
    assert F.compose(GF(np.eye(3, dtype=np.int64))) == F
    swap = GF([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert F.compose(swap) == _cubic({'yyy': 1, 'xxz': 2})
    assert int(F.evaluate(GF([1, 1, 1]))) == 3


def test_derivative():
    F = _cubic({'xxx': 1, 'xyz': 1})
    dx, dy, dz = F.partials()
    assert dx == form_from_terms({'xx': 3, 'yz': 1}, P)
    assert dy == form_from_terms({'xz': 1}, P)
    assert dz == form_from_terms({'xy': 1}, P)


def test_normalized_scales_first_coefficient_to_one():
    F = _cubic({'xxy': 3, 'zzz': 1})
    assert F.normalized().to_ints()[1] == 1
    assert F.normalized() == F.scale(2)


def test_binary_roots_with_root_at_infinity():
    f = Form.from_ints([0, 1, 0, 0], P, 2, 3)      # x²y
    roots = binary_roots(f)
    assert {(pt.ints(), m) for pt, m in roots} == {((1, 0), 1), ((0, 1), 2)}
    assert multiplicity_profile(f) == (2, 1)
    assert binary_roots(Form.from_ints([0, 0, 0, 0], P, 2, 3)) is IDENTICALLY_ZERO
    assert multiplicity_profile(Form.from_ints([0, 0, 0, 0], P, 2, 3)) is None


def test_binary_roots_outside_the_prime_field():
    f = Form.from_ints([1, 0, -2, 0], P, 2, 3)     # x(x² - 2y²), 2 is not a square mod 5
    roots = binary_roots(f)
    assert multiplicity_profile(f) == (1, 1, 1)
    assert sorted(pt.level for pt, _ in roots) == [1, 2, 2]


def test_det_form():
    GF = gf.extension(P, 1)
    mats = GF(np.stack([np.diag(v) for v in np.eye(3, dtype=np.int64)]))
    assert det_form(mats) == _cubic({'xyz': 1})


def test_linear_factors_of_products_of_lines():
    lines, residual = linear_factors(_cubic({'xxy': 1}))
    assert [m for _, m in lines] == [2, 1]
    assert residual.degree == 0
    lines, _ = linear_factors(_cubic({'xyz': 1}))
    assert sorted(ell.to_ints() for ell, _ in lines) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    with pytest.raises(ZeroForm):
        linear_factors(Form.zero(gf.extension(P, 1), 3, 3))


def test_linear_factors_over_an_extension():
    # x² - 2y² splits only over F_25
    F = _cubic({'xxz': 1, 'yyz': -2})
    lines, residual = linear_factors(F)
    assert sorted(ell.level for ell, _ in lines) == [1, 2, 2]
    assert residual.degree == 0


def test_linear_factors_leave_an_irreducible_conic():
    F = _cubic({'xyz': 1, 'xxx': -1})              # x(yz - x²)
    lines, residual = linear_factors(F)
    assert len(lines) == 1 and lines[0][1] == 1
    assert lines[0][0].to_ints() == [1, 0, 0]
    assert residual.degree == 2


def test_singular_points():
    assert _points(singular_points(_cubic({'xyz': 1}))) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    node = _cubic({'yyz': 1, 'xxx': -1, 'xxz': -1})
    assert singular_points(node) == [ProjPoint.from_ints([0, 0, 1], P)]
    assert singular_points(_cubic({'xxx': 1, 'yyy': 1, 'zzz': 1})) == []
    with pytest.raises(NonReducedInput):
        singular_points(_cubic({'xxy': 1}))


def test_quadric_matrix_round_trip():
    Q = form_from_terms({'xx': 1, 'xy': 2, 'yz': 4, 'zz': 3}, P)
    q = quadric_matrix(Q)
    assert np.all(q == q.T)
    assert quadric_from_matrix(q) == Q


def test_common_zeros():
    quadrics = [form_from_terms({w: 1}, P) for w in ('xy', 'xz', 'yz')]
    assert _points(common_zeros(quadrics)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    pair = [form_from_terms({'xx': 1}, P), form_from_terms({'yy': 1}, P)]
    assert _points(common_zeros(pair)) == {(0, 0, 1)}
    assert common_zeros([form_from_terms({'xy': 1}, P)]) is IDENTICALLY_ZERO
    # x(y), x(z) with nothing else: the line x = 0 is common
    assert common_zeros(quadrics[:2]) is IDENTICALLY_ZERO
    disjoint = [form_from_terms({'xx': 1, 'yy': 1, 'zz': -1}, P), form_from_terms({'xy': 1}, P),
                form_from_terms({'zz': 1}, P)]
    assert common_zeros(disjoint) == []


def _random_form(rng, p, degree):
    while True:
        F = Form.from_ints(rng.integers(0, p, size=len(monomials(3, degree))), p, 3, degree)
        if not F.is_zero:
            return F


@pytest.mark.parametrize('p', [5, 7, 13])
def test_euler_identity(p):
    rng = np.random.default_rng([p, 5])
    G = gf.extension(p, 1)
    coordinates = [Form(G(np.eye(3, dtype=np.int64)[i]), 3, 1) for i in range(3)]
    for _ in range(20):
        F = _random_form(rng, p, 3)
        total = Form.zero(G, 3, 3)
        for x, dF in zip(coordinates, F.partials()):
            total = total + x * dF
        assert total == F.scale(3)


def _expand(lines, residual):
    product = residual
    for ell, mult in lines:
        product = product * ell ** mult
    return product


@pytest.mark.parametrize('p', [5, 7, 13])
def test_linear_factors_multiply_back(p):
    rng = np.random.default_rng([p, 6])
    for _ in range(20):
        F = _random_form(rng, p, 3)
        assert _expand(*linear_factors(F)) == F
    for _ in range(15):
        F = _random_form(rng, p, 1) * _random_form(rng, p, 1) * _random_form(rng, p, 1)
        lines, residual = linear_factors(F)
        assert sum(m for _, m in lines) == 3
        assert _expand(lines, residual) == F

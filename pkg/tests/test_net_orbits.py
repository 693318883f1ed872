import pytest

import net_orbits
from cubic_taxonomy import CubicType
from errors import ImpossibleDiscriminant
from net_orbits import (NET_CASE_TYPES, SINGULAR_LABELS, Net, OrbitLabel, classify_net,
                        disc_type, has_rank_one, net_disc, net_slice, random_net,
                        reductions, representatives, slice_type)
from subspaces import random_gl3


@pytest.mark.parametrize('p', [5, 7, 13])
def test_representatives_classify_to_their_own_label(p):
    nets = representatives(p)
    assert list(nets) == list(SINGULAR_LABELS)
    for label, W in nets.items():
        assert classify_net(W) is label


@pytest.mark.parametrize('p', [5, 13])
def test_disc_types_follow_the_catalogue(p):
    for label, W in representatives(p).items():
        assert disc_type(W) is NET_CASE_TYPES[label]


def test_net_disc_values():
    nets = representatives(5)
    assert net_disc(nets[OrbitLabel.IV_a]).to_ints() == [0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
    assert net_disc(nets[OrbitLabel.VIII]).to_ints() == [0, 0, 0, 0, 1, 0, 4, 0, 0, 4]
    assert net_disc(nets[OrbitLabel.I_a]).is_zero


def test_slice_separates_the_zero_disc_orbits():
    nets = representatives(5)
    assert slice_type(nets[OrbitLabel.I_a]) is CubicType.Zero
    assert slice_type(nets[OrbitLabel.I_b]) is not CubicType.Zero
    assert not net_slice(nets[OrbitLabel.I_b]).is_zero


def test_rank_one_separates_the_three_line_orbits():
    for p in (5, 7, 13):
        nets = representatives(p)
        assert has_rank_one(nets[OrbitLabel.IV_a])
        assert not has_rank_one(nets[OrbitLabel.IV_b])


def test_labels_are_invariant_under_congruence():
    p = 7
    for label, W in representatives(p).items():
        for seed in range(2):
            assert classify_net(W.act(random_gl3([seed, 3], p))) is label


def test_random_nets_classify():
    labels = {classify_net(random_net(seed, 5)) for seed in range(20)}
    assert labels <= set(OrbitLabel)
    assert OrbitLabel.Nonsingular in labels


def test_concurrent_lines_cannot_occur(monkeypatch):
    monkeypatch.setattr(net_orbits, 'disc_type', lambda W: CubicType.ThreeConcurrentLines)
    with pytest.raises(ImpossibleDiscriminant):
        classify_net(representatives(5)[OrbitLabel.IV_a])


@pytest.mark.parametrize('p', [5, 13])
def test_reductions_land_on_the_representatives(p):
    found, skipped = reductions(p)
    assert skipped == []
    nets = representatives(p)
    names = [r.name for r in found]
    assert 'reduction-VI-imaginary' in names
    assert sum(name.startswith('reduction-IV_b') for name in names) == 4
    for r in found:
        moved = r.result()
        assert isinstance(moved, Net)
        if r.exact:
            assert moved == nets[r.target], r.name
        assert classify_net(moved) is r.target, r.name
        assert classify_net(r.source) is r.target, r.name


def test_reductions_needing_i_are_skipped_without_it():
    found, skipped = reductions(7)
    assert [name for name, _ in skipped] == ['reduction-IV_b', 'reduction-VI-imaginary']
    assert all('square root of -1' in reason for _, reason in skipped)
    assert {r.name for r in found} == {'reduction-III', 'reduction-V', 'reduction-V(c=0)',
                                       'reduction-VII', 'reduction-VIII', 'reduction-VI-real'}
    nets = representatives(7)
    for r in found:
        if r.exact:
            assert r.result() == nets[r.target], r.name


@pytest.mark.parametrize('p', [5, 7, 13])
def test_printed_v_move_is_exact_only_without_c(p):
    found, _ = reductions(p)
    by_name = {r.name: r for r in found}
    nets = representatives(p)
    exact, shifted = by_name['reduction-V(c=0)'], by_name['reduction-V']
    assert exact.exact and exact.result() == nets[OrbitLabel.V]
    assert not shifted.exact
    assert shifted.result() != nets[OrbitLabel.V]
    assert classify_net(shifted.result()) is OrbitLabel.V

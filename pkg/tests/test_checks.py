import pytest

from check_base import (FAIL, PASS, WARN, Check, CheckContext, CheckResult, expect,
                        guarded, tally, worst_status)
from checks import discover_checks
from errors import CharacteristicObstruction, WrongHilbert

NON_ORACLE = ['net_labels', 'disc_types', 'slice_dichotomy', 'rank_one_dichotomy',
              'pencil_separation', 'algebra_correspondence', 'structure_round_trip',
              'reductions', 'nonsingular_j']


def _run(ctx):
    results = []
    for check in discover_checks().values():
        if check.needs_oracle and not ctx.oracle:
            continue
        results.extend(check.execute(ctx))
    return results


def test_discovery_order():
    checks = discover_checks()
    assert [name for name, c in checks.items() if not c.needs_oracle] == NON_ORACLE
    assert [name for name, c in checks.items() if c.needs_oracle] == \
        ['orbit_disjointness', 'orbit_constancy']


def test_catalogue_checks_over_f5():
    results = _run(CheckContext(p=5, trials=5))
    assert tally(results)[FAIL] == 0, [r for r in results if r.status == FAIL]
    assert {r.id for r in results if r.status == WARN} == {'pencil-heading/SqOne_a', 'algebra/IV_b',
                                                          'reduction-V'}
    ids = {r.id for r in results}
    assert 'reduction-V(c=0)' in ids
    assert {'net-label/VIII', 'slice/I_b', 'rank-one/IV_b', 'round-trip/random',
            'reduction-VI-imaginary', 'nonsingular/j'} <= ids


def test_catalogue_checks_over_f7():
    results = _run(CheckContext(p=7, trials=3))
    assert tally(results)[FAIL] == 0, [r for r in results if r.status == FAIL]
    warned = {r.id for r in results if r.status == WARN}
    assert {'reduction-IV_b', 'reduction-VI-imaginary', 'algebra/II', 'round-trip/II'} <= warned
    assert all(r.status == PASS for r in results if r.id.startswith('net-label/'))


def test_oracle_checks_only_run_over_f5():
    checks = discover_checks()
    ctx = CheckContext(p=13, oracle=True)
    for name in ('orbit_disjointness', 'orbit_constancy'):
        (result,) = checks[name].execute(ctx)
        assert result.status == WARN


def test_representative_orbits_are_walked_whole_by_default(monkeypatch):
    import checks.orbits
    seen = []

    def record(W, members=None, seed=None):
        seen.append(members)
        return 'II', 1

    monkeypatch.setattr(checks.orbits, 'check_orbit_constancy', record)
    assert CheckContext(p=5).orbit_members == 0
    results = discover_checks()['orbit_constancy'].execute(CheckContext(p=5, oracle=True))
    assert seen and all(members is None for members in seen)
    assert any(r.id == 'orbits/net-constancy/II' and r.status == PASS for r in results)


class _Raising(Check):
    name = 'raising'
    description = 'raises the error it is given'

    def __init__(self, error):
        self.error = error

    def run(self, ctx):
        raise self.error


def test_execute_folds_domain_errors():
    ctx = CheckContext(p=5)
    (r,) = _Raising(CharacteristicObstruction('7 divides 7')).execute(ctx)
    assert (r.id, r.status) == ('raising', WARN)
    (r,) = _Raising(WrongHilbert('bad')).execute(ctx)
    assert r.status == FAIL and r.detail.startswith('WrongHilbert')
    with pytest.raises(KeyError):
        _Raising(KeyError('bug')).execute(ctx)


def test_helpers():
    assert expect('a', True).status == PASS
    assert expect('a', False, 'why').to_dict() == {'id': 'a', 'status': FAIL, 'detail': 'why'}

    def boom():
        raise CharacteristicObstruction('no')
    assert guarded('b', boom).status == WARN
    results = [CheckResult('x', PASS), CheckResult('y', WARN), CheckResult('z', PASS)]
    assert worst_status(results) == WARN
    assert worst_status([]) == PASS
    assert tally(results) == {PASS: 2, WARN: 1, FAIL: 0}


def test_nonsingular_paths_catch_a_singular_slice(monkeypatch):
    import checks.nonsingular
    from net_orbits import OrbitLabel, net_disc, representatives
    nodal = net_disc(representatives(5)[OrbitLabel.VIII])
    monkeypatch.setattr(checks.nonsingular, 'net_slice', lambda W: nodal)
    results = {r.id: r for r in discover_checks()['nonsingular_j'].execute(CheckContext(p=5, trials=5))}
    assert results['nonsingular/paths'].status == FAIL
    assert 'disagree on' in results['nonsingular/paths'].detail


def test_nonsingular_paths_cover_singular_nets():
    results = {r.id: r for r in discover_checks()['nonsingular_j'].execute(CheckContext(p=5, trials=5))}
    assert results['nonsingular/paths'].status == PASS
    assert results['nonsingular/j'].status == PASS
    assert results['nonsingular/paths'].detail.endswith('singular')

import json

import numpy as np

from algebras import structure_constants
from conic_nets import EXIT_CHECK_FAILED, main, parse_document
from errors import CompositeModulus, ParseError
from net_orbits import OrbitLabel, representatives


def _write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def _report(directory, name):
    return json.loads((directory / f"{name}.json").read_text())


def test_classify_mixed_documents(tmp_path):
    nets = representatives(5)
    docs = [
        {'p': 5, 'kind': 'net', 'matrices': [[int(v) for v in A.reshape(-1)]
                                             for A in nets[OrbitLabel.VIII].basis]},
        {'p': 5, 'kind': 'pencil', 'matrices': [[0, 0, 0, 0, 1, 0, 0, 0, 1],
                                                [1, 0, 0, 0, 0, 0, 0, 0, 1]]},
        {'p': 5, 'kind': 'ideal', 'generators': [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
                                                 [0, 0, 0, 0, 1, 0],
                                                 [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                                                 [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                                                 [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]]},
        {'p': 5, 'kind': 'multtable',
         'constants': structure_constants(nets[OrbitLabel.VI]).to_ints().tolist()},
    ]
    path = _write(tmp_path / 'mixed.json', docs)
    assert main(['--report-dir', str(tmp_path), 'classify', path]) == 0
    results = _report(tmp_path, 'classify_mixed')['results']
    assert [r['label'] for r in results] == ['VIII', 'Simple111', 'IV_a', 'VI']
    assert results[0]['disc'] == [0, 0, 0, 0, 1, 0, 4, 0, 0, 4]
    assert results[0]['disc_type'] == 'Node'
    assert results[1]['profile'] == [1, 1, 1]
    assert results[2]['hilbert'] == [3, 3]
    assert all(r['p'] == 5 for r in results)


def test_classify_parse_errors(tmp_path):
    bad_json = tmp_path / 'bad.json'
    bad_json.write_text('{"p": 5,')
    assert main(['--report-dir', str(tmp_path), 'classify', str(bad_json)]) == ParseError.exit_code

    asymmetric = _write(tmp_path / 'asym.json', {'p': 5, 'kind': 'pencil', 'matrices': [
        [0, 1, 0, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0, 0]]})
    assert main(['classify', asymmetric]) == ParseError.exit_code

    composite = _write(tmp_path / 'composite.json', {'p': 9, 'kind': 'net', 'matrices': []})
    assert main(['classify', composite]) == CompositeModulus.exit_code


def test_parse_document_prime_override():
    doc = {'p': 5, 'kind': 'net', 'matrices': [np.eye(3, dtype=int).reshape(-1).tolist(),
                                               [0, 1, 0, 1, 0, 0, 0, 0, 0],
                                               [0, 0, 0, 0, 0, 0, 0, 0, 1]]}
    kind, p, W = parse_document(doc, 'doc', prime=13)
    assert (kind, p, W.p) == ('net', 13, 13)


def test_random_then_classify(tmp_path):
    out = tmp_path / 'nets' / 'random.json'
    assert main(['random', '4', '--seed', '9', '--out', str(out)]) == 0
    docs = json.loads(out.read_text())
    assert len(docs) == 4 and all(d['kind'] == 'net' for d in docs)
    assert main(['--report-dir', str(tmp_path), 'classify', str(out)]) == 0
    assert len(_report(tmp_path, 'classify_random')['results']) == 4


def test_verify_tables_report(tmp_path):
    code = main(['--report-dir', str(tmp_path), 'verify-tables', '--prime', '5', '--trials', '3'])
    assert code == 0
    report = _report(tmp_path, 'verify_tables_p5')
    assert report['summary']['FAIL'] == 0
    assert report['summary']['WARN'] == 3
    assert report['status'] == 'WARN'
    assert EXIT_CHECK_FAILED == 3


def test_sample_sweep_report(tmp_path):
    args = ['--report-dir', str(tmp_path), 'sweep', '--kind', 'pencil',
            '--mode', 'sample', '25', '--seed', '2', '--orbits', '1', '--orbit-members', '5']
    assert main(args) == 0
    report = _report(tmp_path, 'sweep_pencil_sample25_seed2')
    assert report['total'] == 25
    assert report['mode'] == 'sample(25, seed=2)'
    (constancy,) = report['constancy']
    assert constancy['checked'] == min(5, constancy['orbit_size'])
    assert constancy['label'] in report['counts']


def test_sweep_mode_errors(tmp_path):
    base = ['--report-dir', str(tmp_path), 'sweep']
    assert main(base + ['--mode', 'sample', 'many']) == ParseError.exit_code
    assert main(base + ['--mode', 'full', '3']) == ParseError.exit_code
    assert main(base + ['--mode', 'everything']) == ParseError.exit_code

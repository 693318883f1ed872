"""
conic_nets - classify nets and pencils of conics over F_p

Commands:
    classify PATH          label nets / pencils / ideals / multiplication tables from a JSON file
    verify-tables          reproduce the catalogue checks (checks/ plug-ins)
    sweep                  F_5 orbit census or a sampled census
    random N               write N random nets as a JSON list
"""

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

import gf
from algebras import MultTable, classify_algebra, hilbert_vector, quotient_algebra
from check_base import FAIL, CheckContext, tally, worst_status
from checks import discover_checks
from config import (DEFAULT_PRIME, ORACLE_PRIME, ORBIT_MEMBER_CHECKS,
                    REPORT_DIR, SAMPLE_ORBIT_CHECKS, SAMPLE_SEED, SWEEP_WORKERS, log_message,
                    setup_logging)
from cubic_taxonomy import classify_cubic
from errors import ConicNetsError, ParseError, exit_code_table
from forms import Form, monomials, multiplicity_profile
from net_orbits import Net, classify_net, has_rank_one, net_disc, net_slice, random_net
from pencil_orbits import Pencil, classify_pencil, pencil_disc, pencil_invariants

EXIT_CHECK_FAILED = 3

KINDS = ('net', 'pencil', 'ideal', 'multtable')
_DEGREES = {len(monomials(3, d)): d for d in (1, 2, 3)}


# =============================================================================
# INPUT
# =============================================================================

def load_documents(path):
    """A NetFile document or a list of them."""
    try:
        with open(path) as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}")
    docs = data if isinstance(data, list) else [data]
    for i, doc in enumerate(docs):
        if not isinstance(doc, dict):
            raise ParseError(f"{path}: document {i} is not an object")
    return docs


def _field(doc, name, where):
    if name not in doc:
        raise ParseError(f"{where}: missing field '{name}'")
    return doc[name]


def _int_array(value, where, shape=None):
    try:
        arr = np.asarray(value, dtype=np.int64)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: expected integers")
    if shape is not None and arr.shape != shape:
        raise ParseError(f"{where}: expected shape {shape}, got {arr.shape}")
    return arr


def parse_document(doc, where, prime=None):
    """NetFile document -> (kind, p, object)."""
    p = prime if prime is not None else _field(doc, 'p', where)
    if not isinstance(p, int):
        raise ParseError(f"{where}.p: expected an integer")
    GF = gf.extension(p, 1)
    kind = _field(doc, 'kind', where)
    if kind not in KINDS:
        raise ParseError(f"{where}.kind: expected one of {KINDS}, got {kind!r}")

    if kind in ('net', 'pencil'):
        cls = Net if kind == 'net' else Pencil
        rows = _field(doc, 'matrices', where)
        if not isinstance(rows, list) or len(rows) != cls.dim:
            raise ParseError(f"{where}.matrices: a {kind} needs {cls.dim} matrices")
        mats = []
        for i, row in enumerate(rows):
            A = _int_array(row, f"{where}.matrices[{i}]", (9,)).reshape(3, 3) % p
            if np.any(A != A.T):
                raise ParseError(f"{where}.matrices[{i}]: matrix is not symmetric")
            mats.append(A)
        return kind, p, cls(GF(np.stack(mats)))

    if kind == 'ideal':
        generators = []
        for i, coeffs in enumerate(_field(doc, 'generators', where)):
            values = _int_array(coeffs, f"{where}.generators[{i}]")
            degree = _DEGREES.get(values.shape[0]) if values.ndim == 1 else None
            if degree is None:
                raise ParseError(f"{where}.generators[{i}]: expected 3, 6 or 10 coefficients")
            generators.append(Form.from_ints(values, p, 3, degree))
        if not generators:
            raise ParseError(f"{where}.generators: empty")
        return kind, p, generators

    constants = _int_array(_field(doc, 'constants', where), f"{where}.constants", (7, 7, 7))
    return kind, p, MultTable.from_ints(constants, p)


def net_document(W):
    return {'p': int(W.p), 'kind': 'net',
            'matrices': [[int(v) for v in A.reshape(-1)] for A in W.basis]}


# =============================================================================
# REPORTS
# =============================================================================

def write_report(name, payload, report_dir=None):
    directory = Path(report_dir or REPORT_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.json"
    with open(path, 'w') as f:
        json.dump(payload, f, indent=2)
        f.write('\n')
    log_message(f"Report written to {path}")
    return path


def _banner(title):
    print("\n" + "=" * 70)
    print(title)
    print("=" * 70)


# =============================================================================
# COMMANDS
# =============================================================================

def classify_object(kind, obj):
    """Report record for one parsed document."""
    if kind == 'net':
        disc, sl = net_disc(obj), net_slice(obj)
        return {
            'kind': kind,
            'label': classify_net(obj).value,
            'disc': disc.to_ints(),
            'disc_type': classify_cubic(disc).value,
            'slice': sl.to_ints(),
            'slice_type': classify_cubic(sl).value,
            'rank_one': has_rank_one(obj),
        }
    if kind == 'pencil':
        disc = pencil_disc(obj)
        profile = multiplicity_profile(disc)
        inv = pencil_invariants(obj)
        return {
            'kind': kind,
            'label': classify_pencil(obj).value,
            'disc': disc.to_ints(),
            'profile': list(profile) if profile is not None else None,
            'rank_one_points': inv.rank_one_points,
            'common_kernel': inv.common_kernel,
        }
    table = quotient_algebra(obj) if kind == 'ideal' else obj
    return {
        'kind': kind,
        'label': classify_algebra(table).value,
        'hilbert': list(hilbert_vector(table)),
        'notes': list(table.notes),
    }


def cmd_classify(args):
    docs = load_documents(args.path)
    records = []
    for i, doc in enumerate(docs):
        kind, p, obj = parse_document(doc, f"{args.path}[{i}]", args.prime)
        record = classify_object(kind, obj)
        record['p'] = p
        records.append(record)

    _banner(f"CLASSIFY {args.path}")
    for i, record in enumerate(records):
        extra = record.get('disc_type') or record.get('profile') or record.get('hilbert')
        print(f"  [{i}] {record['kind']:<9} p={record['p']:<3} {record['label']:<12} {extra}")
    print("=" * 70 + "\n")
    write_report(f"classify_{Path(args.path).stem}", {'command': 'classify', 'source': str(args.path),
                                                      'results': records}, args.report_dir)
    return 0


def cmd_verify_tables(args):
    gf.extension(args.prime, 1)
    ctx = CheckContext(p=args.prime, oracle=args.oracle, trials=args.trials,
                       seed=args.seed, orbit_members=args.orbit_members)
    results = []
    for name, check in discover_checks().items():
        if check.needs_oracle and not ctx.oracle:
            continue
        log_message(f"Running {name}: {check.description}")
        results.extend(check.execute(ctx))

    counts = tally(results)
    status = worst_status(results)
    _banner(f"VERIFY TABLES over F_{ctx.p}" + (" (with F_5 oracle)" if ctx.oracle else ""))
    for r in results:
        print(f"  {r.status:<5} {r.id:<40} {r.detail}")
    print(f"\n  PASS {counts['PASS']}  WARN {counts['WARN']}  FAIL {counts['FAIL']}  ->  {status}")
    print("=" * 70 + "\n")
    write_report(f"verify_tables_p{ctx.p}", {
        'command': 'verify-tables', 'p': ctx.p, 'oracle': ctx.oracle, 'trials': ctx.trials,
        'status': status, 'summary': counts, 'records': [r.to_dict() for r in results],
    }, args.report_dir)
    return EXIT_CHECK_FAILED if status == FAIL else 0


def cmd_sweep(args):
    from oracle import full_sweep, sample_sweep

    mode = args.mode[0]
    if mode == 'full':
        if len(args.mode) != 1:
            raise ParseError("--mode full takes no count")
        census = full_sweep(args.kind, members=args.orbit_members or None, seed=args.seed)
        name = f"sweep_{args.kind}_full"
    elif mode == 'sample':
        if len(args.mode) != 2 or not args.mode[1].isdigit():
            raise ParseError("--mode sample needs a sample count")
        n = int(args.mode[1])
        census = sample_sweep(args.kind, n, seed=args.seed, workers=args.workers, p=args.prime,
                              orbits=args.orbits, members=args.orbit_members or None)
        name = f"sweep_{args.kind}_sample{n}_seed{args.seed}"
    else:
        raise ParseError(f"unknown sweep mode {mode!r}")

    _banner(f"{args.kind.upper()} CENSUS ({census.mode}, p={census.p})")
    if census.total:
        print(census.summary().to_string())
    print(f"\n  total {census.total}  unclassified {census.unclassified}  "
          f"impossible discriminants {census.impossible}")
    for c in census.constancy:
        print(f"  constant: {c.label:<12} {c.checked}/{c.orbit_size} orbit members (key {c.key})")
    for note in census.notes:
        print(f"  note: {note}")
    print("=" * 70 + "\n")
    write_report(args.out or name, census.to_dict(), args.report_dir)
    return 0


def cmd_random(args):
    docs = [net_document(random_net([args.seed, i], args.prime)) for i in range(args.count)]
    out = Path(args.out)
    if out.parent != Path('.'):
        out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w') as f:
        json.dump(docs, f, indent=2)
        f.write('\n')
    log_message(f"Wrote {len(docs)} random nets over F_{args.prime} to {out}")
    return 0


# =============================================================================
# ENTRY POINT
# =============================================================================

def _epilog():
    lines = ["exit codes:", "  0  success", f"  {EXIT_CHECK_FAILED}  a verification check failed"]
    lines += [f"  {code:<2} {name}" for code, name in exit_code_table()]
    return "\n".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='conic_nets', description=__doc__.strip().splitlines()[0], epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--report-dir', default=None, help=f"report directory (default {REPORT_DIR})")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', help='classify the objects in a NetFile')
    p.add_argument('path')
    p.add_argument('--prime', type=int, default=None, help='override the file prime')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('verify-tables', help='run every catalogue check')
    p.add_argument('--prime', type=int, default=DEFAULT_PRIME)
    p.add_argument('--oracle', action='store_true', help='add the F_5 orbit checks')
    p.add_argument('--trials', type=int, default=100)
    p.add_argument('--seed', type=int, default=SAMPLE_SEED)
    p.add_argument('--orbit-members', type=int, default=0,
                   help='sample this many members per representative orbit (default 0 = whole orbit)')
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser('sweep', help='orbit census over F_5 or a sampled census')
    p.add_argument('--kind', choices=('net', 'pencil'), default='net')
    p.add_argument('--mode', nargs='+', default=['sample', '1000'], metavar='full | sample N')
    p.add_argument('--seed', type=int, default=SAMPLE_SEED)
    p.add_argument('--workers', type=int, default=SWEEP_WORKERS,
                   help='worker processes for sample mode; full mode runs in one process')
    p.add_argument('--prime', type=int, default=ORACLE_PRIME, help='prime for sample mode')
    p.add_argument('--orbit-members', type=int, default=ORBIT_MEMBER_CHECKS,
                   help='members classified per constancy check (0 = all)')
    p.add_argument('--orbits', type=int, default=SAMPLE_ORBIT_CHECKS,
                   help='sampled items whose F_5-orbits are checked for a constant label')
    p.add_argument('--out', default=None, help='report name')
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('random', help='write N random nets')
    p.add_argument('count', type=int)
    p.add_argument('--seed', type=int, default=SAMPLE_SEED)
    p.add_argument('--prime', type=int, default=DEFAULT_PRIME)
    p.add_argument('--out', default=os.path.join(REPORT_DIR, 'random_nets.json'))
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logging()
    try:
        return args.func(args)
    except ConicNetsError as e:
        log_message(f"ERROR: {type(e).__name__}: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())

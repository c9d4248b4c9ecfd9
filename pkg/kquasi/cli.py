"""The ``qg`` command line front end.

Every verb prints its result on stdout, as JSON with ``--json`` (stable key
order) or as plain text otherwise; diagnostics go to stderr. Exit codes:
0 on success, 1 on usage or input errors, 2 when a verified property turns
out false.
"""
import argparse
import json
import sys

from . import defaults
from .catalogue import report_named_examples
from .errors import PropertyViolation, QuasigroupError
from .linear import (PAIR_CLAIMS, build, cheban_schroeder_check, classify,
                     class_pair_survey, commutative_instances,
                     quadratical_orders, quadratical_orders_by_sweep, report,
                     solve_from_k, verify_classification)
from .log import Log, LogLevel, set_log_level
from .oracle import enumerate as enumerate_survivors
from .oracle import nonexistence_on_tables, oracle_vs_closed_form
from .parastrophes import (ParastropheKind, equality_case, hexagonal_closure,
                           parastrophe_coeffs, parastrophe_table,
                           verify_closed_forms, verify_equality_cases,
                           verify_kstar_by_a, verify_kstar_by_k,
                           verify_parastrophe_types)
from .qq import (AStructure, QQStructure, astructures, check_exchange_laws,
                 check_halving, check_induced_quadratical, check_p23,
                 check_sum_equivalence, phi, psi)
from .tables import (CayleyTable, from_translatable_sequence, quadratical_laws,
                     translatability)
from .utils import set_worker_count
from .version import __version__


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage errors with exit code 1 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f'{self.prog}: error: {message}')


def _rows(t, args):
    shift = 1 if args.one_based else 0
    return [[v + shift for v in row] for row in t.tolist()]


def _load_table(path):
    with open(path) as f:
        text = f.read()
    if path.endswith('.csv'):
        return CayleyTable.from_csv(text)
    return CayleyTable.from_json(text)


# ----------------------------------------------------------------------
# Verbs

def cmd_classify(args):
    if args.b is not None and (args.a + args.b) % args.n != 1 % args.n:
        raise UsageError(f'classify: b must be 1 - a mod {args.n}, got a={args.a}, b={args.b}')
    # rejects even orders and non-quasigroups
    classify(args.n, args.a)
    return 0, report(args.n, args.a, args.b).to_dict()


def cmd_construct(args):
    if args.row0 is not None:
        if args.k is None:
            raise UsageError('construct: --row0 needs --k')
        row0 = [int(v) - (1 if args.one_based else 0) for v in args.row0.split(',')]
        table = from_translatable_sequence(row0, args.k)
        a = b = None
    else:
        if args.n is None:
            raise UsageError('construct: give --n with --a [--b] or --k, or --row0 with --k')
        if args.a is not None:
            a = args.a % args.n
            b = (1 - a) % args.n if args.b is None else args.b % args.n
        elif args.k is not None:
            coeffs = solve_from_k(args.n, args.k)
            if coeffs is None:
                return 0, {'n': args.n, 'k': args.k, 'table': None}
            a, b = coeffs
        else:
            raise UsageError('construct: --n needs --a or --k')
        table = build(args.n, a, b)
    if args.plot:
        from .visualization import plot_table
        plot_table(table, args.plot, one_based=args.one_based)
        Log(LogLevel.Info, f'construct: heat map written to {args.plot}')
    return 0, {'n': table.n, 'a': a, 'b': b, 'table': _rows(table, args),
               'translatability': list(translatability(table))}


def cmd_parastrophe(args):
    source = build(args.n, args.a % args.n, args.b % args.n)
    kinds = list(ParastropheKind) if args.which == 'all' else [ParastropheKind(int(args.which))]
    entries = []
    for kind in kinds:
        coeffs = parastrophe_coeffs(args.n, args.a, args.b, kind)
        entry = coeffs.to_dict()
        entry['table'] = _rows(parastrophe_table(source, kind), args)
        entries.append(entry)
    if args.plot:
        from .visualization import plot_parastrophes
        plot_parastrophes(source, args.plot, one_based=args.one_based)
        Log(LogLevel.Info, f'parastrophe: heat maps written to {args.plot}')
    return 0, {'n': args.n, 'a': args.a % args.n, 'b': args.b % args.n,
               'equality_case': equality_case(args.n, args.a, args.b).name,
               'parastrophes': entries}


def cmd_enumerate(args):
    if args.all_k:
        ks = range(1, args.n)
    elif args.k is not None:
        ks = [args.k]
    else:
        raise UsageError('enumerate: give --k or --all-k')
    results = []
    for k in ks:
        result = enumerate_survivors(args.n, k, quasigroups_only=not args.groupoids,
                                     max_n=args.max_n, verbose=args.verbose > 0)
        payload = result.to_dict()
        payload['tables'] = [_rows(t, args) for t in result.tables]
        results.append(payload)
    return 0, {'n': args.n, 'results': results}


def cmd_oracle(args):
    result = oracle_vs_closed_form(args.max_n, quasigroups_only=not args.groupoids,
                                   verbose=args.verbose > 0)
    return 0, result.to_dict()


_TABLE_CHECKS = {
    'kstar-a': lambda m, v: verify_kstar_by_a(m, v),
    'kstar-k': lambda m, v: verify_kstar_by_k(m, v),
    'types': lambda m, v: verify_parastrophe_types(m, v),
    'closed-forms': lambda m, v: verify_closed_forms(min(m, defaults.INVARIANT_MAX_N), v),
    'equality': lambda m, v: verify_equality_cases(min(m, defaults.EQUALITY_MAX_N), v),
    'hexagonal': lambda m, v: hexagonal_closure(m, v),
    'classification': lambda m, v: verify_classification(min(m, defaults.INVARIANT_MAX_N), v),
}


def cmd_verify_tables(args):
    names = list(_TABLE_CHECKS) if args.table == 'all' else [args.table]
    reports = [_TABLE_CHECKS[name](args.max_n, args.verbose > 0) for name in names]
    ok = all(r.ok for r in reports)
    return (0 if ok else 2), {'ok': ok, 'reports': [r.to_dict() for r in reports]}


def cmd_survey(args):
    surveys = class_pair_survey(args.max_n, verbose=args.verbose > 0)
    payload = {
        'max_n': args.max_n,
        'pairs': [s.to_dict() for s in surveys],
        'anomalies': [s.label for s in surveys if not s.agrees],
        'claims': len(PAIR_CLAIMS),
    }
    if args.commutative:
        payload['commutative'] = {cls.value: [list(w) for w in found]
                                  for cls, found in commutative_instances(args.max_n).items()}
    return 0, payload


def cmd_nonexistence(args):
    linear = cheban_schroeder_check(args.max_n, args.quadruple_max_n, verbose=args.verbose > 0)
    tables = nonexistence_on_tables(args.table_max_n, verbose=args.verbose > 0)
    return 0, {'linear': linear.to_dict(), 'tables': tables.to_dict()}


def cmd_orders(args):
    orders = quadratical_orders(args.limit)
    swept = quadratical_orders_by_sweep(args.limit)
    ok = orders == swept
    return (0 if ok else 2), {'limit': args.limit, 'orders': orders, 'agrees_with_sweep': ok}


def _astructure_payload(astr, args):
    table = psi(astr)
    group = phi(QQStructure.from_astructure(astr))
    checks = {
        'induced_quadratical': check_induced_quadratical(astr),
        'halving': check_halving(astr),
        'quadratical_laws': all(quadratical_laws(table).values()),
        'commutative_group': group.is_commutative_group(),
        'a_axioms': all(group.check_a_axioms().values()),
        'round_trip': group.to_astructure() == astr,
    }
    if astr.n <= args.quadruple_max_n:
        checks['sum_equivalence'] = check_sum_equivalence(astr, args.quadruple_max_n)
        checks['exchange_laws'] = check_exchange_laws(astr, args.quadruple_max_n)
    return {'astructure': astr.to_dict(), 'table': _rows(table, args), 'checks': checks}


def cmd_qq(args):
    if args.from_table:
        if args.s is None:
            raise UsageError('qq: --from-table needs --s')
        q = QQStructure.from_translations(_load_table(args.from_table), args.s)
        axioms = q.check_axioms()
        payload = {'axioms': axioms.to_dict(), 'companion_translations': check_p23(q)}
        if axioms.holds:
            payload['astructure'] = phi(q).to_astructure().to_dict()
        ok = axioms.holds and payload['companion_translations']
        return (0 if ok else 2), payload

    if args.n is None:
        raise UsageError('qq: give --n [--l L --r R] or --from-table FILE --s S')
    if args.l is not None or args.r is not None:
        if args.l is None or args.r is None:
            raise UsageError('qq: --l and --r go together')
        found = [AStructure(args.n, args.l % args.n, args.r % args.n)]
    else:
        found = astructures(args.n)
    entries = [_astructure_payload(astr, args) for astr in found]
    ok = all(all(v for v in e['checks'].values()) for e in entries)
    return (0 if ok else 2), {'n': args.n, 'astructures': entries}


def cmd_check(args):
    verdicts = report_named_examples()
    ok = all(v.passed for v in verdicts)
    return (0 if ok else 2), {'ok': ok, 'examples': [v.to_dict() for v in verdicts]}


# ----------------------------------------------------------------------
# Parser

def build_parser():
    parser = _Parser(prog='qg', description='Idempotent k-translatable quasigroups over Z_n')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--json', action='store_true', help='print JSON')
    parser.add_argument('--one-based', action='store_true', help='label elements 1..n')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='more diagnostics on stderr (repeatable)')
    parser.add_argument('--workers', type=int, default=1, help='worker processes for sweeps')
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True

    p = verbs.add_parser('classify', help='classes and k of x·y = ax + by mod n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int)
    p.set_defaults(func=cmd_classify)

    p = verbs.add_parser('construct', help='build a table from (a, b), from k, or from a first row')
    p.add_argument('--n', type=int)
    p.add_argument('--a', type=int)
    p.add_argument('--b', type=int)
    p.add_argument('--k', type=int)
    p.add_argument('--row0', help='comma separated first row')
    p.add_argument('--plot', metavar='FILE', help='write a heat map of the table')
    p.set_defaults(func=cmd_construct)

    p = verbs.add_parser('parastrophe', help='the parastrophes of x·y = ax + by mod n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--which', choices=['1', '2', '3', '4', '5', 'all'], default='all')
    p.add_argument('--plot', metavar='FILE', help='write heat maps of the table and its parastrophes')
    p.set_defaults(func=cmd_parastrophe)

    p = verbs.add_parser('enumerate', help='brute-force idempotent k-translatable quasigroups')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int)
    p.add_argument('--all-k', action='store_true')
    p.add_argument('--groupoids', action='store_true',
                   help='keep idempotent translatable groupoids that are not quasigroups')
    p.add_argument('--max-n', type=int, default=defaults.ORACLE_MAX_N)
    p.set_defaults(func=cmd_enumerate)

    p = verbs.add_parser('oracle', help='brute force against the closed form')
    p.add_argument('--max-n', type=int, default=defaults.ORACLE_MAX_N)
    p.add_argument('--groupoids', action='store_true')
    p.set_defaults(func=cmd_oracle)

    p = verbs.add_parser('verify-tables', help='k* formulas, parastrophe types, equality cases and classification')
    p.add_argument('--max-n', type=int, default=defaults.TABLES_MAX_N)
    p.add_argument('--table', choices=list(_TABLE_CHECKS) + ['all'], default='all')
    p.set_defaults(func=cmd_verify_tables)

    p = verbs.add_parser('survey', help='instances shared by two classes')
    p.add_argument('--max-n', type=int, default=defaults.SURVEY_MAX_N)
    p.add_argument('--commutative', action='store_true', help='also list commutative instances')
    p.set_defaults(func=cmd_survey)

    p = verbs.add_parser('nonexistence', help='no Cheban or Schröder instances')
    p.add_argument('--max-n', type=int, default=defaults.INVARIANT_MAX_N)
    p.add_argument('--quadruple-max-n', type=int, default=defaults.QUADRUPLE_MAX_N)
    p.add_argument('--table-max-n', type=int, default=defaults.ORACLE_MAX_N)
    p.set_defaults(func=cmd_nonexistence)

    p = verbs.add_parser('orders', help='orders admitting a quadratical quasigroup')
    p.add_argument('--limit', type=int, default=defaults.ORDERS_LIMIT)
    p.set_defaults(func=cmd_orders)

    p = verbs.add_parser('qq', help='A-structures, QQ-structures and the round trip')
    p.add_argument('--n', type=int)
    p.add_argument('--l', type=int)
    p.add_argument('--r', type=int)
    p.add_argument('--from-table', metavar='FILE', help='table as JSON or CSV')
    p.add_argument('--s', type=int)
    p.add_argument('--quadruple-max-n', type=int, default=defaults.QUADRUPLE_MAX_N)
    p.set_defaults(func=cmd_qq)

    p = verbs.add_parser('check', help='verify the named examples')
    p.set_defaults(func=cmd_check)
    return parser


def _print(payload, args):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        print(f'{key}: {value}')


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1

    set_log_level({0: LogLevel.Warn, 1: LogLevel.Info, 2: LogLevel.Debug}.get(
        args.verbose, LogLevel.Trace))
    if args.workers != 1:
        set_worker_count(args.workers)

    try:
        code, payload = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f'qg: error: {e}', file=sys.stderr)
        return 1
    except PropertyViolation as e:
        _print({'error': str(e), 'counterexample': e.details}, args)
        return 2
    except QuasigroupError as e:
        print(f'qg: error: {e}', file=sys.stderr)
        return 1
    _print(payload, args)
    return code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()

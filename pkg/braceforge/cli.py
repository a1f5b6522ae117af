"""
Command-line interface.

Exit codes: 0 when every checked property holds or the object was produced,
1 for a mathematical "no" (always shipped with its certificate), 2 for usage
and input errors.
"""
import argparse
import logging
import sys

from .braceforge_config import BraceforgeConfig
from .cohomology import SOLVE_METHODS, TwoCocycle, decide_rota_baxter, extract_kappa, solve_coboundary
from .config import DEFAULT_COMPLEMENT_CAP, DEFAULT_ENUMERATION_CAP, DEFAULT_RECODINGS, DEFAULT_SEED
from .exceptions import BraceforgeError, NotAutomorphismError, SchemaError
from .extensions import build_central_extension, derived_intersection_obstruction, find_complement
from .finite_group import FiniteGroup, GroupMap
from .gallery import build_alpha_family
from .gamma import GammaFunction, gamma_from_inner_rep, verify_gamma, verify_skew_brace
from .group_families import make_abelian, make_dihedral, make_heisenberg, make_symmetric
from .report import REPORT_FORMATS, Report, emit_report
from .reproduction import TARGETS, reproduce
from .rota_baxter import RotaBaxterOperator, enumerate_rb, verify_rb
from .utils import canonical_json, dump_object, load_object, object_to_params
from .verdict_status import VerdictStatus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2

GROUP_FAMILIES = ('abelian', 'heisenberg', 'dihedral', 'symmetric')


class UsageError(Exception):
    pass


class Command:
    """One verb with its parsed arguments; execute() returns (exit code, payload bytes)."""

    def __init__(self, verb, args):
        if verb not in VERBS:
            raise UsageError('unknown verb {!r}'.format(verb))
        self.verb = verb
        self.args = args
        self.output = getattr(args, 'output', None)
        self.format = getattr(args, 'format', 'json')
        self.config = BraceforgeConfig(
            enumeration_cap=getattr(args, 'enumeration_cap', DEFAULT_ENUMERATION_CAP),
            complement_cap=getattr(args, 'complement_cap', DEFAULT_COMPLEMENT_CAP),
            seed=getattr(args, 'seed', DEFAULT_SEED),
            recodings=getattr(args, 'recodings', DEFAULT_RECODINGS))

    def execute(self):
        return VERBS[self.verb](self)

    def report(self):
        return Report(self.verb, seed=self.config.seed, timing=getattr(self.args, 'timing', False))

    def __str__(self):
        return "Command:\n--Verb: {}\n--Output: {}\n--Format: {}\n".format(self.verb, self.output or '-', self.format)


def _load(path, expected, flag):
    obj = load_object(path, expected)
    if not isinstance(obj, expected):
        raise SchemaError('/kind', '{} expects a {} file'.format(flag, expected.__name__))
    return obj


def _lift(command):
    """(group, C) from --input lift.json, or the Heisenberg lift g -> g^alpha from --p/--alpha."""
    args = command.args
    if args.input is not None:
        lift = _load(args.input, GroupMap, '--input')
        return lift.source, lift
    if args.alpha is None:
        raise UsageError('--input or --alpha is required')
    instance = build_alpha_family(args.p, args.alpha)
    return instance.group, instance.representative


def _cocycle(command):
    args = command.args
    if args.input is not None:
        return _load(args.input, TwoCocycle, '--input')
    if args.alpha is None:
        raise UsageError('--input or --alpha is required')
    return build_alpha_family(args.p, args.alpha).kappa


def _verdict_exit(command, verdict):
    report = command.report()
    report.add_verdict(command.verb, verdict, VerdictStatus.HOLDS)
    return (EXIT_OK if verdict else EXIT_NO), emit_report(report, command.format)


def _json(params):
    return (canonical_json(params) + '\n').encode('utf-8')


def run_group(command):
    args = command.args
    if args.input is not None:
        return EXIT_OK, dump_object(_load(args.input, FiniteGroup, '--input'))
    if args.family is None:
        raise UsageError('--input or --family is required')
    if args.family == 'abelian':
        group = make_abelian(args.factors or [args.n])
    elif args.family == 'heisenberg':
        group = make_heisenberg(args.p)
    elif args.family == 'dihedral':
        group = make_dihedral(args.n)
    else:
        group = make_symmetric(args.n)
    return EXIT_OK, dump_object(group)


def run_verify_gamma(command):
    gamma = _load(command.args.input, GammaFunction, '--input')
    try:
        verdict = verify_gamma(gamma)
    except NotAutomorphismError as error:
        report = command.report()
        report.add(command.verb, VerdictStatus.FAILS, VerdictStatus.HOLDS, [error.element])
        return EXIT_NO, emit_report(report, command.format)
    return _verdict_exit(command, verdict)


def run_verify_rb(command):
    operator = _load(command.args.input, RotaBaxterOperator, '--input')
    return _verdict_exit(command, verify_rb(operator.group, operator))


def run_verify_brace(command):
    dot = _load(command.args.dot, FiniteGroup, '--dot')
    circle = _load(command.args.circle, FiniteGroup, '--circle')
    verdict = verify_skew_brace(dot, circle)
    params = {'kind': 'brace_report', 'skew_brace': verdict.ok,
              'witness': None if verdict.witness is None else list(verdict.witness)}
    return (EXIT_OK if verdict else EXIT_NO), _json(params)


def run_extract_cocycle(command):
    group, lift = _lift(command)
    gamma = gamma_from_inner_rep(group, lift)
    verdict = verify_gamma(gamma)
    if not verdict:
        return _verdict_exit(command, verdict)
    return EXIT_OK, dump_object(extract_kappa(group, gamma, lift))


def _certificate(certificate):
    params = dict(certificate.to_params(), kind='certificate', trivial=certificate.solvable)
    params.pop('status')
    return params


def run_solve_coboundary(command):
    certificate = solve_coboundary(_cocycle(command), command.args.method)
    return (EXIT_OK if certificate.solvable else EXIT_NO), _json(_certificate(certificate))


def run_build_extension(command):
    return EXIT_OK, dump_object(build_central_extension(_cocycle(command)).total)


def run_find_complement(command):
    extension = build_central_extension(_cocycle(command))
    result = find_complement(extension, command.args.generators, command.config.complement_cap)
    params = dict(result.to_params(), kind='complement')
    return (EXIT_OK if result.split else EXIT_NO), _json(params)


def run_obstruction(command):
    obstruction = derived_intersection_obstruction(build_central_extension(_cocycle(command)))
    params = dict(obstruction.to_params(), kind='obstruction')
    return (EXIT_NO if obstruction.found else EXIT_OK), _json(params)


def run_reconstruct_rb(command):
    group, lift = _lift(command)
    gamma = gamma_from_inner_rep(group, lift)
    verdict = verify_gamma(gamma)
    if not verdict:
        return _verdict_exit(command, verdict)
    decision = decide_rota_baxter(group, gamma, lift, method=command.args.method,
                                  complement_cap=command.config.complement_cap)
    if decision.operator is None:
        logger.info('Cohomology class is nontrivial, no Rota-Baxter operator exists')
        return EXIT_NO, _json(_certificate(decision.certificate))
    return EXIT_OK, dump_object(decision.operator)


def run_enumerate_rb(command):
    group = _load(command.args.input, FiniteGroup, '--input')
    operators = enumerate_rb(group, command.config.enumeration_cap)
    params = {
        'kind': 'rota_baxter_list',
        'count': len(operators),
        'operators': [object_to_params(operator)['images'] for operator in operators],
    }
    return EXIT_OK, _json(params)


def run_reproduce(command):
    args = command.args
    report = reproduce(command.report(), args.target, p=args.p, config=command.config)
    return (EXIT_OK if report.passed else EXIT_NO), emit_report(report, command.format)


VERBS = {
    'group': run_group,
    'verify-gamma': run_verify_gamma,
    'verify-rb': run_verify_rb,
    'verify-brace': run_verify_brace,
    'extract-cocycle': run_extract_cocycle,
    'solve-coboundary': run_solve_coboundary,
    'build-extension': run_build_extension,
    'find-complement': run_find_complement,
    'obstruction': run_obstruction,
    'reconstruct-rb': run_reconstruct_rb,
    'enumerate-rb': run_enumerate_rb,
    'reproduce': run_reproduce,
}


def _generators(value):
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated element indices, got {!r}'.format(value))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(parser):
    parser.add_argument('--output', '-o', help='write the result here instead of stdout')
    parser.add_argument('--format', choices=REPORT_FORMATS, default='json')
    parser.add_argument('--verbose', '-v', action='store_true')


def _source(parser, method=False):
    parser.add_argument('--input', '-i')
    parser.add_argument('--p', type=int, default=3, help='prime of the Heisenberg family')
    parser.add_argument('--alpha', type=int, help='use the lift g -> g^alpha on the Heisenberg group')
    if method:
        parser.add_argument('--method', choices=SOLVE_METHODS, default='spanning_tree')


def build_parser():
    parser = _Parser(prog='braceforge', description='Skew braces, gamma functions and Rota-Baxter operators.')
    verbs = parser.add_subparsers(dest='verb', required=True, parser_class=_Parser)

    group = verbs.add_parser('group', help='build or validate a group table')
    group.add_argument('--input', '-i')
    group.add_argument('--family', choices=GROUP_FAMILIES)
    group.add_argument('--p', type=int, default=3)
    group.add_argument('--n', type=int, default=3)
    group.add_argument('--factors', type=_generators)
    _common(group)

    for verb in ('verify-gamma', 'verify-rb', 'enumerate-rb'):
        sub = verbs.add_parser(verb)
        sub.add_argument('--input', '-i', required=True)
        if verb == 'enumerate-rb':
            sub.add_argument('--enumeration-cap', type=int, default=DEFAULT_ENUMERATION_CAP)
        _common(sub)

    brace = verbs.add_parser('verify-brace')
    brace.add_argument('--dot', required=True)
    brace.add_argument('--circle', required=True)
    _common(brace)

    for verb in ('extract-cocycle', 'reconstruct-rb', 'solve-coboundary', 'build-extension', 'find-complement',
                 'obstruction'):
        sub = verbs.add_parser(verb)
        _source(sub, method=verb in ('reconstruct-rb', 'solve-coboundary'))
        if verb == 'find-complement':
            sub.add_argument('--generators', type=_generators)
        if verb in ('find-complement', 'reconstruct-rb'):
            sub.add_argument('--complement-cap', type=int, default=DEFAULT_COMPLEMENT_CAP)
        _common(sub)

    repro = verbs.add_parser('reproduce', help='check every claim of the worked examples')
    repro.add_argument('target', choices=TARGETS)
    repro.add_argument('--p', type=int, default=3)
    repro.add_argument('--seed', type=int, default=DEFAULT_SEED)
    repro.add_argument('--recodings', type=int, default=DEFAULT_RECODINGS)
    repro.add_argument('--timing', action='store_true')
    _common(repro)
    return parser


def _write(output, payload):
    if output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        with open(output, 'wb') as handle:
            handle.write(payload)


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        print('braceforge: error: {}'.format(error), file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        command = Command(args.verb, args)
        logger.debug('%s', command)
        code, payload = command.execute()
        _write(command.output, payload)
        return code
    except SchemaError as error:
        print('braceforge: invalid input: {}'.format(error), file=sys.stderr)
    except (UsageError, BraceforgeError, OSError) as error:
        print('braceforge: error: {}'.format(error), file=sys.stderr)
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()

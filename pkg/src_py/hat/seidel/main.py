"""Command line interface

Subcommands ``charpoly``, ``verify``, ``realize``, ``census`` and
``convert``. Results are written to standard output (text or JSON), log
messages and errors to standard error.

Exit codes: 0 success, 1 failure or invalid input, 2 unknown realizability.

"""

from pathlib import Path
import argparse
import contextlib
import dataclasses
import json
import logging.config
import sys
import typing

from hat.seidel import algebra
from hat.seidel import census
from hat.seidel import common
from hat.seidel import expr
from hat.seidel import graph
from hat.seidel import realizer
from hat.seidel import rng
from hat.seidel import seidel
from hat.seidel import verify


mlog: logging.Logger = logging.getLogger('hat.seidel.main')

exit_unknown: int = 2


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with code 1 on invalid arguments"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f'{self.prog}: error: {message}\n')


@dataclasses.dataclass(frozen=True)
class CliConfig:
    command: str
    args: argparse.Namespace
    seed: int
    output_mode: common.OutputMode
    conf: dict[str, typing.Any]


def create_argument_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='hat-seidel')
    parser.add_argument(
        '--json', action='store_true',
        help="JSON output")
    parser.add_argument(
        '--seed', metavar='S', type=_nat, default=None,
        help="seed of randomized sweeps (default from configuration, 0)")
    parser.add_argument(
        '--conf', metavar='PATH', type=Path, default=None,
        help="TOML configuration file")
    parser.add_argument(
        '--log-level', default='warning',
        choices=['critical', 'error', 'warning', 'info', 'debug'],
        help="log level (ignored if configuration contains log table)")
    subparsers = parser.add_subparsers(dest='command', required=True,
                                       parser_class=ArgumentParser)

    charpoly = subparsers.add_parser(
        'charpoly', help="Seidel characteristic polynomial over GF(3)")
    charpoly.add_argument(
        'input',
        help="graph expression (e.g. '3*K2 + ~K3') or graph6 string")
    charpoly.add_argument(
        '--adjacency', action='store_true',
        help="adjacency instead of Seidel matrix")

    verify_parser = subparsers.add_parser(
        'verify', help="run identity verifier sweep")
    verify_parser.add_argument(
        'which',
        choices=[*verify.sweeps, *verify.sweep_aliases, 'necessity'])
    verify_parser.add_argument(
        '--random', metavar='N', type=_nat, default=None,
        help="number of random cases")
    verify_parser.add_argument(
        '--max-vertices', metavar='V', type=_nat, default=None,
        help="maximum order of random graphs")
    verify_parser.add_argument(
        '--exhaustive-vertices', metavar='V', type=_nat, default=None,
        help="maximum order of exhaustively checked graphs")
    verify_parser.add_argument(
        '--seed', metavar='S', type=_nat, default=argparse.SUPPRESS,
        help="seed of randomized sweeps")

    realize = subparsers.add_parser(
        'realize', help="witness graph for x^r (x-1)^s (x+1)^t")
    for name in ['r', 's', 't']:
        realize.add_argument(name, type=_nat)
    realize.add_argument(
        '--extended', action='store_true',
        help="search line graph families when r > s + t")
    realize.add_argument(
        '--nmax', metavar='N', type=_nat, default=None,
        help="maximum line graph order of extended search")

    census_parser = subparsers.add_parser(
        'census', help="exhaustive census of labeled graphs")
    census_parser.add_argument(
        '--min-n', metavar='N', type=_nat, default=1)
    census_parser.add_argument(
        '--max-n', metavar='N', type=_nat, required=True)
    census_parser.add_argument(
        '--jobs', metavar='J', type=_nat, default=1,
        help="number of worker processes")
    census_parser.add_argument(
        '--out', metavar='PATH', type=Path, default=None,
        help="JSONL output (default standard output)")
    census_parser.add_argument(
        '--allow-large', action='store_true',
        help="raise order ceiling to census.large_max_n")
    census_parser.add_argument(
        '--audit', metavar='K', type=_nat, default=0,
        help="audit K random records after the census")

    convert = subparsers.add_parser(
        'convert', help="convert between expressions and graph6")
    group = convert.add_mutually_exclusive_group(required=True)
    group.add_argument(
        '--to-g6', metavar='EXPR',
        help="graph6 of evaluated expression")
    group.add_argument(
        '--to-expr', metavar='G6',
        help="union/complement expression of graph6 graph")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = create_argument_parser()
    args = parser.parse_args(argv)

    try:
        conf = common.get_conf(args.conf)
        _init_logging(conf, args.log_level)

        cfg = CliConfig(
            command=args.command,
            args=args,
            seed=args.seed if args.seed is not None else conf['seed'],
            output_mode=(common.OutputMode.JSON if args.json
                         else common.OutputMode.TEXT),
            conf=conf)

        return _commands[cfg.command](cfg)

    except (common.ParseError,
            common.CapacityError,
            common.ConfError,
            ValueError,
            OSError) as e:
        mlog.debug('command failed', exc_info=e)
        print(f'error: {e}', file=sys.stderr)
        return 1


def parse_graph_input(text: str) -> tuple[graph.Graph, str]:
    """Graph from expression or graph6 text and its canonical name

    Texts starting with an expression token are parsed as expression
    first and as graph6 if that fails.

    """
    text = text.strip()
    if text[:1] in 'KEL~(0123456789' and not text.startswith(
            graph.graph6_header):
        try:
            e = expr.parse_expr(text)
            return expr.eval_expr(e), expr.format_expr(e)

        except common.ParseError as expr_error:
            try:
                g = graph.parse_graph6(text)

            except common.ParseError:
                raise expr_error

            return g, graph.emit_graph6(g)

    g = graph.parse_graph6(text)
    return g, graph.emit_graph6(g)


def cmd_charpoly(cfg: CliConfig) -> int:
    g, name = parse_graph_input(cfg.args.input)
    if cfg.args.adjacency:
        p = seidel.adjacency_charpoly(g)
    else:
        p = seidel.seidel_charpoly(g)

    r, s, t, rem = algebra.split_linear(p)
    factors, cofactor = algebra.quadratic_factors(rem)

    if cfg.output_mode is common.OutputMode.JSON:
        _print_json({
            'input': name,
            'n': g.n,
            'matrix': 'adjacency' if cfg.args.adjacency else 'seidel',
            'poly': algebra.format_poly(p),
            'coeffs': list(p.coeffs),
            'r': r,
            's': s,
            't': t,
            'rem': algebra.format_coeffs(rem),
            'quadratic_factors': [
                {'factor': algebra.quadratic_names[q], 'power': k}
                for q, k in factors]})
        return 0

    print(algebra.format_poly(p))
    print(algebra.format_coeffs(p))
    if factors:
        display = [algebra.quadratic_names[q] + (f'^{k}' if k > 1 else '')
                   for q, k in factors]
        if cofactor != algebra.ONE:
            display.append(algebra.format_coeffs(cofactor))
        print('remainder: ' + ' * '.join(f'({i})' for i in display))

    return 0


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.args.which == 'necessity':
        return _print_necessity(cfg)

    defaults = cfg.conf['verify']
    params = verify.SweepParams(
        random=_or(cfg.args.random, defaults['random']),
        max_vertices=_or(cfg.args.max_vertices, defaults['max_vertices']),
        exhaustive_vertices=_or(cfg.args.exhaustive_vertices,
                                defaults['exhaustive_vertices']))

    sweep = verify.get_sweep(cfg.args.which)
    reports = sweep(rng.SplitMix64(cfg.seed), params)
    failed = [i for i in reports if not i.passed]

    if cfg.output_mode is common.OutputMode.JSON:
        _print_json({'sweep': cfg.args.which,
                     'seed': cfg.seed,
                     'total': len(reports),
                     'failed': len(failed),
                     'pass': not failed,
                     'reports': [i.to_json() for i in reports]})

    else:
        for report in failed:
            print(f"FAIL {report.identity} [{', '.join(report.inputs)}]: "
                  f"{report.lhs} != {report.rhs}")
        print(f'{cfg.args.which}: {len(reports) - len(failed)}/'
              f'{len(reports)} passed')

    return 1 if failed else 0


def cmd_realize(cfg: CliConfig) -> int:
    target = seidel.ExponentTriple(cfg.args.r, cfg.args.s, cfg.args.t)
    n_max = _or(cfg.args.nmax, cfg.conf['realize']['n_max'])
    outcome = realizer.solve_basic(target,
                                   extended=cfg.args.extended,
                                   n_max=n_max)

    if cfg.output_mode is common.OutputMode.JSON:
        _print_json(outcome.to_json())

    elif outcome.status is realizer.Status.WITNESS:
        w = outcome.witness
        params = ' '.join(f'{k}={v}' for k, v in zip('abcdef', w.params()))
        print(f'witness: {w}')
        print(f'params: {params} extension={w.extension.value} '
              f'line_n={w.line_n}')
        print(f'vertices: {w.vertex_count}')
        print(f'verified: {str(outcome.verified).lower()}')

    else:
        print(f'{outcome.status.value}: {outcome.reason}')

    return exit_unknown if outcome.status is realizer.Status.UNKNOWN else 0


def cmd_census(cfg: CliConfig) -> int:
    args = cfg.args
    conf = cfg.conf['census']
    max_n = conf['large_max_n'] if args.allow_large else conf['max_n']
    census.check_capacity(args.max_n, max_n)
    if args.max_n > conf['max_n']:
        mlog.warning('census of order %s may take a long time', args.max_n)

    with contextlib.ExitStack() as stack:
        if args.out is None:
            sink = sys.stdout
        else:
            sink = stack.enter_context(args.out.open('w', encoding='utf-8'))

        summary = census.census_run(args.min_n, args.max_n,
                                    workers=max(args.jobs, 1),
                                    out=sink,
                                    max_n=max_n,
                                    batch_size=conf['batch_size'])

    audited = census.census_audit(summary, args.audit,
                                  generator=rng.SplitMix64(cfg.seed),
                                  max_n=max_n)

    if args.out is not None:
        if cfg.output_mode is common.OutputMode.JSON:
            _print_json({'n_lo': summary.n_lo,
                         'n_hi': summary.n_hi,
                         'total': summary.total,
                         'records': len(summary.records),
                         'violations': list(summary.violations),
                         'audit': audited if args.audit else None})

        else:
            print(f'orders {summary.n_lo}..{summary.n_hi}: '
                  f'{summary.total} graphs, {len(summary.records)} records, '
                  f'{len(summary.violations)} violations')
            if args.audit:
                print(f"audit: {'pass' if audited else 'fail'}")

    elif args.audit and not audited:
        mlog.error('census audit failed')

    return 0 if audited and not summary.violations else 1


def cmd_convert(cfg: CliConfig) -> int:
    if cfg.args.to_g6 is not None:
        e = expr.parse_expr(cfg.args.to_g6)
        result = graph.emit_graph6(expr.eval_expr(e))
        source = expr.format_expr(e)

    else:
        g = graph.parse_graph6(cfg.args.to_expr.strip())
        result = expr.format_expr(expr.graph_to_expr(g))
        source = graph.emit_graph6(g)

    if cfg.output_mode is common.OutputMode.JSON:
        _print_json({'input': source, 'output': result})

    else:
        print(result)

    return 0


def _print_necessity(cfg):
    rows = seidel.necessity_table()

    if cfg.output_mode is common.OutputMode.JSON:
        _print_json([{'residues': list(row.residues),
                      'trace_zero': row.trace_zero,
                      'split_cn': int(row.split_cn),
                      'expected_cn': int(row.expected_cn),
                      'admissible': row.admissible}
                     for row in rows])

    else:
        print('r s t  trace  c_n  expected  admissible')
        for row in rows:
            r, s, t = row.residues
            print(f"{r} {s} {t}  {'zero' if row.trace_zero else '-':5}  "
                  f"{int(row.split_cn):3}  {int(row.expected_cn):8}  "
                  f"{'yes' if row.admissible else 'no'}")

    return 0


def _init_logging(conf, log_level):
    if 'log' in conf:
        logging.config.dictConfig(conf['log'])

    else:
        logging.basicConfig(level=log_level.upper(), stream=sys.stderr)


def _print_json(data):
    print(json.dumps(data))


def _or(value, default):
    return default if value is None else value


def _nat(value):
    try:
        result = int(value)

    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer {value!r}')

    if result < 0:
        raise argparse.ArgumentTypeError(f'negative value {value!r}')

    return result


_commands: dict[str, typing.Callable[[CliConfig], int]] = {
    'charpoly': cmd_charpoly,
    'verify': cmd_verify,
    'realize': cmd_realize,
    'census': cmd_census,
    'convert': cmd_convert}


if __name__ == '__main__':
    sys.argv[0] = 'hat-seidel'
    sys.exit(main())

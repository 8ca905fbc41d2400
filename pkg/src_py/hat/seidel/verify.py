"""Verifier sweeps

Each sweep runs one family of identities over every graph of order up to
``exhaustive_vertices`` followed by ``random`` seeded random cases of
order up to ``max_vertices``.

"""

from collections.abc import Callable, Iterable, Iterator
import itertools
import logging
import typing

from hat.seidel import algebra
from hat.seidel import census
from hat.seidel import expr
from hat.seidel import graph
from hat.seidel import rng
from hat.seidel import seidel


mlog: logging.Logger = logging.getLogger(__name__)


class SweepParams(typing.NamedTuple):
    random: int = 100
    max_vertices: int = 7
    exhaustive_vertices: int = 4


Sweep: typing.TypeAlias = Callable[[rng.SplitMix64, SweepParams],
                                   list[seidel.SeidelReport]]


def exhaustive_graphs(max_n: int, min_n: int = 0) -> Iterator[graph.Graph]:
    for n in range(min_n, max_n + 1):
        yield from census.enumerate_masks(n)


def random_graphs(generator: rng.SplitMix64,
                  count: int,
                  max_n: int,
                  min_n: int = 0
                  ) -> Iterator[graph.Graph]:
    for _ in range(count):
        yield generator.random_graph(generator.between(min_n, max_n))


def sweep_triple(generator: rng.SplitMix64,
                 params: SweepParams
                 ) -> list[seidel.SeidelReport]:
    return _collect('triple', (
        report
        for g in _cases(generator, params)
        for report in seidel.check_triple_union(g)))


def sweep_unions(generator: rng.SplitMix64,
                 params: SweepParams
                 ) -> list[seidel.SeidelReport]:
    small = list(exhaustive_graphs(min(params.exhaustive_vertices, 3)))
    exhaustive = itertools.product(small, small)
    sampled = (tuple(random_graphs(generator, 2, params.max_vertices))
               for _ in range(params.random))

    return _collect('unions', (
        report
        for x, y in itertools.chain(exhaustive, sampled)
        for report in seidel.check_union_identities(x, y)))


def sweep_matching(generator: rng.SplitMix64,
                   params: SweepParams,
                   a_max: int = 8,
                   b_max: int = 8
                   ) -> list[seidel.SeidelReport]:
    return _collect('matching', seidel.check_matching(a_max, b_max))


def sweep_cn(generator: rng.SplitMix64,
             params: SweepParams
             ) -> list[seidel.SeidelReport]:
    """Leading coefficients ``x^n``, ``x^(n-1)`` and ``x^(n-2)``"""
    return _collect('cn', (check_leading(g)
                           for g in _cases(generator, params, min_n=2)))


def check_leading(g: graph.Graph) -> seidel.SeidelReport:
    n = g.n
    p = seidel.seidel_charpoly(g)
    leading = algebra.Poly(p.coeffs[n - 2:]) if p.degree == n else p
    expected = algebra.Poly([seidel.expected_cn(n), 0, 1])
    return seidel.SeidelReport(identity='cn',
                               inputs=(graph.emit_graph6(g),),
                               lhs=str(leading),
                               rhs=str(expected),
                               passed=leading == expected)


def sweep_regular(generator: rng.SplitMix64,
                  params: SweepParams,
                  max_circulant: int = 10
                  ) -> list[seidel.SeidelReport]:
    complete = (expr.Complete(n) for n in range(2, 9))
    exhaustive = (g for g in exhaustive_graphs(params.exhaustive_vertices)
                  if graph.regular_degree(g) is not None)
    circulants = (generator.circulant(generator.between(2, max_circulant))
                  for _ in range(params.random))

    return _collect('regular', (
        seidel.check_regular_identity(i)
        for i in itertools.chain(complete, exhaustive, circulants)))


def sweep_line(generator: rng.SplitMix64,
               params: SweepParams
               ) -> list[seidel.SeidelReport]:
    complete = (expr.Complete(n)
                for n in range(2, max(params.max_vertices, 2) + 1))
    circulants = (generator.circulant(
                      generator.between(2, max(params.max_vertices, 2)))
                  for _ in range(params.random))

    return _collect('line', (
        report
        for i in itertools.chain(complete, circulants)
        for report in seidel.check_line_graph_identity(i)))


def sweep_properties(generator: rng.SplitMix64,
                     params: SweepParams
                     ) -> list[seidel.SeidelReport]:
    """Switching, relabeling and complement invariance

    Graphs of the exhaustive range are switched by every vertex subset,
    random graphs by one random subset.

    """

    def reports():
        for g in exhaustive_graphs(params.exhaustive_vertices):
            p = seidel.seidel_charpoly(g)
            for size in range(g.n + 1):
                for subset in itertools.combinations(range(g.n), size):
                    yield _switching_report(g, p, graph.switch(g, subset))
            yield _permutation_report(g, p, generator)
            yield _complement_report(g, p)

        for g in random_graphs(generator, params.random,
                               params.max_vertices):
            p = seidel.seidel_charpoly(g)
            switched = graph.switch(g, generator.subset(g.n))
            yield _switching_report(g, p, switched)
            yield _permutation_report(g, p, generator)
            yield _complement_report(g, p)

    return _collect('properties', reports())


sweeps: dict[str, Sweep] = {'triple': sweep_triple,
                            'unions': sweep_unions,
                            'matching': sweep_matching,
                            'cn': sweep_cn,
                            'regular': sweep_regular,
                            'line': sweep_line,
                            'properties': sweep_properties}

sweep_aliases: dict[str, str] = {'thm1': 'triple',
                                 'prop-d': 'matching'}
"""Alternative command line names of sweeps"""


def get_sweep(name: str) -> Sweep:
    return sweeps[sweep_aliases.get(name, name)]


def _cases(generator, params, min_n=0):
    yield from exhaustive_graphs(params.exhaustive_vertices, min_n)
    yield from random_graphs(generator, params.random,
                             max(params.max_vertices, min_n), min_n)


def _switching_report(g, p, switched):
    return _compare('switching', [g, switched],
                    seidel.seidel_charpoly(switched), p)


def _permutation_report(g, p, generator):
    permuted = graph.permute(g, generator.permutation(g.n))
    return _compare('permutation', [g, permuted],
                    seidel.seidel_charpoly(permuted), p)


def _complement_report(g, p):
    co = graph.complement(g)
    rhs = p.reflect()
    if g.n % 2:
        rhs = -rhs

    return _compare('complement', [g, co], seidel.seidel_charpoly(co), rhs)


def _compare(identity, graphs, lhs, rhs):
    return seidel.SeidelReport(
        identity=identity,
        inputs=tuple(graph.emit_graph6(g) for g in graphs),
        lhs=str(lhs),
        rhs=str(rhs),
        passed=lhs == rhs)


def _collect(name: str,
             reports: Iterable[seidel.SeidelReport]
             ) -> list[seidel.SeidelReport]:
    reports = list(reports)
    failed = sum(1 for i in reports if not i.passed)
    mlog.info('sweep %s: %s reports, %s failed', name, len(reports), failed)
    if failed:
        mlog.warning('sweep %s: %s identities failed', name, failed)

    return reports

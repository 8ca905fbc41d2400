"""Exhaustive census of Seidel polynomials of labeled graphs

All ``2^(n(n-1)/2)`` labeled graphs of order `n` are enumerated by edge
bitset. Seidel characteristic polynomials are computed in vectorized
batches and aggregated by root multiplicities ``(r, s, t)`` and remainder.
Fully split polynomials outside `seidel.necessity_class` are collected as
violations.

"""

from collections.abc import Iterable, Iterator
import collections
import dataclasses
import json
import logging
import multiprocessing
import typing

import numpy as np

from hat.seidel import algebra
from hat.seidel import common
from hat.seidel import graph
from hat.seidel import rng
from hat.seidel import seidel


mlog: logging.Logger = logging.getLogger(__name__)

RecordKey: typing.TypeAlias = tuple[int, int, int, tuple[int, ...]]
"""Root multiplicities ``(r, s, t)`` and ascending remainder coefficients"""


class CensusRecord(typing.NamedTuple):
    n: int
    r: int
    s: int
    t: int
    rem: algebra.Poly
    count: int

    def poly(self) -> algebra.Poly:
        return algebra.split_poly(self.r, self.s, self.t) * self.rem

    def to_json(self) -> dict[str, typing.Any]:
        return {'n': self.n,
                'r': self.r,
                's': self.s,
                't': self.t,
                'rem': algebra.format_coeffs(self.rem),
                'count': self.count}


@dataclasses.dataclass(frozen=True)
class CensusSummary:
    n_lo: int
    n_hi: int
    total: int
    records: tuple[CensusRecord, ...]
    violations: tuple[str, ...]


class ChunkResult(typing.NamedTuple):
    n: int
    counts: dict[RecordKey, int]
    violations: list[int]


def check_capacity(n: int, max_n: int):
    if n > max_n:
        raise common.CapacityError(
            f'order {n} exceeds maximum census order {max_n}')


def enumerate_masks(n: int, max_n: int = 7) -> Iterator[graph.Graph]:
    """Every labeled graph of order `n` in increasing bitset order"""
    check_capacity(n, max_n)
    for mask in range(1 << graph.pair_count(n)):
        yield graph.Graph(n, mask)


def seidel_batch(n: int, masks: np.ndarray) -> np.ndarray:
    """GF(3) Seidel matrices ``(len(masks), n, n)`` of bitset masks"""
    masks = np.asarray(masks, dtype=np.int64)
    rows, cols = np.triu_indices(n, 1)
    bits = (masks[:, np.newaxis] >> np.arange(len(rows))) & 1

    result = np.zeros((len(masks), n, n), dtype=np.int64)
    result[:, rows, cols] = 1 + bits
    result[:, cols, rows] = 1 + bits
    return result % 3


def census_chunk(n: int,
                 lo: int,
                 hi: int,
                 batch_size: int = 16384
                 ) -> ChunkResult:
    """Aggregate Seidel polynomials of masks ``lo, ..., hi - 1``"""
    counts = collections.Counter()
    violations = []

    for start in range(lo, hi, batch_size):
        masks = np.arange(start, min(hi, start + batch_size), dtype=np.int64)
        polys = algebra.charpoly_gf3_batch(seidel_batch(n, masks))
        unique, inverse, multiplicity = np.unique(polys,
                                                  axis=0,
                                                  return_inverse=True,
                                                  return_counts=True)
        inverse = inverse.reshape(-1)

        for k, (row, count) in enumerate(zip(unique, multiplicity)):
            r, s, t, rem = algebra.split_linear(algebra.Poly(row.tolist()))
            counts[r, s, t, rem.coeffs] += int(count)

            split = rem == algebra.ONE
            if split and not seidel.necessity_class(
                    seidel.ExponentTriple(r, s, t)):
                violations.extend(int(i) for i in masks[inverse == k])

    return ChunkResult(n=n, counts=dict(counts), violations=violations)


def chunk_ranges(n: int, workers: int) -> list[tuple[int, int]]:
    """Contiguous non-empty mask ranges, at most `workers` of them"""
    size = 1 << graph.pair_count(n)
    parts = max(1, min(workers, size))
    bounds = [size * i // parts for i in range(parts + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]


def census_run(n_lo: int,
               n_hi: int,
               workers: int = 1,
               out: typing.TextIO | None = None,
               max_n: int = 7,
               batch_size: int = 16384
               ) -> CensusSummary:
    """Census of orders ``n_lo..n_hi``

    Work is split into contiguous mask ranges, one per worker and order.
    With more than one worker, ranges are processed by a
    `multiprocessing.Pool`. Merged summary is written to `out` as JSONL.

    """
    if n_lo < 0 or n_lo > n_hi:
        raise ValueError('invalid order range')

    check_capacity(n_hi, max_n)

    tasks = [(n, lo, hi, batch_size)
             for n in range(n_lo, n_hi + 1)
             for lo, hi in chunk_ranges(n, workers)]
    mlog.debug('census of orders %s..%s in %s chunks', n_lo, n_hi,
               len(tasks))

    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.starmap(census_chunk, tasks)

    else:
        results = [census_chunk(*task) for task in tasks]

    summary = merge(n_lo, n_hi, results)
    mlog.info('census of orders %s..%s: %s graphs, %s records, '
              '%s violations', n_lo, n_hi, summary.total,
              len(summary.records), len(summary.violations))

    if out is not None:
        write_jsonl(summary, out)

    return summary


def merge(n_lo: int,
          n_hi: int,
          results: Iterable[ChunkResult]
          ) -> CensusSummary:
    counts = collections.Counter()
    violations = []
    for result in results:
        for key, count in result.counts.items():
            counts[(result.n, *key)] += count

        violations.extend((result.n, mask) for mask in result.violations)

    records = tuple(
        CensusRecord(n=n, r=r, s=s, t=t, rem=algebra.Poly(rem), count=count)
        for (n, r, s, t, rem), count in sorted(counts.items()))

    return CensusSummary(
        n_lo=n_lo,
        n_hi=n_hi,
        total=sum(counts.values()),
        records=records,
        violations=tuple(sorted(graph.emit_graph6(graph.Graph(n, mask))
                                for n, mask in violations)))


def write_jsonl(summary: CensusSummary, sink: typing.TextIO):
    for record in summary.records:
        sink.write(json.dumps(record.to_json()) + '\n')

    footer = {'total': summary.total,
              'violations': list(summary.violations)}
    sink.write(json.dumps(footer) + '\n')


def read_jsonl(source: typing.TextIO) -> CensusSummary:
    records = []
    footer = None
    for line in source:
        if not line.strip():
            continue

        if footer is not None:
            raise ValueError('data after census footer')

        data = json.loads(line)
        if 'total' in data:
            footer = data
            continue

        records.append(CensusRecord(n=data['n'],
                                    r=data['r'],
                                    s=data['s'],
                                    t=data['t'],
                                    rem=_parse_rem(data['rem']),
                                    count=data['count']))

    if footer is None:
        raise ValueError('missing census footer')

    orders = [i.n for i in records]
    return CensusSummary(n_lo=min(orders, default=0),
                         n_hi=max(orders, default=0),
                         total=footer['total'],
                         records=tuple(records),
                         violations=tuple(footer['violations']))


def census_audit(summary: CensusSummary,
                 samples: int,
                 generator: rng.SplitMix64 | None = None,
                 max_n: int = 7
                 ) -> bool:
    """Spot check of a census summary

    Up to `samples` records are chosen at random and their counts are
    re-derived by recomputing every graph of their order. For the same
    number of random graphs, switching by a random vertex subset has to
    preserve the Seidel polynomial.

    """
    if not samples:
        return True

    generator = generator or rng.SplitMix64()
    chosen = generator.sample(summary.records, samples)

    recounts = {}
    for record in chosen:
        check_capacity(record.n, max_n)
        if record.n not in recounts:
            result = census_chunk(record.n, 0, 1 << graph.pair_count(record.n))
            recounts[record.n] = result.counts

        key = record.r, record.s, record.t, record.rem.coeffs
        if recounts[record.n].get(key) != record.count:
            mlog.warning('audit: record %s does not match recount',
                         record.to_json())
            return False

    orders = sorted({i.n for i in summary.records})
    for _ in range(samples if orders else 0):
        g = generator.random_graph(orders[generator.below(len(orders))])
        switched = graph.switch(g, generator.subset(g.n))
        if seidel.seidel_charpoly(g) != seidel.seidel_charpoly(switched):
            mlog.warning('audit: switching changed polynomial of %s',
                         graph.emit_graph6(g))
            return False

    return True


def _parse_rem(text):
    poly = algebra.parse_poly(text)
    if algebra.format_coeffs(poly) != text:
        raise ValueError(f'invalid remainder {text}')

    return poly

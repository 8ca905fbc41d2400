import dataclasses
import io

import numpy as np
import pytest

from hat.seidel import algebra
from hat.seidel import census
from hat.seidel import common
from hat.seidel import graph
from hat.seidel import rng
from hat.seidel import seidel


def record_map(summary):
    return {(i.n, i.r, i.s, i.t, i.rem.coeffs): i.count
            for i in summary.records}


@pytest.mark.parametrize('n, expected', [
    (0, {(0, 0, 0, 0, (1,)): 1}),
    (1, {(1, 1, 0, 0, (1,)): 1}),
    (2, {(2, 0, 1, 1, (1,)): 2}),
    (3, {(3, 0, 3, 0, (1,)): 4,
         (3, 0, 0, 3, (1,)): 4}),
])
def test_small_orders(n, expected):
    summary = census.census_run(n, n)
    assert record_map(summary) == expected
    assert summary.total == 2 ** graph.pair_count(n)
    assert summary.violations == ()


def test_conservation():
    summary = census.census_run(1, 6)
    assert summary.total == sum(2 ** graph.pair_count(n)
                                for n in range(1, 7))
    assert summary.violations == ()

    for n in range(1, 7):
        assert (sum(i.count for i in summary.records if i.n == n) ==
                2 ** graph.pair_count(n))


def test_records_match_direct():
    summary = census.census_run(4, 4)
    counts = {}
    for g in census.enumerate_masks(4):
        r, s, t, rem = algebra.split_linear(seidel.seidel_charpoly(g))
        key = 4, r, s, t, rem.coeffs
        counts[key] = counts.get(key, 0) + 1

    assert record_map(summary) == counts

    for record in summary.records:
        assert record.poly().degree == 4


def test_split_records_admissible():
    summary = census.census_run(1, 6)
    for record in summary.records:
        if record.rem == algebra.ONE:
            assert seidel.necessity_class(
                seidel.ExponentTriple(record.r, record.s, record.t))


def test_record_leading_coefficients():
    summary = census.census_run(1, 6)
    for record in summary.records:
        p = record.poly()
        assert p.degree == record.n
        assert p.coeff(record.n - 1) == 0
        if record.n >= 2:
            assert p.coeff(record.n - 2) == seidel.expected_cn(record.n)


def test_singleton_switching():
    summary = census.census_run(1, 6)
    for n in range(1, 7):
        masks = np.arange(2 ** graph.pair_count(n))
        polys = algebra.charpoly_gf3_batch(census.seidel_batch(n, masks))
        unique, counts = np.unique(polys, axis=0, return_counts=True)
        assert len(unique) == sum(1 for i in summary.records if i.n == n)

        for vertex in range(n):
            cut = graph.switch(graph.empty(n), [vertex]).mask
            switched = algebra.charpoly_gf3_batch(
                census.seidel_batch(n, masks ^ cut))
            assert (switched == polys).all()

            switched_unique, switched_counts = np.unique(
                switched, axis=0, return_counts=True)
            assert (switched_unique == unique).all()
            assert (switched_counts == counts).all()


def test_batch_size_independent():
    first = census.census_run(5, 5, batch_size=7)
    second = census.census_run(5, 5)
    assert first == second


def test_workers_deterministic():
    single = census.census_run(1, 5, workers=1)
    parallel = census.census_run(1, 5, workers=3)
    assert single == parallel


def test_merge_chunks():
    whole = census.census_chunk(4, 0, 64)
    parts = [census.census_chunk(4, lo, hi)
             for lo, hi in census.chunk_ranges(4, 5)]

    assert sum(whole.counts.values()) == 64
    assert census.merge(4, 4, parts) == census.merge(4, 4, [whole])


def test_chunk_ranges():
    assert census.chunk_ranges(3, 1) == [(0, 8)]
    assert census.chunk_ranges(3, 3) == [(0, 2), (2, 5), (5, 8)]
    assert census.chunk_ranges(1, 4) == [(0, 1)]


def test_seidel_batch():
    masks = [0, 1, 7]
    batch = census.seidel_batch(3, masks)
    for matrix, mask in zip(batch, masks):
        expected = seidel.seidel_array(graph.Graph(3, mask))
        assert (matrix == expected).all()


def test_capacity():
    with pytest.raises(common.CapacityError):
        census.census_run(1, 8)

    with pytest.raises(common.CapacityError):
        next(census.enumerate_masks(8))

    with pytest.raises(ValueError):
        census.census_run(3, 2)


def test_jsonl_round_trip():
    summary = census.census_run(1, 4)
    sink = io.StringIO()
    census.write_jsonl(summary, sink)

    lines = sink.getvalue().splitlines()
    assert len(lines) == len(summary.records) + 1
    assert lines[-1] == '{"total": 75, "violations": []}'

    result = census.read_jsonl(io.StringIO(sink.getvalue()))
    assert result == summary


def test_jsonl_invalid():
    with pytest.raises(ValueError):
        census.read_jsonl(io.StringIO(''))

    text = ('{"total": 0, "violations": []}\n'
            '{"n": 1, "r": 1, "s": 0, "t": 0, "rem": "[1]", "count": 1}\n')
    with pytest.raises(ValueError):
        census.read_jsonl(io.StringIO(text))


def test_census_out():
    sink = io.StringIO()
    census.census_run(3, 3, out=sink)
    assert sink.getvalue().splitlines()[-1] == \
        '{"total": 8, "violations": []}'


def test_audit():
    summary = census.census_run(1, 4)
    assert census.census_audit(summary, 0)
    assert census.census_audit(summary, len(summary.records),
                               rng.SplitMix64(0))

    n3 = census.census_run(3, 3)
    assert census.census_audit(n3, 8)


def test_audit_corrupted():
    summary = census.census_run(3, 3)
    records = list(summary.records)
    records[0] = records[0]._replace(count=records[0].count + 1)
    corrupted = dataclasses.replace(summary, records=tuple(records))

    assert not census.census_audit(corrupted, len(records),
                                   rng.SplitMix64(0))

import typing

import pytest

from hat.seidel import graph
from hat.seidel import rng


def test_splitmix64_reference():
    generator = rng.SplitMix64(0)
    assert generator.next_u64() == 0xE220A8397B1DCDAF
    assert generator.next_u64() == 0x6E789E6AA1B965F4
    assert generator.next_u64() == 0x06C45D188009454F


def test_deterministic():
    first = rng.SplitMix64(42)
    second = rng.SplitMix64(42)
    assert ([first.next_u64() for _ in range(10)] ==
            [second.next_u64() for _ in range(10)])

    assert rng.SplitMix64(1).next_u64() != rng.SplitMix64(2).next_u64()


def test_bits():
    generator = rng.SplitMix64(0)
    value = generator.bits(3)
    assert value == 0xE220A8397B1DCDAF & 0b111

    generator = rng.SplitMix64(0)
    value = generator.bits(100)
    assert value < 1 << 100
    assert value & ((1 << 64) - 1) == 0xE220A8397B1DCDAF

    assert rng.SplitMix64(0).bits(0) == 0


def test_below(generator):
    values = [generator.below(3) for _ in range(300)]
    assert set(values) == {0, 1, 2}

    assert all(generator.below(1) == 0 for _ in range(10))

    with pytest.raises(ValueError):
        generator.below(0)


def test_between(generator):
    values = {generator.between(-2, 2) for _ in range(200)}
    assert values == {-2, -1, 0, 1, 2}


def test_graph(generator):
    g = generator.random_graph(6)
    assert g.n == 6
    graph.validate(g)

    assert generator.random_graph(0) == graph.empty(0)

    first = rng.SplitMix64(0).random_graph(5)
    assert first.mask == 0xE220A8397B1DCDAF & ((1 << 10) - 1)


def test_permutation(generator):
    for n in range(8):
        assert sorted(generator.permutation(n)) == list(range(n))


def test_sample(generator):
    sample = generator.sample(range(10), 4)
    assert len(sample) == 4
    assert len(set(sample)) == 4
    assert all(0 <= i < 10 for i in sample)

    assert sorted(generator.sample('abc', 5)) == ['a', 'b', 'c']


def test_subset(generator):
    subset = generator.subset(10)
    assert subset == sorted(set(subset))
    assert all(0 <= i < 10 for i in subset)


def test_circulant(generator):
    for _ in range(20):
        g = generator.circulant(generator.between(1, 10))
        assert graph.regular_degree(g) is not None


def test_graph_annotations():
    for method in [rng.SplitMix64.random_graph, rng.SplitMix64.circulant]:
        assert typing.get_type_hints(method)['return'] is graph.Graph

import pytest

from hat.seidel import algebra
from hat.seidel import census
from hat.seidel import realizer
from hat.seidel import rng
from hat.seidel import seidel


pytestmark = pytest.mark.perf


@pytest.mark.parametrize('n', [5, 6, 7])
def test_census_order(duration, n):
    with duration(f'census n={n}'):
        summary = census.census_run(n, n)

    assert summary.violations == ()


@pytest.mark.parametrize('workers', [1, 2, 4])
def test_census_workers(duration, workers):
    with duration(f'census n=1..6 workers={workers}'):
        summary = census.census_run(1, 6, workers=workers)

    assert summary.total == 33867


@pytest.mark.parametrize('batch_size', [256, 4096, 16384])
def test_charpoly_batch(duration, batch_size):
    masks = list(range(batch_size))
    stack = census.seidel_batch(7, masks)

    with duration(f'batch charpoly n=7 count={batch_size}'):
        algebra.charpoly_gf3_batch(stack)


@pytest.mark.parametrize('n', [20, 50, 100])
def test_charpoly_single(duration, n):
    g = rng.SplitMix64(0).random_graph(n)

    with duration(f'charpoly n={n}'):
        seidel.seidel_charpoly(g)

    with duration(f'integer charpoly n={n}'):
        seidel.seidel_charpoly_int(g)


@pytest.mark.parametrize('target, expected', [
    ((27, 18, 0), '3*L(K6)'),
    ((162, 36, 0), '3*L(K12)'),
])
def test_extended_witness(duration, target, expected):
    with duration(f'extended witness {expected}'):
        outcome = realizer.solve_extended(target, n_max=12)

    assert str(outcome.witness) == expected

import itertools

import pytest

from hat.seidel import algebra
from hat.seidel import expr
from hat.seidel import realizer
from hat.seidel import seidel


def triples(max_sum):
    for r, s, t in itertools.product(range(max_sum + 1), repeat=3):
        if r + s + t <= max_sum:
            yield seidel.ExponentTriple(r, s, t)


@pytest.mark.parametrize('target, expected', [
    ((0, 0, 0), 'E0'),
    ((0, 3, 0), 'K3'),
    ((0, 0, 3), '~K3'),
    ((0, 1, 1), 'K2'),
    ((1, 0, 3), '4*K1'),
    ((3, 3, 3), '3*K2 + ~K3'),
    ((3, 0, 3), '~(3*K2)'),
    ((1, 3, 0), '2*K2'),
])
def test_solve_basic_witness(target, expected):
    outcome = realizer.solve_basic(target)
    assert outcome.status == realizer.Status.WITNESS
    assert outcome.verified
    assert str(outcome.witness) == expected


@pytest.mark.parametrize('target', [(2, 0, 0), (0, 1, 0), (0, 2, 2),
                                    (1, 1, 0)])
def test_solve_basic_unrealizable(target):
    outcome = realizer.solve_basic(target)
    assert outcome.status == realizer.Status.UNREALIZABLE
    assert outcome.witness is None
    assert outcome.reason


def test_solve_basic_unknown():
    outcome = realizer.solve_basic((4, 0, 0))
    assert outcome.status == realizer.Status.UNKNOWN
    assert outcome.witness is None

    outcome = realizer.solve_basic((27, 18, 0), extended=False)
    assert outcome.status == realizer.Status.UNKNOWN


def test_solve_basic_negative():
    with pytest.raises(ValueError):
        realizer.solve_basic((-1, 0, 0))


@pytest.mark.parametrize('target, expected', [
    ((27, 18, 0), '3*L(K6)'),
    ((27, 0, 18), '~(3*L(K6))'),
    ((0, 9, 0), '3*L(K3)'),
    ((0, 0, 3), '3*L(K2)'),
])
def test_solve_extended(target, expected):
    outcome = realizer.solve_extended(target)
    assert outcome.status == realizer.Status.WITNESS
    assert outcome.verified
    assert str(outcome.witness) == expected


def test_extended_via_basic():
    outcome = realizer.solve_basic((27, 18, 0))
    assert str(outcome.witness) == '3*L(K6)'
    assert outcome.witness.vertex_count == 45


def test_solve_extended_never_unrealizable():
    for target in triples(12):
        outcome = realizer.solve_extended(target, n_max=6)
        assert outcome.status != realizer.Status.UNREALIZABLE


def test_completeness():
    for target in triples(30):
        r, s, t = target
        outcome = realizer.solve_basic(target, extended=False)

        if not seidel.necessity_class(target):
            assert outcome.status == realizer.Status.UNREALIZABLE
            continue

        if r > s + t:
            assert outcome.status == realizer.Status.UNKNOWN
            continue

        assert outcome.status == realizer.Status.WITNESS, target
        assert outcome.verified
        assert outcome.witness.vertex_count <= 2 * r + 3 * s + 3 * t + 4
        assert outcome.witness.vertex_count == target.n


def test_predicted_agrees():
    for target in triples(18):
        outcome = realizer.solve_basic(target)
        if outcome.status != realizer.Status.WITNESS:
            continue

        w = outcome.witness
        g = expr.eval_expr(w.to_expr())
        assert (realizer.predicted_charpoly(w) ==
                seidel.seidel_charpoly(g) ==
                algebra.split_poly(*target))


@pytest.mark.parametrize('n', range(2, 9))
@pytest.mark.parametrize('complement', [False, True])
def test_line_block_exponents(n, complement):
    block = expr.Repeat(3, expr.Line(expr.Complete(n)))
    if complement:
        block = expr.Complement(block)

    p = seidel.seidel_charpoly(expr.eval_expr(block))
    assert p == algebra.split_poly(*realizer.line_block_exponents(n,
                                                                   complement))


def test_line_block_exponents_domain():
    with pytest.raises(ValueError):
        realizer.line_block_exponents(1)


def test_witness_validate():
    realizer.WitnessExpr(a=1, b=1).validate()

    for w in [realizer.WitnessExpr(a=3),
              realizer.WitnessExpr(a=1, b=2),
              realizer.WitnessExpr(a=2, b=1),
              realizer.WitnessExpr(c=-1),
              realizer.WitnessExpr(extension=realizer.Extension.LINE),
              realizer.WitnessExpr(line_n=4)]:
        with pytest.raises(ValueError):
            w.validate()

    assert not realizer.verify_witness(realizer.WitnessExpr(a=3), (0, 0, 0))


def test_verify_witness_mismatch():
    w = realizer.WitnessExpr(c=1)
    assert realizer.verify_witness(w, (0, 3, 0))
    assert not realizer.verify_witness(w, (0, 0, 3))


def test_witness_json():
    outcome = realizer.solve_basic((3, 3, 3))
    data = outcome.to_json()
    assert data['status'] == 'witness'
    assert data['target'] == [3, 3, 3]
    assert data['verified'] is True
    assert data['witness']['expr'] == '3*K2 + ~K3'
    assert data['witness']['params'] == {'a': 0, 'b': 0, 'c': 0,
                                         'd': 1, 'e': 1, 'f': 0}
    assert data['witness']['vertices'] == 9

"""Seidel matrices and verifiers of their characteristic polynomial identities

Seidel matrix of a graph is ``S = J - I - 2A`` (zero diagonal, ``-1``
between adjacent and ``+1`` between non-adjacent vertices). Over GF(3)
``-2 = 1`` so ``S = J - I + A``.

Every verifier computes both sides of an identity from graphs and matrices
and compares them as polynomials. Results are returned as `SeidelReport`
instances.

"""

import dataclasses
import itertools
import logging
import typing

import numpy as np

from hat.seidel import algebra
from hat.seidel import expr
from hat.seidel import graph


mlog: logging.Logger = logging.getLogger(__name__)

Operand: typing.TypeAlias = graph.Graph | expr.Expr
"""Graph or graph expression (expressions keep their text in reports)"""


class ExponentTriple(typing.NamedTuple):
    r: int
    s: int
    t: int

    @property
    def n(self) -> int:
        return self.r + self.s + self.t


@dataclasses.dataclass(frozen=True)
class SeidelReport:
    identity: str
    inputs: tuple[str, ...]
    lhs: str
    rhs: str
    passed: bool

    def to_json(self) -> dict[str, typing.Any]:
        return {'identity': self.identity,
                'inputs': list(self.inputs),
                'lhs': self.lhs,
                'rhs': self.rhs,
                'pass': self.passed}


def seidel_array(g: graph.Graph) -> np.ndarray:
    """GF(3) Seidel matrix ``J - I + A`` as canonical residues"""
    result = (1 + graph.adjacency_array(g)) % 3
    np.fill_diagonal(result, 0)
    return result


def seidel_gf3(g: graph.Graph) -> algebra.Mat:
    return algebra.Mat(seidel_array(g))


def seidel_int(g: graph.Graph) -> algebra.IntMat:
    adjacency = graph.adjacency_array(g)
    result = 1 - 2 * adjacency
    np.fill_diagonal(result, 0)
    return algebra.IntMat(result.tolist())


def seidel_charpoly(g: graph.Graph) -> algebra.Poly:
    """Characteristic polynomial of the Seidel matrix over GF(3)"""
    result = algebra.charpoly_gf3(seidel_gf3(g))
    if __debug__:
        r, s, t, rem = algebra.split_linear(result)
        assert rem != algebra.ONE or necessity_class(ExponentTriple(r, s, t))

    return result


def adjacency_charpoly(g: graph.Graph) -> algebra.Poly:
    return algebra.charpoly_gf3(graph.adjacency_gf3(g))


def seidel_charpoly_int(g: graph.Graph) -> algebra.IntPoly:
    return algebra.charpoly_int(seidel_int(g))


def adjacency_charpoly_int(g: graph.Graph) -> algebra.IntPoly:
    return algebra.charpoly_int(graph.adjacency_int(g))


def check_triple_union(x: Operand) -> list[SeidelReport]:
    """Triple disjoint union against the shifted adjacency polynomial

    ``phi(S(3X), x) = phi(A(X), x + 1)^3`` and
    ``phi(S(~3X), x) = (-1)^|V(X)| phi(A(X), 1 - x)^3``.

    """
    g, name = _operand(x)
    triple = graph.repeat(g, 3)
    adjacency = adjacency_charpoly(g)

    direct = _report('triple', [name],
                     seidel_charpoly(triple),
                     adjacency.shift(1) ** 3)

    reflected = adjacency.reflect().shift(-1) ** 3
    if g.n % 2:
        reflected = -reflected

    complemented = _report('triple.complement', [name],
                           seidel_charpoly(graph.complement(triple)),
                           reflected)

    return [direct, complemented]


def check_union_identities(x: Operand,
                           y: Operand
                           ) -> list[SeidelReport]:
    """Product rules for unions with triple blocks"""
    gx, name_x = _operand(x)
    gy, name_y = _operand(y)
    triple = graph.repeat(gx, 3)
    co_triple = graph.complement(triple)
    phi_y = seidel_charpoly(gy)

    reports = [
        _report('union.triple', [name_x, name_y],
                seidel_charpoly(graph.disjoint_union(triple, gy)),
                seidel_charpoly(triple) * phi_y),
        _report('union.co_triple', [name_x, name_y],
                seidel_charpoly(graph.disjoint_union(co_triple, gy)),
                seidel_charpoly(co_triple) * phi_y)]

    three_k2 = graph.repeat(graph.complete(2), 3)
    blocks = [('union.k3', graph.complete(3),
               algebra.split_poly(0, 3, 0)),
              ('union.co_k3', graph.empty(3),
               algebra.split_poly(0, 0, 3)),
              ('union.3k2', three_k2,
               algebra.split_poly(3, 3, 0)),
              ('union.co_3k2', graph.complement(three_k2),
               algebra.split_poly(3, 0, 3))]

    for identity, block, factor in blocks:
        reports.append(
            _report(identity, [name_y],
                    seidel_charpoly(graph.disjoint_union(block, gy)),
                    factor * phi_y))

    return reports


# residues of (a, b) -> offsets of exponents (a + r, a + s, b + t) of
# x, x-1, x+1 and quadratic factor
_matching_cells: dict[tuple[int, int], tuple[int, int, int, algebra.Poly]] = {
    (0, 0): (0, 0, 0, algebra.ONE),
    (0, 1): (1, 0, -1, algebra.ONE),
    (0, 2): (0, 1, -1, algebra.ONE),
    (1, 0): (-1, 0, 1, algebra.ONE),
    (1, 1): (-1, 2, -1, algebra.ONE),
    (1, 2): (-1, 0, -1, algebra.Poly([1, 0, 1])),
    (2, 0): (-1, 1, 0, algebra.ONE),
    (2, 1): (-1, 0, -1, algebra.Poly([2, 2, 1])),
    (2, 2): (-1, 0, -1, algebra.Poly([2, 1, 1]))}


def matching_expected(a: int, b: int) -> algebra.Poly:
    """Closed form of ``phi(S(aK2 + bK1))`` by residues of `a` and `b`"""
    if a < 0 or b < 0:
        raise ValueError('outside table domain')

    x_off, s_off, t_off, quadratic = _matching_cells[a % 3, b % 3]
    r, s, t = a + x_off, a + s_off, b + t_off
    if min(r, s, t) < 0:
        raise ValueError('outside table domain')

    return algebra.split_poly(r, s, t) * quadratic


def matching_expr(a: int, b: int) -> expr.Expr:
    return expr.Union(expr.Repeat(a, expr.Complete(2)),
                      expr.Repeat(b, expr.Complete(1)))


def check_matching(a_max: int, b_max: int) -> list[SeidelReport]:
    reports = []
    for a, b in itertools.product(range(a_max + 1), range(b_max + 1)):
        e = matching_expr(a, b)
        reports.append(_report('matching', [expr.format_expr(e)],
                               seidel_charpoly(expr.eval_expr(e)),
                               matching_expected(a, b)))

    return reports


def expected_cn(n: int) -> algebra.Gf3:
    """Coefficient of ``x^(n-2)`` shared by all Seidel polynomials of order n

    Equals ``-n(n-1)/2``: 0 for ``n = 0, 1`` and 2 for ``n = 2`` (mod 3).

    """
    return algebra.Gf3(-(n * (n - 1) // 2))


def coeff_xn2(p: algebra.Poly, n: int) -> algebra.Gf3:
    if n < 2:
        raise ValueError('coefficient extraction requires n >= 2')

    if p.degree != n:
        raise ValueError(f'expecting polynomial of degree {n}')

    return p.coeff(n - 2)


def split_cn(r: int, s: int, t: int) -> algebra.Gf3:
    """Coefficient of ``x^(n-2)`` in ``x^r (x-1)^s (x+1)^t``"""
    return algebra.Gf3(s * (s - 1) // 2 - s * t + t * (t - 1) // 2)


def necessity_class(t: ExponentTriple) -> bool:
    return (t.r % 3, t.s % 3, t.t % 3) in {(0, 0, 0), (0, 1, 1), (1, 0, 0)}


class NecessityRow(typing.NamedTuple):
    residues: ExponentTriple
    trace_zero: bool
    split_cn: algebra.Gf3
    expected_cn: algebra.Gf3
    admissible: bool


def necessity_table() -> list[NecessityRow]:
    """Obstruction by the two leading coefficients, per residue class

    A split polynomial of a Seidel matrix has zero coefficient of
    ``x^(n-1)`` (zero trace), forcing ``s = t``, and coefficient of
    ``x^(n-2)`` equal to `expected_cn`. Admissible rows are exactly the
    classes accepted by `necessity_class`.

    """
    rows = []
    for r, s, t in itertools.product(range(3), repeat=3):
        trace_zero = (s - t) % 3 == 0
        actual = split_cn(r, s, t)
        expected = expected_cn(r + s + t)
        rows.append(NecessityRow(residues=ExponentTriple(r, s, t),
                                 trace_zero=trace_zero,
                                 split_cn=actual,
                                 expected_cn=expected,
                                 admissible=trace_zero and actual == expected))

    return rows


def check_regular_identity(x: Operand) -> SeidelReport:
    """Seidel and adjacency polynomials of a k-regular graph over the integers

    ``(x + 1 + 2k) det(xI - S) = (x + 1 + 2k - n) det((x + 1)I + 2A)``

    """
    g, name = _operand(x)
    k = graph.regular_degree(g)
    if k is None:
        raise ValueError('graph is not regular')

    n = g.n
    shifted = -algebra.IntMat.identity(n) - 2 * graph.adjacency_int(g)

    return _report('regular', [name],
                   algebra.IntPoly([1 + 2 * k, 1]) * seidel_charpoly_int(g),
                   (algebra.IntPoly([1 + 2 * k - n, 1]) *
                    algebra.charpoly_int(shifted)))


def check_line_graph_identity(x: Operand) -> list[SeidelReport]:
    """Line graph of a k-regular graph with n vertices and e edges

    ``phi(A(L(X)), x) = (x + 2)^(e-n) phi(A(X), x - k + 2)`` over the
    integers and ``phi(S(3L(X)), x) = x^(3(e-n)) phi(A(X), x - k)^3`` over
    GF(3), with negative powers moved to the other side.

    """
    g, name = _operand(x)
    k = graph.regular_degree(g)
    if k is None:
        raise ValueError('graph is not regular')

    n, e = g.n, graph.edge_count(g)
    line = graph.line_graph(g)
    adjacency_int = adjacency_charpoly_int(g)

    lhs = adjacency_charpoly_int(line)
    rhs = adjacency_int.shift(2 - k)
    factor = algebra.IntPoly([2, 1]) ** abs(e - n)
    if e >= n:
        rhs = rhs * factor
    else:
        lhs = lhs * factor

    adjacency_report = _report('line.adjacency', [name], lhs, rhs)

    lhs = seidel_charpoly(graph.repeat(line, 3))
    rhs = adjacency_charpoly(g).shift(-k) ** 3
    factor = algebra.X ** (3 * abs(e - n))
    if e >= n:
        rhs = rhs * factor
    else:
        lhs = lhs * factor

    seidel_report = _report('line.seidel', [name], lhs, rhs)

    return [adjacency_report, seidel_report]


def operand_name(x: Operand) -> str:
    return _operand(x)[1]


def _operand(x):
    if isinstance(x, graph.Graph):
        return x, graph.emit_graph6(x)

    return expr.eval_expr(x), expr.format_expr(x)


def _report(identity, inputs, lhs, rhs):
    passed = lhs == rhs
    if not passed:
        mlog.warning('identity %s failed for %s', identity, ', '.join(inputs))

    return SeidelReport(identity=identity,
                        inputs=tuple(inputs),
                        lhs=str(lhs),
                        rhs=str(rhs),
                        passed=passed)

"""Graph expression language

Grammar (whitespace is insignificant)::

    expr := term { "+" term }
    term := [ nat "*" ] atom
    atom := "K" nat | "E" nat | "~" atom | "L" "(" expr ")" | "(" expr ")"

``K<n>`` is the complete graph, ``E<n>`` the empty graph, ``~`` the
complement, ``k*`` the disjoint union of ``k`` copies, ``+`` the disjoint
union and ``L(...)`` the line graph.

"""

import collections
import dataclasses
import typing

from hat.seidel import common
from hat.seidel import graph


@dataclasses.dataclass(frozen=True)
class Complete:
    n: int


@dataclasses.dataclass(frozen=True)
class Empty:
    n: int


@dataclasses.dataclass(frozen=True)
class Complement:
    arg: 'Expr'


@dataclasses.dataclass(frozen=True)
class Repeat:
    count: int
    arg: 'Expr'


@dataclasses.dataclass(frozen=True)
class Union:
    left: 'Expr'
    right: 'Expr'


@dataclasses.dataclass(frozen=True)
class Line:
    arg: 'Expr'


Expr: typing.TypeAlias = Complete | Empty | Complement | Repeat | Union | Line


_digits = frozenset('0123456789')


class Token(typing.NamedTuple):
    kind: str
    value: int | None
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        c = text[pos]
        if c.isspace():
            pos += 1

        elif c in _digits:
            start = pos
            while pos < len(text) and text[pos] in _digits:
                pos += 1
            tokens.append(Token('nat', int(text[start:pos]), start))

        elif c in 'KEL~+*()':
            tokens.append(Token(c, None, pos))
            pos += 1

        else:
            raise common.ParseError(f'unexpected character {c!r}', pos)

    tokens.append(Token('end', None, len(text)))
    return tokens


def parse_expr(text: str) -> Expr:
    parser = _Parser(tokenize(text))
    result = parser.expr()
    parser.expect('end')
    return result


def eval_expr(e: Expr) -> graph.Graph:
    match e:
        case Complete(n):
            return graph.complete(n)

        case Empty(n):
            return graph.empty(n)

        case Complement(arg):
            return graph.complement(eval_expr(arg))

        case Repeat(count, arg):
            return graph.repeat(eval_expr(arg), count)

        case Union(left, right):
            return graph.disjoint_union(eval_expr(left), eval_expr(right))

        case Line(arg):
            return graph.line_graph(eval_expr(arg))

    raise TypeError('unsupported expression')


def format_expr(e: Expr) -> str:
    match e:
        case Complete(n):
            return f'K{n}'

        case Empty(n):
            return f'E{n}'

        case Complement(arg):
            return '~' + _format_atom(arg)

        case Repeat(count, arg):
            return f'{count}*' + _format_atom(arg)

        case Union(left, right):
            return f'{format_expr(left)} + {format_expr(right)}'

        case Line(arg):
            return f'L({format_expr(arg)})'

    raise TypeError('unsupported expression')


def union_all(parts: typing.Iterable[Expr]) -> Expr:
    """Left associated union, ``E0`` when there are no parts"""
    result = None
    for part in parts:
        result = part if result is None else Union(result, part)

    return Empty(0) if result is None else result


def graph_to_expr(g: graph.Graph) -> Expr:
    """Cotree expression of a graph

    Resulting expression evaluates to a graph isomorphic to `g`. Raises
    `ValueError` if `g` and its complement are both connected on two or
    more vertices (graph contains an induced path on four vertices).

    """
    if not g.mask:
        return Empty(g.n) if g.n != 1 else Complete(1)

    if g.mask == graph.complete(g.n).mask:
        return Complete(g.n)

    parts = graph.components(g)
    if len(parts) > 1:
        exprs = [graph_to_expr(graph.induced(g, i)) for i in parts]
        return _group(exprs)

    co = graph.complement(g)
    if len(graph.components(co)) > 1:
        return Complement(graph_to_expr(co))

    raise ValueError('graph is not decomposable by union and complement')


def _group(exprs):
    counts = collections.Counter(format_expr(i) for i in exprs)
    by_str = {format_expr(i): i for i in exprs}
    parts = []
    for key in sorted(counts, key=lambda i: (len(i), i)):
        count = counts[key]
        parts.append(by_str[key] if count == 1 else
                     Repeat(count, by_str[key]))

    return union_all(parts)


def _format_atom(e):
    if isinstance(e, (Union, Repeat)):
        return f'({format_expr(e)})'

    return format_expr(e)


class _Parser:

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    @property
    def _next(self) -> Token:
        return self._tokens[self._pos]

    def _take(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self._next
        if token.kind != kind:
            expected = 'end of input' if kind == 'end' else repr(kind)
            raise common.ParseError(f'expecting {expected}', token.position)

        return self._take()

    def expr(self) -> Expr:
        result = self.term()
        while self._next.kind == '+':
            self._take()
            result = Union(result, self.term())

        return result

    def term(self) -> Expr:
        if self._next.kind != 'nat':
            return self.atom()

        count = self._take().value
        self.expect('*')
        return Repeat(count, self.atom())

    def atom(self) -> Expr:
        token = self._next

        if token.kind == 'K':
            self._take()
            return Complete(self.expect('nat').value)

        if token.kind == 'E':
            self._take()
            return Empty(self.expect('nat').value)

        if token.kind == '~':
            self._take()
            return Complement(self.atom())

        if token.kind == 'L':
            self._take()
            self.expect('(')
            result = self.expr()
            self.expect(')')
            return Line(result)

        if token.kind == '(':
            self._take()
            result = self.expr()
            self.expect(')')
            return result

        raise common.ParseError('expecting graph', token.position)

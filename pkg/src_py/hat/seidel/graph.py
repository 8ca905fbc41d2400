"""Labeled simple graphs

Vertices are ``0, ..., n - 1``. Edges are stored as an integer bitset over
the ``n(n-1)/2`` unordered pairs in row-major upper-triangle order: pair
``(i, j)``, ``i < j``, has index ``i*n - i*(i+1)/2 + (j - i - 1)``.

"""

from collections.abc import Iterable, Iterator, Sequence
import functools
import typing

import numpy as np

from hat.seidel import algebra
from hat.seidel import common


Pair: typing.TypeAlias = tuple[int, int]


class Graph(typing.NamedTuple):
    n: int
    mask: int = 0

    @property
    def slots(self) -> int:
        """Number of vertex pairs"""
        return self.n * (self.n - 1) // 2

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False

        return bool(self.mask >> edge_index(self.n, i, j) & 1)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i

    if not 0 <= i < j < n:
        raise ValueError(f'invalid vertex pair ({i}, {j})')

    return i * n - i * (i + 1) // 2 + (j - i - 1)


@functools.lru_cache(maxsize=64)
def pairs(n: int) -> tuple[Pair, ...]:
    """Vertex pairs in bitset order"""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def validate(g: Graph) -> Graph:
    if g.n < 0:
        raise ValueError('negative vertex count')

    if g.mask < 0 or g.mask >> g.slots:
        raise ValueError('edge bitset exceeds vertex pairs')

    return g


def complete(n: int) -> Graph:
    return validate(Graph(n, (1 << pair_count(n)) - 1))


def empty(n: int) -> Graph:
    return validate(Graph(n, 0))


def from_edges(n: int, edges: Iterable[Pair]) -> Graph:
    mask = 0
    for i, j in edges:
        mask |= 1 << edge_index(n, i, j)

    return validate(Graph(n, mask))


def edges(g: Graph) -> Iterator[Pair]:
    """Edges in bitset order"""
    all_pairs = pairs(g.n)
    mask = g.mask
    while mask:
        low = mask & -mask
        yield all_pairs[low.bit_length() - 1]
        mask ^= low


def edge_count(g: Graph) -> int:
    return g.mask.bit_count()


def degrees(g: Graph) -> list[int]:
    result = [0] * g.n
    for i, j in edges(g):
        result[i] += 1
        result[j] += 1

    return result


def regular_degree(g: Graph) -> int | None:
    """Common vertex degree or ``None`` if the graph is not regular"""
    degs = set(degrees(g))
    if not degs:
        return 0

    return degs.pop() if len(degs) == 1 else None


def neighbors(g: Graph) -> list[set[int]]:
    result = [set() for _ in range(g.n)]
    for i, j in edges(g):
        result[i].add(j)
        result[j].add(i)

    return result


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex"""
    adjacent = neighbors(g)
    seen = set()
    result = []
    for start in range(g.n):
        if start in seen:
            continue

        component = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in adjacent[i] - seen:
                seen.add(j)
                stack.append(j)

        result.append(sorted(component))

    return result


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, ``vertices[k]`` becomes vertex ``k``"""
    return from_edges(len(vertices),
                      ((k, l)
                       for k, i in enumerate(vertices)
                       for l, j in enumerate(vertices[k + 1:], k + 1)
                       if g.has_edge(i, j)))


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.mask ^ ((1 << g.slots) - 1))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with vertices of `h` relabeled after those of `g`"""
    n = g.n + h.n
    mask = 0
    for i, j in edges(g):
        mask |= 1 << edge_index(n, i, j)
    for i, j in edges(h):
        mask |= 1 << edge_index(n, g.n + i, g.n + j)

    return Graph(n, mask)


def repeat(g: Graph, count: int) -> Graph:
    """Disjoint union of `count` copies (``count = 0`` gives empty graph)"""
    if count < 0:
        raise ValueError('negative repetition count')

    return functools.reduce(disjoint_union, [g] * count, empty(0))


def line_graph(g: Graph) -> Graph:
    """Line graph, vertex ``k`` is the ``k``-th edge of `g` in bitset order"""
    vertices = list(edges(g))
    return from_edges(len(vertices),
                      ((k, l)
                       for k, e in enumerate(vertices)
                       for l, f in enumerate(vertices[k + 1:], k + 1)
                       if set(e) & set(f)))


def switch(g: Graph, subset: Iterable[int]) -> Graph:
    """Seidel switching with respect to vertex `subset`"""
    subset = set(subset)
    if any(not 0 <= i < g.n for i in subset):
        raise ValueError('vertex index out of range')

    mask = g.mask
    for k, (i, j) in enumerate(pairs(g.n)):
        if (i in subset) != (j in subset):
            mask ^= 1 << k

    return Graph(g.n, mask)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``i`` as ``perm[i]``"""
    if sorted(perm) != list(range(g.n)):
        raise ValueError('invalid permutation')

    return from_edges(g.n, ((perm[i], perm[j]) for i, j in edges(g)))


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph, ``i`` adjacent to ``i +- k mod n`` for each jump"""
    jumps = {k % n for k in jumps} - {0} if n else set()
    return from_edges(n, {tuple(sorted((i, (i + k) % n)))
                          for i in range(n)
                          for k in jumps})


def adjacency_array(g: Graph) -> np.ndarray:
    result = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in edges(g):
        result[i, j] = result[j, i] = 1

    return result


def adjacency_gf3(g: Graph) -> algebra.Mat:
    return algebra.Mat(adjacency_array(g))


def adjacency_int(g: Graph) -> algebra.IntMat:
    return algebra.IntMat(adjacency_array(g).tolist())


graph6_header: str = '>>graph6<<'


@functools.lru_cache(maxsize=64)
def graph6_order(n: int) -> tuple[int, ...]:
    """Bitset indices in graph6 (column-major upper triangle) order"""
    return tuple(edge_index(n, i, j) for j in range(1, n) for i in range(j))


def emit_graph6(g: Graph) -> str:
    bits = [g.mask >> k & 1 for k in graph6_order(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    data = (sum(bit << (5 - i) for i, bit in enumerate(bits[k:k + 6]))
            for k in range(0, len(bits), 6))
    return _emit_size(g.n) + ''.join(chr(i + 63) for i in data)


def parse_graph6(text: str) -> Graph:
    pos = len(graph6_header) if text.startswith(graph6_header) else 0

    for i in range(pos, len(text)):
        if not 63 <= ord(text[i]) <= 126:
            raise common.ParseError('character out of range', i)

    n, pos = _parse_size(text, pos)

    order = graph6_order(n)
    size = -(-len(order) // 6)
    if len(text) - pos < size:
        raise common.ParseError('truncated edge bits', len(text))

    if len(text) - pos > size:
        raise common.ParseError('trailing characters', pos + size)

    mask = 0
    for k, index in enumerate(order):
        value = ord(text[pos + k // 6]) - 63
        if value >> (5 - k % 6) & 1:
            mask |= 1 << index

    return Graph(n, mask)


def _emit_size(n):
    if n < 0:
        raise ValueError('negative vertex count')

    if n <= 62:
        return chr(n + 63)

    if n <= 258047:
        return '~' + _emit_six_bits(n, 3)

    if n < 1 << 36:
        return '~~' + _emit_six_bits(n, 6)

    raise ValueError('graph too large for graph6')


def _emit_six_bits(value, count):
    return ''.join(chr((value >> (6 * (count - k - 1)) & 63) + 63)
                   for k in range(count))


def _parse_size(text, pos):
    if pos >= len(text):
        raise common.ParseError('malformed size', pos)

    if text[pos] != '~':
        return ord(text[pos]) - 63, pos + 1

    if text[pos + 1:pos + 2] == '~':
        start, count = pos + 2, 6
    else:
        start, count = pos + 1, 3

    if len(text) < start + count:
        raise common.ParseError('malformed size', pos)

    n = 0
    for c in text[start:start + count]:
        n = (n << 6) | (ord(c) - 63)

    return n, start + count

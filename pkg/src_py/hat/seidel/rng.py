"""Seeded pseudo random generator

SplitMix64: state advances by ``0x9E3779B97F4A7C15``, output is the state
passed through the finalizer ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`` (all modulo 2^64).
Random graphs take one bit per vertex pair in bitset order, least
significant bit first, from consecutive 64-bit outputs.

"""

from collections.abc import Sequence
import typing

from hat.seidel import graph


_mask64 = (1 << 64) - 1

T = typing.TypeVar('T')


class SplitMix64:

    def __init__(self, seed: int = 0):
        self._state = seed & _mask64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _mask64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _mask64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _mask64
        return z ^ (z >> 31)

    def bits(self, count: int) -> int:
        """Integer with `count` uniform random bits"""
        result = 0
        for k in range(0, count, 64):
            result |= self.next_u64() << k

        return result & ((1 << count) - 1)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` (rejection sampling)"""
        if bound <= 0:
            raise ValueError('bound must be positive')

        threshold = (1 << 64) % bound
        while True:
            value = self.next_u64()
            if value >= threshold:
                return value % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``"""
        return lo + self.below(hi - lo + 1)

    def random_graph(self, n: int) -> graph.Graph:
        return graph.Graph(n, self.bits(graph.pair_count(n)))

    def subset(self, n: int) -> list[int]:
        value = self.bits(n)
        return [i for i in range(n) if value >> i & 1]

    def permutation(self, n: int) -> list[int]:
        result = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            result[i], result[j] = result[j], result[i]

        return result

    def sample(self, population: Sequence[T], count: int) -> list[T]:
        """`count` distinct elements (partial Fisher-Yates)"""
        items = list(population)
        count = min(count, len(items))
        for i in range(count):
            j = i + self.below(len(items) - i)
            items[i], items[j] = items[j], items[i]

        return items[:count]

    def circulant(self, n: int) -> graph.Graph:
        """Random circulant graph with jumps drawn from ``1..n//2``"""
        jumps = [k + 1 for k in self.subset(n // 2)]
        return graph.circulant(n, jumps)

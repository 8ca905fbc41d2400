"""Exact arithmetic over GF(3) and the integers

Field elements, dense polynomials and dense matrices over GF(3), their
integer counterparts, and characteristic polynomials computed with the
division-free Berkowitz algorithm. Characteristic polynomials follow the
convention ``det(xI - M)`` (monic).

Polynomial coefficients are stored in ascending order (index equals
degree). Text representation of GF(3) polynomials is produced by
`format_poly` and read back by `parse_poly`.

"""

from collections.abc import Iterable, Sequence
import itertools
import re
import typing

import numpy as np

from hat.seidel import common


class Gf3:
    """Element of the field with three elements

    Value is always the canonical representative 0, 1 or 2 (``-1`` is
    represented as 2).

    """
    __slots__ = ('_value',)

    def __init__(self, value: typing.SupportsInt = 0):
        self._value = int(value) % 3

    @property
    def value(self) -> int:
        return self._value

    def __int__(self):
        return self._value

    def __bool__(self):
        return self._value != 0

    def __hash__(self):
        return hash(self._value)

    def __eq__(self, other):
        if isinstance(other, Gf3):
            return self._value == other._value

        if isinstance(other, int):
            return self._value == other

        return NotImplemented

    def __repr__(self):
        return f'Gf3({self._value})'

    def __str__(self):
        return str(self._value)

    def __add__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Gf3(self._value + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Gf3(self._value - other)

    def __rsub__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Gf3(other - self._value)

    def __mul__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Gf3(self._value * other)

    __rmul__ = __mul__

    def __neg__(self):
        return Gf3(-self._value)

    def __invert__(self):
        return inv(self)

    def __truediv__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return self * inv(other)

    def __rtruediv__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Gf3(other) * inv(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return inv(self) ** -exponent

        return Gf3(pow(self._value, exponent, 3))


def add(a: typing.SupportsInt, b: typing.SupportsInt) -> Gf3:
    return Gf3(int(a) + int(b))


def sub(a: typing.SupportsInt, b: typing.SupportsInt) -> Gf3:
    return Gf3(int(a) - int(b))


def mul(a: typing.SupportsInt, b: typing.SupportsInt) -> Gf3:
    return Gf3(int(a) * int(b))


def neg(a: typing.SupportsInt) -> Gf3:
    return Gf3(-int(a))


def inv(a: typing.SupportsInt) -> Gf3:
    a = Gf3(a)
    if not a:
        raise ZeroDivisionError('zero has no inverse')

    # 1 * 1 = 2 * 2 = 1
    return a


class _DensePoly:
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[typing.SupportsInt] = ()):
        coeffs = [self._reduce(int(i)) for i in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()

        self._coeffs = tuple(coeffs)

    @staticmethod
    def _reduce(value: int) -> int:
        return value

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Ascending coefficients, empty for the zero polynomial"""
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, ``None`` for the zero polynomial"""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented

        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def __repr__(self):
        return f'{type(self).__name__}({list(self._coeffs)})'

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented

        return type(self)(
            i + j for i, j in itertools.zip_longest(self._coeffs,
                                                    other._coeffs,
                                                    fillvalue=0))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented

        return type(self)(
            i - j for i, j in itertools.zip_longest(self._coeffs,
                                                    other._coeffs,
                                                    fillvalue=0))

    def __neg__(self):
        return type(self)(-i for i in self._coeffs)

    def __mul__(self, other):
        if type(other) is type(self):
            return type(self)(_convolve(self._coeffs, other._coeffs))

        other = _scalar(other)
        if other is None:
            return NotImplemented

        return type(self)(i * other for i in self._coeffs)

    def __rmul__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return type(self)(i * other for i in self._coeffs)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('negative exponent')

        result = type(self)([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base

        return result

    def shift(self, c: int) -> '_DensePoly':
        """Substitute ``x + c`` for ``x``"""
        linear = type(self)([c, 1])
        result = type(self)()
        for coeff in reversed(self._coeffs):
            result = result * linear + type(self)([coeff])

        return result

    def reflect(self) -> '_DensePoly':
        """Substitute ``-x`` for ``x``"""
        return type(self)(-c if k % 2 else c
                          for k, c in enumerate(self._coeffs))


class Poly(_DensePoly):
    """Polynomial over GF(3)"""
    __slots__ = ()

    @staticmethod
    def _reduce(value):
        return value % 3

    def coeff(self, k: int) -> Gf3:
        return Gf3(self._coeffs[k] if 0 <= k < len(self._coeffs) else 0)

    def __str__(self):
        return format_poly(self)

    def __call__(self, a: typing.SupportsInt) -> Gf3:
        a = int(a)
        result = 0
        for coeff in reversed(self._coeffs):
            result = (result * a + coeff) % 3

        return Gf3(result)

    def __divmod__(self, other):
        if type(other) is not Poly:
            return NotImplemented

        if not other:
            raise ZeroDivisionError('division by zero polynomial')

        rem = list(self._coeffs)
        divisor = other._coeffs
        lead_inv = int(inv(divisor[-1]))
        quot = [0] * max(len(rem) - len(divisor) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(divisor) - 1] * lead_inv % 3
            quot[k] = c
            if not c:
                continue
            for i, d in enumerate(divisor):
                rem[k + i] = (rem[k + i] - c * d) % 3

        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> 'Poly':
        if not self:
            raise ZeroDivisionError('zero polynomial has no leading term')

        return self * int(inv(self.leading))


class IntPoly(_DensePoly):
    """Polynomial over the integers (arbitrary precision)"""
    __slots__ = ()

    def __str__(self):
        return format_int_poly(self)

    def reduce(self) -> Poly:
        """Coefficientwise reduction mod 3"""
        return Poly(self._coeffs)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> 'IntPoly':
        result = cls([1])
        for root in roots:
            result = result * cls([-root, 1])

        return result


X: Poly = Poly([0, 1])
ONE: Poly = Poly([1])


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder, ``p = q * quot + rem``"""
    return divmod(p, q)


def poly_eval(p: Poly, a: typing.SupportsInt) -> Gf3:
    return p(a)


def linear(root: typing.SupportsInt) -> Poly:
    """Monic linear polynomial ``x - root``"""
    return Poly([-int(root), 1])


def split_poly(r: int, s: int, t: int) -> Poly:
    """Polynomial ``x^r (x-1)^s (x+1)^t``"""
    return X ** r * linear(1) ** s * linear(-1) ** t


def split_linear(p: Poly) -> tuple[int, int, int, Poly]:
    """Multiplicities of the roots 0, 1 and -1

    Returns ``(r, s, t, remainder)`` such that
    ``p = x^r (x-1)^s (x+1)^t remainder`` and the remainder has none of
    the three field elements as a root.

    """
    if not p:
        raise ValueError('zero polynomial has no root decomposition')

    coeffs = list(p.coeffs)
    r = next(k for k, c in enumerate(coeffs) if c)
    coeffs = coeffs[r:]

    multiplicities = []
    for root in (1, 2):
        count = 0
        while len(coeffs) > 1:
            quot, rem = _divide_root(coeffs, root)
            if rem:
                break
            coeffs = quot
            count += 1
        multiplicities.append(count)

    s, t = multiplicities
    return r, s, t, Poly(coeffs)


quadratic_names: dict[Poly, str] = {Poly([1, 0, 1]): 'x^2+1',
                                    Poly([2, 1, 1]): 'x^2+x-1',
                                    Poly([2, 2, 1]): 'x^2-x-1'}


def quadratic_factors(p: Poly) -> tuple[list[tuple[Poly, int]], Poly]:
    """Trial division by the monic irreducible quadratics

    Display helper only: returns found factors with multiplicities and the
    remaining cofactor.

    """
    factors = []
    for quadratic in quadratic_names:
        count = 0
        while p.degree is not None and p.degree >= 2:
            quot, rem = divmod(p, quadratic)
            if rem:
                break
            p = quot
            count += 1

        if count:
            factors.append((quadratic, count))

    return factors, p


def format_coeffs(p: Poly) -> str:
    return '[' + ','.join(str(i) for i in p.coeffs) + ']'


def format_poly(p: Poly) -> str:
    if not p:
        return '0'

    r, s, t, rem = split_linear(p)
    if rem == ONE:
        factors = [_format_power(base, exponent)
                   for base, exponent in [('x', r),
                                          ('(x-1)', s),
                                          ('(x+1)', t)]]
        return '*'.join(i for i in factors if i) or '1'

    return f'x^{r}*(x-1)^{s}*(x+1)^{t}*{format_coeffs(rem)}'


_factor_re = re.compile(r'(?P<base>x|\(x-1\)|\(x\+1\))(?:\^(?P<exp>\d+))?'
                        r'|\[(?P<coeffs>[0-2](?:,[0-2])*)?\]'
                        r'|(?P<const>[012])')


def parse_poly(text: str) -> Poly:
    """Parse polynomial text form produced by `format_poly`"""
    bases = {'x': X, '(x-1)': linear(1), '(x+1)': linear(-1)}
    result = ONE
    pos = 0
    while True:
        match = _factor_re.match(text, pos)
        if not match:
            raise common.ParseError('expecting polynomial factor', pos)

        if match['base']:
            exponent = int(match['exp']) if match['exp'] else 1
            result = result * bases[match['base']] ** exponent

        elif match['const']:
            result = result * Poly([int(match['const'])])

        else:
            coeffs = match['coeffs'].split(',') if match['coeffs'] else []
            result = result * Poly(int(i) for i in coeffs)

        pos = match.end()
        if pos == len(text):
            return result

        if text[pos] != '*':
            raise common.ParseError("expecting '*'", pos)

        pos += 1


def format_int_poly(p: IntPoly) -> str:
    if not p:
        return '0'

    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue

        monomial = 'x' if k == 1 else f'x^{k}' if k else ''
        magnitude = abs(c)
        if monomial and magnitude == 1:
            term = monomial
        elif monomial:
            term = f'{magnitude}*{monomial}'
        else:
            term = str(magnitude)

        if not terms:
            terms.append(f'-{term}' if c < 0 else term)
        else:
            terms.append(f'- {term}' if c < 0 else f'+ {term}')

    return ' '.join(terms)


class Mat:
    """Dense square matrix over GF(3) (immutable)"""
    __slots__ = ('_entries',)

    def __init__(self,
                 entries: Sequence[Sequence[typing.SupportsInt]] | np.ndarray):
        array = np.array(entries, dtype=np.int64)
        if array.size == 0:
            array = array.reshape(0, 0)

        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError('matrix is not square')

        array %= 3
        array.setflags(write=False)
        self._entries = array

    @classmethod
    def identity(cls, n: int) -> 'Mat':
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, n: int) -> 'Mat':
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def ones(cls, n: int) -> 'Mat':
        return cls(np.ones((n, n), dtype=np.int64))

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only ``(n, n)`` array of canonical residues"""
        return self._entries

    def rows(self) -> list[list[int]]:
        return self._entries.tolist()

    def __getitem__(self, key: tuple[int, int]) -> Gf3:
        return Gf3(self._entries[key])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented

        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash((self.n, self._entries.tobytes()))

    def __repr__(self):
        return f'Mat({self.rows()})'

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented

        return Mat(self._entries + other._entries)

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented

        return Mat(self._entries - other._entries)

    def __neg__(self):
        return Mat(-self._entries)

    def __mul__(self, other):
        other = _scalar(other)
        if other is None:
            return NotImplemented

        return Mat(self._entries * other)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented

        return Mat(self._entries @ other._entries)

    def transpose(self) -> 'Mat':
        return Mat(self._entries.T)

    def permuted(self, perm: Sequence[int]) -> 'Mat':
        """Conjugate by the permutation matrix sending ``i`` to ``perm[i]``"""
        inverse = np.argsort(np.asarray(perm, dtype=np.int64))
        return Mat(self._entries[np.ix_(inverse, inverse)])

    def det(self) -> Gf3:
        """Determinant by Gaussian elimination with row pivoting"""
        a = self._entries.copy()
        n = self.n
        result = 1
        for col in range(n):
            pivots = np.flatnonzero(a[col:, col])
            if not len(pivots):
                return Gf3(0)

            row = col + int(pivots[0])
            if row != col:
                a[[col, row]] = a[[row, col]]
                result = -result

            pivot = int(a[col, col])
            result = result * pivot % 3
            factors = a[col + 1:, col] * pivot % 3
            a[col + 1:] = (a[col + 1:] - factors[:, None] * a[col]) % 3

        return Gf3(result)


def block_diag(a: Mat, b: Mat) -> Mat:
    entries = np.zeros((a.n + b.n, a.n + b.n), dtype=np.int64)
    entries[:a.n, :a.n] = a.entries
    entries[a.n:, a.n:] = b.entries
    return Mat(entries)


class IntMat:
    """Dense square matrix over the integers (arbitrary precision)"""
    __slots__ = ('_rows',)

    def __init__(self, rows: Iterable[Iterable[int]]):
        self._rows = tuple(tuple(int(i) for i in row) for row in rows)
        if any(len(row) != len(self._rows) for row in self._rows):
            raise ValueError('matrix is not square')

    @classmethod
    def identity(cls, n: int) -> 'IntMat':
        return cls([int(i == j) for j in range(n)] for i in range(n))

    @property
    def n(self) -> int:
        return len(self._rows)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented

        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f'IntMat({[list(row) for row in self._rows]})'

    def __add__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented

        return IntMat(map(lambda x, y: map(int.__add__, x, y),
                          self._rows, other._rows))

    def __sub__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented

        return IntMat(map(lambda x, y: map(int.__sub__, x, y),
                          self._rows, other._rows))

    def __neg__(self):
        return IntMat((-i for i in row) for row in self._rows)

    def __mul__(self, other):
        if isinstance(other, bool) or not isinstance(other, int):
            return NotImplemented

        return IntMat((i * other for i in row) for row in self._rows)

    __rmul__ = __mul__

    def reduce(self) -> Mat:
        """Entrywise reduction mod 3"""
        return Mat([[i % 3 for i in row] for row in self._rows]
                   if self._rows else [])


def charpoly_gf3(m: Mat) -> Poly:
    """Characteristic polynomial ``det(xI - m)`` over GF(3)"""
    return Poly(charpoly_gf3_batch(m.entries[np.newaxis])[0])


def charpoly_gf3_batch(stack: np.ndarray) -> np.ndarray:
    """Characteristic polynomials of a stack of GF(3) matrices

    `stack` has shape ``(count, n, n)``. Result has shape
    ``(count, n + 1)``, row ``i`` holding the ascending coefficients of
    ``det(xI - stack[i])``.

    Berkowitz algorithm: the characteristic polynomial of the trailing
    principal submatrix of order ``m + 1`` is the product of a lower
    triangular Toeplitz matrix, built from ``1, -a, -R C, -R A C, ...``,
    with the characteristic polynomial of order ``m``. Only ring
    operations are used, so reduction mod 3 after every step is exact.

    """
    stack = np.asarray(stack, dtype=np.int64) % 3
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValueError('expecting stack of square matrices')

    count, n = stack.shape[0], stack.shape[1]

    # descending coefficients of the charpoly of the 0 x 0 trailing block
    poly = np.ones((count, 1), dtype=np.int64)

    for k in range(n - 1, -1, -1):
        m = n - k - 1
        row = stack[:, k, k + 1:]
        col = stack[:, k + 1:, k]
        sub = stack[:, k + 1:, k + 1:]

        toeplitz = np.empty((count, m + 2), dtype=np.int64)
        toeplitz[:, 0] = 1
        toeplitz[:, 1] = -stack[:, k, k]
        vec = col
        for i in range(m):
            toeplitz[:, i + 2] = -np.einsum('bi,bi->b', row, vec)
            if i + 1 < m:
                vec = np.einsum('bij,bj->bi', sub, vec) % 3
        toeplitz %= 3

        result = np.zeros((count, m + 2), dtype=np.int64)
        for j in range(m + 1):
            result[:, j:] += toeplitz[:, :m + 2 - j] * poly[:, j:j + 1]
        poly = result % 3

    return np.ascontiguousarray(poly[:, ::-1])


def charpoly_int(m: IntMat) -> IntPoly:
    """Characteristic polynomial ``det(xI - m)`` over the integers

    Same Berkowitz recurrence as `charpoly_gf3_batch`, on Python integers.

    """
    rows = m.rows()
    n = m.n
    poly = [1]
    for k in range(n - 1, -1, -1):
        size = n - k - 1
        row = rows[k][k + 1:]
        sub = [r[k + 1:] for r in rows[k + 1:]]
        vec = [r[k] for r in rows[k + 1:]]

        toeplitz = [1, -rows[k][k]]
        for i in range(size):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            if i + 1 < size:
                vec = [sum(x * y for x, y in zip(r, vec)) for r in sub]

        poly = [sum(toeplitz[i - j] * poly[j] for j in range(min(i, size) + 1))
                for i in range(size + 2)]

    return IntPoly(reversed(poly))


def _scalar(value):
    if isinstance(value, Gf3):
        return value.value

    if isinstance(value, bool) or not isinstance(value, int):
        return None

    return value


def _convolve(a, b):
    if not a or not b:
        return []

    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            result[i + j] += x * y

    return result


def _divide_root(coeffs, root):
    # synthetic division of ascending coefficients by (x - root) over GF(3)
    quot = [0] * (len(coeffs) - 1)
    acc = 0
    for k in range(len(coeffs) - 1, 0, -1):
        acc = (coeffs[k] + root * acc) % 3
        quot[k - 1] = acc
    rem = (coeffs[0] + root * acc) % 3
    return quot, rem


def _format_power(base, exponent):
    if not exponent:
        return ''

    if exponent == 1:
        return base

    return f'{base}^{exponent}'

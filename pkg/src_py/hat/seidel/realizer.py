"""Witness graphs for split Seidel polynomials

Given exponents ``(r, s, t)``, decide whether ``x^r (x-1)^s (x+1)^t`` is
the Seidel characteristic polynomial of a graph over GF(3). Witnesses are
disjoint unions::

    aK2 + bK1 + cK3 + e(3K2) + d~K3 + f~(3K2)

optionally extended by one of ``3L(Kn)``, ``~(3L(Kn))`` or ``4K1``.
Every returned witness is re-verified by direct computation.

"""

import dataclasses
import enum
import logging
import typing

from hat.seidel import algebra
from hat.seidel import expr
from hat.seidel import seidel


mlog: logging.Logger = logging.getLogger(__name__)

ExponentTriple = seidel.ExponentTriple


class Extension(enum.Enum):
    NONE = 'none'
    LINE = 'line'
    LINE_COMPLEMENT = 'line_complement'
    FOUR_K1 = 'four_k1'


class Status(enum.Enum):
    WITNESS = 'witness'
    UNREALIZABLE = 'unrealizable'
    UNKNOWN = 'unknown'


@dataclasses.dataclass(frozen=True)
class WitnessExpr:
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    e: int = 0
    f: int = 0
    extension: Extension = Extension.NONE
    line_n: int = 0

    def params(self) -> tuple[int, int, int, int, int, int]:
        return self.a, self.b, self.c, self.d, self.e, self.f

    def validate(self):
        if any(i < 0 for i in self.params()):
            raise ValueError('malformed witness: negative multiplicity')

        if self.a not in (0, 1, 2):
            raise ValueError('malformed witness: a not in {0, 1, 2}')

        if (self.a == 1 and self.b > 1) or (self.a == 2 and self.b):
            raise ValueError('malformed witness: b not allowed for this a')

        if self.extension in (Extension.LINE, Extension.LINE_COMPLEMENT):
            if self.line_n < 2:
                raise ValueError('malformed witness: line order below 2')

        elif self.line_n:
            raise ValueError('malformed witness: line order without line')

    @property
    def vertex_count(self) -> int:
        count = (2 * self.a + self.b + 3 * self.c + 3 * self.d +
                 6 * self.e + 6 * self.f)

        if self.extension is Extension.FOUR_K1:
            count += 4

        elif self.extension is not Extension.NONE:
            count += 3 * (self.line_n * (self.line_n - 1) // 2)

        return count

    def to_expr(self) -> expr.Expr:
        k1, k2, k3 = expr.Complete(1), expr.Complete(2), expr.Complete(3)
        parts = []

        if self.extension is Extension.FOUR_K1:
            parts.append(expr.Repeat(4, k1))

        elif self.extension is not Extension.NONE:
            line = expr.Repeat(3, expr.Line(expr.Complete(self.line_n)))
            parts.append(line if self.extension is Extension.LINE
                         else expr.Complement(line))

        for count, block in [(self.a, k2),
                             (self.b, k1),
                             (self.c, k3),
                             (self.e, expr.Repeat(3, k2)),
                             (self.d, expr.Complement(k3)),
                             (self.f, expr.Complement(expr.Repeat(3, k2)))]:
            if count == 1:
                parts.append(block)

            elif count > 1:
                parts.append(expr.Repeat(count, block))

        return expr.union_all(parts)

    def __str__(self):
        return expr.format_expr(self.to_expr())

    def to_json(self) -> dict[str, typing.Any]:
        return {'expr': str(self),
                'params': dict(zip('abcdef', self.params())),
                'extension': self.extension.value,
                'line_n': self.line_n,
                'vertices': self.vertex_count}


@dataclasses.dataclass(frozen=True)
class RealizeOutcome:
    status: Status
    target: ExponentTriple
    witness: WitnessExpr | None = None
    reason: str | None = None
    verified: bool = False

    def to_json(self) -> dict[str, typing.Any]:
        return {'target': list(self.target),
                'status': self.status.value,
                'witness': self.witness.to_json() if self.witness else None,
                'reason': self.reason,
                'verified': self.verified}


def line_block_exponents(n: int,
                         complement: bool = False
                         ) -> ExponentTriple:
    """Exponents of ``phi(S(3L(Kn)))`` over GF(3), ``n >= 2``

    Reduction of ``x^(3n(n-3)/2) (x-2n+2)^3 (x-n+2)^(3(n-1))`` modulo 3.
    Complement exchanges the roots 1 and -1.

    """
    if n < 2:
        raise ValueError('line block requires n >= 2')

    if n % 3 == 0:
        r, s, t = 3 * n * (n - 3) // 2, 3 * n, 0

    elif n % 3 == 1:
        r, s, t = 3 * (n - 1) * (n - 2) // 2, 0, 3 * (n - 1)

    else:
        r, s, t = 3 * (n + 1) * (n - 2) // 2, 0, 3

    return ExponentTriple(r, t, s) if complement else ExponentTriple(r, s, t)


def predicted_charpoly(w: WitnessExpr) -> algebra.Poly:
    """Closed form of the witness polynomial (no matrix computation)"""
    w.validate()

    if w.extension is Extension.FOUR_K1:
        # 4K1 = ~K3 + K1
        result = (algebra.split_poly(0, 0, 3) *
                  seidel.matching_expected(w.a, w.b + 1))

    else:
        result = seidel.matching_expected(w.a, w.b)

    result = (result *
              algebra.split_poly(0, 3 * w.c, 0) *
              algebra.split_poly(0, 0, 3 * w.d) *
              algebra.split_poly(3 * w.e, 3 * w.e, 0) *
              algebra.split_poly(3 * w.f, 0, 3 * w.f))

    if w.extension in (Extension.LINE, Extension.LINE_COMPLEMENT):
        complement = w.extension is Extension.LINE_COMPLEMENT
        result = result * algebra.split_poly(
            *line_block_exponents(w.line_n, complement))

    return result


def verify_witness(w: WitnessExpr, target: ExponentTriple) -> bool:
    """Recompute witness polynomial from its expression string

    Both the Seidel polynomial of the evaluated graph and the closed form
    of `predicted_charpoly` have to equal the target.

    """
    try:
        w.validate()

    except ValueError as e:
        mlog.warning('witness rejected: %s', e)
        return False

    expected = algebra.split_poly(*target)
    g = expr.eval_expr(expr.parse_expr(str(w)))
    actual = seidel.seidel_charpoly(g)
    predicted = predicted_charpoly(w)

    if actual != expected:
        mlog.debug('witness %s gives %s instead of %s', w, actual, expected)
        return False

    if predicted != expected:
        mlog.warning('closed form %s of witness %s differs from %s',
                     predicted, w, expected)
        return False

    return True


def solve_basic(target: ExponentTriple,
                extended: bool = True,
                n_max: int = 12
                ) -> RealizeOutcome:
    """Witness from the basic families

    Targets failing `seidel.necessity_class` are unrealizable. Targets with
    ``r <= s + t`` always get a basic witness. Remaining targets are passed
    to `solve_extended` if `extended` is set, otherwise they are unknown.

    """
    target = ExponentTriple(*target)
    if min(target) < 0:
        raise ValueError('negative exponent')

    r, s, t = target
    if not seidel.necessity_class(target):
        return RealizeOutcome(
            status=Status.UNREALIZABLE,
            target=target,
            reason=('exponents modulo 3 not in '
                    '{(0, 0, 0), (0, 1, 1), (1, 0, 0)}'))

    if r > s + t:
        if extended:
            return solve_extended(target, n_max)

        return RealizeOutcome(status=Status.UNKNOWN,
                              target=target,
                              reason='r > s + t outside basic families')

    witness = _basic_witness(r, s, t)
    mlog.debug('basic witness for %s: %s', target, witness)
    if verify_witness(witness, target):
        return RealizeOutcome(status=Status.WITNESS,
                              target=target,
                              witness=witness,
                              verified=True)

    mlog.warning('basic witness %s for %s failed verification',
                 witness, target)
    return RealizeOutcome(status=Status.UNKNOWN,
                          target=target,
                          reason='witness failed verification')


def extended_candidates(target: ExponentTriple,
                        n_max: int = 12
                        ) -> list[WitnessExpr]:
    """Line graph witnesses with exponents matching the target

    Witnesses ``3L(Kn) + aK2 + cK3 + d~K3`` and the same with the
    complemented line block, ``2 <= n <= n_max``, ordered by vertex count
    and parameters.

    """
    r, s, t = target
    candidates = []
    for n in range(2, n_max + 1):
        for extension in (Extension.LINE, Extension.LINE_COMPLEMENT):
            lr, ls, lt = line_block_exponents(
                n, extension is Extension.LINE_COMPLEMENT)

            for a, (ar, as_, at) in enumerate(_pair_exponents):
                rr, ss, tt = r - lr - ar, s - ls - as_, t - lt - at
                if rr or ss < 0 or tt < 0 or ss % 3 or tt % 3:
                    continue

                candidates.append(WitnessExpr(a=a,
                                              c=ss // 3,
                                              d=tt // 3,
                                              extension=extension,
                                              line_n=n))

    return sorted(candidates, key=lambda w: (w.vertex_count,
                                             w.params(),
                                             w.line_n,
                                             w.extension.value))


def solve_extended(target: ExponentTriple,
                   n_max: int = 12
                   ) -> RealizeOutcome:
    """Witness from the line graph families, never unrealizable"""
    target = ExponentTriple(*target)
    candidates = extended_candidates(target, n_max)
    mlog.debug('%s extended candidates for %s', len(candidates), target)

    for witness in candidates:
        if verify_witness(witness, target):
            return RealizeOutcome(status=Status.WITNESS,
                                  target=target,
                                  witness=witness,
                                  verified=True)

        mlog.warning('extended candidate %s for %s failed verification',
                     witness, target)

    return RealizeOutcome(
        status=Status.UNKNOWN,
        target=target,
        reason=f'no line graph family matches (n <= {n_max})')


# exponents of phi(S(aK2)) for a = 0, 1, 2
_pair_exponents = [(0, 0, 0), (0, 1, 1), (1, 3, 0)]


def _balanced(r, s, t):
    # r, s, t divisible by 3 and r <= s + t
    e = min(r // 3, s // 3)
    f = r // 3 - e
    return WitnessExpr(c=s // 3 - e, d=t // 3 - f, e=e, f=f)


def _basic_witness(r, s, t):
    residues = r % 3, s % 3, t % 3

    if residues == (0, 0, 0):
        return _balanced(r, s, t)

    if residues == (0, 1, 1):
        return dataclasses.replace(_balanced(r, s - 1, t - 1), a=1)

    if s >= 3:
        return dataclasses.replace(_balanced(r - 1, s - 3, t), a=2)

    f = (r - 1) // 3
    return WitnessExpr(d=(t - 3 * (f + 1)) // 3,
                       f=f,
                       extension=Extension.FOUR_K1)

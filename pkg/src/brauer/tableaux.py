"""Partitions, updown tableaux and their combinatorial statistics.

Partitions are plain tuples of weakly decreasing positive integers; boxes
are 1-based (row, column) pairs and the diagonal of a box is column - row.
An updown tableau is a sequence of partitions starting implicitly from the
empty shape, each step adding or removing exactly one box.

The statistics gathered here drive the fusion procedure: the add/remove
multiplicity matrices of a tableau prefix, their diagonal sums, the
second-difference parameters built from those sums, the regularization
exponents of each step, and the scalar that relates the regularized
product to the primitive idempotent.  For shapes with all steps adding
(standard tableaux) the exponents vanish and the scalar becomes the hook
product, which is what the tests pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BoundExceeded, ShapeParityMismatch, ZeroFactor
from .fields import ExactOmega, FieldMode, OMEGA, OMEGA_FIELD, RationalFunction

Partition = tuple[int, ...]

ENUMERATION_BOUND = 6


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if p < 1 or (i > 0 and parts[i - 1] < p):
            raise ValueError(f'{parts} is not a partition')
    return parts


def addable_boxes(mu: Partition) -> list[tuple[int, int]]:
    """Corner boxes that may be appended, top row first (descending diagonal)."""
    out = []
    for i in range(len(mu) + 1):
        j = mu[i] + 1 if i < len(mu) else 1
        if i == 0 or mu[i - 1] >= j:
            out.append((i + 1, j))
    return out


def removable_boxes(mu: Partition) -> list[tuple[int, int]]:
    """Corner boxes that may be deleted, top row first (descending diagonal)."""
    out = []
    for i in range(len(mu)):
        if i + 1 == len(mu) or mu[i] > mu[i + 1]:
            out.append((i + 1, mu[i]))
    return out


@dataclass(frozen=True)
class ContentSymbol:
    """A content as sign and diagonal; the actual scalar needs a field mode."""

    sign: int
    diagonal: int

    def value(self, mode: FieldMode = ExactOmega()):
        field = mode.scalar_field()
        v = (field.promote(mode.omega()) - 1) / 2 + field.from_int(self.diagonal)
        return v if self.sign > 0 else -v

    def __repr__(self):
        return f'{"+" if self.sign > 0 else "-"}({self.diagonal})'


def boxes_with_contents(mu: Partition):
    """Addable and removable boxes of a shape, with their content symbols."""
    add = [((i, j), ContentSymbol(+1, j - i)) for i, j in addable_boxes(mu)]
    rem = [((i, j), ContentSymbol(-1, j - i)) for i, j in removable_boxes(mu)]
    return add, rem


@dataclass(frozen=True)
class Step:
    sign: int                 # +1 box added, -1 box removed
    box: tuple[int, int]
    diagonal: int


class UpdownTableau:
    """A path in Young's lattice starting at the empty shape."""

    __slots__ = ('shapes',)

    def __init__(self, shapes: Sequence[Sequence[int]]):
        shapes = tuple(check_partition(s) for s in shapes)
        prev: Partition = ()
        for r, shape in enumerate(shapes):
            if _single_box_step(prev, shape) is None:
                raise ValueError(
                    f'step {r + 1}: {prev} -> {shape} is not a one-box change')
            prev = shape
        self.shapes = shapes

    def __len__(self):
        return len(self.shapes)

    def __eq__(self, other):
        return isinstance(other, UpdownTableau) and self.shapes == other.shapes

    def __hash__(self):
        return hash(self.shapes)

    @property
    def shape(self) -> Partition:
        return self.shapes[-1] if self.shapes else ()

    def prefix(self, r: int) -> 'UpdownTableau':
        tab = object.__new__(UpdownTableau)
        tab.shapes = self.shapes[:r]
        return tab

    def steps(self) -> list[Step]:
        out = []
        prev: Partition = ()
        for shape in self.shapes:
            out.append(_single_box_step(prev, shape))
            prev = shape
        return out

    def is_all_additions(self) -> bool:
        return all(s.sign > 0 for s in self.steps())

    def to_text(self) -> str:
        return '|'.join(''.join(map(str, s)) if s else '0' for s in self.shapes)

    @classmethod
    def from_text(cls, text: str) -> 'UpdownTableau':
        shapes = []
        for token in text.split('|'):
            token = token.strip()
            if token in ('', '0'):
                shapes.append(())
            else:
                if not token.isdigit():
                    raise ValueError(f'bad partition token {token!r}')
                shapes.append(tuple(int(ch) for ch in token))
        return cls(shapes)

    def to_json(self) -> dict:
        return {'shapes': [list(s) for s in self.shapes]}

    @classmethod
    def from_json(cls, data: dict) -> 'UpdownTableau':
        return cls(data['shapes'])

    def __repr__(self):
        return f'UpdownTableau({self.to_text()!r})'


def _single_box_step(prev: Partition, cur: Partition) -> Optional[Step]:
    """The Step turning prev into cur, or None if they differ otherwise."""
    a, b = list(prev), list(cur)
    if abs(len(a) - len(b)) > 1 or abs(sum(a) - sum(b)) != 1:
        return None
    while len(a) < len(b):
        a.append(0)
    while len(b) < len(a):
        b.append(0)
    diffs = [i for i in range(len(a)) if a[i] != b[i]]
    if len(diffs) != 1:
        return None
    i = diffs[0]
    if b[i] == a[i] + 1:
        return Step(+1, (i + 1, b[i]), b[i] - (i + 1))
    if b[i] == a[i] - 1:
        return Step(-1, (i + 1, a[i]), a[i] - (i + 1))
    return None


def contents(tableau: UpdownTableau) -> list[ContentSymbol]:
    return [ContentSymbol(s.sign, s.diagonal) for s in tableau.steps()]


def enumerate_updown(n: int, shape: Optional[Partition] = None,
                     bound: int = ENUMERATION_BOUND) -> Iterator[UpdownTableau]:
    """All updown tableaux of length n (optionally with a fixed final shape),
    depth-first over addable-then-removable boxes, each group top row first."""
    if n > bound:
        raise BoundExceeded(f'n={n} exceeds the enumeration bound {bound}')
    if shape is not None:
        shape = check_partition(shape)
        if sum(shape) > n or (n - sum(shape)) % 2:
            raise ShapeParityMismatch(
                f'|{shape}| must be one of n, n-2, ... for n={n}')

    path: list[Partition] = []

    def walk(mu: Partition, depth: int) -> Iterator[UpdownTableau]:
        if depth == n:
            if shape is None or mu == shape:
                tab = object.__new__(UpdownTableau)
                tab.shapes = tuple(path)
                yield tab
            return
        moves = [_with_box_added(mu, b) for b in addable_boxes(mu)]
        moves += [_with_box_removed(mu, b) for b in removable_boxes(mu)]
        for nxt in moves:
            path.append(nxt)
            yield from walk(nxt, depth + 1)
            path.pop()

    return walk((), 0)


def _with_box_added(mu: Partition, box: tuple[int, int]) -> Partition:
    i = box[0] - 1
    parts = list(mu)
    if i == len(parts):
        parts.append(1)
    else:
        parts[i] += 1
    return tuple(parts)


def _with_box_removed(mu: Partition, box: tuple[int, int]) -> Partition:
    i = box[0] - 1
    parts = list(mu)
    parts[i] -= 1
    if parts[-1] == 0:
        parts.pop()
    return tuple(parts)


# -- prefix statistics ---------------------------------------------------

@dataclass(frozen=True)
class TableauStatistics:
    """Add/remove multiplicity matrices of a tableau, their diagonal sums
    and the derived second-difference parameters; all sparse, only nonzero
    entries are stored."""

    m: dict
    m_prime: dict
    d: dict
    d_prime: dict
    g: dict
    g_prime: dict

    def to_json(self) -> dict:
        def boxes(mat):
            return [[i, j, v] for (i, j), v in sorted(mat.items())]

        def diag(row):
            return {str(k): v for k, v in sorted(row.items())}

        return {'m': boxes(self.m), 'm_prime': boxes(self.m_prime),
                'd': diag(self.d), 'd_prime': diag(self.d_prime),
                'g': diag(self.g), 'g_prime': diag(self.g_prime)}


def tableau_statistics(tableau: UpdownTableau) -> TableauStatistics:
    m: dict = {}
    m_prime: dict = {}
    for step in tableau.steps():
        target = m if step.sign > 0 else m_prime
        target[step.box] = target.get(step.box, 0) + 1

    def diagonal_sums(mat: dict) -> dict:
        out: dict = {}
        for (i, j), v in mat.items():
            k = j - i
            out[k] = out.get(k, 0) + v
        return out

    d = diagonal_sums(m)
    d_prime = diagonal_sums(m_prime)

    def second_difference(row: dict, with_delta: bool) -> dict:
        ks = set(row)
        span = set()
        for k in ks:
            span.update((k - 1, k, k + 1))
        if with_delta:
            span.add(0)
        out = {}
        for k in span:
            v = row.get(k - 1, 0) + row.get(k + 1, 0) - 2 * row.get(k, 0)
            if with_delta and k == 0:
                v += 1
            if v:
                out[k] = v
        return out

    return TableauStatistics(m, m_prime, d, d_prime,
                             second_difference(d, True),
                             second_difference(d_prime, False))


def exponents(tableau: UpdownTableau) -> list[int]:
    """Regularization exponent of each step: one minus the parameter of the
    step's diagonal, taken from the statistics of the preceding prefix."""
    out = []
    for r, step in enumerate(tableau.steps()):
        stats = tableau_statistics(tableau.prefix(r))
        row = stats.g if step.sign > 0 else stats.g_prime
        out.append(1 - row.get(step.diagonal, 0))
    return out


def step_factor(stats: TableauStatistics, step: Step) -> RationalFunction:
    """The scalar contribution of one tableau step to the fusion constant."""
    w = OMEGA
    out = OMEGA_FIELD.one
    kn = step.diagonal
    if step.sign > 0:
        for k, gk in stats.g.items():
            if k != kn:
                out = out * OMEGA_FIELD.from_int(kn - k) ** gk
        for k, gk in stats.g_prime.items():
            out = out * (w + (kn + k - 1)) ** gk
    else:
        for k, gk in stats.g_prime.items():
            if k != kn:
                out = out * OMEGA_FIELD.from_int(k - kn) ** gk
        for k, gk in stats.g.items():
            out = out * (1 - w - (kn + k)) ** gk
    if not out:
        raise ZeroFactor(f'vanishing step factor at {step}')
    return out


def f_constant(tableau: UpdownTableau) -> tuple[RationalFunction, list[RationalFunction]]:
    """The fusion constant of a tableau and its per-step factors.

    Always computed over Q(w); modular runs specialize the result.
    """
    factors = []
    value = OMEGA_FIELD.one
    for r, step in enumerate(tableau.steps()):
        phi = step_factor(tableau_statistics(tableau.prefix(r)), step)
        factors.append(phi)
        value = value * phi
    return value, factors


def hooks(shape: Partition) -> int:
    """Product of the hook lengths of a partition."""
    shape = check_partition(shape)
    out = 1
    for i, row in enumerate(shape):
        for j in range(1, row + 1):
            arm = row - j
            leg = sum(1 for below in shape[i + 1:] if below >= j)
            out *= arm + leg + 1
    return out

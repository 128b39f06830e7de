"""Brauer n-diagrams: perfect matchings on two rows of n dots.

A diagram is stored as a partner array of length 2n using 0-based indices:
positions 0..n-1 are the top dots left to right, positions n..2n-1 the
bottom dots.  The array is a fixed-point-free involution and is itself the
canonical form, so equality and hashing are straight tuple operations.
The JSON form uses 1-based indices.

Multiplication stacks the first diagram on top of the second, contracts
the paths through the middle row and counts the closed loops that stay
entirely inside it; the loop count feeds the omega factor at the algebra
level.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BoundExceeded, IndexOutOfRange, ShrinkNotAllowed, SizeMismatch

ENUMERATION_BOUND = 6


class BrauerDiagram:
    __slots__ = ('n', 'partner', '_hash')

    def __init__(self, partner):
        partner = tuple(partner)
        n2 = len(partner)
        if n2 % 2:
            raise ValueError('partner array must have even length')
        for i, j in enumerate(partner):
            if not 0 <= j < n2 or j == i or partner[j] != i:
                raise ValueError('partner array is not a fixed-point-free involution')
        self.n = n2 // 2
        self.partner = partner
        self._hash = hash(partner)

    @classmethod
    def _make(cls, partner: tuple) -> 'BrauerDiagram':
        d = object.__new__(cls)
        d.n = len(partner) // 2
        d.partner = partner
        d._hash = hash(partner)
        return d

    def __eq__(self, other):
        return isinstance(other, BrauerDiagram) and self.partner == other.partner

    def __hash__(self):
        return self._hash

    def __repr__(self):
        pairs = sorted({tuple(sorted((i, j))) for i, j in enumerate(self.partner)})
        def dot(i):
            return f't{i + 1}' if i < self.n else f'b{i - self.n + 1}'
        return '<' + ' '.join(f'{dot(i)}-{dot(j)}' for i, j in pairs) + '>'

    def is_permutation(self) -> bool:
        """True when every edge goes from the top row to the bottom row."""
        n = self.n
        return all(self.partner[i] >= n for i in range(n))

    def to_json(self) -> dict:
        return {'n': self.n, 'partner': [p + 1 for p in self.partner]}

    @classmethod
    def from_json(cls, data: dict) -> 'BrauerDiagram':
        d = cls([p - 1 for p in data['partner']])
        if d.n != data['n']:
            raise ValueError('inconsistent diagram size')
        return d


def identity_diagram(n: int) -> BrauerDiagram:
    return BrauerDiagram._make(tuple(list(range(n, 2 * n)) + list(range(n))))


def transposition_diagram(n: int, i: int, j: int) -> BrauerDiagram:
    """The diagram of the transposition swapping strands i and j (1-based)."""
    if not 1 <= i < j <= n:
        raise IndexOutOfRange(f'need 1 <= i < j <= n, got i={i}, j={j}, n={n}')
    partner = list(range(n, 2 * n)) + list(range(n))
    i -= 1
    j -= 1
    partner[i], partner[j] = n + j, n + i
    partner[n + i], partner[n + j] = j, i
    return BrauerDiagram._make(tuple(partner))


def contraction_diagram(n: int, i: int, j: int) -> BrauerDiagram:
    """The diagram joining top i to top j and bottom i to bottom j (1-based)."""
    if not 1 <= i < j <= n:
        raise IndexOutOfRange(f'need 1 <= i < j <= n, got i={i}, j={j}, n={n}')
    partner = list(range(n, 2 * n)) + list(range(n))
    i -= 1
    j -= 1
    partner[i], partner[j] = j, i
    partner[n + i], partner[n + j] = n + j, n + i
    return BrauerDiagram._make(tuple(partner))


def generator(n: int, kind: str, i: int | None = None, j: int | None = None) -> BrauerDiagram:
    """Named generator diagrams: identity, s(i), e(i), s(i,j), e(i,j).

    With a single index, s(i)/e(i) act on the adjacent strands i, i+1;
    with two indices they are the distant versions s(i,j)/e(i,j).
    """
    if kind == 'identity':
        return identity_diagram(n)
    if kind not in ('s', 'e'):
        raise ValueError(f'unknown generator kind {kind!r}')
    if i is None:
        raise IndexOutOfRange(f'{kind}() needs at least one index')
    if j is None:
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f'{kind}({i}) needs 1 <= i <= {n - 1}')
        j = i + 1
    make = transposition_diagram if kind == 's' else contraction_diagram
    return make(n, i, j)


@lru_cache(maxsize=1 << 20)
def _multiply_partners(p1: tuple, p2: tuple) -> tuple[tuple, int]:
    n = len(p1) // 2
    partner = [-1] * (2 * n)
    seen_mid = [False] * n

    def trace_top(t: int) -> int:
        x = p1[t]
        while x >= n:           # crossed into the glued middle row via d1
            seen_mid[x - n] = True
            y = p2[x - n]
            if y >= n:
                return y        # exits at the bottom of d2
            seen_mid[y] = True
            x = p1[y + n]
        return x                # exits at the top of d1

    def trace_bottom(b: int) -> int:
        y = p2[n + b]
        while y < n:            # crossed into the middle row via d2
            seen_mid[y] = True
            x = p1[y + n]
            if x < n:
                return x        # exits at the top of d1
            seen_mid[x - n] = True
            y = p2[x - n]
        return y

    for t in range(n):
        if partner[t] == -1:
            end = trace_top(t)
            partner[t] = end
            partner[end] = t
    for b in range(n):
        if partner[n + b] == -1:
            end = trace_bottom(b)
            partner[n + b] = end
            partner[end] = n + b

    loops = 0
    for m in range(n):
        if seen_mid[m]:
            continue
        loops += 1
        cur = m
        while not seen_mid[cur]:
            seen_mid[cur] = True
            nxt = p1[n + cur] - n   # d1 edge inside the middle row
            seen_mid[nxt] = True
            cur = p2[nxt]           # d2 edge inside the middle row
    return tuple(partner), loops


def multiply(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Concatenate d1 over d2; returns the resulting diagram and the number
    of closed loops swallowed by the contraction."""
    if d1.n != d2.n:
        raise SizeMismatch(f'cannot multiply diagrams on {d1.n} and {d2.n} strands')
    partner, loops = _multiply_partners(d1.partner, d2.partner)
    return BrauerDiagram._make(partner), loops


def enumerate_diagrams(n: int, bound: int = ENUMERATION_BOUND):
    """All fixed-point-free perfect matchings on 2n dots, in lexicographic
    order of their partner arrays."""
    if n > bound:
        raise BoundExceeded(f'n={n} exceeds the enumeration bound {bound}')
    partner = [-1] * (2 * n)

    def fill(start: int):
        while start < 2 * n and partner[start] != -1:
            start += 1
        if start == 2 * n:
            yield BrauerDiagram._make(tuple(partner))
            return
        for j in range(start + 1, 2 * n):
            if partner[j] == -1:
                partner[start], partner[j] = j, start
                yield from fill(start + 1)
                partner[start] = partner[j] = -1

    yield from fill(0)


def embed(d: BrauerDiagram, m: int) -> BrauerDiagram:
    """Regard a diagram on n strands as one on m >= n strands by appending
    vertical strands on the right."""
    n = d.n
    if m < n:
        raise ShrinkNotAllowed(f'cannot embed a {n}-diagram into {m} strands')
    if m == n:
        return d
    partner = [-1] * (2 * m)
    for i, j in enumerate(d.partner):
        src = i if i < n else m + (i - n)
        dst = j if j < n else m + (j - n)
        partner[src] = dst
    for k in range(n, m):
        partner[k] = m + k
        partner[m + k] = k
    return BrauerDiagram._make(tuple(partner))

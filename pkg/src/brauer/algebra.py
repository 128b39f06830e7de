"""Linear combinations of Brauer diagrams over an exact coefficient field.

An AlgebraElement is a sparse map from diagrams to nonzero coefficients.
Coefficients live in a field context from :mod:`brauer.fields`; which field
that is depends on the field mode (symbolic w versus a sampled residue
mod p) and on how many evaluation variables are currently alive, so the
element carries both the mode and the concrete field context.  Elements
are immutable; all arithmetic returns fresh objects.

Diagram products are pure matchings; the closed-loop count s turns into a
scalar factor w^s here, which is what makes this the Brauer algebra rather
than the partition category.
"""

from __future__ import annotations

import time

from .diagrams import (
    BrauerDiagram,
    contraction_diagram,
    embed,
    generator,
    identity_diagram,
    multiply,
    transposition_diagram,
)
from .errors import (
    FieldModeMismatch,
    IndexOutOfRange,
    ModularDegeneration,
    SizeMismatch,
)
from .fields import (
    ExactOmega,
    FieldMode,
    PrimeModular,
    mode_from_json,
    scalar_from_json,
    scalar_to_json,
    specialize_omega,
)
from .reports import VerificationReport


class AlgebraElement:
    __slots__ = ('n', 'mode', 'field', 'terms')

    def __init__(self, n: int, mode: FieldMode, field, terms: dict):
        self.n = n
        self.mode = mode
        self.field = field
        self.terms = {d: c for d, c in terms.items() if c}

    @classmethod
    def zero(cls, n: int, mode: FieldMode, field=None) -> 'AlgebraElement':
        return cls(n, mode, field or mode.scalar_field(), {})

    @classmethod
    def identity(cls, n: int, mode: FieldMode, field=None) -> 'AlgebraElement':
        field = field or mode.scalar_field()
        return cls(n, mode, field, {identity_diagram(n): field.one})

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, mode: FieldMode, field=None,
                     coeff=None) -> 'AlgebraElement':
        field = field or mode.scalar_field()
        if coeff is None:
            coeff = field.one
        return cls(d.n, mode, field, {d: coeff})

    # -- scalar plumbing -------------------------------------------------

    def _scalar(self, x):
        value = self.field.promote(x)
        if value is None:
            raise TypeError(f'cannot use {x!r} as a scalar over {self.field.name}')
        return value

    def omega(self):
        return self._scalar(self.mode.omega())

    def _compatible(self, other: 'AlgebraElement'):
        if self.n != other.n:
            raise SizeMismatch(f'elements live in B_{self.n} and B_{other.n}')
        if self.mode != other.mode or self.field is not other.field:
            raise FieldModeMismatch('elements have different coefficient fields')

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, AlgebraElement):
            self._compatible(other)
            out = dict(self.terms)
            for d, c in other.terms.items():
                acc = out.get(d)
                acc = c if acc is None else acc + c
                if acc:
                    out[d] = acc
                else:
                    out.pop(d, None)
            return AlgebraElement(self.n, self.mode, self.field, out)
        # scalars act as multiples of the identity diagram
        return self + AlgebraElement.identity(self.n, self.mode, self.field).scaled(other)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.n, self.mode, self.field,
                              {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, AlgebraElement):
            self._compatible(other)
            out = dict(self.terms)
            for d, c in other.terms.items():
                acc = out.get(d)
                acc = -c if acc is None else acc - c
                if acc:
                    out[d] = acc
                else:
                    out.pop(d, None)
            return AlgebraElement(self.n, self.mode, self.field, out)
        return self + (-self._scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, x) -> 'AlgebraElement':
        x = self._scalar(x)
        if not x:
            return AlgebraElement.zero(self.n, self.mode, self.field)
        return AlgebraElement(self.n, self.mode, self.field,
                              {d: c * x for d, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return element_mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __truediv__(self, other):
        return self.scaled(self.field.one / self._scalar(other))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.n == other.n and self.mode == other.mode
                and self.field is other.field and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, d: BrauerDiagram):
        return self.terms.get(d, self.field.zero)

    def support_sorted(self) -> list[BrauerDiagram]:
        return sorted(self.terms, key=lambda d: d.partner)

    def __repr__(self):
        if not self.terms:
            return '0'
        bits = [f'({c})*{d}' for d, c in
                sorted(self.terms.items(), key=lambda it: it[0].partner)]
        return ' + '.join(bits)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        terms = [{'diagram': d.to_json(), 'coeff': scalar_to_json(c)}
                 for d, c in sorted(self.terms.items(), key=lambda it: it[0].partner)]
        return {'n': self.n, 'mode': self.mode.to_json(), 'terms': terms}

    @classmethod
    def from_json(cls, data: dict, field=None) -> 'AlgebraElement':
        mode = mode_from_json(data['mode'])
        field = field or mode.scalar_field()
        terms = {}
        for item in data['terms']:
            d = BrauerDiagram.from_json(item['diagram'])
            terms[d] = scalar_from_json(item['coeff'], field)
        return cls(data['n'], mode, field, terms)


def element_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of diagram concatenation; each closed loop
    contributes one factor of the loop scalar."""
    a._compatible(b)
    omega_pows = [a.field.one]

    def omega_power(s: int):
        while len(omega_pows) <= s:
            omega_pows.append(omega_pows[-1] * omega_pows[1] if len(omega_pows) > 1
                              else a.omega())
        return omega_pows[s]

    out: dict = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d3, loops = multiply(d1, d2)
            coeff = c1 * c2
            if loops:
                coeff = coeff * omega_power(loops)
            acc = out.get(d3)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[d3] = acc
            else:
                out.pop(d3, None)
    return AlgebraElement(a.n, a.mode, a.field, out)


def is_idempotent(a: AlgebraElement) -> bool:
    return element_mul(a, a) == a


def embed_element(a: AlgebraElement, m: int) -> AlgebraElement:
    """Image of an element of B_n inside B_m under the standard inclusion."""
    if m == a.n:
        return a
    return AlgebraElement(m, a.mode, a.field,
                          {embed(d, m): c for d, c in a.terms.items()})


def _check_modular_bound(n: int, mode: FieldMode):
    if isinstance(mode, PrimeModular) and mode.p <= 2 * n:
        raise ModularDegeneration(
            f'prime {mode.p} is too small for B_{n}: need p > {2 * n}')


def jucys_murphy(n: int, r: int, mode: FieldMode = ExactOmega()) -> AlgebraElement:
    """The r-th Jucys-Murphy element of B_n: half the loop parameter minus
    a half, plus the transpositions-minus-contractions sum over k < r."""
    if not 1 <= r <= n:
        raise IndexOutOfRange(f'need 1 <= r <= {n}, got {r}')
    _check_modular_bound(n, mode)
    field = mode.scalar_field()
    shift = (field.promote(mode.omega()) - 1) / 2
    terms = {identity_diagram(n): shift}
    one = field.one
    for k in range(1, r):
        terms[transposition_diagram(n, k, r)] = one
        terms[contraction_diagram(n, k, r)] = -one
    return AlgebraElement(n, mode, field, terms)


def jm_variant(n: int, m: int, mode: FieldMode = ExactOmega()) -> AlgebraElement:
    """The element of B_m built like the n-th Jucys-Murphy element but with
    all mixed strands attached to strand m instead of strand n."""
    if not 1 <= n <= m:
        raise IndexOutOfRange(f'need 1 <= n <= m, got n={n}, m={m}')
    _check_modular_bound(m, mode)
    field = mode.scalar_field()
    shift = (field.promote(mode.omega()) - 1) / 2
    terms = {identity_diagram(m): shift}
    one = field.one
    for k in range(1, n):
        terms[transposition_diagram(m, k, m)] = one
        terms[contraction_diagram(m, k, m)] = -one
    return AlgebraElement(n=m, mode=mode, field=field, terms=terms)


def specialize_element(a: AlgebraElement, mode: PrimeModular) -> AlgebraElement:
    """Specialize an exact element coefficient-wise to a modular run."""
    if not isinstance(a.mode, ExactOmega):
        raise FieldModeMismatch('can only specialize exact elements')
    field = mode.scalar_field()
    return AlgebraElement(a.n, mode, field,
                          {d: specialize_omega(c, mode) for d, c in a.terms.items()})


def proportionality_ratio(candidate: AlgebraElement, reference: AlgebraElement):
    """The scalar q with candidate = q * reference, or None if there is none.

    The ratio is read off the first nonzero coefficient of the reference
    (in canonical diagram order) and then verified globally.
    """
    candidate._compatible(reference)
    if reference.is_zero():
        return None
    d0 = reference.support_sorted()[0]
    ratio = candidate.coefficient(d0) / reference.terms[d0]
    if candidate == reference.scaled(ratio):
        return ratio
    return None


# -- presentation checks -------------------------------------------------

def verify_presentation(n: int, mode: FieldMode = ExactOmega()) -> VerificationReport:
    """Check every defining relation of the algebra on generator diagrams."""
    if n < 2:
        raise IndexOutOfRange('the presentation needs n >= 2')
    _check_modular_bound(n, mode)
    field = mode.scalar_field()
    started = time.perf_counter()
    report = VerificationReport(suite='presentation')

    def elem(d):
        return AlgebraElement.from_diagram(d, mode, field)

    one = AlgebraElement.identity(n, mode, field)
    omega = field.promote(mode.omega())
    s = {i: elem(generator(n, 's', i)) for i in range(1, n)}
    e = {i: elem(generator(n, 'e', i)) for i in range(1, n)}

    for i in range(1, n):
        report.check('s_i^2 = 1', f'n={n} i={i}', s[i] * s[i] == one)
        report.check('e_i^2 = w e_i', f'n={n} i={i}', e[i] * e[i] == e[i].scaled(omega))
        report.check('s_i e_i = e_i', f'n={n} i={i}', s[i] * e[i] == e[i])
        report.check('e_i s_i = e_i', f'n={n} i={i}', e[i] * s[i] == e[i])
    for i in range(1, n):
        for j in range(i + 2, n):
            report.check('s_i s_j = s_j s_i', f'n={n} i={i} j={j}',
                         s[i] * s[j] == s[j] * s[i])
            report.check('e_i e_j = e_j e_i', f'n={n} i={i} j={j}',
                         e[i] * e[j] == e[j] * e[i])
            report.check('s_i e_j = e_j s_i', f'n={n} i={i} j={j}',
                         s[i] * e[j] == e[j] * s[i])
            report.check('s_j e_i = e_i s_j', f'n={n} i={i} j={j}',
                         s[j] * e[i] == e[i] * s[j])
    for i in range(1, n - 1):
        report.check('s_i s_i+1 s_i = s_i+1 s_i s_i+1', f'n={n} i={i}',
                     s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1])
        report.check('e_i e_i+1 e_i = e_i', f'n={n} i={i}',
                     e[i] * e[i + 1] * e[i] == e[i])
        report.check('e_i+1 e_i e_i+1 = e_i+1', f'n={n} i={i}',
                     e[i + 1] * e[i] * e[i + 1] == e[i + 1])
        report.check('s_i e_i+1 e_i = s_i+1 e_i', f'n={n} i={i}',
                     s[i] * e[i + 1] * e[i] == s[i + 1] * e[i])
        report.check('e_i+1 e_i s_i+1 = e_i+1 s_i', f'n={n} i={i}',
                     e[i + 1] * e[i] * s[i + 1] == e[i + 1] * s[i])
    report.wall_time = time.perf_counter() - started
    return report

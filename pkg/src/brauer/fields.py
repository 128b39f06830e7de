"""Exact coefficient arithmetic: rationals, prime fields, polynomials and
fraction fields stacked into towers.

Representation conventions:

- Scalars of Q are stdlib ``fractions.Fraction``; scalars of GF(p) are ``Fp``.
- A ``Polynomial`` stores a tuple of coefficients in ascending degree order
  with no trailing zeros (the zero polynomial is the empty tuple), plus the
  field context its coefficients live in.
- A ``RationalFunction`` is always kept in canonical form: numerator and
  denominator coprime, denominator monic.  Equality is therefore structural.
- Field contexts (``QQ``, ``PrimeField(p)``, ``FractionField(base, var)``)
  are interned, so two contexts describing the same field are the same
  object and elements can be promoted across tower levels cheaply.

The two-level tower used throughout the package is Q -> Q(w) -> Q(w)(u):
the indeterminate of the algebra lives at level one, the evaluation
variable of the fusion procedure at level two.  Deeper towers (several
evaluation variables) work the same way.  In modular mode the bottom two
levels collapse to GF(p) with w specialized to a sampled residue, and u
stays symbolic: GF(p) -> GF(p)(u).

All values are immutable after construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

from .errors import (
    InversionOfZero,
    ModularDegeneration,
    PoleAtEvaluationPoint,
    ZeroInput,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any desk-scale prime."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """Element of the prime field GF(p)."""

    __slots__ = ('value', 'p')

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f'mixed prime fields GF({self.p}), GF({other.p})')
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Fp(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Fp(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Fp(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise InversionOfZero(f'division by zero in GF({self.p})')
        return Fp(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise InversionOfZero(f'division by zero in GF({self.p})')
        return Fp(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            if self.value == 0:
                raise InversionOfZero(f'zero has no negative power in GF({self.p})')
            return Fp(pow(self.value, e, self.p), self.p)
        return Fp(pow(self.value, e, self.p), self.p)

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __eq__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f'{self.value}'


class RationalField:
    """The field Q; elements are ``fractions.Fraction``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    zero = Fraction(0)
    one = Fraction(1)
    name = 'Q'

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def promote(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        return None

    def __repr__(self):
        return 'Q'


QQ = RationalField()


class PrimeField:
    """The field GF(p) for an odd prime p; elements are ``Fp``."""

    _cache: dict = {}

    def __new__(cls, p: int):
        inst = cls._cache.get(p)
        if inst is None:
            if not is_prime(p):
                raise ValueError(f'{p} is not prime')
            if p == 2:
                raise ValueError('GF(2) is unusable here: contents divide by 2')
            inst = super().__new__(cls)
            inst.p = p
            inst.zero = Fp(0, p)
            inst.one = Fp(1, p)
            inst.name = f'GF({p})'
            cls._cache[p] = inst
        return inst

    def from_int(self, k: int) -> Fp:
        return Fp(k, self.p)

    def promote(self, x):
        if isinstance(x, Fp):
            return x if x.p == self.p else None
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return None

    def __repr__(self):
        return self.name


class Polynomial:
    """Univariate polynomial with coefficients in a fixed field context.

    ``coeffs`` is an ascending-degree tuple with a nonzero last entry;
    the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ('coeffs', 'field')

    def __init__(self, coeffs, field):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field

    @classmethod
    def _make(cls, coeffs: tuple, field) -> 'Polynomial':
        # internal fast path: caller guarantees no trailing zeros
        poly = object.__new__(cls)
        poly.coeffs = coeffs
        poly.field = field
        return poly

    @classmethod
    def const(cls, value, field) -> 'Polynomial':
        return cls((value,), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroInput('zero polynomial has no leading coefficient')
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __neg__(self):
        return Polynomial._make(tuple(-c for c in self.coeffs), self.field)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.field)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = list(self.coeffs)
        bb = other.coeffs
        if len(bb) > len(out):
            zero = self.field.zero
            out.extend([zero] * (len(bb) - len(out)))
        for i, c in enumerate(bb):
            out[i] = out[i] - c
        return Polynomial(out, self.field)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._make((), self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out, self.field)

    def scale(self, s) -> 'Polynomial':
        if not s:
            return Polynomial._make((), self.field)
        return Polynomial._make(tuple(c * s for c in self.coeffs), self.field)

    def monic(self) -> 'Polynomial':
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == self.field.one:
            return self
        return self.scale(self.field.one / lead)

    def __divmod__(self, other: 'Polynomial'):
        if other.is_zero():
            raise InversionOfZero('polynomial division by zero')
        field = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = field.one / other.coeffs[-1]
        quot = [field.zero] * max(len(rem) - db, 0)
        bb = other.coeffs
        while len(rem) - 1 >= db and rem:
            factor = rem[-1] * inv_lead
            pos = len(rem) - 1 - db
            quot[pos] = factor
            rem.pop()
            for i in range(db):
                rem[pos + i] = rem[pos + i] - factor * bb[i]
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(quot, field), Polynomial(rem, field)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def evaluate(self, point):
        """Horner evaluation at a point of the coefficient field."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __str__(self):
        return poly_str(self, getattr(self.field, '_child_var', 'x'))

    __repr__ = __str__


# -- gcd ---------------------------------------------------------------

def _int_content(coeffs: list) -> int:
    g = 0
    for c in coeffs:
        g = _int_gcd(g, c)
        if g == 1:
            break
    return g or 1


def _int_primitive(coeffs: list) -> list:
    if not coeffs:
        return coeffs
    g = _int_content(coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (up to association)."""
    db = len(b) - 1
    lead_b = b[-1]
    rem = list(a)
    while rem and len(rem) - 1 >= db:
        coef = rem[-1]
        rem = [lead_b * c for c in rem[:-1]]
        shift = len(rem) - db
        for i in range(db):
            rem[shift + i] -= coef * b[i]
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _gcd_over_q(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q via a primitive pseudo-remainder sequence over Z."""
    def clear(p: Polynomial) -> list:
        den = 1
        for c in p.coeffs:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return _int_primitive([int(c * den) for c in p.coeffs])

    u, v = clear(a), clear(b)
    if len(u) < len(v):
        u, v = v, u
    while v:
        u, v = v, _int_primitive(_int_prem(u, v))
    lead = u[-1]
    return Polynomial._make(tuple(Fraction(c, lead) for c in u), QQ)


def _gcd_over_fp(a: Polynomial, b: Polynomial, p: int) -> Polynomial:
    u = [c.value for c in a.coeffs]
    v = [c.value for c in b.coeffs]
    while v:
        # u mod v in GF(p)
        inv = pow(v[-1], -1, p)
        dv = len(v) - 1
        rem = list(u)
        while rem and len(rem) - 1 >= dv:
            factor = rem[-1] * inv % p
            rem.pop()
            pos = len(rem) - dv
            for i in range(dv):
                rem[pos + i] = (rem[pos + i] - factor * v[i]) % p
            while rem and rem[-1] == 0:
                rem.pop()
        u, v = v, rem
    inv = pow(u[-1], -1, p)
    return Polynomial._make(tuple(Fp(c * inv, p) for c in u), a.field)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials over a common coefficient field."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    field = a.field
    if field is QQ:
        return _gcd_over_q(a, b)
    if isinstance(field, PrimeField):
        return _gcd_over_fp(a, b, field.p)
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()   # keep coefficient growth down at higher tower levels
    return a.monic()


# -- polynomial rings ----------------------------------------------------

class PolynomialRing:
    """Context for polynomials in one variable over a base context.

    Unlike a fraction field this supports no division, so towers of these
    stay gcd-free: products and evaluations cost plain ring operations.
    Used to keep several evaluation variables alive at once.
    """

    _cache: dict = {}

    def __new__(cls, base, var: str):
        key = (id(base), var)
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.base = base
            inst.var = var
            base._child_var = var
            inst.zero = Polynomial._make((), base)
            inst.one = Polynomial._make((base.one,), base)
            inst.gen = Polynomial._make((base.zero, base.one), base)
            inst.name = f'{base.name}[{var}]'
            cls._cache[key] = inst
        return inst

    def from_int(self, k: int) -> 'Polynomial':
        if k == 0:
            return self.zero
        return Polynomial._make((self.base.from_int(k),), self.base)

    def promote(self, x):
        if isinstance(x, Polynomial) and x.field is self.base:
            return x
        inner = self.base.promote(x)
        if inner is None:
            return None
        if not inner:
            return self.zero
        return Polynomial._make((inner,), self.base)

    def __repr__(self):
        return self.name


# -- fraction fields ---------------------------------------------------

class FractionField:
    """Field of fractions of polynomials in one variable over a base field.

    Instances are interned on (base, var), so identity comparison is the
    right notion of "same field".
    """

    _cache: dict = {}

    def __new__(cls, base, var: str):
        key = (id(base), var)
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.base = base
            inst.var = var
            base._child_var = var   # lets polynomials print their variable
            one_poly = Polynomial._make((base.one,), base)
            inst._one_poly = one_poly
            inst.zero = RationalFunction._make(Polynomial._make((), base), one_poly, inst)
            inst.one = RationalFunction._make(one_poly, one_poly, inst)
            inst.gen = RationalFunction._make(
                Polynomial._make((base.zero, base.one), base), one_poly, inst)
            inst.name = f'{base.name}({var})'
            cls._cache[key] = inst
        return inst

    def poly(self, coeffs) -> Polynomial:
        return Polynomial([self.coerce_scalar(c) for c in coeffs], self.base)

    def coerce_scalar(self, c):
        value = self.base.promote(c)
        if value is None:
            raise TypeError(f'cannot interpret {c!r} as an element of {self.base.name}')
        return value

    def from_poly(self, num: Polynomial) -> 'RationalFunction':
        return RationalFunction._make(num, self._one_poly, self)

    def from_int(self, k: int) -> 'RationalFunction':
        if k == 0:
            return self.zero
        if k == 1:
            return self.one
        return self.from_poly(Polynomial._make((self.base.from_int(k),), self.base))

    def ratio(self, num, den) -> 'RationalFunction':
        return RationalFunction(self.poly(num), self.poly(den), self)

    def promote(self, x):
        if isinstance(x, RationalFunction):
            if x.field is self:
                return x
            inner = self.base.promote(x)
            if inner is None:
                return None
            return self.from_poly(Polynomial._make((inner,), self.base))
        if isinstance(x, Polynomial) and x.field is self.base:
            return self.from_poly(x)
        inner = self.base.promote(x)
        if inner is None:
            return None
        if not inner:
            return self.zero
        return self.from_poly(Polynomial._make((inner,), self.base))

    def __repr__(self):
        return self.name


class RationalFunction:
    """Quotient of two polynomials, always in canonical form.

    Canonical means gcd(num, den) = 1 and den monic, so two equal values
    have identical representations and ``==`` is a structural comparison.
    """

    __slots__ = ('num', 'den', 'field')

    def __init__(self, num: Polynomial, den: Polynomial, field: FractionField):
        if den.is_zero():
            raise InversionOfZero(f'zero denominator in {field.name}')
        if num.is_zero():
            den = field._one_poly
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.coeffs[-1]
            if lead != den.field.one:
                inv = den.field.one / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self.field = field

    @classmethod
    def _make(cls, num: Polynomial, den: Polynomial, field) -> 'RationalFunction':
        # internal fast path: caller guarantees canonical form
        rf = object.__new__(cls)
        rf.num = num
        rf.den = den
        rf.field = field
        return rf

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __eq__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den, self.field)

    def __add__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        if not self.num.coeffs:
            return other
        if not other.num.coeffs:
            return self
        if self.den.coeffs == other.den.coeffs:
            return RationalFunction(self.num + other.num, self.den, self.field)
        return RationalFunction(
            self.num * other.den + other.num * self.den,
            self.den * other.den, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        if not self.num.coeffs or not other.num.coeffs:
            return self.field.zero
        a_num, a_den = self.num, self.den
        b_num, b_den = other.num, other.den
        if a_den.degree == 0 and b_den.degree == 0:
            return RationalFunction._make(a_num * b_num, self.field._one_poly, self.field)
        g1 = poly_gcd(a_num, b_den)
        if g1.degree > 0:
            a_num = a_num // g1
            b_den = b_den // g1
        g2 = poly_gcd(b_num, a_den)
        if g2.degree > 0:
            b_num = b_num // g2
            a_den = a_den // g2
        num = a_num * b_num
        den = a_den * b_den
        lead = den.coeffs[-1]
        if lead != den.field.one:
            inv = den.field.one / lead
            num = num.scale(inv)
            den = den.scale(inv)
        return RationalFunction._make(num, den, self.field)

    __rmul__ = __mul__

    def inverse(self) -> 'RationalFunction':
        if not self.num.coeffs:
            raise InversionOfZero(f'inversion of zero in {self.field.name}')
        num, den = self.den, self.num
        lead = den.coeffs[-1]
        if lead != den.field.one:
            inv = den.field.one / lead
            num = num.scale(inv)
            den = den.scale(inv)
        return RationalFunction._make(num, den, self.field)

    def __truediv__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self.field.promote(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e == 0:
            return self.field.one
        base = self if e > 0 else self.inverse()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def __str__(self):
        num = poly_str(self.num, self.field.var)
        if self.den.degree == 0 and self.den.coeffs[0] == self.den.field.one:
            return num
        den = poly_str(self.den, self.field.var)
        return f'({num})/({den})'

    __repr__ = __str__


def rf_arith(a: RationalFunction, b, op: str) -> RationalFunction:
    """Functional entry point for field arithmetic: op in add|mul|inv|neg.

    ``inv`` and ``neg`` are unary; ``b`` is ignored for them.
    """
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'inv':
        return a.inverse()
    if op == 'neg':
        return -a
    raise ValueError(f'unknown operation {op!r}')


# -- valuations and regularized evaluation -----------------------------

def root_multiplicity(poly: Polynomial, point) -> tuple[int, Polynomial]:
    """Order of vanishing of a polynomial at a point, plus the cofactor.

    Returns (m, q) with poly = (x - point)^m * q and q(point) != 0, using
    repeated synthetic division.
    """
    if poly.is_zero():
        raise ZeroInput('zero polynomial has infinite vanishing order')
    field = poly.field
    mult = 0
    coeffs = list(poly.coeffs)
    while True:
        # synthetic division by (x - point)
        quotient = [field.zero] * (len(coeffs) - 1)
        acc = field.zero
        for i in range(len(coeffs) - 1, 0, -1):
            acc = coeffs[i] + point * acc
            quotient[i - 1] = acc
        remainder = coeffs[0] + point * acc
        if remainder:
            break
        mult += 1
        coeffs = quotient
        if not coeffs:   # poly was a power of (x - point) times a unit
            break
    return mult, Polynomial(coeffs, field)


def valuation_at(f: RationalFunction, point) -> int:
    """Order of vanishing of f at the point; negative means a pole."""
    if f.is_zero():
        raise ZeroInput('valuation of the zero function is undefined')
    point = f.field.base.promote(point)
    m_num, _ = root_multiplicity(f.num, point)
    m_den, _ = root_multiplicity(f.den, point)
    return m_num - m_den


def shift_and_eval(f: RationalFunction, point, power: int):
    """Exact value of (x - point)^power * f at x = point.

    Zero when the shift overshoots the pole order; raises
    PoleAtEvaluationPoint when it undershoots.
    """
    base = f.field.base
    point = base.promote(point)
    if f.is_zero():
        return base.zero
    m_num, num0 = root_multiplicity(f.num, point)
    m_den, den0 = root_multiplicity(f.den, point)
    total = m_num - m_den + power
    if total < 0:
        raise PoleAtEvaluationPoint(
            f'pole of order {m_den - m_num} exceeds shift exponent {power}')
    if total > 0:
        return base.zero
    return num0.evaluate(point) / den0.evaluate(point)


# -- field modes --------------------------------------------------------

OMEGA_FIELD = FractionField(QQ, 'w')
OMEGA = OMEGA_FIELD.gen


@dataclass(frozen=True)
class ExactOmega:
    """Work over Q(w) with the loop parameter kept symbolic."""

    def scalar_field(self) -> FractionField:
        return OMEGA_FIELD

    def omega(self) -> RationalFunction:
        return OMEGA

    def key(self) -> str:
        return 'exact'

    def to_json(self) -> dict:
        return {'kind': 'exact'}


@dataclass(frozen=True)
class PrimeModular:
    """Work over GF(p) with the loop parameter specialized to a residue.

    Probabilistic cross-check mode: identities that hold over Q(w) must
    survive specialization whenever no checked denominator vanishes mod p.
    """

    p: int
    omega_value: int

    def __post_init__(self):
        PrimeField(self.p)   # validates primality
        if not 0 <= self.omega_value < self.p:
            raise ValueError('omega residue out of range')

    @classmethod
    def sample(cls, p: int, seed: int) -> 'PrimeModular':
        """Draw the residue for w uniformly from [2, p-2], reproducibly."""
        return cls(p, random.Random(seed).randint(2, p - 2))

    def scalar_field(self) -> PrimeField:
        return PrimeField(self.p)

    def omega(self) -> Fp:
        return Fp(self.omega_value, self.p)

    def key(self) -> tuple:
        return ('modp', self.p, self.omega_value)

    def to_json(self) -> dict:
        return {'kind': 'modp', 'p': self.p, 'omega': self.omega_value}


FieldMode = ExactOmega | PrimeModular


def mode_from_json(data: dict) -> FieldMode:
    if data['kind'] == 'exact':
        return ExactOmega()
    if data['kind'] == 'modp':
        return PrimeModular(data['p'], data['omega'])
    raise ValueError(f'unknown field mode {data!r}')


def u_field(mode: FieldMode) -> FractionField:
    """The evaluation-variable extension of the mode's scalar field."""
    return FractionField(mode.scalar_field(), 'u')


def specialize_omega(x: RationalFunction, mode: PrimeModular):
    """Map an element of Q(w) to GF(p) by substituting the sampled residue.

    Raises ModularDegeneration when the denominator vanishes mod p.
    """
    fp = PrimeField(mode.p)
    w0 = mode.omega()

    def ev(poly: Polynomial) -> Fp:
        acc = fp.zero
        for c in reversed(poly.coeffs):
            acc = acc * w0 + fp.promote(c)
        return acc

    den = ev(x.den)
    if not den:
        raise ModularDegeneration(
            f'denominator {x.den} vanishes at w={mode.omega_value} mod {mode.p}')
    return ev(x.num) / den


# -- text and JSON forms -------------------------------------------------

def fraction_to_str(x: Fraction) -> str:
    return f'{x.numerator}/{x.denominator}'


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def scalar_to_json(x):
    """Canonical serialization of a scalar at any tower level."""
    if isinstance(x, Fraction):
        return fraction_to_str(x)
    if isinstance(x, Fp):
        return x.value
    if isinstance(x, RationalFunction):
        return {'num': [scalar_to_json(c) for c in x.num.coeffs],
                'den': [scalar_to_json(c) for c in x.den.coeffs]}
    raise TypeError(f'cannot serialize {x!r}')


def scalar_from_json(data, field):
    """Inverse of scalar_to_json, targeting the given field context."""
    if isinstance(field, RationalField):
        return Fraction(data)
    if isinstance(field, PrimeField):
        return Fp(int(data), field.p)
    if isinstance(field, FractionField):
        num = Polynomial([scalar_from_json(c, field.base) for c in data['num']], field.base)
        den = Polynomial([scalar_from_json(c, field.base) for c in data['den']], field.base)
        return RationalFunction(num, den, field)
    raise TypeError(f'unknown field {field!r}')


def _coeff_str(c) -> str:
    s = str(c.numerator) if isinstance(c, Fraction) and c.denominator == 1 else str(c)
    if isinstance(c, RationalFunction) and (c.num.degree > 0 or c.den.degree > 0):
        return f'({s})'
    if '/' in s and not s.startswith('('):
        return f'({s})'
    return s


def poly_str(p: Polynomial, var: str) -> str:
    if p.is_zero():
        return '0'
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = ''
        if isinstance(c, Fraction) and c < 0:
            sign, c = '-', -c
        if k == 0:
            term = str(c) if isinstance(c, Fraction) else _coeff_str(c)
        else:
            head = var if k == 1 else f'{var}^{k}'
            if c == p.field.one:
                term = head
            else:
                term = f'{_coeff_str(c)}*{head}'
        parts.append(sign + term)
    out = parts[0]
    for term in parts[1:]:
        out += f' - {term[1:]}' if term.startswith('-') else f' + {term}'
    return out

"""Primitive idempotents of the Brauer algebra, two independent ways.

The recurrence construction multiplies the previous idempotent by rational
expressions in the next Jucys-Murphy element, one factor per addable or
removable box of the intermediate shape.  The fusion construction evaluates
a product of R-matrix style factors consecutively at the contents of the
tableau, regularizing each evaluation with the step's exponent.  Both are
exact; their agreement on every tableau is the package's central check.

Fusion is implemented only in the incremental factorized order: at step r
the running product (a u-free element) is multiplied by the factors that
involve the step variable, and the variable is then eliminated by a
regularized evaluation.  The raw lexicographic double product is exercised
separately at numeric points by factorization_check.

Internally a fusion step keeps all coefficients as u-polynomial numerators
over one shared denominator, so no gcd normalization happens inside the
multiplication loop; valuations at the evaluation point are read off by
synthetic division at the end of the step.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Optional

from .algebra import (
    AlgebraElement,
    element_mul,
    jm_variant,
    jucys_murphy,
    proportionality_ratio,
    _check_modular_bound,
)
from .diagrams import (
    BrauerDiagram,
    contraction_diagram,
    multiply,
    transposition_diagram,
    _multiply_partners,
)
from .errors import (
    ContentCollision,
    CrossCheckFailed,
    DegenerateParameters,
    DegeneratePoints,
    IndexOutOfRange,
    ModularDegeneration,
    NotAllAdditions,
    NotProportional,
    PoleAtEvaluationPoint,
    SizeMismatch,
    ZeroInput,
    ZeroValue,
)
from .fields import (
    ExactOmega,
    FieldMode,
    FractionField,
    OMEGA_FIELD,
    Polynomial,
    PolynomialRing,
    PrimeModular,
    QQ,
    poly_gcd,
    root_multiplicity,
    scalar_from_json,
    scalar_to_json,
    shift_and_eval,
    specialize_omega,
    u_field,
    valuation_at,
)
from .reports import VerificationReport
from .tableaux import (
    ContentSymbol,
    UpdownTableau,
    boxes_with_contents,
    contents,
    enumerate_updown,
    exponents,
    f_constant,
)


@dataclass
class IdempotentResult:
    tableau: UpdownTableau
    element: AlgebraElement
    constant: object                 # fusion scalar; the field's one for the recurrence
    method: str                      # 'recurrence' or 'fusion'
    seconds: float = 0.0
    orders: Optional[tuple[int, ...]] = None   # auto-detected shift orders (fusion)

    def to_json(self) -> dict:
        data = {'tableau': self.tableau.to_json(),
                'element': self.element.to_json(),
                'constant': scalar_to_json(self.constant),
                'method': self.method,
                'timing': self.seconds}
        if self.orders is not None:
            data['orders'] = list(self.orders)
        return data

    @classmethod
    def from_json(cls, data: dict) -> 'IdempotentResult':
        element = AlgebraElement.from_json(data['element'])
        constant = scalar_from_json(data['constant'], element.field)
        orders = tuple(data['orders']) if 'orders' in data else None
        return cls(UpdownTableau.from_json(data['tableau']), element, constant,
                   data['method'], data.get('timing', 0.0), orders)


# -- recurrence construction ----------------------------------------------

_recurrence_cache: dict = {}


def clear_caches():
    _recurrence_cache.clear()


def recurrence_element(shapes: tuple, ambient: int, mode: FieldMode) -> AlgebraElement:
    """The idempotent of a tableau prefix, embedded in the ambient algebra.

    Memoized on (prefix, ambient, mode) so that enumerations over many
    tableaux compute each shared prefix once.
    """
    key = (shapes, ambient, mode.key())
    cached = _recurrence_cache.get(key)
    if cached is not None:
        return cached
    r = len(shapes)
    if r == 0:
        elem = AlgebraElement.identity(ambient, mode)
    else:
        prev = recurrence_element(shapes[:-1], ambient, mode)
        tail = UpdownTableau(shapes)
        step = tail.steps()[-1]
        c = ContentSymbol(step.sign, step.diagonal).value(mode)
        mu = shapes[-2] if r >= 2 else ()
        add, rem = boxes_with_contents(mu)
        x = jucys_murphy(ambient, r, mode)
        elem = prev
        for box, sym in add + rem:
            if box == step.box and sym.sign == step.sign:
                continue
            a = sym.value(mode)
            denom = c - a
            if not denom:
                if isinstance(mode, PrimeModular):
                    raise ModularDegeneration(
                        f'content collision mod {mode.p} at step {r} of {tail.to_text()}')
                raise ContentCollision(f'coinciding contents at step {r}')
            elem = (elem * (x - a)) / denom
    _recurrence_cache[key] = elem
    return elem


def recurrence_idempotent(tableau: UpdownTableau,
                          mode: FieldMode = ExactOmega()) -> IdempotentResult:
    """Build the primitive idempotent of a tableau from the Jucys-Murphy
    recurrence."""
    n = len(tableau)
    if n < 1:
        raise ZeroInput('tableau must have at least one step')
    _check_modular_bound(n, mode)
    started = time.perf_counter()
    elem = recurrence_element(tableau.shapes, n, mode)
    return IdempotentResult(tableau, elem, mode.scalar_field().one, 'recurrence',
                            time.perf_counter() - started)


# -- fusion construction ---------------------------------------------------

class _EvaluationState:
    """Element whose coefficients are polynomial numerators in the variable
    being evaluated, over one shared denominator polynomial.

    The polynomial coefficients live in ``ring``: the scalar field for the
    ordinary fusion steps, or a polynomial ring holding the not-yet-touched
    evaluation variables.  Either way no gcd normalization ever runs inside
    the multiplication loop; pole orders are read off the numerators and
    the denominator by synthetic division when the variable is eliminated.
    """

    __slots__ = ('n', 'mode', 'ring', 'terms', 'den', 'omega_pows')

    def __init__(self, n: int, mode: FieldMode, ring, terms: dict, den: Polynomial):
        self.n = n
        self.mode = mode
        self.ring = ring
        self.terms = terms
        self.den = den
        self.omega_pows = [ring.one]

    @classmethod
    def from_scalars(cls, partial: AlgebraElement) -> '_EvaluationState':
        ring = partial.field
        return cls(partial.n, partial.mode, ring,
                   {d: Polynomial.const(c, ring) for d, c in partial.terms.items()},
                   Polynomial.const(ring.one, ring))

    def _omega_power(self, s: int):
        pows = self.omega_pows
        while len(pows) <= s:
            pows.append(pows[-1] * (pows[1] if len(pows) > 1
                                    else self.ring.promote(self.mode.omega())))
        return pows[s]

    def mul_one_plus(self, diagram: BrauerDiagram, numer, linear: Polynomial):
        """Multiply the state by (1 + numer * diagram / linear)."""
        new_terms: dict = {}
        for d, t in self.terms.items():
            grown = t * linear
            acc = new_terms.get(d)
            new_terms[d] = grown if acc is None else acc + grown
            d2, loops = multiply(d, diagram)
            contrib = t.scale(numer * self._omega_power(loops) if loops else numer)
            acc = new_terms.get(d2)
            new_terms[d2] = contrib if acc is None else acc + contrib
        self.terms = {d: t for d, t in new_terms.items() if t}
        self.den = self.den * linear

    def _measure(self, point, power, expected_den_mult=None):
        """Measure pole orders at the point; power=None means use the exact
        order, which may be negative when every coefficient vanishes there."""
        if not self.terms:
            raise ZeroValue('the running product vanished before evaluation')
        den_mult, den0 = root_multiplicity(self.den, point)
        if expected_den_mult is not None and den_mult != expected_den_mult:
            # a content combination that is nonzero symbolically vanished in
            # this specialization, inflating the denominator multiplicity
            raise ModularDegeneration(
                f'denominator multiplicity {den_mult} at the evaluation point '
                f'differs from the symbolic multiplicity {expected_den_mult}')
        measured = []
        order = None
        for d, t in self.terms.items():
            t_mult, t0 = root_multiplicity(t, point)
            pole = den_mult - t_mult
            if order is None or pole > order:
                order = pole
            measured.append((d, t_mult, t0))
        if power is None:
            power = order
        for d, t_mult, _ in measured:
            if t_mult - den_mult + power < 0:
                raise PoleAtEvaluationPoint(
                    f'coefficient pole of order {den_mult - t_mult} exceeds '
                    f'shift exponent {power}')
        return order, power, den_mult, den0, measured

    def shift_eval(self, point, power=None,
                   expected_den_mult=None) -> tuple[int, AlgebraElement]:
        """Value of (v - point)^power * state at v = point, dividing out the
        denominator; requires the coefficient ring to be a field."""
        order, power, den_mult, den0, measured = self._measure(
            point, power, expected_den_mult)
        d0_value = den0.evaluate(point)
        if not d0_value:
            # impossible symbolically: a content combination specialized to zero
            raise ModularDegeneration(
                'a content combination in the step denominator vanishes')
        out = {}
        for d, t_mult, t0 in measured:
            if t_mult - den_mult + power == 0:
                value = t0.evaluate(point) / d0_value
                if value:
                    out[d] = value
        return order, AlgebraElement(self.n, self.mode, self.ring, out)

    def shift_eval_descend(self, point, power=None) -> tuple[int, '_EvaluationState']:
        """Like shift_eval, but keeps the evaluated denominator unreduced and
        hands the remaining variables to a state one ring level down."""
        order, power, den_mult, den0, measured = self._measure(point, power)
        d0_value = den0.evaluate(point)
        if not d0_value:
            raise ModularDegeneration(
                'a content combination in the step denominator vanishes')
        terms = {}
        for d, t_mult, t0 in measured:
            if t_mult - den_mult + power == 0:
                value = t0.evaluate(point)
                if value:
                    terms[d] = value
        return order, _EvaluationState(self.n, self.mode, self.ring.base,
                                       terms, d0_value)


def _fusion_step_factors(n: int, r: int, cvals: list):
    """Factor data for step r: contraction factors with falling index, then
    transposition factors with rising index."""
    factors = []
    for k in range(r - 1, 0, -1):
        factors.append((contraction_diagram(n, k, r), (cvals[k - 1], +1)))
    for k in range(1, r):
        factors.append((transposition_diagram(n, k, r), (cvals[k - 1], -1)))
    return factors


def fusion_idempotent(tableau: UpdownTableau, mode: FieldMode = ExactOmega(),
                      cross_check: bool = True) -> IdempotentResult:
    """Build the primitive idempotent by regularized consecutive evaluation
    of the fusion product.

    The returned constant is the scalar relating the raw evaluated product
    to the idempotent; the element is the product divided by it.  With
    cross_check the element is compared against the recurrence construction
    and a mismatch raises CrossCheckFailed.
    """
    n = len(tableau)
    if n < 1:
        raise ZeroInput('tableau must have at least one step')
    _check_modular_bound(n, mode)
    started = time.perf_counter()
    field = mode.scalar_field()
    symbols = contents(tableau)
    cvals = [sym.value(mode) for sym in symbols]
    powers = exponents(tableau)
    partial = AlgebraElement.identity(n, mode)
    orders = [0]
    minus_one = -field.one
    for r in range(2, n + 1):
        state = _EvaluationState.from_scalars(partial)
        for diagram, (c_k, u_sign) in _fusion_step_factors(n, r, cvals):
            linear = Polynomial((c_k, field.one if u_sign > 0 else minus_one), field)
            state.mul_one_plus(diagram, minus_one, linear)
        # how often the step denominator vanishes at the point, symbolically
        sym_r = symbols[r - 1]
        den_mult = sum(1 for k in range(r - 1)
                       if symbols[k].diagonal == sym_r.diagonal
                       and symbols[k].sign == -sym_r.sign)
        den_mult += sum(1 for k in range(r - 1) if symbols[k] == sym_r)
        order, partial = state.shift_eval(cvals[r - 1], powers[r - 1], den_mult)
        orders.append(order)
    if partial.is_zero():
        raise ZeroValue(f'fusion product vanished for {tableau.to_text()}')

    f_exact, _ = f_constant(tableau)
    constant = (f_exact if isinstance(mode, ExactOmega)
                else specialize_omega(f_exact, mode))
    if not constant:
        raise ModularDegeneration(
            f'fusion constant vanishes mod {mode.p} for {tableau.to_text()}')
    element = partial / constant
    if cross_check:
        reference = recurrence_element(tableau.shapes, n, mode)
        if element != reference:
            raise CrossCheckFailed(
                f'fusion and recurrence disagree on {tableau.to_text()}')
    return IdempotentResult(tableau, element, constant, 'fusion',
                            time.perf_counter() - started, tuple(orders))


# -- generic regularized evaluation ----------------------------------------

def regularized_eval(element: AlgebraElement, point, power='auto'
                     ) -> tuple[int, AlgebraElement]:
    """Regularized evaluation of an element with coefficients one fraction
    field up: value of (var - point)^p * element at var = point.

    With power='auto' the minimal exponent making every coefficient regular
    is detected and returned; an explicit power errors when some
    coefficient still has a pole after the shift.
    """
    if element.is_zero():
        raise ZeroInput('cannot evaluate the zero element')
    field = element.field
    if not isinstance(field, FractionField):
        raise TypeError('element coefficients are not in a fraction field')
    base = field.base
    point = base.promote(point)
    if power == 'auto':
        # minimal shift making every coefficient regular; negative when all
        # coefficients vanish at the point
        power = max(-valuation_at(c, point) for c in element.terms.values())
    out = {}
    for d, c in element.terms.items():
        value = shift_and_eval(c, point, power)
        if value:
            out[d] = value
    return power, AlgebraElement(element.n, element.mode, base, out)


def lift_element(element: AlgebraElement, field: FractionField) -> AlgebraElement:
    """View an element inside an extension of its coefficient field."""
    return AlgebraElement(element.n, element.mode, field,
                          {d: field.promote(c) for d, c in element.terms.items()})


# -- symmetric group specialization ----------------------------------------

def symmetric_phi(tableau: UpdownTableau, mode: FieldMode = ExactOmega()
                  ) -> AlgebraElement:
    """Consecutive evaluation of the transposition-only fusion product for a
    standard tableau (encoded as an all-additions updown tableau), at the
    plain integer contents.

    The value is the hook product times the symmetric-group primitive
    idempotent, supported on permutation diagrams only.
    """
    if not tableau.is_all_additions():
        raise NotAllAdditions(f'{tableau.to_text()} contains a box removal')
    n = len(tableau)
    _check_modular_bound(n, mode)
    field = mode.scalar_field()
    diagonals = [step.diagonal for step in tableau.steps()]
    cvals = [field.from_int(k) for k in diagonals]
    partial = AlgebraElement.identity(n, mode)
    minus_one = -field.one
    for r in range(2, n + 1):
        state = _EvaluationState.from_scalars(partial)
        for k in range(1, r):
            linear = Polynomial((cvals[k - 1], minus_one), field)
            state.mul_one_plus(transposition_diagram(n, k, r), minus_one, linear)
        den_mult = diagonals[:r - 1].count(diagonals[r - 1])
        _, partial = state.shift_eval(cvals[r - 1], 0, den_mult)
    return partial


# -- alternative multiplicative formulas ------------------------------------

def _lexicographic_pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def row_column_product(n: int, which: str, mode: FieldMode = ExactOmega()
                       ) -> AlgebraElement:
    """Lexicographic product of the closed-form factors for the single-row
    or single-column shape; checked to be a nonzero multiple of the matching
    idempotent before being returned."""
    if n < 2:
        raise IndexOutOfRange('row/column products need n >= 2')
    if which not in ('row', 'column'):
        raise ValueError(f'which must be row or column, not {which!r}')
    _check_modular_bound(n, mode)
    field = mode.scalar_field()
    omega = field.promote(mode.omega())
    out = AlgebraElement.identity(n, mode)
    for i, j in _lexicographic_pairs(n):
        factor = AlgebraElement.identity(n, mode)
        gap = field.from_int(j - i)
        if which == 'row':
            factor = factor + AlgebraElement.from_diagram(
                transposition_diagram(n, i, j), mode, field, field.one / gap)
            den = gap + omega / 2 - 1
            if not den:
                raise ModularDegeneration(f'row factor denominator vanishes at ({i},{j})')
            factor = factor - AlgebraElement.from_diagram(
                contraction_diagram(n, i, j), mode, field, field.one / den)
        else:
            factor = factor - AlgebraElement.from_diagram(
                transposition_diagram(n, i, j), mode, field, field.one / gap)
        out = out * factor

    if which == 'row':
        shapes = [(k,) for k in range(1, n + 1)]
    else:
        shapes = [(1,) * k for k in range(1, n + 1)]
    reference = recurrence_element(tuple(shapes), n, mode)
    ratio = proportionality_ratio(out, reference)
    if ratio is None or not ratio:
        raise NotProportional(f'{which} product is not a nonzero multiple '
                              f'of the reference idempotent')
    return out


def ybe_check(u, v, mode: FieldMode = ExactOmega()) -> bool:
    """Exact check of the Yang-Baxter equation for the rational solution
    R(u) = 1 - s/u + e/(u - w/2 + 1) on three strands."""
    _check_modular_bound(3, mode)
    field = mode.scalar_field()
    omega = field.promote(mode.omega())
    args = {}
    for name, value in (('u', u), ('v', v)):
        value = field.promote(value)
        if value is None:
            raise DegenerateParameters(f'cannot interpret parameter {name}')
        args[name] = value
    uu, vv = args['u'], args['v']
    for name, value in (('u', uu), ('v', vv), ('u+v', uu + vv)):
        if not value:
            raise DegenerateParameters(f'parameter {name} must be nonzero')
    for name, value in (('u', uu), ('v', vv), ('u+v', uu + vv)):
        if not (value - omega / 2 + 1):
            raise DegenerateParameters(f'{name} - w/2 + 1 vanishes')

    def R(i: int, j: int, value):
        out = AlgebraElement.identity(3, mode)
        out = out - AlgebraElement.from_diagram(
            transposition_diagram(3, i, j), mode, field, field.one / value)
        return out + AlgebraElement.from_diagram(
            contraction_diagram(3, i, j), mode, field,
            field.one / (value - omega / 2 + 1))

    lhs = R(1, 2, uu) * R(1, 3, uu + vv) * R(2, 3, vv)
    rhs = R(2, 3, vv) * R(1, 3, uu + vv) * R(1, 2, uu)
    return lhs == rhs


def _one_minus(n: int, mode, diagram: BrauerDiagram, denom) -> AlgebraElement:
    field = mode.scalar_field()
    return AlgebraElement.identity(n, mode) - AlgebraElement.from_diagram(
        diagram, mode, field, field.one / denom)


def exchange_identity_check(n: int, i: int, j: int, r: int, u, v,
                            mode: FieldMode = ExactOmega()) -> bool:
    """The three-factor exchange identity that justifies reordering the raw
    double product into the incremental factorized form."""
    if not 1 <= i < j < r <= n:
        raise IndexOutOfRange(f'need i < j < r <= n, got {(i, j, r, n)}')
    field = mode.scalar_field()
    uu, vv = field.promote(u), field.promote(v)
    if not uu or not vv or not (uu - vv):
        raise DegenerateParameters('need u, v, u-v nonzero')
    e_ir = _one_minus(n, mode, contraction_diagram(n, i, r), uu)
    e_jr = _one_minus(n, mode, contraction_diagram(n, j, r), vv)
    s_ij = _one_minus(n, mode, transposition_diagram(n, i, j), uu - vv)
    return e_ir * e_jr * s_ij == s_ij * e_jr * e_ir


def factorization_check(n: int, points: list, seed: int = 0,
                        mode: FieldMode = ExactOmega()) -> bool:
    """Compare the raw lexicographic double product against the factorized
    incremental form at numeric evaluation points, keeping the loop scalar
    symbolic; also spot-check the exchange identity for every index triple."""
    import random as _random
    if len(points) != n:
        raise DegeneratePoints(f'need {n} points, got {len(points)}')
    field = mode.scalar_field()
    vals = [field.promote(Fraction(p)) for p in points]
    for a in range(n):
        for b in range(a + 1, n):
            if not (vals[a] - vals[b]):
                raise DegeneratePoints(f'points {a + 1} and {b + 1} coincide')
            if not (vals[a] + vals[b]):
                raise DegeneratePoints(f'points {a + 1} and {b + 1} sum to zero')
    _check_modular_bound(n, mode)

    raw = AlgebraElement.identity(n, mode)
    for i, j in _lexicographic_pairs(n):
        raw = raw * _one_minus(n, mode, contraction_diagram(n, i, j),
                               vals[i - 1] + vals[j - 1])
    for i, j in _lexicographic_pairs(n):
        raw = raw * _one_minus(n, mode, transposition_diagram(n, i, j),
                               vals[i - 1] - vals[j - 1])

    factorized = AlgebraElement.identity(n, mode)
    for r in range(2, n + 1):
        for k in range(r - 1, 0, -1):
            factorized = factorized * _one_minus(
                n, mode, contraction_diagram(n, k, r), vals[k - 1] + vals[r - 1])
        for k in range(1, r):
            factorized = factorized * _one_minus(
                n, mode, transposition_diagram(n, k, r), vals[k - 1] - vals[r - 1])
    if raw != factorized:
        return False

    rng = _random.Random(seed)
    for r in range(3, n + 1):
        for j in range(2, r):
            for i in range(1, j):
                while True:
                    u = Fraction(rng.randint(1, 40), rng.randint(1, 40))
                    v = Fraction(rng.randint(1, 40), rng.randint(1, 40))
                    if u and v and u != v:
                        break
                if not exchange_identity_check(n, i, j, r, u, v, mode):
                    return False
    return True


def jm_identity_check(prefix: UpdownTableau, m: int,
                      mode: FieldMode = ExactOmega()) -> bool:
    """Exact identity relating the inverted step factors applied to a prefix
    idempotent and the resolvent-style fraction in the variant Jucys-Murphy
    element of the larger algebra."""
    n = len(prefix) + 1
    if n < 2:
        raise ZeroInput('the identity needs a nonempty prefix')
    if m < n:
        raise IndexOutOfRange(f'need m >= {n}, got {m}')
    _check_modular_bound(m, mode)
    field = mode.scalar_field()
    uf = u_field(mode)
    u = uf.gen
    omega = field.promote(mode.omega())
    cvals = [sym.value(mode) for sym in contents(prefix)]
    e_prefix = lift_element(recurrence_element(prefix.shapes, m, mode), uf)

    lhs = e_prefix
    for k in range(n - 1, 0, -1):
        factor = AlgebraElement.identity(m, mode, uf) + AlgebraElement.from_diagram(
            transposition_diagram(m, k, m), mode, uf,
            uf.one / (uf.promote(cvals[k - 1]) - u))
        lhs = lhs * factor
    for k in range(1, n):
        factor = AlgebraElement.identity(m, mode, uf) + AlgebraElement.from_diagram(
            contraction_diagram(m, k, m), mode, uf,
            uf.one / (uf.promote(cvals[k - 1] - omega) + u))
        lhs = lhs * factor

    x_var = lift_element(jm_variant(n, m, mode), uf)
    resolvent = AlgebraElement.identity(m, mode, uf).scaled(u) - x_var
    rhs = (e_prefix * resolvent) / (u - uf.promote(cvals[0]))
    return lhs == rhs


def psi_tilde_b3(tableau: UpdownTableau, mode: FieldMode = ExactOmega()
                 ) -> tuple[tuple[int, int, int], AlgebraElement]:
    """Consecutive auto-regularized evaluation of the alternative three-strand
    rational function; the value is checked to be a nonzero multiple of the
    tableau's idempotent.

    The product is cleared of its two denominators up front, so the three
    variables live in a gcd-free polynomial tower; each evaluation then
    regularizes with the automatically detected shift order.  Returns those
    orders along with the evaluated element.
    """
    if len(tableau) != 3:
        raise SizeMismatch('the alternative product is specific to three strands')
    _check_modular_bound(3, mode)
    scalar = mode.scalar_field()
    ring3 = PolynomialRing(scalar, 'u3')
    ring2 = PolynomialRing(ring3, 'u2')
    ring1 = PolynomialRing(ring2, 'u1')
    u1 = ring1.gen
    u2 = ring1.promote(ring2.gen)
    u3 = ring1.promote(ring2.promote(ring3.gen))
    one = ring1.one

    def elem(coeff, diagram):
        return AlgebraElement.from_diagram(diagram, mode, ring1, coeff)

    ident = AlgebraElement.identity(3, mode, ring1)
    s1, s2 = transposition_diagram(3, 1, 2), transposition_diagram(3, 2, 3)
    e1, e2 = contraction_diagram(3, 1, 2), contraction_diagram(3, 2, 3)
    # the factors multiplied by their own denominators (u1+u2), (u2+u3)
    inner = (ident.scaled(u1 + u2) - elem((u1 - u2) * (u1 + u2), s1)
             + elem(u1 - u2 - one, e1))
    middle = (ident.scaled(u2 + u3) - elem((u1 - u3) * (u2 + u3), s2)
              + elem(u1 - u3 - one - one, e2))
    cleared = inner * middle * inner
    denominator = (u1 + u2) * (u1 + u2) * (u2 + u3)

    cvals = [sym.value(mode) for sym in contents(tableau)]
    state = _EvaluationState(3, mode, ring2, dict(cleared.terms), denominator)
    o1, state = state.shift_eval_descend(ring2.promote(cvals[0]))
    o2, state = state.shift_eval_descend(ring3.promote(cvals[1]))
    o3, value = state.shift_eval(scalar.promote(cvals[2]))

    reference = recurrence_element(tableau.shapes, 3, mode)
    ratio = proportionality_ratio(value, reference)
    if ratio is None or not ratio:
        raise NotProportional(
            f'alternative product is not a nonzero multiple of the idempotent '
            f'for {tableau.to_text()}')
    return (o1, o2, o3), value


# -- integer-polynomial kernel for the pairwise product table ---------------

def _fraction_poly_to_int(coeffs) -> tuple[Fraction, list[int]]:
    """Split a Fraction-coefficient polynomial into content * primitive."""
    if not coeffs:
        return Fraction(1), []
    m = 1
    for c in coeffs:
        m = m * c.denominator // _int_gcd(m, c.denominator)
    ints = [int(c * m) for c in coeffs]
    g = 0
    for c in ints:
        g = _int_gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, m), [c // g for c in ints]


class _ClearedElement:
    """scale * (1/den) * sum(num_d * d) with integer polynomial num and den.

    Built once per idempotent so the quadratic product sweep of the spectral
    suite runs on integer convolutions instead of normalized rational
    functions.
    """

    __slots__ = ('n', 'scale', 'den', 'nums')

    def __init__(self, element: AlgebraElement):
        field = element.field
        if field is not OMEGA_FIELD:
            raise TypeError('the cleared form is specific to exact coefficients')
        self.n = element.n
        den = Polynomial.const(QQ.one, QQ)
        for c in element.terms.values():
            g = poly_gcd(den, c.den)
            den = (den // g) * c.den
        den_content, den_ints = _fraction_poly_to_int(den.coeffs)
        ratios = {}
        lcm_den = 1
        for d, c in element.terms.items():
            cofactor = den // c.den
            content, ints = _fraction_poly_to_int((c.num * cofactor).coeffs)
            q = content / den_content
            ratios[d.partner] = (q, ints)
            lcm_den = lcm_den * q.denominator // _int_gcd(lcm_den, q.denominator)
        self.scale = Fraction(1, lcm_den)
        self.den = den_ints
        self.nums = {p: _ip_scale(ints, int(q * lcm_den))
                     for p, (q, ints) in ratios.items()}


def _ip_scale(a: list[int], k: int) -> list[int]:
    return [c * k for c in a]


def _ip_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _kernel_product(a: _ClearedElement, b: _ClearedElement) -> dict:
    """Numerators of the product, keyed by partner tuple; the caller tracks
    scale and denominator separately.  Loop factors become degree shifts."""
    out: dict = {}
    for p1, n1 in a.nums.items():
        for p2, n2 in b.nums.items():
            p3, loops = _multiply_partners(p1, p2)
            prod = _ip_mul(n1, n2)
            acc = out.get(p3)
            if acc is None:
                out[p3] = [0] * loops + prod if loops else prod
            else:
                need = loops + len(prod)
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for i, c in enumerate(prod):
                    acc[loops + i] += c
    return {p: poly for p, poly in out.items() if any(poly)}


def _kernel_product_is(a: _ClearedElement, b: _ClearedElement,
                       expected: Optional[_ClearedElement]) -> bool:
    """Does a*b equal the expected cleared element (None means zero)?"""
    prod = _kernel_product(a, b)
    if expected is None:
        return not prod
    if set(prod) != set(expected.nums):
        return False
    # a*b = sa*sb/(dena*denb) * prod ; expected = se/dene * nums
    # equality per diagram: sa*sb * dene * prod_p == se * dena*denb * nums_p
    left_scale = a.scale * b.scale
    right_scale = expected.scale
    cross = left_scale / right_scale
    den_left = _ip_mul(a.den, b.den)
    for p, poly in prod.items():
        lhs = _ip_scale(_ip_mul(poly, expected.den), cross.numerator)
        rhs = _ip_scale(_ip_mul(expected.nums[p], den_left), cross.denominator)
        if _ip_trim(lhs) != _ip_trim(rhs):
            return False
    return True


def _ip_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


# -- spectral suite ----------------------------------------------------------

def spectral_suite(n: int, mode: FieldMode = ExactOmega(),
                   bound: int = 6) -> VerificationReport:
    """Eigenvalue equations, branching sums, pairwise orthogonality,
    completeness, and the resolvent-limit consequence, for every updown
    tableau of the given length."""
    _check_modular_bound(n, mode)
    started = time.perf_counter()
    report = VerificationReport(suite='spectral')
    field = mode.scalar_field()
    tabs = list(enumerate_updown(n, bound=bound))
    elements = {t: recurrence_element(t.shapes, n, mode) for t in tabs}
    one = AlgebraElement.identity(n, mode)

    for t in tabs:
        e_t = elements[t]
        cvals = [sym.value(mode) for sym in contents(t)]
        ok = True
        for r in range(1, n + 1):
            x = jucys_murphy(n, r, mode)
            scaled = e_t.scaled(cvals[r - 1])
            if x * e_t != scaled or e_t * x != scaled:
                ok = False
                break
        report.check('eigenvalue equations', t.to_text(), ok)

    for u_tab in enumerate_updown(n - 1, bound=bound) if n >= 1 else []:
        e_u = recurrence_element(u_tab.shapes, n, mode)
        total = AlgebraElement.zero(n, mode)
        members = [t for t in tabs if t.shapes[:n - 1] == u_tab.shapes]
        for t in members:
            total = total + elements[t]
        report.check('branching sum', u_tab.to_text() or '(empty)', total == e_u)

    use_kernel = isinstance(mode, ExactOmega)
    cleared = {t: _ClearedElement(elements[t]) for t in tabs} if use_kernel else None
    for t1 in tabs:
        ok = True
        for t2 in tabs:
            if use_kernel:
                expected = cleared[t1] if t1 == t2 else None
                good = _kernel_product_is(cleared[t1], cleared[t2], expected)
            else:
                prod = element_mul(elements[t1], elements[t2])
                good = prod == (elements[t1] if t1 == t2 else
                                AlgebraElement.zero(n, mode))
            if not good:
                ok = False
                break
        report.check('orthogonality row', t1.to_text(), ok)

    total = AlgebraElement.zero(n, mode)
    for t in tabs:
        total = total + elements[t]
    report.check('completeness', f'n={n}', total == one)

    uf = u_field(mode)
    for u_tab in enumerate_updown(n - 1, bound=bound) if n >= 1 else []:
        members = [t for t in tabs if t.shapes[:n - 1] == u_tab.shapes]
        ok = True
        for t in members:
            c_t = contents(t)[-1].value(mode)
            acc = AlgebraElement.zero(n, mode)
            for t2 in members:
                c_t2 = contents(t2)[-1].value(mode)
                weight = shift_and_eval(
                    (uf.gen - uf.promote(c_t)) / (uf.gen - uf.promote(c_t2)), c_t, 0)
                if weight:
                    acc = acc + elements[t2].scaled(weight)
            if acc != elements[t]:
                ok = False
                break
        report.check('resolvent limit', u_tab.to_text() or '(empty)', ok)

    report.wall_time = time.perf_counter() - started
    return report

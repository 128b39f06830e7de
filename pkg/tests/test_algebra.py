import random

import pytest
from hypothesis import given, settings, strategies as st

from brauer.algebra import (
    AlgebraElement,
    embed_element,
    is_idempotent,
    jm_variant,
    jucys_murphy,
    specialize_element,
    verify_presentation,
)
from brauer.diagrams import (
    contraction_diagram,
    enumerate_diagrams,
    generator,
    transposition_diagram,
)
from brauer.errors import (
    FieldModeMismatch,
    IndexOutOfRange,
    ModularDegeneration,
    SizeMismatch,
)
from brauer.fields import ExactOmega, OMEGA, PrimeModular

mode = ExactOmega()
w = OMEGA


def diag(d):
    return AlgebraElement.from_diagram(d, mode)


def test_contraction_square_picks_up_loop_scalar():
    e1 = diag(generator(2, 'e', 1))
    assert e1 * e1 == e1.scaled(w)


def test_transposition_absorbed_by_contraction():
    e1, s1 = diag(generator(2, 'e', 1)), diag(generator(2, 's', 1))
    assert s1 * e1 == e1
    assert e1 * s1 == e1


def test_transposition_square_annihilates():
    s1 = diag(generator(2, 's', 1))
    one = AlgebraElement.identity(2, mode)
    assert (one - s1) * (one + s1) == AlgebraElement.zero(2, mode)


def test_first_jucys_murphy_is_scalar():
    x1 = jucys_murphy(3, 1)
    assert x1 == AlgebraElement.identity(3, mode).scaled((w - 1) / 2)


def test_second_jucys_murphy_formula():
    x2 = jucys_murphy(2, 2)
    expected = (AlgebraElement.identity(2, mode).scaled((w - 1) / 2)
                + diag(generator(2, 's', 1)) - diag(generator(2, 'e', 1)))
    assert x2 == expected


def test_jucys_murphy_family_commutes():
    for n in (3, 4):
        xs = [jucys_murphy(n, r) for r in range(1, n + 1)]
        for i in range(n):
            for j in range(i + 1, n):
                assert xs[i] * xs[j] == xs[j] * xs[i]


def test_last_jucys_murphy_commutes_with_subalgebra():
    n = 4
    x = jucys_murphy(n, n)
    for kind in ('s', 'e'):
        for i in range(1, n - 1):
            g = diag(generator(n, kind, i))
            assert x * g == g * x


def test_jm_variant_examples():
    assert jm_variant(2, 2) == jucys_murphy(2, 2)
    expected = (AlgebraElement.identity(3, mode).scaled((w - 1) / 2)
                + diag(transposition_diagram(3, 1, 3))
                - diag(contraction_diagram(3, 1, 3)))
    assert jm_variant(2, 3) == expected
    for m in (1, 2, 4):
        assert jm_variant(1, m) == AlgebraElement.identity(m, mode).scaled((w - 1) / 2)


def test_jm_variant_validation():
    with pytest.raises(IndexOutOfRange):
        jm_variant(3, 2)
    with pytest.raises(IndexOutOfRange):
        jucys_murphy(3, 4)


def test_presentation_suites_pass():
    for n in (2, 3, 4):
        report = verify_presentation(n)
        assert report.all_passed(), report.failures()


def test_is_idempotent_examples():
    one = AlgebraElement.identity(2, mode)
    e1 = diag(generator(2, 'e', 1))
    s1 = diag(generator(2, 's', 1))
    assert is_idempotent(one)
    assert is_idempotent(e1 / w)
    assert not is_idempotent(s1)


def random_element(n, rng, size=3):
    diagrams = list(enumerate_diagrams(n))
    out = AlgebraElement.zero(n, mode)
    for _ in range(size):
        d = rng.choice(diagrams)
        coeff = (w - rng.randint(-2, 2)) / rng.randint(1, 3)
        out = out + AlgebraElement.from_diagram(d, mode, coeff=coeff)
    return out


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_multiplication_associative(seed):
    rng = random.Random(seed)
    a, b, c = (random_element(3, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_distributivity_and_scalars():
    rng = random.Random(11)
    a, b = random_element(3, rng), random_element(3, rng)
    c = random_element(3, rng)
    assert a * (b + c) == a * b + a * c
    assert (a + b).scaled(w) == a.scaled(w) + b.scaled(w)
    assert a - a == AlgebraElement.zero(3, mode)


def test_permutation_span_closed_under_product():
    rng = random.Random(5)
    perms = [d for d in enumerate_diagrams(3) if d.is_permutation()]
    for _ in range(20):
        d1, d2 = rng.choice(perms), rng.choice(perms)
        product = diag(d1) * diag(d2)
        (d3, coeff), = product.terms.items()
        assert d3.is_permutation()
        assert coeff == mode.scalar_field().one


def test_embed_element_is_homomorphism():
    a = diag(generator(2, 'e', 1)) + AlgebraElement.identity(2, mode).scaled(w)
    b = diag(generator(2, 's', 1))
    assert embed_element(a * b, 4) == embed_element(a, 4) * embed_element(b, 4)


def test_size_and_mode_mismatch_errors():
    a = AlgebraElement.identity(2, mode)
    b = AlgebraElement.identity(3, mode)
    with pytest.raises(SizeMismatch):
        a * b
    modular = PrimeModular(101, 5)
    c = AlgebraElement.identity(2, modular)
    with pytest.raises(FieldModeMismatch):
        a + c


def test_modular_prime_bound_checked():
    with pytest.raises(ModularDegeneration):
        jucys_murphy(4, 2, PrimeModular(7, 3))


def test_modular_matches_specialized_exact():
    modular = PrimeModular.sample(1009, 2)
    for n in (2, 3):
        for r in range(1, n + 1):
            assert (jucys_murphy(n, r, modular)
                    == specialize_element(jucys_murphy(n, r), modular))


def test_element_json_round_trip():
    x = jucys_murphy(3, 3)
    assert AlgebraElement.from_json(x.to_json()) == x
    modular = PrimeModular(101, 17)
    y = jucys_murphy(3, 2, modular)
    assert AlgebraElement.from_json(y.to_json()) == y

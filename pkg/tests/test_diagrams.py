import itertools
import math

import pytest

from brauer.diagrams import (
    BrauerDiagram,
    contraction_diagram,
    embed,
    enumerate_diagrams,
    generator,
    identity_diagram,
    multiply,
    transposition_diagram,
)
from brauer.errors import (
    BoundExceeded,
    IndexOutOfRange,
    ShrinkNotAllowed,
    SizeMismatch,
)


def partner_1based(d):
    return [p + 1 for p in d.partner]


def test_adjacent_contraction_matching():
    assert partner_1based(generator(2, 'e', 1)) == [2, 1, 4, 3]


def test_distant_transposition_matching():
    d = generator(3, 's', 1, 3)
    assert partner_1based(d) == [6, 5, 4, 3, 2, 1]


def test_identity_matching():
    for n in (1, 3, 5):
        d = generator(n, 'identity')
        assert all(d.partner[i] == i + n for i in range(n))


def test_distant_transposition_equals_word():
    # s(i,j) = s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i
    n = 5
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            word = list(range(i, j)) + list(range(j - 2, i - 1, -1))
            acc = identity_diagram(n)
            loops = 0
            for k in word:
                acc, s = multiply(acc, generator(n, 's', k))
                loops += s
            assert loops == 0
            assert acc == transposition_diagram(n, i, j)


def test_distant_contraction_equals_conjugated_word():
    # e(i,j) = s(i,j-1) e_{j-1} s(i,j-1)
    n = 5
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            conj = (transposition_diagram(n, i, j - 1) if j - 1 > i
                    else identity_diagram(n))
            step1, l1 = multiply(conj, generator(n, 'e', j - 1))
            step2, l2 = multiply(step1, conj)
            assert (l1, l2) == (0, 0)
            assert step2 == contraction_diagram(n, i, j)


def test_contraction_squares_to_loop():
    e1 = generator(2, 'e', 1)
    assert multiply(e1, e1) == (e1, 1)


def test_transposition_squares_to_identity():
    s1 = generator(2, 's', 1)
    assert multiply(s1, s1) == (identity_diagram(2), 0)


def test_contraction_braid_absorption():
    e1, e2 = generator(3, 'e', 1), generator(3, 'e', 2)
    d12, loops12 = multiply(e1, e2)
    assert loops12 == 0
    assert multiply(d12, e1) == (e1, 0)


def test_multiply_size_mismatch():
    with pytest.raises(SizeMismatch):
        multiply(generator(2, 'e', 1), generator(3, 'e', 1))


def test_enumeration_counts_and_order():
    for n in range(1, 6):
        diagrams = list(enumerate_diagrams(n))
        expected = math.prod(range(1, 2 * n, 2))
        assert len(diagrams) == expected
        keys = [d.partner for d in diagrams]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_diagrams(7))
    assert len(list(enumerate_diagrams(7, bound=7))) == 135135


def test_embed():
    assert embed(identity_diagram(2), 3) == identity_diagram(3)
    assert embed(generator(2, 'e', 1), 3) == generator(3, 'e', 1)
    d = generator(3, 's', 1, 3)
    assert embed(d, 3) is d
    with pytest.raises(ShrinkNotAllowed):
        embed(d, 2)


def test_generator_index_validation():
    with pytest.raises(IndexOutOfRange):
        generator(3, 's', 3)
    with pytest.raises(IndexOutOfRange):
        generator(3, 'e', 0)
    with pytest.raises(IndexOutOfRange):
        transposition_diagram(3, 2, 2)


def perm_diagram(n, perm):
    partner = [0] * (2 * n)
    for i, img in enumerate(perm):
        partner[i] = n + img
        partner[n + img] = i
    return BrauerDiagram(partner)


def test_permutation_diagrams_form_symmetric_group():
    n = 3
    perms = list(itertools.permutations(range(n)))
    for sigma in perms:
        for tau in perms:
            product, loops = multiply(perm_diagram(n, sigma), perm_diagram(n, tau))
            assert loops == 0
            composed = tuple(tau[sigma[i]] for i in range(n))
            assert product == perm_diagram(n, composed)
            assert product.is_permutation()


def test_is_permutation():
    assert generator(3, 's', 1).is_permutation()
    assert not generator(3, 'e', 1).is_permutation()


def test_multiplication_associative_with_loop_bookkeeping():
    import random
    rng = random.Random(0)
    diagrams = list(enumerate_diagrams(3))
    for _ in range(200):
        d1, d2, d3 = (rng.choice(diagrams) for _ in range(3))
        left, s12 = multiply(d1, d2)
        left, s_left = multiply(left, d3)
        right, s23 = multiply(d2, d3)
        right, s_right = multiply(d1, right)
        assert left == right
        assert s12 + s_left == s23 + s_right


def test_diagram_validation():
    with pytest.raises(ValueError):
        BrauerDiagram([0, 1])          # fixed points
    with pytest.raises(ValueError):
        BrauerDiagram([1, 0, 2])       # odd length
    with pytest.raises(ValueError):
        BrauerDiagram([1, 2, 0, 3])    # not an involution


def test_json_round_trip():
    d = generator(4, 'e', 2, 4)
    data = d.to_json()
    assert data['partner'] == partner_1based(d)
    assert BrauerDiagram.from_json(data) == d

"""The supporting cast of multiplicative identities.

The factorized evaluation order rests on an exchange identity between
rational factors; the single-row and single-column idempotents have closed
product formulas; the building block 1 - s/u + e/(u - w/2 + 1) solves the
Yang-Baxter equation; and on three strands an alternative rational function
reproduces every idempotent up to scalars.
"""

from fractions import Fraction

from brauer import (
    enumerate_updown,
    exchange_identity_check,
    factorization_check,
    proportionality_ratio,
    psi_tilde_b3,
    recurrence_element,
    row_column_product,
    ybe_check,
    ExactOmega,
)

mode = ExactOmega()

print('-- raw double product versus factorized form at numeric points --')
points = [Fraction(1, 2), Fraction(4, 3), Fraction(9, 5)]
print(f'n=3 at points {points}: {factorization_check(3, points)}')
print(f'exchange identity at (3/4, 7/11): '
      f'{exchange_identity_check(3, 1, 2, 3, Fraction(3, 4), Fraction(7, 11))}')

print()
print('-- Yang-Baxter equation, loop parameter symbolic --')
for u, v in ((Fraction(2, 3), Fraction(5, 7)), (Fraction(1, 5), Fraction(3, 2))):
    print(f'  R(u)R(u+v)R(v) = R(v)R(u+v)R(u) at (u, v) = ({u}, {v}): '
          f'{ybe_check(u, v)}')

print()
print('-- closed row and column products --')
for which, shapes in (('row', ((1,), (2,), (3,))),
                      ('column', ((1,), (1, 1), (1, 1, 1)))):
    product = row_column_product(3, which)
    reference = recurrence_element(shapes, 3, mode)
    ratio = proportionality_ratio(product, reference)
    print(f'  {which} product is {ratio} times the idempotent')

print()
print('-- the alternative three-strand function --')
for tableau in enumerate_updown(3):
    orders, value = psi_tilde_b3(tableau)
    reference = recurrence_element(tableau.shapes, 3, mode)
    ratio = proportionality_ratio(value, reference)
    print(f'  {tableau.to_text():12} orders {orders}  constant {ratio}')

"""The diagram algebra itself: matchings, loop factors, generators.

A basis diagram is a perfect matching of two rows of n dots; stacking two
diagrams contracts the middle row, and every closed loop that falls out
becomes one factor of the loop parameter w.  The generators s_i (crossing)
and e_i (cup-cap) satisfy the classical presentation, which the package
verifies relation by relation.
"""

from brauer import (
    AlgebraElement,
    ExactOmega,
    OMEGA as w,
    enumerate_diagrams,
    generator,
    jucys_murphy,
    multiply,
    verify_presentation,
)

mode = ExactOmega()

print('-- diagrams and loop counting --')
e1 = generator(2, 'e', 1)
print(f'e_1 as a matching: {e1}')
product, loops = multiply(e1, e1)
print(f'e_1 stacked on e_1 gives {product} with {loops} closed loop')

print()
print('-- dimension: (2n-1)!! matchings --')
for n in range(1, 6):
    print(f'  n={n}: {len(list(enumerate_diagrams(n)))} diagrams')

print()
print('-- algebra products carry w^loops --')
E1 = AlgebraElement.from_diagram(e1, mode)
print(f'e_1 * e_1 = {E1 * E1}')

print()
print('-- the defining relations, machine-checked --')
report = verify_presentation(4)
print(f'n=4 presentation: {report.passed}/{report.total} relations hold')

print()
print('-- Jucys-Murphy elements commute --')
x2, x3 = jucys_murphy(3, 2), jucys_murphy(3, 3)
print(f'x_2 = {x2}')
print(f'[x_2, x_3] = 0: {x2 * x3 == x3 * x2}')

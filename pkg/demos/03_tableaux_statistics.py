"""Updown tableaux and the combinatorics that controls regularization.

An updown tableau is a walk in Young's lattice: one box added or removed
per step.  From any prefix we extract the add/remove multiplicity matrices,
their diagonal sums, and second-difference parameters; those give each
step's regularization exponent and its contribution to the scalar f(T)
relating the fusion product to the idempotent.  Two worked examples are
traced below.
"""

from collections import Counter

from brauer import (
    UpdownTableau,
    contents,
    enumerate_updown,
    exponents,
    f_constant,
    hooks,
    tableau_statistics,
)

print('-- all walks of length 3 --')
for tableau in enumerate_updown(3):
    symbols = ' '.join(str(c) for c in contents(tableau))
    print(f'  {tableau.to_text():12} contents {symbols}')

print()
print('-- the nine-step worked example: multiplicity matrices --')
prefix = UpdownTableau.from_text('1|2|21|11|1|11|21|22|21')
stats = tableau_statistics(prefix)
print(f'additions  m  = {stats.m}')
print(f'removals   m\' = {stats.m_prime}')
print(f'diagonal sums d = {stats.d}, d\' = {stats.d_prime}')

print()
print('-- the six-step worked example: exponents --')
tableau = UpdownTableau.from_text('1|2|21|11|1|11')
print(f'{tableau.to_text()} has exponents {exponents(tableau)}')

print()
print('-- the constant f(T): hook product when no box is ever removed --')
for text in ('1|2|21', '1|2|3', '1|0'):
    t = UpdownTableau.from_text(text)
    value, _ = f_constant(t)
    note = f'(hook product of {t.shape} is {hooks(t.shape)})' if sum(t.shape) == len(t) else ''
    print(f'  f({text}) = {value} {note}')

print()
print('-- square-sum identity: the walks know the algebra dimension --')
for n in range(1, 7):
    counts = Counter(t.shape for t in enumerate_updown(n))
    print(f'  n={n}: sum of squared multiplicities = {sum(v * v for v in counts.values())}')

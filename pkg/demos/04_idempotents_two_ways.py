"""The heart of the package: every primitive idempotent, two ways.

The recurrence walks the tableau, one rational factor in the next
Jucys-Murphy element per step.  The fusion procedure instead
evaluates a product of rational factors consecutively at the contents,
regularizing poles with the tableau's exponents.  Both are exact, and they
agree on the nose -- that agreement is the main theorem, checked here on
every tableau of length three.
"""

from brauer import (
    ExactOmega,
    fusion_idempotent,
    is_idempotent,
    jucys_murphy,
    recurrence_idempotent,
    enumerate_updown,
    spectral_suite,
    UpdownTableau,
    contents,
)

mode = ExactOmega()

print('-- one tableau in detail: remove the only box --')
tableau = UpdownTableau.from_text('1|0')
rec = recurrence_idempotent(tableau)
fus = fusion_idempotent(tableau)
print(f'recurrence element: {rec.element}')
print(f'fusion element:     {fus.element}')
print(f'fusion constant f(T) = {fus.constant}, detected orders {fus.orders}')
print(f'idempotent: {is_idempotent(fus.element)}')
c2 = contents(tableau)[1].value(mode)
x2 = jucys_murphy(2, 2)
print(f'eigenvalue equation x_2 E = c_2 E: {x2 * fus.element == fus.element.scaled(c2)}')

print()
print('-- both constructions on every three-step tableau --')
for t in enumerate_updown(3):
    result = fusion_idempotent(t)   # cross-checks against the recurrence
    print(f'  {t.to_text():12} f(T) = {result.constant}  orders {result.orders}')

print()
print('-- the idempotents resolve the identity --')
report = spectral_suite(3)
print(f'spectral suite at n=3: {report.passed}/{report.total} checks pass')

"""Tour of the exact coefficient arithmetic.

Everything downstream rests on a two-level tower of fraction fields:
rationals, then rational functions in the loop parameter w, then rational
functions in an evaluation variable u on top.  Values are always kept in
canonical form (coprime, monic denominator), so equality is literal
structural equality -- there is no epsilon anywhere in this package.
"""

from brauer import (
    ExactOmega,
    OMEGA as w,
    PrimeModular,
    shift_and_eval,
    specialize_omega,
    u_field,
    valuation_at,
)

U = u_field(ExactOmega())
u = U.gen

print('-- canonical forms --')
lhs = (w * w - 1) / (w - 1)
print(f'(w^2 - 1)/(w - 1) simplifies to {lhs}')
print(f'structural equality with w + 1: {lhs == w + 1}')

print()
print('-- the tower: rational functions in u over Q(w) --')
c = U.promote((w - 1) / 2)
f = 1 / (u - c) + 1 / (u + c)
print(f'1/(u-c) + 1/(u+c) with c = (w-1)/2 gives {f}')

print()
print('-- valuations: order of vanishing at a point --')
g = (u - c) * (u - c) / (u + c)
print(f'order of (u-c)^2/(u+c) at u = c: {valuation_at(g, (w - 1) / 2)}')
print(f'order of 1/(u-c) at u = c: {valuation_at(1 / (u - c), (w - 1) / 2)}')

print()
print('-- regularized evaluation: multiply by (u-c)^p, then substitute --')
h = 1 / ((c + u) * (c - u))
value = shift_and_eval(h, -(w - 1) / 2, 1)
print(f'(u+c) * 1/((c+u)(c-u)) at u = -c equals {value}')

print()
print('-- the fast mode: specialize w to a residue mod p --')
mode = PrimeModular.sample(1009, seed=0)
print(f'sampled {mode}')
x = (w * w + 3) / (2 * w - 1)
print(f'(w^2+3)/(2w-1) specializes to {specialize_omega(x, mode)} in GF({mode.p})')

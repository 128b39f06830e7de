"""Exact symbolic arithmetic versus the sampled prime-field fast mode.

Everything the package computes over Q(w) it can also compute over GF(p)
with w frozen to a sampled residue.  The modular run is a probabilistic
shadow of the exact one: far faster, and guaranteed to agree whenever no
checked denominator vanishes mod p.  This script times both on all
tableaux of length four and confirms the specialized exact results match
the native modular ones.
"""

import time

from brauer import (
    PrimeModular,
    clear_caches,
    enumerate_updown,
    fusion_idempotent,
    recurrence_idempotent,
    specialize_element,
)

n = 4
modular = PrimeModular.sample(1009, seed=0)
print(f'comparing exact Q(w) against {modular}')

tabs = list(enumerate_updown(n))

clear_caches()
started = time.perf_counter()
exact = {t: fusion_idempotent(t, cross_check=False) for t in tabs}
exact_seconds = time.perf_counter() - started

clear_caches()
started = time.perf_counter()
fast = {t: fusion_idempotent(t, modular, cross_check=False) for t in tabs}
fast_seconds = time.perf_counter() - started

print(f'exact fusion over {len(tabs)} tableaux: {exact_seconds:.2f}s')
print(f'modular fusion over {len(tabs)} tableaux: {fast_seconds:.2f}s')
print(f'speedup: {exact_seconds / fast_seconds:.1f}x')

print()
print('-- consistency: specialize the exact elements and compare --')
agree = 0
for t in tabs:
    exact_element = recurrence_idempotent(t).element
    modular_element = recurrence_idempotent(t, modular).element
    agree += specialize_element(exact_element, modular) == modular_element
print(f'{agree}/{len(tabs)} idempotents agree after specialization')

"""Modules over the Auslander algebra of k[x]/x^2.

Checks the Euler form against honest Ext computations and lists the
submodule types of P2 + P2 found by brute force over F2.
"""
import random

from curvestab.auslander import (P2, S1, S2, enumerate_submodule_types, exhaustive_submodule_types,
                                 ext_dims, projective_resolution, random_module)
from curvestab.numerical_k import euler_auslander

for name, mod in [("S1", S1), ("S2", S2), ("P2", P2)]:
    res = projective_resolution(mod)
    terms = " <- ".join(f"P1^{a} P2^{b}" for a, b, _ in res.terms)
    print(f"{name}: {terms}")

print("Ext^*(S1, S1) =", ext_dims(S1, S1))
print("Ext^*(S2, S1) =", ext_dims(S2, S1))

rng = random.Random(0)
for _ in range(5):
    m = random_module(rng.randint(0, 3), rng.randint(0, 3), rng)
    n = random_module(rng.randint(0, 3), rng.randint(0, 3), rng)
    h, e1, e2 = ext_dims(m, n)
    print(f"{m.dims} vs {n.dims}: {h} - {e1} + {e2} = {euler_auslander(*m.dims, *n.dims)}")

found = exhaustive_submodule_types(2)
assert found == enumerate_submodule_types(2)
print("submodule types of P2^2 over F2:", sorted(found))

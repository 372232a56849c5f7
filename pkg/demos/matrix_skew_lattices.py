"""
Skew lattices of idempotent matrices
====================================

Matrices closed under x*y and x nabla y = (x + y - xy)^2 give skew
lattices.  Arithmetic is exact, over the integers or a prime field.
"""

# %%
from skewlat import classify
from skewlat.category import is_categorical, is_strictly_categorical
from skewlat.errors import CapExceeded
from skewlat.fixtures import FIG1
from skewlat.matrices import (
    EXAMPLE20_SIZES,
    closure,
    example19,
    example19_matrices,
    example20,
    is_idempotent,
    matrix,
    prop21_check,
)

# %%
# Four idempotent 4x4 matrices a, b, b', c.
ms = example19_matrices()
for name, m in ms.items():
    print(name, m.entries, is_idempotent(m))

# %%
# Closing them adds nothing new, and the induced algebra has the same
# tables as the four-element fixture under 1->a, 2->b, 3->b', 0->c.
lat = example19()
alg = lat.algebra
iso = {1: "a", 2: "b", 3: "b'", 0: "c"}
same = all(alg.label(alg.meet[alg.index(iso[x])][alg.index(iso[y])]) == iso[FIG1.meet[x][y]]
           for x in range(4) for y in range(4))
print(len(lat), same)

# %%
# So matrix skew lattices need not be strictly categorical, in any
# characteristic.
for p in (0, 2, 3):
    v = is_strictly_categorical(example19(p).algebra)
    print(p, v.holds, [example19(p).algebra.label(x) for x in v.witness])

# %%
# Dropping c leaves a strictly categorical two-class algebra that is
# still not normal; the block test agrees with the identity.
lat20 = example20()
print(is_strictly_categorical(lat20.algebra).holds, classify(lat20.algebra).normal)
print(prop21_check([lat20.elements[0]], list(lat20.elements[1:]), EXAMPLE20_SIZES))

# %%
# Ring-induced algebras are symmetric, distributive in the sandwiched
# sense, and categorical.
flags = classify(alg)
print(flags.symmetric, flags.sandwiched_distributive, is_categorical(alg).holds)

# %%
# Not every pair of idempotents generates a finite skew lattice.
e = matrix([[1, 1], [0, 0]])
f = matrix([[1, 0], [1, 0]])
try:
    closure([e, f], cap=50)
except CapExceeded as exc:
    print(type(exc).__name__, exc)

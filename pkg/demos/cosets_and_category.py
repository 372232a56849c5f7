"""
Cosets, coset bijections and the x-product
==========================================

Walk through the coset structure of the nine-element fixture, see where
composites of coset bijections go wrong, and audit associativity.
"""

# %%
from skewlat.category import (
    associativity_audit,
    build_coset_category,
    compose,
    cross_product,
    is_categorical,
    is_strictly_categorical,
)
from skewlat.cosets import coset_bijection, coset_partition, image_set
from skewlat.fixtures import EX13, FIG1, FIG3, X2

A, B, C = (0, 4), (1, 3, 6, 7), (2, 5)

# %%
# Between A > B the lower class splits into two A-cosets, while A itself is
# a single B-coset.  Any image set picks one element from each coset.
part = coset_partition(FIG3, A, B)
print(part.down_cosets, part.up_cosets)
print(image_set(FIG3, 0, B).members)

# %%
# Coset bijections pair x with the unique element below it.
f = coset_bijection(FIG3, 0, 6)
g = coset_bijection(FIG3, 3, 2)
print(f.as_dict(), g.as_dict())

# %%
# Composing them as partial maps loses 0, but the x-product recovers the
# whole coset bijection that contains the composite.
print(compose(g, f).as_dict())
print(cross_product(FIG3, g, f).chi.as_dict())

# %%
# On the eight-element subalgebra that gap makes it non-categorical.
print(is_categorical(X2))

# %%
# The x-product is not associative here: one bracketing gives {0: 8},
# the other is empty.
h = coset_bijection(FIG3, 2, 8)
left = cross_product(FIG3, h, cross_product(FIG3, g, f).chi)
right = cross_product(FIG3, cross_product(FIG3, h, g).chi, f)
print(left.chi.as_dict(), right.is_empty)

audit = associativity_audit(FIG3)
print(audit.triples_checked, len(audit.witnesses))

# %%
# The four-element fixture is categorical but not strictly so: 1 > 2 > 0
# and 1 > 3 > 0 have two different midpoints.
print(is_categorical(FIG1).holds, is_strictly_categorical(FIG1))

# %%
# Its three-element subalgebra is strictly categorical, so the coset
# category can be built.
cat = build_coset_category(EX13)
for (src, dst), maps in sorted(cat.hom.items()):
    print(src, dst, [m.graph for m in maps])
print(cat.check_laws().holds)

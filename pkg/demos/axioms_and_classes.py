"""
Skew lattice basics
===================

Load the small built-in algebras, check the axioms, and look at their
D-classes and the natural order.
"""

# %%
from skewlat import classify, d_decomposition, natural_leq, verify_skew_lattice
from skewlat.fixtures import FIG1, FIG3
from skewlat.report import export_dot, report

# %%
# The four-element algebra: every axiom holds.
print(verify_skew_lattice(FIG1).ok)

# Its D-classes form a three-step chain.
d = d_decomposition(FIG1)
for i, cls in enumerate(d.classes):
    print(i, cls, "above", [k for k in range(len(d)) if d.above(i, k)])

# %%
# Handedness and the other variety flags, with witnesses where they fail.
flags = classify(FIG1)
for name, verdict in flags:
    print(f"{name:25s} {verdict.holds}  {verdict.witness or ''}")

# %%
# 2 sits below 1 in the natural order, but 2 and 3 are incomparable
# even though they are D-related.
print(natural_leq(FIG1, 2, 1), natural_leq(FIG1, 2, 3), natural_leq(FIG1, 3, 2))

# %%
# The nine-element algebra is left-handed with four classes.
print(classify(FIG3).left_handed, d_decomposition(FIG3).classes)

# %%
# A full report and a DOT diagram (pipe into `dot -Tpng` to draw it).
print(report(FIG3).text())
print(export_dot(FIG1))

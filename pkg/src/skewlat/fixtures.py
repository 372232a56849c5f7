"""Small worked examples as ready-made algebras.

In ``fig1`` and ``fig3`` the index of an element is also its name, so rows
appear in numeric order whatever order the tables were first written in.
"""

from __future__ import annotations

from .algebra import CayleyAlgebra, subalgebra

FIG1 = CayleyAlgebra(
    meet=[
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 2, 3],
        [0, 3, 2, 3],
    ],
    join=[
        [0, 1, 2, 3],
        [1, 1, 1, 1],
        [2, 1, 2, 2],
        [3, 1, 3, 3],
    ],
)

FIG3 = CayleyAlgebra(
    meet=[
        [0, 3, 2, 3, 0, 2, 6, 6, 8],
        [1, 1, 5, 1, 1, 5, 1, 1, 8],
        [2, 2, 2, 2, 2, 2, 2, 2, 8],
        [3, 3, 2, 3, 3, 2, 3, 3, 8],
        [4, 1, 5, 1, 4, 5, 7, 7, 8],
        [5, 5, 5, 5, 5, 5, 5, 5, 8],
        [6, 6, 2, 6, 6, 2, 6, 6, 8],
        [7, 7, 5, 7, 7, 5, 7, 7, 8],
        [8, 8, 8, 8, 8, 8, 8, 8, 8],
    ],
    join=[
        [0, 4, 0, 0, 4, 4, 0, 4, 0],
        [0, 1, 6, 3, 4, 1, 6, 7, 1],
        [0, 1, 2, 3, 4, 5, 6, 7, 2],
        [0, 1, 3, 3, 4, 7, 6, 7, 3],
        [0, 4, 0, 0, 4, 4, 0, 4, 4],
        [0, 1, 2, 3, 4, 5, 6, 7, 5],
        [0, 1, 6, 3, 4, 1, 6, 7, 6],
        [0, 1, 3, 3, 4, 7, 6, 7, 7],
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
    ],
)

# fig3 with its bottom element 8 removed.
X2 = subalgebra(FIG3, range(8))

# The three-element skew chain {1} > {2, 3} inside fig1.
EX13 = subalgebra(FIG1, [1, 2, 3])

ALGEBRAS = {"fig1": FIG1, "fig3": FIG3, "x2": X2}


def algebra_fixture(name: str) -> CayleyAlgebra:
    if name in ALGEBRAS:
        return ALGEBRAS[name]
    if name in ("example19", "example20"):
        from . import matrices

        return getattr(matrices, name)().algebra
    raise KeyError(name)

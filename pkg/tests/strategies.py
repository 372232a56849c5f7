"""Hypothesis strategies producing finite skew lattices.

Sources: closed subsets of the built-in fixtures, rectangular bands I×J,
finite chains, direct products of two of these, and relabelled copies.
"""

from itertools import product

from hypothesis import strategies as st

from skewlat.algebra import CayleyAlgebra, is_closed, subalgebra
from skewlat.fixtures import EX13, FIG1, FIG3, X2
from skewlat.matrices import BLOCKS_4, BlockTriple, _add, _mul, example19, example20

BASE = [FIG1, FIG3, X2, EX13, example19().algebra, example20().algebra]


def rectangular_band(rows: int, cols: int) -> CayleyAlgebra:
    cells = list(product(range(rows), range(cols)))
    pos = {c: i for i, c in enumerate(cells)}
    meet = [[pos[(x[0], y[1])] for y in cells] for x in cells]
    join = [[pos[(y[0], x[1])] for y in cells] for x in cells]
    return CayleyAlgebra(meet, join)


def chain(n: int) -> CayleyAlgebra:
    return CayleyAlgebra([[min(x, y) for y in range(n)] for x in range(n)],
                         [[max(x, y) for y in range(n)] for x in range(n)])


def direct_product(s: CayleyAlgebra, t: CayleyAlgebra) -> CayleyAlgebra:
    cells = list(product(range(s.size), range(t.size)))
    pos = {c: i for i, c in enumerate(cells)}
    meet = [[pos[(s.meet[a][c], t.meet[b][d])] for c, d in cells] for a, b in cells]
    join = [[pos[(s.join[a][c], t.join[b][d])] for c, d in cells] for a, b in cells]
    return CayleyAlgebra(meet, join)


def relabel(alg: CayleyAlgebra, perm: list[int]) -> CayleyAlgebra:
    """Isomorphic copy where old element x becomes perm[x]."""
    n = alg.size
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    meet = [[perm[alg.meet[inv[i]][inv[k]]] for k in range(n)] for i in range(n)]
    join = [[perm[alg.join[inv[i]][inv[k]]] for k in range(n)] for i in range(n)]
    return CayleyAlgebra(meet, join)


def related_triple(draw_block, sizes, p):
    """Free blocks drawn at random; dependent blocks forced by the relations."""
    s = sizes
    shape = {name: (s[r], s[c]) for name, (r, c) in BLOCKS_4.items()}
    blocks = {name: draw_block(*shape[name]) for name in ("a14", "a24", "a34", "b13", "b23", "c12")}
    spec = BlockTriple(tuple(sizes), blocks, p)
    B = {name: spec.block(name) for name in blocks}
    B["b14"] = _add(B["a14"], _mul(B["b13"], B["a34"], p), p)
    B["b24"] = _add(B["a24"], _mul(B["b23"], B["a34"], p), p)
    B["c13"] = _add(B["b13"], _mul(B["c12"], B["b23"], p), p)
    B["c14"] = _add(B["b14"], _mul(B["c12"], B["b24"], p), p)
    return B


@st.composite
def fixture_subalgebras(draw):
    alg = draw(st.sampled_from(BASE))
    subset = draw(st.sets(st.integers(0, alg.size - 1), min_size=1, max_size=alg.size))
    # close the subset under both operations
    closed = set(subset)
    while True:
        more = {t[x][y] for t in (alg.meet, alg.join) for x in closed for y in closed} - closed
        if not more:
            break
        closed |= more
    assert is_closed(alg, closed)
    return subalgebra(alg, sorted(closed))


small_pieces = st.one_of(
    st.builds(rectangular_band, st.integers(1, 3), st.integers(1, 3)),
    st.builds(chain, st.integers(1, 3)),
    st.sampled_from([FIG1, EX13]),
)


@st.composite
def skew_lattices(draw):
    kind = draw(st.sampled_from(["sub", "product", "rect", "chain"]))
    if kind == "sub":
        alg = draw(fixture_subalgebras())
    elif kind == "product":
        alg = direct_product(draw(small_pieces), draw(small_pieces))
        if alg.size > 16:
            alg = draw(fixture_subalgebras())
    elif kind == "rect":
        alg = rectangular_band(draw(st.integers(1, 3)), draw(st.integers(1, 3)))
    else:
        alg = chain(draw(st.integers(1, 5)))
    perm = draw(st.permutations(range(alg.size)))
    return relabel(alg, list(perm))

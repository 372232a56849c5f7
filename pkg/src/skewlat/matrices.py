"""Skew lattices of idempotent matrices with exact entries.

Matrices hold Python integers, reduced mod p when the characteristic p is
prime.  On idempotents, ∧ is the product and ∨ is ∇,
``x ∇ y = (x ∘ y)² = x + y + yx - xyx - yxy`` with ``x ∘ y = x + y - xy``.

The block helpers follow the standard form for right-handed skew chains
A > B > C: on a 4×4 block grid,

    a = [I 0 0 a14]    b = [I 0 b13 b14]    c = [I c12 c13 c14]
        [0 I 0 a24]        [0 I b23 b24]        [0  0   0   0 ]
        [0 0 I a34]        [0 0  0   0 ]        [0  0   0   0 ]
        [0 0 0  0 ]        [0 0  0   0 ]        [0  0   0   0 ]

and, for two classes, on a 3×3 block grid

    upper = [I 0 a13]    lower = [I x y]
            [0 I a23]            [0 0 0]
            [0 0  0 ]            [0 0 0]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .algebra import CayleyAlgebra, Verdict, classify, d_decomposition, verify_skew_lattice
from .category import is_strictly_categorical
from .cosets import CosetBijection, coset_bijection
from .errors import (
    CapExceeded,
    CriteriaDisagree,
    DimMismatch,
    InducedAlgebraInvalid,
    NablaNotAssociative,
    NotASkewChain,
    NotComparable,
    NotIdempotentGenerator,
    OrderPreconditionFailed,
    ScalarMismatch,
    ShapeMismatch,
)

Rows = tuple[tuple[int, ...], ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class ScalarSpec:
    """Exact integers (characteristic 0) or the field with p elements."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    def reduce(self, v: int) -> int:
        return v % self.characteristic if self.characteristic else v


# Rectangular block arithmetic on nested tuples.

def _reduce(rows, p: int) -> Rows:
    return tuple(tuple(v % p if p else v for v in row) for row in rows)


def _mul(x: Rows, y: Rows, p: int = 0) -> Rows:
    inner = len(y)
    cols = len(y[0]) if y else 0
    return _reduce(
        [[sum(x[i][k] * y[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(x))], p)


def _add(x: Rows, y: Rows, p: int = 0) -> Rows:
    return _reduce([[u + v for u, v in zip(r, s)] for r, s in zip(x, y)], p)


def _sub(x: Rows, y: Rows, p: int = 0) -> Rows:
    return _reduce([[u - v for u, v in zip(r, s)] for r, s in zip(x, y)], p)


def _zeros(r: int, c: int) -> Rows:
    return tuple(tuple(0 for _ in range(c)) for _ in range(r))


def _eye(n: int) -> Rows:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class ExactMatrix:
    entries: Rows
    scalar: ScalarSpec = field(default_factory=ScalarSpec)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square and nonempty")
        if isinstance(self.scalar, int):
            object.__setattr__(self, "scalar", ScalarSpec(self.scalar))
        object.__setattr__(self, "entries", _reduce(rows, self.scalar.characteristic))

    @classmethod
    def identity(cls, n: int, characteristic: int = 0) -> ExactMatrix:
        return cls(_eye(n), ScalarSpec(characteristic))

    @classmethod
    def zeros(cls, n: int, characteristic: int = 0) -> ExactMatrix:
        return cls(_zeros(n, n), ScalarSpec(characteristic))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def p(self) -> int:
        return self.scalar.characteristic

    def _check(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimMismatch(f"{self.dim} vs {other.dim}")
        if other.scalar != self.scalar:
            raise ScalarMismatch(f"{self.scalar} vs {other.scalar}")
        return None

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        return ExactMatrix(_mul(self.entries, other.entries, self.p), self.scalar)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        return ExactMatrix(_add(self.entries, other.entries, self.p), self.scalar)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check(other)
        return ExactMatrix(_sub(self.entries, other.entries, self.p), self.scalar)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(tuple(tuple(-v for v in row) for row in self.entries), self.scalar)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)

    def sort_key(self):
        return self.entries


def matrix(rows: Sequence[Sequence[int]], characteristic: int = 0) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(r) for r in rows), ScalarSpec(characteristic))


def mat_meet(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return x @ y


def mat_circ(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return x + y - x @ y


def is_idempotent(x: ExactMatrix) -> bool:
    return x @ x == x


def mat_nabla(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    """(x ∘ y)², checked against the five-term expansion.

    Squaring x + y - xy leaves an extra ``xyxy - xy``, so the two agree
    exactly when x, y and xy are idempotent, as inside any multiplicative
    band; the check is made only then.
    """
    circ = mat_circ(x, y)
    squared = circ @ circ
    if is_idempotent(x) and is_idempotent(y) and is_idempotent(x @ y):
        yx = y @ x
        expanded = x + y + yx - x @ yx - y @ x @ y
        if expanded != squared:
            raise CriteriaDisagree("nabla formulas", squared, expanded, (x, y))
    return squared


@dataclass(frozen=True)
class MatrixSkewLattice:
    """A finite set of idempotents closed under · and ∇, with its Cayley tables.

    Index ``i`` of ``algebra`` is ``elements[i]``; generators come first, in
    the order given.
    """

    generators: tuple[ExactMatrix, ...]
    elements: tuple[ExactMatrix, ...]
    names: tuple[str, ...]
    algebra: CayleyAlgebra
    nabla_is_circ: bool

    def index(self, x: ExactMatrix) -> int:
        return self.elements.index(x)

    def __len__(self) -> int:
        return len(self.elements)


def closure(gens: Sequence[ExactMatrix], cap: int = 4096,
            names: Sequence[str] | None = None) -> MatrixSkewLattice:
    """Least set containing ``gens`` closed under · and ∇.

    Each round adds the new products and ∇-joins in sorted entry order, so
    the result does not depend on iteration details.
    """
    if not gens:
        raise ValueError("need at least one generator")
    first = gens[0]
    for g in gens[1:]:
        first._check(g)
    for i, g in enumerate(gens):
        if not is_idempotent(g):
            raise NotIdempotentGenerator(i)
    elements: list[ExactMatrix] = []
    index: dict[ExactMatrix, int] = {}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    if len(elements) > cap:
        raise CapExceeded(cap)
    # products and ∇-joins by index pair, reused for the Cayley tables
    prod: dict[tuple[int, int], ExactMatrix] = {}
    nabla: dict[tuple[int, int], ExactMatrix] = {}
    done = 0
    while done < len(elements):
        size = len(elements)
        fresh = set()
        for i, k in product(range(size), repeat=2):
            if max(i, k) < done:
                continue
            x, y = elements[i], elements[k]
            prod[i, k] = x @ y
            nabla[i, k] = mat_nabla(x, y)
            for z in (prod[i, k], nabla[i, k]):
                if z not in index:
                    fresh.add(z)
        done = size
        for z in sorted(fresh, key=ExactMatrix.sort_key):
            index[z] = len(elements)
            elements.append(z)
            if len(elements) > cap:
                raise CapExceeded(cap)
    n = len(elements)
    meet = [[index[prod[i, k]] for k in range(n)] for i in range(n)]
    join = [[index[nabla[i, k]] for k in range(n)] for i in range(n)]
    for i, k, l in product(range(n), repeat=3):
        if join[join[i][k]][l] != join[i][join[k][l]]:
            raise NablaNotAssociative((i, k, l))
    given = list(names) if names is not None else [f"g{i}" for i in range(len(gens))]
    labels = [given[[g for g in gens].index(e)] if e in gens else f"m{i}" for i, e in enumerate(elements)]
    alg = CayleyAlgebra(meet, join, labels)
    report = verify_skew_lattice(alg)
    if not report.ok:
        raise InducedAlgebraInvalid(report)
    circ_agrees = all(mat_circ(elements[i], elements[k]) == nabla[i, k]
                      for i, k in product(range(n), repeat=2))
    return MatrixSkewLattice(tuple(gens), tuple(elements), alg.labels or tuple(labels), alg, circ_agrees)


# Block standard form.

BLOCKS_4 = {
    "a14": (0, 3), "a24": (1, 3), "a34": (2, 3),
    "b13": (0, 2), "b23": (1, 2), "b14": (0, 3), "b24": (1, 3),
    "c12": (0, 1), "c13": (0, 2), "c14": (0, 3),
}


@dataclass(frozen=True)
class BlockTriple:
    """Block sizes of the 4×4 grid plus the free blocks (missing ones are zero)."""

    sizes: tuple[int, int, int, int]
    blocks: Mapping[str, Sequence[Sequence[int]]] = field(default_factory=dict)
    characteristic: int = 0

    def block(self, name: str) -> Rows:
        r, c = BLOCKS_4[name]
        rows, cols = self.sizes[r], self.sizes[c]
        if name not in self.blocks:
            return _zeros(rows, cols)
        value = tuple(tuple(int(v) for v in row) for row in self.blocks[name])
        if len(value) != rows or any(len(row) != cols for row in value):
            raise ShapeMismatch(f"{name} must be {rows}x{cols}")
        return _reduce(value, self.characteristic)


def _assemble(sizes: Sequence[int], grid: dict[tuple[int, int], Rows], p: int) -> ExactMatrix:
    n = sum(sizes)
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    out = [[0] * n for _ in range(n)]
    for (bi, bj), blk in grid.items():
        for i, row in enumerate(blk):
            for j, v in enumerate(row):
                out[offs[bi] + i][offs[bj] + j] = v
    return ExactMatrix(tuple(map(tuple, out)), ScalarSpec(p))


def block_of(m: ExactMatrix, sizes: Sequence[int], bi: int, bj: int) -> Rows:
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    if sum(sizes) != m.dim:
        raise ShapeMismatch(f"block sizes {tuple(sizes)} do not fit dimension {m.dim}")
    return tuple(tuple(m.entries[offs[bi] + i][offs[bj]:offs[bj] + sizes[bj]])
                 for i in range(sizes[bi]))


def build_block_triple(spec: BlockTriple) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    s, p = spec.sizes, spec.characteristic
    if len(s) != 4 or any(k < 0 for k in s) or sum(s) == 0:
        raise ShapeMismatch(f"bad block sizes {s}")
    unknown = set(spec.blocks) - set(BLOCKS_4)
    if unknown:
        raise ShapeMismatch(f"unknown blocks {sorted(unknown)}")
    I = [_eye(k) for k in s]
    a = _assemble(s, {(0, 0): I[0], (1, 1): I[1], (2, 2): I[2],
                      (0, 3): spec.block("a14"), (1, 3): spec.block("a24"), (2, 3): spec.block("a34")}, p)
    b = _assemble(s, {(0, 0): I[0], (1, 1): I[1],
                      (0, 2): spec.block("b13"), (1, 2): spec.block("b23"),
                      (0, 3): spec.block("b14"), (1, 3): spec.block("b24")}, p)
    c = _assemble(s, {(0, 0): I[0], (0, 1): spec.block("c12"),
                      (0, 2): spec.block("c13"), (0, 3): spec.block("c14")}, p)
    return a, b, c


_FORM_4 = {
    # level -> (identity blocks, free blocks); every other block must be zero
    "a": ({0, 1, 2}, {(0, 3), (1, 3), (2, 3)}),
    "b": ({0, 1}, {(0, 2), (1, 2), (0, 3), (1, 3)}),
    "c": ({0}, {(0, 1), (0, 2), (0, 3)}),
}

_FORM_3 = {
    "upper": ({0, 1}, {(0, 2), (1, 2)}),
    "lower": ({0}, {(0, 1), (0, 2)}),
}


def _check_form(m: ExactMatrix, sizes: Sequence[int], form: tuple[set, set], name: str) -> None:
    ident, free = form
    for bi, bj in product(range(len(sizes)), repeat=2):
        blk = block_of(m, sizes, bi, bj)
        if bi == bj and bi in ident:
            want = _eye(sizes[bi])
        elif (bi, bj) in free:
            continue
        else:
            want = _zeros(sizes[bi], sizes[bj])
        if blk != want:
            raise ShapeMismatch(f"{name} is not in block form at block ({bi + 1},{bj + 1})")


def blocks_of_triple(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix,
                     sizes: Sequence[int]) -> dict[str, Rows]:
    for m, level in ((a, "a"), (b, "b"), (c, "c")):
        _check_form(m, sizes, _FORM_4[level], level)
    src = {"a": a, "b": b, "c": c}
    return {name: block_of(src[name[0]], sizes, r, col) for name, (r, col) in BLOCKS_4.items()}


@dataclass(frozen=True)
class Lemma16Result:
    relations: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.relations.values())

    def __bool__(self) -> bool:
        return self.holds


def lemma16_relations(blocks: Mapping[str, Rows], p: int = 0) -> dict[str, bool]:
    """The four block relations forced by a > b > c."""
    B = blocks
    return {
        "a14 + b13 a34 = b14": _add(B["a14"], _mul(B["b13"], B["a34"], p), p) == B["b14"],
        "a24 + b23 a34 = b24": _add(B["a24"], _mul(B["b23"], B["a34"], p), p) == B["b24"],
        "b13 + c12 b23 = c13": _add(B["b13"], _mul(B["c12"], B["b23"], p), p) == B["c13"],
        "b14 + c12 b24 = c14": _add(B["b14"], _mul(B["c12"], B["b24"], p), p) == B["c14"],
    }


def order_failures(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix) -> list[str]:
    """Which of the products witnessing a ≥ b ≥ c fail."""
    checks = {"a*b == b": a @ b == b, "b*a == b": b @ a == b,
              "b*c == c": b @ c == c, "c*b == c": c @ b == c}
    return [k for k, ok in checks.items() if not ok]


def lemma16_check(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix,
                  sizes: Sequence[int]) -> Lemma16Result:
    blocks = blocks_of_triple(a, b, c, sizes)
    failed = order_failures(a, b, c)
    if failed:
        raise OrderPreconditionFailed(failed)
    return Lemma16Result(lemma16_relations(blocks, a.p))


def _check_chain(classes: Sequence[Sequence[ExactMatrix]]) -> MatrixSkewLattice:
    members = [m for cls in classes for m in cls]
    if not members:
        raise NotASkewChain("no matrices given")
    lat = closure(members)
    if len(lat) != len(set(members)):
        raise NotASkewChain("the classes are not closed under · and ∇")
    d = d_decomposition(lat.algebra)
    idx = []
    for cls in classes:
        if not cls:
            continue
        ids = tuple(sorted(lat.index(m) for m in cls))
        if ids not in d.classes:
            raise NotASkewChain(f"{ids} is not a D-class")
        idx.append(d.classes.index(ids))
    for upper, lower in zip(idx, idx[1:]):
        if not d.above(upper, lower):
            raise NotASkewChain(f"class {upper} is not above class {lower}")
    return lat


@dataclass(frozen=True)
class Lemma17Result:
    """``strictly_categorical`` comes from the abstract midpoint test and is
    authoritative; the block-criterion verdicts are reported alongside."""

    strictly_categorical: bool
    witness: tuple | None
    block_verbatim: bool
    block_pairwise: bool

    @property
    def verbatim_agrees(self) -> bool:
        return self.block_verbatim == self.strictly_categorical

    @property
    def pairwise_agrees(self) -> bool:
        return self.block_pairwise == self.strictly_categorical


def lemma17_check(A: Sequence[ExactMatrix], B: Sequence[ExactMatrix], C: Sequence[ExactMatrix],
                  sizes: Sequence[int]) -> Lemma17Result:
    """Block criteria for strict categoricity of a skew chain A > B > C.

    ``block_verbatim``: for all a ∈ A, b ∈ B, c ∈ C some b' ∈ B satisfies
    b13 + c12 b'23 = c13, a24 + b23 a34 = b'24 and
    a14 + b13 a34 = c14 - c12 b'24.

    ``block_pairwise``: for all b, b' ∈ B some a ∈ A, c ∈ C make b·a equal
    c∘b', i.e. the three relations above together with b23 = b'23.
    """
    if not B:
        raise NotASkewChain("the middle class is empty")
    lat = _check_chain([A, B, C])
    strict = is_strictly_categorical(lat.algebra)
    p = B[0].p

    def parts(a, b, c):
        if a is None:
            a = build_block_triple(BlockTriple(tuple(sizes), characteristic=p))[0]
        if c is None:
            c = build_block_triple(BlockTriple(tuple(sizes), characteristic=p))[2]
        return blocks_of_triple(a, b, c, sizes)

    def relations(bl, bl2, same_23: bool) -> bool:
        ok = (_add(bl["b13"], _mul(bl["c12"], bl2["b23"], p), p) == bl["c13"]
              and _add(bl["a24"], _mul(bl["b23"], bl["a34"], p), p) == bl2["b24"]
              and _add(bl["a14"], _mul(bl["b13"], bl["a34"], p), p)
              == _sub(bl["c14"], _mul(bl["c12"], bl2["b24"], p), p))
        return ok and (not same_23 or bl["b23"] == bl2["b23"])

    if not A or not C:
        verbatim = pairwise = True
    else:
        verbatim = all(
            any(relations(parts(a, b, c), parts(a, b2, c), False) for b2 in B)
            for a, b, c in product(A, B, C))
        pairwise = all(
            any(relations(parts(a, b, c), parts(a, b2, c), True) for a, c in product(A, C))
            for b, b2 in product(B, repeat=2))
    return Lemma17Result(strict.holds, strict.witness, verbatim, pairwise)


@dataclass(frozen=True)
class Prop21Result:
    normal: bool
    conormal: bool
    block_normal: bool
    block_conormal: bool


def prop21_check(A: Sequence[ExactMatrix], B: Sequence[ExactMatrix],
                 sizes: Sequence[int]) -> Prop21Result:
    """Normality and conormality of a two-class skew lattice A > B of
    3×3-block matrices, by the block conditions and by the identities."""
    for m in A:
        _check_form(m, sizes, _FORM_3["upper"], "upper member")
    for m in B:
        _check_form(m, sizes, _FORM_3["lower"], "lower member")
    try:
        lat = _check_chain([A, B])
    except NotASkewChain as exc:
        raise NotComparable(0, 1) from exc
    flags = classify(lat.algebra)
    block_normal = len({block_of(v, sizes, 0, 1) for v in B}) <= 1
    block_conormal = len({block_of(u, sizes, 1, 2) for u in A}) <= 1
    if block_normal != flags.normal:
        raise CriteriaDisagree("normality", block_normal, flags.normal)
    if block_conormal != flags.conormal:
        raise CriteriaDisagree("conormality", block_conormal, flags.conormal)
    return Prop21Result(flags.normal, flags.conormal, block_normal, block_conormal)


@dataclass(frozen=True)
class MatrixCosetMap:
    graph: tuple[tuple[ExactMatrix, ExactMatrix], ...]
    bijection: CosetBijection


def remark18_maps(a: ExactMatrix, b: ExactMatrix, sizes: Sequence[int],
                  context: MatrixSkewLattice | None = None) -> MatrixCosetMap:
    """The coset bijection from a's coset onto b's, by block substitution.

    An upper member [I 0 u13; 0 I u23; 0 0 0] is sent to
    [I b12 u13 + b12 u23; 0 0 0; 0 0 0], which must match the abstract
    coset bijection computed on the Cayley tables.
    """
    _check_form(a, sizes, _FORM_3["upper"], "a")
    _check_form(b, sizes, _FORM_3["lower"], "b")
    lat = context if context is not None else closure([a, b], names=["a", "b"])
    phi = coset_bijection(lat.algebra, lat.index(a), lat.index(b))
    p = a.p
    b12 = block_of(b, sizes, 0, 1)
    graph = []
    for x, y in phi.graph:
        u = lat.elements[x]
        _check_form(u, sizes, _FORM_3["upper"], "coset member")
        image = _assemble(sizes, {
            (0, 0): _eye(sizes[0]),
            (0, 1): b12,
            (0, 2): _add(block_of(u, sizes, 0, 2), _mul(b12, block_of(u, sizes, 1, 2), p), p),
        }, p)
        if image != lat.elements[y]:
            raise CriteriaDisagree("block substitution vs coset bijection", image, lat.elements[y], (x, y))
        graph.append((u, image))
    return MatrixCosetMap(tuple(graph), phi)


EXAMPLE19_SIZES = (1, 1, 1, 1)
EXAMPLE20_SIZES = (2, 1, 1)


def example19_matrices(characteristic: int = 0) -> dict[str, ExactMatrix]:
    a, b, c = build_block_triple(BlockTriple(EXAMPLE19_SIZES, characteristic=characteristic))
    b2 = build_block_triple(BlockTriple(EXAMPLE19_SIZES, {"b23": [[1]]}, characteristic))[1]
    return {"a": a, "b": b, "b'": b2, "c": c}


def example19(characteristic: int = 0) -> MatrixSkewLattice:
    ms = example19_matrices(characteristic)
    return closure(list(ms.values()), names=list(ms))


def example20(characteristic: int = 0) -> MatrixSkewLattice:
    ms = example19_matrices(characteristic)
    names = ["a", "b", "b'"]
    return closure([ms[k] for k in names], names=names)

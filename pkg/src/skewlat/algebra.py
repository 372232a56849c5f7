"""Finite double bands given by Cayley tables.

A :class:`CayleyAlgebra` carries two binary operations on ``range(n)``:
``meet[x][y]`` is x ∧ y and ``join[x][y]`` is x ∨ y.  Construction only
checks that the tables are well formed, so non-skew-lattices can be loaded
and diagnosed; the algebraic laws are checked by the functions below.

Every law check walks its variables in lexicographic order and stops at the
first failure, so witnesses are the lexicographically smallest violating
tuples and reports are reproducible.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CriteriaDisagree,
    IndexOutOfRange,
    NotABand,
    NotClosed,
    NotSkewLattice,
)

Table = tuple[tuple[int, ...], ...]


class Verdict(NamedTuple):
    """A yes/no answer plus, when the answer is no, a violating tuple."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def _search(n: int, arity: int, bad: Callable[..., bool]) -> Verdict:
    for args in product(range(n), repeat=arity):
        if bad(*args):
            return Verdict(False, args)
    return Verdict(True)


@dataclass(frozen=True)
class LawReport:
    """Named verdicts, readable as boolean attributes (``report.normal``)."""

    results: dict[str, Verdict]

    def __getattr__(self, name: str) -> bool:
        results = self.__dict__.get("results", {})
        if name in results:
            return results[name].holds
        raise AttributeError(name)

    def __iter__(self) -> Iterator[tuple[str, Verdict]]:
        return iter(self.results.items())

    def witness(self, name: str) -> tuple | None:
        return self.results[name].witness

    @property
    def ok(self) -> bool:
        return all(v.holds for v in self.results.values())

    def failures(self) -> dict[str, tuple]:
        return {k: v.witness for k, v in self.results.items() if not v.holds}


class VerificationReport(LawReport):
    pass


class BandReport(LawReport):
    pass


class ClassificationFlags(LawReport):
    pass


def _as_table(rows: Iterable[Iterable[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class CayleyAlgebra:
    """A finite carrier ``range(n)`` with total tables for ∧ and ∨.

    ``labels`` are display names only.  Labels equal to the default
    ``"0", "1", ...`` are normalised away so that equality ignores them.
    """

    meet: Table
    join: Table
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        meet, join = _as_table(self.meet), _as_table(self.join)
        n = len(meet)
        if n == 0:
            raise IndexOutOfRange("an algebra needs at least one element")
        for name, table in (("meet", meet), ("join", join)):
            if len(table) != n:
                raise IndexOutOfRange(f"{name} table has {len(table)} rows, expected {n}")
            for x, row in enumerate(table):
                if len(row) != n:
                    raise IndexOutOfRange(f"{name} row {x} has {len(row)} entries, expected {n}")
                for y, v in enumerate(row):
                    if not 0 <= v < n:
                        raise IndexOutOfRange(f"{name}[{x}][{y}] = {v} is outside [0, {n})")
        labels = self.labels
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise IndexOutOfRange(f"{len(labels)} labels for {n} elements")
            if len(set(labels)) != n:
                raise IndexOutOfRange("labels must be pairwise distinct")
            if labels == tuple(str(i) for i in range(n)):
                labels = None
        object.__setattr__(self, "meet", meet)
        object.__setattr__(self, "join", join)
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.meet)

    def __len__(self) -> int:
        return len(self.meet)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index(self, label: str) -> int:
        names = self.labels or tuple(str(i) for i in range(self.size))
        return names.index(str(label))

    def m(self, *xs: int) -> int:
        """Left-to-right meet of the arguments."""
        acc = xs[0]
        for x in xs[1:]:
            acc = self.meet[acc][x]
        return acc

    def j(self, *xs: int) -> int:
        """Left-to-right join of the arguments."""
        acc = xs[0]
        for x in xs[1:]:
            acc = self.join[acc][x]
        return acc

    def dual(self) -> CayleyAlgebra:
        """The algebra with ∧ and ∨ swapped."""
        return CayleyAlgebra(self.join, self.meet, self.labels)


def singleton() -> CayleyAlgebra:
    return CayleyAlgebra(((0,),), ((0,),))


def verify_skew_lattice(alg: CayleyAlgebra) -> VerificationReport:
    n, m, j = alg.size, alg.meet, alg.join
    return VerificationReport({
        "meet_idempotent": _search(n, 1, lambda x: m[x][x] != x),
        "join_idempotent": _search(n, 1, lambda x: j[x][x] != x),
        "meet_associative": _search(n, 3, lambda x, y, z: m[m[x][y]][z] != m[x][m[y][z]]),
        "join_associative": _search(n, 3, lambda x, y, z: j[j[x][y]][z] != j[x][j[y][z]]),
        # x ∧ (x ∨ y) = x
        "meet_absorbs_left": _search(n, 2, lambda x, y: m[x][j[x][y]] != x),
        # (y ∨ x) ∧ x = x
        "meet_absorbs_right": _search(n, 2, lambda x, y: m[j[y][x]][x] != x),
        # x ∨ (x ∧ y) = x
        "join_absorbs_left": _search(n, 2, lambda x, y: j[x][m[x][y]] != x),
        # (y ∧ x) ∨ x = x
        "join_absorbs_right": _search(n, 2, lambda x, y: j[m[y][x]][x] != x),
    })


def is_skew_lattice(alg: CayleyAlgebra) -> bool:
    return verify_skew_lattice(alg).ok


def _band_table(alg: CayleyAlgebra, which: str) -> Table:
    if which == "meet":
        return alg.meet
    if which == "join":
        return alg.join
    raise ValueError(f"which must be 'meet' or 'join', not {which!r}")


def band_properties(alg: CayleyAlgebra, which: str = "meet") -> BandReport:
    """Regular, normal and rectangular band identities for one reduct."""
    t, n = _band_table(alg, which), alg.size
    idem = _search(n, 1, lambda x: t[x][x] != x)
    if not idem:
        raise NotABand(which, "idempotency", idem.witness)
    assoc = _search(n, 3, lambda x, y, z: t[t[x][y]][z] != t[x][t[y][z]])
    if not assoc:
        raise NotABand(which, "associativity", assoc.witness)
    return BandReport({
        # xyxzx = xyzx
        "regular": _search(n, 3, lambda x, y, z: t[t[t[t[x][y]][x]][z]][x] != t[t[t[x][y]][z]][x]),
        # xyzw = xzyw
        "normal": _search(n, 4, lambda x, y, z, w: t[t[t[x][y]][z]][w] != t[t[t[x][z]][y]][w]),
        # xyx = x
        "rectangular": _search(n, 2, lambda x, y: t[t[x][y]][x] != x),
    })


def natural_leq(alg: CayleyAlgebra, x: int, y: int, via: str = "meet") -> bool:
    """x ≤ y in the natural partial order."""
    if via == "meet":
        return alg.meet[x][y] == x and alg.meet[y][x] == x
    if via == "join":
        return alg.join[x][y] == y and alg.join[y][x] == y
    raise ValueError(via)


def natural_lt(alg: CayleyAlgebra, x: int, y: int) -> bool:
    return x != y and natural_leq(alg, x, y)


def natural_preceq(alg: CayleyAlgebra, x: int, y: int, via: str = "meet") -> bool:
    """x ⪯ y in the natural preorder."""
    if via == "meet":
        return alg.m(x, y, x) == x
    if via == "join":
        return alg.j(y, x, y) == y
    raise ValueError(via)


@dataclass(frozen=True)
class GreenRelations:
    R: tuple[tuple[int, ...], ...]
    L: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]


def _blocks(n: int, rel: Callable[[int, int], bool], name: str) -> tuple[tuple[int, ...], ...]:
    block_of: list[tuple[int, ...]] = []
    for x in range(n):
        block_of.append(tuple(y for y in range(n) if rel(x, y)))
    for x in range(n):
        for y in block_of[x]:
            if block_of[y] != block_of[x]:
                raise NotSkewLattice(f"{name} is not an equivalence", (x, y))
    return tuple(sorted(set(block_of)))


def _same_relation(n: int, r1, r2, what: str) -> None:
    for x, y in product(range(n), repeat=2):
        if r1(x, y) != r2(x, y):
            raise NotSkewLattice(f"{what} disagree", (x, y))


def green_relations(alg: CayleyAlgebra) -> GreenRelations:
    n, m, j = alg.size, alg.meet, alg.join

    def r_meet(x, y):
        return m[x][y] == y and m[y][x] == x

    def l_meet(x, y):
        return m[x][y] == x and m[y][x] == y

    def r_join(x, y):
        return j[x][y] == y and j[y][x] == x

    def l_join(x, y):
        return j[x][y] == x and j[y][x] == y

    def d_meet(x, y):
        return natural_preceq(alg, x, y) and natural_preceq(alg, y, x)

    def d_join(x, y):
        return natural_preceq(alg, x, y, "join") and natural_preceq(alg, y, x, "join")

    _same_relation(n, r_meet, l_join, "R_meet and L_join")
    _same_relation(n, l_meet, r_join, "L_meet and R_join")
    _same_relation(n, d_meet, d_join, "D_meet and D_join")
    return GreenRelations(
        R=_blocks(n, r_meet, "R"),
        L=_blocks(n, l_meet, "L"),
        D=_blocks(n, d_meet, "D"),
    )


@dataclass(frozen=True)
class DClassStructure:
    """The D-classes and the lattice reflection S/D.

    Class ``i`` lies below class ``k`` when ``quotient_meet[i][k] == i``.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    quotient_meet: Table
    quotient_join: Table
    is_lattice: bool

    def __len__(self) -> int:
        return len(self.classes)

    def leq(self, i: int, k: int) -> bool:
        return self.quotient_meet[i][k] == i

    def above(self, i: int, k: int) -> bool:
        """Class i strictly above class k."""
        return i != k and self.leq(k, i)

    def comparable(self, i: int, k: int) -> bool:
        return self.leq(i, k) or self.leq(k, i)

    def is_chain(self) -> bool:
        return all(self.comparable(i, k) for i, k in product(range(len(self)), repeat=2))

    def chains(self, length: int) -> list[tuple[int, ...]]:
        """All strictly descending chains of classes, top first, sorted."""
        out = [(i,) for i in range(len(self))]
        for _ in range(length - 1):
            out = [c + (k,) for c in out for k in range(len(self)) if self.above(c[-1], k)]
        return sorted(out)

    def comparable_pairs(self) -> list[tuple[int, int]]:
        return [(i, k) for i, k in product(range(len(self)), repeat=2) if self.above(i, k)]

    def lattice(self) -> CayleyAlgebra:
        return CayleyAlgebra(self.quotient_meet, self.quotient_join)


def _is_rectangular_subset(alg: CayleyAlgebra, members: Sequence[int]) -> Verdict:
    s = set(members)
    for x, y in product(members, repeat=2):
        if alg.meet[x][y] not in s or alg.join[x][y] not in s:
            return Verdict(False, (x, y))
        if alg.m(x, y, x) != x or alg.j(x, y, x) != x:
            return Verdict(False, (x, y))
    return Verdict(True)


def is_rectangular_subset(alg: CayleyAlgebra, members: Sequence[int]) -> Verdict:
    """Closed under both operations and x∧y∧x = x = x∨y∨x inside ``members``."""
    return _is_rectangular_subset(alg, sorted(members))


@functools.lru_cache(maxsize=256)
def d_decomposition(alg: CayleyAlgebra) -> DClassStructure:
    blocks = green_relations(alg).D
    classes = tuple(sorted(blocks, key=min))
    class_of = [0] * alg.size
    for i, block in enumerate(classes):
        for x in block:
            class_of[x] = i
    k = len(classes)
    qm = [[0] * k for _ in range(k)]
    qj = [[0] * k for _ in range(k)]
    for i, c in product(range(k), repeat=2):
        for table, q, op in ((alg.meet, qm, "meet"), (alg.join, qj, "join")):
            seen = {}
            for x, y in product(classes[i], classes[c]):
                seen.setdefault(class_of[table[x][y]], (x, y))
            if len(seen) != 1:
                pairs = sorted(seen.values())
                raise NotSkewLattice(f"D is not a congruence for {op}", (pairs[0], pairs[1]))
            q[i][c] = next(iter(seen))
    quotient = CayleyAlgebra(qm, qj)
    commutative = all(qm[a][b] == qm[b][a] and qj[a][b] == qj[b][a]
                      for a, b in product(range(k), repeat=2))
    is_lattice = commutative and verify_skew_lattice(quotient).ok
    for block in classes:
        rect = _is_rectangular_subset(alg, block)
        if not rect:
            raise NotSkewLattice("a D-class is not a rectangular subalgebra", rect.witness)
    return DClassStructure(classes, tuple(class_of), quotient.meet, quotient.join, is_lattice)


def lattice_distributive(dstruct: DClassStructure) -> Verdict:
    """Distributivity of the lattice reflection S/D."""
    qm, qj, k = dstruct.quotient_meet, dstruct.quotient_join, len(dstruct)
    return _search(k, 3, lambda x, y, z: qm[x][qj[y][z]] != qj[qm[x][y]][qm[x][z]])


def classify(alg: CayleyAlgebra) -> ClassificationFlags:
    n, m, j = alg.size, alg.meet, alg.join
    green = green_relations(alg)

    def block_map(blocks):
        out = [0] * n
        for idx, b in enumerate(blocks):
            for x in b:
                out[x] = idx
        return out

    r_of, l_of, d_of = block_map(green.R), block_map(green.L), block_map(green.D)
    meet_band = band_properties(alg, "meet")
    join_band = band_properties(alg, "join")

    def meet_dist_fails(x, y, z):
        yz = j[y][z]
        return (m[x][yz] != j[m[x][y]][m[x][z]]
                or m[yz][x] != j[m[y][x]][m[z][x]])

    def sandwich_fails(x, y, z):
        return (alg.m(x, j[y][z], x) != j[alg.m(x, y, x)][alg.m(x, z, x)]
                or alg.j(x, m[y][z], x) != m[alg.j(x, y, x)][alg.j(x, z, x)])

    return ClassificationFlags({
        "rectangular": _search(n, 2, lambda x, y: alg.m(x, y, x) != x),
        "left_handed": _search(n, 2, lambda x, y: d_of[x] == d_of[y] and l_of[x] != l_of[y]),
        "right_handed": _search(n, 2, lambda x, y: d_of[x] == d_of[y] and r_of[x] != r_of[y]),
        "normal": meet_band.results["normal"],
        "conormal": join_band.results["normal"],
        "symmetric": _search(n, 2, lambda x, y: (m[x][y] == m[y][x]) != (j[x][y] == j[y][x])),
        "regular_meet_band": meet_band.results["regular"],
        "regular_join_band": join_band.results["regular"],
        "meet_distributive": _search(n, 3, meet_dist_fails),
        "sandwiched_distributive": _search(n, 3, sandwich_fails),
    })


def closure_failure(alg: CayleyAlgebra, subset: Iterable[int]) -> tuple[int, int, str] | None:
    elems = sorted(set(subset))
    s = set(elems)
    for x, y in product(elems, repeat=2):
        if alg.meet[x][y] not in s:
            return (x, y, "meet")
        if alg.join[x][y] not in s:
            return (x, y, "join")
    return None


def is_closed(alg: CayleyAlgebra, subset: Iterable[int]) -> bool:
    return closure_failure(alg, subset) is None


def subalgebra(alg: CayleyAlgebra, subset: Iterable[int]) -> CayleyAlgebra:
    """Restriction to ``subset``; element ``subset[k]`` (sorted) becomes index k.

    The parent's labels follow the elements, so ``sub.label(k)`` names the
    original element.
    """
    elems = sorted(set(subset))
    if not elems:
        raise ValueError("subset must be nonempty")
    for x in elems:
        if not 0 <= x < alg.size:
            raise IndexOutOfRange(f"element {x} is outside [0, {alg.size})")
    bad = closure_failure(alg, elems)
    if bad is not None:
        raise NotClosed(*bad)
    pos = {x: k for k, x in enumerate(elems)}
    meet = [[pos[alg.meet[x][y]] for y in elems] for x in elems]
    join = [[pos[alg.join[x][y]] for y in elems] for x in elems]
    return CayleyAlgebra(meet, join, tuple(alg.label(x) for x in elems))


def rectangular_identity_check(alg: CayleyAlgebra) -> Verdict:
    """x ∧ y = y ∨ x for all pairs, cross-checked against x∧y∧x = x."""
    n, m, j = alg.size, alg.meet, alg.join
    ident = _search(n, 2, lambda x, y: m[x][y] != j[y][x])
    rect = _search(n, 2, lambda x, y: alg.m(x, y, x) != x)
    if ident.holds != rect.holds:
        raise CriteriaDisagree("rectangularity vs x∧y = y∨x", rect.holds, ident.holds,
                               ident.witness or rect.witness)
    return ident

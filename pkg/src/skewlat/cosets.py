"""Cosets, image sets and coset bijections between comparable D-classes.

For D-classes A > B, the down-cosets ``A∧b∧A`` partition B and the
up-cosets ``B∨a∨B`` partition A.  The coset bijection ``φ_{a,b}`` sends
``x ∈ B∨a∨B`` to ``x∧b∧x ∈ A∧b∧A``.

Classes may be passed either as a class index (into
``d_decomposition(alg).classes``) or as the collection of their members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .algebra import (
    CayleyAlgebra,
    DClassStructure,
    Verdict,
    d_decomposition,
    natural_leq,
    natural_lt,
)
from .errors import (
    CriteriaDisagree,
    ElementNotInClass,
    NotComparable,
    PartitionFailure,
)

ClassRef = int | Iterable[int]


def resolve_class(dstruct: DClassStructure, ref: ClassRef) -> int:
    if isinstance(ref, int):
        if not 0 <= ref < len(dstruct):
            raise IndexError(f"no D-class {ref}")
        return ref
    members = tuple(sorted(set(ref)))
    try:
        return dstruct.classes.index(members)
    except ValueError:
        raise ValueError(f"{set(members)} is not a D-class") from None


def comparable_classes(dstruct: DClassStructure, A: ClassRef, B: ClassRef) -> str:
    """Position of A relative to B: above, below, equal or incomparable."""
    a, b = resolve_class(dstruct, A), resolve_class(dstruct, B)
    if a == b:
        return "equal"
    if dstruct.above(a, b):
        return "above"
    if dstruct.above(b, a):
        return "below"
    return "incomparable"


def _pair(alg: CayleyAlgebra, A: ClassRef, B: ClassRef) -> tuple[DClassStructure, int, int]:
    d = d_decomposition(alg)
    a, b = resolve_class(d, A), resolve_class(d, B)
    if not d.above(a, b):
        raise NotComparable(a, b)
    return d, a, b


@dataclass(frozen=True)
class Coset:
    """A coset, identified by its members; the defining element is provenance."""

    upper_class: int
    lower_class: int
    direction: str  # "down": A∧b∧A inside the lower class; "up": B∨a∨B inside the upper
    members: tuple[int, ...]
    defining_element: int = field(compare=False)


@dataclass(frozen=True)
class ImageSet:
    element: int
    target_class: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class CosetPartition:
    upper: int
    lower: int
    up_cosets: tuple[tuple[int, ...], ...]
    down_cosets: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CosetCongruence:
    upper: int
    lower: int
    side: str
    blocks: tuple[tuple[int, ...], ...]
    congruence: Verdict


def _down(alg: CayleyAlgebra, upper: tuple[int, ...], b: int) -> tuple[int, ...]:
    return tuple(sorted({alg.m(a, b, a) for a in upper}))


def _up(alg: CayleyAlgebra, lower: tuple[int, ...], a: int) -> tuple[int, ...]:
    return tuple(sorted({alg.j(b, a, b) for b in lower}))


def coset_down(alg: CayleyAlgebra, A: ClassRef, B: ClassRef, b: int) -> Coset:
    """The coset A∧b∧A of A in B."""
    d, ia, ib = _pair(alg, A, B)
    if d.class_of[b] != ib:
        raise ElementNotInClass(b, ib)
    return Coset(ia, ib, "down", _down(alg, d.classes[ia], b), b)


def coset_up(alg: CayleyAlgebra, A: ClassRef, B: ClassRef, a: int) -> Coset:
    """The coset B∨a∨B of B in A (A is the upper class)."""
    d, ia, ib = _pair(alg, A, B)
    if d.class_of[a] != ia:
        raise ElementNotInClass(a, ia)
    return Coset(ia, ib, "up", _up(alg, d.classes[ib], a), a)


def image_set(alg: CayleyAlgebra, e: int, target: ClassRef) -> ImageSet:
    """e∧B∧e (target below e) or e∨A∨e (target above e).

    Both the sandwich formula and the order filter are evaluated and must
    agree.
    """
    d = d_decomposition(alg)
    t, own = resolve_class(d, target), d.class_of[e]
    members = d.classes[t]
    if d.above(own, t):
        sandwich = {alg.m(e, x, e) for x in members}
        ordered = {x for x in members if natural_lt(alg, x, e)}
    elif d.above(t, own):
        sandwich = {alg.j(e, x, e) for x in members}
        ordered = {x for x in members if natural_lt(alg, e, x)}
    else:
        raise NotComparable(own, t)
    if sandwich != ordered:
        raise CriteriaDisagree("image set", sorted(sandwich), sorted(ordered), (e, t))
    return ImageSet(e, t, tuple(sorted(sandwich)))


def _check_partition(blocks: set[tuple[int, ...]], whole: tuple[int, ...], what: str):
    seen: dict[int, tuple[int, ...]] = {}
    for block in sorted(blocks):
        for x in block:
            if x in seen:
                raise PartitionFailure(f"{what} overlap", (seen[x], block))
            seen[x] = block
    if sorted(seen) != list(whole):
        raise PartitionFailure(f"{what} do not cover the class", tuple(sorted(set(whole) - set(seen))))
    if len({len(b) for b in blocks}) != 1:
        raise PartitionFailure(f"{what} have unequal sizes", tuple(sorted(blocks)))


def coset_partition(alg: CayleyAlgebra, A: ClassRef, B: ClassRef) -> CosetPartition:
    d, ia, ib = _pair(alg, A, B)
    upper, lower = d.classes[ia], d.classes[ib]
    downs = {_down(alg, upper, b) for b in lower}
    ups = {_up(alg, lower, a) for a in upper}
    _check_partition(downs, lower, "down-cosets")
    _check_partition(ups, upper, "up-cosets")
    if len(next(iter(downs))) != len(next(iter(ups))):
        raise PartitionFailure("up- and down-cosets differ in size")
    for a in upper:
        img = set(image_set(alg, a, ib).members)
        for block in downs:
            if len(img & set(block)) != 1:
                raise PartitionFailure("image set is not a transversal", (a, block))
    for b in lower:
        img = set(image_set(alg, b, ia).members)
        for block in ups:
            if len(img & set(block)) != 1:
                raise PartitionFailure("image set is not a transversal", (b, block))
    return CosetPartition(ia, ib, tuple(sorted(ups)), tuple(sorted(downs)))


@dataclass(frozen=True, eq=False)
class PartialBijection:
    """A partial bijection between two D-classes.

    Equality compares source class, target class and graph, so empty maps
    between different classes stay distinct.
    """

    source_class: int
    target_class: int
    graph: tuple[tuple[int, int], ...]

    def __post_init__(self):
        graph = tuple(sorted((int(x), int(y)) for x, y in self.graph))
        xs = [x for x, _ in graph]
        ys = [y for _, y in graph]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise ValueError(f"graph is not injective: {graph}")
        object.__setattr__(self, "graph", graph)

    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return (self.source_class, self.target_class, self.graph) == (
            other.source_class, other.target_class, other.graph)

    def __hash__(self):
        return hash((self.source_class, self.target_class, self.graph))

    def __bool__(self) -> bool:
        return bool(self.graph)

    def __len__(self) -> int:
        return len(self.graph)

    def __call__(self, x: int) -> int:
        return dict(self.graph)[x]

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.graph)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(y for _, y in self.graph))

    def as_dict(self) -> dict[int, int]:
        return dict(self.graph)

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.graph)
        return f"{type(self).__name__}({self.source_class}->{self.target_class}: {{{body}}})"


class CosetBijection(PartialBijection):
    """φ_{a,b}: an up-coset of the upper class onto a down-coset of the lower."""

    @property
    def upper_class(self) -> int:
        return self.source_class

    @property
    def lower_class(self) -> int:
        return self.target_class

    @property
    def domain_coset(self) -> tuple[int, ...]:
        return self.domain

    @property
    def image_coset(self) -> tuple[int, ...]:
        return self.image


def coset_bijection(alg: CayleyAlgebra, a: int, b: int) -> CosetBijection:
    """φ_{a,b}: x ↦ x∧b∧x on B∨a∨B."""
    d = d_decomposition(alg)
    ia, ib = d.class_of[a], d.class_of[b]
    if not d.above(ia, ib):
        raise NotComparable(ia, ib)
    domain = _up(alg, d.classes[ib], a)
    graph = tuple((x, alg.m(x, b, x)) for x in domain)
    target = _down(alg, d.classes[ia], b)
    if sorted(y for _, y in graph) != list(target):
        raise PartitionFailure("coset bijection does not land on A∧b∧A", (a, b))
    for x, y in graph:
        if not natural_leq(alg, y, x):
            raise PartitionFailure("coset bijection pairs incomparable elements", (x, y))
    return CosetBijection(ia, ib, graph)


def coset_bijections(alg: CayleyAlgebra, A: ClassRef, B: ClassRef) -> list[CosetBijection]:
    """All distinct coset bijections from class A down to class B, sorted by graph."""
    d, ia, ib = _pair(alg, A, B)
    found = {coset_bijection(alg, a, b) for a, b in product(d.classes[ia], d.classes[ib])}
    return sorted(found, key=lambda f: f.graph)


def coset_equal(alg: CayleyAlgebra, A: ClassRef, y: int, y2: int) -> bool:
    """Whether A∧y∧A = A∧y2∧A, decided by set equality, the for-all
    criterion and the exists criterion, which must agree."""
    d = d_decomposition(alg)
    ia = resolve_class(d, A)
    ib = d.class_of[y]
    if d.class_of[y2] != ib:
        raise ElementNotInClass(y2, ib)
    if not d.above(ia, ib):
        raise NotComparable(ia, ib)
    upper = d.classes[ia]
    as_sets = _down(alg, upper, y) == _down(alg, upper, y2)
    for_all = all(alg.m(x, y, x) == alg.m(x, y2, x) for x in upper)
    exists = any(alg.m(x, y, x) == alg.m(x, y2, x) for x in upper)
    if not as_sets == for_all == exists:
        raise CriteriaDisagree("coset equality criteria", (as_sets, for_all), exists, (ia, y, y2))
    return as_sets


def _congruence_on(alg: CayleyAlgebra, blocks: tuple[tuple[int, ...], ...]) -> Verdict:
    block_of = {x: i for i, b in enumerate(blocks) for x in b}
    members = sorted(block_of)
    related = [(x, y) for x, y in product(members, repeat=2) if block_of[x] == block_of[y]]
    for (x, y), (z, w) in product(related, repeat=2):
        for table in (alg.meet, alg.join):
            p, q = table[x][z], table[y][w]
            if p not in block_of or q not in block_of or block_of[p] != block_of[q]:
                return Verdict(False, (x, y, z, w))
    return Verdict(True)


def coset_congruence(alg: CayleyAlgebra, upper: ClassRef, lower: ClassRef,
                     side: str = "lower") -> CosetCongruence:
    """Partition of ``side``'s class into cosets of the other class, with an
    exhaustive congruence check on that class as a subalgebra."""
    part = coset_partition(alg, upper, lower)
    if side == "lower":
        blocks = part.down_cosets
    elif side == "upper":
        blocks = part.up_cosets
    else:
        raise ValueError(f"side must be 'upper' or 'lower', not {side!r}")
    return CosetCongruence(part.upper, part.lower, side, blocks, _congruence_on(alg, blocks))


@dataclass(frozen=True)
class HomCheck:
    meet_hom: Verdict
    join_hom: Verdict


def hom_equivalence_check(alg: CayleyAlgebra, A: ClassRef, B: ClassRef,
                          mapping: Mapping[int, int]) -> HomCheck:
    """Whether a total map between two D-classes preserves ∧ and ∨."""
    d = d_decomposition(alg)
    src, dst = d.classes[resolve_class(d, A)], set(d.classes[resolve_class(d, B)])
    if sorted(mapping) != list(src) or not set(mapping.values()) <= dst:
        raise ValueError("mapping must be a total function between the two classes")
    f = mapping

    def preserves(table):
        for x, y in product(src, repeat=2):
            if f[table[x][y]] != table[f[x]][f[y]]:
                return Verdict(False, (x, y))
        return Verdict(True)

    return HomCheck(preserves(alg.meet), preserves(alg.join))


def normal_by_cosets(alg: CayleyAlgebra) -> Verdict:
    """Every comparable A > B leaves B as a single A-coset."""
    d = d_decomposition(alg)
    for ia, ib in d.comparable_pairs():
        part = coset_partition(alg, ia, ib)
        if len(part.down_cosets) != 1:
            return Verdict(False, (ia, ib))
    return Verdict(True)


def conormal_by_cosets(alg: CayleyAlgebra) -> Verdict:
    """Every comparable A > B leaves A as a single B-coset."""
    d = d_decomposition(alg)
    for ia, ib in d.comparable_pairs():
        part = coset_partition(alg, ia, ib)
        if len(part.up_cosets) != 1:
            return Verdict(False, (ia, ib))
    return Verdict(True)

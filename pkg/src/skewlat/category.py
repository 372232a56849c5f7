"""Composition of coset bijections, the ×-product, and the coset category.

For classes A > B > C and coset bijections φ: A→B, ψ: B→C, the plain
composite ψ∘φ may be empty, may be a coset bijection, or may be a proper
part of one.  ``cross_product`` returns the unique coset bijection that
contains a nonempty composite.  In a categorical skew lattice the composite
already is that bijection; when it is not, × can fail to be associative,
which ``associativity_audit`` detects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .algebra import CayleyAlgebra, Verdict, d_decomposition, natural_leq, natural_lt
from .cosets import (
    CosetBijection,
    PartialBijection,
    _down,
    _up,
    coset_bijection,
    coset_bijections,
    resolve_class,
)
from .errors import ClassMismatch, CriteriaDisagree, NotAChain, NotCategorical, NotComparable


def compose(psi: PartialBijection, phi: PartialBijection) -> PartialBijection:
    """ψ∘φ as partial maps: x ↦ ψ(φ(x)) wherever defined."""
    if phi.target_class != psi.source_class:
        raise ClassMismatch(f"cannot compose {psi!r} after {phi!r}")
    g = psi.as_dict()
    graph = tuple((x, g[y]) for x, y in phi.graph if y in g)
    return PartialBijection(phi.source_class, psi.target_class, graph)


def identity(alg: CayleyAlgebra, cls: int) -> PartialBijection:
    members = d_decomposition(alg).classes[cls]
    return PartialBijection(cls, cls, tuple((x, x) for x in members))


@dataclass(frozen=True)
class CrossProductResult:
    """ψ × φ: either empty (``chi is None``) or the coset bijection χ
    containing the raw composite."""

    composite: PartialBijection
    chi: CosetBijection | None

    @property
    def is_empty(self) -> bool:
        return self.chi is None

    def __bool__(self) -> bool:
        return self.chi is not None


def cross_product(alg: CayleyAlgebra, psi: CosetBijection, phi: CosetBijection) -> CrossProductResult:
    d = d_decomposition(alg)
    if phi.target_class != psi.source_class:
        raise ClassMismatch(f"{phi!r} does not end where {psi!r} starts")
    if not (d.above(phi.source_class, phi.target_class) and d.above(psi.source_class, psi.target_class)):
        raise NotAChain("cross product needs strictly descending classes")
    comp = compose(psi, phi)
    if not comp:
        return CrossProductResult(comp, None)
    a, c = comp.graph[0]
    chi = coset_bijection(alg, a, c)
    for a2, c2 in comp.graph[1:]:
        if coset_bijection(alg, a2, c2) != chi:
            raise CriteriaDisagree("containing coset bijection is not unique", chi, (a2, c2))
    if not set(comp.graph) <= set(chi.graph):
        raise CriteriaDisagree("composite not contained in its coset bijection", comp, chi)
    return CrossProductResult(comp, chi)


def _cross(alg, psi, phi) -> CosetBijection | None:
    if psi is None or phi is None:
        return None
    return cross_product(alg, psi, phi).chi


def _bijections_by_pair(alg: CayleyAlgebra) -> dict[tuple[int, int], list[CosetBijection]]:
    d = d_decomposition(alg)
    return {(i, k): coset_bijections(alg, i, k) for i, k in d.comparable_pairs()}


def _categorical_direct(alg: CayleyAlgebra) -> Verdict:
    d = d_decomposition(alg)
    bij = _bijections_by_pair(alg)
    for A, B, C in d.chains(3):
        targets = set(bij[A, C])
        for phi, psi in product(bij[A, B], bij[B, C]):
            comp = compose(psi, phi)
            if comp and comp not in targets:
                return Verdict(False, (phi, psi, cross_product(alg, psi, phi).chi))
    return Verdict(True)


def _midpoints(alg: CayleyAlgebra, A, B, C):
    """Triples a > b > c with a ∈ A, b ∈ B, c ∈ C."""
    for a, b, c in product(A, B, C):
        if natural_lt(alg, b, a) and natural_lt(alg, c, b):
            yield a, b, c


def _categorical_by_sets(alg: CayleyAlgebra) -> tuple[Verdict, Verdict]:
    """The two set-equality criteria over every a > b > c."""
    d = d_decomposition(alg)
    first, second = Verdict(True), Verdict(True)
    for iA, iB, iC in d.chains(3):
        A, B, C = (d.classes[i] for i in (iA, iB, iC))
        for a, b, c in _midpoints(alg, A, B, C):
            meet = set(_down(alg, A, b)) & set(_up(alg, C, b))
            ca = _up(alg, C, a)
            rhs1 = {alg.m(x, b, x) for x in ca}
            ac = _down(alg, A, c)
            rhs2 = {alg.j(y, b, y) for y in ac}
            if first and meet != rhs1:
                first = Verdict(False, (a, b, c))
            if second and meet != rhs2:
                second = Verdict(False, (a, b, c))
    return first, second


def is_categorical(alg: CayleyAlgebra) -> Verdict:
    """Nonempty composites of coset bijections are coset bijections.

    Decided by checking every composite directly and by the set-equality
    criteria on triples a > b > c; all three answers must coincide.  The
    witness is ``(φ, ψ, χ)`` with ψ∘φ nonempty but strictly inside χ.
    """
    direct = _categorical_direct(alg)
    first, second = _categorical_by_sets(alg)
    if not direct.holds == first.holds == second.holds:
        raise CriteriaDisagree("categoricity", direct, (first, second))
    return direct


def midpoint_witness(alg: CayleyAlgebra) -> tuple[int, int, int, int] | None:
    """Smallest (a, b, b', c) with a > b > c, a > b' > c, b < b', over class chains."""
    d = d_decomposition(alg)
    best = None
    for iA, iB, iC in d.chains(3):
        A, B, C = (d.classes[i] for i in (iA, iB, iC))
        for a, c in product(A, C):
            mids = [b for b in B if natural_lt(alg, b, a) and natural_lt(alg, c, b)]
            if len(mids) >= 2:
                cand = (a, mids[0], mids[1], c)
                if best is None or cand < best:
                    best = cand
    return best


def _disjoint_coset_witness(alg: CayleyAlgebra):
    d = d_decomposition(alg)
    for iA, iB, iC in d.chains(3):
        A, B, C = (d.classes[i] for i in (iA, iB, iC))
        for b, b2 in product(B, repeat=2):
            if not set(_down(alg, A, b)) & set(_up(alg, C, b2)):
                return (iA, iB, iC, b, b2)
    return None


def is_strictly_categorical(alg: CayleyAlgebra) -> Verdict:
    """Categorical, and composites along A > B > C are never empty.

    Decided by midpoint uniqueness and, independently, by categoricity plus
    nonempty intersection of every A-coset and C-coset in B.  The witness is
    the midpoint quadruple (a, b, b', c) when there is one, otherwise the
    failing route's witness.
    """
    mid = midpoint_witness(alg)
    by_midpoints = Verdict(mid is None, mid)
    categorical = is_categorical(alg)
    gap = _disjoint_coset_witness(alg)
    by_cosets = categorical.holds and gap is None
    if by_midpoints.holds != by_cosets:
        raise CriteriaDisagree("strict categoricity", by_midpoints, (categorical, gap))
    return by_midpoints


@dataclass(frozen=True)
class CategoricalVerdict:
    categorical: bool
    strictly_categorical: bool
    categorical_witness: tuple | None = None
    strict_witness: tuple | None = None


def categorical_verdict(alg: CayleyAlgebra) -> CategoricalVerdict:
    cat = is_categorical(alg)
    strict = is_strictly_categorical(alg)
    return CategoricalVerdict(cat.holds, strict.holds, cat.witness, strict.witness)


def empty_composites(alg: CayleyAlgebra) -> list[tuple[CosetBijection, CosetBijection]]:
    """Pairs (φ, ψ) of coset bijections along A > B > C with ψ∘φ empty."""
    d = d_decomposition(alg)
    bij = _bijections_by_pair(alg)
    out = []
    for A, B, C in d.chains(3):
        for phi, psi in product(bij[A, B], bij[B, C]):
            if not compose(psi, phi):
                out.append((phi, psi))
    return out


@dataclass
class CosetCategory:
    """D-classes as objects, coset bijections (plus identities and labelled
    empty maps) as morphisms, composed as partial bijections.

    Morphisms only run downward: hom(A, B) is empty when A < B, and holds
    the labelled empty map alone when A and B are incomparable.
    ``adjoined_empty`` lists hom-sets that received an empty morphism only
    because some composite landed there empty.
    """

    objects: tuple[int, ...]
    hom: dict[tuple[int, int], list[PartialBijection]]
    identities: dict[int, PartialBijection]
    strict: bool
    adjoined_empty: list[tuple[int, int]] = field(default_factory=list)

    def compose(self, psi: PartialBijection, phi: PartialBijection) -> PartialBijection:
        return compose(psi, phi)

    def morphisms(self):
        for key in sorted(self.hom):
            yield from self.hom[key]

    def check_laws(self) -> Verdict:
        ids = self.identities
        for (A, B), fs in self.hom.items():
            for f in fs:
                if compose(f, ids[A]) != f or compose(ids[B], f) != f:
                    return Verdict(False, ("identity", f))
        for (A, B) in self.hom:
            for C in self.objects:
                for D in self.objects:
                    for f, g, h in product(self.hom[A, B], self.hom[B, C], self.hom[C, D]):
                        if compose(h, compose(g, f)) != compose(compose(h, g), f):
                            return Verdict(False, ("associativity", f, g, h))
        for (A, B), fs in self.hom.items():
            for C in self.objects:
                for f, g in product(fs, self.hom[B, C]):
                    if compose(g, f) not in self.hom[A, C]:
                        return Verdict(False, ("closure", f, g))
        return Verdict(True)


def build_coset_category(alg: CayleyAlgebra) -> CosetCategory:
    cat = is_categorical(alg)
    if not cat:
        raise NotCategorical(f"composite {cat.witness[1]!r}∘{cat.witness[0]!r} is not a coset bijection")
    strict = is_strictly_categorical(alg).holds
    d = d_decomposition(alg)
    objects = tuple(range(len(d)))
    hom: dict[tuple[int, int], list[PartialBijection]] = {}
    ids = {A: identity(alg, A) for A in objects}
    for A, B in product(objects, repeat=2):
        empty = PartialBijection(A, B, ())
        if A == B:
            hom[A, B] = [ids[A]] + ([] if strict else [empty])
        elif d.above(A, B):
            hom[A, B] = list(coset_bijections(alg, A, B)) + ([] if strict else [empty])
        elif d.above(B, A):
            hom[A, B] = []
        else:
            hom[A, B] = [empty]
    category = CosetCategory(objects, hom, ids, strict)
    changed = True
    while changed:
        changed = False
        for A, B, C in product(objects, repeat=3):
            for f, g in product(list(hom[A, B]), list(hom[B, C])):
                h = compose(g, f)
                if h in hom[A, C]:
                    continue
                if h:
                    raise NotCategorical(f"{g!r}∘{f!r} is not a morphism")
                hom[A, C].append(h)
                category.adjoined_empty.append((A, C))
                changed = True
    laws = category.check_laws()
    if not laws:
        raise CriteriaDisagree("coset category laws", True, False, laws.witness)
    return category


@dataclass(frozen=True)
class AuditWitness:
    delta: CosetBijection
    psi: CosetBijection
    phi: CosetBijection
    left: CosetBijection | None   # δ × (ψ × φ)
    right: CosetBijection | None  # (δ × ψ) × φ


@dataclass(frozen=True)
class AssociativityAudit:
    witnesses: tuple[AuditWitness, ...]
    triples_checked: int

    @property
    def associative(self) -> bool:
        return not self.witnesses


def associativity_audit(alg: CayleyAlgebra) -> AssociativityAudit:
    d = d_decomposition(alg)
    bij = _bijections_by_pair(alg)
    found, count = [], 0
    for A, B, C, D in d.chains(4):
        for phi, psi, delta in product(bij[A, B], bij[B, C], bij[C, D]):
            count += 1
            left = _cross(alg, delta, _cross(alg, psi, phi))
            right = _cross(alg, _cross(alg, delta, psi), phi)
            if left != right:
                found.append(AuditWitness(delta, psi, phi, left, right))
    return AssociativityAudit(tuple(found), count)


def antichain_union_check(alg: CayleyAlgebra, A, B) -> Verdict:
    """The coset bijections A→B together cover exactly the pairs x ≥ y in A×B."""
    d = d_decomposition(alg)
    iA, iB = resolve_class(d, A), resolve_class(d, B)
    for cls in d.classes:
        for x, y in combinations(cls, 2):
            if natural_leq(alg, x, y) or natural_leq(alg, y, x):
                return Verdict(False, (x, y))
    if iA == iB:
        union = {(x, x) for x in d.classes[iA]}
    elif d.above(iA, iB):
        union = set()
        for f in coset_bijections(alg, iA, iB):
            union |= set(f.graph)
    else:
        raise NotComparable(iA, iB)
    order = {(x, y) for x, y in product(d.classes[iA], d.classes[iB]) if natural_leq(alg, y, x)}
    if union != order:
        return Verdict(False, tuple(sorted(union ^ order))[:1])
    return Verdict(True)

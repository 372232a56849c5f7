from itertools import product

import pytest
from hypothesis import given, settings

import oracle
from strategies import skew_lattices
from skewlat.algebra import classify, d_decomposition, is_rectangular_subset, natural_leq
from skewlat.cosets import (
    comparable_classes,
    coset_bijection,
    coset_bijections,
    coset_congruence,
    coset_down,
    coset_equal,
    coset_partition,
    coset_up,
    conormal_by_cosets,
    hom_equivalence_check,
    image_set,
    normal_by_cosets,
)
from skewlat.errors import ElementNotInClass, NotComparable
from skewlat.fixtures import EX13, FIG1, FIG3

A3, B3, C3, D3 = (0, 4), (1, 3, 6, 7), (2, 5), (8,)


def test_comparable_classes():
    d3, d1 = d_decomposition(FIG3), d_decomposition(FIG1)
    assert comparable_classes(d3, A3, C3) == "above"
    assert comparable_classes(d1, (2, 3), (2, 3)) == "equal"
    assert comparable_classes(d3, B3, A3) == "below"


def test_coset_down_examples():
    assert coset_down(FIG3, A3, B3, 3).members == (1, 3)
    assert coset_down(FIG3, A3, B3, 6).members == (6, 7)
    label = EX13.index
    c = coset_down(EX13, [label("1")], [label("2"), label("3")], label("2"))
    assert [EX13.label(x) for x in c.members] == ["2"]
    c3 = coset_down(EX13, [label("1")], [label("2"), label("3")], label("3"))
    assert [EX13.label(x) for x in c3.members] == ["3"]


def test_coset_up_examples():
    assert coset_up(FIG3, A3, B3, 0).members == (0, 4)
    assert coset_up(FIG3, B3, C3, 3).members == (3, 7)
    assert coset_up(FIG3, C3, D3, 2).members == (2,)


def test_coset_identity_is_member_set():
    assert coset_down(FIG3, A3, B3, 3) == coset_down(FIG3, A3, B3, 1)


def test_coset_errors():
    with pytest.raises(NotComparable):
        coset_down(FIG3, B3, A3, 0)
    with pytest.raises(ElementNotInClass):
        coset_down(FIG3, A3, B3, 2)


def test_image_set_examples():
    assert image_set(FIG3, 0, B3).members == (3, 6)
    assert image_set(FIG1, 1, (2, 3)).members == (2, 3)
    assert image_set(FIG3, 8, C3).members == (2, 5)
    with pytest.raises(NotComparable):
        image_set(FIG1, 2, (2, 3))


def test_coset_partition_examples():
    p = coset_partition(FIG3, A3, B3)
    assert p.down_cosets == ((1, 3), (6, 7)) and p.up_cosets == ((0, 4),)
    p = coset_partition(FIG3, B3, C3)
    assert p.down_cosets == ((2, 5),) and p.up_cosets == ((1, 6), (3, 7))
    p = coset_partition(FIG1, (1,), (2, 3))
    assert p.down_cosets == ((2,), (3,)) and p.up_cosets == ((1,),)


def test_coset_bijection_examples():
    assert coset_bijection(FIG3, 0, 6).as_dict() == {0: 6, 4: 7}
    assert coset_bijection(FIG3, 3, 2).as_dict() == {3: 2, 7: 5}
    assert coset_bijection(FIG3, 2, 8).as_dict() == {2: 8}
    with pytest.raises(NotComparable):
        coset_bijection(FIG3, 8, 2)


def test_coset_equal_examples():
    assert coset_equal(FIG3, A3, 3, 1)
    assert not coset_equal(FIG3, A3, 3, 6)
    assert coset_equal(FIG3, A3, 7, 7)


def test_coset_congruence_examples():
    c = coset_congruence(FIG3, A3, B3, side="lower")
    assert c.blocks == ((1, 3), (6, 7)) and c.congruence.holds
    c = coset_congruence(FIG3, B3, C3, side="upper")
    assert c.blocks == ((1, 6), (3, 7)) and c.congruence.holds
    c = coset_congruence(FIG3, C3, D3, side="lower")
    assert c.blocks == ((8,),) and c.congruence.holds


def test_hom_equivalence_examples():
    ident = hom_equivalence_check(FIG3, C3, C3, {2: 2, 5: 5})
    assert ident.meet_hom.holds and ident.join_hom.holds
    const = hom_equivalence_check(FIG3, B3, C3, {x: 2 for x in B3})
    assert const.meet_hom.holds and const.join_hom.holds


def test_hom_equivalence_all_maps_from_a_to_b():
    verdicts = []
    for u, v in product(B3, repeat=2):
        h = hom_equivalence_check(FIG3, A3, B3, {0: u, 4: v})
        assert h.meet_hom.holds == h.join_hom.holds
        verdicts.append(h.meet_hom.holds)
    assert len(verdicts) == 16
    # the coset bijections restricted to {0,4} are among the homomorphisms
    assert hom_equivalence_check(FIG3, A3, B3, {0: 6, 4: 7}).meet_hom.holds


# properties over generated skew lattices

def _tables(alg):
    return [list(r) for r in alg.meet], [list(r) for r in alg.join]


@settings(max_examples=50, deadline=None)
@given(skew_lattices())
def test_partitions_transversals_and_oracle(alg):
    d = d_decomposition(alg)
    m, j = _tables(alg)
    for ia, ib in d.comparable_pairs():
        A, B = d.classes[ia], d.classes[ib]
        p = coset_partition(alg, ia, ib)
        assert list(p.down_cosets) == oracle.down_cosets(m, j, A, B)
        assert list(p.up_cosets) == oracle.up_cosets(m, j, A, B)
        graphs = [f.graph for f in coset_bijections(alg, ia, ib)]
        assert graphs == oracle.coset_bijection_graphs(m, j, A, B)
        for coset in p.down_cosets + p.up_cosets:
            assert is_rectangular_subset(alg, coset).holds


@settings(max_examples=50, deadline=None)
@given(skew_lattices())
def test_coset_bijections_are_order_isomorphisms(alg):
    d = d_decomposition(alg)
    for ia, ib in d.comparable_pairs():
        for a, b in product(d.classes[ia], d.classes[ib]):
            f = coset_bijection(alg, a, b)
            g = f.as_dict()
            assert all(natural_leq(alg, y, x) for x, y in f.graph)
            for x, y in product(f.domain, repeat=2):
                assert g[alg.meet[x][y]] == alg.meet[g[x]][g[y]]
                assert g[alg.join[x][y]] == alg.join[g[x]][g[y]]
            # depends only on the two cosets
            for a2 in coset_up(alg, ia, ib, a).members:
                for b2 in coset_down(alg, ia, ib, b).members:
                    assert coset_bijection(alg, a2, b2) == f


@settings(max_examples=50, deadline=None)
@given(skew_lattices())
def test_coset_congruences(alg):
    d = d_decomposition(alg)
    for ia, ib in d.comparable_pairs():
        assert coset_congruence(alg, ia, ib, "lower").congruence.holds
        assert coset_congruence(alg, ia, ib, "upper").congruence.holds
        for y, y2 in product(d.classes[ib], repeat=2):
            coset_equal(alg, ia, y, y2)


@settings(max_examples=50, deadline=None)
@given(skew_lattices())
def test_normality_by_cosets(alg):
    flags = classify(alg)
    assert normal_by_cosets(alg).holds == flags.normal
    assert conormal_by_cosets(alg).holds == flags.conormal

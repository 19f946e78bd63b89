"""Randomised properties: relabelling invariance, quantifier characterisation,
and homomorphism transfer on random maps."""

from hypothesis import given, settings
from hypothesis import strategies as st

from oqkit.catalog import boolean_algebra, cylindric_set_algebra, mo, o6, product_lattice, with_simple_quantifiers
from oqkit.lattice import check_orthomodular, check_ortholattice, check_qca, check_quantifier
from oqkit.transforms import HomMap, check_hom_cqia, check_hom_qca, check_useful_lemma, cqia_to_qca, qca_to_cqia
from oracles import is_quantifier_by_closure, relabel_lattice, relabel_qca

LATTICES = [boolean_algebra(2), boolean_algebra(3), mo(2), mo(3), o6(), product_lattice(o6(), boolean_algebra(1))]
QCAS = [cylindric_set_algebra(2, 2), with_simple_quantifiers(mo(2), 2), with_simple_quantifiers(boolean_algebra(3), 2)]


@st.composite
def lattice_and_perm(draw, pool=LATTICES):
    L = draw(st.sampled_from(pool))
    return L, draw(st.permutations(range(L.n)))


@settings(max_examples=60, deadline=None)
@given(lattice_and_perm())
def test_verdicts_invariant_under_relabelling(args):
    L, perm = args
    M = relabel_lattice(L, perm)
    assert check_ortholattice(M).passed
    assert check_orthomodular(M).passed == check_orthomodular(L).passed
    assert check_useful_lemma(M).passed == check_useful_lemma(L).passed
    # witnesses move with the relabelling
    w = check_orthomodular(L, exhaustive=True).witnesses("oml")
    w2 = check_orthomodular(M, exhaustive=True).witnesses("oml")
    assert sorted(tuple(perm[x] for x in t) for t in w) == w2


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(QCAS).flatmap(lambda A: st.tuples(st.just(A), st.permutations(range(A.n)))))
def test_qca_round_trip_invariant_under_relabelling(args):
    A, perm = args
    B = relabel_qca(A, perm)
    assert check_qca(B).passed
    assert cqia_to_qca(qca_to_cqia(B)) == B


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([boolean_algebra(3), mo(2), mo(3)]).flatmap(
    lambda L: st.tuples(st.just(L), st.lists(st.integers(0, L.n - 1), min_size=L.n, max_size=L.n))
))
def test_quantifier_check_matches_closure_characterisation(args):
    L, q = args
    assert check_quantifier(L, q).passed == is_quantifier_by_closure(L, q)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=16, max_size=16))
def test_hom_transfer_on_random_cylset_maps(values):
    A = cylindric_set_algebra(2, 2)
    C = qca_to_cqia(A)
    h = HomMap.of(values, A.n)
    assert check_hom_qca(A, A, h).passed == check_hom_cqia(C, C, h).passed

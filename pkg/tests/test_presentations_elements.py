import math
from fractions import Fraction

import pytest

from bracketalg.checks import bracket_algebra, nichols_algebra
from bracketalg.elements import (
    dunkl_elements,
    elementary_symmetric,
    exp_dunkl,
    h_pair,
    product,
    rsm_A,
    rsm_A_closed_form,
    rsm_B,
    rsm_D,
    rsm_G2,
    specialize_elements,
    subalgebra_dimension,
    unipotent_inverse,
)
from bracketalg.laurent import Laurent
from bracketalg.presentations import abelianize, get_presentation, presentation_A, presentation_B, presentation_D


def test_type_a_presentation_counts():
    p = presentation_A(3)
    assert len(p.gens) == 3
    assert p.comments.count("square") == 3
    assert p.comments.count("three-term") == 2
    assert p.algebra(2).dims()[2] == 4


def test_printed_type_a_presentation_is_larger():
    # without commuting disjoint pairs BE(A_3) keeps growing
    assert presentation_A(4, commute_disjoint=False).algebra(4).dims()[4] > presentation_A(4).algebra(4).dims()[4]


def test_type_a_total_dimension(be_a4):
    assert be_a4.complete
    assert sum(be_a4.dims()) == 576
    assert be_a4.dims()[:7] == [1, 6, 19, 42, 71, 96, 106]


def test_type_b2_dimension(be_b2):
    assert be_b2.complete and sum(be_b2.dims()) == 64


def test_type_d_is_specialization():
    p = presentation_D(3)
    assert all(g.kind != "single" for g in p.gens)
    assert sum(p.algebra(40).dims()) == 576


def test_b3_presentation_choices():
    assert presentation_B(3).algebra(3).dims() == [1, 9, 46, 180]
    assert presentation_B(3, extra_commutation=False).algebra(2).dims()[2] == 49


def test_abelianization_dimension():
    assert sum(abelianize(presentation_A(4)).algebra(40).dims()) == 24


def test_quantum_presentations_have_central_parameters():
    p = get_presentation("A", 3, quantum=True)
    qs = [g for g in p.gens if g.kind == "q"]
    assert len(qs) == 2 and all(p.weights[q] == 2 for q in qs)


def test_theta_a_expansion(be_a3):
    fam = rsm_A(be_a3, 3)
    assert fam[0] == be_a3.parse("1 + x12 + x13 + x13.x12")
    assert fam[0] == h_pair(be_a3, 1, 3) * h_pair(be_a3, 1, 2)
    for j in range(1, 4):
        assert rsm_A_closed_form(be_a3, 3, j) == fam[j - 1]


@pytest.mark.parametrize("z", [1, 2, Fraction(-1, 3)])
def test_theta_a_relations(be_a4, z):
    fam = rsm_A(be_a4, 4, z)
    assert not [c for _, _, c in fam.commutators() if not c.is_zero()]
    for k in range(1, 5):
        assert fam.evaluate(Laurent.parse(" + ".join(f"X{j}" for j in range(1, 5)), 4)) == be_a4.scalar(4)
        assert elementary_symmetric(k, fam.elements) == be_a4.scalar(math.comb(4, k))


def test_dunkl_elements_sign_convention(be_a3):
    theta = dunkl_elements(be_a3, "A", 3)
    assert theta[0] == be_a3.parse("x12 + x13")
    assert rsm_A(be_a3, 3)[0].component(1) == theta[0]


def test_exponentials_and_subalgebra(be_a3):
    E = exp_dunkl(be_a3, "A", 3)
    assert subalgebra_dimension(E.elements) == 6
    assert subalgebra_dimension([be_a3.one()]) == 1


def test_theta_b_commute_and_specialize(be_b2):
    fam = rsm_B(be_b2, 2, 2, Fraction(1, 3))
    assert fam[0] * fam[1] == fam[1] * fam[0]
    a = bracket_algebra("A", 2, 6)
    assert [specialize_elements("A", t, a) for t in rsm_B(be_b2, 2, 2).elements] == rsm_A(a, 2, 2).elements


def test_theta_d_commute():
    d3 = bracket_algebra("D", 3, 6)
    fam = rsm_D(d3, 3)
    assert all(c.is_zero() for _, _, c in fam.commutators())


def test_theta_g2_in_nichols_algebra():
    n = nichols_algebra("G2", 2, 5)
    fam = rsm_G2(n)
    assert fam[0] * fam[1] == fam[1] * fam[0]


def test_inverse_of_product(be_b2):
    fam = rsm_B(be_b2, 2)
    p = product(fam.elements)
    assert p * unipotent_inverse(p) == be_b2.one()

import pytest

from bracketalg.checks import bracket_algebra, nichols_algebra
from bracketalg.nichols import NicholsAlgebra, YDModule, braiding_checks, symmetrizer_dims
from bracketalg.roots import RootSystem


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("D", 3), ("G2", 2)])
def test_braiding_is_yetter_drinfeld(family, n):
    assert braiding_checks(YDModule(RootSystem(family, n))) == {"braid": 0, "equivariance": 0}


@pytest.mark.parametrize("family,n,degree", [("A", 3, 4), ("A", 4, 3), ("B", 2, 4), ("G2", 2, 3), ("D", 3, 3)])
def test_symmetrizer_methods_agree(family, n, degree):
    system = RootSystem(family, n)
    naive = symmetrizer_dims(system, degree, "naive")
    assert naive == symmetrizer_dims(system, degree, "factorized")
    assert naive == NicholsAlgebra(system, degree).hilbert_coefficients(degree)


def test_small_nichols_algebras():
    a2 = nichols_algebra("A", 3, 6)
    assert a2.complete and a2.dims() == [1, 3, 4, 3, 1, 0]
    b2 = nichols_algebra("B", 2, 6)
    assert b2.complete and sum(b2.dims()) == 64
    assert nichols_algebra("C", 2, 6).dims() == b2.dims()


@pytest.mark.parametrize("family,n", [("A", 4), ("B", 2), ("D", 3)])
def test_bracket_and_nichols_agree(family, n):
    assert bracket_algebra(family, n, 6).dims() == nichols_algebra(family, n, 6).dims()


@pytest.mark.parametrize("family,n", [("A", 4), ("B", 2), ("C", 2), ("D", 3)])
def test_derivation_kernel_vanishes(family, n):
    alg = nichols_algebra(family, n, 6)
    assert all(alg.derivation_kernel_rank(d) == 0 for d in range(1, alg.built_degree + 1))


def test_derivations_lower_degree():
    alg = nichols_algebra("B", 2, 6)
    x = alg.parse("x12.z1.y12")
    for g in alg.gens:
        image = alg.derivation(g)(x)
        assert image.is_zero() or image.degree() == 2


def test_nichols_record_round_trip():
    import json

    rec = json.loads(nichols_algebra("A", 3, 6).to_json())
    assert rec["dims"] == [1, 3, 4, 3, 1, 0] and rec["complete"]

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bracketalg.core import AlgebraError, Gen, GradedQuotient, dump_presentation, load_presentation, pair, parse_gen
from bracketalg.elements import exponential, fractional_power, unipotent_inverse
from bracketalg.presentations import presentation_A, presentation_B


def test_fk_normal_form(be_a3):
    assert be_a3.parse("x12.x23") == be_a3.parse("x23.x13 + x13.x12")
    assert be_a3.parse("x12.x12").is_zero()


def test_signed_pairs():
    assert pair(2, 1) == (-1, Gen("pair", 1, 2))
    assert parse_gen("x21") == (-1, Gen("pair", 1, 2))
    with pytest.raises(AlgebraError):
        pair(1, 1)


def test_be_a2_hilbert(be_a3):
    assert be_a3.complete
    assert be_a3.dims() == [1, 3, 4, 3, 1, 0]
    assert be_a3.hilbert_coefficients(6) == [1, 3, 4, 3, 1, 0, 0]


def test_build_stops_when_complete():
    ctx = presentation_A(3).algebra(40)
    assert ctx.complete and ctx.built_degree == 5
    ctx.build(60)
    assert ctx.built_degree == 5


def test_truncation_flag():
    ctx = presentation_B(2).algebra(2)
    x = ctx.parse("x12 + z1")
    assert not (x * x).truncated
    assert (x * x * x).truncated


def test_inhomogeneous_relation_rejected():
    g = [Gen("pair", 1, 2), Gen("pair", 1, 3)]
    with pytest.raises(AlgebraError):
        GradedQuotient(g, [{(g[0],): 1, (g[0], g[1]): 1}])


def test_presentation_round_trip():
    p = presentation_A(4)
    text = dump_presentation(p.gens, p.relations, p.comments)
    gens, rels = load_presentation(text)
    assert gens == p.gens
    assert GradedQuotient(gens, rels, 6).dims() == p.algebra(6).dims()


_words = st.lists(st.sampled_from(["x12", "x13", "x23"]), min_size=0, max_size=4).map(lambda w: ".".join(w) or "1")
_terms = st.lists(st.tuples(st.integers(-3, 3), _words), min_size=1, max_size=4)


def _element(ctx, terms):
    out = ctx.zero()
    for c, w in terms:
        out = out + ctx.parse(w) * c
    return out


@settings(max_examples=40, deadline=None)
@given(_terms, _terms, _terms)
def test_multiplication_associative_and_distributive(be_a3, a, b, c):
    a, b, c = (_element(be_a3, t) for t in (a, b, c))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(_terms, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_unipotent_calculus(be_a3, terms, r):
    nu = _element(be_a3, terms)
    nu = nu - nu.constant()
    u = 1 + nu
    assert u * unipotent_inverse(u) == be_a3.one()
    half = fractional_power(u, Fraction(1, 2))
    assert half * half == u
    assert fractional_power(u, r) * fractional_power(u, -r) == be_a3.one()
    assert exponential(nu) * exponential(-nu) == be_a3.one()

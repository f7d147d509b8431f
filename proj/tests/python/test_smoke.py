"""Smoke tests for the Python bindings: construction, products,
invariants, curvature, documents, and the identity runner."""

from fractions import Fraction

import biform as bf


def test_metric_and_exterior_product():
    g = bf.metric(3)
    assert g.bidegree() == (1, 1)
    gg = bf.exterior_product(g, g)
    assert gg == Fraction(2) * bf.metric_power_normalized(3, 2)
    assert bf.inner_product(g, g) == Fraction(3)


def test_fraction_round_trip():
    w = bf.DoubleForm(2)
    w.add_term((1,), (2,), Fraction(-3, 2))
    assert w.coefficient((1,), (2,)) == Fraction(-3, 2)
    assert w.terms() == {((1,), (2,)): Fraction(-3, 2)}
    # strings and ints are accepted on the way in
    w.add_term((2,), (1,), "1/2")
    assert w.coefficient((2,), (1,)) == Fraction(1, 2)


def test_composition_and_invariants():
    h = bf.DoubleForm(3)
    for i, v in enumerate([1, 2, 3], start=1):
        h.add_term((i,), (i,), v)
    assert bf.determinant(h) == Fraction(6)
    assert [bf.invariant_s(h, p) for p in range(4)] == [1, 6, 11, 6]
    assert bf.power_sum(h, 2) == Fraction(14)
    assert bf.comp_power(h, 2).coefficient((2,), (2,)) == Fraction(4)
    assert bf.compose(h, h) == bf.comp_power(h, 2)


def test_star_and_interior():
    g2 = bf.metric_power_normalized(4, 2)
    assert bf.hodge_star(bf.volume(4)) == bf.DoubleForm.scalar(4, 1)
    assert bf.interior(bf.metric(4), g2) == Fraction(3) * bf.metric(4)
    assert bf.contraction(g2) == Fraction(3) * bf.metric(4)


def test_curvature_and_pontrjagin():
    R = bf.constant_curvature(4, Fraction(1, 2))
    form, norm = bf.pontrjagin_form(R, 1)
    assert form.is_zero()
    assert norm.value == Fraction(1, 4)
    assert norm.pi_exponent == -2
    identity = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert bf.is_pure_in_basis(R.form, identity).pure


def test_documents():
    text = bf.serialize_form("bilinear", bf.metric(2))
    doc = bf.parse_document(text)
    assert doc["n"] == 2 and doc["kind"] == "bilinear"
    assert doc["form"] == bf.metric(2)
    try:
        bf.parse_document("{not json")
    except ValueError as err:
        assert "invalid JSON" in str(err)
    else:
        raise AssertionError("expected DocumentError")


def test_identity_runner():
    names = {entry["name"] for entry in bf.list_identities()}
    assert "laplace" in names and "greub-vanstone" in names
    report = bf.run_identity("greub-vanstone", n=3, trials=3, seed=7)
    assert report["passed"]
    control = bf.run_identity("laplace-wrong-sign", trials=1, seed=1)
    assert not control["passed"] and control["counterexample"]

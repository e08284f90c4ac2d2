# pylint: disable=C,R
from functools import reduce
from math import gcd

from hypothesis import given, settings, strategies as st
from sympy import Matrix

from casson import invariants
from casson.alpha import alpha_closure
from casson.diagram import LinkDiagram
from casson.invariants import H1, LaurentPolynomial
from casson.operators import load_fixture, whitehead_double


def test_alexander_of_fixtures():
    assert invariants.alexander_polynomial(load_fixture("trefoil")) == LaurentPolynomial({0: 1, 1: -1, 2: 1})
    assert invariants.alexander_polynomial(load_fixture("figure_eight")) == LaurentPolynomial({0: 1, 1: -3, 2: 1})


def test_laurent_normal_form():
    assert LaurentPolynomial({-1: -1, 0: 3, 1: -1}) == LaurentPolynomial({0: 1, 1: -3, 2: 1})
    assert LaurentPolynomial({5: -1}).is_one()
    assert LaurentPolynomial({0: 1, 1: -1, 2: 1}).evaluate(1) == 1


def test_h1_of_links():
    assert invariants.h1(load_fixture("hopf")) == H1(2, [])
    assert invariants.h1(load_fixture("three_meridians")) == H1(4, [])
    assert invariants.h1(LinkDiagram(loops=[1, 2])) == H1(2, [])


def test_wirtinger_of_trefoil():
    p = invariants.wirtinger(load_fixture("trefoil"))
    assert p.generators == 3
    assert len(p.relators) == 3
    assert all(len(r) == 4 for r in p.relators)


def test_over_arcs_of_unknotted_loop():
    assert invariants.over_arcs(LinkDiagram(loops=[1])) == {1: 0}


def test_certificates():
    assert invariants.unknot_certificate(LinkDiagram(loops=[1])).kind == invariants.CERTIFIED
    for n in (0, 1):
        assert invariants.unknot_certificate(alpha_closure(n)).kind == invariants.CERTIFIED
    verdict = invariants.unknot_certificate(load_fixture("trefoil"))
    assert verdict.kind == invariants.OBSTRUCTED
    assert "Alexander" in verdict.reason
    twisted = whitehead_double(LinkDiagram(loops=[1], framings={1: 0}), 0, 1, -2)
    assert invariants.unknot_certificate(twisted).kind == invariants.OBSTRUCTED


def test_untwisted_double_of_unknot_is_certified():
    double = whitehead_double(LinkDiagram(loops=[1], framings={1: 0}), 0)
    assert invariants.unknot_certificate(double).kind == invariants.CERTIFIED


def test_tiny_budget_is_inconclusive_or_certified():
    verdict = invariants.unknot_certificate(alpha_closure(1), budget=1)
    assert verdict.kind in (invariants.CERTIFIED, invariants.INCONCLUSIVE)


def test_report_for_links_has_no_verdict():
    report = invariants.certificate_report(load_fixture("hopf"))
    assert report == {"h1": {"free_rank": 2, "torsion": []}}
    report = invariants.certificate_report(load_fixture("figure_eight"))
    assert report["verdict"] == invariants.OBSTRUCTED
    assert report["alexander"] == "t**2 - 3*t + 1"


def test_word_reductions():
    assert invariants.free_reduce((1, -1, 2)) == (2,)
    assert invariants.inverse((1, -2)) == (2, -1)
    assert invariants.cyclic_key((1, 2)) == invariants.cyclic_key((2, 1))


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=1, max_size=4))


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_smith_normal_form_against_sympy(rows):
    diag = invariants.smith_normal_form(rows)
    m = Matrix(rows)
    assert len(diag) == m.rank()
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    # the first invariant factor is the gcd of the entries
    entries = [abs(x) for row in rows for x in row if x]
    if entries:
        assert diag[0] == reduce(gcd, entries)
    if m.rows == m.cols and len(diag) == m.rows:
        assert reduce(lambda a, b: a * b, diag) == abs(m.det())

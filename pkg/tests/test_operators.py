# pylint: disable=C,R
import pytest

from casson import diagram, invariants, operators
from casson.alpha import stage_diagram
from casson.diagram import LinkDiagram
from casson.errors import CassonError, FramingError

UNKNOT = LinkDiagram(loops=[1], framings={1: 0})


def framed(name):
    return operators.load_fixture(name).with_framing(0, 0)


def test_untwisted_doubles_have_trivial_alexander():
    for d in (UNKNOT, framed("trefoil"), framed("figure_eight")):
        double = operators.whitehead_double(d, 0)
        assert len(double.components()) == 1
        assert diagram.validate(double).ok
        assert invariants.alexander_polynomial(double).is_one()


def test_negative_clasp_double():
    double = operators.whitehead_double(framed("trefoil"), 0, sign=-1)
    assert invariants.alexander_polynomial(double).is_one()
    assert double.framing(0) == 0


def test_twisted_double_is_knotted():
    double = operators.whitehead_double(UNKNOT, 0, 1, -2)
    assert not invariants.alexander_polynomial(double).is_one()


def test_blackboard_framing_is_refused():
    with pytest.raises(FramingError):
        operators.whitehead_double(operators.load_fixture("trefoil"), 0)
    with pytest.raises(FramingError):
        operators.cable(operators.load_fixture("trefoil"), 0, 2)


def _linking_pattern(d):
    return sorted(tuple(sorted(abs(int(x)) for x in row)) for row in diagram.linking_matrix(d))


def _self_writhes(d):
    return sorted(diagram.self_writhe(d, i) for i in range(len(d.components())))


def test_double_one_meridian_negatively():
    d = operators.load_fixture("three_meridians")
    index = d.component_index()
    out = operators.whitehead_double(d, index[7], sign=-1)
    assert len(out.components()) == 4
    assert diagram.validate(out).ok
    # the double bounds a disk in the complement of the meridian it replaced, so it no longer links the axis
    lk = diagram.linking_matrix(out)
    assert int(abs(lk).sum()) == 4

    expected = operators.load_fixture("meridian_double")
    report = diagram.validate(expected)
    assert report.ok, report.failures
    assert report.faces == 12
    assert sorted(x.sign for x in out.crossings) == sorted(x.sign for x in expected.crossings)
    assert _linking_pattern(out) == _linking_pattern(expected)
    assert _self_writhes(out) == _self_writhes(expected) == [-2, 0, 0, 0]


def test_cable_of_hopf():
    out = operators.cable(operators.load_fixture("hopf"), 0, 3)
    assert len(out.components()) == 4
    lk = diagram.linking_matrix(out)
    unframed = [i for i in range(4) if out.framing(i) is None]
    assert len(unframed) == 1
    other = unframed[0]
    assert sorted(int(x) for x in lk[other]) == [0, 1, 1, 1]
    assert all(out.framing(i) == 0 for i in range(4) if i != other)


def test_cable_keeps_one_copy_for_k_one():
    d = operators.load_fixture("hopf")
    assert operators.cable(d, 0, 1) == d
    with pytest.raises(CassonError):
        operators.cable(d, 0, 0)


def test_ramified_double():
    out = operators.ramified_double(UNKNOT, 0, [1, -1])
    assert len(out.components()) == 2
    assert diagram.validate(out).ok
    assert int(diagram.linking_matrix(out)[0, 1]) == 0
    single = operators.ramified_double(UNKNOT, 0, [1])
    assert single == operators.whitehead_double(UNKNOT, 0, 1)
    with pytest.raises(CassonError):
        operators.ramified_double(UNKNOT, 0, [])


def test_connect_sum():
    t = operators.load_fixture("trefoil")
    s = operators.connect_sum(t, 0, diagram.mirror(t), 0)
    assert len(s.components()) == 1
    assert len(s.crossings) == 6
    assert diagram.writhe(s) == 0
    assert diagram.validate(s).ok
    f = operators.connect_sum(framed("trefoil"), 0, framed("figure_eight"), 0)
    assert f.framing(0) == 0


def test_connect_sum_with_free_loop():
    t = operators.load_fixture("trefoil")
    s = operators.connect_sum(t, 0, LinkDiagram(loops=[1]), 0)
    assert diagram.canonical_dumps(s) == diagram.canonical_dumps(t)


def test_disjoint_union():
    u = operators.disjoint_union(operators.load_fixture("hopf"), operators.load_fixture("trefoil"))
    assert len(u.components()) == 3
    assert diagram.validate(u).ok


def test_pretzel_fixture():
    d = operators.make_pretzel_fixture()
    assert len(d.components()) == 2
    assert len(d.crossings) == 12
    assert len(d.ribbons) == 2
    assert invariants.h1(d) == invariants.H1(2, [])


def test_pretzel_needs_crossings():
    with pytest.raises(CassonError):
        operators.pretzel(3, 0)


def test_clasp_pattern_on_a_stage():
    d = stage_diagram(0, mult=4)
    out = operators.insert_clasp_pattern(d, 0)
    assert diagram.validate(out).ok
    with pytest.raises(CassonError):
        operators.insert_clasp_pattern(d, 17)


def test_missing_fixture(tmp_path, monkeypatch):
    monkeypatch.setenv("CASSON_FIXTURES", str(tmp_path))
    with pytest.raises(CassonError):
        operators.load_fixture("trefoil")

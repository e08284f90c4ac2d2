# pylint: disable=C,R
import pytest
from hypothesis import given, strategies as st

from casson import diagram
from casson.diagram import LinkDiagram, Tangle
from casson.errors import DiagramError
from casson.operators import connect_sum, load_fixture

FIXTURES = ("trefoil", "figure_eight", "hopf", "three_meridians")


def test_fixtures_are_valid():
    expected = {"trefoil": 1, "figure_eight": 1, "hopf": 2, "three_meridians": 4}
    for name, components in expected.items():
        report = diagram.validate(load_fixture(name))
        assert report.ok, report.failures
        assert report.components == components


def test_face_count_of_trefoil():
    # a connected 4-valent graph with V vertices has V + 2 faces
    assert diagram.validate(load_fixture("trefoil")).faces == 5


def test_writhe_and_linking():
    assert diagram.writhe(load_fixture("trefoil")) == 3
    assert diagram.writhe(load_fixture("figure_eight")) == 0
    lk = diagram.linking_matrix(load_fixture("hopf"))
    assert lk.tolist() == [[0, 1], [1, 0]]


def test_meridians_link_the_axis_once():
    lk = diagram.linking_matrix(load_fixture("three_meridians"))
    assert sorted(abs(int(x)) for x in lk[0, 1:]) == [1, 1, 1]
    assert not lk[1:, 1:].any()


def test_reverse_negates_linking():
    d = load_fixture("hopf")
    assert int(diagram.linking_matrix(diagram.reverse(d, 1))[0, 1]) == -1


def test_parse_errors():
    with pytest.raises(DiagramError):
        diagram.parse_pd("X+ 1 2 3\n")
    with pytest.raises(DiagramError):
        diagram.parse_pd("Q 1 2\n")
    with pytest.raises(DiagramError):
        diagram.parse_pd("X+ 1 4 2 3\nX+ 4 1 3 2\nF comp=5 framing=0\n")


def test_malformed_pd_is_reported_not_raised():
    # orientation clash, then an arc used three times
    d = diagram.parse_pd("X+ 1 4 2 3\nX- 4 1 3 2\n")
    report = diagram.validate(d)
    assert not report.ok
    assert report.failures[0][0] == "orientation"

    report = diagram.validate(LinkDiagram([(1, 4, 2, 3, 1), (4, 1, 3, 1, 1)]))
    assert report.failures == [("arc-incidence", 1)]

    report = diagram.validate(LinkDiagram([(1, 2, 3, 4, 1)]))
    assert report.failures == [("arc-incidence", 1)]


def test_framing_on_malformed_pd():
    with pytest.raises(DiagramError) as err:
        diagram.parse_pd("X+ 1 4 2 3\nX+ 4 1 3 1\nF comp=0 framing=0\n")
    assert err.value.arc == 1


def test_framing_records():
    d = diagram.parse_pd("X+ 1 5 2 4\nX+ 3 1 4 6\nX+ 5 3 6 2\nF comp=0 framing=0\n")
    assert d.framing(0) == 0
    assert d.with_framing(0, None).framing(0) is None


def test_bunch_expansion_counts_components():
    d = LinkDiagram(loops=[1], bunches=[(0, 1, 3)])
    assert d.represented_components() == 3
    e = diagram.expand_annotations(d)
    assert len(e.components()) == 3
    assert not e.crossings


def test_full_twist_on_three_strands():
    d = LinkDiagram(loops=[1], bunches=[(0, 1, 3)], boxes=[(((1, 1),), 1)])
    e = diagram.expand_annotations(d)
    assert len(e.crossings) == 6
    assert all(x.sign == 1 for x in e.crossings)
    assert diagram.validate(e).ok


def test_tangle_closure():
    t = Tangle(top=[1], bottom=[1])
    assert len(t.closure().components()) == 1
    t = Tangle(top=[1, 2], bottom=[1, 2])
    assert len(t.closure().components()) == 2
    assert diagram.validate(t.closure()).ok


def test_text_round_trip():
    for name in FIXTURES:
        d = load_fixture(name)
        assert diagram.canonical_dumps(diagram.parse_pd(d.to_text())) == diagram.canonical_dumps(d)


def test_canonical_is_idempotent():
    d = connect_sum(load_fixture("trefoil"), 0, load_fixture("figure_eight"), 0)
    c = diagram.canonical(d)
    assert diagram.canonical(c) == c


@st.composite
def pipelines(draw):
    d = load_fixture(draw(st.sampled_from(FIXTURES)))
    for step in draw(st.lists(st.sampled_from(["mirror", "sum", "canonical", "reverse"]), max_size=3)):
        if step == "mirror":
            d = diagram.mirror(d)
        elif step == "sum":
            d = connect_sum(d, 0, load_fixture(draw(st.sampled_from(FIXTURES))), 0)
        elif step == "reverse":
            d = diagram.reverse(d, 0)
        else:
            d = diagram.canonical(d)
    return d


@given(pipelines())
def test_pipelines_stay_valid(d):
    assert diagram.validate(d).ok


@given(pipelines())
def test_json_round_trip(d):
    assert diagram.loads(d.dumps()) == d


@given(pipelines())
def test_mirror_negates_writhe(d):
    assert diagram.writhe(diagram.mirror(d)) == -diagram.writhe(d)
    assert diagram.canonical_dumps(diagram.mirror(diagram.mirror(d))) == diagram.canonical_dumps(d)

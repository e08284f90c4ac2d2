# pylint: disable=C,R
import itertools

import pytest

from casson import movie
from casson.diagram import LinkDiagram
from casson.errors import CassonError, StageError
from casson.movie import Birth, Death, Movie, Saddle
from casson.render import render_stage
from casson.tree import SignedTree, make_ch_mn, make_ch_plus


def counts(m, check_until=0):
    stats = movie.surface_stats(m, check_until)
    return [(s.births, s.saddles, s.components) for s in stats.stages]


def test_c1_closed_forms():
    m = movie.generate_c1_movie(make_ch_plus(5), 5)
    assert counts(m, check_until=3) == [(2 ** r, 2 ** (r - 1) - 1, 2 ** (r - 1) + 1) for r in range(1, 6)]


def test_plane_closed_forms():
    m = movie.generate_plane_movie(make_ch_plus(5), 5)
    assert m.kind == movie.PLANE
    assert counts(m, check_until=2) == [
        (6, 1, 5), (14, 5, 9), (30, 13, 17), (62, 29, 33), (126, 61, 65)]


def test_plane_and_annulus_are_planar():
    for t in (make_ch_plus(3), make_ch_mn(2, 1, 2)):
        for gen in (movie.generate_plane_movie, movie.generate_annulus_movie):
            stats = movie.surface_stats(gen(t, 3), check_until=0)
            for s in stats.stages:
                assert s.deaths == 0
                assert all(c.genus == 0 for c in s.surfaces)


def test_annulus_has_one_boundary_circle():
    m = movie.generate_annulus_movie(make_ch_plus(2), 2)
    assert not any(isinstance(e, movie.DoublePointPair) for e in m.events)
    assert isinstance(m.events[0], movie.Boundary)
    assert m.metadata["kappa"] == [1, 0]


def test_first_stage_records_double_points():
    m = movie.generate_c1_movie(make_ch_mn(2, 1, 0), 2)
    pairs = [e for e in m.events if isinstance(e, movie.DoublePointPair)]
    assert sorted(e.sign for e in pairs) == [-1, 1, 1]
    assert all(e.stage == 1 for e in pairs)
    assert m.metadata["genus"] == 2


def test_depth_zero_is_refused_for_c1():
    with pytest.raises(CassonError):
        movie.generate_c1_movie(make_ch_plus(1), 0)
    assert movie.generate_plane_movie(make_ch_plus(1), 0).depth == 1


def test_pattern_needs_a_four_cable():
    m = movie.generate_c1_movie(make_ch_plus(2), 2)
    with pytest.raises(CassonError):
        movie.insert_clasp_pattern_movie(m)
    with pytest.raises(CassonError):
        movie.insert_clasp_pattern_movie(movie.cable_movie(m, 2))


def test_cable_movie_multiplies_counts():
    m = movie.generate_c1_movie(make_ch_plus(3), 3)
    single = counts(m)
    double = counts(movie.cable_movie(m, 2))
    assert double == [(2 * b, 2 * s, 2 * c) for b, s, c in single]


def test_mirror_movie():
    m = movie.generate_c1_movie(make_ch_mn(2, 1, 1), 2)
    mm = movie.mirror_movie(m)
    assert mm.metadata["kappa"] == [1, 2]
    assert movie.mirror_movie(mm) == m


def test_json_round_trip():
    m = movie.generate_plane_movie(make_ch_plus(2), 2)
    text = m.dumps()
    assert movie.loads(text) == m
    assert movie.loads(text).dumps() == text
    stage = m.to_json()["stages"][1]
    assert stage["r"] == 2
    assert stage["meridian_null_stage"] == 3


def test_generation_is_deterministic():
    a = movie.generate_plane_movie(make_ch_mn(1, 1, 1), 2).dumps()
    b = movie.generate_plane_movie(make_ch_mn(1, 1, 1), 2).dumps()
    assert a == b


def test_end_sum_is_order_independent():
    ms = [movie.generate_plane_movie(t, 1) for t in (make_ch_plus(1), make_ch_mn(2, 0, 1), make_ch_mn(1, 1, 1))]
    sums = [movie.end_sum(list(p)) for p in itertools.permutations(ms)]
    assert len({s.dumps() for s in sums}) == 1
    s = sums[0]
    assert s.kind == movie.ASSEMBLED
    assert s.depth == 3
    stats = movie.surface_stats(s, check_until=s.depth)
    assert stats.stages[-1].births == sum(movie.surface_stats(m).stages[-1].births for m in ms)
    assert stats.stages[-1].saddles == sum(movie.surface_stats(m).stages[-1].saddles for m in ms) + 2


def test_end_sum_of_one_movie():
    m = movie.generate_plane_movie(make_ch_plus(1), 1)
    assert movie.end_sum([m]) is m
    with pytest.raises(CassonError):
        movie.end_sum([])
    with pytest.raises(CassonError):
        movie.end_sum([movie.generate_c1_movie(make_ch_plus(1), 1)] * 2)


def test_placements():
    assert movie.stagger(3, "linear") == [0, 1, 2]
    assert movie.stagger(3, "polar") == [0, 0, 0]
    assert movie.stagger(6, "planar") == [0, 1, 1, 1, 1, 2]
    with pytest.raises(CassonError):
        movie.stagger(2, "spiral")


def test_cyclic_symmetrize_counts():
    m = movie.generate_plane_movie(make_ch_plus(2), 2)
    base = counts(m)
    c = movie.cyclic_symmetrize(m, 3)
    assert counts(c, check_until=c.depth) == [(3 * b + 1, 3 * s + 3, 3 * n - 2) for b, s, n in base]


def test_flip_ribbon_move():
    m = movie.generate_plane_movie(make_ch_plus(2), 2)
    f = movie.flip_ribbon_move(m)
    assert f != m
    band = [e for e in f.events if isinstance(e, Saddle) and e.diagonal is not None]
    assert [e.diagonal for e in band] == [1]
    assert movie.flip_ribbon_move(f) == m
    with pytest.raises((CassonError, StageError)):
        movie.flip_ribbon_move(m, copy=5)


def test_ch_mn_assembly_matches_the_tree_ledger():
    assembled = movie.ch_mn_c1_movie(2, 1, 3)
    direct = movie.generate_c1_movie(make_ch_mn(2, 1, 0), 3)
    a = [(b, s) for b, s, _ in counts(assembled)]
    d = [(b, s) for b, s, _ in counts(direct)]
    assert a == d


def test_ledger_mismatch_is_reported():
    m = Movie(movie.C1, [LinkDiagram(loops=[1, 2])], [Birth(0, 1)])
    with pytest.raises(StageError) as err:
        movie.surface_stats(m)
    assert err.value.stage == 1


def test_death_in_plane_movie_is_refused():
    m = Movie(movie.PLANE, [LinkDiagram()], [Birth(0, 1), Death(0, 1)])
    with pytest.raises(StageError):
        movie.surface_stats(m, check_until=0)


def test_ch_mn_annulus():
    for m, n in ((1, 0), (2, 1), (0, 2)):
        a = movie.ch_mn_annulus_movie(m, n, 3)
        assert a.kind == movie.ANNULUS
        assert a.metadata["kappa"] == [m, n]
        assert a.metadata["genus"] == max(m, n)
        assert not any(isinstance(e, (movie.DoublePointPair, Death)) for e in a.events)
        assert [e for e in a.events if isinstance(e, movie.Boundary)] == [movie.Boundary(0, 1)]
        stats = movie.surface_stats(a, check_until=0)
        for s in stats.stages:
            main = s.surfaces[0]
            assert (main.boundary, main.genus) == (2, 0)
            assert all(c.genus == 0 for c in s.surfaces)
    assembled = movie.ch_mn_annulus_movie(2, 1, 3)
    direct = movie.generate_annulus_movie(make_ch_mn(2, 1, 0), 3)
    assert [(b, s) for b, s, _ in counts(assembled)] == [(b, s) for b, s, _ in counts(direct)]


def ramified_tree():
    # two positive root edges; below them (+, -) and (+); then (-, -), (+) and (-)
    edges = [(0, 1, 1), (0, 2, 1), (1, 3, 1), (1, 4, -1), (2, 5, 1), (3, 6, -1), (3, 7, -1), (4, 8, 1), (5, 9, -1)]
    return SignedTree(0, edges)


def test_ramified_stages_carry_band_twists():
    m = movie.generate_c1_movie(ramified_tree(), 3)
    assert m.diagram(1).inserts[0].tangle.boxes[0].twists == -4
    assert [b.twists for b in m.diagram(1).boxes] == [-2]
    assert sorted(b.twists for b in m.diagram(2).boxes) == [-2, 2, 4]
    assert not m.diagram(3).boxes
    bands = lambda r: sorted(e.twists for e in m.events_at(r) if isinstance(e, Saddle))
    assert bands(2) == [-2, 0]
    assert bands(3) == [-2, -2, 2, 2, 4, 4]
    assert [s.components for s in movie.surface_stats(m, check_until=3).stages] == [3, 7, 17]


def test_ramified_stage_render_labels_the_boxes():
    m = movie.generate_c1_movie(ramified_tree(), 2)
    svg = render_stage(m.diagram(2))
    for label in ("+4", "-2", "+2"):
        assert ">{}<".format(label) in svg

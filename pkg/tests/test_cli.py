# pylint: disable=C,R
import json
import os

from casson import cli, movie
from casson.render import RenderSpec, render_stage, render_svg
from casson.tree import make_ch_plus


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tree_new_and_kinkiness(tmp_path, capsys):
    path = str(tmp_path / "t.json")
    code, _, _ = run(capsys, "tree", "new", "--m", "2", "--n", "1", "--depth", "1", "--out", path)
    assert code == 0
    code, out, _ = run(capsys, "tree", "kinkiness", path)
    assert code == 0
    assert json.loads(out) == {"kappa": [2, 1], "genus": 2, "core_framing": 2, "exact": True}


def test_tree_refines(tmp_path, capsys):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    run(capsys, "tree", "new", "--m", "2", "--n", "1", "--out", a)
    run(capsys, "tree", "new", "--m", "2", "--out", b)
    code, out, _ = run(capsys, "tree", "refines", a, b)
    assert code == 0
    assert json.loads(out) == {"refines": True}


def test_diagram_validate_fixture(capsys):
    code, out, _ = run(capsys, "diagram", "validate", "--in", "trefoil.pd")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["components"] == 1 and report["faces"] == 5


def test_invalid_diagram_exits_one(tmp_path, capsys):
    path = tmp_path / "bad.pd"
    path.write_text("X+ 1 4 2 3\nX- 4 1 3 2\n")
    code, out, _ = run(capsys, "diagram", "validate", "--in", str(path))
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_missing_input_exits_two(capsys):
    code, _, err = run(capsys, "diagram", "validate", "--in", "/nonexistent/knot.json")
    assert code == 2
    assert err.startswith("error:")
    assert "/nonexistent/knot.json" in err


def test_parse_error_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.pd"
    path.write_text("X+ 1 2\n")
    code, _, err = run(capsys, "diagram", "expand", "--in", str(path))
    assert code == 2
    assert "error:" in err


def test_usage_error_exits_two(capsys):
    code, _, _ = run(capsys, "diagram", "explode", "--in", "trefoil.pd")
    assert code == 2


def test_unknot_certificate(capsys):
    code, out, _ = run(capsys, "invariants", "unknot-cert", "--in", "trefoil.pd")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "Obstructed"
    assert report["h1"] == {"free_rank": 1, "torsion": []}


def test_op_double_pd_output(capsys):
    code, out, _ = run(capsys, "op", "double", "--in", "figure_eight.pd", "--framing", "0", "--format", "pd")
    assert code == 0
    assert out.count("X") > 8
    code, _, err = run(capsys, "op", "double", "--in", "trefoil.pd")
    assert code == 2
    assert "framing" in err


def test_movie_and_stats(tmp_path, capsys):
    path = str(tmp_path / "m.json")
    code, _, _ = run(capsys, "movie", "plane", "--depth", "2", "--out", path)
    assert code == 0
    code, out, err = run(capsys, "movie", "stats", path)
    assert code == 0
    stages = json.loads(out)["stages"]
    assert [(s["births"], s["saddles"], s["components"]) for s in stages] == [(6, 1, 5), (14, 5, 9)]
    assert "births" in err


def test_render_writes_one_file_per_stage(tmp_path, capsys):
    path = str(tmp_path / "m.json")
    run(capsys, "movie", "c1", "--depth", "3", "--out", path)
    out_dir = str(tmp_path / "svg")
    code, _, _ = run(capsys, "render", "--in", path, "--first", "2", "--out", out_dir)
    assert code == 0
    assert sorted(os.listdir(out_dir)) == ["stage-2.svg", "stage-3.svg"]
    code, _, _ = run(capsys, "render", "--in", path, "--first", "2", "--last", "7", "--out", out_dir)
    assert code == 2


def test_render_svg_content(tmp_path):
    m = movie.generate_plane_movie(make_ch_plus(2), 2)
    paths = render_svg(m, RenderSpec(out_dir=str(tmp_path)))
    assert len(paths) == 2
    with open(paths[1]) as f:
        text = f.read()
    assert text.startswith("<?xml")
    assert 'class="twist-box"' in text
    assert render_svg(m, RenderSpec(first=2, last=1, out_dir=str(tmp_path))) == []


def test_verify_suites(capsys):
    for suite in ("alpha", "c1-stats", "determinism"):
        code, _, err = run(capsys, "verify", "--suite", suite, "--depth", "2", "--timing")
        assert code == 0, err
        assert "ok   {}".format(suite) in err


def test_log_file(tmp_path, capsys):
    log = str(tmp_path / "logs" / "run.log")
    code, _, _ = run(capsys, "verify", "--suite", "alpha", "--log", log)
    assert code == 0
    with open(log) as f:
        assert "ok   alpha" in f.read()


def test_plane_stage_one_picture():
    m = movie.generate_plane_movie(make_ch_plus(1), 1)
    text = render_stage(m.diagram(1))
    assert text.count('class="component"') == 5
    assert text.count('class="twist-box"') == 1
    assert ">-2</text>" in text

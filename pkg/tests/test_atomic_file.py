# pylint: disable=C,R
import multiprocessing
import os

from casson.util.atomic_file import atomic_write


def _write_many(args):
    path, text, times = args
    for _ in range(times):
        atomic_write(path, text)
    return True


def test_concurrent_processes(tmp_path):
    path = str(tmp_path / "out.json")
    texts = ["{{\"writer\": {}}}\n".format(i) for i in range(4)]
    with multiprocessing.Pool(4) as pool:
        assert all(pool.map(_write_many, [(path, t, 200) for t in texts]))
    with open(path) as f:
        assert f.read() in texts
    assert os.listdir(str(tmp_path)) == ["out.json"]


def test_failed_write_leaves_no_temporary(tmp_path):
    path = str(tmp_path / "a.txt")
    atomic_write(path, "old\n")
    try:
        atomic_write(path, object())
    except TypeError:
        pass
    with open(path) as f:
        assert f.read() == "old\n"
    assert os.listdir(str(tmp_path)) == ["a.txt"]

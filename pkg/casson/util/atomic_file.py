'''
Atomic file output
'''
import os
import tempfile
import threading


def atomic_write(path, text):
    '''
    Write `text` to `path` through a temporary file in the same directory

    Readers see either the old content or the new one; concurrent writers each
    replace the file whole and the last `os.replace` wins.
    '''
    dirname = os.path.dirname(os.path.abspath(path))
    os.makedirs(dirname, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=dirname)
    try:
        with os.fdopen(fd, 'w') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def test_atomic_write():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "out", "a.json")
        atomic_write(path, "{}\n")
        atomic_write(path, "[]\n")
        with open(path) as f:
            assert f.read() == "[]\n"
        assert sorted(os.listdir(os.path.dirname(path))) == ["a.json"]


def test_concurrent_writers():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "a.txt")
        texts = ["{}\n".format(str(i) * 5000) for i in range(8)]
        atomic_write(path, texts[0])
        seen = []

        def write(text):
            for _ in range(20):
                atomic_write(path, text)
                with open(path) as f:
                    seen.append(f.read())

        threads = [threading.Thread(target=write, args=(t,)) for t in texts]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert set(seen) <= set(texts)
        assert os.listdir(d) == ["a.txt"]


def main():
    test_atomic_write()
    test_concurrent_writers()


if __name__ == "__main__":
    main()

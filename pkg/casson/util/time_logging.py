'''
Wall clock timing of named sections, reported as a table
'''
from time import perf_counter

DATA_TIMES = {}


def clear():
    global DATA_TIMES
    DATA_TIMES = {}


def start():
    return perf_counter()


def end(name, begin_time):
    end_time = perf_counter()
    DATA_TIMES.setdefault(name, []).append(end_time - begin_time)
    return end_time


def text_statistics():
    '''
    One line per section, slowest first: total seconds, calls, seconds per call, share of the run
    '''
    if not DATA_TIMES:
        return "[timing] nothing timed"
    run = sum(sum(times) for times in DATA_TIMES.values()) or 1.0
    lines = ["[timing] {:.<24} {:>9} {:>6} {:>10} {:>5}".format("section", "seconds", "calls", "per call", "%")]
    for name, times in sorted(DATA_TIMES.items(), key=lambda x: sum(x[1]), reverse=True):
        total = sum(times)
        lines.append("[timing] {:.<24} {:>9.3f} {:>6d} {:>10.4f} {:>5.0f}".format(
            name, total, len(times), total / len(times), 100 * total / run))
    return "\n".join(lines)


def test_statistics():
    clear()
    t0 = start()
    end("alpha", t0)
    end("alpha", t0)
    text = text_statistics()
    assert "alpha" in text
    assert text.splitlines()[1].split()[3] == "2"
    clear()
    assert text_statistics() == "[timing] nothing timed"


def main():
    test_statistics()


if __name__ == "__main__":
    main()

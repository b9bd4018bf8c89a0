# Copyright (c) iasikit authors. All rights reserved.
from io import StringIO

import iasikit


def reset_string_io(io):
    io.truncate(0)
    io.seek(0)


class TestProgressBar:
    def test_start(self):
        out = StringIO()
        bar_width = 20
        # without total task num
        prog_bar = iasikit.ProgressBar(bar_width=bar_width, file=out)
        assert out.getvalue() == "completed: 0, elapsed: 0s"
        reset_string_io(out)
        prog_bar = iasikit.ProgressBar(bar_width=bar_width,
                                       start=False,
                                       file=out)
        assert out.getvalue() == ""
        prog_bar.start()
        assert out.getvalue() == "completed: 0, elapsed: 0s"
        # with total task num
        reset_string_io(out)
        prog_bar = iasikit.ProgressBar(10, bar_width=bar_width, file=out)
        assert out.getvalue() == f"[{' ' * bar_width}] 0/10, elapsed: 0s, ETA:"

    def test_update(self):
        out = StringIO()
        prog_bar = iasikit.ProgressBar(4, bar_width=4, file=out)
        reset_string_io(out)
        prog_bar.update(2)
        assert prog_bar.completed == 2
        assert out.getvalue().startswith("\r[>>  ] 2/4")


def square(num):
    return num * num


def test_track_progress():
    out = StringIO()
    ret = iasikit.track_progress(square, [1, 2, 3], bar_width=3, file=out)
    assert ret == [1, 4, 9]
    assert out.getvalue().startswith("[   ] 0/3")
    assert "3/3" in out.getvalue()
    assert out.getvalue().endswith("\n")

    out = StringIO()
    ret = iasikit.track_progress(square, ((i for i in [1, 2, 3]), 3),
                                 bar_width=3,
                                 file=out)
    assert ret == [1, 4, 9]


def test_track_parallel_progress():
    out = StringIO()
    results = iasikit.track_parallel_progress(square, [1, 2, 3, 4],
                                              2,
                                              bar_width=4,
                                              file=out)
    assert results == [1, 4, 9, 16]
    assert "4/4" in out.getvalue()

    out = StringIO()
    results = iasikit.track_parallel_progress(square,
                                              ((i for i in [1, 2, 3, 4]), 4),
                                              2,
                                              chunksize=2,
                                              show_progress=False,
                                              file=out)
    assert results == [1, 4, 9, 16]
    assert out.getvalue() == ""

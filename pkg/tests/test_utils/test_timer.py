# Copyright (c) iasikit authors. All rights reserved.
import logging
import time

import pytest

import iasikit


def test_timer_init():
    timer = iasikit.Timer(start=False)
    assert not timer.is_running
    timer.start()
    assert timer.is_running
    timer = iasikit.Timer()
    assert timer.is_running


def test_timer_run():
    timer = iasikit.Timer()
    time.sleep(0.2)
    assert abs(timer.since_start() - 0.2) < 5e-2
    time.sleep(0.2)
    assert abs(timer.since_last() - 0.2) < 5e-2
    assert abs(timer.since_start() - 0.4) < 5e-2
    timer = iasikit.Timer(start=False)
    with pytest.raises(iasikit.TimerError):
        timer.since_start()
    with pytest.raises(iasikit.TimerError):
        timer.since_last()


def test_timer_context(capsys, caplog):
    with iasikit.Timer():
        time.sleep(0.2)
    out, _ = capsys.readouterr()
    assert abs(float(out) - 0.2) < 5e-2
    with iasikit.Timer(print_tmpl="time: {:.1f}s"):
        time.sleep(0.2)
    out, _ = capsys.readouterr()
    assert out == "time: 0.2s\n"

    logger = logging.getLogger("test.timer")
    with caplog.at_level(logging.INFO, logger="test.timer"):
        with iasikit.Timer(print_tmpl="audit took", logger=logger):
            pass
    assert caplog.records[-1].getMessage().startswith("audit took ")

# Copyright (c) iasikit authors. All rights reserved.
import logging
import time
from typing import Optional


class TimerError(Exception):
    r"""A reading was asked of a timer that is not running."""


class Timer:
    r"""Wall-clock stopwatch; the audit driver logs search durations with it.

    As a context manager it reports the time spent in the block, through
    `logger` when given and ``print`` otherwise. `print_tmpl` gets
    " {:.3f}" appended when it holds no float placeholder.

    Example:
        >>> with Timer(print_tmpl="audit took {:.2f}s"):
        ...     audit("first_kind_strong")
        audit took 0.41s
    """
    def __init__(self,
                 print_tmpl: Optional[str] = None,
                 start: bool = True,
                 logger: Optional[logging.Logger] = None):
        if not print_tmpl:
            print_tmpl = "{:.3f}"
        elif "f}" not in print_tmpl:
            print_tmpl += " {:.3f}"
        self.print_tmpl = print_tmpl
        self.logger = logger
        self._t_start: Optional[float] = None
        self._t_last: Optional[float] = None
        if start:
            self.start()

    @property
    def is_running(self) -> bool:
        return self._t_start is not None

    def start(self):
        now = time.perf_counter()
        if self._t_start is None:
            self._t_start = now
        self._t_last = now

    def _check(self) -> float:
        if self._t_start is None:
            raise TimerError("timer is not running")
        return time.perf_counter()

    def since_start(self) -> float:
        r"""Seconds since :meth:`start`; also marks a checkpoint."""
        self._t_last = self._check()
        return self._t_last - self._t_start

    def since_last(self) -> float:
        r"""Seconds since the previous checkpoint."""
        now = self._check()
        elapsed, self._t_last = now - self._t_last, now
        return elapsed

    def __enter__(self) -> "Timer":
        self.start()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        message = self.print_tmpl.format(self.since_last())
        if self.logger is None:
            print(message)
        else:
            self.logger.info(message)
        self._t_start = self._t_last = None

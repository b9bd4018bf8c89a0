# Copyright (c) iasikit authors. All rights reserved.
import sys
from collections.abc import Iterable, Sized
from multiprocessing import Pool
from shutil import get_terminal_size
from typing import Any, Callable, List, Optional, TextIO, Tuple

from .timer import Timer


class ProgressBar:
    r"""Text progress bar for long audit searches.

    It writes to stderr by default, keeping stdout for results. With
    ``task_num == 0`` only a running count is shown.
    """
    def __init__(self,
                 task_num: int = 0,
                 bar_width: int = 50,
                 start: bool = True,
                 file: TextIO = sys.stderr):
        self.task_num = task_num
        self.bar_width = bar_width
        self.completed = 0
        self.file = file
        self.timer: Optional[Timer] = None
        if start:
            self.start()

    def _emit(self, text: str):
        self.file.write(text)
        self.file.flush()

    def _width(self, msg_len: int) -> int:
        columns = get_terminal_size().columns
        return max(2, min(self.bar_width, columns - msg_len + 2,
                          int(columns * 0.6)))

    def start(self):
        if self.task_num > 0:
            self._emit(f"[{' ' * self.bar_width}] 0/{self.task_num}, "
                       "elapsed: 0s, ETA:")
        else:
            self._emit("completed: 0, elapsed: 0s")
        self.timer = Timer()

    def update(self, num_tasks: int = 1):
        assert num_tasks > 0, "num_tasks must be positive"
        self.completed += num_tasks
        elapsed = self.timer.since_start()
        rate = self.completed / elapsed if elapsed > 0 else float("inf")
        seconds = int(elapsed + 0.5)
        if self.task_num <= 0:
            self._emit(f"completed: {self.completed}, elapsed: {seconds}s, "
                       f"{rate:.1f} tasks/s")
            return

        done = self.completed / self.task_num
        eta = int(elapsed * (1 - done) / done + 0.5)
        tail = (f" {self.completed}/{self.task_num}, {rate:.1f} task/s, "
                f"elapsed: {seconds}s, ETA: {eta:5}s")
        width = self._width(len(tail) + 3)
        marks = int(width * done)
        self._emit(f"\r[{'>' * marks}{' ' * (width - marks)}]{tail}")

    def finish(self):
        self._emit("\n")


def _unpack_tasks(tasks) -> Tuple[Iterable, int]:
    r"""A sized iterable, or an ``(iterable, count)`` pair for generators."""
    if isinstance(tasks, tuple) and len(tasks) == 2 \
            and isinstance(tasks[1], int) and isinstance(tasks[0], Iterable):
        return tasks
    if isinstance(tasks, Sized) and isinstance(tasks, Iterable):
        return tasks, len(tasks)
    raise TypeError(
        "`tasks` must be a sized iterable or an (iterable, count) tuple")


def track_progress(func: Callable,
                   tasks,
                   bar_width: int = 50,
                   file: TextIO = sys.stderr,
                   **kwargs) -> List[Any]:
    r"""``[func(task, **kwargs) for task in tasks]`` in this process, with a
    progress bar."""
    tasks, task_num = _unpack_tasks(tasks)
    bar = ProgressBar(task_num, bar_width, file=file)
    results = []
    for task in tasks:
        results.append(func(task, **kwargs))
        bar.update()
    bar.finish()
    return results


def track_parallel_progress(func: Callable,
                            tasks,
                            nproc: int,
                            bar_width: int = 50,
                            chunksize: int = 1,
                            keep_order: bool = True,
                            show_progress: bool = True,
                            file: TextIO = sys.stderr) -> List[Any]:
    r"""Map `func` over `tasks` on a pool of `nproc` worker processes.

    Args:
        func (callable): a module-level (picklable) function of one task.
        tasks (list | tuple[Iterable, int]): the tasks, or (tasks, count).
        nproc (int): number of workers.
        bar_width (int): width of the progress bar.
        chunksize (int): tasks handed to a worker at a time.
        keep_order (bool): results in task order (``imap``) or in completion
            order (``imap_unordered``).
        show_progress (bool): draw the bar, or write nothing.

    Returns:
        list: the results.
    """
    tasks, task_num = _unpack_tasks(tasks)
    bar = ProgressBar(task_num, bar_width, file=file) if show_progress else None
    with Pool(nproc) as pool:
        mapper = pool.imap if keep_order else pool.imap_unordered
        results = []
        for result in mapper(func, tasks, chunksize):
            results.append(result)
            if bar is not None:
                bar.update()
    if bar is not None:
        bar.finish()
    return results

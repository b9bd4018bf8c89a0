# Copyright (c) iasikit authors. All rights reserved.
import functools
import logging
import os
import os.path as osp
import sys
from typing import Dict, Iterable, List, Optional, Tuple, Union

import termcolor
from tabulate import tabulate

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
_DATEFMT = "%m/%d %H:%M:%S"


def _plain(text, *args, **kwargs):
    return text


class _LevelFormatter(logging.Formatter):
    r"""Shortens ``iasikit.x.y`` to ``x.y`` and flags warnings and errors
    with a coloured tag."""
    def __init__(self, root: str, colored=termcolor.colored):
        super(_LevelFormatter, self).__init__(
            colored("[%(asctime)s %(name)s]", "green") +
            " %(levelname)s: %(message)s",
            datefmt=_DATEFMT)
        self._root = root + "."
        self._colored = colored

    def formatMessage(self, record):
        record.name = record.name.replace(self._root, "", 1)
        text = super(_LevelFormatter, self).formatMessage(record)
        if record.levelno >= logging.ERROR:
            return self._colored("ERROR", "red", attrs=["underline"]) + " " + text
        if record.levelno == logging.WARNING:
            return self._colored("WARNING", "red") + " " + text
        return text


def _stderr_handler() -> Tuple[logging.Handler, bool]:
    r"""(handler, whether it is rich)."""
    try:
        from rich.console import Console
        from rich.logging import RichHandler
    except ImportError:
        return logging.StreamHandler(sys.stderr), False
    return RichHandler(console=Console(stderr=True),
                       rich_tracebacks=True,
                       show_level=False,
                       show_time=False), True


@functools.lru_cache()
def get_logger(log_file: Optional[str] = None,
               name: str = "iasikit",
               log_level: Union[int, str] = logging.INFO,
               color: bool = True) -> logging.Logger:
    r"""Set up the logger `name` with a stderr handler (rich when installed)
    and, if `log_file` is given, a file handler.

    Calls are cached, so asking again with the same arguments returns the
    logger untouched; a call with other arguments replaces its handlers.

    Args:
        log_file (str, optional): also write records to this file.
        name (str): logger name, "iasikit" for the package root.
        log_level (int | str): a level number or a name such as "DEBUG".
        color (bool): colour the record prefix with termcolor. Ignored under
            rich, which colours on its own.
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
    logger = logging.getLogger(name)
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    console, rich = _stderr_handler()
    colored = termcolor.colored if color and not rich else _plain
    handlers: List[logging.Handler] = [console]
    if log_file is not None:
        log_dir = osp.dirname(log_file)
        if log_dir and not osp.isdir(log_dir):
            os.makedirs(log_dir)
        handlers.append(logging.FileHandler(log_file, "w"))

    for handler in handlers:
        plain = isinstance(handler, logging.FileHandler)
        handler.setFormatter(
            _LevelFormatter(name, colored=_plain if plain else colored))
        handler.setLevel(log_level)
        logger.addHandler(handler)
    logger.setLevel(log_level)
    return logger


def derive_logger(name: str, parent: str = "iasikit") -> logging.Logger:
    r"""A logger whose records go through the handlers of `parent`.

    Raises:
        KeyError: `parent` was never created
    """
    if parent not in logging.Logger.manager.loggerDict:
        raise KeyError(f"the parent logger-{parent} are not initialized")
    logger = logging.getLogger(name)
    logger.parent = logging.getLogger(parent)
    return logger


def print_log(msg: str,
              logger: Optional[Union[logging.Logger, str]] = None,
              level: int = logging.INFO):
    r"""Send `msg` to `logger`: None prints it, "silent" drops it, any other
    string names a logger set up through :func:`get_logger`."""
    if logger is None:
        print(msg)
    elif isinstance(logger, logging.Logger):
        logger.log(level, msg)
    elif logger == "silent":
        pass
    elif isinstance(logger, str):
        get_logger(name=logger).log(level, msg)
    else:
        raise TypeError(
            f"logger should be either a logging.Logger object, str, "
            f"'silent' or None, but got {type(logger)}")


def create_small_table(small_dict: Dict, tablefmt: str = "psql", **kwargs) -> str:
    r"""One-row table whose headers are the keys of `small_dict`."""
    keys, values = tuple(zip(*small_dict.items()))
    return tabulate([values],
                    headers=keys,
                    tablefmt=tablefmt,
                    stralign="center",
                    numalign="center",
                    **kwargs)


def table(data: Iterable,
          headers: Iterable,
          tablefmt: str = "psql",
          stralign: str = "left",
          numalign: str = "right",
          **kwargs) -> str:
    r"""tabulate with the package's defaults; used for every human-readable
    result (classification flags, audit summaries, sum-set rows)."""
    return tabulate(data,
                    headers=headers,
                    tablefmt=tablefmt,
                    stralign=stralign,
                    numalign=numalign,
                    **kwargs)

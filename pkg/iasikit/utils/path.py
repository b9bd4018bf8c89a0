# Copyright (c) iasikit authors. All rights reserved.
from pathlib import Path
from typing import Any, Union


def is_filepath(x: Any) -> bool:
    r"""Whether `x` can name a file (a str or a :class:`Path`)."""
    return isinstance(x, (str, Path))


def check_file(filepath: Union[str, Path],
               msg_tmpl: str = "file `{}` not exist or is a directory"):
    r"""Raise FileNotFoundError unless `filepath` is an existing regular
    file. Graph, labeling and config inputs all go through here, so the
    command line maps a missing input to its IO exit code."""
    if is_filepath(filepath) and not Path(filepath).is_file():
        raise FileNotFoundError(msg_tmpl.format(filepath))

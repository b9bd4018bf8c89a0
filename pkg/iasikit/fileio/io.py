# Copyright (c) iasikit authors. All rights reserved.
from pathlib import Path
from typing import Dict, Optional

from ..core import is_list_of
from .handlers import BaseFileHandler, JsonHandler, YamlHandler

# extension -> handler; iasikit.graph adds "edges" on import
file_handlers: Dict[str, BaseFileHandler] = {
    "json": JsonHandler(),
    "yaml": YamlHandler(),
    "yml": YamlHandler(),
}


def _handler(file, file_format: Optional[str]) -> BaseFileHandler:
    if file_format is None:
        if not isinstance(file, str):
            raise ValueError(
                "file_format must be given unless file is a path")
        file_format = file.rsplit(".", 1)[-1]
    try:
        return file_handlers[file_format]
    except KeyError:
        raise TypeError(f"Unsupported format: {file_format}")


def load(file, file_format: Optional[str] = None):
    r"""Load a json, yaml or edge-list file.

    Args:
        file (str | Path | file-like): a path, or an open text file.
        file_format (str, optional): "json", "yaml"/"yml", "edges" or any
            registered format. Inferred from the extension of a path.

    Raises:
        TypeError: unknown format, or `file` is neither a path nor readable
    """
    if isinstance(file, Path):
        file = str(file)
    handler = _handler(file, file_format)
    if isinstance(file, str):
        return handler.load_path(file)
    if hasattr(file, "read"):
        return handler.load_file(file)
    raise TypeError("'file' must be a filepath str or a file-object")


def dump(obj, file=None, file_format: Optional[str] = None, **kwargs):
    r"""Serialize `obj` to a string (`file` is None), a path or an open file.
    Extra keyword arguments go to the format's serializer, e.g. ``indent``
    for json.

    Returns:
        str | None: the text when `file` is None.
    """
    if isinstance(file, Path):
        file = str(file)
    if file is None and file_format is None:
        raise ValueError("file_format must be specified since file is None")
    handler = _handler(file, file_format)
    if file is None:
        return handler.dumps(obj, **kwargs)
    if isinstance(file, str):
        handler.dump_path(obj, file, **kwargs)
    elif hasattr(file, "write"):
        handler.dump_file(obj, file, **kwargs)
    else:
        raise TypeError("'file' must be a filename str or a file-object")


def register_handler(file_formats, **kwargs):
    r"""Class decorator registering a :class:`BaseFileHandler` subclass for
    one or more extensions.

    Example:
        >>> @register_handler("edges")
        ... class EdgeListHandler(BaseFileHandler):
        ...     ...
    """
    if isinstance(file_formats, str):
        file_formats = [file_formats]
    if not is_list_of(file_formats, str):
        raise TypeError("file_formats must be a str or a list of str")

    def wrap(cls):
        handler = cls(**kwargs)
        if not isinstance(handler, BaseFileHandler):
            raise TypeError(
                f"handler must be a child of BaseFileHandler, not {cls}")
        for ext in file_formats:
            file_handlers[ext] = handler
        return cls

    return wrap

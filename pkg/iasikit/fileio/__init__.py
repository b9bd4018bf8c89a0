# Copyright (c) iasikit authors. All rights reserved.
from .handlers import BaseFileHandler, JsonHandler, YamlHandler, to_builtin
from .io import dump, load, register_handler
from .parse import list_from_file, lines_from_text

__all__ = [k for k in globals().keys() if not k.startswith("_")]

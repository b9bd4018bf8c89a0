# Copyright (c) iasikit authors. All rights reserved.
from .parser import ArgumentParser, default_argument_parser

from .main import (EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_IMPOSSIBLE,
                   EXIT_COUNTEREXAMPLES, EXIT_IO, run, main)

__all__ = [k for k in globals().keys() if not k.startswith("_")]

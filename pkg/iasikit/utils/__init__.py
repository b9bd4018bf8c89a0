# Copyright (c) iasikit authors. All rights reserved.
from .path import is_filepath, check_file

from .processbar import ProgressBar, track_progress, track_parallel_progress

from .timer import Timer, TimerError

__all__ = [k for k in globals().keys() if not k.startswith("_")]

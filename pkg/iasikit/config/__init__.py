# Copyright (c) iasikit authors. All rights reserved.
from ._config import (Config, ConfigDict, merge_cfg_and_args, default_config)

from .logging import (LOG_LEVELS, get_logger, print_log, derive_logger,
                      create_small_table, table)

__all__ = [k for k in globals().keys() if not k.startswith("_")]

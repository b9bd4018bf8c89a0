# Copyright (c) iasikit authors. All rights reserved.
from .params import ConstructionParams

from .labelers import (construct_first_kind, construct_isoarithmetic,
                       construct_second_kind, default_differences)

__all__ = [k for k in globals().keys() if not k.startswith("_")]

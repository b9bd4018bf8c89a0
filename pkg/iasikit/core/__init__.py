# Copyright (c) iasikit authors. All rights reserved.
from .errors import (IasiError, InvalidArgumentError, ParseError,
                     NotFoundError, MissingLabelError, PreconditionError,
                     LabelCollisionError, IasiViolationError,
                     ConstructionImpossibleError)

from .misc import is_list_of, split_csv_ints, first_duplicate

from .registry import Registry, build_from_cfg

AUDITS = Registry("audits")
LABELERS = Registry("labelers")
TRANSFORMS = Registry("transforms")

__all__ = [k for k in globals().keys() if not k.startswith("_")]

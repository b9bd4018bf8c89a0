# Copyright (c) iasikit authors. All rights reserved.
from .intset import ELEMENT_MAX, IntegerSet, parse_integer_set

from .compat import (CompatibilityDecomposition, sumset,
                     compatibility_decomposition, compatibility_index,
                     maximal_class_size, saturated_classes, trivial_classes)

from .progression import (APSetDescriptor, expand, recognize_ap, is_ap_set,
                          ap_sumset_cardinality)

__all__ = [k for k in globals().keys() if not k.startswith("_")]

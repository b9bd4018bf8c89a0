# Copyright (c) iasikit authors. All rights reserved.
from .setlabel import (SetLabeling, labeling_from_json, load_labeling,
                       dump_labeling)

from .verify import (Verdict, induced_edge_label, set_indexing_number,
                     verify_iasi)

from .kinds import (EQUAL_DIFFERENCE, ARITHMETIC_MULTIPLE, FIRST_KIND,
                    SECOND_KIND_COPRIME, SECOND_KIND_COMMON_FACTOR,
                    EDGE_RELATIONS, EdgeKind, edge_kind, is_strong_edge,
                    is_semi_arithmetic_edge)

from .classify import ClassificationReport, EdgeReport, edge_id, classify

from .transport import TransportResult, transport_labeling

__all__ = [k for k in globals().keys() if not k.startswith("_")]

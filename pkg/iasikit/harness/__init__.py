# Copyright (c) iasikit authors. All rights reserved.
from .bounds import SearchBounds, enumerate_ap_pairs

from .oracle import (oracle_sums, oracle_sumset_cardinality,
                     oracle_maximal_class, oracle_is_ap)

from .report import (CONSISTENT, COUNTEREXAMPLES_FOUND, AuditReport,
                     Counterexample)

from .pairs import Outcome, PairAudit

from .graphs import GraphAudit, GraphInstance

from .driver import AUDIT_ALIASES, audit, list_audits, resolve_audit_id

__all__ = [k for k in globals().keys() if not k.startswith("_")]

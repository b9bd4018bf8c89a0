# Copyright (c) iasikit authors. All rights reserved.
from math import gcd
from typing import Any, Dict, NamedTuple, Optional

from sympy import isprime

from ..core import AUDITS
from ..labeling import (ARITHMETIC_MULTIPLE, EQUAL_DIFFERENCE, FIRST_KIND,
                        edge_kind)
from ..sets import (APSetDescriptor, maximal_class_size, recognize_ap,
                    sumset)
from .oracle import (oracle_is_ap, oracle_maximal_class, oracle_sums,
                     oracle_sumset_cardinality)


class Outcome(NamedTuple):
    expected: Any
    observed: Any
    # per-reading agreement flags, summed into the report details
    tally: Optional[Dict[str, bool]] = None

    @property
    def mismatch(self) -> bool:
        return self.expected != self.observed


class PairAudit:
    r"""Base class of audits over pairs of AP descriptors.

    The driver calls :meth:`in_scope` on every enumerated pair and
    :meth:`evaluate` on those in scope. Evaluation uses the set primitives
    of :mod:`iasikit.sets`; :meth:`reverify` recomputes the observed value
    of a mismatch through the independent oracle.
    """
    description = ""

    def in_scope(self, P: APSetDescriptor, Q: APSetDescriptor) -> bool:
        return True

    def evaluate(self, P: APSetDescriptor, Q: APSetDescriptor) -> Outcome:
        raise NotImplementedError

    def reverify(self, P: APSetDescriptor, Q: APSetDescriptor) -> Any:
        raise NotImplementedError


def _ordered(P: APSetDescriptor, Q: APSetDescriptor):
    r"""(smaller-difference, larger-difference) descriptors."""
    return (P, Q) if P.difference <= Q.difference else (Q, P)


class _FirstKindAudit(PairAudit):
    def in_scope(self, P, Q):
        return edge_kind(P, Q).relation == FIRST_KIND


@AUDITS.register(name="first_kind_strong")
class FirstKindStrong(_FirstKindAudit):
    description = "first-kind pairs are strong: |A+B| = |A||B|"

    def evaluate(self, P, Q):
        return Outcome(True,
                       len(sumset(P.expand(), Q.expand())) == P.length * Q.length)

    def reverify(self, P, Q):
        return oracle_sumset_cardinality(P, Q) == P.length * Q.length


@AUDITS.register(name="first_kind_trivial_classes")
class FirstKindTrivialClasses(_FirstKindAudit):
    description = "first-kind pairs have only trivial compatibility classes"

    def evaluate(self, P, Q):
        return Outcome(1, maximal_class_size(P.expand(), Q.expand()))

    def reverify(self, P, Q):
        return oracle_maximal_class(P, Q)[0]


def _composite(n: int) -> bool:
    return n > 1 and not isprime(n)


@AUDITS.register(name="first_kind_composite_index")
class FirstKindCompositeIndex(_FirstKindAudit):
    description = "first-kind edges never have a prime set-indexing number"

    def evaluate(self, P, Q):
        return Outcome(True, _composite(len(sumset(P.expand(), Q.expand()))))

    def reverify(self, P, Q):
        return _composite(oracle_sumset_cardinality(P, Q))


def _division(P: APSetDescriptor, Q: APSetDescriptor):
    r"""(m, n, q, r) with m, n the lengths of the smaller- and the
    larger-difference set and n = q * m + r."""
    small, large = _ordered(P, Q)
    q, r = divmod(large.length, small.length)
    return small.length, large.length, q, r


@AUDITS.register(name="second_kind_strong")
class SecondKindStrong(PairAudit):
    r"""Strongness of a second-kind pair predicted from n = q * m + r: strong
    exactly when q > m or the differences are coprime. Pairs with r == 0 are
    out of scope."""
    description = "second-kind pairs: strong iff q > m or coprime differences"

    def in_scope(self, P, Q):
        if not edge_kind(P, Q).is_second_kind:
            return False
        return _division(P, Q)[3] != 0

    def evaluate(self, P, Q):
        m, _, q, _ = _division(P, Q)
        expected = q > m or gcd(P.difference, Q.difference) == 1
        observed = len(sumset(P.expand(), Q.expand())) == P.length * Q.length
        return Outcome(expected, observed)

    def reverify(self, P, Q):
        return oracle_sumset_cardinality(P, Q) == P.length * Q.length


def _least_multiple_vanishing(x: int, r: int) -> int:
    r"""Least positive q1 with q1 * x = 0 (mod r)."""
    return r // gcd(x, r)


@AUDITS.register(name="second_kind_maximal_class")
class SecondKindMaximalClass(PairAudit):
    r"""The maximal compatibility class of a second-kind pair predicted as
    floor(n / q1), under three readings of q1:

    - ``statement``: least q1 with q1 * n = 0 (mod r)
    - ``proof``: least q1 with q1 * d_i = 0 (mod r)
    - ``differences``: q1 = d_j / gcd(d_i, d_j)

    Mismatches are listed for the ``statement`` reading; the report details
    carry the agreement rate of every reading.
    """
    description = "second-kind pairs: maximal class size floor(n / q1)"
    readings = ("statement", "proof", "differences")

    def in_scope(self, P, Q):
        return edge_kind(P, Q).is_second_kind and _division(P, Q)[3] != 0

    def predictions(self, P, Q) -> Dict[str, int]:
        small, large = _ordered(P, Q)
        _, n, _, r = _division(P, Q)
        q1 = dict(statement=_least_multiple_vanishing(n, r),
                  proof=_least_multiple_vanishing(small.difference, r),
                  differences=large.difference //
                  gcd(small.difference, large.difference))
        return {name: n // q1[name] for name in self.readings}

    def evaluate(self, P, Q):
        observed = maximal_class_size(P.expand(), Q.expand())
        predicted = self.predictions(P, Q)
        return Outcome(predicted["statement"], observed,
                       {name: value == observed
                        for name, value in predicted.items()})

    def reverify(self, P, Q):
        return oracle_maximal_class(P, Q)[0]


@AUDITS.register(name="arithmetic_multiple")
class ArithmeticMultiple(PairAudit):
    description = "arithmetic-multiple pairs sum to an AP-set with difference d_i"

    def in_scope(self, P, Q):
        return edge_kind(P, Q).relation == ARITHMETIC_MULTIPLE

    def evaluate(self, P, Q):
        D = recognize_ap(sumset(P.expand(), Q.expand()))
        d_i = _ordered(P, Q)[0].difference
        return Outcome(True, D is not None and D.difference == d_i)

    def reverify(self, P, Q):
        sums = oracle_sums(P, Q)
        return oracle_is_ap(sums) and sums[1] - sums[0] == _ordered(P, Q)[0].difference


@AUDITS.register(name="strong_trivial_classes")
class StrongTrivialClasses(PairAudit):
    description = "a pair is strong iff all its compatibility classes are trivial"

    def evaluate(self, P, Q):
        A, B = P.expand(), Q.expand()
        return Outcome(len(sumset(A, B)) == len(A) * len(B),
                       maximal_class_size(A, B) == 1)

    def reverify(self, P, Q):
        return oracle_maximal_class(P, Q)[0] == 1


@AUDITS.register(name="equal_difference")
class EqualDifference(PairAudit):
    description = "equal differences: |A+B| = m+n-1 and a saturated class"

    def in_scope(self, P, Q):
        return edge_kind(P, Q).relation == EQUAL_DIFFERENCE

    def evaluate(self, P, Q):
        A, B = P.expand(), Q.expand()
        return Outcome([P.length + Q.length - 1, min(P.length, Q.length)],
                       [len(sumset(A, B)), maximal_class_size(A, B)])

    def reverify(self, P, Q):
        return [oracle_sumset_cardinality(P, Q), oracle_maximal_class(P, Q)[0]]

"""Bruhat order, quotient intervals and Demazure dimensions.

Comparison uses the lifting property along a reduced word of the larger
element: if s is a right descent of w, then u <= w iff us <= ws when s is a
right descent of u, and iff u <= ws otherwise.  Peeling w letter by letter
from the right therefore decides u <= w in l(w) steps.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import expected
from .cartan import CartanDatum, is_minuscule_weight
from .stumbo import enumerate_smi, v_element
from .weyl import (
    DEFAULT_BUDGET,
    ParabolicContext,
    WeylElement,
    _right_mul,
    enumerate_group,
    evaluate,
    longest_element,
    longest_parabolic,
    quotient_representatives,
    w0J,
)

__all__ = [
    "bruhat_leq",
    "subword_leq",
    "IntervalQuery",
    "interval",
    "interval_to_json",
    "bar_involution",
    "IntervalVerdict",
    "smi_as_interval",
    "demazure_dim",
    "DemazureReport",
    "demazure_report",
    "NotMinusculeWeightError",
]


class NotMinusculeWeightError(ValueError):
    """The fundamental weight is not minuscule, so no dimension identity applies."""


@lru_cache(maxsize=1 << 16)
def _leq(datum: CartanDatum, ukey: bytes, wword: tuple) -> bool:
    n = datum.rank
    a = datum.cartan
    u = np.frombuffer(ukey, dtype=np.int64).reshape(n, n)
    for j in reversed(wword):
        if (u[:, j - 1] < 0).any():
            u = _right_mul(a, u, j - 1)
    return bool((u == np.eye(n, dtype=np.int64)).all())


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Is u <= w in the Bruhat order?"""
    if u.datum != w.datum:
        raise ValueError("elements belong to different Weyl groups")
    if u.length > w.length:
        return False
    return _leq(u.datum, u.key, w.reduced_word().letters)


def subword_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison by the subword property (exponential; a test oracle)."""
    word = w.reduced_word().letters
    k = u.length
    for positions in itertools.combinations(range(len(word)), k):
        if evaluate(u.datum, (word[p] for p in positions)) == u:
            return True
    return False


@dataclass(frozen=True)
class IntervalQuery:
    u: WeylElement
    w: WeylElement
    ctx: ParabolicContext | None = None


def interval(q: IntervalQuery, budget: int = DEFAULT_BUDGET) -> set[WeylElement]:
    """``[u, w]``, or ``[u, w] ∩ W^{J_i}`` when the query carries a context.

    The restricted form only walks the quotient, two comparisons per candidate.
    """
    if q.ctx is None:
        candidates = enumerate_group(q.u.datum, budget)
    else:
        candidates = quotient_representatives(q.ctx)
    lo, hi = q.u.length, q.w.length
    return {v for v in candidates
            if lo <= v.length <= hi and bruhat_leq(q.u, v) and bruhat_leq(v, q.w)}


def interval_to_json(elements) -> str:
    """Serialize elements as reduced words, ordered by length then word.

    The words are one reduced word per element, not a canonical form.
    """
    words = sorted((w.length, list(w.reduced_word().letters)) for w in elements)
    return json.dumps({"canonical": False, "words": [wd for _, wd in words]})


def bar_involution(tau: WeylElement, ctx: ParabolicContext) -> WeylElement:
    """``w_0 tau w_{J_i,0}``, an order-reversing involution of W^{J_i}."""
    if not ctx.contains(tau):
        raise ValueError(f"{tau!r} is not a minimal coset representative for J_{ctx.excluded}")
    return longest_element(ctx.datum) * tau * longest_parabolic(ctx)


@dataclass(frozen=True)
class IntervalVerdict:
    """Comparison of SM_i with the quotient interval ``[v_i, w_0^{J_i}]^{J_i}``.

    ``characterized`` is False for (type, i) without a known interval
    description; then no interval is computed and ``matches`` is None.
    ``full_interval_matches`` compares SM_i with the interval before any
    top-element removal.
    """

    label: str
    i: int
    characterized: bool
    drop_top: bool = False
    interval: frozenset = field(default=frozenset(), repr=False)
    smi: frozenset = field(default=frozenset(), repr=False)
    matches: bool | None = None
    full_interval_matches: bool | None = None

    @property
    def interval_size(self) -> int:
        return len(self.interval)


def smi_as_interval(datum: CartanDatum, i: int) -> IntervalVerdict:
    """Compute ``[v_i, w_0^{J_i}]^{J_i}`` and compare it with SM_i.

    For C_n and D_n at i = n the top element w_0^{J_n} is removed first.
    """
    drop_top = expected.interval_form(datum.label, i)
    if drop_top is None:
        return IntervalVerdict(str(datum.label), i, characterized=False)
    ctx = ParabolicContext(datum, i)
    top = w0J(ctx)
    full = frozenset(interval(IntervalQuery(v_element(datum, i), top, ctx)))
    found = full - {top} if drop_top else full
    smi = frozenset(enumerate_smi(datum, i))
    return IntervalVerdict(str(datum.label), i, True, bool(drop_top), found, smi,
                           found == smi, full == smi)


def demazure_dim(datum: CartanDatum, i: int, tau: WeylElement) -> int:
    """Dimension of the Demazure module E_tau(Lambda_i), as ``#[e, tau]^{J_i}``.

    Only valid when Lambda_i is minuscule; otherwise raises
    :class:`NotMinusculeWeightError`.  ``tau`` must lie in W^{J_i}.
    """
    if not is_minuscule_weight(datum, i):
        raise NotMinusculeWeightError(f"Lambda_{i} is not minuscule in {datum.label}")
    ctx = ParabolicContext(datum, i)
    if not ctx.contains(tau):
        raise ValueError(f"{tau!r} is not in W^J for J = J_{i}")
    return sum(1 for v in quotient_representatives(ctx)
               if v.length <= tau.length and bruhat_leq(v, tau))


@dataclass(frozen=True)
class DemazureReport:
    """dim E_{bar(v_i)}(Lambda_i) next to #SM_i and the tabulated value."""

    label: str
    i: int
    dimension: int
    smi_count: int
    expected: int | None

    @property
    def excess(self) -> int:
        """0 when the dimension equals #SM_i, 1 when it is #SM_i + 1."""
        return self.dimension - self.smi_count

    @property
    def matches(self) -> bool | None:
        return None if self.expected is None else self.dimension == self.expected

    def to_dict(self) -> dict:
        return {"type": self.label, "i": self.i, "dimension": self.dimension,
                "smi_count": self.smi_count, "expected": self.expected,
                "matches": self.matches}


def demazure_report(datum: CartanDatum, i: int) -> DemazureReport:
    ctx = ParabolicContext(datum, i)
    tau = bar_involution(v_element(datum, i), ctx)
    dim = demazure_dim(datum, i, tau)
    count = sum(1 for _ in enumerate_smi(datum, i))
    return DemazureReport(str(datum.label), i, dim, count,
                          expected.demazure_dimension(datum.label, i))

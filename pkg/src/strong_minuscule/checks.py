"""Cross-module consistency checks.

Each ``check_*`` function returns a :class:`CheckResult` with the number of
cases examined and a list of human-readable violations.  The ``verify``
command and the test-suite both run these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import expected
from .bruhat import bar_involution, bruhat_leq, smi_as_interval
from .cartan import CartanDatum, group_order
from .minuscule import (
    Status,
    classify_batch,
    parity_profile,
    stembridge_violations,
    strong_by_weight,
)
from .stumbo import (
    CLASSICAL,
    enumerate_quotient_stumbo,
    enumerate_smi,
    v_element,
)
from .weyl import (
    DEFAULT_BUDGET,
    ParabolicContext,
    group_levels,
    quotient_representatives,
    subgroup_order,
)

__all__ = [
    "CheckResult",
    "check_group_order",
    "check_smi_counts",
    "check_brute_force",
    "check_quotient_parametrization",
    "check_length_criterion",
    "check_smi_structure",
    "check_bar_involution",
    "check_intervals",
    "run_suite",
]


@dataclass
class CheckResult:
    name: str
    label: str
    checked: int = 0
    violations: list = field(default_factory=list)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"check": self.name, "type": self.label, "checked": self.checked,
                "violations": [str(v) for v in self.violations], "skipped": self.skipped}


def _fits(datum: CartanDatum, budget: int) -> bool:
    return group_order(datum.label) <= budget


def check_group_order(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> CheckResult:
    """The orbit walk from rho visits |W| elements, the last one of length #Phi+."""
    res = CheckResult("group_order", str(datum.label))
    if not _fits(datum, budget):
        res.skipped = f"|W| = {group_order(datum.label)} exceeds budget {budget}"
        return res
    total, top = 0, 0
    for level in group_levels(datum, budget):
        total += len(level.words)
        top = level.length
    res.checked = total
    if total != group_order(datum.label):
        res.violations.append(f"walked {total} elements, expected {group_order(datum.label)}")
    if top != len(datum.positive_roots):
        res.violations.append(f"longest length {top}, expected {len(datum.positive_roots)}")
    return res


def check_smi_counts(datum: CartanDatum) -> CheckResult:
    """#SM_i from the parametrization equals the reference count for each i in K."""
    res = CheckResult("smi_counts", str(datum.label))
    for i in sorted(datum.K):
        got = sum(1 for _ in enumerate_smi(datum, i))
        want = expected.smi_count(datum.label, i)
        res.checked += 1
        if got != want:
            res.violations.append(f"#SM_{i} = {got}, expected {want}")
    return res


def check_brute_force(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> CheckResult:
    """A full-group sweep finds exactly the parametrized SM_i, only for i in K."""
    res = CheckResult("brute_force", str(datum.label))
    if not _fits(datum, budget):
        res.skipped = f"|W| = {group_order(datum.label)} exceeds budget {budget}"
        return res
    swept = strong_by_weight(datum, budget)
    for i in sorted(set(swept) - set(datum.K)):
        res.violations.append(f"strong elements with weight Lambda_{i}, i not in K")
    for i in sorted(datum.K):
        res.checked += 1
        if swept.get(i, set()) != set(enumerate_smi(datum, i)):
            res.violations.append(f"SM_{i}: sweep and parametrization disagree")
    return res


def check_quotient_parametrization(datum: CartanDatum) -> CheckResult:
    """Classical types: the product parametrization is a bijection onto W^{J_i}."""
    res = CheckResult("quotient_parametrization", str(datum.label))
    if datum.label.family not in CLASSICAL:
        res.skipped = "no product parametrization for exceptional types"
        return res
    for i in datum.nodes:
        try:
            produced = [w for _, w in enumerate_quotient_stumbo(datum, i)]
        except RuntimeError as exc:  # length additivity failure
            res.violations.append(f"i={i}: {exc}")
            continue
        res.checked += len(produced)
        walked = set(quotient_representatives(ParabolicContext(datum, i)))
        if len(set(produced)) != len(produced):
            res.violations.append(f"i={i}: repeated elements")
        if set(produced) != walked:
            res.violations.append(f"i={i}: {len(set(produced))} parametrized vs {len(walked)} walked")
    return res


def check_length_criterion(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> CheckResult:
    """For all w and k in K: w strong with weight Lambda_k iff w is minuscule
    and l(w v_k^{-1}) = l(w) - n.  Vectorized over each length level."""
    res = CheckResult("length_criterion", str(datum.label))
    if not _fits(datum, budget):
        res.skipped = f"|W| = {group_order(datum.label)} exceeds budget {budget}"
        return res
    n = datum.rank
    roots = datum.positive_roots.T
    ks = sorted(datum.K)
    # v_k^{-1} applied to the positive roots, one (n, N) block per k
    shifted = {k: v_element(datum, k).inverse().matrix @ roots for k in ks}
    for level in group_levels(datum, budget, with_matrices=True):
        status, forced = classify_batch(datum, level.words)
        minuscule = status >= Status.MINUSCULE_NOT_DOMINANT
        for k in ks:
            images = np.einsum("lij,jm->lim", level.matrices, shifted[k])
            lengths = (images < 0).any(axis=1).sum(axis=1)
            rhs = minuscule & (lengths == level.length - n)
            target = np.zeros(n, dtype=np.int64)
            target[k - 1] = 1
            lhs = (status == Status.STRONG) & (forced == target).all(axis=1)
            for row in np.flatnonzero(lhs != rhs):
                word = (level.words[row] + 1).tolist()
                res.violations.append(f"k={k}, word={word}: strong={lhs[row]}, criterion={rhs[row]}")
        res.checked += len(level.words)
    return res


def check_smi_structure(datum: CartanDatum) -> CheckResult:
    """Every enumerated strong element has full support, meets the tail
    constraints on its reduced word, and has the expected parity profile."""
    res = CheckResult("smi_structure", str(datum.label))
    nodes = frozenset(datum.nodes)
    for i in sorted(datum.K):
        for w in enumerate_smi(datum, i):
            res.checked += 1
            word = w.reduced_word()
            if w.support() != nodes:
                res.violations.append(f"{w!r}: support {sorted(w.support())}")
            bad = stembridge_violations(word)
            if bad:
                res.violations.append(f"{w!r}: tail constraint {bad}")
            prof = parity_profile(w, word)
            if prof.i != i or not prof.ok:
                res.violations.append(f"{w!r}: parity at positions {prof.violations()}")
    return res


def check_bar_involution(datum: CartanDatum, nodes=None) -> CheckResult:
    """bar is an involution of W^{J_i} that reverses the Bruhat order (all pairs)."""
    res = CheckResult("bar_involution", str(datum.label))
    for i in (datum.nodes if nodes is None else nodes):
        ctx = ParabolicContext(datum, i)
        q = list(quotient_representatives(ctx))
        bars = {w: bar_involution(w, ctx) for w in q}
        if set(bars.values()) != set(q):
            res.violations.append(f"i={i}: not a bijection of the quotient")
        for w, b in bars.items():
            if bar_involution(b, ctx) != w:
                res.violations.append(f"i={i}: bar(bar({w!r})) != itself")
        for u in q:
            for w in q:
                res.checked += 1
                if bruhat_leq(u, w) != bruhat_leq(bars[w], bars[u]):
                    res.violations.append(f"i={i}: order not reversed on ({u!r}, {w!r})")
    return res


def check_intervals(datum: CartanDatum) -> CheckResult:
    """SM_i against the recorded interval description, where there is one."""
    res = CheckResult("intervals", str(datum.label))
    for i in sorted(datum.K):
        verdict = smi_as_interval(datum, i)
        if not verdict.characterized:
            continue
        res.checked += 1
        if not verdict.matches:
            res.violations.append(
                f"i={i}: interval{' minus top' if verdict.drop_top else ''} has "
                f"{verdict.interval_size} elements, SM_i has {len(verdict.smi)}"
                + (" (SM_i is the full interval)" if verdict.full_interval_matches else "")
            )
    return res


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "group_order": check_group_order,
    "smi_counts": lambda d, budget: check_smi_counts(d),
    "brute_force": check_brute_force,
    "quotient_parametrization": lambda d, budget: check_quotient_parametrization(d),
    "length_criterion": check_length_criterion,
    "smi_structure": lambda d, budget: check_smi_structure(d),
    "intervals": lambda d, budget: check_intervals(d),
}


def run_suite(datum: CartanDatum, budget: int = DEFAULT_BUDGET,
              max_pairwise: int = 150) -> list[CheckResult]:
    """Every check above on one type.

    The pairwise bar-involution check runs only on quotients with at most
    ``max_pairwise`` cosets.
    """
    results = [fn(datum, budget) for fn in CHECKS.values()]
    small = [i for i in datum.nodes if _quotient_size(datum, i) <= max_pairwise]
    results.append(check_bar_involution(datum, small))
    return results


def _quotient_size(datum: CartanDatum, i: int) -> int:
    return group_order(datum.label) // subgroup_order(datum, set(datum.nodes) - {i})

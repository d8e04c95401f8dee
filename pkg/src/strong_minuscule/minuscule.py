"""Lambda-minuscule elements and the strong minuscule classification.

Fix a reduced word ``w = s_{i_1} ... s_{i_r}`` and an unknown integral weight
``Lambda = sum c_j Lambda_j``.  Reading the word from the right, the
condition at position p is ``<Lambda - alpha_{i_{p+1}} - ... - alpha_{i_r},
alpha_{i_p}^vee> = 1``, i.e. one linear equation

    c_{i_p} = 1 + sum_{a > p} a_{i_p, i_a}.

So every letter in the support pins its coordinate, repeated letters must pin
the same value, and coordinates outside the support stay free.  That affine
solution set decides everything: w is minuscule iff it is non-empty, dominant
minuscule iff the pinned values are >= 0, strong iff in addition nothing is
free.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cartan import CartanDatum, Weight
from .weyl import (
    DEFAULT_BUDGET,
    Level,
    ReducedWord,
    WeylElement,
    evaluate,
    group_levels,
)

__all__ = [
    "Status",
    "Classification",
    "MinusculeSolutionSet",
    "ParityProfile",
    "is_lambda_minuscule",
    "solve_word",
    "solve_minuscule_weights",
    "classify",
    "classify_word",
    "solve_batch",
    "classify_batch",
    "brute_force_strong_set",
    "strong_by_weight",
    "count_dominant_witnesses",
    "stembridge_violations",
    "parity_profile",
]


class Status(enum.IntEnum):
    NOT_MINUSCULE = 0
    MINUSCULE_NOT_DOMINANT = 1
    DOMINANT_NOT_STRONG = 2
    STRONG = 3

    @property
    def text(self) -> str:
        return _STATUS_TEXT[self]


_STATUS_TEXT = {
    Status.NOT_MINUSCULE: "NotMinuscule",
    Status.MINUSCULE_NOT_DOMINANT: "MinusculeNotDominant",
    Status.DOMINANT_NOT_STRONG: "DominantNotStrong",
    Status.STRONG: "Strong",
}


@dataclass(frozen=True)
class Classification:
    status: Status
    weight: Weight | None = None  # Lambda_w, only for Strong

    @property
    def is_strong(self) -> bool:
        return self.status is Status.STRONG

    def node(self) -> int:
        """The i with Lambda_w = Lambda_i (strong elements only)."""
        if not self.is_strong:
            raise ValueError(f"{self.status.text} elements carry no Lambda_w")
        (i,) = self.weight.support()
        return i

    def to_dict(self) -> dict:
        out = {"status": self.status.text}
        if self.weight is not None:
            out["lambda"] = list(self.weight.coords)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        if self.is_strong:
            return f"Strong({self.weight.coords})"
        return self.status.text


@dataclass(frozen=True)
class MinusculeSolutionSet:
    """All integral Lambda for which an element is Lambda-minuscule.

    When ``consistent``, the set is ``forced + span_Z{Lambda_j : j in free_nodes}``;
    ``forced`` is zero off the support.
    """

    consistent: bool
    forced: Weight
    free_nodes: frozenset

    def contains(self, weight: Weight) -> bool:
        if not self.consistent:
            return False
        return all(weight.pair(i) == self.forced.pair(i)
                   for i in range(1, len(weight) + 1) if i not in self.free_nodes)

    @property
    def is_dominant_minuscule(self) -> bool:
        return self.consistent and self.forced.is_dominant()

    @property
    def is_strong(self) -> bool:
        return self.is_dominant_minuscule and not self.free_nodes

    def classification(self) -> Classification:
        if not self.consistent:
            return Classification(Status.NOT_MINUSCULE)
        if not self.forced.is_dominant():
            return Classification(Status.MINUSCULE_NOT_DOMINANT)
        if self.free_nodes:
            return Classification(Status.DOMINANT_NOT_STRONG)
        return Classification(Status.STRONG, self.forced)


def is_lambda_minuscule(word: ReducedWord, weight: Weight) -> bool:
    """Check the minuscule condition directly, reflecting the weight step by step."""
    datum = word.datum
    if len(weight) != datum.rank:
        raise ValueError("weight rank does not match the word's root datum")
    mu = weight
    for i in reversed(word.letters):
        if mu.pair(i) != 1:
            return False
        mu = mu.reflect(datum, i)
    return True


def solve_word(word: ReducedWord) -> MinusculeSolutionSet:
    """Solve for every Lambda making the word's element Lambda-minuscule."""
    datum = word.datum
    n = datum.rank
    a = datum.cartan
    forced: dict[int, int] = {}
    consistent = True
    pairing = [0] * n  # pairing[k] = sum over processed letters x of a_{k+1, x}
    for i in reversed(word.letters):
        val = 1 + pairing[i - 1]
        if forced.setdefault(i, val) != val:
            consistent = False
        col = a[:, i - 1]
        for k in range(n):
            pairing[k] += int(col[k])
    coords = tuple(forced.get(k, 0) for k in datum.nodes)
    free = frozenset(datum.nodes) - forced.keys()
    return MinusculeSolutionSet(consistent, Weight(coords), free)


def solve_minuscule_weights(w: WeylElement) -> MinusculeSolutionSet:
    return solve_word(w.reduced_word())


def classify_word(word: ReducedWord) -> Classification:
    return solve_word(word).classification()


def classify(w: WeylElement) -> Classification:
    """NotMinuscule, MinusculeNotDominant, DominantNotStrong, or Strong(Lambda_w)."""
    return solve_minuscule_weights(w).classification()


def solve_batch(datum: CartanDatum, words: np.ndarray):
    """Vectorized solver over an ``(L, r)`` array of zero-based reduced words.

    Returns ``(consistent, forced, fixed)`` with boolean ``(L,)``, integer
    ``(L, n)`` and boolean ``(L, n)`` arrays; ``fixed`` marks the support.
    """
    words = np.asarray(words)
    L, r = words.shape
    n = datum.rank
    a = datum.cartan
    forced = np.zeros((L, n), dtype=np.int64)
    fixed = np.zeros((L, n), dtype=bool)
    ok = np.ones(L, dtype=bool)
    pairing = np.zeros((L, n), dtype=np.int64)
    rows = np.arange(L)
    for p in range(r - 1, -1, -1):
        letter = words[:, p].astype(np.intp)
        val = 1 + pairing[rows, letter]
        seen = fixed[rows, letter]
        prev = forced[rows, letter]
        ok &= ~seen | (prev == val)
        forced[rows, letter] = np.where(seen, prev, val)
        fixed[rows, letter] = True
        pairing += a[:, letter].T
    return ok, forced, fixed


def classify_batch(datum: CartanDatum, words: np.ndarray):
    """Status codes (see :class:`Status`) and pinned weights for a word batch."""
    ok, forced, fixed = solve_batch(datum, words)
    dominant = ok & ~((forced < 0) & fixed).any(axis=1)
    full = fixed.all(axis=1)
    status = np.full(len(ok), Status.NOT_MINUSCULE, dtype=np.int8)
    status[ok] = Status.MINUSCULE_NOT_DOMINANT
    status[dominant] = Status.DOMINANT_NOT_STRONG
    status[dominant & full] = Status.STRONG
    return status, forced


def count_dominant_witnesses(word: ReducedWord, bound: int) -> int:
    """Count dominant Lambda with all coordinates <= bound that make the word minuscule.

    Independent of :func:`solve_word`: every candidate is tested by
    :func:`is_lambda_minuscule`.
    """
    n = word.datum.rank
    return sum(is_lambda_minuscule(word, Weight(c))
               for c in itertools.product(range(bound + 1), repeat=n))


def _strong_levels(datum: CartanDatum, levels: Iterator[Level]):
    for level in levels:
        status, forced = classify_batch(datum, level.words)
        hits = np.flatnonzero(status == Status.STRONG)
        for row in hits:
            yield level, row, forced[row]


def brute_force_strong_set(datum: CartanDatum, budget: int = DEFAULT_BUDGET, *,
                           cross_check: bool = False) -> set[WeylElement]:
    """Every strong minuscule element of W, found by sweeping the whole group.

    With ``cross_check=True`` each element's verdict is re-derived by counting
    dominant witnesses with coordinates up to ``max(2 l(w), 1)``; a strong
    element must have exactly one.  This costs ``(2l+1)^n`` checks per element
    and is meant for rank <= 3.
    """
    out = set()
    for level, row, _ in _strong_levels(datum, group_levels(datum, budget)):
        word = (level.words[row] + 1).tolist()
        out.add(evaluate(datum, word, length=level.length))
    if cross_check:
        for level in group_levels(datum, budget):
            status, _ = classify_batch(datum, level.words)
            bound = max(2 * level.length, 1)
            for row in range(len(level.words)):
                word = ReducedWord(datum, (level.words[row] + 1).tolist(), _checked=True)
                count = count_dominant_witnesses(word, bound)
                strong = status[row] == Status.STRONG
                dominant = status[row] >= Status.DOMINANT_NOT_STRONG
                if strong != (count == 1) or dominant != (count >= 1):
                    raise RuntimeError(
                        f"witness count {count} contradicts {Status(status[row]).text} "
                        f"for {word!r}"
                    )
    return out


def strong_by_weight(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> dict[int, set[WeylElement]]:
    """Brute-force strong elements grouped by the node i with Lambda_w = Lambda_i."""
    out: dict[int, set[WeylElement]] = {}
    for level, row, lam in _strong_levels(datum, group_levels(datum, budget)):
        (idx,) = np.flatnonzero(lam)
        w = evaluate(datum, (level.words[row] + 1).tolist(), length=level.length)
        out.setdefault(int(idx) + 1, set()).add(w)
    return out


def stembridge_violations(word: ReducedWord) -> list[tuple[int, int, int]]:
    """Nodes breaking the tail constraint on a dominant minuscule word.

    For each i occurring in the word, the letters after its last occurrence
    may contain at most one neighbour from adj_s(i) and none from adj_l(i).
    Returns ``(i, #adj_s after, #adj_l after)`` for every failing i.
    """
    datum = word.datum
    letters = word.letters
    bad = []
    for i in set(letters):
        last = max(p for p, x in enumerate(letters) if x == i)
        tail = letters[last + 1:]
        ns = sum(x in datum.adj_s[i] for x in tail)
        nl = sum(x in datum.adj_l[i] for x in tail)
        if ns > 1 or nl:
            bad.append((i, ns, nl))
    return sorted(bad)


@dataclass(frozen=True)
class ParityProfile:
    """Per-position counts along a reduced word of an element of SM_i.

    For 1 <= p <= r-1, over the letters after position p: ``u[p-1]`` counts
    those in adj_s(i_p), ``t[p-1]`` those in adj_l(i_p), ``q[p-1]`` those
    equal to i_p.
    """

    i: int
    letters: tuple
    u: tuple
    t: tuple
    q: tuple

    def violations(self) -> list[int]:
        """Positions p where u_p has the wrong parity (even iff i_p = i)."""
        return [p + 1 for p, up in enumerate(self.u)
                if (up % 2 == 0) != (self.letters[p] == self.i)]

    @property
    def ok(self) -> bool:
        return not self.violations()


def parity_profile(w: WeylElement, word: ReducedWord | None = None) -> ParityProfile:
    """Parity profile of a strong element along one of its reduced words.

    Raises ``ValueError`` unless w is strong minuscule and ``word`` spells w.
    """
    cls = classify(w)
    if not cls.is_strong:
        raise ValueError(f"parity profile needs a strong minuscule element, got {cls}")
    if word is None:
        word = w.reduced_word()
    elif word.element() != w:
        raise ValueError("word does not spell the given element")
    datum = w.datum
    letters = word.letters
    u, t, q = [], [], []
    for p in range(len(letters) - 1):
        ip = letters[p]
        tail = letters[p + 1:]
        u.append(sum(x in datum.adj_s[ip] for x in tail))
        t.append(sum(x in datum.adj_l[ip] for x in tail))
        q.append(sum(x == ip for x in tail))
    return ParityProfile(cls.node(), letters, tuple(u), tuple(t), tuple(q))

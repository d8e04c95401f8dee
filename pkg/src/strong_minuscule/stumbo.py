"""Product parametrizations of W^{J_i} and of the strong minuscule sets SM_i.

For classical types every minimal coset representative of W / W_{J_i} is a
length-additive product ``w_n(l_n) w_{n-1}(l_{n-1}) ... w_i(l_i)``, where
``w_j(l)`` is the right-most l letters of a fixed word ``w_j``.  The
constraints on the integers l_j depend on the type; type D with i in {1, 2}
uses an alternating product of w_1 and w_2 instead.

In type D the tail ``w_j(j-1)`` (j >= 3) is ambiguous between
``s_1 s_3 ... s_j`` and ``s_2 s_3 ... s_j``; an :class:`LSequence` resolves
this with an explicit branch tag per index.

For E, F and G there is no product formula; SM_i is obtained by classifying
the whole quotient.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import expected
from .cartan import CartanDatum
from .minuscule import Status, classify, classify_batch
from .weyl import ParabolicContext, ReducedWord, WeylElement, evaluate, quotient_levels

__all__ = [
    "LSequence",
    "CountMismatch",
    "w_word",
    "build_wj",
    "v_word",
    "v_element",
    "vi_catalog",
    "quotient_sequences",
    "sequence_word",
    "enumerate_quotient_stumbo",
    "smi_sequences",
    "enumerate_smi_closed_form",
    "enumerate_smi_exceptional",
    "enumerate_smi",
    "count_smi",
]

CLASSICAL = "ABCD"


class CountMismatch(RuntimeError):
    """An enumerated count disagrees with its reference value."""


@dataclass(frozen=True)
class LSequence:
    """Integer data of one product ``w_n(l_n) ... w_i(l_i)``.

    ``l[k]`` is l_{i+k} for the chain form.  For type D with i in {1, 2}
    ``l`` is the strictly decreasing ``(l_1, l_2, ..., l_h)`` of the
    alternating form.  ``branch[k]`` is 1 or 2 exactly where the D-type tail
    is ambiguous, else ``None``.
    """

    i: int
    l: tuple
    branch: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))
        br = tuple(self.branch) if self.branch else (None,) * len(self.l)
        if len(br) != len(self.l):
            raise ValueError("branch tags must align with l")
        object.__setattr__(self, "branch", br)

    def to_dict(self) -> dict:
        return {"i": self.i, "l": list(self.l), "branch": list(self.branch)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "LSequence":
        obj = json.loads(text)
        return cls(obj["i"], tuple(obj["l"]), tuple(obj.get("branch") or ()))


def _require_classical(datum: CartanDatum):
    if datum.label.family not in CLASSICAL:
        raise ValueError(f"{datum.label} has no product parametrization (classical types only)")


def w_word(datum: CartanDatum, j: int) -> tuple[int, ...]:
    """The fixed word w_j whose right tails build the parametrization."""
    _require_classical(datum)
    j = datum.check_node(j)
    fam, n = datum.label.family, datum.rank
    if fam == "A":
        return tuple(range(1, j + 1))
    if fam in "BC":
        return tuple(range(n, 0, -1)) + tuple(range(2, j + 1))
    down = tuple(range(n, 2, -1))
    if j in (1, 2):
        return down + (j,)
    return down + (1, 2) + tuple(range(3, j + 1))


def _is_ambiguous(datum: CartanDatum, j: int, l: int) -> bool:
    return datum.label.family == "D" and j >= 3 and l == j - 1


def _tail(datum: CartanDatum, j: int, l: int, branch: int | None) -> tuple[int, ...]:
    if _is_ambiguous(datum, j, l):
        return (branch,) + tuple(range(3, j + 1))
    word = w_word(datum, j)
    return word[len(word) - l:] if l else ()


def build_wj(datum: CartanDatum, j: int, l: int, branch: int | None = None) -> ReducedWord:
    """The right-most ``l`` letters of w_j as a reduced word.

    ``branch`` (1 or 2) must be given exactly when the tail is the ambiguous
    type-D ``w_j(j-1)``, choosing ``s_branch s_3 ... s_j``.
    """
    full = w_word(datum, j)
    if not 0 <= l <= len(full):
        raise ValueError(f"l = {l} out of range 0..{len(full)} for w_{j} in {datum.label}")
    if _is_ambiguous(datum, j, l):
        if branch not in (1, 2):
            raise ValueError(f"w_{j}({l}) in {datum.label} needs branch 1 or 2")
    elif branch is not None:
        raise ValueError(f"w_{j}({l}) in {datum.label} takes no branch tag")
    return ReducedWord(datum, _tail(datum, j, l, branch))


def _alternating_node(i: int, k: int) -> int:
    # position k (1-based from the right) uses w_1 when k is odd; swapped for i = 2
    node = 1 if k % 2 else 2
    return node if i == 1 else 3 - node


def _alternating(datum: CartanDatum, i: int) -> bool:
    return datum.label.family == "D" and i in (1, 2)


def sequence_word(datum: CartanDatum, seq: LSequence) -> tuple[int, ...]:
    """Concatenated word of the product described by ``seq``."""
    letters: list[int] = []
    if _alternating(datum, seq.i):
        for k in range(len(seq.l), 0, -1):
            letters.extend(_tail(datum, _alternating_node(seq.i, k), seq.l[k - 1], None))
        return tuple(letters)
    for j in range(datum.rank, seq.i - 1, -1):
        k = j - seq.i
        letters.extend(_tail(datum, j, seq.l[k], seq.branch[k]))
    return tuple(letters)


def _factor_lengths(datum: CartanDatum, seq: LSequence) -> list[int]:
    if _alternating(datum, seq.i):
        return [len(_tail(datum, _alternating_node(seq.i, k), seq.l[k - 1], None))
                for k in range(1, len(seq.l) + 1)]
    return [evaluate(datum, _tail(datum, seq.i + k, l, b)).length
            for k, (l, b) in enumerate(zip(seq.l, seq.branch))]


def _chains(datum: CartanDatum, i: int, first, step):
    """Sequences l_i, ..., l_n (with branch tags) built left to right.

    ``first()`` yields candidate l_i values; ``step(j, l_j)`` yields candidate
    l_{j+1} values.  Ambiguous positions fan out over both branches, subject
    to the rule that consecutive ambiguous tails with l_{j+1} = l_j + 1 = j
    start with different fork nodes.
    """
    n = datum.rank

    def tags(j, l):
        return (1, 2) if _is_ambiguous(datum, j, l) else (None,)

    def extend(j, ls, bs):
        if j == n:
            yield LSequence(i, tuple(ls), tuple(bs))
            return
        for nxt in step(j, ls[-1]):
            for b in tags(j + 1, nxt):
                if b is not None and bs[-1] is not None and nxt == ls[-1] + 1 == j and b == bs[-1]:
                    continue
                yield from extend(j + 1, ls + [nxt], bs + [b])

    for l0 in first():
        for b in tags(i, l0):
            yield from extend(i, [l0], [b])


def quotient_sequences(datum: CartanDatum, i: int) -> Iterator[LSequence]:
    """All parameter sequences indexing W^{J_i} (classical types)."""
    _require_classical(datum)
    i = datum.check_node(i)
    fam, n = datum.label.family, datum.rank
    if fam == "A":
        return _chains(datum, i, lambda: range(i + 1), lambda j, lj: range(lj + 1))
    if fam in "BC":
        def step(j, lj):
            top = lj + 1 if lj > j - 1 else lj
            return range(min(j + i, top) + 1)
        return _chains(datum, i, lambda: range(2 * i), step)
    if _alternating(datum, i):
        return (LSequence(i, tuple(sorted(c, reverse=True)))
                for h in range(n) for c in itertools.combinations(range(1, n), h))

    def step_d(j, lj):
        top = lj + 1 if lj > j - 2 else lj
        return range(min(j + i - 1, top) + 1)
    return _chains(datum, i, lambda: range(2 * i - 1), step_d)


def enumerate_quotient_stumbo(datum: CartanDatum, i: int) -> Iterator[tuple[LSequence, WeylElement]]:
    """Yield ``(sequence, element)`` for every element of W^{J_i}.

    Raises ``RuntimeError`` if some product fails to be length-additive.
    """
    for seq in quotient_sequences(datum, i):
        word = sequence_word(datum, seq)
        w = evaluate(datum, word)
        if w.length != sum(_factor_lengths(datum, seq)) or w.length != len(word):
            raise RuntimeError(f"length additivity fails for {seq} in {datum.label}")
        yield seq, w


def _decreasing(length: int, hi: int, lo: int = 1):
    """Weakly decreasing tuples of ``length`` values in [lo, hi]."""
    if hi < lo:
        return iter(() if length else [()])
    return (tuple(sorted(c, reverse=True))
            for c in itertools.combinations_with_replacement(range(lo, hi + 1), length))


def _check_k(datum: CartanDatum, i: int) -> int:
    i = datum.check_node(i)
    if i not in datum.K:
        raise ValueError(
            f"node {i} is not in K = {sorted(datum.K)} for {datum.label}: "
            "SM_i is only defined for short simple roots"
        )
    return i


def smi_sequences(datum: CartanDatum, i: int) -> Iterator[LSequence]:
    """Parameter sequences of the closed-form description of SM_i."""
    _require_classical(datum)
    i = _check_k(datum, i)
    fam, n = datum.label.family, datum.rank
    if fam == "A":
        for rest in _decreasing(n - i, i):
            yield LSequence(i, (i,) + rest)
    elif fam == "B":
        for seq in quotient_sequences(datum, 1):
            if seq.l[-1] != 0:
                yield seq
    elif fam == "C" and i == n:
        for ln in range(n, 2 * n):
            yield LSequence(i, (ln,))
    elif fam == "C":
        for li in range(i, 2 * i - 1):
            for rest in _decreasing(n - i, 2 * i - li - 1):
                yield LSequence(i, (li,) + rest)
    elif i in (1, 2):
        for h in range(2, n):
            for c in itertools.combinations(range(1, n - 1), h - 1):
                yield LSequence(i, (n - 1,) + tuple(sorted(c, reverse=True)))
    elif i == n:
        for ln in range(n, 2 * n - 1):
            yield LSequence(i, (ln,))
    else:
        for li in range(i, 2 * i - 2):
            for rest in _decreasing(n - i, 2 * i - li - 2):
                yield LSequence(i, (li,) + rest)


def enumerate_smi_closed_form(datum: CartanDatum, i: int) -> Iterator[WeylElement]:
    """SM_i for a classical type, from its closed-form parametrization."""
    for seq in smi_sequences(datum, i):
        word = sequence_word(datum, seq)
        yield evaluate(datum, word, length=len(word))


def enumerate_smi_exceptional(datum: CartanDatum, i: int) -> Iterator[WeylElement]:
    """SM_i for E, F, G: classify every element of W^{J_i}, keep Strong(Lambda_i)."""
    if datum.label.family in CLASSICAL:
        raise ValueError(f"{datum.label} is classical; use enumerate_smi_closed_form")
    i = _check_k(datum, i)
    target = np.eye(datum.rank, dtype=np.int64)[i - 1]
    for level in quotient_levels(ParabolicContext(datum, i)):
        status, forced = classify_batch(datum, level.words)
        hits = (status == Status.STRONG) & (forced == target).all(axis=1)
        for row in np.flatnonzero(hits):
            yield evaluate(datum, (level.words[row] + 1).tolist(), length=level.length)


def enumerate_smi(datum: CartanDatum, i: int) -> Iterator[WeylElement]:
    if datum.label.family in CLASSICAL:
        return enumerate_smi_closed_form(datum, i)
    return enumerate_smi_exceptional(datum, i)


def count_smi(datum: CartanDatum, i: int) -> int:
    """#SM_i, checked against the reference count; a mismatch raises."""
    got = sum(1 for _ in enumerate_smi(datum, i))
    want = expected.smi_count(datum.label, i)
    if want is None:
        raise CountMismatch(f"no reference count for SM_{i} in {datum.label}")
    if got != want:
        raise CountMismatch(f"#SM_{i} in {datum.label}: enumerated {got}, expected {want}")
    return got


def v_word(datum: CartanDatum, i: int) -> tuple[int, ...]:
    """The defining word of v_i (i in K)."""
    i = _check_k(datum, i)
    fam, n = datum.label.family, datum.rank
    if fam in "AC" or (fam == "D" and i >= 3):
        return tuple(range(n, i, -1)) + tuple(range(1, i + 1))
    if fam == "B":
        return tuple(range(n, 0, -1))
    if fam == "D":
        return (3 - i,) + tuple(range(n, 2, -1)) + (i,)
    word = expected.v_word(datum.label, i)
    if word is None:
        raise ValueError(f"no v_{i} recorded for {datum.label}")
    return word


@lru_cache(maxsize=None)
def vi_catalog(datum: CartanDatum) -> dict[int, ReducedWord]:
    """All v_i as reduced words, self-checked on first use.

    Every v_i must be reduced of length n and strong minuscule with weight
    Lambda_i; anything else means the stored data is wrong and raises.
    """
    out = {}
    for i in sorted(datum.K):
        letters = v_word(datum, i)
        w = evaluate(datum, letters)
        if len(letters) != datum.rank or w.length != datum.rank:
            raise RuntimeError(f"v_{i} in {datum.label} does not have length {datum.rank}")
        cls = classify(w)
        if not cls.is_strong or cls.node() != i:
            raise RuntimeError(f"v_{i} in {datum.label} classifies as {cls}, not Strong(Lambda_{i})")
        out[i] = ReducedWord(datum, letters, _checked=True)
    return out


def v_element(datum: CartanDatum, i: int) -> WeylElement:
    return vi_catalog(datum)[_check_k(datum, i)].element()

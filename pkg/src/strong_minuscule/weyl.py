"""Weyl group elements, reduced words, and breadth-first enumeration.

An element is stored as the integer matrix of its action on the root lattice
(columns are the images of the simple roots, in simple-root coordinates).
Two elements are equal exactly when their matrices are equal.

Enumeration walks the W-orbit of a dominant weight one length at a time.  The
orbit of rho is in bijection with W; the orbit of Lambda_i is in bijection
with the minimal coset representatives W^{J_i}.  Each level is produced as a
batch of numpy arrays so that large quotients (E_8) stay tractable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .cartan import CartanDatum, Weight, group_order

__all__ = [
    "WeylElement",
    "ReducedWord",
    "ParabolicContext",
    "Level",
    "NotReducedError",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "apply",
    "evaluate",
    "reduce",
    "descents",
    "enumerate_group",
    "quotient_representatives",
    "walk_orbit",
    "group_levels",
    "quotient_levels",
    "subgroup_order",
    "longest_element",
    "longest_parabolic",
    "w0J",
    "parse_word",
    "format_word",
]

DEFAULT_BUDGET = 10**6


class NotReducedError(ValueError):
    """A word was required to be reduced but is not."""


class BudgetExceeded(RuntimeError):
    """Full enumeration refused because |W| is above the element budget."""

    def __init__(self, label, order: int, budget: int):
        super().__init__(f"|W({label})| = {order} exceeds the enumeration budget {budget}")
        self.order = order
        self.budget = budget


def _right_mul(a: np.ndarray, m: np.ndarray, j: int) -> np.ndarray:
    """Return m @ s_j for a 0-based node j."""
    return m - np.outer(m[:, j], a[j])


def _left_mul(a: np.ndarray, m: np.ndarray, j: int) -> np.ndarray:
    """Return s_j @ m for a 0-based node j."""
    out = m.copy()
    out[j] = m[j] - a[j] @ m
    return out


class WeylElement:
    """An element of W(datum), canonical by its root-lattice matrix."""

    __slots__ = ("datum", "matrix", "_key", "_length", "_word", "__weakref__")

    def __init__(self, datum: CartanDatum, matrix, *, length: int | None = None,
                 word: Sequence[int] | None = None):
        m = np.array(matrix, dtype=np.int64)
        n = datum.rank
        if m.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix for {datum.label}, got {m.shape}")
        m.setflags(write=False)
        self.datum = datum
        self.matrix = m
        self._key = m.tobytes()
        self._length = length
        self._word = None if word is None else tuple(int(x) for x in word)

    @classmethod
    def identity(cls, datum: CartanDatum) -> "WeylElement":
        return cls(datum, np.eye(datum.rank, dtype=np.int64), length=0, word=())

    @classmethod
    def from_word(cls, datum: CartanDatum, word: Iterable[int]) -> "WeylElement":
        return evaluate(datum, word)

    @property
    def key(self) -> bytes:
        return self._key

    @property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            images = self.matrix @ self.datum.positive_roots.T
            self._length = int((images < 0).any(axis=0).sum())
        return self._length

    def is_identity(self) -> bool:
        return bool((self.matrix == np.eye(self.datum.rank, dtype=np.int64)).all())

    def right_descents(self) -> frozenset:
        return frozenset(int(j) + 1 for j in np.flatnonzero((self.matrix < 0).any(axis=0)))

    def left_descents(self) -> frozenset:
        return self.inverse().right_descents()

    def reduced_word(self) -> "ReducedWord":
        if self._word is None:
            a = self.datum.cartan
            m = self.matrix
            letters = []
            while True:
                neg = np.flatnonzero((m < 0).any(axis=0))
                if neg.size == 0:
                    break
                j = int(neg[0])
                m = _right_mul(a, m, j)
                letters.append(j + 1)
            self._word = tuple(reversed(letters))
            if self._length is None:
                self._length = len(self._word)
        return ReducedWord(self.datum, self._word, _checked=True)

    def support(self) -> frozenset:
        return frozenset(self.reduced_word().letters)

    def inverse(self) -> "WeylElement":
        word = self.reduced_word().letters
        return evaluate(self.datum, reversed(word), length=len(word))

    def times_simple(self, j: int) -> "WeylElement":
        """Return w * s_j."""
        return WeylElement(self.datum, _right_mul(self.datum.cartan, self.matrix, j - 1))

    def simple_times(self, j: int) -> "WeylElement":
        """Return s_j * w."""
        return WeylElement(self.datum, _left_mul(self.datum.cartan, self.matrix, j - 1))

    def weight_matrix(self) -> np.ndarray:
        """Matrix of the action on fundamental-weight coordinates."""
        a = self.datum.cartan
        m = np.eye(self.datum.rank, dtype=np.int64)
        for j in self.reduced_word().letters:
            m[:, j - 1] -= m @ a[:, j - 1]
        return m

    def apply(self, weight: Weight) -> Weight:
        return apply(self, weight)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.datum != self.datum:
            raise ValueError("cannot multiply elements of different Weyl groups")
        return WeylElement(self.datum, self.matrix @ other.matrix)

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.datum == other.datum
                and self._key == other._key)

    def __hash__(self):
        return hash((self.datum.label, self._key))

    def __repr__(self):
        word = self.reduced_word().letters
        body = " ".join(f"s{j}" for j in word) if word else "e"
        return f"WeylElement({self.datum.label}: {body})"

    def to_json(self) -> str:
        return json.dumps({"type": str(self.datum.label), "matrix": self.matrix.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "WeylElement":
        from .cartan import build_datum
        obj = json.loads(text)
        return cls(build_datum(obj["type"]), obj["matrix"])


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"3,2,1"`` (1-based nodes); the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed word {text!r}: expected comma-separated integers") from None


def format_word(letters: Iterable[int]) -> str:
    return ",".join(str(int(x)) for x in letters)


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word ``s_{i_1} ... s_{i_r}``; construction verifies reducedness."""

    datum: CartanDatum
    letters: tuple
    _checked: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            self.datum.check_node(x)
        if not self._checked:
            if evaluate(self.datum, letters).length != len(letters):
                raise NotReducedError(f"{format_word(letters)!r} is not reduced in {self.datum.label}")
            object.__setattr__(self, "_checked", True)

    @classmethod
    def parse(cls, datum: CartanDatum, text: str) -> "ReducedWord":
        return cls(datum, parse_word(text))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def element(self) -> WeylElement:
        return evaluate(self.datum, self.letters, length=len(self.letters))

    @property
    def text(self) -> str:
        return format_word(self.letters)

    def __repr__(self):
        return f"ReducedWord({self.datum.label}, [{self.text}])"


@dataclass(frozen=True)
class ParabolicContext:
    """The maximal parabolic J_i = S minus {s_i}."""

    datum: CartanDatum
    excluded: int

    def __post_init__(self):
        self.datum.check_node(self.excluded)

    @property
    def J(self) -> frozenset:
        return frozenset(self.datum.nodes) - {self.excluded}

    def contains(self, w: WeylElement) -> bool:
        """Is w a minimal coset representative for W / W_J?"""
        return w.right_descents() <= {self.excluded}


def apply(w: WeylElement, weight: Weight) -> Weight:
    """Act on a weight given in fundamental-weight coordinates."""
    if len(weight) != w.datum.rank:
        raise ValueError(f"weight has {len(weight)} coordinates, expected {w.datum.rank}")
    out = weight
    for j in reversed(w.reduced_word().letters):
        out = out.reflect(w.datum, j)
    return out


def evaluate(datum: CartanDatum, word: Iterable[int], *, length: int | None = None) -> WeylElement:
    """Multiply out ``s_{i_1} s_{i_2} ... s_{i_r}``."""
    a = datum.cartan
    m = np.eye(datum.rank, dtype=np.int64)
    for x in word:
        j = datum.check_node(int(x))
        m = _right_mul(a, m, j - 1)
    return WeylElement(datum, m, length=length)


def reduce(datum: CartanDatum, word: Iterable[int]) -> ReducedWord:
    """A reduced word for the element a (possibly non-reduced) word evaluates to."""
    return evaluate(datum, word).reduced_word()


def descents(w: WeylElement) -> tuple[frozenset, frozenset]:
    """Return ``(left descents, right descents)``."""
    return w.left_descents(), w.right_descents()


class Level(NamedTuple):
    """One length-slice of an orbit walk.

    ``words`` holds zero-based node indices, one reduced word per row;
    ``matrices`` is ``None`` unless requested.
    """

    length: int
    weights: np.ndarray
    words: np.ndarray
    matrices: np.ndarray | None


def walk_orbit(datum: CartanDatum, top: Weight | Sequence[int], *,
               generators: Iterable[int] | None = None, with_matrices: bool = False,
               sort: bool = True) -> Iterator[Level]:
    """Breadth-first walk down the orbit of a dominant weight.

    Each orbit point mu = w(top) is reached from its parent by prepending the
    smallest s_j (j in ``generators``) with ``<mu, alpha_j^vee> < 0``; this
    canonical-parent rule visits every point exactly once, so no global
    seen-set is needed.  The words produced are reduced words of the minimal
    representatives w, and ``level.length`` is their common length.
    """
    a = datum.cartan
    n = datum.rank
    top = np.array(tuple(top), dtype=np.int64)
    if (top < 0).any():
        raise ValueError("walk_orbit needs a dominant starting weight")
    gens = sorted(datum.nodes) if generators is None else sorted({datum.check_node(g) for g in generators})
    gens0 = np.array([g - 1 for g in gens], dtype=np.int64)
    gen_mask = np.zeros(n, dtype=bool)
    gen_mask[gens0] = True
    alpha = a.T  # alpha[j] = fundamental-weight coordinates of alpha_j

    weights = top[None, :]
    words = np.zeros((1, 0), dtype=np.int8)
    mats = np.eye(n, dtype=np.int64)[None] if with_matrices else None
    length = 0
    while len(weights):
        yield Level(length, weights, words, mats)
        child_w, child_words, child_m = [], [], []
        for j in gens0:
            up = weights[:, j] > 0
            if not up.any():
                continue
            mu = weights[up] - weights[up, j][:, None] * alpha[j]
            neg = (mu < 0) & gen_mask
            first = np.argmax(neg, axis=1)
            keep = first == j
            if not keep.any():
                continue
            child_w.append(mu[keep])
            parent_words = words[up][keep]
            col = np.full((len(parent_words), 1), j, dtype=np.int8)
            child_words.append(np.hstack([col, parent_words]))
            if with_matrices:
                pm = mats[up][keep]
                cm = pm.copy()
                cm[:, j, :] = pm[:, j, :] - np.einsum("k,lkm->lm", a[j], pm)
                child_m.append(cm)
        length += 1
        if not child_w:
            break
        weights = np.concatenate(child_w)
        words = np.concatenate(child_words)
        mats = np.concatenate(child_m) if with_matrices else None
        if sort and len(words) > 1 and words.shape[1]:
            order = np.lexsort(words.T[::-1])
            weights, words = weights[order], words[order]
            if with_matrices:
                mats = mats[order]


def _elements(datum: CartanDatum, levels: Iterator[Level]) -> Iterator[WeylElement]:
    for level in levels:
        for row in range(len(level.words)):
            yield WeylElement(datum, level.matrices[row], length=level.length,
                              word=(level.words[row] + 1).tolist())


def enumerate_group(datum: CartanDatum, budget: int = DEFAULT_BUDGET) -> Iterator[WeylElement]:
    """Every element of W once, ordered by length then lexicographic word.

    Raises
    ------
    BudgetExceeded
        If ``|W|`` (known in advance from the degrees) is above ``budget``.
    """
    order = group_order(datum.label)
    if order > budget:
        raise BudgetExceeded(datum.label, order, budget)
    return _elements(datum, walk_orbit(datum, datum.rho(), with_matrices=True))


def group_levels(datum: CartanDatum, budget: int = DEFAULT_BUDGET, *,
                 with_matrices: bool = False, sort: bool = False) -> Iterator[Level]:
    """Batch form of :func:`enumerate_group` for vectorized sweeps."""
    order = group_order(datum.label)
    if order > budget:
        raise BudgetExceeded(datum.label, order, budget)
    return walk_orbit(datum, datum.rho(), with_matrices=with_matrices, sort=sort)


def quotient_levels(ctx: ParabolicContext, *, with_matrices: bool = False,
                    sort: bool = True) -> Iterator[Level]:
    """Batch form of :func:`quotient_representatives`."""
    return walk_orbit(ctx.datum, ctx.datum.fundamental_weight(ctx.excluded),
                      with_matrices=with_matrices, sort=sort)


def quotient_representatives(ctx: ParabolicContext) -> Iterator[WeylElement]:
    """Minimal-length representatives of W / W_{J_i}, by length then word.

    These are the elements whose right descents lie in {i}; there are
    ``|W| / |W_{J_i}|`` of them.
    """
    return _elements(ctx.datum, quotient_levels(ctx, with_matrices=True))


def subgroup_order(datum: CartanDatum, generators: Iterable[int]) -> int:
    """|W_J| by walking the W_J-orbit of rho (on which W_J acts freely)."""
    return sum(len(level.words) for level in
               walk_orbit(datum, datum.rho(), generators=generators, sort=False))


def _greedy_longest(datum: CartanDatum, generators: Iterable[int]) -> WeylElement:
    a = datum.cartan
    gens = sorted(generators)
    m = np.eye(datum.rank, dtype=np.int64)
    length = 0
    while True:
        for j in gens:
            if not (m[:, j - 1] < 0).any():
                m = _right_mul(a, m, j - 1)
                length += 1
                break
        else:
            return WeylElement(datum, m, length=length)


def longest_element(datum: CartanDatum) -> WeylElement:
    return evaluate(datum, datum.w0_word, length=len(datum.w0_word))


def longest_parabolic(ctx: ParabolicContext) -> WeylElement:
    """The longest element w_{J_i,0} of W_{J_i}."""
    return _greedy_longest(ctx.datum, ctx.J)


def w0J(ctx: ParabolicContext) -> WeylElement:
    """The minimal representative w_0^{J_i} of the coset w_0 W_{J_i}."""
    return longest_element(ctx.datum) * longest_parabolic(ctx)

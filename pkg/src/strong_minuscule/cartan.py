"""Root data for the finite simple types A_n through G_2.

Nodes are numbered 1..n.  The numbering follows these diagrams:

    A_n   1 - 2 - ... - n
    B_n   1 <= 2 - ... - n          (alpha_1 short)
    C_n   1 => 2 - ... - n          (alpha_1 long)
    D_n   n - (n-1) - ... - 3 < 1, 2   (3 is the branch node)
    E_n   1 - 2 - 3 - 4 - ... - (n-1), with n attached to 3
    F_4   1 - 2 => 3 - 4            (alpha_3, alpha_4 short)
    G_2   1 <= 2                    (alpha_1 short)

Roots are integer vectors in the simple-root basis and weights are integer
vectors in the fundamental-weight basis.  The Cartan entry ``a[i, j]`` is
``<alpha_j, alpha_i^vee>``, so the simple root alpha_j has fundamental-weight
coordinates equal to column j of the Cartan matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "TypeLabel",
    "CartanDatum",
    "Weight",
    "InvalidTypeError",
    "build_datum",
    "adjacency",
    "is_minuscule_weight",
    "positive_roots_of",
    "group_order",
]

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class InvalidTypeError(ValueError):
    """Raised for a family letter or rank that names no finite simple type."""


@dataclass(frozen=True, order=True)
class TypeLabel:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam in MIN_RANK:
            if not isinstance(self.rank, int) or self.rank < MIN_RANK[fam]:
                raise InvalidTypeError(
                    f"type {fam} needs rank >= {MIN_RANK[fam]}, got {self.rank!r}"
                )
        elif fam in FIXED_RANKS:
            if self.rank not in FIXED_RANKS[fam]:
                allowed = ", ".join(str(r) for r in FIXED_RANKS[fam])
                raise InvalidTypeError(
                    f"type {fam} exists only in rank {allowed}, got {self.rank!r}"
                )
        else:
            raise InvalidTypeError(f"unknown family {self.family!r}")

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        """Parse labels such as ``"A5"``, ``"d4"`` or ``"E_8"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if m is None:
            raise InvalidTypeError(f"cannot parse type label {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(label: TypeLabel) -> list[tuple[int, int, int, int]]:
    # (i, j, a_ij, a_ji), 1-based; a_ij = -2 or -3 marks alpha_i as the short end
    fam, n = label.family, label.rank
    chain = lambda lo, hi: [(k, k + 1, -1, -1) for k in range(lo, hi)]
    if fam == "A":
        return chain(1, n)
    if fam == "B":
        return [(1, 2, -2, -1)] + chain(2, n)
    if fam == "C":
        return [(1, 2, -1, -2)] + chain(2, n)
    if fam == "D":
        return [(3, 1, -1, -1), (3, 2, -1, -1)] + chain(3, n)
    if fam == "E":
        return chain(1, n - 1) + [(3, n, -1, -1)]
    if fam == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    if fam == "G":
        return [(1, 2, -3, -1)]
    raise InvalidTypeError(str(label))


def cartan_matrix(label: TypeLabel) -> np.ndarray:
    n = label.rank
    a = 2 * np.eye(n, dtype=np.int64)
    for i, j, aij, aji in _edges(label):
        a[i - 1, j - 1] = aij
        a[j - 1, i - 1] = aji
    return a


def _symmetrizer(a: np.ndarray) -> list[Fraction]:
    """Return d with d_i a_ij = d_j a_ji; d_i is proportional to |alpha_i|^2."""
    n = a.shape[0]
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i, j] != 0 and d[j] is None:
                d[j] = d[i] * int(a[i, j]) / int(a[j, i])
                stack.append(j)
    return d  # type: ignore[return-value]


def positive_roots_of(a: np.ndarray) -> np.ndarray:
    """Close the simple roots under simple reflections, keeping positive roots.

    Returns an ``(N, n)`` integer array sorted by height, then lexicographically.
    """
    n = a.shape[0]
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(n):
                c = sum(int(a[j, k]) * beta[k] for k in range(n))
                if c == 0:
                    continue
                image = list(beta)
                image[j] -= c
                image = tuple(image)
                if min(image) >= 0 and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), r))
    return np.array(roots, dtype=np.int64)


def _w0_word(a: np.ndarray) -> tuple[int, ...]:
    # Walk rho down to -rho, prepending s_j whenever it raises the length.
    n = a.shape[0]
    mu = np.ones(n, dtype=np.int64)
    chosen = []
    while True:
        up = np.flatnonzero(mu > 0)
        if up.size == 0:
            break
        j = int(up[0])
        mu = mu - mu[j] * a[:, j]
        chosen.append(j + 1)
    return tuple(reversed(chosen))


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """Immutable root datum of a finite simple type.

    Attributes
    ----------
    label : TypeLabel
    cartan : ndarray
        ``(n, n)`` Cartan matrix, ``cartan[i-1, j-1] = a_ij``.
    K : frozenset of int
        Nodes whose simple root is short (every node when simply laced).
    adj_s, adj_l : dict
        Neighbours j of i with ``a_ij = -1`` and with ``a_ij in {-2, -3}``.
    positive_roots : ndarray
        ``(N, n)`` positive roots in simple-root coordinates.
    w0_word : tuple of int
        A reduced word for the longest element.
    """

    label: TypeLabel
    cartan: np.ndarray
    K: frozenset
    adj_s: dict
    adj_l: dict
    positive_roots: np.ndarray
    w0_word: tuple
    root_lengths: tuple

    @property
    def rank(self) -> int:
        return self.label.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        return int(self.cartan[i - 1, j - 1])

    def adj(self, i: int) -> frozenset:
        return self.adj_s[i] | self.adj_l[i]

    def fundamental_weight(self, i: int) -> "Weight":
        return Weight(tuple(int(k == i) for k in self.nodes))

    def simple_root_weight(self, j: int) -> "Weight":
        return Weight(tuple(int(x) for x in self.cartan[:, j - 1]))

    def rho(self) -> "Weight":
        return Weight((1,) * self.rank)

    def check_node(self, i: int) -> int:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise ValueError(f"node {i!r} is not in I = {{1..{self.rank}}} for {self.label}")
        return int(i)

    def __eq__(self, other):
        return isinstance(other, CartanDatum) and self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return f"CartanDatum({self.label})"


@lru_cache(maxsize=None)
def _build(label: TypeLabel) -> CartanDatum:
    a = cartan_matrix(label)
    a.setflags(write=False)
    n = label.rank
    d = _symmetrizer(a)
    short = min(d)
    K = frozenset(i + 1 for i in range(n) if d[i] == short)
    adj_s, adj_l = {}, {}
    for i in range(1, n + 1):
        row = a[i - 1]
        adj_s[i] = frozenset(j + 1 for j in range(n) if j != i - 1 and row[j] == -1)
        adj_l[i] = frozenset(j + 1 for j in range(n) if j != i - 1 and row[j] < -1)
    roots = positive_roots_of(a)
    roots.setflags(write=False)
    return CartanDatum(
        label=label,
        cartan=a,
        K=K,
        adj_s=adj_s,
        adj_l=adj_l,
        positive_roots=roots,
        w0_word=_w0_word(a),
        root_lengths=tuple(x / short for x in d),
    )


def build_datum(label: TypeLabel | str | tuple) -> CartanDatum:
    """Return the (cached, shared) root datum for a type label.

    Accepts a :class:`TypeLabel`, a string like ``"B3"`` or a pair
    ``("B", 3)``.
    """
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    elif isinstance(label, tuple):
        label = TypeLabel(*label)
    return _build(label)


def adjacency(datum: CartanDatum, i: int) -> tuple[frozenset, frozenset]:
    """Return ``(adj_s(i), adj_l(i))``."""
    i = datum.check_node(i)
    return datum.adj_s[i], datum.adj_l[i]


@lru_cache(maxsize=None)
def _positive_coroots(label: TypeLabel) -> np.ndarray:
    # coroots form the root system with the transposed Cartan matrix
    return positive_roots_of(build_datum(label).cartan.T)


def is_minuscule_weight(datum: CartanDatum, i: int) -> bool:
    """True iff ``<Lambda_i, beta^vee>`` lies in {0, 1} for every positive root.

    The pairing of Lambda_i with a coroot is its alpha_i^vee coefficient, so
    the test runs over the positive coroots written in the simple-coroot basis.
    """
    i = datum.check_node(i)
    return int(_positive_coroots(datum.label)[:, i - 1].max()) <= 1


_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def group_order(label: TypeLabel | str) -> int:
    """Order of the Weyl group as the product of its fundamental degrees."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    fam, n = label.family, label.rank
    if fam == "A":
        degrees = range(2, n + 2)
    elif fam in "BC":
        degrees = range(2, 2 * n + 1, 2)
    elif fam == "D":
        degrees = list(range(2, 2 * n - 1, 2)) + [n]
    else:
        degrees = _DEGREES[str(label)]
    out = 1
    for deg in degrees:
        out *= deg
    return out


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates.

    ``coords[i-1]`` is the coefficient of Lambda_i, which is also the pairing
    ``<weight, alpha_i^vee>``.
    """

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def pair(self, i: int) -> int:
        return self.coords[i - 1]

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords, strict=True)))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords))

    def reflect(self, datum: CartanDatum, i: int) -> "Weight":
        """s_i(weight) = weight - <weight, alpha_i^vee> alpha_i."""
        c = self.coords[i - 1]
        if c == 0:
            return self
        return self - datum.simple_root_weight(i) * c

    def support(self) -> frozenset:
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c != 0)

    def __repr__(self):
        return f"Weight{self.coords}"

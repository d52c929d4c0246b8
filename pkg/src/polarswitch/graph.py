"""Labeled graphs on packed bit rows, strong regularity and graph6 export."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import UsageError, VerificationError


class LabeledGraph:
    """Simple undirected graph whose vertices carry distinct labels.

    ``adj`` may be a dense boolean matrix or packed rows (``np.packbits``
    along axis 1).  Label order fixes the vertex indexing for every export.
    """

    def __init__(self, labels: Sequence[Hashable], adj: np.ndarray, packed: bool = False):
        labels = tuple(labels)
        v = len(labels)
        if len(set(labels)) != v:
            raise UsageError("labels must be pairwise distinct")
        if packed:
            rows = np.ascontiguousarray(adj, dtype=np.uint8)
            dense = np.unpackbits(rows, axis=1, count=v).astype(bool)
        else:
            dense = np.asarray(adj, dtype=bool)
            rows = np.packbits(dense, axis=1)
        if dense.shape != (v, v):
            raise UsageError(f"adjacency must be {v}x{v}, got {dense.shape}")
        if dense.diagonal().any():
            raise UsageError("adjacency has loops")
        if not np.array_equal(dense, dense.T):
            raise UsageError("adjacency is not symmetric")
        dense.flags.writeable = False
        rows.flags.writeable = False
        self.labels = labels
        self.rows = rows
        self._dense = dense

    @property
    def matrix(self) -> np.ndarray:
        return self._dense

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.labels)}

    @property
    def degrees(self) -> np.ndarray:
        return self._dense.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self._dense.sum()) // 2

    def has_edge(self, x, y) -> bool:
        return bool(self._dense[self.index[x], self.index[y]])

    def indices_of(self, labels: Iterable[Hashable]) -> np.ndarray:
        try:
            return np.array(sorted(self.index[x] for x in labels), dtype=np.int64)
        except KeyError as exc:
            raise UsageError(f"unknown vertex {exc.args[0]!r}") from None

    def subgraph(self, labels: Iterable[Hashable]) -> LabeledGraph:
        idx = self.indices_of(labels)
        return LabeledGraph([self.labels[i] for i in idx], self._dense[np.ix_(idx, idx)])

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self._dense, 1))
        return list(zip(i.tolist(), j.tolist()))

    def __eq__(self, other):
        return (
            isinstance(other, LabeledGraph)
            and self.labels == other.labels
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"LabeledGraph(v={self.order}, e={self.edge_count})"

    @classmethod
    def from_predicate(cls, labels: Sequence[Hashable], adjacent: Callable[[Hashable, Hashable], bool]) -> LabeledGraph:
        v = len(labels)
        a = np.zeros((v, v), dtype=bool)
        for i in range(v):
            for j in range(i + 1, v):
                if adjacent(labels[i], labels[j]):
                    a[i, j] = a[j, i] = True
        return cls(labels, a)


def add_isolated_vertex(g: LabeledGraph, label: Hashable) -> LabeledGraph:
    """Insert an isolated vertex, keeping labels sorted when they are sortable."""
    labels = list(g.labels) + [label]
    try:
        order = sorted(range(len(labels)), key=labels.__getitem__)
    except TypeError:
        order = list(range(len(labels)))
    a = np.zeros((len(labels), len(labels)), dtype=bool)
    a[:-1, :-1] = g.matrix
    order = np.array(order)
    return LabeledGraph([labels[i] for i in order], a[np.ix_(order, order)])


# -- strong regularity ----------------------------------------------------


class Verdict(enum.Enum):
    NOT_REGULAR = "not-regular"
    NOT_SRG = "not-srg"


@dataclass(frozen=True)
class SrgParams:
    """``(v, k, lambda, mu)``; ``lam``/``mu`` are None when no pair of that kind exists."""

    v: int
    k: int
    lam: int | None
    mu: int | None

    @property
    def degenerate(self) -> bool:
        return self.lam is None or self.mu is None

    def feasible(self) -> bool:
        """``k(k - lambda - 1) = (v - k - 1) mu`` where both sides are defined."""
        left = 0 if self.k == 0 else (None if self.lam is None else self.k * (self.k - self.lam - 1))
        right = 0 if self.v - self.k - 1 == 0 else (None if self.mu is None else (self.v - self.k - 1) * self.mu)
        if left is None or right is None:
            return True
        return left == right

    def as_tuple(self) -> tuple:
        return (self.v, self.k, self.lam, self.mu)

    def __str__(self):
        def f(x):
            return "-" if x is None else str(x)

        return f"({self.v},{self.k},{f(self.lam)},{f(self.mu)})"


def common_neighbours(g: LabeledGraph) -> np.ndarray:
    """Pairwise common-neighbour counts."""
    a = g.matrix.astype(np.float32)
    # exact: counts stay far below 2**24
    return (a @ a).astype(np.int64)


def srg_params(g: LabeledGraph) -> SrgParams | Verdict:
    v = g.order
    if v < 2:
        raise UsageError("strong regularity needs at least two vertices")
    deg = g.degrees
    k = int(deg[0])
    if not np.all(deg == k):
        return Verdict.NOT_REGULAR
    c = common_neighbours(g)
    a = g.matrix
    off = ~np.eye(v, dtype=bool)
    adj_vals = c[a]
    non_vals = c[~a & off]
    lam = mu = None
    if adj_vals.size:
        if not np.all(adj_vals == adj_vals[0]):
            return Verdict.NOT_SRG
        lam = int(adj_vals[0])
    if non_vals.size:
        if not np.all(non_vals == non_vals[0]):
            return Verdict.NOT_SRG
        mu = int(non_vals[0])
    params = SrgParams(v, k, lam, mu)
    if not params.feasible():
        raise VerificationError(f"computed parameters {params} violate the feasibility identity")
    return params


FAMILIES = ("NO-even", "NO-odd", "GammaO")


def _integral(x: Fraction) -> int | None:
    return int(x) if x.denominator == 1 and x >= 0 else None


def expected_params(family: str, m: int, q: int, sign: int) -> SrgParams:
    """Parameter formulas for NO^{+-}(2m,2), NO^{+-}(2m+1,q) and Gamma(O^{+-}(2m,q)).

    ``lam`` is None when the graph has no edges and ``mu`` is None when it is
    complete; otherwise a value the formula leaves non-integral is None too.
    """
    if sign not in (1, -1):
        raise UsageError(f"sign must be +1 or -1, got {sign}")
    if q < 2 or q & (q - 1):
        raise UsageError(f"q must be a power of two, got {q}")
    s = sign
    Q = Fraction(q)
    if family == "NO-even":
        if q != 2 or m < 2:
            raise UsageError("NO-even needs q = 2 and m >= 2")
        v = 2 ** (2 * m - 1) - s * 2 ** (m - 1)
        k = 2 ** (2 * m - 2) - 1
        lam = Fraction(2) ** (2 * m - 3) - 2
        mu = Fraction(2) ** (2 * m - 3) + s * Fraction(2) ** (m - 2)
    elif family == "NO-odd":
        if m < 1:
            raise UsageError("NO-odd needs m >= 1")
        v = q**m * (q**m + s) // 2
        k = (q ** (m - 1) + s) * (q**m - s)
        lam = 2 * (Q ** (2 * m - 2) - 1) + s * Q ** (m - 1) * (q - 1)
        mu = 2 * Q ** (m - 1) * (Q ** (m - 1) + s)
    elif family == "GammaO":
        if m < 2:
            raise UsageError("GammaO needs m >= 2")
        v = _integral((Q**m - s) * (Q ** (m - 1) + s) / (q - 1))
        k = _integral(Q * (Q ** (m - 1) - s) * (Q ** (m - 2) + s) / (q - 1))
        lam = Q**2 * (Q ** (m - 2) - s) * (Q ** (m - 3) + s) / (q - 1) + q - 1
        mu = (Q ** (m - 1) - s) * (Q ** (m - 2) + s) / (q - 1)
        if v is None or k is None:
            raise UsageError(f"GammaO formulas are not integral at m={m}, q={q}")
    else:
        raise UsageError(f"unknown family {family!r}; expected one of {FAMILIES}")
    lam = None if k == 0 else _integral(Fraction(lam))
    mu = None if k == v - 1 else _integral(Fraction(mu))
    return SrgParams(int(v), int(k), lam, mu)


# -- isomorphism under an explicit map -------------------------------------


def check_iso_map(g1: LabeledGraph, g2: LabeledGraph, phi: Mapping[Hashable, Hashable] | Callable) -> bool:
    """Whether ``phi`` (labels of g1 -> labels of g2) is a graph isomorphism."""
    f = phi.__getitem__ if isinstance(phi, Mapping) else phi
    if g1.order != g2.order:
        raise UsageError("graphs have different orders")
    try:
        image = [g2.index[f(x)] for x in g1.labels]
    except KeyError as exc:
        raise UsageError(f"map leaves the vertex set: {exc.args[0]!r}") from None
    if len(set(image)) != g1.order:
        raise UsageError("map is not a bijection")
    p = np.array(image, dtype=np.int64)
    return bool(np.array_equal(g2.matrix[np.ix_(p, p)], g1.matrix))


# -- graph6 ---------------------------------------------------------------


def _size_prefix(n: int) -> bytes:
    if n < 0:
        raise UsageError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    if n < 1 << 36:
        return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise UsageError("graph too large for graph6")


def graph6_encode(g: LabeledGraph) -> bytes:
    """graph6 bytes (no header, no newline)."""
    n = g.order
    r, c = np.tril_indices(n, -1)
    # column order of the upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    bits = g.matrix[c, r].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    vals = bits @ (1 << np.arange(5, -1, -1))
    return _size_prefix(n) + (vals + 63).astype(np.uint8).tobytes()


def graph6_decode(data: bytes | str, labels: Sequence[Hashable] | None = None) -> LabeledGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    vals = [b - 63 for b in data]
    if not vals or any(x < 0 or x > 63 for x in vals):
        raise UsageError("not a graph6 string")
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise UsageError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    bits = np.unpackbits(np.array(body, dtype=np.uint8)[:, None], axis=1)[:, 2:].ravel()[:need]
    a = np.zeros((n, n), dtype=bool)
    r, c = np.tril_indices(n, -1)
    a[c, r] = bits.astype(bool)
    a |= a.T
    return LabeledGraph(list(range(n)) if labels is None else labels, a)


def write_edge_list(g: LabeledGraph) -> str:
    return "".join(f"{i} {j}\n" for i, j in g.edges())


def write_labels(g: LabeledGraph, fmt: Callable[[Hashable], str] = str) -> str:
    return "".join(fmt(x) + "\n" for x in g.labels)

"""Two-graphs, descendants and Seidel switching.

A :class:`TwoGraph` stores one bit per index triple ``i < j < k`` in
lexicographic order (the combinatorial rank), packed with ``np.packbits``.
Two-graphs are only materialised up to :data:`MAX_MATERIALIZED` vertices;
beyond that, equality of switching classes is decided by the certificate
returned from :func:`switching_equivalence`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import ResourceError, UsageError, VerificationError
from .forms import BilinearSpace, QuadraticForm
from .field import get_field
from .graph import LabeledGraph

MAX_MATERIALIZED = 300
EXHAUSTIVE_AXIOM_LIMIT = 64


def _triples_from_pair_bits(bits: np.ndarray, odd: bool) -> np.ndarray:
    """Triples whose three pair bits sum to 1 (``odd``) or 0 mod 2, lex order."""
    v = len(bits)
    if v > MAX_MATERIALIZED:
        raise ResourceError(f"refusing to materialise a two-graph on {v} > {MAX_MATERIALIZED} vertices")
    bits = bits.astype(bool)
    chunks = []
    for i in range(v - 2):
        sub = bits[i + 1 :, i + 1 :]
        r, c = np.triu_indices(v - i - 1, 1)
        row = bits[i, i + 1 :]
        par = row[r] ^ row[c] ^ sub[r, c]
        chunks.append(par if odd else ~par)
    if not chunks:
        return np.zeros(0, dtype=bool)
    return np.concatenate(chunks)


def triple_index(v: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index triples ``(i, j, k)``, ``i < j < k``, in rank order."""
    out_i, out_j, out_k = [], [], []
    for i in range(v - 2):
        r, c = np.triu_indices(v - i - 1, 1)
        out_i.append(np.full(len(r), i))
        out_j.append(r + i + 1)
        out_k.append(c + i + 1)
    if not out_i:
        e = np.zeros(0, dtype=np.int64)
        return e, e, e
    return np.concatenate(out_i), np.concatenate(out_j), np.concatenate(out_k)


def triple_rank(v: int, i: int, j: int, k: int) -> int:
    """Lexicographic rank of ``i < j < k`` among the 3-subsets of ``range(v)``."""
    before_i = comb(v, 3) - comb(v - i, 3)
    n = v - i - 1
    a, b = j - i - 1, k - i - 1
    before_j = comb(n, 2) - comb(n - a, 2)
    return before_i + before_j + (b - a - 1)


class TwoGraph:
    """Vertex labels plus a packed membership bit per triple."""

    def __init__(self, labels: Sequence[Hashable], members: np.ndarray, packed: bool = False):
        labels = tuple(labels)
        v = len(labels)
        if len(set(labels)) != v:
            raise UsageError("labels must be pairwise distinct")
        if v > MAX_MATERIALIZED:
            raise ResourceError(f"two-graph on {v} > {MAX_MATERIALIZED} vertices")
        n = comb(v, 3)
        if packed:
            bits = np.ascontiguousarray(members, dtype=np.uint8)
            if len(bits) != (n + 7) // 8:
                raise UsageError("packed membership has the wrong length")
        else:
            members = np.asarray(members, dtype=bool)
            if members.shape != (n,):
                raise UsageError(f"need {n} membership flags, got {members.shape}")
            bits = np.packbits(members)
        bits.flags.writeable = False
        self.labels = labels
        self.bits = bits

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def members(self) -> np.ndarray:
        m = np.unpackbits(self.bits, count=comb(self.order, 3)).astype(bool)
        m.flags.writeable = False
        return m

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.labels)}

    @property
    def triple_count(self) -> int:
        return int(np.count_nonzero(self.members))

    @cached_property
    def tensor(self) -> np.ndarray:
        """Symmetric ``v x v x v`` membership tensor."""
        v = self.order
        t = np.zeros((v, v, v), dtype=bool)
        i, j, k = triple_index(v)
        sel = self.members
        i, j, k = i[sel], j[sel], k[sel]
        for a, b, c in ((i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)):
            t[a, b, c] = True
        t.flags.writeable = False
        return t

    def contains(self, x, y, z) -> bool:
        i, j, k = sorted(self.index[w] for w in (x, y, z))
        if i == j or j == k:
            return False
        r = triple_rank(self.order, i, j, k)
        return bool(self.members[r])

    def triples(self) -> list[tuple]:
        i, j, k = triple_index(self.order)
        sel = self.members
        lab = self.labels
        return [(lab[a], lab[b], lab[c]) for a, b, c in zip(i[sel].tolist(), j[sel].tolist(), k[sel].tolist())]

    def to_text(self, fmt=str) -> str:
        """Sorted label triples, one per line."""
        rows = sorted(tuple(sorted(fmt(x) for x in t)) for t in self.triples())
        return "".join(" ".join(r) + "\n" for r in rows)

    def pair_degrees(self) -> np.ndarray:
        """``v x v`` counts of member triples through each pair."""
        v = self.order
        i, j, k = triple_index(v)
        sel = self.members
        i, j, k = i[sel], j[sel], k[sel]
        flat = np.bincount(
            np.concatenate([i * v + j, i * v + k, j * v + k]), minlength=v * v
        ).reshape(v, v)
        return flat + flat.T

    def __eq__(self, other):
        return isinstance(other, TwoGraph) and self.labels == other.labels and np.array_equal(self.bits, other.bits)

    def __repr__(self):
        return f"TwoGraph(v={self.order}, triples={self.triple_count})"


def associated_two_graph(g: LabeledGraph) -> TwoGraph:
    """Triples inducing an odd number of edges."""
    return TwoGraph(g.labels, _triples_from_pair_bits(g.matrix, odd=True))


def pairing_two_graph(space: BilinearSpace, labels: Sequence[int]) -> TwoGraph:
    """Triples with ``<a,b>* + <a,c>* + <b,c>* = 0`` (trace of the pairing when q > 2)."""
    xs = np.asarray(labels, dtype=np.int64)
    p = space.field.trace_table[space.pairing(xs, xs)]
    return TwoGraph(list(labels), _triples_from_pair_bits(p, odd=False))


def regular_degree(t: TwoGraph) -> int | None:
    if t.order < 2:
        raise UsageError("need at least two vertices")
    d = t.pair_degrees()
    off = d[~np.eye(t.order, dtype=bool)]
    return int(off[0]) if np.all(off == off[0]) else None


def check_two_graph_axiom(t: TwoGraph, samples: int = 100_000, rng: np.random.Generator | None = None) -> bool:
    """Every 4-subset holds an even number of triples.

    Exhaustive up to :data:`EXHAUSTIVE_AXIOM_LIMIT` vertices, random 4-subsets above.
    """
    v = t.order
    if v < 4:
        return True
    T = t.tensor
    if v <= EXHAUSTIVE_AXIOM_LIMIT:
        for a in range(v - 3):
            for b in range(a + 1, v - 2):
                rest = slice(b + 1, v)
                tab = T[a, b, rest]
                par = tab[:, None] ^ tab[None, :] ^ T[a, rest, rest] ^ T[b, rest, rest]
                if np.triu(par, 1).any():
                    return False
        return True
    rng = np.random.default_rng(0) if rng is None else rng
    q = np.sort(np.array([rng.choice(v, 4, replace=False) for _ in range(samples)]), axis=1)
    a, b, c, d = q.T
    par = T[a, b, c] ^ T[a, b, d] ^ T[a, c, d] ^ T[b, c, d]
    return not par.any()


def is_automorphism(t: TwoGraph, phi: Callable[[Hashable], Hashable]) -> bool:
    """Whether the label map ``phi`` permutes the vertices and preserves the triples."""
    try:
        p = np.array([t.index[phi(x)] for x in t.labels], dtype=np.int64)
    except KeyError:
        return False
    if len(set(p.tolist())) != t.order:
        return False
    T = t.tensor
    return bool(np.array_equal(T[np.ix_(p, p, p)], T))


def descendant(t: TwoGraph, w: Hashable) -> LabeledGraph:
    """``u ~ v`` iff ``{u, v, w}`` is a triple; ``w`` ends up isolated."""
    if w not in t.index:
        raise UsageError(f"unknown vertex {w!r}")
    return LabeledGraph(t.labels, t.tensor[t.index[w]].copy())


def seidel_switch(g: LabeledGraph, y: Iterable[Hashable]) -> LabeledGraph:
    """Complement every pair with exactly one end in ``y``."""
    idx = g.indices_of(y)
    mask = np.zeros(g.order, dtype=bool)
    mask[idx] = True
    return LabeledGraph(g.labels, g.matrix ^ (mask[:, None] ^ mask[None, :]))


@dataclass(frozen=True)
class SwitchingResult:
    """``switching_set`` is None when the graphs are not switching equivalent.

    ``two_graphs_equal`` is the independent verdict from comparing the
    associated two-graphs (only computed up to ``cross_check_limit`` vertices).
    """

    switching_set: frozenset | None
    two_graphs_equal: bool | None

    @property
    def equivalent(self) -> bool:
        return self.switching_set is not None


def switching_equivalence(g1: LabeledGraph, g2: LabeledGraph, cross_check_limit: int = 200) -> SwitchingResult:
    """Find ``Y`` with ``seidel_switch(g1, Y) == g2`` from packed rows.

    The difference graph ``H = E1 xor E2`` must be complete bipartite between
    ``Y`` (the class of vertex 0 under non-adjacency in H) and its complement.
    """
    if g1.labels != g2.labels:
        raise UsageError("graphs must share the same labeled vertex list")
    v = g1.order
    if v == 0:
        return SwitchingResult(frozenset(), True)
    h = g1.rows ^ g2.rows
    nbytes = h.shape[1]
    valid = np.packbits(np.ones(v, dtype=bool))
    out0 = h[0]
    # class of vertex 0: its non-neighbours in H (vertex 0 included)
    in0 = ~out0 & valid
    in_y = np.unpackbits(in0, count=v).astype(bool)
    expect = np.where(in_y[:, None], out0[None, :], in0[None, :])
    ok = bool(np.array_equal(h, expect)) if nbytes else True
    y = frozenset(g1.labels[i] for i in np.flatnonzero(in_y)) if ok else None
    cross = None
    if v <= cross_check_limit:
        cross = associated_two_graph(g1) == associated_two_graph(g2)
        if cross != ok:
            raise VerificationError("switching certificate disagrees with the two-graph comparison")
    return SwitchingResult(y, cross)


def build_symplectic_two_graph(form: QuadraticForm) -> TwoGraph:
    """``X^{+-}_{2m}``: vertices ``Theta(a) = 1`` over GF(2), pairing triples."""
    if form.space.q != 2:
        raise UsageError("symplectic two-graphs live over GF(2)")
    verts = np.flatnonzero(form.values == 1)
    return pairing_two_graph(form.space, verts.tolist())


def build_full_symplectic_two_graph(m: int) -> TwoGraph:
    """``T_{2m}`` on all of ``GF(2)^{2m}``."""
    sp = BilinearSpace.standard(get_field(1), m)
    return pairing_two_graph(sp, sp.points.tolist())


def expected_two_graph_degree(m: int, sign: int) -> int:
    return 2 ** (2 * m - 2) - sign * 2 ** (m - 1) - 2


# -- switching sets between NO^{+-}(4m,2) and NO^{-+}(2m+1,4) -----------------


@dataclass(frozen=True)
class SwitchingSets:
    lam: int
    a: frozenset
    b: frozenset


def compute_switching_sets(form: QuadraticForm) -> SwitchingSets:
    """``A = {Theta = w}``, ``B = {Theta = w + 1}`` for ``w`` a root of ``x^2 + x + 1`` in GF(4)."""
    sp = form.space
    if sp.q != 4:
        raise UsageError("switching sets are defined for forms over GF(4)")
    lam = 0b10
    if sp.field.mul(lam, lam) ^ lam ^ 1:
        raise VerificationError("w is not a root of x^2 + x + 1")
    vals = form.values
    a = frozenset(np.flatnonzero(vals == lam).tolist())
    b = frozenset(np.flatnonzero(vals == lam ^ 1).tolist())
    verts = frozenset(np.flatnonzero(form.trace_values == 1).tolist())
    if a & b or (a | b) != verts:
        raise VerificationError("switching sets do not partition the vertex set")
    return SwitchingSets(lam, a, b)


def induced_degree(g: LabeledGraph, labels: Iterable[Hashable]) -> int | None:
    """Common degree of the induced subgraph, None if it is not regular."""
    sub = g.subgraph(labels)
    d = sub.degrees
    if len(d) == 0:
        return None
    return int(d[0]) if np.all(d == d[0]) else None

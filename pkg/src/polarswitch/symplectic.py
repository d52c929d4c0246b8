"""Symplectic matrices, transvections and the action of Sp(2m, q) on forms.

Group elements are kept both as matrices (packed rows: row ``i`` is the
image of ``e_i`` under ``u -> uA``) and as permutations of the packed
points of the space, which makes composition and hashing cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ResourceError, UsageError, VerificationError
from .forms import BilinearSpace, QuadraticForm, identify_form_parameter

DEFAULT_CAP = 10**7


class SympMatrix:
    """An element of Sp(V) acting on row vectors, ``u -> uA``."""

    def __init__(self, space: BilinearSpace, rows: Sequence[int], check: bool = True, perm: np.ndarray | None = None):
        rows = tuple(int(r) for r in rows)
        if len(rows) != space.dim:
            raise UsageError(f"need {space.dim} rows, got {len(rows)}")
        if check:
            for i in range(space.dim):
                for j in range(space.dim):
                    if space.symp(rows[i], rows[j]) != space.gram[i][j]:
                        raise DomainError("matrix does not preserve the symplectic form")
        self.space = space
        self.rows = rows
        if perm is not None:
            self.__dict__["perm"] = perm

    @classmethod
    def identity(cls, space: BilinearSpace) -> SympMatrix:
        return cls(space, [space.basis_vector(i) for i in range(space.dim)], check=False)

    @classmethod
    def from_perm(cls, space: BilinearSpace, perm: np.ndarray) -> SympMatrix:
        rows = [int(perm[space.basis_vector(i)]) for i in range(space.dim)]
        return cls(space, rows, check=False, perm=perm)

    @cached_property
    def perm(self) -> np.ndarray:
        """``perm[u] = uA`` for every packed ``u``."""
        p = self.space.linear_image(self.rows)
        p.flags.writeable = False
        return p

    @cached_property
    def inverse_perm(self) -> np.ndarray:
        inv = np.empty_like(self.perm)
        inv[self.perm] = self.space.points
        inv.flags.writeable = False
        return inv

    @cached_property
    def form_shift(self) -> int:
        table = self.space.theta_zero.values[self.inverse_perm]
        return identify_form_parameter(self.space, table)

    @property
    def entries(self) -> list[list[int]]:
        return [list(self.space.coords(r)) for r in self.rows]

    def apply(self, u: int) -> int:
        return int(self.perm[u])

    def __matmul__(self, other: SympMatrix) -> SympMatrix:
        """``self @ other`` acts as ``u -> (u self) other``."""
        return SympMatrix.from_perm(self.space, other.perm[self.perm])

    def inverse(self) -> SympMatrix:
        return SympMatrix.from_perm(self.space, self.inverse_perm)

    @property
    def is_identity(self) -> bool:
        return all(r == self.space.basis_vector(i) for i, r in enumerate(self.rows))

    def __eq__(self, other):
        return isinstance(other, SympMatrix) and self.space == other.space and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SympMatrix({self.entries})"


@dataclass(frozen=True)
class AffineSympMap:
    """``u -> uA + b``."""

    linear: SympMatrix
    shift: int

    @cached_property
    def perm(self) -> np.ndarray:
        p = self.linear.perm ^ self.shift
        p.flags.writeable = False
        return p

    def apply(self, u: int) -> int:
        return self.linear.apply(u) ^ self.shift

    def __matmul__(self, other: AffineSympMap) -> AffineSympMap:
        # (uA + b)C + d = u(AC) + (bC + d)
        return AffineSympMap(self.linear @ other.linear, other.linear.apply(self.shift) ^ other.shift)

    @property
    def is_translation(self) -> bool:
        return self.linear.is_identity


def transvection(space: BilinearSpace, a: int) -> SympMatrix:
    """``T_a : u -> u + <u, a> a``."""
    rows = []
    for i in range(space.dim):
        e = space.basis_vector(i)
        rows.append(e ^ space.scale(space.symp(e, a), a))
    return SympMatrix(space, rows, check=False)


def all_transvections(space: BilinearSpace) -> list[SympMatrix]:
    return [transvection(space, a) for a in range(1, space.size)]


def form_shift(A: SympMatrix) -> int:
    """``b`` with ``theta_0^A = theta_b``, where ``Theta^A(u) = Theta(uA^-1)``."""
    return A.form_shift


def act_on_form(a: int, A: SympMatrix) -> int:
    """Parameter of ``theta_a^A``; equals ``aA + b_A``."""
    if not A.space.is_standard:
        raise UsageError("the action on parameters needs the standard space")
    return A.apply(a) ^ form_shift(A)


def form_action_perm(A: SympMatrix) -> np.ndarray:
    """``a -> act_on_form(a, A)`` over all parameters."""
    return A.perm ^ form_shift(A)


def transformed_values(form: QuadraticForm, A: SympMatrix) -> np.ndarray:
    """Value table of ``Theta^A``."""
    return form.values[A.inverse_perm]


def find_transvection_equiv(space: BilinearSpace, a: int, b: int) -> int | None:
    """``gamma`` with ``theta_a^{T_{gamma(a+b)}} = theta_b``, or None when the types differ.

    Among the admissible values the smallest (as a bit pattern) is returned.
    """
    if a == b:
        raise UsageError("need distinct parameters")
    field = space.field
    t0 = space.theta_zero
    t = field.solve_artin_schreier(t0.evaluate(a) ^ t0.evaluate(b))
    if t is None:
        return None
    ab = space.symp(a, b)
    target = QuadraticForm.theta(space, b).values
    source = QuadraticForm.theta(space, a)
    found = []
    for root in (t, t ^ 1):
        s = ab ^ root
        if s == 0:
            continue
        gamma = field.inv(field.sqrt(s))
        T = transvection(space, space.scale(gamma, a ^ b))
        if not np.array_equal(transformed_values(source, T), target):
            raise VerificationError(f"transvection equivalence failed for gamma={gamma}")
        found.append(gamma)
    if not found:
        raise VerificationError("no admissible gamma despite matching traces")
    return min(found)


def _perm_key(p: np.ndarray) -> bytes:
    return p.astype(np.uint16 if len(p) <= 1 << 16 else np.uint32).tobytes()


def generate_group(generators: Iterable[SympMatrix], cap: int = DEFAULT_CAP) -> list[SympMatrix]:
    """Closure of ``generators`` by breadth-first right multiplication.

    Raises :class:`ResourceError` as soon as more than ``cap`` elements are found.
    """
    gens = list(generators)
    if not gens:
        raise UsageError("need at least one generator")
    space = gens[0].space
    ident = SympMatrix.identity(space)
    seen = {_perm_key(ident.perm)}
    elements = [ident]
    frontier = [ident.perm]
    gen_perms = [g.perm for g in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gen_perms:
                r = g[p]
                key = _perm_key(r)
                if key in seen:
                    continue
                seen.add(key)
                if len(seen) > cap:
                    raise ResourceError(f"group exceeds cap of {cap} elements")
                r.flags.writeable = False
                elements.append(SympMatrix.from_perm(space, r))
                nxt.append(r)
        frontier = nxt
    return elements


def symplectic_group(space: BilinearSpace, cap: int = DEFAULT_CAP) -> list[SympMatrix]:
    order = group_order("Sp", space.m, space.q)
    if order > cap:
        raise ResourceError(f"|Sp({space.dim},{space.q})| = {order} exceeds cap {cap}")
    return generate_group(all_transvections(space), cap)


def group_order(family: str, m: int, q: int) -> int:
    """Orders of Sp(2m,q) (= O(2m+1,q)) and O^{+-}(2m,q)."""
    if m < 1 or q < 2 or q & (q - 1):
        raise UsageError(f"invalid (m, q) = ({m}, {q})")
    prod = math.prod(q ** (2 * i) - 1 for i in range(1, m))
    if family == "Sp":
        return q ** (m * m) * prod * (q ** (2 * m) - 1)
    if family in ("O+", "O-"):
        sign = 1 if family == "O+" else -1
        return 2 * q ** (m * (m - 1)) * (q**m - sign) * prod
    raise UsageError(f"unknown family {family!r}")


def orbits(perms: Iterable[np.ndarray], points: Iterable[int]) -> list[list[int]]:
    """Orbits of the group generated by ``perms`` on ``points``, sorted."""
    perms = list(perms)
    remaining = set(int(p) for p in points)
    out = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for p in perms:
                y = int(p[x])
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        if not orbit <= remaining:
            raise UsageError("points are not a union of orbits")
        remaining -= orbit
        out.append(sorted(orbit))
    return sorted(out, key=lambda o: (-len(o), o))


def orbits_on_forms(group: Sequence[SympMatrix], seeds: Iterable[int] | None = None) -> list[list[int]]:
    """Partition of the parameters ``a`` (forms ``theta_a``) into orbits."""
    space = group[0].space
    points = space.points if seeds is None else seeds
    return orbits((form_action_perm(A) for A in group), points)


@dataclass
class StabilizerReport:
    elements: list[SympMatrix]
    vector_orbits: list[list[int]]
    form_orbits: list[list[int]]

    @property
    def order(self) -> int:
        return len(self.elements)


def stabilizer_of_form(a: int, group: Sequence[SympMatrix]) -> StabilizerReport:
    """Elements fixing ``theta_a`` and their orbits on nonzero vectors and on forms."""
    stab = [A for A in group if act_on_form(a, A) == a]
    space = group[0].space
    vec = orbits((A.perm for A in stab), range(1, space.size))
    frm = orbits((form_action_perm(A) for A in stab), space.points)
    return StabilizerReport(stab, vec, frm)


def check_2transitivity(perms: Sequence[np.ndarray], domain: Iterable[int]) -> bool:
    """Transitive on ``domain``, with the stabilizer of one point transitive on the rest."""
    domain = sorted(int(x) for x in domain)
    if len(domain) < 2:
        raise UsageError("2-transitivity needs at least two points")
    if len(orbits(perms, domain)) != 1:
        return False
    x = domain[0]
    stab = [p for p in perms if int(p[x]) == x]
    return len(orbits(stab, domain[1:])) == 1


def complement_h2(group: Sequence[SympMatrix]) -> list[AffineSympMap]:
    """``{u -> uA + b_A}``: the complement of the translations built from the form action."""
    return [AffineSympMap(A, form_shift(A)) for A in group]


def complement_h1(group: Sequence[SympMatrix]) -> list[AffineSympMap]:
    return [AffineSympMap(A, 0) for A in group]


def is_subgroup(maps: Sequence[AffineSympMap]) -> bool:
    """Closed under composition (finite set, so a subgroup)."""
    perms = np.stack([f.perm for f in maps])
    keys = {_perm_key(p) for p in perms}
    if len(keys) != len(maps):
        return False
    for p in perms:
        # rows: u -> (u p) q for every q
        composed = perms[:, p]
        for r in composed:
            if _perm_key(r) not in keys:
                return False
    return True

"""Symplectic spaces and quadratic forms over GF(2^h).

Vectors are packed ints: coordinate ``i`` occupies bits ``h*i .. h*i+h-1``.
Addition is XOR.  With this packing the GF(2)-lift of GF(2^h)^n (basis
``1, w, w^2, ...`` per coordinate, interleaved) is the identity on ints,
so a vector keeps its label when the field is restricted to GF(2).

The standard space carries the Gram matrix ``F = [[0, I], [I, 0]]`` and the
forms ``theta_a(u) = u E u^T + <a, u>^2`` with ``E = [[0, I], [0, 0]]``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from . import _linalg
from .errors import DomainError, UsageError, VerificationError
from .field import FieldSpec, get_field

MAX_SPACE_BITS = 16


class BilinearSpace:
    """``GF(q)^dim`` with a nondegenerate alternating Gram matrix."""

    def __init__(self, field: FieldSpec, dim: int, gram: Sequence[Sequence[int]]):
        if dim < 2 or dim % 2:
            raise UsageError(f"dimension must be even and positive, got {dim}")
        if field.h * dim > MAX_SPACE_BITS:
            raise UsageError(f"space of {field.h * dim} bits exceeds the {MAX_SPACE_BITS}-bit cap")
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        if len(gram) != dim or any(len(r) != dim for r in gram):
            raise UsageError("gram must be dim x dim")
        for i in range(dim):
            if gram[i][i]:
                raise DomainError("gram must have zero diagonal")
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise DomainError("gram must be symmetric")
        if _linalg.rank(field, [list(r) for r in gram]) != dim:
            raise DomainError("gram is singular")
        self.field = field
        self.dim = dim
        self.m = dim // 2
        self.gram = gram
        self.size = field.size**dim
        self.bits = field.h * dim

    @classmethod
    def standard(cls, field: FieldSpec | int, m: int) -> BilinearSpace:
        """Standard space of dimension ``2m``; an int ``field`` is read as q."""
        if isinstance(field, int):
            field = FieldSpec.of_order(field)
        n = 2 * m
        gram = [[int(abs(i - j) == m) for j in range(n)] for i in range(n)]
        return cls(field, n, gram)

    @cached_property
    def theta_zero(self) -> QuadraticForm:
        """``theta_0`` (standard space only)."""
        return QuadraticForm.theta(self, 0)

    @property
    def q(self) -> int:
        return self.field.size

    @cached_property
    def is_standard(self) -> bool:
        return self.gram == BilinearSpace.standard(self.field, self.m).gram

    def __eq__(self, other):
        return isinstance(other, BilinearSpace) and (self.field, self.gram) == (other.field, other.gram)

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        kind = "standard" if self.is_standard else "custom"
        return f"BilinearSpace(q={self.q}, dim={self.dim}, {kind})"

    # -- scalar helpers ---------------------------------------------------

    def coord(self, u: int, i: int) -> int:
        h = self.field.h
        return (u >> (h * i)) & (self.field.size - 1)

    def coords(self, u: int) -> tuple[int, ...]:
        self.check_vector(u)
        return tuple(self.coord(u, i) for i in range(self.dim))

    def pack(self, coords: Sequence[int]) -> int:
        if len(coords) != self.dim:
            raise UsageError(f"expected {self.dim} coordinates, got {len(coords)}")
        u = 0
        for i, c in enumerate(coords):
            c = int(c)
            if c < 0 or c >= self.field.size:
                raise UsageError(f"coordinate {c} is not in GF({self.q})")
            u |= c << (self.field.h * i)
        return u

    def basis_vector(self, i: int) -> int:
        return 1 << (self.field.h * i)

    def check_vector(self, u: int) -> int:
        if not 0 <= u < self.size:
            raise UsageError(f"vector {u} is not in a space of {self.size} points")
        return u

    def scale(self, c: int, u: int) -> int:
        if c == 1:
            return u
        out = 0
        for i in range(self.dim):
            x = self.coord(u, i)
            if x:
                out |= self.field.mul(c, x) << (self.field.h * i)
        return out

    def symp(self, u: int, v: int) -> int:
        """``u G v^T``."""
        self.check_vector(u)
        self.check_vector(v)
        mul = self.field.mul
        cu = [self.coord(u, i) for i in range(self.dim)]
        cv = [self.coord(v, i) for i in range(self.dim)]
        s = 0
        for i, x in enumerate(cu):
            if not x:
                continue
            for j, g in enumerate(self.gram[i]):
                if g and cv[j]:
                    s ^= mul(x, mul(g, cv[j]))
        return s

    def format_vector(self, u: int) -> str:
        return "(" + ",".join(self.field.format(c) for c in self.coords(u)) + ")"

    # -- vectorised kernels ----------------------------------------------

    @cached_property
    def points(self) -> np.ndarray:
        pts = np.arange(self.size, dtype=np.int64)
        pts.flags.writeable = False
        return pts

    def coord_array(self, xs: np.ndarray) -> np.ndarray:
        """``(len(xs), dim)`` uint8 coordinates."""
        xs = np.asarray(xs, dtype=np.int64)
        shifts = self.field.h * np.arange(self.dim)
        return ((xs[:, None] >> shifts[None, :]) & (self.field.size - 1)).astype(np.uint8)

    def pairing(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Matrix of ``<x, y>`` for ``x`` in xs, ``y`` in ys."""
        mul = self.field.mul_table
        cx = self.coord_array(xs)
        cy = self.coord_array(ys)
        # w[y, i] = (G y^T)_i
        w = np.zeros_like(cy)
        for i in range(self.dim):
            for j, g in enumerate(self.gram[i]):
                if g:
                    w[:, i] ^= mul[g, cy[:, j]]
        out = np.zeros((len(cx), len(cy)), dtype=np.uint8)
        for i in range(self.dim):
            out ^= mul[cx[:, i][:, None], w[:, i][None, :]]
        return out

    def linear_image(self, rows: Sequence[int], xs: np.ndarray | None = None) -> np.ndarray:
        """Images ``u A`` where row ``i`` of ``A`` is the packed vector ``rows[i]``."""
        if xs is None:
            xs = self.points
        cx = self.coord_array(xs)
        out = np.zeros(len(cx), dtype=np.int64)
        for i, r in enumerate(rows):
            scaled = np.array([self.scale(c, r) for c in range(self.field.size)], dtype=np.int64)
            out ^= scaled[cx[:, i]]
        return out


def _polar(coeff: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(coeff)
    return tuple(
        tuple(0 if i == j else (coeff[i][j] if i < j else coeff[j][i]) for j in range(n))
        for i in range(n)
    )


class QuadraticForm:
    """``Theta(u) = u M u^T`` with ``M`` upper triangular.

    The polarisation ``Theta(u+v) + Theta(u) + Theta(v)`` must equal the
    space's Gram pairing, so every instance is nondegenerate.  ``param`` is
    set when the space is standard and ``Theta = theta_param``.
    """

    def __init__(self, space: BilinearSpace, coeff: Sequence[Sequence[int]], param: int | None = None):
        n = space.dim
        coeff = tuple(tuple(int(x) for x in row) for row in coeff)
        if len(coeff) != n or any(len(r) != n for r in coeff):
            raise UsageError("coefficient matrix must be dim x dim")
        if any(coeff[i][j] for i in range(n) for j in range(i)):
            raise UsageError("coefficient matrix must be upper triangular")
        if _polar(coeff) != space.gram:
            raise DomainError("form does not linearize to the space's symplectic form")
        if param is not None:
            if not space.is_standard:
                raise UsageError("canonical parameter needs the standard space")
            space.check_vector(param)
        self.space = space
        self.coeff = coeff
        self.param = param

    @classmethod
    def theta(cls, space: BilinearSpace, a: int = 0) -> QuadraticForm:
        """``theta_a`` on the standard space."""
        if not space.is_standard:
            raise UsageError("theta_a is defined on the standard space")
        space.check_vector(a)
        n, m = space.dim, space.m
        sq = space.field.square
        coeff = [[0] * n for _ in range(n)]
        for i in range(m):
            coeff[i][i + m] = 1
        # <a,u>^2 = sum_i c_i^2 u_i^2 with c = aF
        for i in range(n):
            c = space.coord(a, (i + m) % n)
            coeff[i][i] = sq(c)
        return cls(space, coeff, param=a)

    @classmethod
    def from_function(cls, space: BilinearSpace, f: Callable[[int], int]) -> QuadraticForm:
        """Recover ``M`` from values on ``e_i`` and ``e_i + e_j``."""
        n = space.dim
        e = [space.basis_vector(i) for i in range(n)]
        diag = [f(x) for x in e]
        coeff = [[0] * n for _ in range(n)]
        for i in range(n):
            coeff[i][i] = diag[i]
            for j in range(i + 1, n):
                coeff[i][j] = f(e[i] ^ e[j]) ^ diag[i] ^ diag[j]
        form = cls(space, coeff)
        return form

    def __eq__(self, other):
        return isinstance(other, QuadraticForm) and (self.space, self.coeff) == (other.space, other.coeff)

    def __hash__(self):
        return hash((self.space, self.coeff))

    def __repr__(self):
        if self.param is not None:
            return f"QuadraticForm({self.space!r}, a={self.space.format_vector(self.param)})"
        return f"QuadraticForm({self.space!r}, coeff={self.coeff})"

    def __call__(self, u: int) -> int:
        return self.evaluate(u)

    def evaluate(self, u: int) -> int:
        sp = self.space
        sp.check_vector(u)
        mul = sp.field.mul
        c = [sp.coord(u, i) for i in range(sp.dim)]
        s = 0
        for i, row in enumerate(self.coeff):
            if not c[i]:
                continue
            for j in range(i, sp.dim):
                if row[j] and c[j]:
                    s ^= mul(row[j], mul(c[i], c[j]))
        return s

    @cached_property
    def values(self) -> np.ndarray:
        """Value table over the whole space, indexed by packed vector."""
        sp = self.space
        mul = sp.field.mul_table
        c = sp.coord_array(sp.points)
        out = np.zeros(sp.size, dtype=np.uint8)
        for i, row in enumerate(self.coeff):
            for j in range(i, sp.dim):
                if row[j]:
                    out ^= mul[row[j], mul[c[:, i], c[:, j]]]
        out.flags.writeable = False
        return out

    @cached_property
    def trace_values(self) -> np.ndarray:
        t = self.space.field.trace_table[self.values]
        t.flags.writeable = False
        return t

    def shifted(self, d: int) -> QuadraticForm:
        """``Theta + <d, .>^2``; on the standard space ``theta_a -> theta_{a+d}``."""
        sp = self.space
        sp.check_vector(d)
        sq = sp.field.square
        coeff = [list(r) for r in self.coeff]
        for i in range(sp.dim):
            coeff[i][i] ^= sq(sp.symp(d, sp.basis_vector(i)))
        param = None if self.param is None else self.param ^ d
        return QuadraticForm(sp, coeff, param=param)

    def zero_count(self) -> int:
        return int(np.count_nonzero(self.values == 0))

    def form_type(self, method: str | None = None) -> int:
        """+1 hyperbolic, -1 elliptic.

        ``method='trace'`` uses the trace of ``theta_0(a)`` (needs ``param``),
        ``'count'`` counts zeros.  By default both run when possible and must agree.
        """
        if method not in (None, "trace", "count"):
            raise UsageError(f"unknown method {method!r}")
        by_trace = by_count = None
        if method in (None, "trace"):
            if self.param is None:
                if method == "trace":
                    raise UsageError("trace method needs a canonical parameter")
            else:
                t0 = QuadraticForm.theta(self.space, 0).evaluate(self.param)
                by_trace = -1 if self.space.field.trace(t0) else 1
        if method in (None, "count"):
            by_count = _type_from_count(self.space, self.zero_count())
        if by_trace is not None and by_count is not None and by_trace != by_count:
            raise VerificationError(f"trace type {by_trace} disagrees with zero-count type {by_count}")
        return by_trace if by_trace is not None else by_count


def expected_zero_count(q: int, m: int, sign: int) -> int:
    return q ** (2 * m - 1) + sign * q ** (m - 1) * (q - 1)


def _type_from_count(space: BilinearSpace, zeros: int) -> int:
    for sign in (1, -1):
        if zeros == expected_zero_count(space.q, space.m, sign):
            return sign
    raise DomainError(f"zero count {zeros} matches neither type")


def zero_count(form: QuadraticForm) -> int:
    return form.zero_count()


def form_type(form: QuadraticForm, method: str | None = None) -> int:
    return form.form_type(method)


def symp(space: BilinearSpace, u: int, v: int) -> int:
    return space.symp(u, v)


def eval_form(form: QuadraticForm, u: int) -> int:
    return form.evaluate(u)


def theta0(space: BilinearSpace, u: int) -> int:
    return space.theta_zero.evaluate(u)


def identify_form_parameter(space: BilinearSpace, values: np.ndarray) -> int:
    """Return ``a`` with ``theta_a`` equal to the given value table."""
    if not space.is_standard:
        raise UsageError("parameter identification needs the standard space")
    values = np.asarray(values)
    if values.shape != (space.size,):
        raise UsageError(f"value table must have {space.size} entries")
    n, m = space.dim, space.m
    sqrt = space.field.sqrt
    coords = [0] * n
    for i in range(n):
        # theta_0(e_i) = 0, so <a, e_i> = sqrt(Theta(e_i)); <a, e_i> = a_{i +- m}
        coords[(i + m) % n] = sqrt(int(values[space.basis_vector(i)]))
    a = space.pack(coords)
    if not np.array_equal(QuadraticForm.theta(space, a).values, values):
        raise DomainError("value table is not a quadratic form linearizing to the standard symplectic form")
    return a


def forms_tangent(space: BilinearSpace, a: int, b: int) -> bool:
    """Whether the quadrics of ``theta_a`` and ``theta_b`` are tangent: ``theta_a(a+b) = 0``."""
    if a == b:
        raise UsageError("tangency needs distinct forms")
    return QuadraticForm.theta(space, a).evaluate(a ^ b) == 0


def trace_lift(form: QuadraticForm) -> tuple[BilinearSpace, QuadraticForm]:
    """GF(2)-space of dimension ``h*dim`` with the trace pairing, and ``Tr o Theta``.

    Packed vectors are unchanged by the lift.
    """
    sp = form.space
    field = sp.field
    n2 = field.h * sp.dim
    gram = [[field.trace(sp.symp(1 << k, 1 << l)) for l in range(n2)] for k in range(n2)]
    lifted = BilinearSpace(get_field(1), n2, gram)
    star = QuadraticForm.from_function(lifted, lambda u: field.trace(form.evaluate(u)))
    return lifted, star


def symplectic_basis(space: BilinearSpace) -> list[int]:
    """Rows ``e_1..e_m, f_1..f_m`` (packed) of ``B`` with ``B G B^T = F``.

    Pivots are picked by lowest index, so the result is deterministic and the
    identity on a standard space.
    """
    field = space.field
    remaining = [space.basis_vector(i) for i in range(space.dim)]
    es: list[int] = []
    fs: list[int] = []
    while remaining:
        e = remaining.pop(0)
        if e == 0:
            continue
        k = next((k for k, w in enumerate(remaining) if space.symp(e, w)), None)
        if k is None:
            raise DomainError("gram is singular")
        f = remaining.pop(k)
        f = space.scale(field.inv(space.symp(e, f)), f)
        nxt = []
        for w in remaining:
            # w + <w,f> e + <w,e> f, orthogonal to e and f
            w ^= space.scale(space.symp(w, f), e) ^ space.scale(space.symp(w, e), f)
            nxt.append(w)
        remaining = nxt
        es.append(e)
        fs.append(f)
    rows = es + fs
    std = BilinearSpace.standard(field, space.m)
    for i, r in enumerate(rows):
        for j, s in enumerate(rows):
            if space.symp(r, s) != std.gram[i][j]:
                raise VerificationError("symplectic basis does not normalise the gram")
    return rows


def to_standard(form: QuadraticForm) -> tuple[list[int], QuadraticForm]:
    """Basis change ``B`` and the standard-space ``theta_a`` with ``theta_a(u) = Theta(uB)``."""
    rows = symplectic_basis(form.space)
    std = BilinearSpace.standard(form.space.field, form.space.m)
    table = form.values[form.space.linear_image(rows, std.points)]
    a = identify_form_parameter(std, table)
    return rows, QuadraticForm.theta(std, a)


def hyperbolic_form(space: BilinearSpace) -> QuadraticForm:
    return QuadraticForm.theta(space, 0)


def elliptic_form(space: BilinearSpace) -> QuadraticForm:
    """``theta_a`` for the smallest packed ``a`` with ``Tr(theta_0(a)) = 1``."""
    t = space.theta_zero.trace_values
    a = int(np.flatnonzero(t)[0])
    return QuadraticForm.theta(space, a)


def standard_form(q: int, m: int, sign: int) -> QuadraticForm:
    space = BilinearSpace.standard(q, m)
    if sign not in (1, -1):
        raise UsageError(f"sign must be +1 or -1, got {sign}")
    return hyperbolic_form(space) if sign == 1 else elliptic_form(space)

"""Arithmetic in GF(2^h) for small h, polynomial basis.

Elements are bit patterns: bit ``i`` is the coefficient of ``w**i`` where
``w`` is a root of the field modulus.  :class:`FieldSpec` exposes the
integer-level operations used by the hot paths; :class:`FieldElement` is
the checked, operator-friendly wrapper.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import DomainError, UsageError, VerificationError

MAX_DEGREE = 8

# x, x^2+x+1, x^3+x+1, x^4+x+1, ...
DEFAULT_MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(modulus: int) -> bool:
    """Exhaustive factor search; fine for degree <= 8."""
    deg = modulus.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _poly_mod(modulus, f) == 0:
                return False
    return True


class FieldSpec:
    """The field GF(2^h) with a fixed defining polynomial."""

    __slots__ = ("h", "modulus", "size", "__dict__")

    def __init__(self, h: int, modulus: int | None = None):
        if not 1 <= h <= MAX_DEGREE:
            raise UsageError(f"extension degree must be in 1..{MAX_DEGREE}, got {h}")
        if modulus is None:
            modulus = DEFAULT_MODULI[h]
        if modulus.bit_length() - 1 != h:
            raise UsageError(f"modulus {modulus:#b} does not have degree {h}")
        if not is_irreducible(modulus):
            raise DomainError(f"modulus {modulus:#b} is reducible")
        self.h = h
        self.modulus = modulus
        self.size = 1 << h

    @classmethod
    def of_order(cls, q: int) -> FieldSpec:
        if q < 2 or q & (q - 1):
            raise UsageError(f"q must be a power of two, got {q}")
        return get_field(q.bit_length() - 1)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.h, self.modulus) == (other.h, other.modulus)

    def __hash__(self):
        return hash((self.h, self.modulus))

    def __repr__(self):
        return f"FieldSpec(h={self.h}, modulus={self.modulus:#b})"

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def __iter__(self):
        return (FieldElement(x, self) for x in range(self.size))

    # -- integer-level operations -------------------------------------

    def mul(self, x: int, y: int) -> int:
        r = 0
        top = self.size
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= self.modulus
        return r

    def square(self, x: int) -> int:
        return self.mul(x, x)

    def power(self, x: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            n >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise DomainError("inversion of zero")
        # x^(q-2) by Lagrange
        return self.power(x, self.size - 2)

    def trace(self, x: int) -> int:
        t = 0
        for _ in range(self.h):
            t ^= x
            x = self.mul(x, x)
        if t > 1:
            raise VerificationError(f"trace left the prime field: {t}")
        return t

    def sqrt(self, x: int) -> int:
        for _ in range(self.h - 1):
            x = self.mul(x, x)
        return x

    def solve_artin_schreier(self, lam: int) -> int | None:
        """A root of t^2 + t + lam, or None when the polynomial is irreducible."""
        if self.trace(lam):
            return None
        # t = sum_i (sum_{j<=i} theta^(2^j)) lam^(2^i) with Tr(theta) = 1
        theta = self.trace_one
        t, partial, x = 0, 0, lam
        for _ in range(self.h):
            partial ^= theta
            t ^= self.mul(partial, x)
            theta = self.mul(theta, theta)
            x = self.mul(x, x)
        if self.mul(t, t) ^ t ^ lam:
            raise VerificationError("Artin-Schreier root failed verification")
        # return the smaller of the two roots for determinism
        return min(t, t ^ 1)

    @cached_property
    def trace_one(self) -> int:
        """Smallest element of absolute trace 1."""
        return next(z for z in range(self.size) if self.trace(z))

    def format(self, x: int) -> str:
        """Polynomial-basis bits, coefficient of 1 first."""
        return "".join(str((x >> i) & 1) for i in range(self.h))

    # -- bulk tables for vectorised kernels -----------------------------

    @cached_property
    def mul_table(self) -> np.ndarray:
        t = np.zeros((self.size, self.size), dtype=np.uint8)
        for x in range(self.size):
            for y in range(x, self.size):
                t[x, y] = t[y, x] = self.mul(x, y)
        t.flags.writeable = False
        return t

    @cached_property
    def square_table(self) -> np.ndarray:
        t = np.array([self.mul(x, x) for x in range(self.size)], dtype=np.uint8)
        t.flags.writeable = False
        return t

    @cached_property
    def trace_table(self) -> np.ndarray:
        t = np.array([self.trace(x) for x in range(self.size)], dtype=np.uint8)
        t.flags.writeable = False
        return t


_FIELDS: dict[int, FieldSpec] = {}


def get_field(h: int) -> FieldSpec:
    """Shared default-modulus field of degree ``h``."""
    if h not in _FIELDS:
        _FIELDS[h] = FieldSpec(h)
    return _FIELDS[h]


class FieldElement:
    """Immutable element of a :class:`FieldSpec`."""

    __slots__ = ("value", "spec")

    def __init__(self, value: int, spec: FieldSpec):
        value = int(value)
        if value < 0 or value >> spec.h:
            raise DomainError(f"{value:#b} has bits outside GF(2^{spec.h})")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "spec", spec)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise UsageError("mixed field specs")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.value ^ y, self.spec)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.spec.mul(self.value, y), self.spec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.spec.mul(self.value, self.spec.inv(y)), self.spec)

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.spec.power(self.spec.inv(self.value), -n), self.spec)
        return FieldElement(self.spec.power(self.value, n), self.spec)

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec.inv(self.value), self.spec)

    def trace(self) -> int:
        return self.spec.trace(self.value)

    def sqrt(self) -> FieldElement:
        return FieldElement(self.spec.sqrt(self.value), self.spec)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.spec))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.spec.size})[{self.spec.format(self.value)}]"

    def __str__(self):
        return self.spec.format(self.value)


def arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
    """Dispatch helper mirroring the ``add``/``mul``/``inv`` operation names."""
    if op == "inv":
        return x.inverse()
    if y is None:
        raise UsageError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise UsageError(f"unknown operation {op!r}")


def trace(x: FieldElement) -> int:
    return x.trace()


def sqrt(x: FieldElement) -> FieldElement:
    return x.sqrt()


def solve_artin_schreier(lam: FieldElement) -> FieldElement | None:
    t = lam.spec.solve_artin_schreier(lam.value)
    return None if t is None else FieldElement(t, lam.spec)

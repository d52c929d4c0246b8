from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarswitch.errors import DomainError, UsageError
from polarswitch.field import DEFAULT_MODULI, FieldElement, FieldSpec, get_field, is_irreducible, solve_artin_schreier

OMEGA = 0b10


def clmul_mod(x: int, y: int, modulus: int, h: int) -> int:
    """Schoolbook carry-less product followed by long division."""
    p = 0
    for i in range(h):
        if (y >> i) & 1:
            p ^= x << i
    for d in range(2 * h - 2, h - 1, -1):
        if (p >> d) & 1:
            p ^= modulus << (d - h)
    return p


def elements(h: int):
    return st.integers(0, (1 << h) - 1)


@pytest.mark.parametrize("h", [1, 2, 3, 4, 5, 6, 7, 8])
def test_mul_table_against_schoolbook(h):
    F = get_field(h)
    mod = DEFAULT_MODULI[h]
    for x in range(F.size):
        for y in range(F.size):
            assert F.mul(x, y) == clmul_mod(x, y, mod, h)
    assert (F.mul_table == F.mul_table.T).all()


def test_gf4_examples():
    F = get_field(2)
    assert F.mul(OMEGA, OMEGA) == OMEGA ^ 1
    assert F.inv(OMEGA) == OMEGA ^ 1
    assert [y for y in range(4) if F.mul(OMEGA, y) == 1] == [OMEGA ^ 1]
    assert F.trace(0) == 0
    assert F.trace(OMEGA) == 1
    assert F.trace(1) == 0
    assert F.sqrt(0) == 0 and F.sqrt(1) == 1
    assert F.sqrt(OMEGA) == F.square(OMEGA)
    assert F.solve_artin_schreier(0) == 0
    assert F.solve_artin_schreier(1) == OMEGA
    assert get_field(1).solve_artin_schreier(1) is None


@pytest.mark.parametrize("h", [1, 2, 3, 4, 5, 6, 7, 8])
def test_artin_schreier_exhaustive(h):
    F = get_field(h)
    for lam in range(F.size):
        roots = [t for t in range(F.size) if F.square(t) ^ t == lam]
        got = F.solve_artin_schreier(lam)
        if roots:
            assert got == min(roots)
            assert F.trace(lam) == 0
        else:
            assert got is None
            assert F.trace(lam) == 1


@pytest.mark.parametrize("h", [1, 2, 3, 4, 5, 6, 7, 8])
def test_trace_sqrt_inverse_exhaustive(h):
    F = get_field(h)
    for x in range(F.size):
        t, y = 0, x
        for _ in range(h):
            t ^= y
            y = F.square(y)
        assert F.trace(x) == t
        assert F.square(F.sqrt(x)) == x
        if x:
            assert F.mul(x, F.inv(x)) == 1
    assert sum(F.trace(x) for x in range(F.size)) == F.size // 2


def test_inverse_of_zero():
    with pytest.raises(DomainError):
        get_field(3).inv(0)
    with pytest.raises(DomainError):
        get_field(2)(1) / get_field(2)(0)


def test_field_construction_errors():
    with pytest.raises(UsageError):
        FieldSpec.of_order(6)
    with pytest.raises(UsageError):
        FieldSpec(0)
    with pytest.raises(DomainError):
        FieldSpec(2, 0b101)
    assert is_irreducible(0b10011) and not is_irreducible(0b10101)
    assert FieldSpec.of_order(16) == get_field(4)


def test_mixed_fields_rejected():
    with pytest.raises(UsageError):
        get_field(2)(1) + get_field(3)(1)


@given(elements(4), elements(4), elements(4))
def test_field_axioms_gf16(x, y, z):
    F = get_field(4)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == F(0)
    assert (a + b) ** 2 == a**2 + b**2
    assert (a * b).trace() == (b * a).trace()
    assert (a + b).trace() == a.trace() ^ b.trace()
    if y:
        assert (a / b) * b == a


@given(st.integers(1, 8).flatmap(lambda h: st.tuples(st.just(h), elements(h))))
def test_artin_schreier_roots_pair(hx):
    h, lam = hx
    F = get_field(h)
    t = solve_artin_schreier(F(lam))
    if t is None:
        assert F.trace(lam) == 1
    else:
        assert t * t + t == F(lam)
        u = t + F(1)
        assert u * u + u == F(lam)
        assert int(t) < int(u)


def test_formatting():
    F = get_field(2)
    assert F.format(OMEGA) == "01"
    assert F.format(1) == "10"
    assert isinstance(F(3), FieldElement)

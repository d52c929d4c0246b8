from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarswitch.errors import DomainError, UsageError, VerificationError
from polarswitch.forms import (
    BilinearSpace,
    QuadraticForm,
    elliptic_form,
    expected_zero_count,
    forms_tangent,
    hyperbolic_form,
    identify_form_parameter,
    standard_form,
    symplectic_basis,
    to_standard,
    trace_lift,
)

OMEGA = 0b10
SPACES = [(2, 1), (2, 2), (2, 3), (4, 1), (4, 2), (8, 1), (16, 1)]


def naive_symp(sp: BilinearSpace, u: int, v: int) -> int:
    F, m = sp.field, sp.m
    x, y = sp.coords(u), sp.coords(v)
    s = 0
    for i in range(m):
        s ^= F.mul(x[i], y[i + m]) ^ F.mul(x[i + m], y[i])
    return s


def naive_theta(sp: BilinearSpace, a: int, u: int) -> int:
    F, m = sp.field, sp.m
    x = sp.coords(u)
    s = 0
    for i in range(m):
        s ^= F.mul(x[i], x[i + m])
    return s ^ F.square(naive_symp(sp, a, u))


def test_examples():
    sp = BilinearSpace.standard(2, 1)
    assert sp.symp(sp.pack([1, 0]), sp.pack([0, 1])) == 1
    t0 = sp.theta_zero
    assert t0(sp.pack([1, 1])) == 1
    assert QuadraticForm.theta(sp, sp.pack([1, 1]))(sp.pack([1, 0])) == 1
    assert t0.form_type() == 1
    sp22 = BilinearSpace.standard(2, 2)
    assert QuadraticForm.theta(sp22, sp22.pack([1, 0, 1, 0])).form_type() == -1
    sp41 = BilinearSpace.standard(4, 1)
    assert QuadraticForm.theta(sp41, sp41.pack([1, OMEGA])).form_type() == -1
    assert hyperbolic_form(sp22).zero_count() == 10
    assert elliptic_form(sp22).zero_count() == 6
    assert sp41.theta_zero.zero_count() == 7


@pytest.mark.parametrize("q,m", SPACES)
def test_values_and_pairing_against_coordinates(q, m):
    sp = BilinearSpace.standard(q, m)
    rng = np.random.default_rng(q * 10 + m)
    us = rng.integers(0, sp.size, 200)
    vs = rng.integers(0, sp.size, 200)
    pair = sp.pairing(us, vs)
    for i, (u, v) in enumerate(zip(us.tolist(), vs.tolist())):
        assert sp.symp(u, v) == naive_symp(sp, u, v) == pair[i, i]
    for a in rng.integers(0, sp.size, 5).tolist():
        form = QuadraticForm.theta(sp, a)
        for u in us.tolist():
            assert form.values[u] == form(u) == naive_theta(sp, a, u)


@pytest.mark.parametrize("q,m", SPACES)
def test_type_routes_agree_and_counts(q, m):
    sp = BilinearSpace.standard(q, m)
    counts = {1: 0, -1: 0}
    rng = np.random.default_rng(7)
    params = range(sp.size) if sp.size <= 256 else rng.integers(0, sp.size, 64).tolist()
    for a in params:
        form = QuadraticForm.theta(sp, a)
        t = form.form_type("trace")
        assert form.form_type("count") == t == form.form_type()
        assert form.zero_count() == expected_zero_count(q, m, t)
        counts[t] += 1
    if sp.size <= 256:
        assert counts[1] == (q ** (2 * m) + q**m) // 2
        assert counts[-1] == (q ** (2 * m) - q**m) // 2


def test_identify_parameter():
    sp = BilinearSpace.standard(4, 2)
    assert identify_form_parameter(sp, sp.theta_zero.values) == 0
    for a in (1, 37, 200, sp.size - 1):
        assert identify_form_parameter(sp, QuadraticForm.theta(sp, a).values) == a
    bad = QuadraticForm.theta(sp, 37).values.copy()
    bad[123] ^= 1
    with pytest.raises(DomainError):
        identify_form_parameter(sp, bad)


@given(st.integers(0, 255))
def test_identify_roundtrip_property(a):
    sp = BilinearSpace.standard(4, 2)
    assert identify_form_parameter(sp, QuadraticForm.theta(sp, a).values) == a


def test_tangency():
    sp = BilinearSpace.standard(2, 1)
    assert forms_tangent(sp, sp.pack([1, 0]), sp.pack([0, 1]))
    assert not forms_tangent(sp, 0, sp.pack([1, 1]))
    with pytest.raises(UsageError):
        forms_tangent(sp, 1, 1)
    sp3 = BilinearSpace.standard(2, 3)
    t0 = sp3.theta_zero
    for a in range(0, sp3.size, 3):
        for b in range(sp3.size):
            if a != b:
                assert forms_tangent(sp3, a, b) == (t0(a) == t0(b))


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("q,m", [(4, 1), (4, 2), (8, 1), (16, 1)])
def test_trace_lift_preserves_type(q, m, sign):
    form = standard_form(q, m, sign)
    lifted_space, star = trace_lift(form)
    assert lifted_space.q == 2 and lifted_space.dim == form.space.dim * form.space.field.h
    n = lifted_space.dim // 2
    assert star.form_type() == sign
    assert star.zero_count() == 2 ** (2 * n - 1) + sign * 2 ** (n - 1)
    # same packed labels on both sides
    assert np.array_equal(star.values, form.trace_values)
    assert np.array_equal(star.values, form.space.field.trace_table[form.values])


def test_lifted_elliptic_example():
    sp = BilinearSpace.standard(4, 1)
    _, star = trace_lift(QuadraticForm.theta(sp, sp.pack([1, OMEGA])))
    assert star.form_type() == -1
    assert star.zero_count() == 6


@pytest.mark.parametrize("q,m", [(4, 1), (4, 2), (8, 1)])
def test_symplectic_basis_of_lifted_space(q, m):
    lifted, star = trace_lift(hyperbolic_form(BilinearSpace.standard(q, m)))
    rows = symplectic_basis(lifted)
    n = lifted.dim
    for i in range(n):
        for j in range(n):
            want = 1 if abs(i - j) == n // 2 else 0
            assert lifted.symp(rows[i], rows[j]) == want
    rows2, std = to_standard(star)
    img = lifted.linear_image(rows2)
    # Theta*(xB) equals the standard form at x
    assert np.array_equal(star.values[img], std.values)
    assert std.form_type() == star.form_type()


def test_standard_space_basis_is_identity():
    sp = BilinearSpace.standard(2, 3)
    assert symplectic_basis(sp) == [sp.basis_vector(i) for i in range(sp.dim)]


def test_space_validation():
    F = BilinearSpace.standard(2, 1).field
    with pytest.raises(DomainError):
        BilinearSpace(F, 2, [[0, 0], [0, 0]])
    with pytest.raises(DomainError):
        BilinearSpace(F, 2, [[1, 1], [1, 0]])
    with pytest.raises(UsageError):
        BilinearSpace(F, 3, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    with pytest.raises((UsageError, DomainError)):
        BilinearSpace.standard(16, 3)


def test_degenerate_coefficients_rejected():
    sp = BilinearSpace.standard(2, 1)
    with pytest.raises(DomainError):
        QuadraticForm(sp, [[1, 0], [0, 1]])


def test_type_disagreement_is_flagged(monkeypatch):
    form = hyperbolic_form(BilinearSpace.standard(2, 2))
    monkeypatch.setattr(QuadraticForm, "zero_count", lambda self: 6)
    with pytest.raises(VerificationError):
        form.form_type()


def test_shifted_matches_definition():
    sp = BilinearSpace.standard(4, 1)
    form = QuadraticForm.theta(sp, 5)
    for d in range(sp.size):
        s = form.shifted(d)
        assert s.param == 5 ^ d
        for u in range(sp.size):
            assert s(u) == form(u) ^ sp.field.square(sp.symp(d, u))

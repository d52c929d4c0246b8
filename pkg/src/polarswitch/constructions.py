"""Strongly regular polar graphs from their analytic descriptions.

Every builder evaluates the defining pair predicate directly on packed
vectors (vertex order = ascending packed value) and, unless ``check=False``,
compares the exhaustively computed parameters with the closed formulas.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, UsageError, VerificationError
from .field import get_field
from .forms import BilinearSpace, QuadraticForm, elliptic_form, hyperbolic_form
from .graph import LabeledGraph, SrgParams, expected_params, srg_params


def _graph(vertices: np.ndarray, adj: np.ndarray) -> LabeledGraph:
    np.fill_diagonal(adj, False)
    return LabeledGraph(vertices.tolist(), adj)


def _check(g: LabeledGraph, family: str, m: int, q: int, sign: int) -> LabeledGraph:
    got = srg_params(g)
    want = expected_params(family, m, q, sign)
    if got != want:
        raise VerificationError(f"{family} m={m} q={q} sign={sign:+d}: built {got}, formula {want}")
    return g


def _require_binary(form: QuadraticForm) -> None:
    if form.space.q != 2:
        raise UsageError("this construction lives over GF(2)")


def build_no_even(form: QuadraticForm, check: bool = True) -> LabeledGraph:
    """NO^{+-}(2m,2): vertices ``Theta(a) = 1``, ``a ~ b`` iff ``<a,b> = 0``."""
    _require_binary(form)
    sp = form.space
    verts = np.flatnonzero(form.values == 1)
    g = _graph(verts, sp.pairing(verts, verts) == 0)
    if check:
        _check(g, "NO-even", sp.m, 2, form.form_type())
    return g


def build_no_odd(form: QuadraticForm, check: bool = True) -> LabeledGraph:
    """NO^{-+}(2m+1,q) for a form of type +-1.

    Vertices ``Tr(Theta(a)) = 1``, ``a ~ b`` iff ``Theta(a+b) = <a,b>^2``.
    """
    sp = form.space
    verts = np.flatnonzero(form.trace_values == 1)
    pair = sp.pairing(verts, verts)
    adj = form.values[verts[:, None] ^ verts[None, :]] == sp.field.square_table[pair]
    g = _graph(verts, adj)
    if check:
        _check(g, "NO-odd", sp.m, sp.q, -form.form_type())
    return g


def w_vertices(space: BilinearSpace, sign: int) -> np.ndarray:
    """``W^+ = {Tr(theta_0(a)) = 0}``, ``W^- = {Tr(theta_0(a)) = 1}``."""
    if sign not in (1, -1):
        raise UsageError(f"sign must be +1 or -1, got {sign}")
    return np.flatnonzero(space.theta_zero.trace_values == (0 if sign == 1 else 1))


def build_no_odd_w(sign: int, m: int, q: int, check: bool = True) -> LabeledGraph:
    """NO^{+-}(2m+1,q) on ``W^{+-}``: ``a ~ b`` iff ``theta_a(a+b) = 0``."""
    sp = BilinearSpace.standard(q, m)
    verts = w_vertices(sp, sign)
    pair = sp.pairing(verts, verts)
    # theta_a(a+b) = theta_0(a+b) + <a,b>^2
    adj = sp.theta_zero.values[verts[:, None] ^ verts[None, :]] == sp.field.square_table[pair]
    g = _graph(verts, adj)
    if check:
        _check(g, "NO-odd", m, q, sign)
    return g


def no_odd_translation(form: QuadraticForm) -> int:
    """The ``d`` with ``Theta = theta_d``; ``x -> x + d`` maps build_no_odd onto build_no_odd_w."""
    if form.param is None:
        raise UsageError("translation needs a form on the standard space")
    return form.param


def build_gamma_o(form: QuadraticForm, check: bool = True) -> LabeledGraph:
    """Gamma(O^{+-}(2m,2)): nonzero ``Theta(a) = 0``, ``a ~ b`` iff ``<a,b> = 0``."""
    _require_binary(form)
    sp = form.space
    verts = np.flatnonzero(form.values == 0)
    verts = verts[verts != 0]
    g = _graph(verts, sp.pairing(verts, verts) == 0)
    if check:
        _check(g, "GammaO", sp.m, 2, form.form_type())
    return g


def build_sigma(m: int) -> LabeledGraph:
    """All of ``GF(2)^{2m}``, ``a ~ b`` iff ``<a,b> = 0``."""
    if m < 1:
        raise UsageError("m must be positive")
    sp = BilinearSpace.standard(get_field(1), m)
    verts = np.asarray(sp.points)
    return _graph(verts, sp.pairing(verts, verts) == 0)


def standard_binary_form(m: int, sign: int) -> QuadraticForm:
    sp = BilinearSpace.standard(2, m)
    return _pick(sp, sign)


def _pick(sp: BilinearSpace, sign: int) -> QuadraticForm:
    if sign == 1:
        return hyperbolic_form(sp)
    if sign == -1:
        return elliptic_form(sp)
    raise UsageError(f"sign must be +1 or -1, got {sign}")


def build_family(family: str, m: int, q: int, sign: int, check: bool = True) -> LabeledGraph:
    """Convenience entry point keyed by the sign of the *graph*.

    NO-odd graphs of sign ``s`` come from a form of type ``-s``.
    """
    if family == "NO-even":
        if q != 2:
            raise UsageError("NO-even is defined over GF(2)")
        return build_no_even(standard_binary_form(m, sign), check)
    if family == "NO-odd":
        return build_no_odd(_pick(BilinearSpace.standard(q, m), -sign), check)
    if family == "NO-odd-W":
        return build_no_odd_w(sign, m, q, check)
    if family == "GammaO":
        if q != 2:
            raise UsageError("GammaO construction is implemented over GF(2)")
        return build_gamma_o(standard_binary_form(m, sign), check)
    if family == "Sigma":
        return build_sigma(m)
    raise UsageError(f"unknown family {family!r}")


def params_of(g: LabeledGraph) -> SrgParams:
    p = srg_params(g)
    if not isinstance(p, SrgParams):
        raise DomainError(f"graph is {p.value}")
    return p

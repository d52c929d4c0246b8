"""One test per acceptance criterion; each records a PASS/FAIL line.

The lines are printed in the pytest terminal summary (see conftest.py) and
also when this file is run directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

import numpy as np
import pytest

from polarswitch import constructions as cons
from polarswitch import symplectic as sym
from polarswitch import twographs as tg
from polarswitch import verify
from polarswitch.errors import ResourceError
from polarswitch.forms import BilinearSpace, elliptic_form, hyperbolic_form
from polarswitch.graph import LabeledGraph, SrgParams, expected_params, graph6_decode, graph6_encode, srg_params

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, limit_s: float | None = None):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = f"{elapsed:.2f} s"
        if limit_s is not None:
            detail += f" (limit {limit_s:g} s)"
            assert elapsed < limit_s, f"took {elapsed:.2f} s, limit {limit_s} s"
        ok = True
    except BaseException as exc:
        detail = f"{type(exc).__name__}: {exc}"
        raise
    finally:
        RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} -- {detail}")


def _two_graph_forms():
    for m in (2, 3):
        for sign in (1, -1):
            yield m, sign, cons.standard_binary_form(m, sign)


CRITERION_1 = (
    [("NO-even", m, 2) for m in (2, 3, 4)]
    + [("NO-odd", m, 4) for m in (1, 2)]
    + [("NO-odd", m, 2) for m in (2, 3)]
    + [("GammaO", m, 2) for m in (2, 3, 4)]
)


def test_criterion_01_parameter_tables():
    with criterion(1, "parameter tables match the closed formulas", 10):
        for family, m, q in CRITERION_1:
            for sign in (1, -1):
                got = srg_params(cons.build_family(family, m, q, sign, check=False))
                want = expected_params(family, m, q, sign)
                assert got == want, (family, m, q, sign, got, want)
                if family == "NO-even":
                    assert want.v == 2 ** (2 * m - 1) - sign * 2 ** (m - 1)
                if family == "NO-odd":
                    assert 2 * want.v == q**m * (q**m + sign)


def test_criterion_02_spot_values():
    with criterion(2, "spot values"):
        assert srg_params(cons.build_family("NO-even", 2, 2, 1)) == SrgParams(6, 3, 0, 3)
        assert srg_params(cons.build_family("NO-even", 2, 2, -1)) == SrgParams(10, 3, 0, 1)
        assert srg_params(cons.build_family("NO-odd", 1, 4, 1)) == SrgParams(10, 6, 3, 4)
        assert srg_params(cons.build_family("NO-odd", 1, 4, -1)).k == 0
        assert srg_params(cons.build_family("GammaO", 2, 2, 1)) == SrgParams(9, 4, 1, 2)
        assert srg_params(cons.build_family("GammaO", 3, 2, -1)) == SrgParams(27, 10, 1, 5)


def test_criterion_03_orbit_structure():
    with criterion(3, "transvection groups, Omega orbits, 2-transitivity, stabilizers"):
        for q, m in ((2, 1), (2, 2), (4, 1)):
            sp = BilinearSpace.standard(q, m)
            group = sym.generate_group(sym.all_transvections(sp))
            assert len(group) == sym.group_order("Sp", m, q)
            sizes = sorted(len(o) for o in sym.orbits_on_forms(group))
            assert sizes == sorted([(q ** (2 * m) + q**m) // 2, (q ** (2 * m) - q**m) // 2])
            if (q, m) == (2, 2):
                perms = [sym.form_action_perm(A) for A in group]
                tr = sp.theta_zero.trace_values
                for t in (0, 1):
                    assert sym.check_2transitivity(perms, np.flatnonzero(tr == t).tolist())
                assert sym.stabilizer_of_form(hyperbolic_form(sp).param, group).order == 72
                assert sym.stabilizer_of_form(elliptic_form(sp).param, group).order == 120


def test_criterion_04_complements():
    with criterion(4, "H2 complement: subgroup, trivial translation part, orbits = trace fibres"):
        for q, m in ((2, 2), (4, 1)):
            sp = BilinearSpace.standard(q, m)
            h2 = sym.complement_h2(sym.symplectic_group(sp))
            assert sym.is_subgroup(h2)
            assert [f.shift for f in h2 if f.is_translation] == [0]
            orbs = sym.orbits([f.perm for f in h2], sp.points)
            assert sorted(len(o) for o in orbs) == sorted([(q ** (2 * m) + q**m) // 2, (q ** (2 * m) - q**m) // 2])
            tr = sp.theta_zero.trace_values
            fibres = sorted([np.flatnonzero(tr == t).tolist() for t in (0, 1)], key=lambda o: (-len(o), o))
            assert orbs == fibres


def test_criterion_05_appendix_identities():
    with criterion(5, "transvection identities and equivalence solver"):
        for (q, m), exhaustive in (((2, 2), True), ((4, 1), False), ((4, 2), False)):
            stats = verify.transvection_identities(BilinearSpace.standard(q, m), exhaustive, samples=10_000)
            for name, (n, fails) in stats.items():
                assert fails == 0, (q, m, name, fails)
                assert n >= (10_000 if not exhaustive else 16**3), (q, m, name, n)
        for q, m in ((2, 2), (4, 1)):
            n, fails = verify.equivalence_solver_check(BilinearSpace.standard(q, m))
            sz = q ** (2 * m)
            assert n == sz * (sz - 1) and fails == 0


def test_criterion_06_two_graph_degrees():
    with criterion(6, "regular degrees of the symplectic two-graphs", 30):
        got = []
        for m, sign, form in _two_graph_forms():
            d = tg.regular_degree(tg.build_symplectic_two_graph(form))
            assert d == 2 ** (2 * m - 2) - sign * 2 ** (m - 1) - 2
            got.append(d)
        assert got == [0, 4, 10, 18]


def test_criterion_07_descendants():
    with criterion(7, "descendants are Gamma(O) of opposite sign plus an isolated vertex"):
        for m, sign, form in _two_graph_forms():
            ok, d = verify.check_descendant(form)
            assert ok, (m, sign, d)


def test_criterion_08_main_theorem():
    with criterion(8, "main theorem at m = 1, 2 (two-graph equality and switching certificate)", 60):
        for m in (1, 2):
            for sign in (1, -1):
                inst = verify.theorem_instance(m, sign)
                g1, g2 = inst.no_even, inst.no_odd
                assert g1.labels == g2.labels
                x = tg.build_symplectic_two_graph(inst.lifted)
                assert tg.associated_two_graph(g1) == x
                assert tg.associated_two_graph(g2) == x
                res = tg.switching_equivalence(g1, g2)
                assert res.equivalent and res.two_graphs_equal
                sets = tg.compute_switching_sets(inst.form)
                assert res.switching_set in (sets.a, sets.b)
                assert tg.seidel_switch(g1, res.switching_set) == g2
                size = 2 ** (4 * m - 2) - sign * 2 ** (2 * m - 2)
                deg = 2 ** (4 * m - 3) - sign * 2 ** (2 * m - 2) - 1
                assert len(sets.a) == len(sets.b) == size
                for g in (g1, g2):
                    for z in (sets.a, sets.b):
                        assert tg.induced_degree(g, z) == deg


def test_criterion_09_m3_certificate():
    with criterion(9, "main theorem part (iii) at m = 3 via the certificate route", 60):
        for sign, v in ((1, 2016), (-1, 2080)):
            inst = verify.theorem_instance(3, sign)
            g1, g2 = inst.no_even, inst.no_odd
            assert g1.order == v
            with pytest.raises(ResourceError):
                tg.associated_two_graph(g1)
            res = tg.switching_equivalence(g1, g2, cross_check_limit=0)
            assert res.equivalent and res.two_graphs_equal is None
            assert tg.seidel_switch(g1, res.switching_set) == g2
            sets = tg.compute_switching_sets(inst.form)
            assert res.switching_set in (sets.a, sets.b)
            assert len(res.switching_set) == 2**10 - sign * 2**4


def _exports():
    for family, m, q in CRITERION_1:
        for sign in (1, -1):
            yield cons.build_family(family, m, q, sign, check=False)
    yield cons.build_family("NO-odd-W", 2, 4, 1, check=False)
    yield cons.build_sigma(2)
    for m, sign, form in _two_graph_forms():
        x = tg.build_symplectic_two_graph(form)
        yield tg.descendant(x, x.labels[0])


def test_criterion_10_property_suites():
    with criterion(10, "two-graph axiom, descendant round-trip, switching invariance (200 cases), graph6 round-trips"):
        rng = np.random.default_rng(20240607)
        failures = 0
        for _ in range(200):
            v = int(rng.integers(4, 65))
            a = np.triu(rng.random((v, v)) < rng.uniform(0.1, 0.9), 1)
            g = LabeledGraph(list(range(v)), a | a.T)
            y = np.flatnonzero(rng.random(v) < 0.5).tolist()
            t = tg.associated_two_graph(g)
            ok = tg.check_two_graph_axiom(t)
            ok &= tg.associated_two_graph(tg.descendant(t, int(rng.integers(v)))) == t
            ok &= tg.associated_two_graph(tg.seidel_switch(g, y)) == t
            ok &= graph6_decode(graph6_encode(g)) == g
            failures += not ok
        for g in _exports():
            failures += graph6_decode(graph6_encode(g), g.labels) != g
        assert failures == 0


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                pass
    print("\n".join(RESULTS))

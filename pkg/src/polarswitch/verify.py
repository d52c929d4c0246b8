"""Check suites behind ``polarswitch verify``.

Each suite appends :class:`Check` records to a :class:`Report`; a check
carries the expected and the computed value and passes when they agree.
"""

from __future__ import annotations

import itertools
import json
import time
from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from . import constructions as cons
from . import symplectic as sym
from . import twographs as tg
from .errors import ResourceError, UsageError
from .field import FieldSpec
from .forms import (
    BilinearSpace,
    QuadraticForm,
    elliptic_form,
    forms_tangent,
    hyperbolic_form,
    standard_form,
    trace_lift,
)
from .graph import LabeledGraph, SrgParams, add_isolated_vertex, check_iso_map, expected_params, srg_params

SCHEMA_VERSION = "1"
SCOPES = ("families", "orbits", "appendix", "theorem")


def _jsonable(x: Any) -> Any:
    if isinstance(x, SrgParams):
        return list(x.as_tuple())
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, Enum):
        return x.value
    return x


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": bool(self.passed),
        }


@dataclass
class Report:
    command: str
    parameters: dict
    checks: list[Check] = field(default_factory=list)
    wall_time_ms: int = 0
    error: str | None = None

    def add(self, name: str, expected: Any, computed: Any, passed: bool | None = None) -> bool:
        ok = (expected == computed) if passed is None else bool(passed)
        self.checks.append(Check(name, expected, computed, ok))
        return ok

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if self.error is not None:
            return "resource"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": _jsonable(self.parameters),
            "checks": [c.to_dict() for c in self.checks],
            "status": self.status,
            "wall_time_ms": int(self.wall_time_ms),
        }
        if self.error is not None:
            d["error"] = self.error
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=10)
        lines = [f"{self.command}  {json.dumps(_jsonable(self.parameters), sort_keys=True)}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {mark}  {c.name:<{width}}  expected={_short(c.expected)}  computed={_short(c.computed)}")
        if self.error:
            lines.append(f"  STOP  {self.error}")
        lines.append(f"status: {self.status}  ({len(self.checks)} checks, {self.wall_time_ms} ms)")
        return "\n".join(lines) + "\n"


def _short(x: Any) -> str:
    s = json.dumps(_jsonable(x))
    return s if len(s) <= 60 else s[:57] + "..."


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "polarswitch verification report",
    "type": "object",
    "required": ["schema_version", "command", "parameters", "checks", "status", "wall_time_ms"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "expected", "computed", "pass"],
                "properties": {
                    "name": {"type": "string"},
                    "expected": {},
                    "computed": {},
                    "pass": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "status": {"enum": ["pass", "fail", "resource"]},
        "wall_time_ms": {"type": "integer", "minimum": 0},
        "error": {"type": "string"},
    },
    "additionalProperties": False,
}


def sign_str(s: int) -> str:
    return "+" if s == 1 else "-"


# -- families ----------------------------------------------------------------

MAX_POINTS = 1 << 12


def _family_check(report: Report, family: str, m: int, q: int, sign: int) -> LabeledGraph:
    g = cons.build_family(family, m, q, sign, check=False)
    report.add(
        f"{family} m={m} q={q} sign={sign_str(sign)} params",
        expected_params("NO-odd" if family == "NO-odd-W" else family, m, q, sign),
        srg_params(g),
    )
    return g


def check_families(report: Report, m_values: Iterable[int], q_values: Iterable[int]) -> None:
    """Parameter formulas, tau_d isomorphisms, two-graph degrees and descendants."""
    m_values = sorted(set(m_values))
    q_values = sorted(set(q_values))
    for q in q_values:
        FieldSpec.of_order(q)
        for m in m_values:
            if q ** (2 * m) > MAX_POINTS:
                continue
            for sign in (1, -1):
                if q == 2 and m >= 2:
                    _family_check(report, "NO-even", m, 2, sign)
                    _family_check(report, "GammaO", m, 2, sign)
                if q == 2 and m < 2:
                    continue
                g = _family_check(report, "NO-odd", m, q, sign)
                # tau_d: x -> x + d maps the form-based graph onto the W-graph
                form = standard_form(q, m, -sign)
                w = cons.build_no_odd_w(sign, m, q, check=False)
                d = cons.no_odd_translation(form)
                report.add(
                    f"NO-odd m={m} q={q} sign={sign_str(sign)} tau_d onto W-graph",
                    True,
                    check_iso_map(g, w, lambda x: x ^ d),
                )
    if 2 in q_values:
        for m in m_values:
            if m < 2 or 4**m > MAX_POINTS:
                continue
            check_two_graph_family(report, m)


def check_two_graph_family(report: Report, m: int) -> None:
    for sign in (1, -1):
        form = cons.standard_binary_form(m, sign)
        x = tg.build_symplectic_two_graph(form)
        tag = f"X{sign_str(sign)}_{2 * m}"
        report.add(f"{tag} degree", tg.expected_two_graph_degree(m, sign), tg.regular_degree(x))
        report.add(f"{tag} equals two-graph of NO-even", True, tg.associated_two_graph(cons.build_no_even(form, check=False)) == x)
        if m == 2:
            report.add(f"{tag} preserved by the H2 complement of Sp(4,2)", True, h2_preserves(form, x))
        ok, d = check_descendant(form, x)
        report.add(f"{tag} descendant at {d} ~ Gamma(O{sign_str(-sign)}({2 * m},2)) + isolated vertex", True, ok)


def h2_preserves(form: QuadraticForm, x: tg.TwoGraph) -> bool:
    """Every ``u -> uA + b_A`` conjugated by the translation onto ``{theta_0 = 1}`` or ``{theta_0 = 0}``.

    ``{Theta = 1}`` for ``Theta = theta_e`` is ``e + {theta_0 = theta_0(e) + 1}``, an orbit of
    H2 moved by ``e``; so ``x -> (x + e)A + b_A + e`` must preserve the two-graph.
    """
    e = form.param
    group = sym.symplectic_group(form.space)
    return all(tg.is_automorphism(x, lambda u, f=f: f.apply(u ^ e) ^ e) for f in sym.complement_h2(group))


def check_descendant(form: QuadraticForm, x: tg.TwoGraph | None = None) -> tuple[bool, int]:
    """Descendant at the smallest vertex ``d`` vs Gamma(O) of ``Theta + <d,.>`` plus ``0``, under ``x -> x + d``."""
    if x is None:
        x = tg.build_symplectic_two_graph(form)
    d = min(x.labels)
    desc = tg.descendant(x, d)
    shifted = form.shifted(d)
    if shifted.form_type() != -form.form_type():
        return False, d
    target = add_isolated_vertex(cons.build_gamma_o(shifted), 0)
    return check_iso_map(desc, target, lambda a: a ^ d), d


# -- orbits (Sp on forms, complements) -------------------------------------------


DEFAULT_ORBIT_CASES = ((2, 1), (2, 2), (4, 1))


def check_orbits(report: Report, cases: Iterable[tuple[int, int]], cap: int) -> None:
    for q, m in cases:
        sp = BilinearSpace.standard(q, m)
        tag = f"q={q} m={m}"
        order = sym.group_order("Sp", m, q)
        if order > cap:
            raise ResourceError(f"|Sp({2 * m},{q})| = {order} exceeds cap {cap}")
        group = sym.generate_group(sym.all_transvections(sp), cap)
        report.add(f"{tag} |<transvections>| = |Sp|", order, len(group))
        orbs = sym.orbits_on_forms(group)
        half = (q ** (2 * m) + q**m) // 2, (q ** (2 * m) - q**m) // 2
        report.add(f"{tag} Omega orbit sizes", list(half), [len(o) for o in orbs])
        tr = sp.theta_zero.trace_values
        fibres = [sorted(np.flatnonzero(tr == 0).tolist()), sorted(np.flatnonzero(tr == 1).tolist())]
        report.add(f"{tag} Omega orbits are the trace fibres", True, orbs == fibres)

        if q == 2:
            perms = [sym.form_action_perm(A) for A in group]
            for sign, fib in ((1, fibres[0]), (-1, fibres[1])):
                if len(fib) < 2:
                    continue
                report.add(f"{tag} Sp 2-transitive on Omega{sign_str(sign)}", True, sym.check_2transitivity(perms, fib))
            for sign in (1, -1):
                form = hyperbolic_form(sp) if sign == 1 else elliptic_form(sp)
                st = sym.stabilizer_of_form(form.param, group)
                report.add(
                    f"{tag} |stabilizer of theta{sign_str(sign)}| = |O{sign_str(sign)}|",
                    sym.group_order("O+" if sign == 1 else "O-", m, q),
                    st.order,
                )
                levels = sorted(
                    [int(np.count_nonzero(form.values[1:] == c)) for c in range(q) if np.any(form.values[1:] == c)],
                    reverse=True,
                )
                report.add(f"{tag} stabilizer{sign_str(sign)} vector orbits = level sets", levels, sorted((len(o) for o in st.vector_orbits), reverse=True))
                own = fibres[0] if sign == 1 else fibres[1]
                other = fibres[1] if sign == 1 else fibres[0]
                want = sorted([o for o in ([form.param], sorted(set(own) - {form.param}), other) if o], key=lambda o: (-len(o), o))
                report.add(f"{tag} stabilizer{sign_str(sign)} form orbits", True, st.form_orbits == want)

        h2 = sym.complement_h2(group)
        report.add(f"{tag} H2 is a subgroup", True, sym.is_subgroup(h2))
        report.add(f"{tag} H2 meets translations trivially", 1, sum(f.is_translation for f in h2))
        report.add(f"{tag} H2 only translation is identity", True, all(f.shift == 0 for f in h2 if f.is_translation))
        h2_orbs = sym.orbits([f.perm for f in h2], sp.points)
        report.add(f"{tag} H2 orbit lengths", list(half), [len(o) for o in h2_orbs])
        report.add(f"{tag} H2 orbits are the trace fibres", True, h2_orbs == fibres)
        h1_orbs = sym.orbits([f.perm for f in sym.complement_h1(group)], sp.points)
        report.add(f"{tag} H1 orbit lengths", [q ** (2 * m) - 1, 1], [len(o) for o in h1_orbs])


# -- transvection identities ------------------------------------------------


def _sample(space: BilinearSpace, rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.integers(0, space.size, size=n)


def transvection_identities(space: BilinearSpace, exhaustive: bool, samples: int = 10_000, seed: int = 0) -> dict[str, tuple[int, int]]:
    """Evaluate both sides of the five transvection identities.

    Returns ``{name: (checked, failures)}``.  The left sides go through
    matrices and value tables, the right sides through field arithmetic.
    """
    F = space.field
    mul, sq, inv = F.mul, F.square, F.inv
    t0 = space.theta_zero
    rng = np.random.default_rng(seed)
    pts = list(range(space.size))
    gammas = list(range(1, F.size))
    if exhaustive:
        triples = list(itertools.product(pts, pts, pts))
    else:
        triples = list(zip(*(_sample(space, rng, samples).tolist() for _ in range(3))))
    stats = {k: [0, 0] for k in ("theta1", "theta2", "theta3", "theta4", "theta5")}
    us = space.points
    pair_all = {}

    def pairing_row(x: int) -> np.ndarray:
        if x not in pair_all:
            pair_all[x] = space.pairing(np.array([x]), us)[0]
        return pair_all[x]

    sqt = F.square_table
    mt = F.mul_table
    theta_cache: dict[int, QuadraticForm] = {}

    def theta(a: int) -> QuadraticForm:
        if a not in theta_cache:
            theta_cache[a] = QuadraticForm.theta(space, a)
        return theta_cache[a]

    def tally(name: str, ok) -> None:
        ok = np.asarray(ok)
        stats[name][0] += ok.size
        stats[name][1] += int(ok.size - np.count_nonzero(ok))

    for idx, (a, b, c) in enumerate(triples):
        ta = theta(a)
        # (theta1) theta_a^{T_c}(u) = theta_a(u) + <c,u>^2 (theta_a(c) + 1)
        if exhaustive or idx < samples:
            T = sym.transvection(space, c)
            lhs = sym.transformed_values(ta, T)
            rhs = ta.values ^ mt[sqt[pairing_row(c)], ta.evaluate(c) ^ 1]
            tally("theta1", lhs == rhs)
        # (theta2) theta_b(u) = theta_a(u) + <a+b,u>^2
        tally("theta2", theta(b).values == ta.values ^ sqt[pairing_row(a ^ b)])
        # (theta3) theta_a(a+b) = theta_0(a) + theta_0(b) + <a,b>^2 + <a,b>
        ab = space.symp(a, b)
        tally("theta3", ta.evaluate(a ^ b) == t0.evaluate(a) ^ t0.evaluate(b) ^ sq(ab) ^ ab)
        gamma_list = gammas if exhaustive else [int(rng.integers(1, F.size))]
        for g in gamma_list:
            g2, g4 = sq(g), sq(sq(g))
            coef = 1 ^ g2 ^ mul(g4, ta.evaluate(a ^ b))
            # (theta4) theta_a^{T_{g(a+b)}}(u) = theta_b(u) + coef <a+b,u>^2
            if exhaustive or idx < samples:
                T = sym.transvection(space, space.scale(g, a ^ b))
                lhs = sym.transformed_values(ta, T)
                rhs = theta(b).values ^ mt[coef, sqt[pairing_row(a ^ b)]]
                tally("theta4", lhs == rhs)
            # (theta5) coef = g^4 (g^-4 + <a,b>^2 + g^-2 + <a,b> + theta_0(a) + theta_0(b))
            gi = inv(g)
            inner = sq(sq(gi)) ^ sq(ab) ^ sq(gi) ^ ab ^ t0.evaluate(a) ^ t0.evaluate(b)
            tally("theta5", coef == mul(g4, inner))
    return {k: (v[0], v[1]) for k, v in stats.items()}


def equivalence_solver_check(space: BilinearSpace) -> tuple[int, int]:
    """Run ``find_transvection_equiv`` on every ordered pair; returns (pairs, failures)."""
    tr = space.theta_zero.trace_values
    fails = n = 0
    for a in range(space.size):
        for b in range(space.size):
            if a == b:
                continue
            n += 1
            g = sym.find_transvection_equiv(space, a, b)
            same = tr[a] == tr[b]
            if (g is not None) != same:
                fails += 1
                continue
            if g is not None:
                T = sym.transvection(space, space.scale(g, a ^ b))
                if sym.act_on_form(a, T) != b:
                    fails += 1
    return n, fails


def check_appendix(report: Report, cap: int, samples: int = 10_000) -> None:
    for (q, m), exhaustive in (((2, 2), True), ((4, 1), False), ((4, 2), False)):
        sp = BilinearSpace.standard(q, m)
        stats = transvection_identities(sp, exhaustive, samples)
        mode = "exhaustive" if exhaustive else f"{samples} samples"
        for name, (n, fails) in stats.items():
            report.add(f"q={q} m={m} {name} ({mode}, {n} evaluations)", 0, fails)
    for q, m in ((2, 2), (4, 1)):
        sp = BilinearSpace.standard(q, m)
        n, fails = equivalence_solver_check(sp)
        report.add(f"q={q} m={m} transvection-equivalence solver ({n} pairs)", 0, fails)

    for fam, m, q, want in (("Sp", 1, 2, 6), ("Sp", 2, 2, 720), ("O+", 2, 2, 72), ("O-", 2, 2, 120), ("Sp", 1, 4, 60)):
        report.add(f"|{fam}({2 * m},{q})| formula", want, sym.group_order(fam, m, q))
    for sign, fam in ((1, "O+"), (-1, "O-")):
        idx = sym.group_order("Sp", 2, 2) // sym.group_order(fam, 2, 2)
        report.add(f"|Sp(4,2):{fam}(4,2)| = q^m(q^m{sign_str(sign)}1)/2", 4 * (4 + sign) // 2, idx)

    sp = BilinearSpace.standard(2, 2)
    group = sym.generate_group(sym.all_transvections(sp), cap)
    bad = 0
    for A in group:
        for a in range(1, sp.size):
            lhs = A.inverse() @ sym.transvection(sp, a) @ A
            if lhs != sym.transvection(sp, A.apply(a)):
                bad += 1
    report.add("q=2 m=2 conjugation A^-1 T_a A = T_{aA}", 0, bad)
    fixed_bad = 0
    for a in range(sp.size):
        T = sym.transvection(sp, a)
        for u in range(sp.size):
            if (T.apply(u) == u) != (sp.symp(u, a) == 0):
                fixed_bad += 1
        if not (T @ T).is_identity:
            fixed_bad += 1
    report.add("q=2 m=2 T_a involution, fixed points = a-perp", 0, fixed_bad)
    report.add("q=2 m=1 GL-equivalence = Sp-equivalence", True, gl_vs_sp_binary_plane())
    tangent_bad = 0
    t0 = sp.theta_zero
    for a in range(sp.size):
        for b in range(sp.size):
            if a != b and forms_tangent(sp, a, b) != (t0.evaluate(a) == t0.evaluate(b)):
                tangent_bad += 1
    report.add("q=2 m=2 tangency iff equal theta_0", 0, tangent_bad)


def gl_vs_sp_binary_plane() -> bool:
    """All invertible 2x2 matrices over GF(2): any that maps one theta_a to another is symplectic,
    and the GL-classes of forms coincide with the Sp-classes."""
    sp = BilinearSpace.standard(2, 1)
    mats = []
    for bits in range(16):
        rows = [bits & 3, bits >> 2]
        if rows[0] and rows[1] and rows[0] != rows[1]:
            mats.append(rows)
    if len(mats) != 6:
        return False
    pts = sp.points
    tables = {a: QuadraticForm.theta(sp, a).values for a in range(sp.size)}
    gl_classes: dict[int, set[int]] = {a: {a} for a in tables}
    for rows in mats:
        img = sp.linear_image(rows)
        inv = np.empty_like(img)
        inv[img] = pts
        symplectic = all(sp.symp(rows[i], rows[j]) == sp.gram[i][j] for i in range(2) for j in range(2))
        for a, t in tables.items():
            moved = t[inv]
            for b, s in tables.items():
                if np.array_equal(moved, s):
                    if not symplectic:
                        return False
                    gl_classes[a].add(b)
    group = sym.symplectic_group(sp)
    sp_orbits = sym.orbits_on_forms(group)
    return _closure(gl_classes) == [tuple(o) for o in sp_orbits]


def _closure(classes: dict[int, set[int]]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for a in sorted(classes):
        if a in seen:
            continue
        comp, stack = set(), [a]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(classes[x])
        seen |= comp
        out.append(tuple(sorted(comp)))
    return sorted(out, key=lambda o: (-len(o), o))


# -- main theorem -----------------------------------------------------------------


MAX_THEOREM_M = 3


@dataclass
class TheoremInstance:
    m: int
    sign: int
    form: QuadraticForm
    lifted: QuadraticForm
    no_even: LabeledGraph
    no_odd: LabeledGraph


def theorem_instance(m: int, sign: int, check: bool = True) -> TheoremInstance:
    """``NO^{sign}(4m,2)`` and ``NO^{-sign}(2m+1,4)`` on the shared labels ``{Tr Theta = 1}``."""
    form = standard_form(4, m, sign)
    _, star = trace_lift(form)
    return TheoremInstance(m, sign, form, star, cons.build_no_even(star, check), cons.build_no_odd(form, check))


def check_theorem(report: Report, m_values: Iterable[int], max_two_graph: int = tg.MAX_MATERIALIZED) -> None:
    for m in sorted(set(m_values)):
        if m < 1 or 4 ** (2 * m) > 1 << 16:
            raise UsageError(f"theorem instance m={m} is outside the supported range 1..4")
        if m > MAX_THEOREM_M:
            raise ResourceError(f"m={m} needs dense adjacency on about {2 ** (4 * m - 1)} vertices; limit is m={MAX_THEOREM_M}")
        for sign in (1, -1):
            inst = theorem_instance(m, sign, check=False)
            check_theorem_instance(report, inst, max_two_graph)


def check_theorem_instance(report: Report, inst: TheoremInstance, max_two_graph: int = tg.MAX_MATERIALIZED) -> None:
    m, sign = inst.m, inst.sign
    s = sign_str(sign)
    tag = f"m={m} NO{s}({4 * m},2) / NO{sign_str(-sign)}({2 * m + 1},4)"
    g1, g2 = inst.no_even, inst.no_odd
    p1, p2 = srg_params(g1), srg_params(g2)
    e1, e2 = expected_params("NO-even", 2 * m, 2, sign), expected_params("NO-odd", m, 4, -sign)
    report.add(f"{tag} NO-even params", e1, p1)
    report.add(f"{tag} NO-odd params", e2, p2)
    report.add(f"{tag} lifted form type", sign, inst.lifted.form_type())
    report.add(f"{tag} shared labels", True, g1.labels == g2.labels)
    v = g1.order
    if v <= max_two_graph:
        x = tg.build_symplectic_two_graph(inst.lifted)
        report.add(f"{tag} (i) Tau(NO-even) = X{s}_{4 * m}", True, tg.associated_two_graph(g1) == x)
        report.add(f"{tag} (ii) Tau(NO-odd) = X{s}_{4 * m}", True, tg.associated_two_graph(g2) == x)
        report.add(f"{tag} X{s}_{4 * m} degree", tg.expected_two_graph_degree(2 * m, sign), tg.regular_degree(x))
    res = tg.switching_equivalence(g1, g2, cross_check_limit=200 if v <= max_two_graph else 0)
    report.add(f"{tag} (iii) switching certificate found", True, res.equivalent)
    sets = tg.compute_switching_sets(inst.form)
    if res.equivalent:
        y = res.switching_set
        report.add(f"{tag} (iii) switch(NO-even, Y) = NO-odd", True, tg.seidel_switch(g1, y) == g2)
        report.add(f"{tag} (iii) Y in {{A, B}}", True, y in (sets.a, sets.b))
    if res.two_graphs_equal is not None:
        report.add(f"{tag} certificate agrees with two-graph comparison", True, res.two_graphs_equal)
    size = 2 ** (4 * m - 2) - sign * 2 ** (2 * m - 2)
    deg = 2 ** (4 * m - 3) - sign * 2 ** (2 * m - 2) - 1
    report.add(f"{tag} |A|, |B|", [size, size], [len(sets.a), len(sets.b)])
    report.add(
        f"{tag} induced degrees A,B in both graphs",
        [deg] * 4,
        [tg.induced_degree(g, z) for g in (g1, g2) for z in (sets.a, sets.b)],
    )
    report.add(f"{tag} switch(NO-even, A) = NO-odd", True, tg.seidel_switch(g1, sets.a) == g2)
    d_expected = [deg, deg]
    d_formula = [e1.k - e1.mu, e2.k - e2.mu]
    report.add(f"{tag} d = k - mu = k' - mu'", d_expected, d_formula)


def run(scope: str, m_values: list[int] | None = None, q_values: list[int] | None = None, cap: int = sym.DEFAULT_CAP) -> Report:
    """Run one verification scope and time it."""
    if scope not in SCOPES:
        raise UsageError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    params: dict[str, Any] = {"scope": scope, "cap": cap}
    if m_values is not None:
        params["m"] = sorted(set(m_values))
    if q_values is not None:
        params["q"] = sorted(set(q_values))
    report = Report("verify", params)
    start = time.perf_counter()
    try:
        if scope == "families":
            check_families(report, m_values or [1, 2, 3, 4], q_values or [2, 4])
        elif scope == "orbits":
            if m_values is None and q_values is None:
                cases = DEFAULT_ORBIT_CASES
            else:
                cases = [(q, m) for q in (q_values or [2, 4]) for m in (m_values or [1, 2])]
            check_orbits(report, cases, cap)
        elif scope == "appendix":
            check_appendix(report, cap)
        elif scope == "theorem":
            check_theorem(report, m_values or [1, 2])
    except ResourceError as exc:
        report.error = str(exc)
    report.wall_time_ms = int(round((time.perf_counter() - start) * 1000))
    return report


__all__ = [
    "Check",
    "Report",
    "REPORT_SCHEMA",
    "SCHEMA_VERSION",
    "SCOPES",
    "run",
    "theorem_instance",
    "check_theorem_instance",
    "check_descendant",
    "transvection_identities",
    "equivalence_solver_check",
    "gl_vs_sp_binary_plane",
]

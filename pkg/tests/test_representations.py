from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import thm23_suite
from hopfrep.catalog import make_eq2, make_group_algebra
from hopfrep.representations import (
    LEFT,
    RIGHT,
    Carrier,
    canonical_phi,
    canonical_psi,
    comodule_check,
    example_262,
    finite_coaction,
    hopf_module_check,
    hopf_rep_check_full,
    hopf_rep_check_type1,
    hopf_rep_check_type2,
    matrix_action,
    module_check,
    regular_action,
    regular_coaction,
    thm23_equivalence_check,
    trivial_action,
    trivial_coaction,
)

SUITE = thm23_suite()
C3 = make_group_algebra(3)
E = make_eq2()


@pytest.mark.parametrize("label,act,co,d,expected", SUITE, ids=[s[0] for s in SUITE])
def test_three_conditions_agree(label, act, co, d, expected):
    v = thm23_equivalence_check(act, co, d)
    assert v.agree, v.to_report().render()
    assert v.verdicts[0] is expected


def test_suite_is_large_and_mixed():
    assert len(SUITE) >= 20
    assert {s[4] for s in SUITE} == {True, False}
    assert {s[1].hopf.name for s in SUITE} >= {"C2", "C3", "Eq2"}


def _as_action(matrix, labels):
    n = len(labels)
    return {"g": {labels[j]: {labels[i]: matrix[i][j] for i in range(n) if matrix[i][j] != 0} for j in range(n)}}


unipotent = st.lists(st.integers(-3, 3), min_size=3, max_size=3)
degrees = st.lists(st.integers(0, 2), min_size=3, max_size=3)


@settings(max_examples=25, deadline=None)
@given(unipotent, degrees)
def test_random_c3_modules(entries, grading):
    x, y, z = entries
    P = sympy.Matrix([[1, x, y], [0, 1, z], [0, 0, 1]])
    cycle = sympy.Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    rho = P * cycle * P.inv()
    labels = ["e0", "e1", "e2"]
    carrier = Carrier.finite("V", labels)
    act = matrix_action(C3, carrier, _as_action([[Fraction(int(v.p), int(v.q)) for v in rho.row(i)] for i in range(3)], labels))
    assert module_check(act, 3).passed
    co = finite_coaction(C3, carrier, {lab: {(("g",) * k, lab): 1} for lab, k in zip(labels, grading)})
    assert comodule_check(co, 3).passed
    v = thm23_equivalence_check(act, co, 3)
    assert v.agree


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(0, 2), min_size=2, max_size=2))
def test_random_c3_pairs_even_when_not_modules(entries, grading):
    labels = ["u", "v"]
    carrier = Carrier.finite("V", labels)
    a, b, c, d = entries
    act = matrix_action(C3, carrier, {"g": {"u": {"u": a, "v": c}, "v": {"u": b, "v": d}}})
    co = finite_coaction(C3, carrier, {lab: {(("g",) * k, lab): 1} for lab, k in zip(labels, grading)})
    assert thm23_equivalence_check(act, co, 3).agree


def test_module_failures_have_witnesses():
    v = Carrier.finite("V", ["v"])
    double = matrix_action(C3, v, {"g": {"v": {"v": 2}}})
    report = module_check(double, 3)
    assert not report.passed
    assert report.first_failure().witness

    bad_co = finite_coaction(C3, v, {"v": {(("g",), "v"): 2}})
    assert not comodule_check(bad_co, 3).passed


@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_regular_structures(side):
    act, co = regular_action(E, side), regular_coaction(E, side)
    assert module_check(act, 2).passed and comodule_check(co, 2).passed
    assert hopf_module_check(act, co, 2).passed


@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_canonical_structures_are_valid(side):
    act, co = regular_action(C3, side), regular_coaction(C3, side)
    assert module_check(canonical_phi(act), 3).passed
    assert comodule_check(canonical_psi(co), 3).passed
    full = hopf_rep_check_full(act, co, canonical_phi(act), canonical_psi(co), 3)
    assert full.passed, full.first_failure()


def test_trivial_pair_is_a_module_and_comodule_but_not_hopf():
    v = Carrier.finite("V", ["v"])
    act, co = trivial_action(E, v), trivial_coaction(E, v)
    assert module_check(act, 2).passed and comodule_check(co, 2).passed
    failure = hopf_module_check(act, co, 2).first_failure()
    assert failure.witness == "z (x) v"
    assert not hopf_rep_check_type1(act, co, canonical_phi(act), 2).passed


@pytest.mark.parametrize("hd", [make_group_algebra(2), make_group_algebra(3), make_eq2()], ids=str)
def test_example_262(hd):
    carrier, alpha, beta, phi = example_262(hd)
    d = 2
    assert alpha.side == RIGHT
    assert module_check(alpha, d).passed and comodule_check(beta, d).passed
    assert not hopf_module_check(alpha, beta, d).passed
    assert hopf_rep_check_type1(alpha, beta, phi, d).passed
    # the canonical phi does not work, which is the point
    assert not hopf_rep_check_type1(alpha, beta, canonical_phi(alpha), d).passed


def test_type2_with_canonical_psi_matches_hopf_module():
    act, co = regular_action(C3), regular_coaction(C3)
    assert hopf_rep_check_type2(act, co, canonical_psi(co), 3).passed
    _, alpha, beta, _ = example_262(C3)
    assert not hopf_rep_check_type2(alpha, beta, canonical_psi(beta), 3).passed

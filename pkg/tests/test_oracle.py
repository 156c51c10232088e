from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfrep.catalog import make_ak, make_cyclic_quotient, make_eq2, make_group_algebra, make_trivial_eta
from hopfrep.errors import EvaluationMismatch
from hopfrep.hopf import axioms_check
from hopfrep.induction import induced_carrier, induced_rep_check
from hopfrep.oracle import (
    DenseHopf,
    cyclic_quotient_matrix,
    dense_axioms_check,
    dense_canonical_phi,
    dense_canonical_psi,
    dense_example_262,
    dense_from_map,
    dense_full_check,
    dense_hopf_module_check,
    dense_induced,
    dense_matrix_module,
    dense_regular,
    dense_type1_check,
    eye,
    kron,
    mat,
    oracle_crosscheck,
    permutation,
    trivial_eta_matrix,
)
from hopfrep.report import Finding, Report
from hopfrep.representations import LEFT, RIGHT, example_262, hopf_module_check, hopf_rep_check_type1


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_group_law_matches_symbolic_instance(n):
    dense = DenseHopf.group_algebra(n)
    evaluated = DenseHopf.from_symbolic(make_group_algebra(n))
    assert dense.labels == evaluated.labels
    for name in ("m", "u", "delta", "eps", "S"):
        assert (getattr(dense, name) == getattr(evaluated, name)).all(), name


@pytest.mark.parametrize("n", [2, 3, 5])
def test_dense_axioms(n):
    report = dense_axioms_check(DenseHopf.group_algebra(n))
    assert report.passed, report.first_failure()


def test_corrupted_dense_coproduct():
    H = DenseHopf.group_algebra(3)
    delta = H.delta.copy()
    delta[:, 1] = 0
    delta[1 * 3 + 0, 1] = 1  # g -> g (x) 1
    bad = DenseHopf("C3-bad", H.labels, H.m, H.u, delta, H.eps, H.S)
    report = dense_axioms_check(bad)
    assert not report.passed
    assert not report.get("antipode-left").passed


def test_from_symbolic_rejects_infinite():
    with pytest.raises(ValueError):
        DenseHopf.from_symbolic(make_ak(), max_degree=4)


@settings(max_examples=25, deadline=None)
@given(st.permutations([0, 1, 2]), st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_axis_permutation_matches_explicit_matrix(perm, entries):
    dims = (2, 3, 4)
    x = np.array(entries, dtype=object).reshape(24, 1)
    out = permutation(dims, perm)(x)
    tensor = x.reshape(dims)
    assert (out.reshape(-1) == np.transpose(tensor, perm).reshape(-1)).all()


def test_kron_of_ops_is_kronecker_product():
    a = np.array([[1, 2], [0, 1]], dtype=object)
    b = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 3]], dtype=object)
    assert (kron(mat(a), mat(b)).matrix() == np.kron(a, b)).all()


@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_dense_regular_is_full_hopf_representation(side):
    H = DenseHopf.group_algebra(3)
    mod, co = dense_regular(H, side)
    report = dense_full_check(mod, co, dense_canonical_phi(mod), dense_canonical_psi(co))
    assert report.passed, report.first_failure()


def test_dense_sign_module_is_not_hopf():
    H = DenseHopf.group_algebra(2)
    sign = dense_matrix_module(H, ["v"], [np.array([[-1]], dtype=object)])
    _, co = dense_regular(H)
    trivial = type(co)(H, sign.space, LEFT, mat(np.kron(H.u, eye(1))))
    assert not dense_hopf_module_check(sign, trivial).passed


@pytest.mark.parametrize("n", [2, 3])
def test_example_262_witness_agrees(n):
    H = DenseHopf.group_algebra(n)
    mod, co, phi = dense_example_262(H)
    dense_module = dense_hopf_module_check(mod, co)
    assert dense_type1_check(mod, co, phi).passed
    _, alpha, beta, sym_phi = example_262(make_group_algebra(n))
    sym_module = hopf_module_check(alpha, beta, 2 * n)
    assert hopf_rep_check_type1(alpha, beta, sym_phi, n).passed
    assert not dense_module.passed and not sym_module.passed
    assert dense_module.first_failure().witness == sym_module.first_failure().witness
    oracle_crosscheck(sym_module, dense_module)


def test_symbolic_axioms_agree_at_other_points():
    hd = make_group_algebra(4)
    for q0 in (Fraction(2), Fraction(-5, 3)):
        agreement = oracle_crosscheck(axioms_check(hd, 12), dense_axioms_check(DenseHopf.from_symbolic(hd, q0)), q0)
        assert agreement.passed and agreement.findings


def test_dense_from_map_reproduces_structure_matrices():
    hd = make_group_algebra(3)
    H = DenseHopf.group_algebra(3)
    assert (dense_from_map(hd.mult_map()).matrix() == H.m).all()
    assert (dense_from_map(hd.delta_map()).matrix() == H.delta).all()


@pytest.mark.parametrize("n,m", [(4, 2), (6, 3), (6, 2)])
def test_induction_dimensions_agree(n, m):
    qs = make_cyclic_quotient(n, m)
    bm = make_trivial_eta(qs.B)
    H, B = DenseHopf.group_algebra(n), DenseHopf.group_algebra(m)
    dense = dense_induced(H, B, cyclic_quotient_matrix(n, m), trivial_eta_matrix(B), ["c"])
    assert dense.dimension == induced_carrier(qs, bm, n).dimension == n // m
    symbolic = induced_rep_check(qs, bm, n)
    assert oracle_crosscheck(symbolic, dense.check(), compare_witness=False).passed


def test_crosscheck_raises_on_disagreement():
    sym = Report("s", [Finding("x", "-", True, 1)])
    with pytest.raises(EvaluationMismatch):
        oracle_crosscheck(sym, Report("d", [Finding("x", "-", False, 1, "w")]))
    with pytest.raises(EvaluationMismatch):
        oracle_crosscheck(sym, Report("d", [Finding("y", "-", True, 1)]))
    with pytest.raises(EvaluationMismatch):
        oracle_crosscheck(sym, Report("d", [Finding("x", "-", True, 1)]), extra=[("dim", 2, 3)])
    fail_s = Report("s", [Finding("x", "-", False, 1, "a")])
    with pytest.raises(EvaluationMismatch):
        oracle_crosscheck(fail_s, Report("d", [Finding("x", "-", False, 1, "b")]))
    assert oracle_crosscheck(fail_s, Report("d", [Finding("x", "-", False, 1, "b")]), compare_witness=False).passed


def test_eq2_has_no_dense_model():
    with pytest.raises(ValueError):
        DenseHopf.from_symbolic(make_eq2(), max_degree=3)

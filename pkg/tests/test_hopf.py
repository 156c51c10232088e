import pytest

from hopfrep.catalog import make_ak, make_eq2, make_group_algebra, two_tensor
from hopfrep.errors import AntipodeAbsent
from hopfrep.hopf import HopfAlgebra, antipode_check, axioms_check, bialgebra_check, coalgebra_check
from hopfrep.scalars import Q, as_scalar
from hopfrep.tensor import factorwise_product

E = make_eq2()
P = E.algebra


def el(*word):
    return P.normal_form({tuple(word): 1})


def test_coproduct_on_generators():
    assert E.coproduct(P.one()) == E.space2.unit(((), ()))
    assert E.coproduct(el("a")) == two_tensor(P, [(1, "a", "1"), (1, "z", "a")])
    assert E.coproduct(el("z")) == two_tensor(P, [(1, "z", "z")])


def test_coproduct_of_a_squared():
    expected = two_tensor(P, [(1, "a*a", "1"), (Q**-1 + 1, "z*a", "a"), (1, "z*z", "a*a")])
    assert E.coproduct(el("a", "a")) == expected
    # brute force: square Delta(a) factorwise in H (x) H
    da = E.coproduct(el("a"))
    assert factorwise_product(da, da) == expected


def test_counit_and_antipode_values():
    assert E.counit(P.one()) == as_scalar(1)
    assert E.counit(el("a")) == as_scalar(0)
    assert E.counit(el("z", "z") + el("a").scale(3)) == as_scalar(1)
    assert E.antipode(P.one()) == P.one()
    assert E.antipode(el("a")) == -el("zbar", "a")
    assert E.antipode(el("z", "a")) == -el("zbar", "zbar", "a").scale(Q)
    assert E.antipode(el("abar")) == -el("abar", "zbar")


@pytest.mark.parametrize("hd", [make_eq2(), make_group_algebra(3), make_group_algebra(4)], ids=str)
def test_axioms_pass(hd):
    report = axioms_check(hd, 3)
    assert report.passed, report.first_failure()


def test_translation_bialgebra():
    ak = make_ak()
    assert coalgebra_check(ak, 3).passed and bialgebra_check(ak, 3).passed


def test_corrupted_coproduct_breaks_the_antipode_law():
    delta = dict(E.coproduct_on_gens)
    delta["a"] = two_tensor(P, [(1, "a", "1")])
    bad = HopfAlgebra(P, delta, E.counit_on_gens, E.antipode_on_gens, name="Eq2-bad")
    assert coalgebra_check(bad, 3).get("coassociativity").passed
    report = antipode_check(bad, 3)
    failure = report.first_failure()
    assert failure.check == "antipode-left"
    assert failure.witness == "a"
    assert failure.lhs == "-zbar*a" and failure.rhs == "0"


def test_literal_abar_coproduct_is_not_an_algebra_map():
    # Delta(abar) = abar (x) 1 + zbar (x) abar does not commute with Delta(a)
    delta = dict(E.coproduct_on_gens)
    delta["abar"] = two_tensor(P, [(1, "abar", "1"), (1, "zbar", "abar")])
    bad = HopfAlgebra(P, delta, E.counit_on_gens, None, name="Eq2-literal")
    failure = bialgebra_check(bad, 2).get("coproduct-respects-relations")
    assert not failure.passed and failure.witness.startswith("abar*a")


def test_missing_antipode():
    bare = HopfAlgebra(P, E.coproduct_on_gens, E.counit_on_gens, None)
    assert not bare.has_antipode
    assert not antipode_check(bare).passed
    with pytest.raises(AntipodeAbsent):
        bare.antipode(el("a"))

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfrep.catalog import make_ak, make_eq2, make_eq2_pi, make_trivial_eta
from hopfrep.dsl import data_path, load_hopf, load_map, load_module, parse_expression, parse_hopf, parse_map, parse_module, parse_presentation
from hopfrep.errors import DSLSyntaxError, NonDecreasingRule, NotConfluent, UnknownGenerator
from hopfrep.hopf import axioms_check
from hopfrep.scalars import Q, LaurentScalar, as_scalar


def test_shipped_files_match_the_catalog():
    E, ak = make_eq2(), make_ak()
    assert load_hopf("eq2.hp") == E
    assert load_hopf("ak.hp") == ak
    assert load_map("pi.map", E, ak) == make_eq2_pi().pi_on_gens
    eta, ref = load_module("trivial.mod", ak), make_trivial_eta()
    for b in ak.basis(2):
        lhs = eta.action(ak.space.unit((b,)) @ eta.carrier.space.unit(("c",)))
        rhs = ref.action(ak.space.unit((b,)) @ ref.carrier.space.unit(("c",)))
        assert lhs.terms == rhs.terms


def test_parsed_eq2_is_a_hopf_algebra():
    assert axioms_check(load_hopf(str(data_path("eq2.hp"))), 2).passed


def test_expressions():
    assert parse_expression("3/2*a - a + (q - q)*z", ["z", "a"]) == {(("a",),): as_scalar(Fraction(1, 2))}
    assert parse_expression("q^-1 * z*a + 2", ["z", "a"]) == {(("z", "a"),): Q**-1, ((),): as_scalar(2)}
    assert parse_expression("-(a + z)*q", ["z", "a"]) == {(("a",),): -Q, (("z",),): -Q}
    assert parse_expression("a(x)1 + z(x)a", ["z", "a"]) == {(("a",), ()): as_scalar(1), (("z",), ("a",)): as_scalar(1)}


coeffs = st.dictionaries(st.integers(-2, 2), st.integers(-5, 5), min_size=1, max_size=3).map(LaurentScalar).filter(bool)


@given(st.lists(st.tuples(coeffs, st.sampled_from(["z", "a", "z*a", "a*a*z"])), min_size=1, max_size=4))
def test_expression_roundtrip(terms):
    text = " + ".join(f"({c}) * {w}" for c, w in terms)
    expected: dict = {}
    for c, w in terms:
        key = (tuple(w.split("*")),)
        expected[key] = expected.get(key, LaurentScalar()) + c
    expected = {k: v for k, v in expected.items() if v}
    assert parse_expression(text, ["z", "a"]) == expected


def test_small_presentation():
    parsed = parse_presentation("name C2\ngen g\nrule g*g -> 1\ncoproduct g -> g(x)g\ncounit g -> 1\nantipode g -> g\n")
    assert parsed.presentation.basis(3) == [(), ("g",)]
    assert axioms_check(parsed.hopf, 2).passed


def test_presentation_without_coalgebra():
    parsed = parse_presentation("gen x y\norder x < y\nrule y*x -> x*y")
    assert parsed.hopf is None
    with pytest.raises(DSLSyntaxError):
        parse_hopf("gen x y\nrule y*x -> x*y")


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("", 1, 1),
        ("gen a b\nrule a*b -> 2 *", 2, 16),
        ("gen a\nfoo bar", 2, 1),
    ],
)
def test_syntax_errors_carry_positions(text, line, col):
    with pytest.raises(DSLSyntaxError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert f"line {line}, col {col}" in str(info.value)


def test_semantic_errors():
    with pytest.raises(UnknownGenerator, match="line 2, col 8"):
        parse_presentation("gen a b\nrule a*c -> 1")
    with pytest.raises(NonDecreasingRule):
        parse_presentation("gen a\nrule a -> a*a")
    with pytest.raises(NotConfluent):
        parse_presentation("gen a b\nrule a*b -> 1\nrule b*a -> 1\nrule a*b -> 2")
    parsed = parse_presentation("gen a b\nrule a*b -> 1\nrule b*a -> 1\nrule a*b -> 2", check_confluence=False)
    assert not parsed.presentation.confluence().confluent


def test_map_and_module_errors():
    E, ak = make_eq2(), make_ak()
    with pytest.raises(UnknownGenerator):
        parse_map("pi z -> 1\npi zbar -> 1\npi a -> s\npi abar -> tbar", E, ak)
    with pytest.raises(DSLSyntaxError):
        parse_map("pi z -> 1", E, ak)
    with pytest.raises((DSLSyntaxError, UnknownGenerator)):
        parse_module("basis c\nact t d -> 0", ak)


def test_module_file_with_a_character():
    eta = parse_module("basis c\nact t c -> 2*c\nact tbar c -> q*c", make_ak())
    ak = make_ak()
    c = eta.carrier.space.unit(("c",))
    out = eta.action(ak.space.unit((("t", "tbar"),)) @ c)
    assert out == c.scale(2 * Q)

"""Bialgebra and Hopf structure on a presented algebra.

Coproduct and counit are given on generators and extended multiplicatively,
the antipode anti-multiplicatively.  Extension is done on the free algebra, so
comparing the images of both sides of every rewrite rule decides whether the
structure is well defined.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from .algebra import AlgebraElement, Presentation, Word, add_into, render_word
from .errors import AntipodeAbsent, PresentationError
from .report import Finding, Report
from .scalars import ONE, LaurentScalar, ScalarLike, as_scalar
from .tensor import K, AlgFactor, LinearMap, Space, TensorElement, compose, factorwise_product, identity, maps_equal_on

__all__ = ["HopfAlgebra", "coalgebra_check", "bialgebra_check", "antipode_check", "axioms_check"]


class HopfAlgebra:
    """``(H, m, 1, Delta, eps, S)``; with ``antipode=None`` this is just a bialgebra."""

    def __init__(
        self,
        algebra: Presentation,
        coproduct: Mapping[str, TensorElement],
        counit: Mapping[str, ScalarLike],
        antipode: Mapping[str, AlgebraElement] | None = None,
        name: str = "",
    ):
        self.algebra = algebra
        self.name = name or algebra.name
        self.space = Space((AlgFactor(algebra),))
        self.space2 = self.space @ self.space
        missing = [g for g in algebra.generators if g not in coproduct or g not in counit]
        if missing:
            raise PresentationError(f"coproduct/counit missing on generators {missing}")
        self.coproduct_on_gens = {g: coproduct[g] for g in algebra.generators}
        self.counit_on_gens = {g: as_scalar(counit[g]) for g in algebra.generators}
        for g, v in self.coproduct_on_gens.items():
            if v.space != self.space2:
                raise PresentationError(f"coproduct of {g} must live in H (x) H")
        self.antipode_on_gens = None
        if antipode is not None:
            self.antipode_on_gens = {g: algebra.element(antipode[g]) for g in algebra.generators}
        self._delta: dict[Word, TensorElement] = {}
        self._eps: dict[Word, LaurentScalar] = {}
        self._s: dict[Word, AlgebraElement] = {}

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.coproduct_on_gens == other.coproduct_on_gens
            and self.counit_on_gens == other.counit_on_gens
            and self.antipode_on_gens == other.antipode_on_gens
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"HopfAlgebra({self.name})"

    @property
    def has_antipode(self) -> bool:
        return self.antipode_on_gens is not None

    # -- free extensions on words (normal or not) --------------------------

    def delta_word(self, word: Word) -> TensorElement:
        word = tuple(word)
        hit = self._delta.get(word)
        if hit is None:
            if not word:
                hit = self.space2.unit(((), ()))
            else:
                hit = factorwise_product(self.delta_word(word[:-1]), self.coproduct_on_gens[word[-1]])
            self._delta[word] = hit
        return hit

    def eps_word(self, word: Word) -> LaurentScalar:
        word = tuple(word)
        hit = self._eps.get(word)
        if hit is None:
            hit = ONE
            for g in word:
                hit = hit * self.counit_on_gens[g]
            self._eps[word] = hit
        return hit

    def antipode_word(self, word: Word) -> AlgebraElement:
        if self.antipode_on_gens is None:
            raise AntipodeAbsent(f"{self.name} has no antipode")
        word = tuple(word)
        hit = self._s.get(word)
        if hit is None:
            hit = self.algebra.one()
            for g in reversed(word):
                hit = hit * self.antipode_on_gens[g]
            self._s[word] = hit
        return hit

    # -- linear extensions ---------------------------------------------------

    def coproduct(self, x) -> TensorElement:
        x = self.algebra.element(x)
        out: dict = {}
        for w, c in x.terms.items():
            for k, v in self.delta_word(w).terms.items():
                add_into(out, k, c * v)
        return TensorElement(self.space2, out)

    def counit(self, x) -> LaurentScalar:
        x = self.algebra.element(x)
        total = LaurentScalar()
        for w, c in x.terms.items():
            total = total + c * self.eps_word(w)
        return total

    def antipode(self, x) -> AlgebraElement:
        x = self.algebra.element(x)
        out = self.algebra.zero()
        for w, c in x.terms.items():
            out = out + self.antipode_word(w).scale(c)
        return out

    # -- structure maps --------------------------------------------------------

    def element_tensor(self, x: AlgebraElement) -> TensorElement:
        return TensorElement(self.space, {(w,): c for w, c in x.terms.items()})

    def mult_map(self) -> LinearMap:
        alg, sp = self.algebra, self.space
        return LinearMap(self.space2, sp, lambda t: TensorElement(sp, {(w,): c for w, c in alg.multiply_words(t[0], t[1]).items()}), "m")

    def unit_map(self) -> LinearMap:
        return LinearMap(K, self.space, lambda t: self.space.unit(((),)), "u")

    def delta_map(self) -> LinearMap:
        return LinearMap(self.space, self.space2, lambda t: self.delta_word(t[0]), "Delta")

    def eps_map(self) -> LinearMap:
        return LinearMap(self.space, K, lambda t: TensorElement.scalar(self.eps_word(t[0])), "eps")

    def antipode_map(self) -> LinearMap:
        return LinearMap(self.space, self.space, lambda t: self.element_tensor(self.antipode_word(t[0])), "S")

    def identity_map(self) -> LinearMap:
        return identity(self.space)

    def basis(self, d: int) -> list[Word]:
        return self.algebra.basis(d)


def _rule_cases(hd: HopfAlgebra, image, combine):
    """Yield ``(rule, image(lhs), image(rhs))`` with images built on the free algebra."""
    for rule in hd.algebra.rules:
        lhs = image(rule.lhs)
        rhs = None
        for w, c in rule.rhs:
            rhs = combine(rhs, image(w), c)
        if rhs is None:
            rhs = combine(None, image(()), LaurentScalar())
        yield rule, lhs, rhs


def _combine_tensor(acc, x, c):
    x = x.scale(c)
    return x if acc is None else acc + x


def _combine_scalar(acc, x, c):
    x = x * c
    return x if acc is None else acc + x


def coalgebra_check(hd: HopfAlgebra, d: int = 3) -> Report:
    """Coassociativity and both counit laws on the degree-``d`` basis."""
    report = Report(f"coalgebra[{hd.name}]")
    tests = [(w,) for w in hd.basis(d)]
    delta, eps, ident = hd.delta_map(), hd.eps_map(), hd.identity_map()
    report.add(Finding.from_comparison("coassociativity", "(4)", maps_equal_on(compose(delta @ ident, delta), compose(ident @ delta, delta), tests)))
    # K (x) H and H (x) K are identified with H
    left = compose(eps @ ident, delta)
    right = compose(ident @ eps, delta)
    report.add(Finding.from_comparison("counit-left", "(3)", maps_equal_on(left, ident, tests)))
    report.add(Finding.from_comparison("counit-right", "(3)", maps_equal_on(right, ident, tests)))
    return report


def bialgebra_check(hd: HopfAlgebra, d: int = 3) -> Report:
    """Delta and eps respect every relation and are multiplicative on basis pairs."""
    report = Report(f"bialgebra[{hd.name}]")
    report.add(Finding.compare_all("coproduct-respects-relations", "algebra-map", _rule_cases(hd, hd.delta_word, _combine_tensor)))
    report.add(Finding.compare_all("counit-respects-relations", "algebra-map", _rule_cases(hd, hd.eps_word, _combine_scalar)))
    basis = hd.basis(d)
    alg = hd.algebra

    def delta_pairs():
        for u, v in product(basis, repeat=2):
            if len(u) + len(v) > d:
                continue
            uv = alg.normal_form({u + v: 1})
            yield f"{render_word(u)} (x) {render_word(v)}", hd.coproduct(uv), factorwise_product(hd.delta_word(u), hd.delta_word(v))

    def eps_pairs():
        for u, v in product(basis, repeat=2):
            if len(u) + len(v) > d:
                continue
            uv = alg.normal_form({u + v: 1})
            yield f"{render_word(u)} (x) {render_word(v)}", hd.counit(uv), hd.eps_word(u) * hd.eps_word(v)

    report.add(Finding.compare_all("coproduct-multiplicative", "algebra-map", delta_pairs()))
    report.add(Finding.compare_all("counit-multiplicative", "algebra-map", eps_pairs()))
    report.add(Finding.compare_all("coproduct-unit", "algebra-map", [("1", hd.delta_word(()), hd.space2.unit(((), ())))]))
    return report


def antipode_check(hd: HopfAlgebra, d: int = 3) -> Report:
    """Antipode law on both sides, and S respecting every relation as an anti-homomorphism."""
    report = Report(f"antipode[{hd.name}]")
    if not hd.has_antipode:
        report.add(Finding("antipode-present", "-", False, 0, hd.name, "S", "absent"))
        return report

    def anti_image(word):
        return hd.element_tensor(hd.antipode_word(word))

    report.add(Finding.compare_all("antipode-respects-relations", "anti-algebra-map", _rule_cases(hd, anti_image, _combine_tensor)))
    tests = [(w,) for w in hd.basis(d)]
    m, s, ident, delta = hd.mult_map(), hd.antipode_map(), hd.identity_map(), hd.delta_map()
    unit_eps = compose(hd.unit_map(), hd.eps_map())
    report.add(Finding.from_comparison("antipode-left", "m(S(x)id)Delta", maps_equal_on(compose(m, s @ ident, delta), unit_eps, tests)))
    report.add(Finding.from_comparison("antipode-right", "m(id(x)S)Delta", maps_equal_on(compose(m, ident @ s, delta), unit_eps, tests)))
    return report


def axioms_check(hd: HopfAlgebra, d: int = 3) -> Report:
    report = Report(f"axioms[{hd.name}]")
    report.extend(coalgebra_check(hd, d))
    report.extend(bialgebra_check(hd, d))
    if hd.has_antipode:
        report.extend(antipode_check(hd, d))
    return report

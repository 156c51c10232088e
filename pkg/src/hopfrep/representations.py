"""Modules, comodules, Hopf modules and Hopf representations of either chirality.

Every diagram is assembled from structure maps with ``compose``, ``@`` and
twists, then compared on a finite test set.  Right-handed diagrams are the
left-handed ones with the tensor factors mirrored; :func:`place` puts the
algebra-side map on the correct side of the carrier-side map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .algebra import add_into
from .errors import SpaceMismatch
from .hopf import HopfAlgebra
from .report import Finding, Report
from .scalars import ScalarLike, as_scalar
from .tensor import FiniteFactor, LinearMap, Space, TensorElement, compose, identity, maps_equal_on, permute

LEFT = "left"
RIGHT = "right"

__all__ = [
    "LEFT",
    "RIGHT",
    "Carrier",
    "ActionStructure",
    "CoactionStructure",
    "place",
    "module_check",
    "comodule_check",
    "module_hom_check",
    "comodule_hom_check",
    "canonical_phi",
    "canonical_psi",
    "hopf_module_check",
    "thm23_equivalence_check",
    "Thm23Verdicts",
    "hopf_rep_check_type1",
    "hopf_rep_check_type2",
    "hopf_rep_check_full",
    "example_262",
    "regular_action",
    "regular_coaction",
    "trivial_action",
    "trivial_coaction",
    "matrix_action",
    "finite_coaction",
    "hw_carrier",
    "free_hopf_module",
]


@dataclass(frozen=True, eq=False)
class Carrier:
    """A space ``W`` together with the finite test basis used for truncation.

    ``elements`` overrides the basis with explicit vectors, for subspaces such
    as the induced space which are not spanned by basis tuples.
    """

    id: str
    space: Space
    elements: tuple | None = None
    parts: tuple | None = None

    @classmethod
    def finite(cls, id: str, labels: Sequence, grading: Sequence[int] | None = None) -> Carrier:
        return cls(id, Space((FiniteFactor(id, tuple(labels), tuple(grading) if grading else None),)))

    @classmethod
    def algebra_power(cls, hd: HopfAlgebra, k: int, id: str | None = None) -> Carrier:
        space = Space(hd.space.factors * k)
        return cls(id or ("H" if k == 1 else f"H^{k}"), space)

    @classmethod
    def product(cls, left: Carrier, right: Carrier, id: str | None = None) -> Carrier:
        return cls(id or f"{left.id} (x) {right.id}", left.space @ right.space, parts=(left, right))

    def basis(self, d: int) -> list[TensorElement]:
        if self.elements is not None:
            return [e for e in self.elements if e.degree() <= d]
        if self.parts is not None and any(p.elements is not None for p in self.parts):
            a, b = self.parts
            return [x @ y for x in a.basis(d) for y in b.basis(d) if x.degree() + y.degree() <= d]
        return [self.space.unit(t) for t in self.space.basis(d)]

    def __str__(self):
        return self.id


def place(side: str, hmap: LinearMap, wmap: LinearMap) -> LinearMap:
    """``hmap (x) wmap`` for left structures, ``wmap (x) hmap`` for right ones."""
    return hmap @ wmap if side == LEFT else wmap @ hmap


def _arrange(side: str, hparts: list, wpart):
    return hparts + [wpart] if side == LEFT else [wpart] + hparts


def _product_tests(pools: Sequence[Sequence[TensorElement]]) -> Iterable[TensorElement]:
    for combo in itertools.product(*pools):
        out = combo[0]
        for x in combo[1:]:
            out = out @ x
        yield out


def _h_basis(hd: HopfAlgebra, d: int) -> list[TensorElement]:
    return [hd.space.unit((w,)) for w in hd.basis(d)]


def hw_carrier(hd: HopfAlgebra, carrier: Carrier, side: str) -> Carrier:
    """``H (x) W`` (left) or ``W (x) H`` (right) as a carrier."""
    h = Carrier.algebra_power(hd, 1)
    return Carrier.product(h, carrier) if side == LEFT else Carrier.product(carrier, h)


@dataclass(eq=False)
class ActionStructure:
    carrier: Carrier
    hopf: HopfAlgebra
    side: str
    action: LinearMap

    def __post_init__(self):
        w = self.carrier.space
        expected = self.hopf.space @ w if self.side == LEFT else w @ self.hopf.space
        if self.action.domain != expected or self.action.codomain != w:
            raise SpaceMismatch(f"action must map {expected} -> {w}")

    def validate(self, d: int = 3) -> Report:
        return module_check(self, d)

    @cached_property
    def validation(self) -> Report:
        return self.validate(2)


@dataclass(eq=False)
class CoactionStructure:
    carrier: Carrier
    hopf: HopfAlgebra
    side: str
    coaction: LinearMap

    def __post_init__(self):
        w = self.carrier.space
        expected = self.hopf.space @ w if self.side == LEFT else w @ self.hopf.space
        if self.coaction.domain != w or self.coaction.codomain != expected:
            raise SpaceMismatch(f"coaction must map {w} -> {expected}")

    def validate(self, d: int = 3) -> Report:
        return comodule_check(self, d)

    @cached_property
    def validation(self) -> Report:
        return self.validate(2)


def _module_tests(act: ActionStructure, d: int, n_h: int = 1) -> list:
    hs = _h_basis(act.hopf, d)
    return list(_product_tests(_arrange(act.side, [hs] * n_h, act.carrier.basis(d))))


def module_check(act: ActionStructure, d: int = 3) -> Report:
    """Unit law (1) and associativity (2)."""
    hd, side, alpha = act.hopf, act.side, act.action
    id_w, id_h = identity(act.carrier.space), hd.identity_map()
    report = Report(f"module[{act.carrier}]")
    unit_path = compose(alpha, place(side, hd.unit_map(), id_w))
    report.add(Finding.from_comparison("module-unit", "(1)", maps_equal_on(unit_path, id_w, act.carrier.basis(d))))
    tests = _module_tests(act, d, 2)
    lhs = compose(alpha, place(side, id_h, alpha))
    rhs = compose(alpha, place(side, hd.mult_map(), id_w))
    report.add(Finding.from_comparison("module-associativity", "(2)", maps_equal_on(lhs, rhs, tests)))
    return report


def comodule_check(co: CoactionStructure, d: int = 3) -> Report:
    """Counit law (3) and coassociativity (4)."""
    hd, side, beta = co.hopf, co.side, co.coaction
    id_w, id_h = identity(co.carrier.space), hd.identity_map()
    tests = co.carrier.basis(d)
    report = Report(f"comodule[{co.carrier}]")
    counit_path = compose(place(side, hd.eps_map(), id_w), beta)
    report.add(Finding.from_comparison("comodule-counit", "(3)", maps_equal_on(counit_path, id_w, tests)))
    lhs = compose(place(side, hd.delta_map(), id_w), beta)
    rhs = compose(place(side, id_h, beta), beta)
    report.add(Finding.from_comparison("comodule-coassociativity", "(4)", maps_equal_on(lhs, rhs, tests)))
    return report


def module_hom_check(f: LinearMap, a1: ActionStructure, a2: ActionStructure, d: int = 3, tests=None) -> Report:
    """Diagram (5): ``f o alpha1 = alpha2 o (id (x) f)``."""
    if f.domain != a1.carrier.space or f.codomain != a2.carrier.space or a1.side != a2.side:
        raise SpaceMismatch(f"{f!r} is not a map {a1.carrier} -> {a2.carrier}")
    if tests is None:
        tests = _module_tests(a1, d)
    lhs = compose(f, a1.action)
    rhs = compose(a2.action, place(a1.side, a1.hopf.identity_map(), f))
    report = Report(f"module-hom[{f.name}]")
    report.add(Finding.from_comparison("module-hom", "(5)", maps_equal_on(lhs, rhs, tests)))
    return report


def comodule_hom_check(f: LinearMap, c1: CoactionStructure, c2: CoactionStructure, d: int = 3, tests=None) -> Report:
    """Diagram (6): ``(id (x) f) o beta1 = beta2 o f``."""
    if f.domain != c1.carrier.space or f.codomain != c2.carrier.space or c1.side != c2.side:
        raise SpaceMismatch(f"{f!r} is not a map {c1.carrier} -> {c2.carrier}")
    if tests is None:
        tests = c1.carrier.basis(d)
    lhs = compose(place(c1.side, c1.hopf.identity_map(), f), c1.coaction)
    rhs = compose(c2.coaction, f)
    report = Report(f"comodule-hom[{f.name}]")
    report.add(Finding.from_comparison("comodule-hom", "(6)", maps_equal_on(lhs, rhs, tests)))
    return report


def _swap_at(space: Space, i: int) -> LinearMap:
    perm = list(range(space.arity))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return permute(space, perm, "T")


def canonical_phi(act: ActionStructure) -> ActionStructure:
    """The induced module structure on ``H (x) W``: ``x.(h (x) w) = x1 h (x) x2.w`` (mirrored for right)."""
    hd, side, alpha = act.hopf, act.side, act.action
    id_h, id_w = hd.identity_map(), identity(act.carrier.space)
    if side == LEFT:
        spread = hd.delta_map() @ id_h @ id_w
        swap = _swap_at(spread.codomain, 1)
        phi = compose(hd.mult_map() @ alpha, swap, spread)
    else:
        spread = id_w @ id_h @ hd.delta_map()
        nw = act.carrier.space.arity
        swap = _swap_at(spread.codomain, nw)
        phi = compose(alpha @ hd.mult_map(), swap, spread)
    phi.name = "phi"
    return ActionStructure(hw_carrier(hd, act.carrier, side), hd, side, phi)


def canonical_psi(co: CoactionStructure) -> CoactionStructure:
    """The induced comodule structure on ``H (x) W``: ``h (x) w -> h1 w(-1) (x) h2 (x) w(0)`` (mirrored for right)."""
    hd, side, beta = co.hopf, co.side, co.coaction
    id_h, id_w = hd.identity_map(), identity(co.carrier.space)
    if side == LEFT:
        spread = hd.delta_map() @ beta
        swap = _swap_at(spread.codomain, 1)
        psi = compose(hd.mult_map() @ id_h @ id_w, swap, spread)
    else:
        spread = beta @ hd.delta_map()
        nw = co.carrier.space.arity
        swap = _swap_at(spread.codomain, nw)
        psi = compose(id_w @ id_h @ hd.mult_map(), swap, spread)
    psi.name = "psi"
    return CoactionStructure(hw_carrier(hd, co.carrier, side), hd, side, psi)


def _hw_tests(act: ActionStructure, d: int) -> list:
    return _module_tests(act, d, 1)


def hopf_module_check(act: ActionStructure, co: CoactionStructure, d: int = 3) -> Report:
    """Diagram (9): ``beta o alpha`` against ``(m (x) alpha)(id (x) T (x) id)(Delta (x) beta)``."""
    if act.side != co.side or act.carrier.space != co.carrier.space:
        raise SpaceMismatch("action and coaction must share carrier and chirality")
    hd, side = act.hopf, act.side
    alpha, beta = act.action, co.coaction
    if side == LEFT:
        spread = hd.delta_map() @ beta
        rhs = compose(hd.mult_map() @ alpha, _swap_at(spread.codomain, 1), spread)
    else:
        spread = beta @ hd.delta_map()
        nw = act.carrier.space.arity
        rhs = compose(alpha @ hd.mult_map(), _swap_at(spread.codomain, nw), spread)
    lhs = compose(beta, alpha)
    report = Report(f"hopf-module[{act.carrier}]")
    report.add(Finding.from_comparison("hopf-module", "(9)", maps_equal_on(lhs, rhs, _hw_tests(act, d))))
    return report


@dataclass
class Thm23Verdicts:
    """The three equivalent Hopf-module conditions, each evaluated independently."""

    diagram9: Report
    beta_module_hom: Report
    alpha_comodule_hom: Report

    @property
    def verdicts(self) -> tuple[bool, bool, bool]:
        return (self.diagram9.passed, self.beta_module_hom.passed, self.alpha_comodule_hom.passed)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts)) == 1

    def to_report(self) -> Report:
        report = Report("three-conditions-equivalence")
        report.extend(self.diagram9, "condition-1:")
        report.extend(self.beta_module_hom, "condition-2:")
        report.extend(self.alpha_comodule_hom, "condition-3:")
        flags = "".join("P" if v else "F" for v in self.verdicts)
        report.add(Finding("verdicts-agree", "(9)/(5)/(6)", self.agree, 3, flags))
        return report


def thm23_equivalence_check(act: ActionStructure, co: CoactionStructure, d: int = 3) -> Thm23Verdicts:
    tests = _hw_tests(act, d)
    phi = canonical_phi(act)
    psi = canonical_psi(co)
    c1 = hopf_module_check(act, co, d)
    c2 = module_hom_check(co.coaction, act, phi, d, tests=tests)
    c3 = comodule_hom_check(act.action, psi, co, d, tests=tests)
    return Thm23Verdicts(c1, c2, c3)


def hopf_rep_check_type1(act: ActionStructure, co: CoactionStructure, phi: ActionStructure, d: int = 3) -> Report:
    """Module + comodule + a module structure phi on ``H (x) W`` making beta a module map."""
    report = Report(f"hopf-rep-1[{act.carrier}]")
    report.extend(module_check(act, d), "alpha:")
    report.extend(comodule_check(co, d), "beta:")
    report.extend(module_check(phi, d), "phi:")
    report.extend(module_hom_check(co.coaction, act, phi, d), "beta-vs-phi:")
    return report


def hopf_rep_check_type2(act: ActionStructure, co: CoactionStructure, psi: CoactionStructure, d: int = 3) -> Report:
    """Module + comodule + a comodule structure psi on ``H (x) W`` making alpha a comodule map."""
    report = Report(f"hopf-rep-2[{act.carrier}]")
    report.extend(module_check(act, d), "alpha:")
    report.extend(comodule_check(co, d), "beta:")
    report.extend(comodule_check(psi, d), "psi:")
    report.extend(comodule_hom_check(act.action, psi, co, d, tests=_hw_tests(act, d)), "alpha-vs-psi:")
    return report


def hopf_rep_check_full(act, co, phi, psi, d: int = 3) -> Report:
    report = Report(f"hopf-rep[{act.carrier}]")
    one = hopf_rep_check_type1(act, co, phi, d)
    two = hopf_rep_check_type2(act, co, psi, d)
    report.extend(one, "type1:")
    report.extend(two, "type2:")
    return report


# -- concrete structures -------------------------------------------------------


def regular_action(hd: HopfAlgebra, side: str = LEFT) -> ActionStructure:
    """H acting on itself by multiplication."""
    carrier = Carrier.algebra_power(hd, 1)
    m = hd.mult_map()
    return ActionStructure(carrier, hd, side, m)


def regular_coaction(hd: HopfAlgebra, side: str = LEFT) -> CoactionStructure:
    """H coacting on itself by the coproduct."""
    return CoactionStructure(Carrier.algebra_power(hd, 1), hd, side, hd.delta_map())


def trivial_action(hd: HopfAlgebra, carrier: Carrier, side: str = LEFT) -> ActionStructure:
    """``h . w = eps(h) w``."""
    w = carrier.space
    domain = hd.space @ w if side == LEFT else w @ hd.space

    def rule(labels):
        if side == LEFT:
            word, rest = labels[0], labels[1:]
        else:
            word, rest = labels[-1], labels[:-1]
        return w.unit(rest, hd.eps_word(word))

    return ActionStructure(carrier, hd, side, LinearMap(domain, w, rule, "eps-action"))


def trivial_coaction(hd: HopfAlgebra, carrier: Carrier, side: str = LEFT) -> CoactionStructure:
    """``w -> 1 (x) w``."""
    w = carrier.space
    codomain = hd.space @ w if side == LEFT else w @ hd.space

    def rule(labels):
        return codomain.unit(((),) + labels if side == LEFT else labels + ((),))

    return CoactionStructure(carrier, hd, side, LinearMap(w, codomain, rule, "trivial-coaction"))


def matrix_action(
    hd: HopfAlgebra,
    carrier: Carrier,
    generator_matrices: Mapping[str, Mapping],
    side: str = LEFT,
) -> ActionStructure:
    """Action of a finite carrier given by one matrix per generator.

    ``generator_matrices[g][label]`` is ``{label: scalar}``, the image of a
    basis vector under ``g``; words act letter by letter (rightmost first on
    the left, leftmost first on the right).
    """
    w = carrier.space
    domain = hd.space @ w if side == LEFT else w @ hd.space
    mats = {g: {lab: {k: as_scalar(v) for k, v in col.items()} for lab, col in m.items()} for g, m in generator_matrices.items()}

    def act_word(word, vec: dict) -> dict:
        letters = reversed(word) if side == LEFT else word
        for g in letters:
            nxt: dict = {}
            for lab, c in vec.items():
                for k, v in mats[g].get(lab, {}).items():
                    add_into(nxt, k, c * v)
            vec = nxt
        return vec

    def rule(labels):
        if side == LEFT:
            word, lab = labels[0], labels[1]
        else:
            lab, word = labels[0], labels[1]
        return TensorElement(w, {(k,): c for k, c in act_word(word, {lab: as_scalar(1)}).items()})

    return ActionStructure(carrier, hd, side, LinearMap(domain, w, rule, "rho"))


def finite_coaction(hd: HopfAlgebra, carrier: Carrier, images: Mapping, side: str = LEFT) -> CoactionStructure:
    """Coaction on a finite carrier from ``images[label] = {(word, label'): scalar}`` (left order)."""
    w = carrier.space
    codomain = hd.space @ w if side == LEFT else w @ hd.space

    def rule(labels):
        terms = {}
        for (word, lab), c in images[labels[0]].items():
            key = (word, lab) if side == LEFT else (lab, word)
            terms[key] = as_scalar(c)
        return TensorElement(codomain, terms)

    return CoactionStructure(carrier, hd, side, LinearMap(w, codomain, rule, "beta"))


def free_hopf_module(hd: HopfAlgebra, labels: Sequence, side: str = LEFT) -> tuple[ActionStructure, CoactionStructure]:
    """``H (x) V`` (or ``V (x) H``) with H acting and coacting on its own factor only."""
    v = Carrier.finite("V", labels)
    h = Carrier.algebra_power(hd, 1)
    carrier = Carrier.product(h, v) if side == LEFT else Carrier.product(v, h)
    w = carrier.space
    hw = hd.space @ w if side == LEFT else w @ hd.space
    p = hd.algebra

    def act(labels_):
        if side == LEFT:
            x, y, lab = labels_
            return TensorElement(w, {(u, lab): c for u, c in p.multiply_words(x, y).items()})
        lab, y, x = labels_
        return TensorElement(w, {(lab, u): c for u, c in p.multiply_words(y, x).items()})

    def coact(labels_):
        if side == LEFT:
            y, lab = labels_
            return TensorElement(hw, {(u, v_, lab): c for (u, v_), c in hd.delta_word(y).terms.items()})
        lab, y = labels_
        return TensorElement(hw, {(lab, u, v_): c for (u, v_), c in hd.delta_word(y).terms.items()})

    return (
        ActionStructure(carrier, hd, side, LinearMap(hw, w, act, "alpha")),
        CoactionStructure(carrier, hd, side, LinearMap(w, hw, coact, "beta")),
    )


def example_262(hd: HopfAlgebra):
    """``W = H (x) H`` with the right action ``h (x) h' . x = h (x) h'x``, the right coaction
    ``h (x) h' -> h1 (x) h' (x) h2`` and the consistency map ``phi(h,h',h'',h''') = h (x) h'h''' (x) h''``."""
    p = hd.algebra
    carrier = Carrier.algebra_power(hd, 2, id="H(x)H")
    w = carrier.space
    h3 = w @ hd.space

    def act(labels):
        h, h1, x = labels
        return TensorElement(w, {(h, u): c for u, c in p.multiply_words(h1, x).items()})

    def coact(labels):
        h, h1 = labels
        return TensorElement(h3, {(u, h1, v): c for (u, v), c in hd.delta_word(h).terms.items()})

    def phi(labels):
        h, h1, h2, h3_ = labels
        return TensorElement(h3, {(h, u, h2): c for u, c in p.multiply_words(h1, h3_).items()})

    alpha = ActionStructure(carrier, hd, RIGHT, LinearMap(w @ hd.space, w, act, "alpha"))
    beta = CoactionStructure(carrier, hd, RIGHT, LinearMap(w, h3, coact, "beta"))
    phi_struct = ActionStructure(hw_carrier(hd, carrier, RIGHT), hd, RIGHT, LinearMap(h3 @ hd.space, h3, phi, "phi"))
    return carrier, alpha, beta, phi_struct

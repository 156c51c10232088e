"""Quantum subgroups and the induced Hopf representation.

Given a bialgebra epimorphism ``pi: H -> B`` and a ``B``-module ``(L, eta)``,
the induced space is

    L' = { v in H (x) L : (R (x) id)(v) and v with 1 inserted agree after eta(b (x) -), for all b }

with ``R = (id (x) pi) o Delta``.  Since ``b = 1`` acts as the identity, this
reduces to ``coinvariants (x) L``; both the literal predicate and the reduced
computation are implemented and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .algebra import AlgebraElement, Word, add_into, render_word
from .errors import ClosureViolation
from .hopf import HopfAlgebra
from .report import Finding, Report
from .representations import (
    LEFT,
    ActionStructure,
    Carrier,
    CoactionStructure,
    hopf_rep_check_type1,
    hw_carrier,
    module_check,
    trivial_action,
)
from .scalars import LaurentScalar
from .tensor import LinearMap, Space, TensorElement, compose

__all__ = [
    "QuantumSubgroup",
    "subgroup_check",
    "restriction_R",
    "Membership",
    "lprime_contains",
    "lprime_member",
    "coinvariant_basis",
    "coinvariant_kernel_solve",
    "lemma_2_9_check",
    "lemma_2_10_check",
    "lemma_2_11_check",
    "InducedCarrier",
    "induced_carrier",
    "induced_structures",
    "induced_rep_check",
    "trivial_eta",
]


class QuantumSubgroup:
    """A pair ``(B, pi)`` with ``pi`` given on the generators of ``H``."""

    def __init__(self, H: HopfAlgebra, B: HopfAlgebra, pi_on_gens: Mapping[str, object], name: str = ""):
        self.H = H
        self.B = B
        self.name = name or f"{H.name}->{B.name}"
        self.pi_on_gens = {g: B.algebra.element(pi_on_gens[g]) for g in H.algebra.generators}
        self._pi: dict[Word, AlgebraElement] = {}
        self.hb_space = H.space @ B.space

    def pi_word(self, word: Word) -> AlgebraElement:
        """Image of a word, multiplied out in B (free extension, so works on non-normal words too)."""
        word = tuple(word)
        hit = self._pi.get(word)
        if hit is None:
            hit = self.B.algebra.one() if not word else self.pi_word(word[:-1]) * self.pi_on_gens[word[-1]]
            self._pi[word] = hit
        return hit

    def pi(self, x) -> AlgebraElement:
        x = self.H.algebra.element(x)
        out = self.B.algebra.zero()
        for w, c in x.terms.items():
            out = out + self.pi_word(w).scale(c)
        return out

    def pi_map(self) -> LinearMap:
        return LinearMap(self.H.space, self.B.space, lambda t: self.B.element_tensor(self.pi_word(t[0])), "pi")

    def restriction_word(self, word: Word) -> TensorElement:
        out: dict = {}
        for (u, v), c in self.H.delta_word(word).terms.items():
            for bw, bc in self.pi_word(v).terms.items():
                add_into(out, (u, bw), c * bc)
        return TensorElement(self.hb_space, out)

    def restriction(self, h) -> TensorElement:
        h = self.H.algebra.element(h)
        out = TensorElement(self.hb_space, {})
        for w, c in h.terms.items():
            out = out + self.restriction_word(w).scale(c)
        return out

    def __repr__(self):
        return f"QuantumSubgroup({self.name})"


def restriction_R(qs: QuantumSubgroup, h) -> TensorElement:
    """``R(h) = (id (x) pi)(Delta(h))``."""
    return qs.restriction(h)


def subgroup_check(qs: QuantumSubgroup, d: int = 3) -> Report:
    """Relation respect, counit square (12), coproduct square (13) and surjectivity of pi."""
    H, B = qs.H, qs.B
    report = Report(f"subgroup[{qs.name}]")

    def relation_cases():
        for rule in H.algebra.rules:
            rhs = B.algebra.zero()
            for w, c in rule.rhs:
                rhs = rhs + qs.pi_word(w).scale(c)
            yield rule, qs.pi_word(rule.lhs), rhs

    report.add(Finding.compare_all("pi-respects-relations", "algebra-map", relation_cases()))
    basis = H.basis(d)
    report.add(Finding.compare_all("counit-square", "(12)", ((render_word(w), B.counit(qs.pi_word(w)), H.eps_word(w)) for w in basis)))

    def coproduct_cases():
        for w in basis:
            lhs = B.coproduct(qs.pi_word(w))
            rhs: dict = {}
            for (u, v), c in H.delta_word(w).terms.items():
                for (bu, cu), (bv, cv) in product(qs.pi_word(u).terms.items(), qs.pi_word(v).terms.items()):
                    add_into(rhs, (bu, bv), c * cu * cv)
            yield render_word(w), lhs, TensorElement(B.space2, rhs)

    report.add(Finding.compare_all("coproduct-square", "(13)", coproduct_cases()))

    missing = []
    preimages = []
    for g in B.algebra.generators:
        # compare with the normalized generator, which may itself reduce (e.g. g -> 1 in C_1)
        target = B.algebra.gen(g)
        found = next((w for w in basis if qs.pi_word(w) == target), None)
        if found is None:
            missing.append(g)
        else:
            preimages.append(f"{g}<-{render_word(found)}")
    report.add(Finding("epimorphism", "pi onto", not missing, len(B.algebra.generators), ",".join(missing) if missing else "", "; ".join(preimages), ""))
    return report


def trivial_eta(B: HopfAlgebra, labels: Sequence[str] = ("c",)) -> ActionStructure:
    """``eta(b (x) c) = eps_B(b) c`` on a finite carrier."""
    return trivial_action(B, Carrier.finite("L", labels), LEFT)


@dataclass
class Membership:
    member: bool
    witness: Word | None = None
    lhs: TensorElement | None = None
    rhs: TensorElement | None = None

    def __bool__(self):
        return self.member


def _eta_of(bm: ActionStructure, b_word: Word, l_labels: tuple) -> TensorElement:
    return bm.action.on_basis((b_word,) + l_labels)


def lprime_contains(qs: QuantumSubgroup, bm: ActionStructure, v: TensorElement, d_B: int = 3) -> Membership:
    """The literal defining condition of L', quantified over ``basis(B, d_B)``."""
    hbl = qs.hb_space @ bm.carrier.space
    for b in qs.B.basis(d_B):
        lhs = TensorElement(hbl, {})
        rhs = TensorElement(hbl, {})
        for labels, c in v.terms.items():
            h, l_labels = labels[0], labels[1:]
            eta = _eta_of(bm, b, l_labels)
            if eta.is_zero():
                continue
            lhs = lhs + (qs.restriction_word(h) @ eta).scale(c)
            rhs = rhs + (qs.hb_space.unit((h, ())) @ eta).scale(c)
        if lhs != rhs:
            return Membership(False, b, lhs, rhs)
    return Membership(True)


def lprime_member(qs: QuantumSubgroup, bm: ActionStructure, h, l: TensorElement, d_B: int = 3) -> Membership:
    h = qs.H.algebra.element(h)
    return lprime_contains(qs, bm, qs.H.element_tensor(h) @ l, d_B)


def _defect(qs: QuantumSubgroup, w: Word) -> TensorElement:
    return qs.restriction_word(w) - qs.hb_space.unit((w, ()))


def coinvariant_kernel_solve(qs: QuantumSubgroup, words: Sequence[Word]) -> list[AlgebraElement]:
    """Kernel of ``h -> R(h) - h (x) 1`` on ``span(words)``, over the rational functions in q."""
    if not words:
        return []
    defects = [_defect(qs, w) for w in words]
    rows = sorted({k for dft in defects for k in dft.terms}, key=qs.hb_space.sort_key)
    if not rows:
        return [qs.H.algebra.element(w) for w in words]
    # a full column rank at one specialization forces full rank over Q(q)
    for q0 in (Fraction(7, 3), Fraction(-5, 2)):
        if _rank_at(defects, rows, q0) == len(words):
            return []
    import sympy

    q = sympy.Symbol("q")
    mat = sympy.Matrix([[dft.terms.get(r, LaurentScalar()).to_sympy(q) for dft in defects] for r in rows])
    out = []
    for vec in mat.nullspace():
        vec = sympy.simplify(vec)
        denom = sympy.lcm([sympy.fraction(sympy.together(x))[1] for x in vec])
        vec = [sympy.expand(sympy.cancel(x * denom)) for x in vec]
        terms = {}
        for w, x in zip(words, vec):
            coeff = _laurent_from_sympy(x, q)
            if coeff:
                terms[w] = coeff
        out.append(qs.H.algebra.element(terms))
    return out


def _laurent_from_sympy(expr, q) -> LaurentScalar:
    import sympy

    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        coeff, power = term.as_coeff_exponent(q)
        if coeff.free_symbols:
            raise ValueError(f"not a Laurent polynomial: {expr}")
        terms[int(power)] = terms.get(int(power), 0) + Fraction(int(sympy.numer(coeff)), int(sympy.denom(coeff)))
    return LaurentScalar(terms)


def _rank_at(columns: Sequence[TensorElement], rows: Sequence, q0: Fraction) -> int:
    mat = [[col.terms.get(r, LaurentScalar()).evaluate(q0) for col in columns] for r in rows]
    rank, ncols = 0, len(columns)
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def coinvariant_basis(qs: QuantumSubgroup, d: int = 3) -> list[AlgebraElement]:
    """Basis of ``{h : R(h) = h (x) 1}`` in degree <= d: coinvariant words first, then kernel combinations."""
    words = qs.H.basis(d)
    direct, rest = [], []
    for w in words:
        (rest if _defect(qs, w).terms else direct).append(w)
    return [qs.H.algebra.element(w) for w in direct] + coinvariant_kernel_solve(qs, rest)


def _samples(qs, bm, coinvariants, d):
    return [(c, bm.carrier.space.unit(t)) for c in coinvariants for t in bm.carrier.space.basis(d)]


def lemma_2_9_check(qs: QuantumSubgroup, bm: ActionStructure, d_B: int = 3) -> Report:
    """``1 (x) l`` lies in L' for every basis vector l."""
    report = Report("lemma-2.9")

    def cases():
        for t in bm.carrier.space.basis(d_B):
            l = bm.carrier.space.unit(t)
            m = lprime_member(qs, bm, qs.H.algebra.one(), l, d_B)
            yield f"1 (x) {l}", m.member, True

    report.add(Finding.compare_all("unit-in-Lprime", "1(x)l", cases()))
    return report


def lemma_2_10_check(qs: QuantumSubgroup, bm: ActionStructure, samples, d_B: int = 3) -> Report:
    """Members stay members after acting on the L leg by any ``b``."""
    report = Report("lemma-2.10")

    def cases():
        for h, l in samples:
            if not lprime_member(qs, bm, h, l, d_B):
                yield f"{h} (x) {l}", "sample not a member", "member"
                continue
            for b in qs.B.basis(d_B):
                moved = compose(bm.action)(qs.B.space.unit((b,)) @ l)
                yield f"{h} (x) eta({render_word(b)} (x) {l})", lprime_member(qs, bm, h, moved, d_B).member, True

    report.add(Finding.compare_all("eta-closure", "h(x)eta(b(x)l)", cases()))
    return report


def _split_first(x: TensorElement) -> dict:
    """Group ``x = sum_u u (x) rest_u`` by the first-leg word."""
    rest_space = Space(x.space.factors[1:])
    groups: dict = {}
    for labels, c in x.terms.items():
        groups.setdefault(labels[0], {})[labels[1:]] = c
    return {u: TensorElement(rest_space, terms) for u, terms in groups.items()}


def lemma_2_11_check(qs: QuantumSubgroup, bm: ActionStructure, samples, d_B: int = 3) -> Report:
    """``Delta(h) (x) l`` lies in ``H (x) L'`` for every member ``h (x) l``."""
    report = Report("lemma-2.11")

    def cases():
        for h, l in samples:
            v = qs.H.coproduct(h) @ l
            for u, leg in sorted(_split_first(v).items(), key=lambda kv: qs.H.algebra.word_key(kv[0])):
                yield f"Delta({h}) (x) {l} at {render_word(u)} (x) -", lprime_contains(qs, bm, leg, d_B).member, True

    report.add(Finding.compare_all("coproduct-closure", "Delta(h)(x)l", cases()))
    return report


@dataclass
class InducedCarrier:
    qs: QuantumSubgroup
    bm: ActionStructure
    coinvariants: list[AlgebraElement]
    degree: int
    carrier: Carrier = field(init=False)

    def __post_init__(self):
        elements = tuple(self.qs.H.element_tensor(c) @ l for c, l in _samples(self.qs, self.bm, self.coinvariants, self.degree))
        self.carrier = Carrier("L'", self.qs.H.space @ self.bm.carrier.space, elements=elements)

    @property
    def dimension(self) -> int:
        return len(self.carrier.elements)


def induced_carrier(qs: QuantumSubgroup, bm: ActionStructure, d: int = 3) -> InducedCarrier:
    return InducedCarrier(qs, bm, coinvariant_basis(qs, d), d)


def _eta_pi(qs: QuantumSubgroup, bm: ActionStructure, h: Word, l_labels: tuple) -> TensorElement:
    """``eta(pi(h) (x) l)``."""
    out = TensorElement(bm.carrier.space, {})
    for b, c in qs.pi_word(h).terms.items():
        out = out + _eta_of(bm, b, l_labels).scale(c)
    return out


def induced_structures(qs: QuantumSubgroup, bm: ActionStructure, d: int = 3, lc: InducedCarrier | None = None, d_B: int | None = None):
    """The action, coaction and consistency map on L', with closure in L' verified on the test range."""
    H = qs.H
    lc = lc or induced_carrier(qs, bm, d)
    d_B = d if d_B is None else d_B
    hl = H.space @ bm.carrier.space

    def alpha_rule(labels):
        h, h1, l_labels = labels[0], labels[1], labels[2:]
        return H.space.unit((h1,)) @ _eta_pi(qs, bm, h, l_labels)

    def beta_rule(labels):
        h, l_labels = labels[0], labels[1:]
        return H.delta_word(h) @ bm.carrier.space.unit(l_labels)

    def phi_rule(labels):
        h, h1, h2, l_labels = labels[0], labels[1], labels[2], labels[3:]
        return H.space2.unit((h1, h2)) @ _eta_pi(qs, bm, h, l_labels)

    alpha = ActionStructure(lc.carrier, H, LEFT, LinearMap(H.space @ hl, hl, alpha_rule, "alpha"))
    beta = CoactionStructure(lc.carrier, H, LEFT, LinearMap(hl, H.space @ hl, beta_rule, "beta"))
    hlc = hw_carrier(H, lc.carrier, LEFT)
    phi = ActionStructure(hlc, H, LEFT, LinearMap(H.space @ H.space @ hl, H.space @ hl, phi_rule, "phi_H"))

    for e in lc.carrier.basis(d):
        for w in H.basis(d):
            out = alpha.action(H.space.unit((w,)) @ e)
            m = lprime_contains(qs, bm, out, d_B)
            if not m:
                raise ClosureViolation(f"alpha({render_word(w)} (x) {e}) = {out} is not in L' (witness b={render_word(m.witness)})")
        for u, leg in _split_first(beta.coaction(e)).items():
            m = lprime_contains(qs, bm, leg, d_B)
            if not m:
                raise ClosureViolation(f"beta({e}) has leg {leg} at {render_word(u)} outside L'")
    return alpha, beta, phi


def induced_rep_check(qs: QuantumSubgroup, bm: ActionStructure, d: int = 3, d_B: int | None = None) -> Report:
    """Verify that ``(L', alpha, beta, phi_H)`` is a first type Hopf representation."""
    d_B = d if d_B is None else d_B
    report = Report(f"induce[{qs.name}]")
    hyp = subgroup_check(qs, d)
    bad = hyp.first_failure()
    report.notes.append(f"hypothesis subgroup_check: {'PASS' if hyp.passed else 'FAIL at ' + bad.check + ' ' + bad.witness}")
    eta_report = module_check(bm, d_B)
    report.notes.append(f"hypothesis eta module_check: {'PASS' if eta_report.passed else 'FAIL'}")
    lc = induced_carrier(qs, bm, d)
    report.notes.append(f"L' dimension at degree {d}: {lc.dimension} ({len(lc.coinvariants)} coinvariants x {len(bm.carrier.space.basis(d))} L-basis)")

    def agreement():
        coinv_words = {next(iter(c.terms)) for c in lc.coinvariants if len(c.terms) == 1}
        for w in qs.H.basis(d):
            for t in bm.carrier.space.basis(d):
                l = bm.carrier.space.unit(t)
                literal = lprime_member(qs, bm, qs.H.algebra.element(w), l, d_B).member
                reduced = w in coinv_words
                yield f"{render_word(w)} (x) {l}", literal, reduced
        for c in lc.coinvariants:
            for t in bm.carrier.space.basis(d):
                yield f"{c} (x) {t}", lprime_member(qs, bm, c, bm.carrier.space.unit(t), d_B).member, True

    report.add(Finding.compare_all("lprime-literal-vs-reduced", "L'", agreement()))
    samples = _samples(qs, bm, lc.coinvariants, d)
    report.extend(lemma_2_9_check(qs, bm, d_B))
    report.extend(lemma_2_10_check(qs, bm, samples, d_B))
    report.extend(lemma_2_11_check(qs, bm, samples, d_B))
    alpha, beta, phi = induced_structures(qs, bm, d, lc, d_B)
    report.extend(hopf_rep_check_type1(alpha, beta, phi, d))
    return report

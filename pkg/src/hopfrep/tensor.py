"""Tensor spaces over presented algebras and finite carriers, and linear maps between them.

Infinite-dimensional factors rule out matrices, so a :class:`LinearMap` is an
evaluation rule on basis tuples, extended linearly and memoized per tuple.
Equality of maps is only ever decided on an explicit finite test set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .algebra import AlgebraElement, Presentation, add_into, render_terms, render_word
from .errors import SpaceMismatch
from .scalars import ONE, ScalarLike, as_scalar

__all__ = [
    "AlgFactor",
    "FiniteFactor",
    "Space",
    "K",
    "TensorElement",
    "LinearMap",
    "Comparison",
    "compose",
    "identity",
    "twist",
    "permute",
    "maps_equal_on",
    "tensor",
    "factorwise_product",
]

TENSOR_SIGN = " (x) "


@dataclass(frozen=True)
class AlgFactor:
    algebra: Presentation

    def basis(self, d: int):
        return self.algebra.basis(d)

    def degree(self, label) -> int:
        return len(label)

    def render(self, label) -> str:
        return render_word(label)

    def sort_key(self, label):
        return self.algebra.word_key(label)

    def __str__(self):
        return self.algebra.name or "H"


@dataclass(frozen=True)
class FiniteFactor:
    """A finite-dimensional carrier with opaque labels and an optional grading."""

    name: str
    labels: tuple
    grading: tuple | None = None

    def _grade(self, label) -> int:
        if self.grading is None:
            return 0
        return self.grading[self.labels.index(label)]

    def basis(self, d: int):
        return [lab for lab in self.labels if self._grade(lab) <= d]

    def degree(self, label) -> int:
        return self._grade(label)

    def render(self, label) -> str:
        return str(label)

    def sort_key(self, label):
        return (self._grade(label), self.labels.index(label))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Space:
    factors: tuple = ()

    @property
    def arity(self) -> int:
        return len(self.factors)

    def __matmul__(self, other: Space) -> Space:
        return Space(self.factors + other.factors)

    def __str__(self):
        return TENSOR_SIGN.join(str(f) for f in self.factors) if self.factors else "K"

    def degree(self, labels) -> int:
        return sum(f.degree(lab) for f, lab in zip(self.factors, labels))

    def basis(self, d: int) -> list[tuple]:
        """Basis tuples whose total degree is at most ``d``, in product order."""
        pools = [f.basis(d) for f in self.factors]
        return [t for t in itertools.product(*pools) if self.degree(t) <= d]

    def sort_key(self, labels):
        return tuple(f.sort_key(lab) for f, lab in zip(self.factors, labels))

    def render(self, labels) -> str:
        if not labels:
            return "1"
        return TENSOR_SIGN.join(f.render(lab) for f, lab in zip(self.factors, labels))

    def unit(self, labels, coeff: ScalarLike = 1) -> TensorElement:
        return TensorElement(self, {tuple(labels): as_scalar(coeff)})

    def zero(self) -> TensorElement:
        return TensorElement(self, {})


K = Space(())


class TensorElement:
    """A linear combination of basis tuples of a :class:`Space`."""

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms: dict):
        self.space = space
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def of(cls, x: AlgebraElement) -> TensorElement:
        return cls(Space((AlgFactor(x.algebra),)), {(w,): c for w, c in x.terms.items()})

    @classmethod
    def scalar(cls, c: ScalarLike) -> TensorElement:
        return cls(K, {(): as_scalar(c)})

    def _check(self, other: TensorElement):
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_into(out, k, c)
        return TensorElement(self.space, out)

    def __neg__(self):
        return TensorElement(self.space, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s: ScalarLike) -> TensorElement:
        s = as_scalar(s)
        return TensorElement(self.space, {k: s * c for k, c in self.terms.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def __matmul__(self, other: TensorElement) -> TensorElement:
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = c1 * c2
        return TensorElement(self.space @ other.space, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((self.space.degree(k) for k in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.space.sort_key(kv[0]))

    def __str__(self):
        return render_terms(dict(self.sorted_terms()), self.space.render)

    def __repr__(self):
        return f"TensorElement({self})"


def tensor(*parts) -> TensorElement:
    """Tensor product of elements; algebra elements are promoted to one-factor tensors."""
    out = TensorElement.scalar(ONE)
    for p in parts:
        if isinstance(p, AlgebraElement):
            p = TensorElement.of(p)
        out = out @ p
    return out


class LinearMap:
    """A linear map given by its values on basis tuples of ``domain``."""

    def __init__(self, domain: Space, codomain: Space, on_basis: Callable[[tuple], TensorElement], name: str = ""):
        self.domain = domain
        self.codomain = codomain
        self._on_basis = on_basis
        self.name = name or "f"
        # dict assignment is atomic under the GIL; a racing duplicate evaluation is harmless
        self._memo: dict = {}

    def on_basis(self, labels: tuple) -> TensorElement:
        hit = self._memo.get(labels)
        if hit is None:
            hit = self._on_basis(labels)
            if hit.space != self.codomain:
                raise SpaceMismatch(f"{self.name} produced an element of {hit.space}, expected {self.codomain}")
            self._memo[labels] = hit
        return hit

    def __call__(self, x: TensorElement) -> TensorElement:
        if x.space != self.domain:
            raise SpaceMismatch(f"{self.name} expects {self.domain}, got {x.space}")
        out: dict = {}
        for labels, c in x.terms.items():
            for k, v in self.on_basis(labels).terms.items():
                add_into(out, k, c * v)
        return TensorElement(self.codomain, out)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        n = self.domain.arity
        left, right = self, other

        def rule(labels):
            return left.on_basis(labels[:n]) @ right.on_basis(labels[n:])

        return LinearMap(self.domain @ other.domain, self.codomain @ other.codomain, rule, f"({self.name} (x) {other.name})")

    def __repr__(self):
        return f"LinearMap({self.name}: {self.domain} -> {self.codomain})"


def compose(*maps: LinearMap) -> LinearMap:
    """``compose(g, f)`` is ``g o f``; any number of maps, applied right to left."""
    *rest, first = maps
    result = first
    for g in reversed(rest):
        if g.domain != result.codomain:
            raise SpaceMismatch(f"cannot compose {g.name} after {result.name}: {result.codomain} vs {g.domain}")
        inner, outer = result, g
        result = LinearMap(inner.domain, outer.codomain, lambda labels, i=inner, o=outer: o(i.on_basis(labels)), f"{outer.name} o {inner.name}")
    return result


def identity(space: Space) -> LinearMap:
    return LinearMap(space, space, lambda labels: space.unit(labels), "id")


def permute(space: Space, perm: Sequence[int], name: str = "P") -> LinearMap:
    """Output factor ``i`` is input factor ``perm[i]``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(space.arity)):
        raise ValueError(f"not a permutation of {space.arity} factors: {perm}")
    target = Space(tuple(space.factors[p] for p in perm))
    return LinearMap(space, target, lambda labels: target.unit(tuple(labels[p] for p in perm)), name)


def twist(space: Space, i: int = 0) -> LinearMap:
    """Swap factors ``i`` and ``i + 1``."""
    perm = list(range(space.arity))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return permute(space, perm, "T")


@dataclass
class Comparison:
    equal: bool
    tested: int
    witness: TensorElement | None = None
    lhs: TensorElement | None = None
    rhs: TensorElement | None = None


def maps_equal_on(f: LinearMap, g: LinearMap, tests: Iterable) -> Comparison:
    """Compare ``f`` and ``g`` on each test input; stop at the first disagreement."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise SpaceMismatch(f"{f!r} vs {g!r}")
    n = 0
    for t in tests:
        x = t if isinstance(t, TensorElement) else f.domain.unit(t)
        n += 1
        lhs, rhs = f(x), g(x)
        if lhs != rhs:
            return Comparison(False, n, x, lhs, rhs)
    return Comparison(True, n)


def factorwise_product(x: TensorElement, y: TensorElement) -> TensorElement:
    """Product in ``H1 (x) ... (x) Hk`` where each factor is an algebra."""
    if x.space != y.space:
        raise SpaceMismatch(f"{x.space} vs {y.space}")
    algebras = [f.algebra for f in x.space.factors]
    out: dict = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            partial = {(): c1 * c2}
            for alg, u, v in zip(algebras, k1, k2):
                nxt: dict = {}
                prod = alg.multiply_words(u, v)
                for head, c in partial.items():
                    for w, cw in prod.items():
                        add_into(nxt, head + (w,), c * cw)
                partial = nxt
            for k, c in partial.items():
                add_into(out, k, c)
    return TensorElement(x.space, out)

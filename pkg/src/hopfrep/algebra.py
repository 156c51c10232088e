"""Finitely presented associative algebras over Laurent scalars.

An algebra is given by named generators, a total order on them, and oriented
rewrite rules ``lhs -> rhs``.  Words are tuples of generator names; every rule
must strictly decrease the degree-lexicographic order, which makes rewriting
terminate.  Normal forms are unique once the critical pairs resolve.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import NonDecreasingRule, NotConfluent, PresentationError, UnknownGenerator
from .scalars import ONE, LaurentScalar, ScalarLike, as_scalar

Word = tuple  # tuple[str, ...]

__all__ = [
    "Word",
    "RewriteRule",
    "Presentation",
    "AlgebraElement",
    "CriticalPair",
    "ConfluenceReport",
    "render_word",
    "render_terms",
    "add_into",
    "enumerate_basis",
    "local_confluence_check",
]


def render_word(word: Word) -> str:
    return "*".join(word) if word else "1"


def render_terms(terms: Mapping, render_label) -> str:
    """Render ``{label: scalar}`` as a signed sum, one term per label."""
    if not terms:
        return "0"
    pieces = []
    for label, c in terms.items():
        body = render_label(label)
        if c == 1:
            text = body
        elif c == -1:
            text = "-" + body
        else:
            s = str(c)
            if not c.is_single_term():
                s = f"({s})"
            text = s if body == "1" else f"{s}*{body}"
        pieces.append(text)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def add_into(acc: dict, key, coeff: LaurentScalar) -> None:
    """Accumulate ``coeff`` at ``key``, dropping the entry when it cancels."""
    if not coeff:
        return
    new = acc[key] + coeff if key in acc else coeff
    if new:
        acc[key] = new
    else:
        del acc[key]


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: tuple  # tuple[tuple[Word, LaurentScalar], ...]

    @classmethod
    def make(cls, lhs: Sequence[str], rhs: Mapping[Word, ScalarLike] | Iterable) -> RewriteRule:
        items = rhs.items() if isinstance(rhs, Mapping) else rhs
        acc: dict = {}
        for w, c in items:
            add_into(acc, tuple(w), as_scalar(c))
        return cls(tuple(lhs), tuple(acc.items()))

    def __str__(self):
        return f"{render_word(self.lhs)} -> {render_terms(dict(self.rhs), render_word)}"


@dataclass(frozen=True)
class CriticalPair:
    word: Word
    rules: tuple[int, int]
    left: AlgebraElement
    right: AlgebraElement

    def __str__(self):
        return f"{render_word(self.word)}: {self.left} != {self.right} (rules {self.rules[0]}, {self.rules[1]})"


@dataclass
class ConfluenceReport:
    overlap_degree: int
    examined: int
    unresolved: list[CriticalPair] = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.unresolved


class Presentation:
    """Generators in normal-form order plus oriented rewrite rules."""

    def __init__(self, generators: Sequence[str], rules: Iterable[RewriteRule] = (), name: str = ""):
        self.generators = tuple(generators)
        self.name = name
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError(f"duplicate generator names in {self.generators}")
        if "q" in self.generators:
            raise PresentationError("'q' is reserved for the deformation parameter")
        self._index = {g: i for i, g in enumerate(self.generators)}
        self.rules = tuple(rules)
        for rule in self.rules:
            self._validate_rule(rule)
        self._by_first: dict[str, list[tuple[int, RewriteRule]]] = {}
        for i, rule in enumerate(self.rules):
            self._by_first.setdefault(rule.lhs[0], []).append((i, rule))
        self._hash = hash((self.generators, self.rules))
        self._reduced: dict[Word, dict] = {}
        self._products: dict[tuple[Word, Word], dict] = {}
        self._confluence: ConfluenceReport | None = None
        self._basis: dict[int, list[Word]] = {}

    def _check_word(self, word: Word) -> None:
        for g in word:
            if g not in self._index:
                raise UnknownGenerator(f"unknown generator {g!r}")

    def _validate_rule(self, rule: RewriteRule) -> None:
        if not rule.lhs:
            raise PresentationError("rule with empty left-hand side")
        self._check_word(rule.lhs)
        for w, _ in rule.rhs:
            self._check_word(w)
            if self.word_key(w) >= self.word_key(rule.lhs):
                raise NonDecreasingRule(f"rule {rule} does not decrease the word order at {render_word(w)}")

    def word_key(self, word: Word):
        """Degree first, then lexicographic by generator position."""
        return (len(word), tuple(self._index[g] for g in word))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Presentation):
            return NotImplemented
        return self._hash == other._hash and self.generators == other.generators and self.rules == other.rules

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Presentation({self.name or ','.join(self.generators)})"

    # -- rewriting -----------------------------------------------------

    def _first_match(self, word: Word):
        for pos, letter in enumerate(word):
            for _, rule in self._by_first.get(letter, ()):
                n = len(rule.lhs)
                if word[pos : pos + n] == rule.lhs:
                    return pos, rule
        return None

    def _matches(self, word: Word):
        out = []
        for pos, letter in enumerate(word):
            for _, rule in self._by_first.get(letter, ()):
                n = len(rule.lhs)
                if word[pos : pos + n] == rule.lhs:
                    out.append((pos, rule))
        return out

    def reduce_word(self, word: Word) -> dict:
        """Normal form of a single word as ``{normal word: scalar}`` (leftmost rewriting)."""
        word = tuple(word)
        cached = self._reduced.get(word)
        if cached is not None:
            return cached
        hit = self._first_match(word)
        if hit is None:
            self._check_word(word)
            result = {word: ONE}
        else:
            pos, rule = hit
            head, tail = word[:pos], word[pos + len(rule.lhs) :]
            result = {}
            for w, c in rule.rhs:
                for nw, nc in self.reduce_word(head + w + tail).items():
                    add_into(result, nw, c * nc)
        self._reduced[word] = result
        return result

    def reduce_word_randomly(self, word: Word, rng: random.Random) -> dict:
        """Rewrite at randomly chosen redexes; used to probe strategy independence."""
        matches = self._matches(tuple(word))
        if not matches:
            return {tuple(word): ONE}
        pos, rule = rng.choice(matches)
        head, tail = word[:pos], word[pos + len(rule.lhs) :]
        result: dict = {}
        for w, c in rule.rhs:
            for nw, nc in self.reduce_word_randomly(head + w + tail, rng).items():
                add_into(result, nw, c * nc)
        return result

    def normalize_terms(self, raw: Mapping[Word, ScalarLike] | Iterable) -> dict:
        items = raw.items() if isinstance(raw, Mapping) else raw
        out: dict = {}
        for w, c in items:
            c = as_scalar(c)
            if not c:
                continue
            for nw, nc in self.reduce_word(tuple(w)).items():
                add_into(out, nw, c * nc)
        return out

    def normal_form(self, raw: Mapping[Word, ScalarLike] | Iterable) -> AlgebraElement:
        return AlgebraElement(self, self.normalize_terms(raw), _trusted=True)

    def multiply_words(self, u: Word, v: Word) -> dict:
        key = (u, v)
        cached = self._products.get(key)
        if cached is None:
            cached = self.reduce_word(u + v)
            self._products[key] = cached
        return cached

    def is_irreducible(self, word: Word) -> bool:
        return self._first_match(tuple(word)) is None

    # -- element constructors -------------------------------------------

    def element(self, x) -> AlgebraElement:
        """Build an element from a word, a generator name, a scalar, or ``{word: scalar}``."""
        if isinstance(x, AlgebraElement):
            return x
        if isinstance(x, (int, Fraction, LaurentScalar)):
            return self.one().scale(x)
        if isinstance(x, str):
            if x == "1":
                return self.one()
            self._check_word((x,))
            return self.normal_form({(x,): ONE})
        if isinstance(x, tuple):
            self._check_word(x)
            return self.normal_form({x: ONE})
        return self.normal_form(x)

    def gen(self, name: str) -> AlgebraElement:
        self._check_word((name,))
        return self.element(name)

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {(): ONE}, _trusted=True)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {}, _trusted=True)

    # -- confluence and bases ---------------------------------------------

    def full_overlap_degree(self) -> int:
        if not self.rules:
            return 0
        longest = sorted((len(r.lhs) for r in self.rules), reverse=True)
        return longest[0] + (longest[1] if len(longest) > 1 else longest[0]) - 1

    def confluence(self) -> ConfluenceReport:
        if self._confluence is None:
            self._confluence = local_confluence_check(self, self.full_overlap_degree())
        return self._confluence

    def require_confluent(self) -> None:
        report = self.confluence()
        if not report.confluent:
            raise NotConfluent(f"{self!r} has unresolved critical pairs: {report.unresolved[0]}")

    def basis(self, d: int) -> list[Word]:
        """All irreducible words of length <= d, ordered by degree then lexicographically."""
        self.require_confluent()
        cached = self._basis.get(d)
        if cached is not None:
            return list(cached)
        layer = [()]
        words = [()]
        suffix_lhs = {r.lhs for r in self.rules}
        for _ in range(d):
            nxt = []
            for w in layer:
                for g in self.generators:
                    cand = w + (g,)
                    if not any(cand[len(cand) - len(lhs) :] == lhs for lhs in suffix_lhs if len(lhs) <= len(cand)):
                        nxt.append(cand)
            layer = nxt
            words.extend(nxt)
        words.sort(key=self.word_key)
        self._basis[d] = words
        return list(words)


def enumerate_basis(p: Presentation, d: int) -> list[Word]:
    return p.basis(d)


def local_confluence_check(p: Presentation, overlap_degree: int) -> ConfluenceReport:
    """Join every overlap and inclusion of rule left-hand sides up to ``overlap_degree``."""
    examined = 0
    unresolved = []

    def rewrite_at(word, pos, rule):
        head, tail = word[:pos], word[pos + len(rule.lhs) :]
        return p.normal_form({head + w + tail: c for w, c in rule.rhs})

    for (i, r1), (j, r2) in itertools.product(enumerate(p.rules), repeat=2):
        a, b = r1.lhs, r2.lhs
        sites = []
        # proper overlaps: suffix of a equals prefix of b
        for k in range(1, min(len(a), len(b))):
            if a[-k:] == b[:k]:
                sites.append((a + b[k:], len(a) - k))
        # inclusions: b occurs inside a
        if i != j and len(b) <= len(a):
            for pos in range(len(a) - len(b) + 1):
                if a[pos : pos + len(b)] == b:
                    sites.append((a, pos))
        for word, pos in sites:
            if len(word) > overlap_degree:
                continue
            examined += 1
            left = rewrite_at(word, 0, r1)
            right = rewrite_at(word, pos, r2)
            if left != right:
                unresolved.append(CriticalPair(word, (i, j), left, right))
    return ConfluenceReport(overlap_degree, examined, unresolved)


class AlgebraElement:
    """A linear combination of normal-form words."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Presentation, terms: Mapping[Word, ScalarLike], _trusted: bool = False):
        self.algebra = algebra
        self.terms = dict(terms) if _trusted else algebra.normalize_terms(terms)

    def _coerce(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise PresentationError("elements of different algebras")
            return other
        return self.algebra.one().scale(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            add_into(out, w, c)
        return AlgebraElement(self.algebra, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {w: -c for w, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s: ScalarLike) -> AlgebraElement:
        s = as_scalar(s)
        if not s:
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {w: s * c for w, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                c = cu * cv
                for w, cw in self.algebra.multiply_words(u, v).items():
                    add_into(out, w, c * cw)
        return AlgebraElement(self.algebra, out, _trusted=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, LaurentScalar)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.algebra.word_key(kv[0]))

    def __str__(self):
        return render_terms(dict(self.sorted_terms()), render_word)

    def __repr__(self):
        return f"AlgebraElement({self})"

"""Line-oriented text format for presentations, Hopf structures, maps and modules.

A presentation file::

    name Eq2
    gen z zbar a abar
    order z < zbar < a < abar
    rule a*z -> q^-1 * z*a
    rule z*zbar -> 1
    coproduct a -> a(x)1 + z(x)a
    counit a -> 0
    antipode a -> -1 * zbar*a

A map file has ``pi <generator> -> <expression in the target>`` lines; a
module file has ``basis``, an optional ``side left|right`` and
``act <generator> <label> -> <combination of labels>`` lines.  ``#`` starts a
comment.  Expressions use ``+ - *``, parentheses, rationals like ``3/2``,
``q`` and ``q^-2``; ``(x)`` is the tensor sign and binds tighter than ``+``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .algebra import Presentation, RewriteRule, Word
from .errors import DSLSyntaxError, UnknownGenerator
from .hopf import HopfAlgebra
from .representations import LEFT, RIGHT, ActionStructure, Carrier, matrix_action
from .scalars import ONE, LaurentScalar
from .tensor import AlgFactor, Space, TensorElement

__all__ = [
    "parse_expression",
    "parse_presentation",
    "parse_hopf",
    "parse_map",
    "parse_module",
    "load_hopf",
    "load_map",
    "load_module",
    "data_path",
    "ParsedPresentation",
]

DATA_DIR = Path(__file__).with_name("data")

_TOKEN = re.compile(r"\s*(?:(?P<tensor>\(x\))|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^()]))")


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise DSLSyntaxError(f"unexpected character {text[start]!r}", line, col0 + start)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), col0 + m.start(kind)))
        pos = m.end()
    return toks


class _ExprParser:
    """Recursive descent over one right-hand side; results are free (unreduced) sums."""

    def __init__(self, text: str, idents: Iterable[str], line: int, col0: int):
        self.toks = _tokenize(text, line, col0)
        self.idents = set(idents)
        self.line = line
        self.end_col = col0 + len(text)
        self.i = 0

    def error(self, message: str, tok: _Tok | None = None):
        col = tok.col if tok else self.end_col
        raise DSLSyntaxError(message, self.line, col)

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> _Tok:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        self.i += 1
        return tok

    def expect(self, text: str):
        tok = self.take()
        if tok.text != text:
            self.error(f"expected {text!r}, found {tok.text!r}", tok)

    def parse(self) -> dict:
        if not self.toks:
            self.error("empty expression")
        out = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek().text!r}", self.peek())
        return out

    def expr(self) -> dict:
        sign = 1
        tok = self.peek()
        if tok and tok.text in "+-" and tok.kind == "op":
            self.take()
            sign = -1 if tok.text == "-" else 1
        out: dict = {}
        arity = None
        while True:
            term = self.tensor_term()
            for k, c in term.items():
                if arity is None:
                    arity = len(k)
                elif len(k) != arity:
                    self.error("terms with different numbers of tensor factors")
                _add(out, k, c * sign)
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                break
            self.take()
            sign = -1 if tok.text == "-" else 1
        return out

    def tensor_term(self) -> dict:
        legs = [self.product()]
        while self.peek() is not None and self.peek().kind == "tensor":
            self.take()
            legs.append(self.product())
        out = {(): ONE}
        for leg in legs:
            nxt: dict = {}
            for k, c in out.items():
                for (w,), cw in leg.items():
                    _add(nxt, k + (w,), c * cw)
            out = nxt
        return out

    def product(self) -> dict:
        out = self.factor()
        while self.peek() is not None and self.peek().text == "*":
            self.take()
            rhs = self.factor()
            nxt: dict = {}
            for (u,), c in out.items():
                for (v,), d in rhs.items():
                    _add(nxt, (u + v,), c * d)
            out = nxt
        return out

    def factor(self) -> dict:
        tok = self.take()
        if tok.kind == "num":
            return {((),): LaurentScalar.constant(Fraction(tok.text))}
        if tok.text == "-" and tok.kind == "op":
            return {k: -c for k, c in self.factor().items()}
        if tok.kind == "ident" and tok.text == "q":
            exponent = 1
            if self.peek() is not None and self.peek().text == "^":
                self.take()
                neg = False
                if self.peek() is not None and self.peek().text == "-":
                    self.take()
                    neg = True
                num = self.take()
                if num.kind != "num" or "/" in num.text:
                    self.error("exponent of q must be an integer", num)
                exponent = -int(num.text) if neg else int(num.text)
            return {((),): LaurentScalar.monomial(exponent)}
        if tok.kind == "ident":
            if tok.text not in self.idents:
                raise UnknownGenerator(f"unknown generator {tok.text!r} (line {self.line}, col {tok.col})")
            return {((tok.text,),): ONE}
        if tok.text == "(":
            inner = self.expr()
            self.expect(")")
            if any(len(k) != 1 for k in inner):
                self.error("tensor products cannot be nested inside parentheses", tok)
            return inner
        self.error(f"unexpected {tok.text!r}", tok)


def _add(acc: dict, key, coeff: LaurentScalar):
    total = acc.get(key, LaurentScalar()) + coeff
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def parse_expression(text: str, idents: Iterable[str], line: int = 1, col0: int = 1) -> dict:
    """Free sum ``{(word, ...): scalar}``; one word per tensor factor."""
    return _ExprParser(text, idents, line, col0).parse()


def _scalar_of(free: dict, parser_line: int, col: int) -> LaurentScalar:
    total = LaurentScalar()
    for k, c in free.items():
        if k != ((),):
            raise DSLSyntaxError("expected a scalar", parser_line, col)
        total = total + c
    return total


# -- statements ------------------------------------------------------------


@dataclass
class _Stmt:
    keyword: str
    args: str
    line: int
    col: int  # column of args


def _statements(text: str) -> list[_Stmt]:
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        stripped = body.lstrip()
        lead = len(body) - len(stripped)
        keyword, _, rest = stripped.partition(" ")
        args_col = lead + len(keyword) + 2 + (len(rest) - len(rest.lstrip()))
        out.append(_Stmt(keyword, rest.strip(), n, args_col))
    if not out:
        raise DSLSyntaxError("empty input", 1, 1)
    return out


def _split_arrow(stmt: _Stmt) -> tuple[str, str, int]:
    if "->" not in stmt.args:
        raise DSLSyntaxError(f"expected '->' in {stmt.keyword} statement", stmt.line, stmt.col + len(stmt.args))
    lhs, rhs = stmt.args.split("->", 1)
    rhs_col = stmt.col + len(lhs) + 2 + (len(rhs) - len(rhs.lstrip()))
    return lhs.strip(), rhs.strip(), rhs_col


def _word(text: str, gens: Iterable[str], line: int, col: int) -> Word:
    free = parse_expression(text, gens, line, col)
    if len(free) != 1:
        raise DSLSyntaxError("expected a single word", line, col)
    ((word,), c), = free.items()
    if c != ONE:
        raise DSLSyntaxError("expected a word without coefficient", line, col)
    return word


@dataclass
class ParsedPresentation:
    presentation: Presentation
    hopf: HopfAlgebra | None


def parse_presentation(text: str, check_confluence: bool = True) -> ParsedPresentation:
    """Parse a presentation file, with its Hopf structure when one is given."""
    stmts = _statements(text)
    name = ""
    gens: list[str] = []
    order: list[str] | None = None
    rule_stmts, coproduct, counit, antipode = [], {}, {}, {}
    for st in stmts:
        if st.keyword == "name":
            name = st.args
        elif st.keyword == "gen":
            for g in st.args.split():
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", g):
                    raise DSLSyntaxError(f"bad generator name {g!r}", st.line, st.col + st.args.index(g))
                gens.append(g)
        elif st.keyword == "order":
            order = [p.strip() for p in st.args.split("<")]
        elif st.keyword in ("rule", "coproduct", "counit", "antipode"):
            if st.keyword == "rule":
                rule_stmts.append(st)
            else:
                target = {"coproduct": coproduct, "counit": counit, "antipode": antipode}[st.keyword]
                lhs, rhs, rhs_col = _split_arrow(st)
                if lhs not in gens:
                    raise UnknownGenerator(f"unknown generator {lhs!r} (line {st.line}, col {st.col})")
                if lhs in target:
                    raise DSLSyntaxError(f"duplicate {st.keyword} for {lhs}", st.line, st.col)
                target[lhs] = (rhs, rhs_col, st.line)
        else:
            raise DSLSyntaxError(f"unknown statement {st.keyword!r}", st.line, st.col - len(st.keyword) - 1)
    if not gens:
        raise DSLSyntaxError("no generators declared", stmts[0].line, 1)
    if order is not None:
        if sorted(order) != sorted(gens):
            raise DSLSyntaxError("order must list every generator exactly once", next(s.line for s in stmts if s.keyword == "order"), 1)
        gens = order
    rules = []
    for st in rule_stmts:
        lhs, rhs, rhs_col = _split_arrow(st)
        word = _word(lhs, gens, st.line, st.col)
        free = parse_expression(rhs, gens, st.line, rhs_col)
        mapping: dict = {}
        for (w,), c in free.items():
            _add(mapping, w, c)
        rules.append(RewriteRule.make(word, mapping))
    p = Presentation(tuple(gens), rules, name=name)
    if check_confluence:
        p.require_confluent()
    if not coproduct and not counit and not antipode:
        return ParsedPresentation(p, None)
    h2 = Space((AlgFactor(p), AlgFactor(p)))
    cop = {}
    for g, (rhs, col, line) in coproduct.items():
        free = parse_expression(rhs, gens, line, col)
        if any(len(k) != 2 for k in free):
            raise DSLSyntaxError("coproduct must be a sum of two-fold tensors", line, col)
        cop[g] = TensorElement(h2, _normal_tensor(p, free))
    cou = {g: _scalar_of(parse_expression(rhs, gens, line, col), line, col) for g, (rhs, col, line) in counit.items()}
    anti = None
    if antipode:
        anti = {}
        for g, (rhs, col, line) in antipode.items():
            free = parse_expression(rhs, gens, line, col)
            anti[g] = p.normal_form({w: c for (w,), c in free.items()})
    return ParsedPresentation(p, HopfAlgebra(p, cop, cou, anti, name=name))


def _normal_tensor(p: Presentation, free: dict) -> dict:
    out: dict = {}
    for words, c in free.items():
        partial = {(): c}
        for w in words:
            nxt: dict = {}
            for head, hc in partial.items():
                for nw, nc in p.reduce_word(w).items():
                    _add(nxt, head + (nw,), hc * nc)
            partial = nxt
        for k, v in partial.items():
            _add(out, k, v)
    return out


def parse_hopf(text: str) -> HopfAlgebra:
    parsed = parse_presentation(text)
    if parsed.hopf is None:
        raise DSLSyntaxError("no coproduct/counit given", 1, 1)
    return parsed.hopf


def parse_map(text: str, source: HopfAlgebra, target: HopfAlgebra, keyword: str = "pi") -> dict:
    """Generator images ``{g: AlgebraElement of target}`` from ``pi g -> expr`` lines."""
    images = {}
    for st in _statements(text):
        if st.keyword != keyword:
            raise DSLSyntaxError(f"expected {keyword!r} statement", st.line, 1)
        lhs, rhs, rhs_col = _split_arrow(st)
        if lhs not in source.algebra.generators:
            raise UnknownGenerator(f"unknown generator {lhs!r} (line {st.line}, col {st.col})")
        free = parse_expression(rhs, target.algebra.generators, st.line, rhs_col)
        images[lhs] = target.algebra.normal_form({w: c for (w,), c in free.items()})
    missing = [g for g in source.algebra.generators if g not in images]
    if missing:
        raise DSLSyntaxError(f"no image given for {', '.join(missing)}", len(text.splitlines()) or 1, 1)
    return images


def parse_module(text: str, hd: HopfAlgebra, id: str = "L") -> ActionStructure:
    """A finite-dimensional module from ``basis``/``side``/``act`` lines; unlisted actions are zero."""
    labels: list[str] = []
    side = LEFT
    mats: dict = {g: {} for g in hd.algebra.generators}
    acts = []
    for st in _statements(text):
        if st.keyword == "basis":
            labels.extend(st.args.split())
        elif st.keyword == "side":
            if st.args not in (LEFT, RIGHT):
                raise DSLSyntaxError("side must be left or right", st.line, st.col)
            side = st.args
        elif st.keyword == "act":
            acts.append(st)
        else:
            raise DSLSyntaxError(f"unknown statement {st.keyword!r}", st.line, 1)
    if not labels:
        raise DSLSyntaxError("no basis declared", 1, 1)
    for st in acts:
        lhs, rhs, rhs_col = _split_arrow(st)
        parts = lhs.split()
        if len(parts) != 2:
            raise DSLSyntaxError("expected 'act <generator> <label> -> ...'", st.line, st.col)
        g, lab = parts
        if g not in mats:
            raise UnknownGenerator(f"unknown generator {g!r} (line {st.line}, col {st.col})")
        if lab not in labels:
            raise DSLSyntaxError(f"unknown basis label {lab!r}", st.line, st.col + lhs.index(lab))
        col: dict = {}
        for (w,), c in parse_expression(rhs, labels, st.line, rhs_col).items():
            if len(w) > 1:
                raise DSLSyntaxError("module images must be linear in the basis", st.line, rhs_col)
            if not w:
                if c:
                    raise DSLSyntaxError("module images need a basis label", st.line, rhs_col)
                continue
            col[w[0]] = col.get(w[0], LaurentScalar()) + c
        mats[g][lab] = col
    return matrix_action(hd, Carrier.finite(id, labels), mats, side)


def data_path(name: str) -> Path:
    """Resolve ``name`` as given, falling back to the files shipped with the package."""
    p = Path(name)
    if p.exists():
        return p
    shipped = DATA_DIR / name
    if shipped.exists():
        return shipped
    raise FileNotFoundError(name)


def load_hopf(path: str) -> HopfAlgebra:
    return parse_hopf(data_path(path).read_text())


def load_map(path: str, source: HopfAlgebra, target: HopfAlgebra) -> dict:
    return parse_map(data_path(path).read_text(), source, target)


def load_module(path: str, hd: HopfAlgebra) -> ActionStructure:
    return parse_module(data_path(path).read_text(), hd)

"""Dense-matrix oracle for finite-dimensional instances.

Everything here is plain linear algebra over the rationals: structure maps are
``numpy`` object arrays of :class:`~fractions.Fraction`, vectors of tensor
products are indexed in Kronecker order, and every diagram is checked
exhaustively on the full basis.  Group algebras are built from the group law alone, so agreement with
the symbolic engine is a genuine second opinion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import EvaluationMismatch
from .hopf import HopfAlgebra
from .report import Finding, Report
from .tensor import TENSOR_SIGN

__all__ = [
    "DenseSpace",
    "DenseHopf",
    "DenseModule",
    "DenseComodule",
    "dense_axioms_check",
    "dense_module_check",
    "dense_comodule_check",
    "dense_hopf_module_check",
    "dense_canonical_phi",
    "dense_canonical_psi",
    "dense_type1_check",
    "dense_type2_check",
    "dense_full_check",
    "dense_regular",
    "dense_example_262",
    "dense_induced",
    "DenseInduced",
    "dense_matrix_module",
    "cyclic_quotient_matrix",
    "trivial_eta_matrix",
    "finite_basis",
    "dense_space_of",
    "dense_from_map",
    "oracle_crosscheck",
]

LEFT, RIGHT = "left", "right"


def exact(x) -> int | Fraction:
    """Integral values are kept as ``int``, which is much faster than ``Fraction`` in object arrays."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.full((rows, cols), 0, dtype=object)


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


class Op:
    """A linear map ``K^in -> K^out`` applied to blocks of column vectors.

    Tensor products and permutations act axis by axis on reshaped blocks, so
    no large Kronecker or permutation matrix is ever formed.
    """

    def __init__(self, dims_in: tuple, dims_out: tuple, fn):
        self.dims_in = tuple(dims_in)
        self.dims_out = tuple(dims_out)
        self.fn = fn

    @property
    def n_in(self) -> int:
        return int(np.prod(self.dims_in, dtype=int))

    @property
    def n_out(self) -> int:
        return int(np.prod(self.dims_out, dtype=int))

    def __call__(self, X: np.ndarray) -> np.ndarray:
        if X.shape[0] != self.n_in:
            raise ValueError(f"operator expects {self.n_in} rows, got {X.shape[0]}")
        return self.fn(X)

    def __matmul__(self, other: Op) -> Op:
        """Composition ``self o other``."""
        if other.n_out != self.n_in:
            raise ValueError(f"cannot compose {self.n_in} after {other.n_out}")
        return Op(other.dims_in, self.dims_out, lambda X: self.fn(other.fn(X)))

    def matrix(self) -> np.ndarray:
        return self(eye(self.n_in))


def mat(M: np.ndarray) -> Op:
    return Op((M.shape[1],), (M.shape[0],), lambda X: M @ X)


def ident(n: int) -> Op:
    return Op((n,), (n,), lambda X: X)


def kron(*ops: Op) -> Op:
    """Tensor product of operators, each acting on its own factor."""
    dims_in = tuple(op.n_in for op in ops)
    dims_out = tuple(op.n_out for op in ops)

    def apply(X):
        cols = X.shape[1]
        Y = X.reshape(dims_in + (cols,))
        for i, op in enumerate(ops):
            moved = np.moveaxis(Y, i, 0)
            shape = moved.shape
            out = op(moved.reshape(shape[0], -1))
            Y = np.moveaxis(out.reshape((op.n_out,) + shape[1:]), 0, i)
        return Y.reshape(-1, cols)

    return Op(dims_in, dims_out, apply)


def permutation(dims: Sequence[int], perm: Sequence[int]) -> Op:
    """Output factor ``i`` is input factor ``perm[i]``."""
    dims = tuple(dims)
    out_dims = tuple(dims[p] for p in perm)

    def apply(X):
        cols = X.shape[1]
        return np.transpose(X.reshape(dims + (cols,)), tuple(perm) + (len(dims),)).reshape(-1, cols)

    return Op(dims, out_dims, apply)


def swap(dims: Sequence[int], i: int) -> Op:
    perm = list(range(len(dims)))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return permutation(dims, perm)


def _to_sympy(M: np.ndarray):
    import sympy

    return sympy.Matrix(M.shape[0], M.shape[1], lambda i, j: sympy.Rational(M[i, j].numerator, M[i, j].denominator))


def _from_sympy(S) -> np.ndarray:
    out = zeros(S.rows, S.cols)
    for i in range(S.rows):
        for j in range(S.cols):
            out[i, j] = exact(Fraction(int(S[i, j].p), int(S[i, j].q)))
    return out


def rational_nullspace(M: np.ndarray) -> np.ndarray:
    """Columns spanning the kernel, computed exactly."""
    rows, cols = M.shape
    if rows == 0:
        return eye(cols)
    basis = _to_sympy(M).nullspace()
    out = zeros(cols, len(basis))
    for k, vec in enumerate(basis):
        out[:, k] = _from_sympy(vec)[:, 0]
    return out


def rank(M: np.ndarray) -> int:
    return 0 if M.size == 0 else _to_sympy(M).rank()


@dataclass(frozen=True)
class DenseSpace:
    """A tensor product of finite bases, indexed in Kronecker order."""

    factors: tuple

    @property
    def dims(self) -> tuple:
        return tuple(len(f) for f in self.factors)

    @property
    def dim(self) -> int:
        return int(np.prod(self.dims)) if self.factors else 1

    def __matmul__(self, other: DenseSpace) -> DenseSpace:
        return DenseSpace(self.factors + other.factors)

    def render(self, index: int) -> str:
        if not self.factors:
            return "1"
        idx = np.unravel_index(index, self.dims)
        return TENSOR_SIGN.join(f[i] for f, i in zip(self.factors, idx))


def render_vector(space: DenseSpace, vec) -> str:
    parts = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        label = space.render(i)
        parts.append(label if c == 1 else f"{c}*{label}")
    return " + ".join(parts) if parts else "0"


def _compare(check: str, diagram: str, lhs: Op, rhs: Op, tests: np.ndarray, space: DenseSpace, out_space: DenseSpace) -> Finding:
    """Compare ``lhs`` and ``rhs`` on each column of ``tests``; the first difference is the witness."""
    a, b = lhs(tests), rhs(tests)
    for k in range(tests.shape[1]):
        if not np.array_equal(a[:, k], b[:, k]):
            return Finding(check, diagram, False, k + 1, render_vector(space, tests[:, k]), render_vector(out_space, a[:, k]), render_vector(out_space, b[:, k]))
    return Finding(check, diagram, True, tests.shape[1])


@dataclass
class DenseHopf:
    """Structure matrices; ``m`` is ``n x n^2`` and ``delta`` is ``n^2 x n`` in Kronecker order."""

    name: str
    labels: tuple
    m: np.ndarray
    u: np.ndarray
    delta: np.ndarray
    eps: np.ndarray
    S: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def space(self) -> DenseSpace:
        return DenseSpace((self.labels,))

    @property
    def M(self) -> Op:
        return Op((self.n, self.n), (self.n,), lambda X: self.m @ X)

    @property
    def U(self) -> Op:
        return mat(self.u)

    @property
    def D(self) -> Op:
        return Op((self.n,), (self.n, self.n), lambda X: self.delta @ X)

    @property
    def E(self) -> Op:
        return mat(self.eps)

    @property
    def I(self) -> Op:
        return ident(self.n)

    @classmethod
    def group_algebra(cls, n: int) -> DenseHopf:
        """``K[C_n]`` from the group law: ``e_i e_j = e_(i+j mod n)``, grouplike basis."""
        labels = tuple("1" if k == 0 else "*".join(["g"] * k) for k in range(n))
        m, delta, eps, S, u = zeros(n, n * n), zeros(n * n, n), zeros(1, n), zeros(n, n), zeros(n, 1)
        for i in range(n):
            for j in range(n):
                m[(i + j) % n, i * n + j] = 1
            delta[i * n + i, i] = 1
            eps[0, i] = 1
            S[(-i) % n, i] = 1
        u[0, 0] = 1
        return cls(f"C{n}", labels, m, u, delta, eps, S)

    @classmethod
    def from_symbolic(cls, hd: HopfAlgebra, q0: Fraction = Fraction(2), max_degree: int = 16) -> DenseHopf:
        """Evaluate a finite-dimensional symbolic instance at ``q = q0``."""
        words = None
        for d in range(max_degree + 1):
            if len(hd.basis(d)) == len(hd.basis(d + 1)):
                words = hd.basis(d)
                break
        if words is None:
            raise ValueError(f"{hd.name} has no finite basis up to degree {max_degree}")
        index = {w: i for i, w in enumerate(words)}
        n = len(words)
        m, delta, eps, u = zeros(n, n * n), zeros(n * n, n), zeros(1, n), zeros(n, 1)
        S = zeros(n, n) if hd.has_antipode else None
        for i, w in enumerate(words):
            for j, v in enumerate(words):
                for x, c in hd.algebra.multiply_words(w, v).items():
                    m[index[x], i * n + j] = exact(c.evaluate(q0))
            for (x, y), c in hd.delta_word(w).terms.items():
                delta[index[x] * n + index[y], i] = exact(c.evaluate(q0))
            eps[0, i] = exact(hd.eps_word(w).evaluate(q0))
            if S is not None:
                for x, c in hd.antipode_word(w).terms.items():
                    S[index[x], i] = exact(c.evaluate(q0))
        u[index[()], 0] = 1
        labels = tuple("*".join(w) if w else "1" for w in words)
        return cls(hd.name, labels, m, u, delta, eps, S)


def dense_axioms_check(H: DenseHopf) -> Report:
    n, I = H.n, H.I
    sp = H.space
    report = Report(f"dense-axioms[{H.name}]")
    tests = eye(n)
    report.add(_compare("coassociativity", "(4)", kron(H.D, I) @ H.D, kron(I, H.D) @ H.D, tests, sp, sp @ sp @ sp))
    report.add(_compare("counit-left", "(3)", kron(H.E, I) @ H.D, I, tests, sp, sp))
    report.add(_compare("counit-right", "(3)", kron(I, H.E) @ H.D, I, tests, sp, sp))
    report.add(_compare("algebra-associativity", "m(m(x)id)", H.M @ kron(H.M, I), H.M @ kron(I, H.M), eye(n**3), sp @ sp @ sp, sp))
    mid = kron(I, swap((n, n), 0), I)
    report.add(_compare("coproduct-multiplicative", "algebra-map", H.D @ H.M, kron(H.M, H.M) @ mid @ kron(H.D, H.D), eye(n * n), sp @ sp, sp @ sp))
    report.add(_compare("counit-multiplicative", "algebra-map", H.E @ H.M, kron(H.E, H.E), eye(n * n), sp @ sp, DenseSpace(())))
    report.add(_compare("coproduct-unit", "algebra-map", H.D @ H.U, kron(H.U, H.U), eye(1), DenseSpace(()), sp @ sp))
    if H.S is not None:
        ue = H.U @ H.E
        S = mat(H.S)
        report.add(_compare("antipode-left", "m(S(x)id)Delta", H.M @ kron(S, I) @ H.D, ue, tests, sp, sp))
        report.add(_compare("antipode-right", "m(id(x)S)Delta", H.M @ kron(I, S) @ H.D, ue, tests, sp, sp))
    return report


@dataclass
class DenseModule:
    """``action`` maps ``H (x) W`` (left) or ``W (x) H`` (right) to ``W``."""

    hopf: DenseHopf
    space: DenseSpace
    side: str
    action: Op


@dataclass
class DenseComodule:
    hopf: DenseHopf
    space: DenseSpace
    side: str
    coaction: Op


def _place(side: str, hop: Op, wop: Op) -> Op:
    return kron(hop, wop) if side == LEFT else kron(wop, hop)


def _hw(side: str, H: DenseHopf, space: DenseSpace) -> DenseSpace:
    return H.space @ space if side == LEFT else space @ H.space


def _kron_cols(side: str, h: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Columns ``h_i (x) w_j`` (left) or ``w_j (x) h_i`` (right) in the symbolic enumeration order."""
    return np.kron(h, w) if side == LEFT else np.kron(w, h)


def dense_module_check(mod: DenseModule, tests_w: np.ndarray | None = None) -> Report:
    """Unit and associativity; ``tests_w`` restricts ``W`` to a subspace given by columns."""
    H, side, A = mod.hopf, mod.side, mod.action
    dw = mod.space.dim
    Iw = ident(dw)
    tw = eye(dw) if tests_w is None else tests_w
    report = Report(f"dense-module[{H.name}]")
    report.add(_compare("module-unit", "(1)", A @ _place(side, H.U, Iw), Iw, tw, mod.space, mod.space))
    lhs = A @ _place(side, H.I, A)
    rhs = A @ _place(side, H.M, Iw)
    tests = _kron_cols(side, eye(H.n * H.n), tw)
    report.add(_compare("module-associativity", "(2)", lhs, rhs, tests, _hw(side, H, _hw(side, H, mod.space)), mod.space))
    return report


def dense_comodule_check(co: DenseComodule, tests_w: np.ndarray | None = None) -> Report:
    H, side, B = co.hopf, co.side, co.coaction
    dw = co.space.dim
    Iw = ident(dw)
    tw = eye(dw) if tests_w is None else tests_w
    report = Report(f"dense-comodule[{H.name}]")
    report.add(_compare("comodule-counit", "(3)", _place(side, H.E, Iw) @ B, Iw, tw, co.space, co.space))
    lhs = _place(side, H.D, Iw) @ B
    rhs = _place(side, H.I, B) @ B
    report.add(_compare("comodule-coassociativity", "(4)", lhs, rhs, tw, co.space, _hw(side, H, _hw(side, H, co.space))))
    return report


def _spread_swap(side: str, n: int, dw: int) -> Op:
    """The middle twist of ``H (x) H (x) H (x) W`` (left) or ``W (x) H (x) H (x) H`` (right)."""
    if side == LEFT:
        return kron(ident(n), swap((n, n), 0), ident(dw))
    return kron(ident(dw), swap((n, n), 0), ident(n))


def dense_canonical_phi(mod: DenseModule) -> DenseModule:
    """``x.(h (x) w) = x1 h (x) x2.w`` (mirrored for right)."""
    H, side, A = mod.hopf, mod.side, mod.action
    n, dw = H.n, mod.space.dim
    if side == LEFT:
        phi = kron(H.M, A) @ _spread_swap(side, n, dw) @ kron(H.D, H.I, ident(dw))
    else:
        phi = kron(A, H.M) @ _spread_swap(side, n, dw) @ kron(ident(dw), H.I, H.D)
    return DenseModule(H, _hw(side, H, mod.space), side, phi)


def dense_canonical_psi(co: DenseComodule) -> DenseComodule:
    """``h (x) w -> h1 w(-1) (x) h2 (x) w(0)`` (mirrored for right)."""
    H, side, B = co.hopf, co.side, co.coaction
    n, dw = H.n, co.space.dim
    if side == LEFT:
        psi = kron(H.M, H.I, ident(dw)) @ _spread_swap(side, n, dw) @ kron(H.D, B)
    else:
        psi = kron(ident(dw), H.I, H.M) @ _spread_swap(side, n, dw) @ kron(B, H.D)
    return DenseComodule(H, _hw(side, H, co.space), side, psi)


def _nine_rhs(mod: DenseModule, co: DenseComodule) -> Op:
    H, side = mod.hopf, mod.side
    n, dw = H.n, mod.space.dim
    if side == LEFT:
        return kron(H.M, mod.action) @ _spread_swap(side, n, dw) @ kron(H.D, co.coaction)
    return kron(mod.action, H.M) @ _spread_swap(side, n, dw) @ kron(co.coaction, H.D)


def dense_hopf_module_check(mod: DenseModule, co: DenseComodule, tests_w: np.ndarray | None = None) -> Report:
    """Diagram (9)."""
    H, side = mod.hopf, mod.side
    tw = eye(mod.space.dim) if tests_w is None else tests_w
    report = Report(f"dense-hopf-module[{H.name}]")
    out = _hw(side, H, mod.space)
    report.add(_compare("hopf-module", "(9)", co.coaction @ mod.action, _nine_rhs(mod, co), _kron_cols(side, eye(H.n), tw), out, out))
    return report


def _module_hom(f: Op, m1: DenseModule, m2: DenseModule, tests: np.ndarray) -> Finding:
    lhs = f @ m1.action
    rhs = m2.action @ _place(m1.side, m1.hopf.I, f)
    return _compare("module-hom", "(5)", lhs, rhs, tests, _hw(m1.side, m1.hopf, m1.space), m2.space)


def _comodule_hom(f: Op, c1: DenseComodule, c2: DenseComodule, tests: np.ndarray) -> Finding:
    lhs = _place(c1.side, c1.hopf.I, f) @ c1.coaction
    rhs = c2.coaction @ f
    return _compare("comodule-hom", "(6)", lhs, rhs, tests, c1.space, _hw(c1.side, c1.hopf, c2.space))


def dense_type1_check(mod: DenseModule, co: DenseComodule, phi: DenseModule, tests_w: np.ndarray | None = None) -> Report:
    H, side = mod.hopf, mod.side
    tw = eye(mod.space.dim) if tests_w is None else tests_w
    hw = _kron_cols(side, eye(H.n), tw)
    report = Report("dense-hopf-rep-1")
    report.extend(dense_module_check(mod, tw), "alpha:")
    report.extend(dense_comodule_check(co, tw), "beta:")
    report.extend(dense_module_check(phi, hw), "phi:")
    hom = Report("")
    hom.add(_module_hom(co.coaction, mod, phi, hw))
    report.extend(hom, "beta-vs-phi:")
    return report


def dense_type2_check(mod: DenseModule, co: DenseComodule, psi: DenseComodule, tests_w: np.ndarray | None = None) -> Report:
    H, side = mod.hopf, mod.side
    tw = eye(mod.space.dim) if tests_w is None else tests_w
    hw = _kron_cols(side, eye(H.n), tw)
    report = Report("dense-hopf-rep-2")
    report.extend(dense_module_check(mod, tw), "alpha:")
    report.extend(dense_comodule_check(co, tw), "beta:")
    report.extend(dense_comodule_check(psi, hw), "psi:")
    hom = Report("")
    hom.add(_comodule_hom(mod.action, psi, co, hw))
    report.extend(hom, "alpha-vs-psi:")
    return report


def dense_full_check(mod: DenseModule, co: DenseComodule, phi: DenseModule, psi: DenseComodule) -> Report:
    report = Report("dense-hopf-rep")
    report.extend(dense_type1_check(mod, co, phi), "type1:")
    report.extend(dense_type2_check(mod, co, psi), "type2:")
    return report


# -- instances ---------------------------------------------------------------


def dense_regular(H: DenseHopf, side: str = LEFT) -> tuple[DenseModule, DenseComodule]:
    """H acting on itself by multiplication and coacting by the coproduct."""
    return DenseModule(H, H.space, side, H.M), DenseComodule(H, H.space, side, H.D)


def dense_matrix_module(H: DenseHopf, labels: Sequence[str], generator_images: Sequence[np.ndarray], side: str = LEFT) -> DenseModule:
    """Module over a group algebra from the matrix of ``g``: basis ``g^k`` acts by its k-th power."""
    dw = len(labels)
    powers = [eye(dw)]
    for _ in range(1, H.n):
        powers.append(generator_images[0] @ powers[-1])
    stacked = np.hstack(powers)  # dw x (n*dw), column block k is g^k

    if side == LEFT:
        return DenseModule(H, DenseSpace((tuple(labels),)), side, Op((H.n, dw), (dw,), lambda X: stacked @ X))
    order = permutation((dw, H.n), (1, 0))
    return DenseModule(H, DenseSpace((tuple(labels),)), side, Op((dw, H.n), (dw,), lambda X: stacked @ order(X)))


def dense_example_262(H: DenseHopf) -> tuple[DenseModule, DenseComodule, DenseModule]:
    """Right structures on ``W = H (x) H`` with the non-canonical consistency map."""
    n, I = H.n, H.I
    W = H.space @ H.space
    alpha = kron(I, H.M)
    beta = kron(I, swap((n, n), 0)) @ kron(H.D, I)
    # phi(h, h', h'', x) = h (x) h'x (x) h''
    phi = kron(I, H.M, I) @ permutation((n, n, n, n), (0, 1, 3, 2))
    return (DenseModule(H, W, RIGHT, alpha), DenseComodule(H, W, RIGHT, beta), DenseModule(H, W @ H.space, RIGHT, phi))


@dataclass
class DenseInduced:
    H: DenseHopf
    B: DenseHopf
    pi: np.ndarray
    eta: np.ndarray
    lprime: np.ndarray
    alpha: DenseModule
    beta: DenseComodule
    phi: DenseModule

    @property
    def dimension(self) -> int:
        return self.lprime.shape[1]

    def check(self) -> Report:
        report = Report(f"dense-induce[{self.H.name}->{self.B.name}]")
        n = self.H.n
        K = self.lprime
        out_a = self.alpha.action(np.kron(eye(n), K))
        out_b = self.beta.coaction(K)
        # closure: appending the images to L' (resp. H (x) L') must not raise the rank
        report.add(Finding("alpha-closure", "L'", rank(np.hstack([K, out_a])) == rank(K), out_a.shape[1]))
        report.add(Finding("beta-closure", "L'", rank(np.hstack([np.kron(eye(n), K), out_b])) == n * rank(K), out_b.shape[1]))
        report.extend(dense_type1_check(self.alpha, self.beta, self.phi, K))
        return report


def dense_induced(H: DenseHopf, B: DenseHopf, pi: np.ndarray, eta: np.ndarray, l_labels: Sequence[str]) -> DenseInduced:
    """Brute-force induction: L' is the common kernel over every ``b`` of the literal defining condition.

    ``eta`` is the ``dim L x (dim B * dim L)`` matrix of the B-module structure.
    """
    n, nb, dl = H.n, B.n, eta.shape[0]
    L = DenseSpace((tuple(l_labels),))
    P, Eta, Il = mat(pi), mat(eta), ident(dl)
    R = (kron(H.I, P) @ H.D).matrix()
    iota = np.kron(eye(n), B.u)
    blocks = []
    for b in range(nb):
        e_b = zeros(nb, 1)
        e_b[b, 0] = 1
        eta_b = eta @ np.kron(e_b, eye(dl))
        blocks.append(np.kron(R - iota, eta_b))
    lprime = rational_nullspace(np.vstack(blocks))
    hl = H.space @ L
    Eta = Op((nb, dl), (dl,), lambda X: eta @ X)
    # alpha(h, h', l) = h' (x) eta(pi(h) (x) l)
    alpha = kron(H.I, Eta) @ kron(swap((nb, n), 0), Il) @ kron(P, H.I, Il)
    beta = kron(H.D, Il)
    # phi(h, h', h'', l) = h' (x) h'' (x) eta(pi(h) (x) l)
    phi = kron(H.I, H.I, Eta) @ kron(permutation((nb, n, n), (1, 2, 0)), Il) @ kron(P, H.I, H.I, Il)
    return DenseInduced(H, B, pi, eta, lprime, DenseModule(H, hl, LEFT, alpha), DenseComodule(H, hl, LEFT, beta), DenseModule(H, H.space @ hl, LEFT, phi))


def finite_basis(factor, max_degree: int = 16) -> list:
    """The full basis of a finite-dimensional factor, in symbolic order."""
    for d in range(max_degree + 1):
        here, nxt = factor.basis(d), factor.basis(d + 1)
        if len(here) == len(nxt):
            return here
    raise ValueError(f"{factor} has no finite basis up to degree {max_degree}")


def dense_space_of(space) -> DenseSpace:
    return DenseSpace(tuple(tuple(f.render(lab) for lab in finite_basis(f)) for f in space.factors))


def dense_from_map(f, q0: Fraction = Fraction(2)) -> Op:
    """Evaluate a symbolic :class:`~hopfrep.tensor.LinearMap` between finite spaces at ``q = q0``."""
    dom = [finite_basis(x) for x in f.domain.factors]
    cod = [finite_basis(x) for x in f.codomain.factors]
    row = {t: i for i, t in enumerate(itertools.product(*cod))}
    cols = list(itertools.product(*dom))
    M = zeros(len(row), len(cols))
    for j, t in enumerate(cols):
        for k, c in f.on_basis(t).terms.items():
            M[row[k], j] = exact(c.evaluate(q0))
    return Op(tuple(len(b) for b in dom) or (1,), tuple(len(b) for b in cod) or (1,), lambda X: M @ X)


def cyclic_quotient_matrix(n: int, m: int) -> np.ndarray:
    """``e_k -> e_(k mod m)``."""
    pi = zeros(m, n)
    for k in range(n):
        pi[k % m, k] = 1
    return pi


def trivial_eta_matrix(B: DenseHopf, dl: int = 1) -> np.ndarray:
    """``eta(b (x) l) = eps(b) l``."""
    return np.kron(B.eps, eye(dl))


# -- cross-checking ------------------------------------------------------------


def oracle_crosscheck(symbolic: Report, dense: Report, q0: Fraction = Fraction(2), compare_witness: bool = True, extra: Sequence[tuple] = ()) -> Report:
    """Match every check present in both reports; any disagreement raises :class:`EvaluationMismatch`.

    ``extra`` holds ``(name, symbolic_value, dense_value)`` triples, such as dimensions.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    report = Report(f"oracle[{symbolic.title}]")
    report.notes.append(f"q0={q0}")
    dense_by_name = {f.check: f for f in dense.findings}
    shared = 0
    for f in symbolic.findings:
        g = dense_by_name.get(f.check)
        if g is None:
            continue
        shared += 1
        if f.passed != g.passed:
            raise EvaluationMismatch(f"{f.check}: symbolic {'PASS' if f.passed else 'FAIL'} vs dense {'PASS' if g.passed else 'FAIL'}")
        if compare_witness and not f.passed and f.witness != g.witness:
            raise EvaluationMismatch(f"{f.check}: symbolic witness {f.witness!r} vs dense witness {g.witness!r}")
        report.add(Finding(f"agree:{f.check}", f.diagram, True, 1, f.witness, "PASS" if f.passed else "FAIL", "PASS" if g.passed else "FAIL"))
    if not shared:
        raise EvaluationMismatch("no check in common between symbolic and dense reports")
    if symbolic.passed != dense.passed:
        raise EvaluationMismatch(f"overall: symbolic {symbolic.passed} vs dense {dense.passed}")
    for name, sv, dv in extra:
        if sv != dv:
            raise EvaluationMismatch(f"{name}: symbolic {sv} vs dense {dv}")
        report.add(Finding(f"agree:{name}", "-", True, 1, "", str(sv), str(dv)))
    report.notes.append(f"symbolic verdict {'PASS' if symbolic.passed else 'FAIL'}, dense verdict {'PASS' if dense.passed else 'FAIL'}")
    return report

"""Built-in instances: E_q(2), the translation subalgebra C[t, tbar], cyclic group algebras."""

from __future__ import annotations

from typing import Iterable

from .algebra import Presentation, RewriteRule
from .hopf import HopfAlgebra
from .induction import QuantumSubgroup, trivial_eta
from .representations import ActionStructure
from .scalars import ONE, Q, LaurentScalar, ScalarLike, as_scalar
from .tensor import AlgFactor, Space, TensorElement

__all__ = [
    "EQ2_GENERATORS",
    "eq2_presentation",
    "two_tensor",
    "make_eq2",
    "make_ak",
    "make_group_algebra",
    "make_ground_field",
    "make_eq2_pi",
    "make_eq2_pi_corrupted",
    "make_trivial_eta",
    "make_cyclic_quotient",
    "make_identity_subgroup",
    "make_counit_subgroup",
    "resolve_hopf",
    "CATALOG_NAMES",
]

EQ2_GENERATORS = ("z", "zbar", "a", "abar")


def _w(text: str) -> tuple:
    return tuple(text.split("*")) if text and text != "1" else ()


def two_tensor(p: Presentation, terms: Iterable[tuple[ScalarLike, str, str]]) -> TensorElement:
    """``sum c * u (x) v`` from normal words written like ``"z*a"``."""
    out: dict = {}
    for c, u, v in terms:
        key = (_w(u), _w(v))
        out[key] = out.get(key, LaurentScalar()) + as_scalar(c)
    return TensorElement(Space((AlgFactor(p), AlgFactor(p))), out)


def eq2_presentation() -> Presentation:
    """zz̄ = z̄z = 1, aā = āa, za = q az, zā = q āz, with z-powers pushed left."""
    qi = Q**-1
    r = RewriteRule.make
    rules = [
        r(("a", "z"), {("z", "a"): qi}),
        r(("abar", "z"), {("z", "abar"): qi}),
        r(("a", "zbar"), {("zbar", "a"): Q}),
        r(("abar", "zbar"), {("zbar", "abar"): Q}),
        r(("abar", "a"), {("a", "abar"): ONE}),
        r(("z", "zbar"), {(): ONE}),
        r(("zbar", "z"), {(): ONE}),
    ]
    return Presentation(EQ2_GENERATORS, rules, name="Eq2")


def make_eq2() -> HopfAlgebra:
    """E_q(2) with Delta(a) = a(x)1 + z(x)a and Delta(abar) = abar(x)z + 1(x)abar."""
    p = eq2_presentation()
    coproduct = {
        "z": two_tensor(p, [(1, "z", "z")]),
        "zbar": two_tensor(p, [(1, "zbar", "zbar")]),
        "a": two_tensor(p, [(1, "a", "1"), (1, "z", "a")]),
        "abar": two_tensor(p, [(1, "abar", "z"), (1, "1", "abar")]),
    }
    counit = {"z": 1, "zbar": 1, "a": 0, "abar": 0}
    antipode = {
        "z": p.gen("zbar"),
        "zbar": p.gen("z"),
        "a": -(p.gen("zbar") * p.gen("a")),
        "abar": -(p.gen("abar") * p.gen("zbar")),
    }
    return HopfAlgebra(p, coproduct, counit, antipode, name="Eq2")


def make_ak() -> HopfAlgebra:
    """C[t, tbar] with t and tbar primitive."""
    p = Presentation(("t", "tbar"), [RewriteRule.make(("tbar", "t"), {("t", "tbar"): ONE})], name="AK")
    coproduct = {
        "t": two_tensor(p, [(1, "t", "1"), (1, "1", "t")]),
        "tbar": two_tensor(p, [(1, "tbar", "1"), (1, "1", "tbar")]),
    }
    antipode = {"t": -p.gen("t"), "tbar": -p.gen("tbar")}
    return HopfAlgebra(p, coproduct, {"t": 0, "tbar": 0}, antipode, name="AK")


def make_group_algebra(n: int) -> HopfAlgebra:
    """K[C_n] on one grouplike generator g with g^n = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    p = Presentation(("g",), [RewriteRule.make(("g",) * n, {(): ONE})], name=f"C{n}")
    g = "g" if n > 1 else "1"
    coproduct = {"g": two_tensor(p, [(1, g, g)])}
    antipode = {"g": p.element({("g",) * (n - 1): ONE})}
    return HopfAlgebra(p, coproduct, {"g": 1}, antipode, name=f"C{n}")


def make_ground_field() -> HopfAlgebra:
    """The one-dimensional Hopf algebra K."""
    return HopfAlgebra(Presentation((), [], name="K"), {}, {}, {}, name="K")


def make_eq2_pi(H: HopfAlgebra | None = None, B: HopfAlgebra | None = None) -> QuantumSubgroup:
    """``pi: E_q(2) -> C[t, tbar]`` with z, zbar -> 1, a -> t, abar -> tbar."""
    H = H or make_eq2()
    B = B or make_ak()
    return QuantumSubgroup(H, B, {"z": 1, "zbar": 1, "a": "t", "abar": "tbar"}, name="Eq2->AK")


def make_eq2_pi_corrupted() -> QuantumSubgroup:
    """The broken variant with ``pi(z) = t``."""
    return QuantumSubgroup(make_eq2(), make_ak(), {"z": "t", "zbar": 1, "a": "t", "abar": "tbar"}, name="Eq2->AK(z->t)")


def make_trivial_eta(B: HopfAlgebra | None = None) -> ActionStructure:
    """``eta(p (x) c) = eps_B(p) c`` on the line spanned by ``c``."""
    return trivial_eta(B or make_ak())


def make_cyclic_quotient(n: int = 6, m: int = 3) -> QuantumSubgroup:
    """The quotient ``K[C_n] -> K[C_m]``, ``g -> g``; needs ``m | n``."""
    if m < 1 or n % m:
        raise ValueError(f"C{m} is not a quotient of C{n}")
    return QuantumSubgroup(make_group_algebra(n), make_group_algebra(m), {"g": "g" if m > 1 else 1}, name=f"C{n}->C{m}")


def make_identity_subgroup(H: HopfAlgebra) -> QuantumSubgroup:
    return QuantumSubgroup(H, H, {g: g for g in H.algebra.generators}, name=f"{H.name}->{H.name}")


def make_counit_subgroup(H: HopfAlgebra) -> QuantumSubgroup:
    """``pi = eps`` onto the ground field."""
    return QuantumSubgroup(H, make_ground_field(), {g: H.counit_on_gens[g] for g in H.algebra.generators}, name=f"{H.name}->K")


CATALOG_NAMES = ("eq2", "ak", "cyclic:<n>", "example-2.6.2:<algebra>")


def resolve_hopf(name: str) -> HopfAlgebra:
    """Look up ``eq2``, ``ak``, ``K`` or ``cyclic:<n>``."""
    if name == "eq2":
        return make_eq2()
    if name == "ak":
        return make_ak()
    if name == "K":
        return make_ground_field()
    if name.startswith("cyclic:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise KeyError(name) from None
        return make_group_algebra(n)
    raise KeyError(name)

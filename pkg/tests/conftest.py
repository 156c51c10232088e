"""Shared instances and the (action, coaction) pair suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from hopfrep.catalog import make_ak, make_eq2, make_group_algebra
from hopfrep.representations import (
    LEFT,
    RIGHT,
    Carrier,
    example_262,
    finite_coaction,
    free_hopf_module,
    matrix_action,
    regular_action,
    regular_coaction,
    trivial_action,
    trivial_coaction,
)


@pytest.fixture(scope="session")
def eq2():
    return make_eq2()


@pytest.fixture(scope="session")
def ak():
    return make_ak()


@pytest.fixture(scope="session")
def c2():
    return make_group_algebra(2)


@pytest.fixture(scope="session")
def c3():
    return make_group_algebra(3)


def _g(i: int) -> tuple:
    return ("g",) * i


def graded_shift(hd, n: int, scale=1, graded: bool = True, shift: bool = True):
    """``K^n`` with basis e_i, ``g.e_i = scale * e_{i+1}`` and ``e_i -> g^i (x) e_i``."""
    labels = [f"e{i}" for i in range(n)]
    carrier = Carrier.finite("E", labels)
    step = {lab: ({labels[(i + 1) % n]: scale} if shift else {lab: 1}) for i, lab in enumerate(labels)}
    act = matrix_action(hd, carrier, {"g": step})
    images = {lab: {(_g(i) if graded else ("g",), lab): 1} for i, lab in enumerate(labels)}
    return act, finite_coaction(hd, carrier, images)


def thm23_suite() -> list[tuple[str, object, object, int, bool]]:
    """``(label, act, co, degree, is_hopf_module)``; the flag is the expected common verdict."""
    C2, C3, E = make_group_algebra(2), make_group_algebra(3), make_eq2()
    v1 = Carrier.finite("V", ["v"])
    v2 = Carrier.finite("V", ["v0", "v1"])
    out = []
    for name, hd, d in (("C2", C2, 2), ("C3", C3, 3), ("Eq2", E, 2)):
        for side in (LEFT, RIGHT):
            out.append((f"{name} regular {side}", regular_action(hd, side), regular_coaction(hd, side), d, True))
    for name, hd, side, d in (("C2", C2, LEFT, 2), ("C3", C3, RIGHT, 3), ("Eq2", E, LEFT, 1)):
        out.append((f"{name} free {side}", *free_hopf_module(hd, ["v0", "v1"], side), d, True))
    out.append(("C3 graded shift", *graded_shift(C3, 3), 3, True))
    out.append(("C3 graded shift with g^3 = 8", *graded_shift(C3, 3, scale=2), 3, True))
    out.append(("C3 graded, trivial action", *graded_shift(C3, 3, shift=False), 3, False))
    out.append(("C3 shift, every e_i -> g (x) e_i", *graded_shift(C3, 3, graded=False), 3, False))
    sign = matrix_action(C2, v1, {"g": {"v": {"v": -1}}})
    out.append(("C2 sign, trivial coaction", sign, trivial_coaction(C2, v1), 2, False))
    out.append(("C2 sign, v -> g (x) v", sign, finite_coaction(C2, v1, {"v": {(("g",), "v"): 1}}), 2, False))
    shift3 = matrix_action(C3, Carrier.finite("E", ["e0", "e1", "e2"]), {"g": {"e0": {"e1": 1}, "e1": {"e2": 1}, "e2": {"e0": 1}}})
    out.append(("C3 shift, trivial coaction", shift3, trivial_coaction(C3, shift3.carrier), 3, False))
    out.append(("C2 trivial pair", trivial_action(C2, v2), trivial_coaction(C2, v2), 2, False))
    out.append(("C2 trivial action, regular coaction", trivial_action(C2, Carrier.algebra_power(C2, 1)), regular_coaction(C2), 2, False))
    out.append(("C3 regular action, trivial coaction", regular_action(C3), trivial_coaction(C3, Carrier.algebra_power(C3, 1)), 3, False))
    out.append(("Eq2 trivial pair", trivial_action(E, v1), trivial_coaction(E, v1), 2, False))
    h1 = Carrier.algebra_power(E, 1)
    out.append(("Eq2 regular action, trivial coaction", regular_action(E), trivial_coaction(E, h1), 2, False))
    out.append(("Eq2 trivial action, regular coaction", trivial_action(E, h1), regular_coaction(E), 2, False))
    char = matrix_action(E, v1, {"z": {"v": {"v": 2}}, "zbar": {"v": {"v": Fraction(1, 2)}}, "a": {}, "abar": {}})
    out.append(("Eq2 character z=2, v -> z (x) v", char, finite_coaction(E, v1, {"v": {(("z",), "v"): 1}}), 2, False))
    for name, hd, d in (("C2", C2, 2), ("Eq2", E, 1)):
        _, alpha, beta, _ = example_262(hd)
        out.append((f"{name} example 2.6.2", alpha, beta, d, False))
    return out


@pytest.fixture(scope="session")
def pair_suite():
    return thm23_suite()

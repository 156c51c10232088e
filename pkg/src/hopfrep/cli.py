"""``hopfrep`` command line: run named checks on catalog instances or DSL files.

Exit status is 0 when the verdict matches ``--expect``, 1 when it does not
(or when the dense oracle disagrees), and 2 for usage and parse errors.
Reports go to stdout (and ``--report``); timings go to stderr so that the
report bytes depend only on the request.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import Presentation, local_confluence_check, render_word
from .catalog import EQ2_GENERATORS, make_counit_subgroup, make_eq2_pi, make_identity_subgroup, make_trivial_eta, resolve_hopf
from .dsl import data_path, load_hopf, load_map, load_module, parse_presentation
from .errors import EvaluationMismatch, HopfRepError
from .hopf import HopfAlgebra, axioms_check
from .induction import QuantumSubgroup, induced_carrier, induced_rep_check, subgroup_check
from .oracle import (
    DenseHopf,
    DenseModule,
    DenseComodule,
    cyclic_quotient_matrix,
    dense_axioms_check,
    dense_canonical_phi,
    dense_canonical_psi,
    dense_comodule_check,
    dense_example_262,
    dense_from_map,
    dense_full_check,
    dense_hopf_module_check,
    dense_induced,
    dense_module_check,
    dense_regular,
    dense_space_of,
    dense_type1_check,
    dense_type2_check,
    finite_basis,
    oracle_crosscheck,
    trivial_eta_matrix,
)
from .report import Finding, Report
from .representations import (
    LEFT,
    RIGHT,
    Carrier,
    canonical_phi,
    canonical_psi,
    comodule_check,
    example_262,
    hopf_module_check,
    hopf_rep_check_full,
    hopf_rep_check_type1,
    hopf_rep_check_type2,
    module_check,
    regular_action,
    regular_coaction,
    trivial_action,
    trivial_coaction,
)
from .tensor import AlgFactor

__all__ = ["CHECKS", "CheckRequest", "UsageError", "run_check", "main"]

CHECKS = (
    "axioms",
    "module",
    "comodule",
    "hopf-module",
    "hopf-rep-1",
    "hopf-rep-2",
    "hopf-rep",
    "subgroup",
    "induce",
    "confluence",
    "oracle",
)
STRUCTURE_CHECKS = ("module", "comodule", "hopf-module", "hopf-rep-1", "hopf-rep-2", "hopf-rep")


class UsageError(Exception):
    """Bad request; maps to exit status 2."""


@dataclass
class CheckRequest:
    check: str
    instances: list[str]
    degree: int = 2
    pi: str | None = None
    module: str | None = None
    expect: str = "pass"
    fmt: str = "text"
    oracle: Fraction | None = None
    seed: int = 0
    report: str | None = None

    def __post_init__(self):
        if self.check not in CHECKS:
            raise UsageError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")
        if self.degree < 0:
            raise UsageError("degree must be >= 0")
        if self.expect not in ("pass", "fail"):
            raise UsageError("--expect must be pass or fail")
        if self.fmt not in ("text", "json"):
            raise UsageError("--format must be text or json")


# -- instance resolution -------------------------------------------------------


def load_instance(name: str) -> HopfAlgebra:
    """Catalog name first, then a DSL file (as given or shipped with the package)."""
    try:
        return resolve_hopf(name)
    except KeyError:
        pass
    try:
        path = data_path(name)
    except FileNotFoundError:
        raise UsageError(f"unknown instance {name!r}: not a catalog name or a readable file") from None
    return load_hopf(str(path))


def _cyclic_order(name: str) -> int | None:
    if name.startswith("cyclic:"):
        try:
            return int(name.split(":", 1)[1])
        except ValueError:
            return None
    return None


@dataclass
class Structures:
    """Action, coaction and the two consistency maps under test, plus how to rebuild them densely."""

    hopf: HopfAlgebra
    label: str
    act: object
    co: object
    phi: object
    psi: object
    dense: object = None  # callable q0 -> (DenseModule, DenseComodule, phi, psi) or None


def _structures(instance: str, module: str | None) -> Structures:
    if instance.startswith("example-2.6.2:"):
        if module:
            raise UsageError("--module does not apply to example-2.6.2 instances")
        inner = instance.split(":", 1)[1]
        hd = load_instance(inner)
        _, alpha, beta, phi = example_262(hd)
        n = _cyclic_order(inner)

        def dense(q0):
            H = DenseHopf.group_algebra(n) if n else DenseHopf.from_symbolic(hd, q0)
            a, b, p = dense_example_262(H)
            return a, b, p, dense_canonical_psi(b)

        return Structures(hd, instance, alpha, beta, phi, canonical_psi(beta), dense)

    hd = load_instance(instance)
    n = _cyclic_order(instance)
    kind = module or "regular"
    if kind in ("regular", "regular-right"):
        side = LEFT if kind == "regular" else RIGHT
        act, co = regular_action(hd, side), regular_coaction(hd, side)

        def dense(q0):
            H = DenseHopf.group_algebra(n) if n else DenseHopf.from_symbolic(hd, q0)
            a, b = dense_regular(H, side)
            return a, b, dense_canonical_phi(a), dense_canonical_psi(b)

    else:
        if kind == "trivial":
            carrier = Carrier.finite("L", ("c",))
            act = trivial_action(hd, carrier)
        else:
            try:
                act = load_module(kind, hd)
            except FileNotFoundError:
                raise UsageError(f"unknown module {kind!r}: use regular, regular-right, trivial or a module file") from None
            carrier = act.carrier
        co = trivial_coaction(hd, act.carrier, act.side)

        def dense(q0):
            H = DenseHopf.group_algebra(n) if n else DenseHopf.from_symbolic(hd, q0)
            W = dense_space_of(act.carrier.space)
            a = DenseModule(H, W, act.side, dense_from_map(act.action, q0))
            b = DenseComodule(H, W, co.side, dense_from_map(co.coaction, q0))
            return a, b, dense_canonical_phi(a), dense_canonical_psi(b)

    return Structures(hd, f"{instance}/{kind}", act, co, canonical_phi(act), canonical_psi(co), dense)


def _subgroup(instances: Sequence[str], pi: str | None) -> QuantumSubgroup:
    if len(instances) != 2:
        raise UsageError("subgroup and induce need two instances: the algebra and the subgroup")
    h_name, b_name = instances
    H, B = load_instance(h_name), load_instance(b_name)
    if pi is not None:
        try:
            images = load_map(pi, H, B)
        except FileNotFoundError:
            raise UsageError(f"cannot read map file {pi!r}") from None
        return QuantumSubgroup(H, B, images, name=f"{H.name}->{B.name}")
    n, m = _cyclic_order(h_name), _cyclic_order(b_name)
    if n and m:
        if n % m:
            raise UsageError(f"C{m} is not a quotient of C{n}")
        return QuantumSubgroup(H, B, {"g": "g" if m > 1 else 1}, name=f"C{n}->C{m}")
    if set(H.algebra.generators) == set(EQ2_GENERATORS) and set(B.algebra.generators) == {"t", "tbar"}:
        return make_eq2_pi(H, B)
    if B.name == "K" and not B.algebra.generators:
        return make_counit_subgroup(H)
    if H == B:
        return make_identity_subgroup(H)
    raise UsageError("no default projection for this pair; pass --pi")


def _eta(qs: QuantumSubgroup, module: str | None):
    if module in (None, "trivial"):
        return make_trivial_eta(qs.B)
    try:
        return load_module(module, qs.B)
    except FileNotFoundError:
        raise UsageError(f"unknown module {module!r}") from None


def _presentation(name: str) -> Presentation:
    try:
        return resolve_hopf(name).algebra
    except KeyError:
        pass
    try:
        path = data_path(name)
    except FileNotFoundError:
        raise UsageError(f"unknown instance {name!r}") from None
    return parse_presentation(path.read_text(), check_confluence=False).presentation


def _top_degree(hd: HopfAlgebra) -> int | None:
    try:
        return len(finite_basis(AlgFactor(hd.algebra))[-1])
    except ValueError:
        return None


# -- checks ------------------------------------------------------------------------


def confluence_report(p: Presentation, degree: int | None, seed: int, samples: int = 200) -> Report:
    """Critical pairs, plus a seeded probe that random redex choices reach the leftmost normal form."""
    overlap = degree if degree is not None else p.full_overlap_degree()
    result = local_confluence_check(p, overlap)
    report = Report(f"confluence[{p.name or 'presentation'}]")
    report.notes.append(f"overlap degree {overlap}")
    if result.confluent:
        report.add(Finding("critical-pairs", "confluence", True, result.examined))
    else:
        first = result.unresolved[0]
        report.add(Finding("critical-pairs", "confluence", False, result.examined, render_word(first.word), str(first.left), str(first.right)))
        for extra in result.unresolved[1:]:
            report.notes.append(f"unresolved {extra}")
        return report
    rng = random.Random(seed)
    gens = p.generators

    def cases():
        for _ in range(samples if gens else 0):
            word = tuple(rng.choice(gens) for _ in range(rng.randint(1, 6)))
            yield render_word(word), p.normal_form({word: 1}), p.normal_form(p.reduce_word_randomly(word, rng))

    report.add(Finding.compare_all("strategy-independence", "confluence", cases()))
    return report


def _symbolic_structure_report(check: str, s: Structures, d: int) -> Report:
    if check == "module":
        return module_check(s.act, d)
    if check == "comodule":
        return comodule_check(s.co, d)
    if check == "hopf-module":
        return hopf_module_check(s.act, s.co, d)
    if check == "hopf-rep-1":
        return hopf_rep_check_type1(s.act, s.co, s.phi, d)
    if check == "hopf-rep-2":
        return hopf_rep_check_type2(s.act, s.co, s.psi, d)
    return hopf_rep_check_full(s.act, s.co, s.phi, s.psi, d)


def _dense_structure_report(check: str, s: Structures, q0: Fraction) -> Report:
    a, b, phi, psi = s.dense(q0)
    if check == "module":
        return dense_module_check(a)
    if check == "comodule":
        return dense_comodule_check(b)
    if check == "hopf-module":
        return dense_hopf_module_check(a, b)
    if check == "hopf-rep-1":
        return dense_type1_check(a, b, phi)
    if check == "hopf-rep-2":
        return dense_type2_check(a, b, psi)
    return dense_full_check(a, b, phi, psi)


def _dense_induced_report(qs: QuantumSubgroup, instances: Sequence[str], eta_struct, q0: Fraction):
    n, m = (_cyclic_order(x) for x in instances)
    if n and m and eta_struct.action.name == "eps-action":
        H, B = DenseHopf.group_algebra(n), DenseHopf.group_algebra(m)
        di = dense_induced(H, B, cyclic_quotient_matrix(n, m), trivial_eta_matrix(B), ["c"])
    else:
        H, B = DenseHopf.from_symbolic(qs.H, q0), DenseHopf.from_symbolic(qs.B, q0)
        pi = dense_from_map(qs.pi_map(), q0)(_eye(H.n))
        eta = dense_from_map(eta_struct.action, q0)(_eye(B.n * len(finite_basis(eta_struct.carrier.space.factors[0]))))
        labels = [str(x) for x in finite_basis(eta_struct.carrier.space.factors[0])]
        di = dense_induced(H, B, pi, eta, labels)
    return di


def _eye(n: int):
    from .oracle import eye

    return eye(n)


def _finite_or_fail(hds: Sequence[HopfAlgebra]) -> int:
    tops = [_top_degree(h) for h in hds]
    if any(t is None for t in tops):
        raise UsageError("the dense oracle needs finite-dimensional instances")
    return max(tops)


def _crosschecked(req: CheckRequest) -> tuple[Report, Report]:
    """The symbolic report at full degree, and its agreement report against the dense oracle."""
    check, inst, d, q0 = req.check, req.instances, req.degree, req.oracle
    if check == "axioms":
        hd = load_instance(inst[0])
        top = _finite_or_fail([hd])
        n = _cyclic_order(inst[0])
        dense = dense_axioms_check(DenseHopf.group_algebra(n) if n else DenseHopf.from_symbolic(hd, q0))
        report = axioms_check(hd, max(d, 3 * top))
        return report, oracle_crosscheck(report, dense, q0)
    if check in STRUCTURE_CHECKS:
        s = _structures(inst[0], req.module)
        top = _finite_or_fail([s.hopf])
        # every test tuple of the finite space is covered, so witnesses are comparable
        report = _symbolic_structure_report(check, s, max(d, 5 * top))
        return report, oracle_crosscheck(report, _dense_structure_report(check, s, q0), q0)
    if check == "induce":
        qs = _subgroup(inst, req.pi)
        bm = _eta(qs, req.module)
        top = _finite_or_fail([qs.H, qs.B])
        d_full = max(d, 3 * top)
        report = induced_rep_check(qs, bm, d_full)
        di = _dense_induced_report(qs, inst, bm, q0)
        dims = [("L'-dimension", induced_carrier(qs, bm, d_full).dimension, di.dimension)]
        return report, oracle_crosscheck(report, di.check(), q0, compare_witness=False, extra=dims)
    raise UsageError(f"--oracle is not available for {check}")


def _arity_check(check: str, inst: Sequence[str]):
    want = 2 if check in ("subgroup", "induce") else 1
    if check == "oracle":
        want = len(inst) if len(inst) in (1, 2) else 1
    if len(inst) != want:
        raise UsageError(f"{check} takes {want} instance{'s' if want > 1 else ''}")


def build_report(req: CheckRequest) -> Report:
    check, inst, d = req.check, req.instances, req.degree
    if not inst:
        raise UsageError("no instance given")
    _arity_check(check, inst)
    if check == "oracle":
        # verdict is agreement of the two paths, not the verdict of the checks themselves
        q0 = req.oracle if req.oracle is not None else Fraction(2)
        report = Report(f"oracle[{' '.join(inst)}]")
        report.notes.append(f"q0={q0}")
        if len(inst) == 2:
            plan = [("induce", None)]
        elif inst[0].startswith("example-2.6.2:"):
            plan = [("hopf-module", None), ("hopf-rep-1", None)]
        else:
            plan = [("axioms", None), ("hopf-rep", "regular"), ("hopf-rep", "regular-right")]
            if req.module:
                plan.append(("hopf-rep", req.module))
        for name, module in plan:
            sub = CheckRequest(name, list(inst), d, req.pi, req.module if name == "induce" else module, oracle=q0)
            symbolic, agreement = _crosschecked(sub)
            prefix = f"{name}{'/' + module if module else ''}:"
            report.notes.append(f"{prefix} symbolic and dense verdicts agree: {'PASS' if symbolic.passed else 'FAIL'}")
            for f in agreement.findings:
                report.add(Finding(prefix + f.check, f.diagram, f.passed, f.tested, f.witness, f.lhs, f.rhs))
        return report
    if req.oracle is not None:
        report, agreement = _crosschecked(req)
        return report.extend(agreement)
    if check == "confluence":
        return confluence_report(_presentation(inst[0]), None, req.seed)
    if check == "axioms":
        return axioms_check(load_instance(inst[0]), d)
    if check in STRUCTURE_CHECKS:
        return _symbolic_structure_report(check, _structures(inst[0], req.module), d)
    if check == "subgroup":
        return subgroup_check(_subgroup(inst, req.pi), d)
    return induced_rep_check(*_induction_inputs(req), d)


def _induction_inputs(req: CheckRequest):
    qs = _subgroup(req.instances, req.pi)
    return qs, _eta(qs, req.module)


def run_check(req: CheckRequest) -> tuple[int, str]:
    """Return ``(exit status, rendered report)``."""
    report = build_report(req)
    text = report.render(req.fmt)
    status = 0 if report.passed == (req.expect == "pass") else 1
    return status, text


# -- argument parsing ------------------------------------------------------------------


def _q0(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value == 0:
        raise argparse.ArgumentTypeError("q0 must be nonzero")
    return value


def _common(p: argparse.ArgumentParser):
    p.add_argument("-d", "--degree", type=int, default=2, help="truncation degree of the test basis (default 2)")
    p.add_argument("--pi", help="map file giving the projection on generators")
    p.add_argument("--module", help="regular, regular-right, trivial, or a module file")
    p.add_argument("--expect", choices=("pass", "fail"), default="pass")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default=None)
    p.add_argument("--oracle", type=_q0, metavar="Q0", help="also cross-check with the dense oracle at q = Q0")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized probes")
    p.add_argument("--report", help="also write the report to this file")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfrep", description="Exact checks for Hopf algebras and their representations.")
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", help="run a named check")
    check.add_argument("check", choices=CHECKS)
    check.add_argument("instances", nargs="+", help="catalog names (eq2, ak, cyclic:<n>, example-2.6.2:<algebra>) or DSL files")
    _common(check)
    induce = sub.add_parser("induce", help="build and check the induced representation")
    induce.add_argument("--algebra", required=True)
    induce.add_argument("--subgroup", required=True)
    _common(induce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        check, instances = args.check, args.instances
    else:
        check, instances = "induce", [args.algebra, args.subgroup]
    fmt = args.fmt or ("json" if args.report and args.report.endswith(".json") else "text")
    start = time.perf_counter()
    try:
        req = CheckRequest(check, instances, args.degree, args.pi, args.module, args.expect, fmt, args.oracle, args.seed, args.report)
        status, text = run_check(req)
    except EvaluationMismatch as exc:
        print(f"hopfrep: oracle disagreement: {exc}", file=sys.stderr)
        return 1
    except (UsageError, HopfRepError, SyntaxError, FileNotFoundError) as exc:
        print(f"hopfrep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text)
    print(f"hopfrep: {check} finished in {time.perf_counter() - start:.2f}s, exit {status}", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

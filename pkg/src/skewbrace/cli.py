"""Command-line front end.  Every subcommand produces a versioned JSON report;
the exit code is 0 when every verdict passes and 1 when one fails.  Usage or
input errors exit with 2."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Callable

from . import suite
from .brace import (
    DEFAULT_SEED,
    EXHAUSTIVE,
    Strategy,
    Verdict,
    brace_from_json,
    check_brace,
    construct_from_lambda,
    is_lambda_cyclic,
    is_lambda_homomorphic,
    is_symmetric,
    kernel_subbrace,
)
from .errors import SkewBraceError
from .groups import (
    DEFAULT_ORDER_BOUND,
    FiniteGroup,
    all_homomorphisms_to_aut,
    automorphism_group,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    group_from_json,
    quaternion,
    symmetric,
)
from .holomorph import Holomorph, brace_from_regular, enumerate_regular_subgroups, regular_from_brace
from .lattice import (
    cyclic_permutation_brace,
    validate_phi,
    verify_presentation_relations,
    z2_case1_matrix,
    z2_case2_matrix,
    z2_classify,
    CyclicLatticeBrace,
)
from .series import check_two_sided_brace, free_subgroup_witness
from .wordbrace import exact_factorization_brace, f2_inversion_brace, f2_swap_brace, f4_ia_brace, \
    verify_f3_semidirect_presentation
from .ybe import YBMap, check_involutive, check_nondegenerate, verify_braid, verify_circ_identity

REPORT_VERSION = 1


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str, seed: int):
        self.command = command
        self.seed = seed
        self.verdicts: list[Verdict] = []
        self.timing: dict[str, float] = {}
        self.data: dict = {}

    def run(self, name: str, fn: Callable[[], Verdict]) -> Verdict:
        start = time.perf_counter()
        v = fn()
        self.timing[name] = round(time.perf_counter() - start, 6)
        self.verdicts.append(v)
        return v

    def add(self, v: Verdict) -> Verdict:
        self.verdicts.append(v)
        return v

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "report_version": REPORT_VERSION,
            "command": self.command,
            "seed": self.seed,
            "passed": self.passed,
            "verdicts": [v.to_json() for v in self.verdicts],
            "data": self.data,
            "timing": self.timing,
        }

    def text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'} (seed {self.seed})"]
        for v in self.verdicts:
            line = f"  [{'PASS' if v.passed else 'FAIL'}] {v.check}"
            if v.detail:
                line += f": {v.detail}"
            if not v.passed and v.witness is not None:
                line += f" witness={v.to_json()['witness']}"
            lines.append(line)
        return "\n".join(lines)


# group names accepted by --group

def named_group(name: str) -> FiniteGroup:
    """Z<n>, Z2^<k>, D<2m>, Q8, S<n>, and products joined by 'x' such as Z2xZ4."""
    parts = name.split("x")
    if len(parts) > 1:
        g = named_group(parts[0])
        for p in parts[1:]:
            g = direct_product(g, named_group(p))
        return g
    if m := re.fullmatch(r"Z2\^(\d+)", name):
        return elementary_abelian(int(m.group(1)))
    if m := re.fullmatch(r"Z(\d+)", name):
        return cyclic(int(m.group(1)))
    if m := re.fullmatch(r"D(\d+)", name):
        if int(m.group(1)) % 2 or int(m.group(1)) < 4:
            raise UsageError(f"dihedral order must be even and >= 4: {name}")
        return dihedral(int(m.group(1)) // 2)
    if name == "Q8":
        return quaternion()
    if m := re.fullmatch(r"S(\d+)", name):
        return symmetric(int(m.group(1)))
    raise UsageError(f"unknown group name {name!r}")


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _group_arg(args) -> FiniteGroup:
    if args.group:
        return named_group(args.group)
    if args.table:
        return group_from_json(_load_json(args.table))
    raise UsageError("give --group NAME or --table FILE")


def _load_brace(path: str):
    data = _load_json(path)
    try:
        return brace_from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{path} is not a brace description: {exc}") from None


def _strategy(args, default_samples: int = 1000) -> Strategy:
    return Strategy.sampled(args.samples or default_samples, 6, args.seed)


# subcommands

def cmd_enum_regular(args, report: Report):
    g = _group_arg(args)
    hol = Holomorph(g, bound=args.limit)
    subs = enumerate_regular_subgroups(g, hol, bound=args.limit)
    braces = []
    bad = None
    for h in subs:
        b = brace_from_regular(h)
        if not check_brace(b) or regular_from_brace(b, hol) != h:
            bad = h.to_json()
            break
        braces.append(b.to_json())
    report.add(Verdict("regular-subgroups", bad is None, bad, len(subs), detail=f"{len(subs)} regular subgroups"))
    report.data = {"group": g.name, "count": len(subs), "braces": braces}


def cmd_construct(args, report: Report):
    g = _group_arg(args)
    aut = automorphism_group(g, args.limit)
    homs = all_homomorphisms_to_aut(g, aut)
    chosen = range(len(homs)) if args.index is None else [args.index]
    out = []
    for i in chosen:
        if not 0 <= i < len(homs):
            raise UsageError(f"--index must lie in [0, {len(homs) - 1}]")
        b = construct_from_lambda(g, homs[i], aut)
        entry = {"index": i, "lambda": list(homs[i]), "accepted": bool(b)}
        if b:
            entry["brace"] = b.to_json()
        else:
            entry["witness"] = list(b.witness)
        out.append(entry)
    accepted = sum(e["accepted"] for e in out)
    report.add(Verdict("construct", args.index is None or out[0]["accepted"],
                       None if args.index is None or out[0]["accepted"] else out[0]["witness"],
                       len(out), detail=f"{accepted} of {len(out)} homomorphisms give a brace"))
    report.data = {"group": g.name, "constructions": out}


def cmd_verify(args, report: Report):
    b = _load_brace(args.brace)
    for mode in args.mode.split(","):
        if mode == "axiom":
            report.run(mode, lambda: check_brace(b))
        elif mode == "lambda-hom":
            report.run(mode, lambda: is_lambda_homomorphic(b))
        elif mode == "lambda-cyclic":
            report.run(mode, lambda: is_lambda_cyclic(b))
        elif mode == "symmetric":
            report.run(mode, lambda: is_symmetric(b))
        elif mode == "meta-trivial":
            def meta():
                try:
                    k = kernel_subbrace(b)
                except (SkewBraceError, AssertionError) as exc:
                    return Verdict("meta-trivial", False, None, detail=str(exc))
                return Verdict("meta-trivial", True, sorted(k.kernel), detail=f"quotient order {k.quotient_order}")
            report.run(mode, meta)
        else:
            raise UsageError(f"unknown verify mode {mode!r}")
    report.data = {"brace": b.name, "order": b.order}


def cmd_z2(args, report: Report):
    if args.matrix:
        m = json.loads(args.matrix)
    else:
        m = z2_case1_matrix(args.p) if args.family == "case1" else z2_case2_matrix(args.p)
    report.add(validate_phi(m))
    if not report.passed:
        return
    c = z2_classify(m)
    report.data = {"matrix": [list(r) for r in m], "family": c.family, "p": c.p, "mult_group": c.mult_group}
    if args.verify:
        b = CyclicLatticeBrace(m)
        for v in c.checks:
            report.add(v)
        report.run("axiom", lambda: check_brace(b, _strategy(args)))
        report.run("symmetric", lambda: is_symmetric(b, _strategy(args, 300)))


def cmd_zn_cyclic(args, report: Report):
    b = cyclic_permutation_brace(args.n)
    report.data = {"n": args.n}
    report.run("axiom", lambda: check_brace(b, _strategy(args)))
    if args.verify_presentation:
        report.run("presentation", lambda: verify_presentation_relations(args.n))


def cmd_free(args, report: Report):
    b = {"swap": f2_swap_brace, "inversion": f2_inversion_brace, "ia": f4_ia_brace}[args.construction]()
    report.data = {"brace": b.name}
    if args.verify:
        s = _strategy(args)
        report.run("axiom", lambda: check_brace(b, s))
        report.run("lambda-homomorphic", lambda: is_lambda_homomorphic(b, s))
        if args.construction == "inversion":
            report.run("presentation", verify_f3_semidirect_presentation)


FACTOR_FAMILIES = {
    "f2": ("free_group", {"n": 2}),
    "free-group": ("free_group", {"n": 3}),
    "free-product": ("free_product", {"c_rank": 1, "b_rank": 2}),
    "wreath": ("wreath", {}),
}


def cmd_factor(args, report: Report):
    family, params = FACTOR_FAMILIES[args.family]
    b = exact_factorization_brace(family, **params)
    report.data = {"brace": b.name}
    if args.verify:
        s = _strategy(args)
        report.run("axiom", lambda: check_brace(b, s))
        report.run("symmetric", lambda: is_symmetric(b, _strategy(args, 300)))


def cmd_series(args, report: Report):
    report.data = {"vars": args.vars, "degree": args.degree}
    if args.check == "two-sided":
        report.run("two-sided", lambda: check_two_sided_brace(args.degree, args.vars, args.samples or 500, args.seed))
    else:
        length = args.len if args.len is not None else args.degree
        if length > args.degree:
            raise UsageError("--len must not exceed --degree")
        report.run("free-witness", lambda: free_subgroup_witness(args.degree, length))


def cmd_ybe(args, report: Report):
    b = _load_brace(args.brace)
    r = YBMap(b)
    report.data = {"brace": b.name, "order": b.order}
    checks = args.check.split(",")
    for c in checks:
        if c == "braid":
            report.run(c, lambda: verify_braid(b, r=r))
        elif c == "nondegen":
            report.run(c, lambda: check_nondegenerate(b, r))
        elif c == "involutive":
            report.run(c, lambda: check_involutive(b, r))
        elif c == "identity":
            report.run(c, lambda: verify_circ_identity(b, EXHAUSTIVE, r))
        else:
            raise UsageError(f"unknown ybe check {c!r}")


def cmd_paper_suite(args, report: Report):
    results = suite.run_suite()
    for r in results:
        report.timing[f"criterion-{r.number}"] = round(r.seconds, 6)
        report.add(Verdict(f"criterion-{r.number}", r.passed and r.within_budget,
                           r.failures[0] if r.failures else None, detail=f"{r.name}: {r.detail}"))
    report.data = {"level": args.level, "criteria": [r.to_json() for r in results]}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (echoed in the report)")
    common.add_argument("--samples", type=int, default=None, help="sample count for sampled checks")
    common.add_argument("--limit", type=int, default=DEFAULT_ORDER_BOUND, help="largest group order to accept")
    common.add_argument("--out", help="write the JSON report to this file")
    common.add_argument("--json", action="store_true", help="print the JSON report instead of a summary")

    p = argparse.ArgumentParser(prog="skewbrace", description="Construct and verify skew braces.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_args(sp):
        sp.add_argument("--group", help="group name: Z4, Z2^3, D8, Q8, S3, Z2xZ4, ...")
        sp.add_argument("--table", help="JSON file with a Cayley table")

    sp = sub.add_parser("enum-regular", parents=[common], help="enumerate regular subgroups of Hol G")
    group_args(sp)
    sp.set_defaults(func=cmd_enum_regular)

    sp = sub.add_parser("construct", parents=[common], help="braces from homomorphisms G -> Aut G")
    group_args(sp)
    sp.add_argument("--index", type=int, help="use only this homomorphism (in enumeration order)")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", parents=[common], help="check a brace stored as JSON")
    sp.add_argument("brace")
    sp.add_argument("--mode", default="axiom",
                    help="comma list of axiom, lambda-hom, lambda-cyclic, symmetric, meta-trivial")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("z2", parents=[common], help="lambda-cyclic braces on Z^2")
    sp.add_argument("--p", type=int, default=0)
    sp.add_argument("--family", choices=["case1", "case2"], default="case1")
    sp.add_argument("--matrix", help="row-major JSON matrix; overrides --p/--family")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_z2)

    sp = sub.add_parser("zn-cyclic", parents=[common], help="cyclic-permutation brace on Z^n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify-presentation", action="store_true")
    sp.set_defaults(func=cmd_zn_cyclic)

    sp = sub.add_parser("free", parents=[common], help="braces on free groups")
    sp.add_argument("--construction", choices=["swap", "inversion", "ia"], required=True)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_free)

    sp = sub.add_parser("factor", parents=[common], help="exact factorization braces")
    sp.add_argument("--family", choices=sorted(FACTOR_FAMILIES), required=True)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("series", parents=[common], help="adjoint brace of truncated power series")
    sp.add_argument("--vars", type=int, default=2)
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--check", choices=["two-sided", "free-witness"], default="two-sided")
    sp.add_argument("--len", type=int, default=None)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("ybe", parents=[common], help="Yang-Baxter map of a finite brace")
    sp.add_argument("brace")
    sp.add_argument("--check", default="braid,nondegen,involutive",
                    help="comma list of braid, nondegen, involutive, identity")
    sp.set_defaults(func=cmd_ybe)

    sp = sub.add_parser("paper-suite", parents=[common], help="run the acceptance battery")
    sp.add_argument("--level", choices=["desk"], default="desk")
    sp.set_defaults(func=cmd_paper_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    report = Report(args.command, args.seed)
    try:
        args.func(args, report)
    except UsageError as exc:
        print(f"skewbrace: error: {exc}", file=sys.stderr)
        return 2
    except SkewBraceError as exc:
        print(f"skewbrace: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    payload = json.dumps(report.to_json(), indent=2, sort_keys=True, default=str)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"skewbrace: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 2
    print(payload if args.json else report.text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())

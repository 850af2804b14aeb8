"""The acceptance battery: ten criteria, each timed against its budget."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .brace import (
    DEFAULT_SEED,
    Strategy,
    check_brace_axiom,
    construct_from_lambda,
    criterion_holds,
    h_lambda_is_subgroup,
    is_lambda_cyclic,
    is_symmetric,
    multiplicative_group,
)
from .groups import all_homomorphisms_to_aut, automorphism_group, cyclic, direct_product, small_group_corpus
from .holomorph import (
    Holomorph,
    brace_from_regular,
    enumerate_regular_subgroups,
    enumerate_regular_subgroups_by_growth,
    regular_from_brace,
)
from .intmat import matrix_power
from .lattice import (
    CyclicLatticeBrace,
    cyclic_permutation_brace,
    integer_brace,
    upper_triangular_example_brace,
    verify_presentation_relations,
    z2_brace,
    z2_case1_circ,
    z2_case1_inverse,
    z2_case1_matrix,
    z2_case2_matrix,
    z2_classify,
)
from .series import adjoint_circ, adjoint_inverse, check_two_sided_brace, free_subgroup_witness, random_ideal_element
from .wordbrace import (
    WreathElement,
    exact_factorization_brace,
    f2_inversion_brace,
    f2_swap_brace,
    homogeneous_brace,
    index2_brace,
    verify_f3_semidirect_presentation,
)
from .words import FreeAutomorphism, FreeWord, random_word
from .ybe import YBMap, check_nondegenerate, verify_braid


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: float
    detail: str = ""
    failures: list = field(default_factory=list)

    @property
    def within_budget(self) -> bool:
        return self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed and self.within_budget else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.2f}s / {self.budget:.0f}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "within_budget": self.within_budget, "budget": self.budget, "detail": self.detail,
                "failures": [str(f) for f in self.failures[:5]]}


def _box(n: int, radius: int):
    return list(itertools.product(range(-radius, radius + 1), repeat=n))


def kernel_criterion_equivalence(max_order: int = 8) -> tuple[bool, str, list]:
    failures, total = [], 0
    for g in small_group_corpus(max_order):
        aut = automorphism_group(g)
        for lam in all_homomorphisms_to_aut(g, aut):
            total += 1
            by_kernel, _ = criterion_holds(g, lam, aut)
            by_closure, _ = h_lambda_is_subgroup(g, lam, aut)
            if by_kernel != by_closure:
                failures.append((g.name, lam))
    return not failures, f"{total} homomorphisms, {total - len(failures)} agree", failures


def regular_round_trip(max_order: int = 6) -> tuple[bool, str, list]:
    failures, total = [], 0
    for g in small_group_corpus(max_order):
        hol = Holomorph(g)
        subs = enumerate_regular_subgroups(g, hol)
        oracle = enumerate_regular_subgroups_by_growth(g, hol)
        if [h.members for h in subs] != [h.members for h in oracle]:
            failures.append((g.name, "enumerations differ", len(subs), len(oracle)))
        for h in subs:
            total += 1
            b = brace_from_regular(h)
            if not check_brace_axiom(b):
                failures.append((g.name, "axiom", h.members))
            elif regular_from_brace(b, hol) != h:
                failures.append((g.name, "round trip", h.members))
    return not failures, f"{total} regular subgroups round-tripped", failures


def z2_suite() -> tuple[bool, str, list]:
    failures = []
    box = _box(2, 3)
    for p in range(-3, 4):
        b = z2_brace("case1", p)
        for a in box:
            if b.circ_inv(a) != z2_case1_inverse(p, a):
                failures.append(("inverse", p, a))
            for c in box:
                ab = b.circ(a, c)
                if ab != z2_case1_circ(p, a, c):
                    failures.append(("product", p, a, c))
                if ab != b.circ(c, a):
                    failures.append(("commutative", p, a, c))
        if failures:
            break
    for p in range(-4, 5):
        for k in range(-4, 5):
            if matrix_power(z2_case1_matrix(p), k) != ((1 + k * p, -k * p), (k * p, 1 - k * p)):
                failures.append(("power", p, k))
    for p in range(-3, 4):
        c = z2_classify(z2_case2_matrix(p))
        klein = next(v for v in c.checks if v.check == "klein-relation")
        if not klein:
            failures.append(("klein", p))
    types = {z2_classify(m).type_number for m in (((1, 0), (0, 1)), z2_case1_matrix(1), z2_case2_matrix(0))}
    if types != {1, 2, 3}:
        failures.append(("types", sorted(types)))
    return not failures, "case-1 box [-3,3]^2 for p in [-3,3]; Klein relation; three types", failures


def zn_cyclic_suite() -> tuple[bool, str, list]:
    failures = []
    b = cyclic_permutation_brace(3)
    if b.circ((1, 0, 0), (0, 1, 0)) != (1, 0, 1):
        failures.append("x1∘x2")
    if b.circ((0, 1, 0), (1, 0, 0)) != (0, 2, 0):
        failures.append("x2∘x1")
    for n in (2, 3, 4, 5):
        v = verify_presentation_relations(n)
        if not v:
            failures.append((n, v.witness))
    return not failures, "n=3 products; presentation for n in 2..5", failures


def f2_inversion_suite(seed: int = DEFAULT_SEED) -> tuple[bool, str, list]:
    failures = []
    v = verify_f3_semidirect_presentation()
    if not v:
        failures.append(v.witness)
    ax = check_brace_axiom(f2_inversion_brace(), Strategy.sampled(1000, 6, seed))
    if not ax:
        failures.append(("axiom", ax.witness))
    return not failures, "four relations; axiom on 1000 triples", failures


def factorization_suite(seed: int = DEFAULT_SEED, samples: int = 1000) -> tuple[bool, str, list]:
    failures = []
    rng = random.Random(seed)
    f2 = exact_factorization_brace("free_group", n=2)
    wreath = exact_factorization_brace("wreath")
    y = FreeWord.gen(2)

    def f2_split(g):  # B = <x2> is the abelianized exponent of x2
        b = y ** g.exponent_sum(2)
        return g * ~b, b

    def wreath_split(g):
        return WreathElement(g.base, 0), WreathElement.x(g.shift)

    for brace, split, sample in ((f2, f2_split, lambda: random_word(rng, 2, 6)),
                                 (wreath, wreath_split, lambda: wreath.sample(rng, 4))):
        for _ in range(samples):
            g, h = sample(), sample()
            (a1, b1), (a2, b2) = split(g), split(h)
            expected = brace.mul(brace.mul(a1, a2), brace.mul(b2, b1))
            if brace.circ(g, h) != expected:
                failures.append((brace.name, "product", str(g), str(h)))
                break
            if brace.lam(g, h) != brace.mul(brace.inv(g), brace.circ(g, h)) or \
                    brace.lam(g, h) != brace.mul(brace.mul(brace.inv(b1), h), b1):
                failures.append((brace.name, "lambda", str(g), str(h)))
                break
    for _ in range(samples):
        g, h = wreath.sample(rng, 4), wreath.sample(rng, 4)
        if wreath.circ(g, h) != wreath.circ(h, g):
            failures.append(("wreath", "commutative", str(g), str(h)))
            break
    braces = [f2, wreath, exact_factorization_brace("free_product", c_rank=1, b_rank=2),
              exact_factorization_brace("free_product", c_rank=2, b_rank=1),
              exact_factorization_brace("free_group", n=3)]
    for b in braces:
        v = is_symmetric(b, Strategy.sampled(300, 5, seed))
        if not v:
            failures.append((b.name, "symmetric", v.witness))
    return not failures, f"{samples} samples each for F2 and ZwrZ; symmetry of {len(braces)} braces", failures


def series_suite(seed: int = DEFAULT_SEED) -> tuple[bool, str, list]:
    failures = []
    v = check_two_sided_brace(4, 2, 500, seed)
    if not v:
        failures.append(v.witness)
    rng = random.Random(seed)
    zero = random_ideal_element(rng, 2, 4, 0)
    for _ in range(200):
        a = random_ideal_element(rng, 2, 4)
        y = adjoint_inverse(a)
        if adjoint_circ(a, y) != zero or adjoint_circ(y, a) != zero:
            failures.append(("inverse", str(a)))
            break
    w = free_subgroup_witness(4, 4)
    if not w:
        failures.append(("magnus", w.witness))
    return not failures, "two-sided axioms (500); adjoint inverses; Magnus injective on 161 words", failures


def symmetric_corpus(max_order: int = 8) -> list:
    """Every lambda-cyclic brace built from a homomorphism G -> Aut G on the
    finite corpus, plus the infinite lambda-cyclic constructions."""
    out = []
    for g in small_group_corpus(max_order):
        aut = automorphism_group(g)
        for lam in all_homomorphisms_to_aut(g, aut):
            b = construct_from_lambda(g, lam, aut)
            if b:
                out.append(b)
    for p in (-2, -1, 0, 1, 2):
        out += [z2_brace("case1", p), z2_brace("case2", p)]
    out += [cyclic_permutation_brace(n) for n in (2, 3, 4, 5)]
    out += [integer_brace(), upper_triangular_example_brace(2), CyclicLatticeBrace(((0, 1), (1, 0)), "Z2-swap")]
    out += [f2_swap_brace(), f2_inversion_brace(),
            homogeneous_brace(3, FreeAutomorphism.inner(3, FreeWord.parse("x1*x2^-1")), "F3-inner")]
    return out


def symmetry_suite(seed: int = DEFAULT_SEED) -> tuple[bool, str, list]:
    failures = []
    cyclic_count = 0
    corpus = symmetric_corpus()
    for b in corpus:
        strategy = None if b.finite else Strategy.sampled(300, 4, seed)
        v = is_symmetric(b, strategy)
        if "DISAGREE" in v.detail:
            failures.append((b.name, "methods disagree", v.witness))
        if is_lambda_cyclic(b):
            cyclic_count += 1
            if not v:
                failures.append((b.name, "not symmetric", v.witness))
    return not failures, f"{cyclic_count} lambda-cyclic of {len(corpus)} braces; both methods agree", failures


def ybe_suite() -> tuple[bool, str, list]:
    failures, total = [], 0
    braces = [brace_from_regular(h) for g in small_group_corpus(8) for h in enumerate_regular_subgroups(g)]
    braces.append(_index2_pair()[0])
    for b in braces:
        total += 1
        r = YBMap(b)
        v = verify_braid(b, r=r)
        if not v:
            failures.append((b.name, "braid", v.witness))
        v = check_nondegenerate(b, r)
        if not v:
            failures.append((b.name, "non-degenerate", v.witness))
    return not failures, f"{total} finite braces, exhaustive", failures


def _index2_pair():
    a = direct_product(cyclic(2), cyclic(4))
    order4 = next(x for x in a.elements if a.element_order(x) == 4)
    b1 = a.closure([order4])
    b2 = frozenset(x for x in a.elements if a.element_order(x) <= 2)
    return index2_brace(a, b1, "index2(Z2xZ4, Z4)"), index2_brace(a, b2, "index2(Z2xZ4, Z2^2)")


def index2_suite() -> tuple[bool, str, list]:
    first, second = _index2_pair()
    s1 = multiplicative_group(first).order_spectrum()
    s2 = multiplicative_group(second).order_spectrum()
    ok = s1 != s2
    return ok, f"order spectra {s1} vs {s2}", [] if ok else [("same spectrum", s1)]


CRITERIA: list[tuple[int, str, float, Callable[[], tuple[bool, str, list]]]] = [
    (1, "H_lambda subgroup iff kernel criterion", 60, kernel_criterion_equivalence),
    (2, "regular subgroup <-> brace round trip", 120, regular_round_trip),
    (3, "Z^2 families", 10, z2_suite),
    (4, "Z^n cyclic-permutation brace", 10, zn_cyclic_suite),
    (5, "F2 inversion brace presentation", 10, f2_inversion_suite),
    (6, "exact factorization braces", 30, factorization_suite),
    (7, "adjoint series brace", 60, series_suite),
    (8, "lambda-cyclic braces are symmetric", 60, symmetry_suite),
    (9, "Yang-Baxter maps", 60, ybe_suite),
    (10, "index-2 construction", 5, index2_suite),
]


def run_criterion(number: int) -> CriterionResult:
    num, name, budget, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    passed, detail, failures = fn()
    return CriterionResult(num, name, passed, time.perf_counter() - start, budget, detail, failures)


def run_suite() -> list[CriterionResult]:
    return [run_criterion(n) for n, *_ in CRITERIA]

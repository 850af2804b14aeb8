"""Skew braces: the data model with its axiom and lambda checks.

A skew brace is a set with two group laws, ``mul`` (written ·) and
``circ`` (written ∘), sharing the identity and satisfying

    a ∘ (b · c) = (a ∘ b) · a^-1 · (a ∘ c).

Finite braces are tables over the elements of a :class:`FiniteGroup`.
Infinite carriers (Z^n, free groups, series) subclass :class:`SkewBrace`
and are checked on seeded random samples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence

from .errors import (
    GroupError,
    ImageNotFinite,
    NotAutomorphism,
    NotHomomorphism,
    NotLambdaHomomorphic,
    SizeLimitExceeded,
)
from .groups import (
    DEFAULT_ORDER_BOUND,
    Automorphism,
    AutomorphismGroup,
    FiniteGroup,
    all_homomorphisms_to_aut,
    automorphism_group,
    group_isomorphisms,
    validate_group,
)

DEFAULT_SEED = 20240601


# verdicts and strategies

@dataclass
class Verdict:
    check: str
    passed: bool
    witness: Any = None
    samples: int | None = None
    seed: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "witness": _jsonable(self.witness),
            "samples": self.samples,
            "seed": self.seed,
            "detail": self.detail,
        }


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


@dataclass(frozen=True)
class Strategy:
    """``exhaustive`` scans every tuple of a finite carrier; ``sampled`` draws
    ``count`` seeded random tuples, elements of complexity ``size``; ``box``
    scans every tuple from the carrier's finite box of radius ``size``."""

    mode: str = "exhaustive"
    count: int = 1000
    size: int = 6
    seed: int = DEFAULT_SEED

    @classmethod
    def sampled(cls, count: int = 1000, size: int = 6, seed: int = DEFAULT_SEED) -> "Strategy":
        return cls("sampled", count, size, seed)

    @classmethod
    def box(cls, radius: int) -> "Strategy":
        return cls("box", 0, radius)


EXHAUSTIVE = Strategy()


@dataclass(frozen=True)
class LambdaDescriptor:
    """Closed-form description of a -> lambda_a.

    kinds: ``table`` (finite), ``power-of-phi`` (lambda_a = phi^{l(a)}; data
    ``phi`` and ``order``), ``kernel-coset`` (lambda_a depends on a's coset
    of an index-2 kernel), ``inner-by-B-part`` (exact factorizations),
    ``generator-images`` (lambda given on additive generators).
    """

    kind: str
    data: dict = field(default_factory=dict)


@dataclass
class Rejection:
    """A failed construction; ``witness`` is the first offending pair."""

    reason: str
    witness: Any = None

    def __bool__(self):
        return False


# the abstract model

class SkewBrace:
    """Base class.  Subclasses supply the two group laws and element sampling."""

    name = "brace"
    finite = False
    descriptor: LambdaDescriptor | None = None

    def one(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def circ(self, a, b):
        raise NotImplementedError

    def lam(self, a, b):
        """lambda_a(b) = a^-1 · (a ∘ b)."""
        return self.mul(self.inv(a), self.circ(a, b))

    def circ_inv(self, a):
        raise NotImplementedError

    def elements(self) -> Sequence:
        raise SizeLimitExceeded(f"{self.name} is infinite")

    def box(self, radius: int) -> list:
        """A finite family of elements, for exhaustive checks on infinite carriers."""
        raise NotImplementedError(f"{self.name} has no element box")

    def sample(self, rng: random.Random, size: int):
        raise NotImplementedError

    def generators(self) -> Sequence | None:
        """A generating set of (G, ·), or None when not finitely generated."""
        return None

    def in_kernel(self, a) -> bool:
        """Membership in Ker lambda.  Default: lambda_a fixes every generator."""
        gens = self.generators()
        if gens is None:
            raise NotImplementedError(f"{self.name}: kernel membership needs a descriptor")
        return all(self.lam(a, g) == g for g in gens)

    def lambda_image(self) -> list:
        """Distinct lambda_a as hashable values; only when the image is finite."""
        raise ImageNotFinite(f"{self.name}: lambda image not computable")

    def lambda_image_cyclic(self) -> tuple[bool, int]:
        """(is cyclic, order) for a finite lambda image of an infinite carrier."""
        raise ImageNotFinite(f"{self.name}: lambda image not computable")

    def cyclic_lambda_generator(self):
        """An automorphism generating Im lambda when the descriptor declares one."""
        return None

    def probes(self, rng: random.Random | None = None, count: int = 8, size: int = 4) -> list:
        """Elements on which two automorphisms are compared."""
        gens = self.generators()
        if gens is not None:
            return list(gens)
        rng = rng or random.Random(DEFAULT_SEED)
        return [self.sample(rng, size) for _ in range(count)]

    def lam_equal(self, a, b, probes=None) -> bool:
        probes = self.probes() if probes is None else probes
        return all(self.lam(a, g) == self.lam(b, g) for g in probes)

    def power(self, a, k: int):
        """a^{∘k}."""
        if k < 0:
            a, k = self.circ_inv(a), -k
        r = self.one()
        for _ in range(k):
            r = self.circ(r, a)
        return r

    def circ_commutator(self, a, b):
        """[a, b] = ā ∘ b̄ ∘ a ∘ b."""
        return self.circ_chain(self.circ_inv(a), self.circ_inv(b), a, b)

    def circ_chain(self, *xs):
        r = self.one()
        for x in xs:
            r = self.circ(r, x)
        return r

    def swapped(self) -> "SkewBrace":
        """(G, ∘, ·): the roles of the two laws exchanged."""
        return _Swapped(self)

    def _tuples(self, arity: int, strategy: Strategy) -> Iterable[tuple]:
        if strategy.mode == "exhaustive":
            if not self.finite:
                raise SizeLimitExceeded(f"{self.name} is infinite; use a sampled strategy")
            return itertools.product(self.elements(), repeat=arity)
        if strategy.mode == "box":
            return itertools.product(self.box(strategy.size), repeat=arity)
        rng = random.Random(strategy.seed)
        return (tuple(self.sample(rng, strategy.size) for _ in range(arity)) for _ in range(strategy.count))


class _Swapped(SkewBrace):
    def __init__(self, base: SkewBrace):
        self.base = base
        self.name = f"swap({base.name})"
        self.finite = base.finite

    def one(self):
        return self.base.one()

    def mul(self, a, b):
        return self.base.circ(a, b)

    def inv(self, a):
        return self.base.circ_inv(a)

    def circ(self, a, b):
        return self.base.mul(a, b)

    def circ_inv(self, a):
        return self.base.inv(a)

    def elements(self):
        return self.base.elements()

    def sample(self, rng, size):
        return self.base.sample(rng, size)


# finite braces

class FiniteBrace(SkewBrace):
    """A brace on the elements of a finite group, ∘ given as a table."""

    finite = True

    def __init__(self, group: FiniteGroup, circ_table: Sequence[Sequence[int]], name: str | None = None,
                 descriptor: LambdaDescriptor | None = None):
        self.group = group
        self.circ_table = tuple(tuple(int(x) for x in row) for row in circ_table)
        self.name = name or f"brace({group.name})"
        self.descriptor = descriptor or LambdaDescriptor("table")
        g = group
        self._lam = tuple(
            tuple(g.table[g.inverse[a]][self.circ_table[a][b]] for b in g.elements) for a in g.elements
        )
        self._circ_inv = None

    @property
    def order(self) -> int:
        return self.group.order

    def __repr__(self):
        return f"FiniteBrace({self.name!r}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteBrace) and self.group == other.group and self.circ_table == other.circ_table

    def __hash__(self):
        return hash((self.group.table, self.circ_table))

    def one(self):
        return self.group.identity

    def mul(self, a, b):
        return self.group.table[a][b]

    def inv(self, a):
        return self.group.inverse[a]

    def circ(self, a, b):
        return self.circ_table[a][b]

    def lam(self, a, b):
        return self._lam[a][b]

    def lambda_map(self, a) -> Automorphism:
        return Automorphism(self._lam[a])

    def circ_inv(self, a):
        if self._circ_inv is None:
            e = self.group.identity
            inv = []
            for x in self.group.elements:
                row = self.circ_table[x]
                inv.append(next((y for y in self.group.elements if row[y] == e), None))
            self._circ_inv = tuple(inv)
        return self._circ_inv[a]

    def elements(self):
        return self.group.elements

    def sample(self, rng, size):
        return rng.randrange(self.group.order)

    def generators(self):
        return self.group.generators

    def in_kernel(self, a) -> bool:
        return all(x == y for x, y in zip(self._lam[a], self.group.elements))

    def lambda_image(self) -> list:
        return sorted(set(self._lam))

    def to_json(self) -> dict:
        return {
            "carrier": self.group.to_json(),
            "dot": "table",
            "circ": [list(r) for r in self.circ_table],
            "lambda_kind": self.descriptor.kind,
            "name": self.name,
        }


def brace_from_json(data: dict) -> FiniteBrace:
    from .groups import group_from_json

    group = group_from_json(data["carrier"])
    return FiniteBrace(group, data["circ"], name=data.get("name"))


def trivial_brace(g: FiniteGroup) -> FiniteBrace:
    return FiniteBrace(g, g.table, name=f"trivial({g.name})")


def opposite_brace(g: FiniteGroup) -> FiniteBrace:
    """a ∘ b = b · a, i.e. lambda_a is conjugation by a."""
    return FiniteBrace(g, [[g.table[b][a] for b in g.elements] for a in g.elements], name=f"opposite({g.name})")


def multiplicative_group(b: FiniteBrace) -> FiniteGroup:
    """(G, ∘) validated as a group; failures propagate as GroupError."""
    return validate_group(b.circ_table, name=f"({b.group.name},o)")


# checks

def check_brace_axiom(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    """a∘(b·c) = (a∘b)·a^-1·(a∘c); witness is the first failing triple."""
    count = 0
    for x, y, z in b._tuples(3, strategy):
        count += 1
        lhs = b.circ(x, b.mul(y, z))
        rhs = b.mul(b.mul(b.circ(x, y), b.inv(x)), b.circ(x, z))
        if lhs != rhs:
            return _verdict("brace-axiom", False, (x, y, z), count, strategy)
    return _verdict("brace-axiom", True, None, count, strategy)


def check_groups(b: FiniteBrace) -> Verdict:
    """Both tables are groups with one shared identity."""
    try:
        circ_group = multiplicative_group(b)
    except GroupError as exc:
        return Verdict("circ-group", False, exc.witness, detail=str(exc))
    if circ_group.identity != b.group.identity:
        return Verdict("circ-group", False, circ_group.identity, detail="identities differ")
    return Verdict("circ-group", True)


def check_brace(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    if isinstance(b, FiniteBrace):
        v = check_groups(b)
        if not v:
            return v
    return check_brace_axiom(b, strategy)


def _verdict(name, passed, witness, count, strategy: Strategy, detail="") -> Verdict:
    seed = strategy.seed if strategy.mode == "sampled" else None
    return Verdict(name, passed, witness, count, seed, detail)


def lambda_of(b: SkewBrace, a, strategy: Strategy | None = None):
    """lambda_a, verified to be an automorphism of (G, ·).

    Finite carriers return an :class:`Automorphism` checked exhaustively;
    infinite ones return a callable checked on sampled pairs.
    """
    if isinstance(b, FiniteBrace):
        f = b.lambda_map(a)
        g = b.group
        if len(set(f.images)) != g.order:
            raise NotAutomorphism(f"lambda_{a} is not bijective")
        for x, y in itertools.product(g.elements, repeat=2):
            if f(g.table[x][y]) != g.table[f(x)][f(y)]:
                raise NotAutomorphism(f"lambda_{a} not multiplicative at ({x}, {y})")
        return f
    strategy = strategy or Strategy.sampled(200)
    rng = random.Random(strategy.seed)
    for _ in range(strategy.count):
        x, y = b.sample(rng, strategy.size), b.sample(rng, strategy.size)
        if b.lam(a, b.mul(x, y)) != b.mul(b.lam(a, x), b.lam(a, y)):
            raise NotAutomorphism(f"lambda_{a} not multiplicative at ({x}, {y})")
    return lambda y: b.lam(a, y)


def circ_inverse(b: SkewBrace, a):
    return b.circ_inv(a)


def check_lambda_circ_homomorphism(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    """lambda_{a∘b} = lambda_a lambda_b (holds in every skew brace)."""
    probes = b.probes()
    count = 0
    for x, y in b._tuples(2, strategy):
        count += 1
        xy = b.circ(x, y)
        for g in probes:
            if b.lam(xy, g) != b.lam(x, b.lam(y, g)):
                return _verdict("lambda-circ-hom", False, (x, y, g), count, strategy)
    return _verdict("lambda-circ-hom", True, None, count, strategy)


def is_lambda_homomorphic(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    """lambda_{a·b} = lambda_a lambda_b; witness (a, b, probe)."""
    probes = b.probes()
    count = 0
    for x, y in b._tuples(2, strategy):
        count += 1
        xy = b.mul(x, y)
        for g in probes:
            if b.lam(xy, g) != b.lam(x, b.lam(y, g)):
                return _verdict("lambda-homomorphic", False, (x, y, g), count, strategy)
    return _verdict("lambda-homomorphic", True, None, count, strategy)


def _cyclic_group_of_maps(image: list, compose: Callable, identity) -> tuple[bool, Any]:
    """Whether a finite group of maps is cyclic; returns a generator when it is."""
    size = len(image)
    for f in image:
        k, cur = 1, f
        while cur != identity:
            cur = compose(cur, f)
            k += 1
        if k == size:
            return True, f
    return False, None


def is_lambda_cyclic(b: SkewBrace, strategy: Strategy | None = None) -> Verdict:
    """Im lambda is cyclic.  Finite carriers compute the image; infinite ones
    need a descriptor that names a generator or a finite image."""
    if b.finite:
        hom = is_lambda_homomorphic(b, EXHAUSTIVE)
        if not hom:
            return Verdict("lambda-cyclic", False, hom.witness, detail="not lambda-homomorphic")
        image = b.lambda_image()
        ident = tuple(b.group.elements)
        ok, gen = _cyclic_group_of_maps(image, lambda f, h: tuple(f[x] for x in h), ident)
        return Verdict("lambda-cyclic", ok, None if ok else sorted(image)[:2],
                       detail=f"|Im lambda| = {len(image)}" + (f", generator {gen}" if ok else ""))
    gen = b.cyclic_lambda_generator()
    if gen is not None:
        return Verdict("lambda-cyclic", True, None, detail=f"descriptor {b.descriptor.kind}: generated by {gen}")
    ok, size = b.lambda_image_cyclic()  # raises ImageNotFinite
    return Verdict("lambda-cyclic", ok, None, detail=f"|Im lambda| = {size}")


# constructions from a homomorphism into Aut(G)

def _lambda_kernel(lam: Sequence[int], aut: AutomorphismGroup) -> frozenset[int]:
    ident = aut.group.identity
    return frozenset(a for a, f in enumerate(lam) if f == ident)


def criterion_holds(g: FiniteGroup, lam: Sequence[int], aut: AutomorphismGroup) -> tuple[bool, Any]:
    """b^-1 lambda_a(b) in Ker lambda for all a, b; first failing (a, b) otherwise."""
    ker = _lambda_kernel(lam, aut)
    for a in g.elements:
        f = aut.maps[lam[a]].images
        for x in g.elements:
            if g.table[g.inverse[x]][f[x]] not in ker:
                return False, (a, x)
    return True, None


def h_lambda_is_subgroup(g: FiniteGroup, lam: Sequence[int], aut: AutomorphismGroup) -> tuple[bool, Any]:
    """Closure of {(lambda_a, a)} under the holomorph product and inverse, checked directly."""
    members = {(lam[a], a) for a in g.elements}
    for a, x in itertools.product(g.elements, repeat=2):
        f, h = lam[a], lam[x]
        prod = (aut.group.table[f][h], g.table[a][aut.maps[f].images[x]])
        if prod not in members:
            return False, ("product", a, x)
    for a in g.elements:
        f = lam[a]
        finv = aut.group.inverse[f]
        inv = (finv, aut.maps[finv].images[g.inverse[a]])
        if inv not in members:
            return False, ("inverse", a)
    return True, None


def _check_is_homomorphism(g: FiniteGroup, lam: Sequence[int], aut: AutomorphismGroup):
    for a, b in itertools.product(g.elements, repeat=2):
        if lam[g.table[a][b]] != aut.group.table[lam[a]][lam[b]]:
            raise NotHomomorphism(f"lambda({a}*{b}) != lambda({a})lambda({b})")


def construct_from_lambda(g: FiniteGroup, lam: Sequence[int], aut: AutomorphismGroup | None = None,
                          name: str | None = None) -> FiniteBrace | Rejection:
    """Brace with a ∘ b = a · lambda_a(b) when b^-1 lambda_a(b) lies in Ker lambda for all a, b.

    ``lam[a]`` is the index in ``aut`` of lambda_a.  A homomorphism failing the
    criterion yields a :class:`Rejection` with the first (a, b) witness.
    """
    aut = aut or automorphism_group(g)
    lam = tuple(lam)
    _check_is_homomorphism(g, lam, aut)
    ok, witness = criterion_holds(g, lam, aut)
    if not ok:
        return Rejection("b^-1 lambda_a(b) not in Ker lambda", witness)
    table = [[g.table[a][aut.maps[lam[a]].images[b]] for b in g.elements] for a in g.elements]
    return FiniteBrace(g, table, name=name or f"H_lambda({g.name})", descriptor=LambdaDescriptor("table", {"lambda": lam}))


def check_criterion_on_generators(gens: Sequence, phis: Sequence[Callable], kernel_test: Callable[[Any], bool],
                                  mul: Callable, inv: Callable) -> Verdict:
    """x_i^-1 phi_j(x_i) in Ker lambda for every pair of generators.

    ``phis[j]`` is lambda of generator j.  Witness (i, j) is 1-based, matching x1, x2, ...
    """
    count = 0
    for i, x in enumerate(gens, start=1):
        for j, phi in enumerate(phis, start=1):
            count += 1
            if not kernel_test(mul(inv(x), phi(x))):
                return Verdict("generator-criterion", False, (i, j), count)
    return Verdict("generator-criterion", True, None, count)


def corollary_c1_check(g: FiniteGroup, aut: AutomorphismGroup | None = None) -> Verdict:
    """Every lambda with trivial kernel on a nontrivial group must be rejected."""
    aut = aut or automorphism_group(g)
    injective = [lam for lam in all_homomorphisms_to_aut(g, aut) if len(_lambda_kernel(lam, aut)) == 1]
    if g.order == 1:
        return Verdict("injective-lambda-rejected", True, None, 0, detail="trivial group: vacuous")
    for lam in injective:
        if construct_from_lambda(g, lam, aut):
            return Verdict("injective-lambda-rejected", False, lam, len(injective))
    return Verdict("injective-lambda-rejected", True, None, len(injective),
                   detail=f"{len(injective)} injective lambda, all rejected" if injective else "vacuous")


def finite_lambda_braces(g: FiniteGroup, aut: AutomorphismGroup | None = None) -> list[FiniteBrace]:
    """Every lambda-homomorphic brace obtained from a homomorphism G -> Aut G."""
    aut = aut or automorphism_group(g)
    out = []
    for lam in all_homomorphisms_to_aut(g, aut):
        br = construct_from_lambda(g, lam, aut)
        if br:
            out.append(br)
    return out


# meta-triviality

@dataclass
class KernelSubbrace:
    kernel: Any  # frozenset for finite carriers, a predicate otherwise
    quotient_order: int | None
    coset_reps: list | None = None
    checks: list[Verdict] = field(default_factory=list)


def kernel_subbrace(b: SkewBrace, strategy: Strategy | None = None) -> KernelSubbrace:
    """G0 = Ker lambda as a trivial sub-brace with trivial quotient.

    Asserts: G0 normal in (G, ·) and (G, ∘); ∘ = · on G0; a ∘ b ≡ a · b mod G0
    and the coset operation is well defined.  Raises NotLambdaHomomorphic
    when lambda is not a homomorphism on (G, ·).
    """
    strategy = strategy or (EXHAUSTIVE if b.finite else Strategy.sampled(500))
    hom = is_lambda_homomorphic(b, strategy)
    if not hom:
        raise NotLambdaHomomorphic(f"witness {hom.witness}")
    if b.finite:
        return _finite_kernel_subbrace(b)
    return _sampled_kernel_subbrace(b, strategy)


def _finite_kernel_subbrace(b: FiniteBrace) -> KernelSubbrace:
    g = b.group
    g0 = frozenset(a for a in g.elements if b.in_kernel(a))
    checks = []
    circ_group = multiplicative_group(b)
    checks.append(Verdict("kernel-normal-dot", g.is_normal(g0)))
    checks.append(Verdict("kernel-normal-circ", circ_group.is_normal(g0)))
    bad = next(((x, y) for x in g0 for y in g.elements if b.circ(x, y) != b.mul(x, y)), None)
    checks.append(Verdict("kernel-trivial-subbrace", bad is None, bad))
    bad = next(((x, y) for x in g.elements for y in g.elements
                if b.mul(b.inv(b.mul(x, y)), b.circ(x, y)) not in g0), None)
    checks.append(Verdict("quotient-trivial", bad is None, bad))
    bad = next(((x, k, y) for x in g.elements for k in g0 for y in g.elements
                if b.mul(b.inv(b.circ(x, y)), b.circ(b.mul(x, k), y)) not in g0), None)
    checks.append(Verdict("quotient-well-defined", bad is None, bad))
    reps, covered = [], set()
    for x in g.elements:
        if x not in covered:
            reps.append(x)
            covered |= {b.mul(x, k) for k in g0}
    for v in checks:
        if not v:
            raise AssertionError(f"meta-triviality check {v.check} failed: {v.witness}")
    return KernelSubbrace(g0, len(reps), reps, checks)


def _sampled_kernel_subbrace(b: SkewBrace, strategy: Strategy) -> KernelSubbrace:
    rng = random.Random(strategy.seed)
    checks = []
    bad = None
    n = 0
    for _ in range(strategy.count):
        x, y = b.sample(rng, strategy.size), b.sample(rng, strategy.size)
        k = b.mul(b.inv(y), b.lam(x, y))  # lies in Ker lambda for lambda-homomorphic braces
        n += 1
        if not b.in_kernel(k):
            bad = ("commutator-not-in-kernel", x, y)
        elif b.circ(k, y) != b.mul(k, y):
            bad = ("kernel-circ-neq-dot", k, y)
        elif not b.in_kernel(b.mul(b.inv(b.mul(x, y)), b.circ(x, y))):
            bad = ("quotient-nontrivial", x, y)
        elif not b.in_kernel(b.mul(b.mul(b.inv(x), k), x)) or not b.in_kernel(
                b.circ(b.circ(b.circ_inv(x), k), x)):
            bad = ("kernel-not-normal", x, k)
        elif not b.in_kernel(b.mul(b.inv(b.circ(x, y)), b.circ(b.mul(x, k), y))):
            bad = ("quotient-not-well-defined", x, k, y)
        if bad:
            break
    checks.append(Verdict("meta-trivial", bad is None, bad, n, strategy.seed))
    if bad:
        raise AssertionError(f"meta-triviality check failed: {bad}")
    try:
        quotient = len(b.lambda_image())
    except ImageNotFinite:
        quotient = None
    return KernelSubbrace(b.in_kernel, quotient, None, checks)


# symmetry

def symmetric_by_kernel(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    """b̄ ∘ (a·b) ∘ ā in Ker lambda for all pairs."""
    count = 0
    for x, y in b._tuples(2, strategy):
        count += 1
        w = b.circ_chain(b.circ_inv(y), b.mul(x, y), b.circ_inv(x))
        if not b.in_kernel(w):
            return _verdict("symmetric-kernel", False, (x, y), count, strategy)
    return _verdict("symmetric-kernel", True, None, count, strategy)


def symmetric_by_axiom(b: SkewBrace, strategy: Strategy = EXHAUSTIVE) -> Verdict:
    v = check_brace_axiom(b.swapped(), strategy)
    return Verdict("symmetric-axiom", v.passed, v.witness, v.samples, v.seed)


def is_symmetric(b: SkewBrace, strategy: Strategy | None = None) -> Verdict:
    """(G, ∘, ·) is a skew brace, decided two ways that must agree."""
    strategy = strategy or (EXHAUSTIVE if b.finite else Strategy.sampled())
    by_kernel = symmetric_by_kernel(b, strategy)
    by_axiom = symmetric_by_axiom(b, strategy)
    agree = by_kernel.passed == by_axiom.passed
    detail = f"kernel={by_kernel.passed} axiom={by_axiom.passed}" + ("" if agree else " DISAGREE")
    witness = by_kernel.witness or by_axiom.witness
    return Verdict("symmetric", by_kernel.passed and by_axiom.passed and agree, witness,
                   by_axiom.samples, by_axiom.seed, detail)


# isomorphism of finite braces

def brace_isomorphic(b1: FiniteBrace, b2: FiniteBrace, bound: int | None = None) -> bool:
    """A bijection preserving both laws exists (searched over isomorphisms of (G, ·))."""
    return brace_isomorphism(b1, b2, bound) is not None


def brace_isomorphism(b1: FiniteBrace, b2: FiniteBrace, bound: int | None = None) -> tuple[int, ...] | None:
    bound = DEFAULT_ORDER_BOUND if bound is None else bound
    if b1.order > bound or b2.order > bound:
        raise SizeLimitExceeded(f"order exceeds bound {bound}")
    if b1.order != b2.order:
        return None
    m1, m2 = multiplicative_group(b1), multiplicative_group(b2)
    if m1.order_spectrum() != m2.order_spectrum():
        return None
    for f in group_isomorphisms(b1.group, b2.group):
        if all(f[b1.circ_table[x][y]] == b2.circ_table[f[x]][f[y]] for x in b1.elements() for y in b1.elements()):
            return f
    return None


def meta_trivial_search(b: FiniteBrace) -> dict:
    """Harness for the open meta-trivial vs lambda-homomorphic question: reports, never asserts."""
    hom = bool(is_lambda_homomorphic(b))
    g = b.group
    found = None
    # trivial sub-braces that are ideals with trivial quotient: scan normal subgroups of both laws
    circ_group = multiplicative_group(b)
    subsets = _normal_subgroups(g)
    for h in sorted(subsets, key=len):
        if not circ_group.is_normal(h):
            continue
        if any(b.circ(x, y) != b.mul(x, y) for x in h for y in h):
            continue
        if any(b.lam(a, x) not in h for a in g.elements for x in h):
            continue
        if all(b.mul(b.inv(b.mul(x, y)), b.circ(x, y)) in h for x in g.elements for y in g.elements):
            found = sorted(h)
            break
    return {"lambda_homomorphic": hom, "meta_trivial": found is not None, "witness_subbrace": found}


def _normal_subgroups(g: FiniteGroup) -> set[frozenset]:
    subs = {frozenset({g.identity})}
    frontier = list(subs)
    while frontier:
        nxt = []
        for s in frontier:
            for x in g.elements:
                if x in s:
                    continue
                t = g.closure(list(s) + [x])
                if t not in subs:
                    subs.add(t)
                    nxt.append(t)
        frontier = nxt
    return {s for s in subs if g.is_normal(s)}

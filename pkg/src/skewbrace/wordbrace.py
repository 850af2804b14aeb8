"""Braces on free groups and on Z≀Z, plus an index-2 construction for finite abelian groups.

Word braces take lambda: F_n -> Aut F_n through commuting automorphisms
``phi_i = lambda(x_i)``.  The image is abelian, so lambda_w only depends on
the exponent sums of ``w``: lambda_w = prod phi_i^{e_i(w)}, and
a ∘ b = a · lambda_a(b).

Exact factorizations G = A·B with A ∩ B = 1 give
(a1 b1) ∘ (a2 b2) = a1 a2 b2 b1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .brace import (
    FiniteBrace,
    LambdaDescriptor,
    Rejection,
    SkewBrace,
    Verdict,
    check_criterion_on_generators,
)
from .errors import (
    ImageNotFinite,
    NotAbelian,
    NotAutomorphism,
    NotHomomorphism,
    NotIndexTwo,
    NotLogPreserving,
    UnsupportedFamily,
)
from .groups import FiniteGroup
from .words import (
    FreeAutomorphism,
    FreeWord,
    apply_endomorphism,
    commutator,
    log_word,
    random_word,
    word_inverse,
    word_multiply,
)


class WordBrace(SkewBrace):
    """a ∘ b = a · lambda_a(b) on F_rank with lambda(x_i) = phis[i-1]."""

    def __init__(self, rank: int, phis: Sequence[FreeAutomorphism], name: str = "word-brace",
                 descriptor: LambdaDescriptor | None = None):
        if len(phis) != rank:
            raise ValueError(f"need {rank} automorphisms, got {len(phis)}")
        self.rank = rank
        self.phis = tuple(phis)
        self.name = name
        self.uniform = all(p == self.phis[0] for p in self.phis)
        if descriptor is None:
            descriptor = (LambdaDescriptor("power-of-phi", {"phi": self.phis[0], "order": self.phis[0].order()})
                          if self.uniform else LambdaDescriptor("generator-images", {"phis": self.phis}))
        self.descriptor = descriptor

    def lambda_images(self, a: FreeWord) -> tuple[FreeWord, ...]:
        """Generator images of lambda_a."""
        if self.uniform:
            return self.phis[0].power_images(log_word(a))
        images = tuple(FreeWord.gen(i) for i in range(1, self.rank + 1))
        for i, phi in enumerate(self.phis, start=1):
            k = a.exponent_sum(i)
            if k:
                step = phi.power_images(k)
                images = tuple(apply_endomorphism(w, step) for w in images)
        return images

    def one(self):
        return FreeWord()

    def mul(self, a, b):
        return word_multiply(a, b)

    def inv(self, a):
        return word_inverse(a)

    def lam(self, a, b):
        return apply_endomorphism(b, self.lambda_images(a))

    def circ(self, a, b):
        return word_multiply(a, self.lam(a, b))

    def circ_inv(self, a):
        # lambda is a homomorphism on (F, ·), so lambda_a^-1 = lambda_{a^-1}
        ai = word_inverse(a)
        return self.lam(ai, ai)

    def sample(self, rng: random.Random, size: int) -> FreeWord:
        return random_word(rng, self.rank, size)

    def generators(self):
        return [FreeWord.gen(i) for i in range(1, self.rank + 1)]

    def in_kernel(self, a) -> bool:
        return self.lambda_images(a) == tuple(self.generators())

    def cyclic_lambda_generator(self):
        return self.phis[0] if self.uniform else None

    def lambda_image_cyclic(self):
        orders = [p.order() for p in self.phis]
        if None in orders:
            raise ImageNotFinite(f"{self.name}: lambda image is infinite and not uniform")
        image = {tuple(FreeWord.gen(i) for i in range(1, self.rank + 1))}
        frontier = list(image)
        while frontier:
            nxt = []
            for imgs in frontier:
                for p in self.phis:
                    new = tuple(apply_endomorphism(w, p.images) for w in imgs)
                    if new not in image:
                        image.add(new)
                        nxt.append(new)
            frontier = nxt
        ident = tuple(self.generators())
        size = len(image)
        for imgs in image:
            k, cur = 1, imgs
            while cur != ident:
                cur = tuple(apply_endomorphism(w, imgs) for w in cur)
                k += 1
            if k == size:
                return True, size
        return False, size


def _require_commuting(phis: Sequence[FreeAutomorphism]) -> None:
    for i, p in enumerate(phis):
        for j in range(i):
            if p.compose(phis[j]) != phis[j].compose(p):
                raise NotHomomorphism(f"lambda(x{j + 1}) and lambda(x{i + 1}) do not commute")


def _ensure_invertible(phi: FreeAutomorphism) -> FreeAutomorphism:
    if phi._inverse_images is not None:
        return phi
    order = phi.order()
    if order is None:
        raise NotAutomorphism("inverse images needed for an automorphism of infinite order")
    return FreeAutomorphism(phi.rank, phi.images, phi.power_images(order - 1))


def word_brace_from_lambda(rank: int, phis: Sequence[FreeAutomorphism], name: str = "word-brace"
                           ) -> WordBrace | Rejection:
    """Brace for lambda(x_i) = phis[i-1], or a Rejection carrying the first
    1-based pair (i, j) with x_i^-1 phi_j(x_i) outside Ker lambda."""
    phis = [_ensure_invertible(p) for p in phis]
    _require_commuting(phis)
    b = WordBrace(rank, phis, name)
    v = check_criterion_on_generators(b.generators(), phis, b.in_kernel, word_multiply, word_inverse)
    if not v:
        return Rejection("x_i^-1 lambda(x_j)(x_i) not in Ker lambda", v.witness)
    return b


def homogeneous_brace(rank: int, phi: FreeAutomorphism, name: str | None = None) -> WordBrace:
    """w1 ∘ w2 = w1 · phi^{l(w1)}(w2); phi must keep every generator at logarithm 1."""
    for i, w in enumerate(phi.images, start=1):
        if log_word(w) != 1:
            raise NotLogPreserving(f"l(phi(x{i})) = {log_word(w)}", generator=i)
    phi = _ensure_invertible(phi)
    return WordBrace(rank, [phi] * rank, name or f"homogeneous(F{rank})")


def f2_swap_brace() -> WordBrace:
    """theta: x1 <-> x2 on F2; lambda_w = theta^{l(w)}."""
    return homogeneous_brace(2, FreeAutomorphism.permutation([2, 1]), "F2-swap")


def f2_inversion_brace() -> WordBrace:
    """theta: x_i -> x_i^-1 on F2; lambda_w = theta^{l(w)}."""
    theta = FreeAutomorphism.permutation([1, 2], invert=True)
    b = word_brace_from_lambda(2, [theta, theta], "F2-inversion")
    assert b, "inversion construction rejected"
    return b


def even_parity(w: FreeWord) -> bool:
    """Membership in the kernel of F2 -> Z/2, w -> l(w) mod 2."""
    return log_word(w) % 2 == 0


def verify_f3_semidirect_presentation() -> Verdict:
    """Relations of (F2, ∘) for the inversion brace with p = xy, q = x^2, r = y^2, s = x:
    s∘s = 1, s∘p∘s = p^-1, s∘q∘s = q^-1, s∘r∘s = p r^-1 p^-1 (inverses and
    products on the right-hand sides taken in (F2, ∘))."""
    b = f2_inversion_brace()
    x, y = FreeWord.gen(1), FreeWord.gen(2)
    p, q, r, s = x * y, x * x, y * y, x
    ci = b.circ_inv
    relations = [
        ("s∘s = 1", b.circ(s, s) == FreeWord()),
        ("s∘p∘s = p^-1", b.circ_chain(s, p, s) == ci(p)),
        ("s∘q∘s = q^-1", b.circ_chain(s, q, s) == ci(q)),
        ("s∘r∘s = p∘r^-1∘p^-1", b.circ_chain(s, r, s) == b.circ_chain(p, ci(r), ci(p))),
        ("∘ = · on p, q, r", all(b.circ(u, v) == u * v for u in (p, q, r) for v in (p, q, r))),
    ]
    failed = [name for name, ok in relations if not ok]
    return Verdict("f2-inversion-presentation", not failed, failed[0] if failed else None, len(relations))


def f4_ia_brace() -> WordBrace:
    """lambda(x1) = lambda(x2) = phi, lambda(x3) = lambda(x4) = psi on F4 with
    phi: x1 -> x1 u and psi: x4 -> x4 v, where u = [x2, x3] and v = [x3, x2]."""
    x1, x2, x3, x4 = (FreeWord.gen(i) for i in range(1, 5))
    u, v = commutator(x2, x3), commutator(x3, x2)
    phi = FreeAutomorphism(4, [x1 * u, x2, x3, x4], [x1 * ~u, x2, x3, x4])
    psi = FreeAutomorphism(4, [x1, x2, x3, x4 * v], [x1, x2, x3, x4 * ~v])
    b = word_brace_from_lambda(4, [phi, phi, psi, psi], "F4-IA")
    assert b, "IA construction rejected"
    return b


# finitely generated subgroups of free groups

def subgroup_contains(generators: Iterable[FreeWord], w: FreeWord) -> bool:
    """Membership in <generators> via Stallings folding of the petal graph."""
    edges: dict[tuple[int, int], int] = {}  # (vertex, signed letter) -> vertex
    parent: list[int] = [0]

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def new_vertex():
        parent.append(len(parent))
        return len(parent) - 1

    raw: list[tuple[int, int, int]] = []
    for g in generators:
        letters = [gen if e > 0 else -gen for gen, e in g.syllables for _ in range(abs(e))]
        if not letters:
            continue
        cur = 0
        for k, c in enumerate(letters):
            nxt = 0 if k == len(letters) - 1 else new_vertex()
            raw.append((cur, c, nxt))
            cur = nxt
    pending = [(a, c, b) for a, c, b in raw] + [(b, -c, a) for a, c, b in raw]
    while pending:
        a, c, b = pending.pop()
        a, b = find(a), find(b)
        key = (a, c)
        if key not in edges:
            edges[key] = b
            continue
        other = find(edges[key])
        if other != b:
            parent[other] = b
            # re-insert edges of the merged vertex so they fold with b's
            moved = [(k, t) for k, t in edges.items() if find(k[0]) != k[0] or find(t) != t]
            for k, t in moved:
                del edges[k]
                pending.append((k[0], k[1], t))
    cur = 0
    for gen, e in w.syllables:
        c = gen if e > 0 else -gen
        for _ in range(abs(e)):
            nxt = edges.get((find(cur), c))
            if nxt is None:
                return False
            cur = find(nxt)
    return find(cur) == find(0)


def same_subgroup(gens_a: Sequence[FreeWord], gens_b: Sequence[FreeWord]) -> bool:
    return all(subgroup_contains(gens_b, g) for g in gens_a) and all(subgroup_contains(gens_a, g) for g in gens_b)


def parity_kernel_generator_check() -> Verdict:
    """Both {xy, yx, x^2, y^2} and {xy, x^2, xy^-1} generate the even-length
    subgroup of F2, whose Schreier basis for the transversal {1, x} is
    {x^2, xy, yx^-1}."""
    x, y = FreeWord.gen(1), FreeWord.gen(2)
    first = [x * y, y * x, x * x, y * y]
    second = [x * y, x * x, x * ~y]
    schreier = [x * x, x * y, y * ~x]
    checks = {
        "first-in-parity-kernel": all(even_parity(g) for g in first),
        "second-in-parity-kernel": all(even_parity(g) for g in second),
        "first-generates-kernel": same_subgroup(first, schreier),
        "second-generates-kernel": same_subgroup(second, schreier),
    }
    failed = [k for k, ok in checks.items() if not ok]
    return Verdict("parity-kernel-generators", not failed, failed[0] if failed else None, len(checks),
                   detail="the four-element set is not a free basis: the kernel has rank 3")


# exact factorizations

class FactorizationBrace(SkewBrace):
    """(a1 b1) ∘ (a2 b2) = a1 a2 b2 b1 for a split g -> (a, b) with g = a b."""

    def split(self, g):
        raise NotImplementedError

    def b_part(self, g):
        return self.split(g)[1]

    def circ(self, x, y):
        a1, b1 = self.split(x)
        a2, b2 = self.split(y)
        return self.mul(self.mul(a1, a2), self.mul(b2, b1))

    def lam(self, x, y):
        b1 = self.b_part(x)
        return self.mul(self.mul(self.inv(b1), y), b1)

    def circ_inv(self, x):
        a, b = self.split(x)
        return self.mul(self.inv(a), self.inv(b))

    def in_kernel(self, x) -> bool:
        return all(self.lam(x, g) == g for g in self.generators())


class FreeProductFactorization(FactorizationBrace):
    """F_{c+b} = C * B with C = <x_1..x_c> normally closed into A = ker of the
    retraction onto B = <x_{c+1}..x_{c+b}> that deletes the C letters."""

    def __init__(self, c_rank: int, b_rank: int, name: str | None = None):
        if c_rank < 0 or b_rank < 1:
            raise UnsupportedFamily("free product needs b_rank >= 1")
        self.c_rank, self.b_rank = c_rank, b_rank
        self.rank = c_rank + b_rank
        self.name = name or f"F{self.rank}=C{c_rank}*B{b_rank}"
        self.descriptor = LambdaDescriptor("inner-by-B-part", {"c_rank": c_rank, "b_rank": b_rank})

    def one(self):
        return FreeWord()

    def mul(self, a, b):
        return word_multiply(a, b)

    def inv(self, a):
        return word_inverse(a)

    def split(self, g: FreeWord):
        b = FreeWord((gen, e) for gen, e in g.syllables if gen > self.c_rank)
        return word_multiply(g, word_inverse(b)), b

    def sample(self, rng, size):
        return random_word(rng, self.rank, size)

    def generators(self):
        return [FreeWord.gen(i) for i in range(1, self.rank + 1)]


@dataclass(frozen=True)
class WreathElement:
    """(f, t) in Z≀Z: f is a finitely supported Z -> Z stored as sorted
    (index, coefficient) pairs, t is the power of the top generator x."""

    base: tuple[tuple[int, int], ...] = ()
    shift: int = 0

    @classmethod
    def make(cls, base: dict[int, int], shift: int = 0) -> "WreathElement":
        return cls(tuple(sorted((i, c) for i, c in base.items() if c)), shift)

    @classmethod
    def y(cls, i: int, k: int = 1) -> "WreathElement":
        return cls.make({i: k})

    @classmethod
    def x(cls, k: int = 1) -> "WreathElement":
        return cls((), k)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        """(f, t)(g, s) = (f + g(. + t), t + s), so that x^-1 y_i x = y_{i+1}."""
        f = dict(self.base)
        for i, c in other.base:
            f[i - self.shift] = f.get(i - self.shift, 0) + c
        return WreathElement.make(f, self.shift + other.shift)

    def inverse(self) -> "WreathElement":
        return WreathElement.make({i + self.shift: -c for i, c in self.base}, -self.shift)

    def __str__(self):
        parts = [f"y{i}" if c == 1 else f"y{i}^{c}" for i, c in self.base] + ([f"x^{self.shift}"] if self.shift else [])
        return "*".join(parts) or "1"


class WreathFactorization(FactorizationBrace):
    """Z≀Z = A·<x> with A the base group generated by the y_i."""

    name = "ZwrZ"

    def __init__(self):
        self.descriptor = LambdaDescriptor("inner-by-B-part", {"family": "wreath"})

    def one(self):
        return WreathElement()

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def split(self, g: WreathElement):
        return WreathElement(g.base, 0), WreathElement.x(g.shift)

    def sample(self, rng, size):
        support = rng.sample(range(-size, size + 1), rng.randint(0, min(size, 2 * size + 1)))
        return WreathElement.make({i: rng.choice([-3, -2, -1, 1, 2, 3]) for i in support},
                                  rng.randint(-size, size))

    def generators(self):
        return [WreathElement.y(0), WreathElement.x()]


FAMILIES = ("free_product", "free_group", "wreath")


def exact_factorization_brace(family: str, **params) -> FactorizationBrace:
    """``free_product(c_rank, b_rank)``, ``free_group(n)`` with B = <x_n>, or ``wreath``."""
    if family == "free_product":
        return FreeProductFactorization(params.get("c_rank", 1), params.get("b_rank", 1))
    if family == "free_group":
        n = params.get("n", 2)
        if n < 1:
            raise UnsupportedFamily("free_group needs n >= 1")
        return FreeProductFactorization(n - 1, 1, f"F{n}")
    if family == "wreath":
        return WreathFactorization()
    raise UnsupportedFamily(f"unsupported factorization family {family!r}; known: {', '.join(FAMILIES)}")


# index-2 construction

def index2_brace(a: FiniteGroup, b: Iterable[int], name: str | None = None) -> FiniteBrace:
    """x ∘ y = x + y when x is in B, x - y otherwise."""
    if not a.is_abelian():
        raise NotAbelian(f"{a.name} is not abelian")
    sub = frozenset(b)
    if a.closure(sub) != sub or 2 * len(sub) != a.order:
        raise NotIndexTwo(f"subset of size {len(sub)} is not a subgroup of index 2 in {a.name}")
    table = [[a.mul(x, y) if x in sub else a.mul(x, a.inv(y)) for y in a.elements] for x in a.elements]
    rep = min(set(a.elements) - sub)
    return FiniteBrace(a, table, name or f"index2({a.name})",
                       LambdaDescriptor("kernel-coset", {"subgroup": tuple(sorted(sub)), "coset_rep": rep}))


__all__ = [
    "WordBrace", "word_brace_from_lambda", "homogeneous_brace", "f2_swap_brace", "f2_inversion_brace",
    "even_parity", "verify_f3_semidirect_presentation", "f4_ia_brace", "subgroup_contains", "same_subgroup",
    "parity_kernel_generator_check", "FactorizationBrace", "FreeProductFactorization", "WreathElement",
    "WreathFactorization", "exact_factorization_brace", "index2_brace", "FAMILIES"
]

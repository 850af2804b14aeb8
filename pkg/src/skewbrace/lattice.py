"""Braces on free abelian groups Z^n.

lambda is a homomorphism Z^n -> GL(n, Z) fixed by commuting matrices
``M_i = lambda(x_i)``, so lambda_a = prod M_i^{a_i} and a ∘ b = a + lambda_a(b).
The lambda-cyclic family has every M_i equal to one phi, giving
a ∘ b = a + phi^{l(a)}(b) with l(a) the coordinate sum.

Matrices use the row-image convention of :mod:`skewbrace.intmat`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .brace import LambdaDescriptor, Rejection, SkewBrace, Verdict, check_criterion_on_generators
from .errors import BadRank, ImageNotFinite, NotHomomorphism, NotValidPhi
from .intmat import (
    Matrix,
    Vector,
    as_matrix,
    identity_matrix,
    matmul,
    matrix_apply,
    matrix_order,
    matrix_power,
    rank,
    require_unimodular,
    unit_vector,
    vadd,
    vneg,
    vscale,
    vsub,
)


def log_vector(a: Vector) -> int:
    return sum(a)


class LatticeBrace(SkewBrace):
    def __init__(self, gen_matrices: Sequence[Sequence[Sequence[int]]], name: str = "lattice",
                 descriptor: LambdaDescriptor | None = None):
        self.gen_matrices = tuple(as_matrix(m) for m in gen_matrices)
        self.n = len(self.gen_matrices)
        if any(len(m) != self.n for m in self.gen_matrices):
            raise BadRank("need one n x n matrix per basis vector")
        for m in self.gen_matrices:
            require_unimodular(m)
        self.name = name
        self.descriptor = descriptor or LambdaDescriptor("generator-images", {"matrices": self.gen_matrices})
        self._power = lru_cache(maxsize=4096)(self._power_uncached)

    def _power_uncached(self, i: int, k: int) -> Matrix:
        return matrix_power(self.gen_matrices[i], k)

    def lambda_matrix(self, a: Vector) -> Matrix:
        m = identity_matrix(self.n)
        for i, k in enumerate(a):
            if k:
                m = matmul(m, self._power(i, k))
        return m

    def one(self) -> Vector:
        return (0,) * self.n

    def mul(self, a, b):
        return vadd(a, b)

    def inv(self, a):
        return vneg(a)

    def circ(self, a, b):
        return vadd(a, matrix_apply(self.lambda_matrix(a), b))

    def lam(self, a, b):
        return matrix_apply(self.lambda_matrix(a), b)

    def circ_inv(self, a):
        # lambda is additive, so lambda_a^-1 = lambda_{-a}
        return matrix_apply(self.lambda_matrix(vneg(a)), vneg(a))

    def sample(self, rng: random.Random, size: int) -> Vector:
        return tuple(rng.randint(-size, size) for _ in range(self.n))

    def box(self, radius: int) -> list[Vector]:
        return list(itertools.product(range(-radius, radius + 1), repeat=self.n))

    def generators(self):
        return [unit_vector(self.n, i) for i in range(self.n)]

    def in_kernel(self, a) -> bool:
        return self.lambda_matrix(a) == identity_matrix(self.n)

    def lambda_image(self, limit: int = 512) -> list[Matrix]:
        ident = identity_matrix(self.n)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for m in self.gen_matrices:
                    y = matmul(x, m)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > limit:
                            raise ImageNotFinite(f"{self.name}: lambda image exceeds {limit} elements")
            frontier = nxt
        return sorted(seen)

    def lambda_image_cyclic(self) -> tuple[bool, int | str]:
        """Finite images are scanned for a generator.  When every
        ``N_i = M_i - I`` has ``N_i N_j = 0`` the map a -> lambda_a is
        I + sum a_i N_i, so the image is free abelian of rank rank(N_i)."""
        try:
            image = self.lambda_image()
        except ImageNotFinite:
            ident = identity_matrix(self.n)
            nil = [tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(m, ident)) for m in self.gen_matrices]
            zero = tuple((0,) * self.n for _ in range(self.n))
            if any(matmul(a, b) != zero for a in nil for b in nil):
                raise
            r = rank([sum(m, ()) for m in nil])
            return r <= 1, f"Z^{r}"
        return any(matrix_order(m, len(image)) == len(image) for m in image), len(image)

    def cyclic_lambda_generator(self):
        if self.descriptor.kind == "power-of-phi":
            return self.descriptor.data["phi"]
        return None


class CyclicLatticeBrace(LatticeBrace):
    """a ∘ b = a + phi^{l(a)}(b)."""

    def __init__(self, phi: Sequence[Sequence[int]], name: str = "cyclic-lattice"):
        phi = as_matrix(phi)
        verdict = validate_phi(phi)
        if not verdict:
            raise NotValidPhi(f"row {verdict.witness} of phi does not sum to 1")
        self.phi = phi
        self.phi_order = matrix_order(phi)
        super().__init__([phi] * len(phi), name,
                         LambdaDescriptor("power-of-phi", {"phi": phi, "order": self.phi_order}))
        self._phi_power = lru_cache(maxsize=4096)(lambda k: matrix_power(self.phi, k))

    def lambda_matrix(self, a):
        k = log_vector(a)
        if self.phi_order is not None:
            k %= self.phi_order
        return self._phi_power(k)

    def in_kernel(self, a) -> bool:
        k = log_vector(a)
        return k % self.phi_order == 0 if self.phi_order is not None else k == 0


def validate_phi(m: Sequence[Sequence[int]]) -> Verdict:
    """phi(x_i) ≡ x_i mod the zero-sum sublattice, i.e. each row sums to 1.

    Witness is the 1-based index of the first offending basis vector.
    Raises NotUnimodular when det is not +-1.
    """
    m = as_matrix(m)
    require_unimodular(m)
    for i, row in enumerate(m, start=1):
        if sum(row) != 1:
            return Verdict("valid-phi", False, i, detail=f"row {i} sums to {sum(row)}")
    return Verdict("valid-phi", True)


def lattice_circ(b: LatticeBrace, x: Vector, y: Vector) -> Vector:
    return b.circ(x, y)


def lattice_from_lambda(gen_matrices: Sequence) -> LatticeBrace | Rejection:
    """Brace from lambda(x_i) = M_i, or a Rejection when the generator criterion fails."""
    mats = [as_matrix(m) for m in gen_matrices]
    n = len(mats)
    for i in range(n):
        for j in range(i):
            if matmul(mats[i], mats[j]) != matmul(mats[j], mats[i]):
                raise NotHomomorphism(f"lambda(x{j + 1}) and lambda(x{i + 1}) do not commute")
    b = LatticeBrace(mats)
    v = check_criterion_on_generators(
        b.generators(), [lambda x, m=m: matrix_apply(m, x) for m in mats], b.in_kernel, vadd, vneg)
    if not v:
        return Rejection("x_i^-1 lambda(x_j)(x_i) not in Ker lambda", v.witness)
    return b


# Z^2 families

def z2_case1_matrix(p: int) -> Matrix:
    return ((1 + p, -p), (p, 1 - p))


def z2_case2_matrix(p: int) -> Matrix:
    return ((1 + p, -p), (p + 2, -1 - p))


def z2_brace(family: str, p: int) -> CyclicLatticeBrace:
    if family == "case1":
        return CyclicLatticeBrace(z2_case1_matrix(p), f"Z2-case1(p={p})")
    if family == "case2":
        return CyclicLatticeBrace(z2_case2_matrix(p), f"Z2-case2(p={p})")
    raise ValueError(f"unknown family {family!r}")


def z2_case1_circ(p: int, a: Vector, b: Vector) -> Vector:
    """a + b + p(a1+a2)(b1+b2)(x1 - x2)."""
    k = p * (a[0] + a[1]) * (b[0] + b[1])
    return (a[0] + b[0] + k, a[1] + b[1] - k)


def z2_case1_inverse(p: int, a: Vector) -> Vector:
    """-a + p(a1+a2)^2 (x1 - x2)."""
    k = p * (a[0] + a[1]) ** 2
    return (-a[0] + k, -a[1] - k)


def z2_case2_circ(p: int, a: Vector, b: Vector) -> Vector:
    if (a[0] + a[1]) % 2 == 0:
        return vadd(a, b)
    k = 2 * b[1] + p * (b[0] + b[1])
    return (a[0] + b[0] + k, a[1] + b[1] - k)


def z2_case2_inverse(p: int, a: Vector) -> Vector:
    if (a[0] + a[1]) % 2 == 0:
        return vneg(a)
    k = 2 * a[1] + p * (a[0] + a[1])
    return (-a[0] - k, -a[1] + k)


@dataclass
class Z2Classification:
    family: str  # "Trivial", "Case1", "Case2"
    p: int | None
    mult_group: str  # "FreeAbelianRank2-identical", "FreeAbelianRank2-isomorphic", "KleinBottle"
    checks: list[Verdict] = field(default_factory=list)

    @property
    def type_number(self) -> int:
        return {"FreeAbelianRank2-identical": 1, "FreeAbelianRank2-isomorphic": 2, "KleinBottle": 3}[self.mult_group]


def z2_classify(m: Sequence[Sequence[int]]) -> Z2Classification:
    """Family and multiplicative-group type (with the parameter p) of the brace a ∘ b = a + phi^{l(a)}(b) on Z^2."""
    m = as_matrix(m)
    if len(m) != 2:
        raise BadRank("z2_classify needs a 2 x 2 matrix")
    v = validate_phi(m)
    if not v:
        raise NotValidPhi(f"row {v.witness} does not sum to 1")
    b = CyclicLatticeBrace(m)
    x1, x2 = (1, 0), (0, 1)
    z2 = vsub(x1, x2)
    det = require_unimodular(m)
    if det == 1:
        p = m[1][0]
        if m != z2_case1_matrix(p):
            raise NotValidPhi(f"det 1 but not of case-1 shape: {m}")
        if p == 0:
            return Z2Classification("Trivial", 0, "FreeAbelianRank2-identical",
                                    [Verdict("circ-equals-plus", b.circ(x1, x2) == vadd(x1, x2))])
        lhs, rhs = b.circ(x1, z2), b.circ(z2, x1)
        checks = [Verdict("x1-commutes-with-x1-x2", lhs == rhs == (2, -1), (lhs, rhs))]
        return Z2Classification("Case1", p, "FreeAbelianRank2-isomorphic", checks)
    p = m[0][0] - 1
    if m != z2_case2_matrix(p):
        raise NotValidPhi(f"det -1 but not of case-2 shape: {m}")
    z1 = vadd(x1, x2)
    x1bar = b.circ_inv(x1)
    klein = b.circ_chain(x1bar, z2, x1)
    checks = [
        Verdict("klein-relation", klein == b.circ_inv(z2), klein),
        Verdict("x1-square", b.circ(x1, x1) == vadd(z1, vscale(p + 1, z2))),
        Verdict("conj-z1", b.circ_chain(x1bar, z1, x1) == vadd(z1, vscale(2 * (1 + p), z2))),
        Verdict("z1-z2-commute", b.circ(z1, z2) == b.circ(z2, z1)),
        Verdict("phi-order-2", matrix_power(m, 2) == identity_matrix(2)),
    ]
    return Z2Classification("Case2", p, "KleinBottle", checks)


# Z^n constructions

def cyclic_permutation_matrix(n: int) -> Matrix:
    """psi: x_i -> x_{i+1}, x_n -> x_1."""
    return tuple(unit_vector(n, (i + 1) % n) for i in range(n))


def cyclic_permutation_brace(n: int) -> CyclicLatticeBrace:
    if n < 2:
        raise BadRank("cyclic permutation brace needs n >= 2")
    return CyclicLatticeBrace(cyclic_permutation_matrix(n), f"Z{n}-cyclic-permutation")


def cyclic_kernel_member(n: int, a: Vector) -> bool:
    """A0 = {sum a_i ≡ 0 mod n}."""
    return log_vector(a) % n == 0


def verify_presentation_relations(n: int, max_n: int = 12) -> Verdict:
    """Relations of (Z^n, ∘) for the cyclic-permutation brace, with x = x1, z = x2 - x1.

    [x^n, z] = 1, (z∘x)^n = x^n, [z, x^k, z] = 1 (1 <= k <= n-2), plus
    x^n = z_1, [z_i, z_j] = 1, x∘z_k∘x̄ = z_{k+1} (2 <= k <= n-1) and
    x∘z_n∘x̄ = z̄_2∘...∘z̄_n, where z_1 = sum x_i and z_k = x_k - x_{k-1}.
    Commutators are [a, b] = ā∘b̄∘a∘b and [a, b, c] = [[a, b], c].
    """
    if not 2 <= n <= max_n:
        raise BadRank(f"n must lie in [2, {max_n}]")
    b = cyclic_permutation_brace(n)
    e = b.one()
    x = unit_vector(n, 0)
    z = vsub(unit_vector(n, 1), x)
    zs = {1: tuple([1] * n)}
    for k in range(2, n + 1):
        zs[k] = vsub(unit_vector(n, k - 1), unit_vector(n, k - 2))
    xn = b.power(x, n)
    xbar = b.circ_inv(x)
    relations: list[tuple[str, bool]] = [
        ("x^n = z1", xn == zs[1]),
        ("[x^n, z] = 1", b.circ_commutator(xn, z) == e),
        ("(z∘x)^n = x^n", b.power(b.circ(z, x), n) == xn),
    ]
    for k in range(1, n - 1):
        inner = b.circ_commutator(z, b.power(x, k))
        relations.append((f"[z, x^{k}, z] = 1", b.circ_commutator(inner, z) == e))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            relations.append((f"[z{i}, z{j}] = 1", b.circ_commutator(zs[i], zs[j]) == e))
    for k in range(2, n):
        relations.append((f"x∘z{k}∘x̄ = z{k + 1}", b.circ_chain(x, zs[k], xbar) == zs[k + 1]))
    rhs = b.circ_chain(*(b.circ_inv(zs[k]) for k in range(2, n + 1)))
    relations.append((f"x∘z{n}∘x̄ = z̄2∘...∘z̄{n}", b.circ_chain(x, zs[n], xbar) == rhs))
    failed = [name for name, ok in relations if not ok]
    return Verdict("presentation", not failed, failed[0] if failed else None, len(relations),
                   detail=f"{len(relations)} relations, n={n}")


def upper_triangular_example_brace(n: int) -> LatticeBrace:
    """lambda(x_i) = phi_i with phi_i: x_i -> x_i + x_n (i < n), lambda(x_n) = id."""
    if n < 2:
        raise BadRank("need n >= 2")
    mats = []
    for i in range(n):
        m = [list(r) for r in identity_matrix(n)]
        if i < n - 1:
            m[i][n - 1] += 1
        mats.append(m)
    b = lattice_from_lambda(mats)
    b.name = f"Z{n}-upper-triangular"
    return b


def upper_triangular_power(n: int, i: int, k: int) -> Vector:
    """Closed form x_i^{∘k} = k x_i + k(k-1)/2 x_n (0-based i < n-1)."""
    v = [0] * n
    v[i] += k
    v[n - 1] += k * (k - 1) // 2
    return tuple(v)


def integer_brace() -> LatticeBrace:
    """m ∘ n = m + (-1)^m n on Z."""
    b = lattice_from_lambda([[[-1]]])
    b.name = "Z-sign"
    return b

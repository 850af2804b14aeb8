"""Truncated non-commutative integer power series and the adjoint brace.

A series in variables X_1..X_n is a map from monomials (tuples of 1-based
variable indices) to nonzero integers, with every monomial longer than the
degree cap dropped.  Dropping long monomials is the quotient by a two-sided
ideal, so sums and products stay exact.

Series with zero constant term form a two-sided brace under + and the
adjoint law a ∘ b = a + b + ab.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .brace import DEFAULT_SEED, LambdaDescriptor, SkewBrace, Verdict
from .errors import CapMismatch, UnknownGenerator
from .words import FreeWord, reduced_words

Monomial = tuple[int, ...]


class TruncatedSeries:
    __slots__ = ("n_vars", "cap", "terms", "_key")

    def __init__(self, n_vars: int, cap: int, terms: Mapping[Monomial, int] | Iterable = ()):
        self.n_vars = n_vars
        self.cap = cap
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) > cap or not c:
                continue
            if any(not 1 <= v <= n_vars for v in mono):
                raise UnknownGenerator(f"monomial {mono} uses a variable outside 1..{n_vars}")
            clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}
        self._key = tuple(sorted(self.terms.items()))

    @classmethod
    def zero(cls, n_vars: int, cap: int) -> "TruncatedSeries":
        return cls(n_vars, cap)

    @classmethod
    def one(cls, n_vars: int, cap: int) -> "TruncatedSeries":
        return cls(n_vars, cap, {(): 1})

    @classmethod
    def var(cls, i: int, n_vars: int, cap: int) -> "TruncatedSeries":
        if not 1 <= i <= n_vars:
            raise UnknownGenerator(f"no variable X{i}")
        return cls(n_vars, cap, {(i,): 1})

    def _same(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"cannot combine series with {type(other).__name__}")
        if (self.n_vars, self.cap) != (other.n_vars, other.cap):
            raise CapMismatch(f"(vars, cap) {(self.n_vars, self.cap)} vs {(other.n_vars, other.cap)}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries(self.n_vars, self.cap, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.n_vars, self.cap, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same(other)
        out: dict[Monomial, int] = {}
        cap = self.cap
        right = sorted(other.terms.items(), key=lambda t: len(t[0]))
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            for m2, c2 in right:
                if len(m2) > room:
                    break
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return TruncatedSeries(self.n_vars, cap, out)

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(self.n_vars, self.cap, {m: k * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and (self.n_vars, self.cap, self._key) == \
            (other.n_vars, other.cap, other._key)

    def __hash__(self):
        return hash((self.n_vars, self.cap, self._key))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono: Iterable[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    @property
    def constant(self) -> int:
        return self.terms.get((), 0)

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise CapMismatch(f"cannot raise cap {self.cap} to {cap}")
        return TruncatedSeries(self.n_vars, cap, self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self._key:
            name = "".join(f"X{v}" for v in m) or "1"
            parts.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TruncatedSeries({self.n_vars}, {self.cap}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"vars": self.n_vars, "cap": self.cap, "terms": [[list(m), c] for m, c in self._key]}


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def _require_ideal(a: TruncatedSeries) -> None:
    if a.constant:
        raise ValueError(f"constant term {a.constant} is not zero")


def adjoint_circ(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a + b + ab."""
    return a + b + a * b


def adjoint_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """-a + a^2 - a^3 + ..., which terminates because a^k has degree >= k."""
    _require_ideal(a)
    out = TruncatedSeries.zero(a.n_vars, a.cap)
    power = a
    sign = -1
    for _ in range(a.cap):
        if not power:
            break
        out = out + power.scale(sign)
        power = power * a
        sign = -sign
    return out


def random_ideal_element(rng: random.Random, n_vars: int, cap: int, terms: int = 4, coeff: int = 3
                         ) -> TruncatedSeries:
    out = {}
    for _ in range(rng.randint(0, terms)):
        length = rng.randint(1, cap)
        out[tuple(rng.randint(1, n_vars) for _ in range(length))] = rng.randint(-coeff, coeff)
    return TruncatedSeries(n_vars, cap, out)


class SeriesBrace(SkewBrace):
    """(ideal, +, ∘) with the adjoint law."""

    def __init__(self, n_vars: int, cap: int):
        self.n_vars, self.cap = n_vars, cap
        self.name = f"adjoint(vars={n_vars}, cap={cap})"
        self.descriptor = LambdaDescriptor("adjoint", {"vars": n_vars, "cap": cap})

    def one(self):
        return TruncatedSeries.zero(self.n_vars, self.cap)

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def circ(self, a, b):
        return adjoint_circ(a, b)

    def lam(self, a, b):
        # -a + (a + b + ab) = b + ab
        return b + a * b

    def circ_inv(self, a):
        return adjoint_inverse(a)

    def sample(self, rng, size):
        return random_ideal_element(rng, self.n_vars, self.cap, terms=size)

    def generators(self):
        return [TruncatedSeries.var(i, self.n_vars, self.cap) for i in range(1, self.n_vars + 1)]

    def in_kernel(self, a) -> bool:
        # lambda_a(b) = b + ab, so a is in the kernel iff a kills the ideal, which
        # happens iff a*X_i = 0 for each i (a lives entirely in degree cap)
        return not any(a * x for x in self.generators())


def check_two_sided_brace(cap: int, n_vars: int, samples: int = 500, seed: int = DEFAULT_SEED,
                          terms: int = 4) -> Verdict:
    """a∘(b+c) = a∘b - a + a∘c and (b+c)∘a = b∘a - a + c∘a on seeded triples."""
    rng = random.Random(seed)
    for k in range(1, samples + 1):
        a, b, c = (random_ideal_element(rng, n_vars, cap, terms) for _ in range(3))
        if adjoint_circ(a, b + c) != adjoint_circ(a, b) - a + adjoint_circ(a, c):
            return Verdict("two-sided-brace", False, ("left", str(a), str(b), str(c)), k, seed)
        if adjoint_circ(b + c, a) != adjoint_circ(b, a) - a + adjoint_circ(c, a):
            return Verdict("two-sided-brace", False, ("right", str(a), str(b), str(c)), k, seed)
    return Verdict("two-sided-brace", True, None, samples, seed)


def magnus_image(w: FreeWord, n_vars: int, cap: int) -> TruncatedSeries:
    """x_i -> X_i, x_i^-1 -> adjoint inverse of X_i, extended as a ∘-homomorphism.

    Under a -> 1 + a this is the substitution x_i -> 1 + X_i into the units."""
    out = TruncatedSeries.zero(n_vars, cap)
    cache: dict[tuple[int, int], TruncatedSeries] = {}
    for g, e in w.syllables:
        if not 1 <= g <= n_vars:
            raise UnknownGenerator(f"x{g} has no variable (vars={n_vars})")
        sign = 1 if e > 0 else -1
        if (g, sign) not in cache:
            x = TruncatedSeries.var(g, n_vars, cap)
            cache[(g, sign)] = x if sign > 0 else adjoint_inverse(x)
        for _ in range(abs(e)):
            out = adjoint_circ(out, cache[(g, sign)])
    return out


def free_subgroup_witness(cap: int, length: int) -> Verdict:
    """Magnus images of all reduced words of length <= ``length`` on two
    generators are pairwise distinct at the given cap."""
    if cap < length:
        raise ValueError(f"cap {cap} must be at least the word length {length}")
    words = reduced_words(2, length)
    seen: dict[TruncatedSeries, FreeWord] = {}
    for w in words:
        img = magnus_image(w, 2, cap)
        if img in seen:
            return Verdict("magnus-injective", False, (str(seen[img]), str(w)), len(seen) + 1)
        seen[img] = w
    xy, yx = FreeWord.parse("x1*x2"), FreeWord.parse("x2*x1")
    if magnus_image(xy, 2, cap) == magnus_image(yx, 2, cap):
        return Verdict("magnus-injective", False, ("x1*x2", "x2*x1"), len(words))
    return Verdict("magnus-injective", True, None, len(words), detail=f"{len(words)} words, cap {cap}")

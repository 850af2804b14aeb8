"""Set-theoretic solutions of the Yang-Baxter equation from skew braces.

r(x, y) = (u, v) with u = lambda_x(y) and v = ū ∘ x ∘ y, so x ∘ y = u ∘ v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .brace import EXHAUSTIVE, FiniteBrace, SkewBrace, Strategy, Verdict
from .errors import SizeLimitExceeded

EXHAUSTIVE_BOUND = 16


class YBMap:
    """r for a brace; finite carriers get a precomputed table."""

    def __init__(self, brace: SkewBrace):
        self.brace = brace
        self._table = None
        if isinstance(brace, FiniteBrace):
            els = list(brace.elements())
            self._table = {(x, y): self._compute(x, y) for x in els for y in els}

    def _compute(self, x, y):
        b = self.brace
        u = b.lam(x, y)
        v = b.circ_chain(b.circ_inv(u), x, y)
        return u, v

    def __call__(self, x, y):
        if self._table is not None:
            return self._table[(x, y)]
        return self._compute(x, y)


def r_map(brace: SkewBrace) -> YBMap:
    return YBMap(brace)


def _strategy_for(brace: SkewBrace, strategy: Strategy | None) -> Strategy:
    if strategy is not None:
        return strategy
    if brace.finite and brace.order <= EXHAUSTIVE_BOUND:
        return EXHAUSTIVE
    return Strategy.sampled()


def verify_braid(brace: SkewBrace, strategy: Strategy | None = None, r: YBMap | None = None) -> Verdict:
    """(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r); witness is the failing triple."""
    strategy = _strategy_for(brace, strategy)
    r = r or YBMap(brace)
    count = 0
    for x, y, z in brace._tuples(3, strategy):
        count += 1
        a, b = r(x, y)
        b, c = r(b, z)
        a, b = r(a, b)
        lhs = (a, b, c)
        b, c = r(y, z)
        a, b = r(x, b)
        b, c = r(b, c)
        if lhs != (a, b, c):
            return _verdict("braid", False, (x, y, z), count, strategy)
    return _verdict("braid", True, None, count, strategy)


def verify_circ_identity(brace: SkewBrace, strategy: Strategy | None = None, r: YBMap | None = None) -> Verdict:
    """x ∘ y = u ∘ v for (u, v) = r(x, y)."""
    strategy = _strategy_for(brace, strategy)
    r = r or YBMap(brace)
    count = 0
    for x, y in brace._tuples(2, strategy):
        count += 1
        u, v = r(x, y)
        if brace.circ(x, y) != brace.circ(u, v):
            return _verdict("circ-identity", False, (x, y), count, strategy)
    return _verdict("circ-identity", True, None, count, strategy)


def _verdict(name, passed, witness, count, strategy):
    return Verdict(name, passed, witness, count, strategy.seed if strategy.mode == "sampled" else None)


@dataclass
class SolutionClass:
    involutive: bool
    non_degenerate: bool
    verdicts: list[Verdict] = field(default_factory=list)


def check_nondegenerate(brace: FiniteBrace, r: YBMap | None = None) -> Verdict:
    """y -> u is a bijection for each x, and x -> v is a bijection for each y."""
    if not brace.finite:
        raise SizeLimitExceeded(f"{brace.name}: non-degeneracy scan needs a finite carrier")
    r = r or YBMap(brace)
    els = list(brace.elements())
    n = len(els)
    for x in els:
        if len({r(x, y)[0] for y in els}) != n:
            return Verdict("non-degenerate", False, ("left", x), n)
    for y in els:
        if len({r(x, y)[1] for x in els}) != n:
            return Verdict("non-degenerate", False, ("right", y), n)
    return Verdict("non-degenerate", True, None, n)


def check_involutive(brace: FiniteBrace, r: YBMap | None = None) -> Verdict:
    if not brace.finite:
        raise SizeLimitExceeded(f"{brace.name}: involutivity scan needs a finite carrier")
    r = r or YBMap(brace)
    for x, y in itertools.product(brace.elements(), repeat=2):
        if r(*r(x, y)) != (x, y):
            return Verdict("involutive", False, (x, y))
    return Verdict("involutive", True, None, brace.order ** 2)


def classify_solution(brace: FiniteBrace) -> SolutionClass:
    r = YBMap(brace)
    inv = check_involutive(brace, r)
    nd = check_nondegenerate(brace, r)
    return SolutionClass(inv.passed, nd.passed, [inv, nd])

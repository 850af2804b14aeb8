"""The holomorph Hol G = Aut G ⋉ G of a finite group and its regular subgroups.

An element is a pair ``(auto, elem)`` where ``auto`` indexes Aut(G).
Product: (f, a)(g, b) = (fg, a·f(b)); action: (f, a)·b = a·f(b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .brace import FiniteBrace, LambdaDescriptor, check_brace_axiom
from .errors import CarrierMismatch, NotABrace, NotRegular, ProjectionNotBijective, SizeLimitExceeded
from .groups import DEFAULT_ORDER_BOUND, AutomorphismGroup, FiniteGroup, automorphism_group


class HolElement(NamedTuple):
    auto: int
    elem: int


class Holomorph:
    def __init__(self, group: FiniteGroup, aut: AutomorphismGroup | None = None, bound: int | None = None):
        self.group = group
        self.aut = aut or automorphism_group(group, bound)
        self.identity = HolElement(self.aut.group.identity, group.identity)

    @property
    def order(self) -> int:
        return len(self.aut) * self.group.order

    def elements(self) -> Iterable[HolElement]:
        return (HolElement(f, a) for f in range(len(self.aut)) for a in self.group.elements)

    def _check(self, p) -> HolElement:
        f, a = p
        if not (0 <= f < len(self.aut) and 0 <= a < self.group.order):
            raise CarrierMismatch(f"{p} is not an element of Hol({self.group.name})")
        return HolElement(f, a)

    def product(self, p, q) -> HolElement:
        (f, a), (g, b) = self._check(p), self._check(q)
        return HolElement(self.aut.group.table[f][g], self.group.table[a][self.aut.maps[f].images[b]])

    def inverse(self, p) -> HolElement:
        """(f, x)^-1 = (f^-1, f^-1(x^-1))."""
        f, x = self._check(p)
        finv = self.aut.group.inverse[f]
        return HolElement(finv, self.aut.maps[finv].images[self.group.inverse[x]])

    def act(self, p, b: int) -> int:
        f, a = self._check(p)
        if not 0 <= b < self.group.order:
            raise CarrierMismatch(f"{b} is not an element of {self.group.name}")
        return self.group.table[a][self.aut.maps[f].images[b]]

    def closure(self, gens: Iterable) -> frozenset[HolElement]:
        gens = [self._check(g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.product(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)


def hol_product(hol: Holomorph, p, q) -> HolElement:
    return hol.product(p, q)


def hol_inverse(hol: Holomorph, p) -> HolElement:
    return hol.inverse(p)


def hol_act(hol: Holomorph, p, b: int) -> int:
    return hol.act(p, b)


@dataclass(frozen=True, eq=False)
class HolSubgroup:
    parent: Holomorph
    members: tuple[HolElement, ...]  # sorted

    @classmethod
    def of(cls, parent: Holomorph, members: Iterable) -> "HolSubgroup":
        return cls(parent, tuple(sorted(HolElement(*m) for m in members)))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, HolSubgroup) and self.parent.group == other.parent.group \
            and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def is_subgroup(self) -> bool:
        s = set(self.members)
        hol = self.parent
        return hol.identity in s and all(hol.product(p, q) in s for p in s for q in s) \
            and all(hol.inverse(p) in s for p in s)

    def to_json(self) -> list:
        return [list(m) for m in self.members]


def is_regular(h: HolSubgroup) -> bool:
    """For every a in G exactly one (f, x) in H has x·f(a) = 1."""
    g = h.parent.group
    if len(h) != g.order:
        return False
    for a in g.elements:
        hits = sum(1 for p in h.members if h.parent.act(p, a) == g.identity)
        if hits != 1:
            return False
    return True


def diagonal_subgroup(hol: Holomorph) -> HolSubgroup:
    """{(id, a)}: G acting on itself by left translation."""
    return HolSubgroup.of(hol, ((hol.aut.group.identity, a) for a in hol.group.elements))


def h_lambda(hol: Holomorph, lam) -> HolSubgroup:
    """{(lambda_a, a)} for a map a -> automorphism index."""
    return HolSubgroup.of(hol, ((lam[a], a) for a in hol.group.elements))


def _check_bound(g: FiniteGroup, bound):
    bound = DEFAULT_ORDER_BOUND if bound is None else bound
    if g.order > bound:
        raise SizeLimitExceeded(f"order {g.order} exceeds bound {bound}")


def enumerate_regular_subgroups(g: FiniteGroup, hol: Holomorph | None = None, bound: int | None = None,
                                limit: int | None = None) -> list[HolSubgroup]:
    """Every regular subgroup of Hol G.

    A regular subgroup is the graph {(f_a, a)} of a map a -> f_a; the search
    assigns f_a element by element and propagates the closure rule
    f_a f_b = f_{a·f_a(b)} until it is complete or contradicts itself.
    """
    _check_bound(g, bound)
    hol = hol or Holomorph(g, bound=bound)
    aut = hol.aut
    ag = aut.group.table
    gt = g.table
    images = [m.images for m in aut.maps]
    n = g.order
    found: list[tuple[int, ...]] = []

    def propagate(f: list, queue: list) -> bool:
        assigned = [a for a in range(n) if f[a] is not None]
        while queue:
            a = queue.pop()
            fa = f[a]
            for b in list(assigned):
                fb = f[b]
                for (x, fx), (y, fy) in (((a, fa), (b, fb)), ((b, fb), (a, fa))):
                    c = gt[x][images[fx][y]]
                    fc = ag[fx][fy]
                    if f[c] is None:
                        f[c] = fc
                        assigned.append(c)
                        queue.append(c)
                    elif f[c] != fc:
                        return False
        return True

    def search(f: list):
        if limit is not None and len(found) >= limit:
            return
        try:
            a = f.index(None)
        except ValueError:
            found.append(tuple(f))
            return
        for fa in range(len(aut)):
            trial = list(f)
            trial[a] = fa
            if propagate(trial, [a]):
                search(trial)

    start: list = [None] * n
    start[g.identity] = aut.group.identity
    if propagate(start, [g.identity]):
        search(start)
    subs = [h_lambda(hol, f) for f in found]
    subs.sort(key=lambda h: h.members)
    return subs


def enumerate_regular_subgroups_by_growth(g: FiniteGroup, hol: Holomorph | None = None,
                                          bound: int = 8) -> list[HolSubgroup]:
    """Independent oracle: grow subgroups of Hol G one generator at a time,
    keeping those whose order divides |G|, and filter the regular ones by
    the defining uniqueness scan."""
    _check_bound(g, bound)
    hol = hol or Holomorph(g)
    n = g.order
    elements = list(hol.elements())
    start = frozenset({hol.identity})
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            if len(s) == n:
                continue
            for x in elements:
                if x in s:
                    continue
                t = hol.closure(list(s) + [x])
                if n % len(t) == 0 and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    subs = [HolSubgroup.of(hol, s) for s in seen if len(s) == n]
    subs = [h for h in subs if is_regular(h)]
    subs.sort(key=lambda h: h.members)
    return subs


def brace_from_regular(h: HolSubgroup) -> FiniteBrace:
    """a ∘ b = a·f(b) where (f, a) is the member of H over a."""
    if not is_regular(h):
        raise NotRegular("subgroup is not regular")
    g = h.parent.group
    over: dict[int, int] = {}
    for f, a in h.members:
        if a in over:
            raise ProjectionNotBijective(f"two members over element {a}")
        over[a] = f
    if len(over) != g.order:
        raise ProjectionNotBijective("projection to G is not onto")
    maps = h.parent.aut.maps
    table = [[g.table[a][maps[over[a]].images[b]] for b in g.elements] for a in g.elements]
    return FiniteBrace(g, table, name=f"brace_from_regular({g.name})",
                       descriptor=LambdaDescriptor("table", {"lambda": tuple(over[a] for a in g.elements)}))


def regular_from_brace(b: FiniteBrace, hol: Holomorph | None = None) -> HolSubgroup:
    """{(lambda_a, a) : a in G}."""
    if not check_brace_axiom(b):
        raise NotABrace(f"{b.name} fails the brace axiom")
    hol = hol or Holomorph(b.group)
    lam = []
    for a in b.elements():
        images = tuple(b.lam(a, x) for x in b.elements())
        if images not in hol.aut.index:
            raise NotABrace(f"lambda_{a} is not an automorphism")
        lam.append(hol.aut.index[images])
    return h_lambda(hol, lam)

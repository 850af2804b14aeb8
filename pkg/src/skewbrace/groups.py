"""Finite groups given by Cayley tables, with homomorphism and automorphism enumeration.

Elements are the dense indices ``0..n-1``.  The stock constructors put the
identity at index 0; :func:`validate_group` accepts any identity position.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import (
    GroupError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    SizeLimitExceeded,
)

DEFAULT_ORDER_BOUND = 12


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    generators: tuple[int, ...]
    name: str = field(default="G", compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def order_spectrum(self) -> dict[int, int]:
        """Number of elements of each order."""
        return dict(sorted(Counter(self.element_order(a) for a in self.elements).items()))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in range(a))

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens``."""
        gens = list(gens)
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_normal(self, subset: Iterable[int]) -> bool:
        sub = frozenset(subset)
        return all(
            self.table[self.table[self.inverse[g]][h]][g] in sub for g in self.elements for h in sub
        )

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": [list(r) for r in self.table],
            "generators": list(self.generators),
            "name": self.name,
        }


def _first_generating_set(table, identity, n) -> tuple[int, ...]:
    gens: list[int] = []
    span = {identity}
    for a in range(n):
        if a in span:
            continue
        gens.append(a)
        span = set(_closure(table, identity, gens))
    return tuple(gens)


def _closure(table, identity, gens):
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = table[x][s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def validate_group(
    table: Sequence[Sequence[int]],
    generators: Sequence[int] | None = None,
    name: str = "G",
) -> FiniteGroup:
    """Check the group axioms on a square table and build a :class:`FiniteGroup`.

    Raises NotLatinSquare, NoIdentity, NoInverse or NotAssociative, each
    carrying the first offending element or triple as ``witness``.
    """
    n = len(table)
    if n == 0:
        raise GroupError("empty table")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"row {i} has length {len(row)}, expected {n}", witness=i)
        row = tuple(int(x) for x in row)
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupError(f"entry ({i},{j})={x} out of range", witness=(i, j))
        rows.append(row)
    t = tuple(rows)
    full = set(range(n))
    for i in range(n):
        if set(t[i]) != full:
            raise NotLatinSquare(f"row {i} is not a permutation", witness=i)
    for j in range(n):
        if {t[i][j] for i in range(n)} != full:
            raise NotLatinSquare(f"column {j} is not a permutation", witness=j)
    identity = next(
        (e for e in range(n) if all(t[e][a] == a and t[a][e] == a for a in range(n))), None
    )
    if identity is None:
        raise NoIdentity("no two-sided identity", witness=None)
    inverse = []
    for a in range(n):
        b = next((b for b in range(n) if t[a][b] == identity and t[b][a] == identity), None)
        if b is None:
            raise NoInverse(f"element {a} has no two-sided inverse", witness=a)
        inverse.append(b)
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", witness=(a, b, c))
    if generators is None:
        gens = _first_generating_set(t, identity, n)
    else:
        gens = tuple(int(g) for g in generators)
        if len(_closure(t, identity, gens)) != n:
            raise GroupError(f"generators {gens} do not generate the group", witness=gens)
    return FiniteGroup(n, t, identity, tuple(inverse), gens, name)


def group_from_json(data: dict | str) -> FiniteGroup:
    if isinstance(data, str):
        data = json.loads(data)
    return validate_group(data["table"], data.get("generators"), data.get("name", "G"))


def _from_elements(elements: list, mul: Callable, name: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return validate_group(table, name=name)


# stock groups; identity always first

def cyclic(n: int) -> FiniteGroup:
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    elems = [(a, b) for a in g.elements for b in h.elements]
    elems.sort(key=lambda e: (e != (g.identity, h.identity), e))
    return _from_elements(
        elems, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])), name or f"{g.name}x{h.name}"
    )


def elementary_abelian(k: int) -> FiniteGroup:
    elems = list(itertools.product((0, 1), repeat=k))
    return _from_elements(elems, lambda x, y: tuple((a + b) % 2 for a, b in zip(x, y)), f"Z2^{k}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m; elements r^i s^j."""
    elems = [(i, j) for j in (0, 1) for i in range(m)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + (k if j == 0 else -k)) % m, (j + l) % 2)

    return _from_elements(elems, mul, f"D{2 * m}")


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, basis) with basis in 1,i,j,k
    basis_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, b) for s in (1, -1) for b in "1ijk"]

    def mul(x, y):
        s, b = basis_mul[(x[1], y[1])]
        return (x[0] * y[0] * s, b)

    return _from_elements(elems, mul, "Q8")


def symmetric(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    return _from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(n)), f"S{n}")


# maps between finite groups

@dataclass(frozen=True)
class Automorphism:
    """Element-wise automorphism: ``images[a]`` is the image of element ``a``."""

    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self`` after ``other``."""
        return Automorphism(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.images)
        for a, b in enumerate(self.images):
            inv[b] = a
        return Automorphism(tuple(inv))

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.images))


def extend_homomorphism(
    g: FiniteGroup,
    gen_images: Sequence,
    target_mul: Callable,
    target_identity,
) -> list | None:
    """Extend generator images to a homomorphism on all of ``g``, or None if inconsistent."""
    img: list = [None] * g.order
    img[g.identity] = target_identity
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        for s, s_img in zip(g.generators, gen_images):
            y = g.table[x][s]
            val = target_mul(img[x], s_img)
            if img[y] is None:
                img[y] = val
                queue.append(y)
            elif img[y] != val:
                return None
    return img


def _check_bound(g: FiniteGroup, bound: int | None):
    bound = DEFAULT_ORDER_BOUND if bound is None else bound
    if g.order > bound:
        raise SizeLimitExceeded(f"order {g.order} exceeds bound {bound}")


def homomorphisms(g: FiniteGroup, h: FiniteGroup, *, injective: bool = False) -> list[tuple[int, ...]]:
    """All homomorphisms g -> h, as element image tuples, found by generator-image search."""
    order_h = [h.element_order(b) for b in h.elements]
    candidates = [
        [b for b in h.elements if g.element_order(s) % order_h[b] == 0] for s in g.generators
    ]
    found = []
    for imgs in itertools.product(*candidates):
        full = extend_homomorphism(g, imgs, h.mul, h.identity)
        if full is None:
            continue
        if injective and len(set(full)) != g.order:
            continue
        found.append(tuple(full))
    return sorted(set(found))


def all_automorphisms(g: FiniteGroup, bound: int | None = None) -> list[Automorphism]:
    """Every automorphism of ``g``, identity first, then lexicographic.

    Backtracks over generator images with matching element orders and
    rejects partial assignments that collide.
    """
    _check_bound(g, bound)
    orders = [g.element_order(a) for a in g.elements]
    gens = g.generators
    found: list[tuple[int, ...]] = []

    def search(k: int, chosen: list[int]):
        if k == len(gens):
            full = extend_homomorphism(g, chosen, g.mul, g.identity)
            if full is not None and len(set(full)) == g.order:
                found.append(tuple(full))
            return
        for b in g.elements:
            if orders[b] == orders[gens[k]] and b not in chosen:
                chosen.append(b)
                search(k + 1, chosen)
                chosen.pop()

    search(0, [])
    ident = tuple(g.elements)
    found.sort(key=lambda m: (m != ident, m))
    return [Automorphism(m) for m in found]


@dataclass(frozen=True, eq=False)
class AutomorphismGroup:
    """Aut(G) materialised: ``maps[i]`` is automorphism ``i``; ``group`` multiplies indices by composition."""

    base: FiniteGroup
    maps: tuple[Automorphism, ...]
    group: FiniteGroup
    index: dict

    def __len__(self):
        return len(self.maps)

    def __getitem__(self, i: int) -> Automorphism:
        return self.maps[i]

    def index_of(self, f: Automorphism) -> int:
        return self.index[f.images]

    def apply(self, i: int, a: int) -> int:
        return self.maps[i].images[a]


def automorphism_group(g: FiniteGroup, bound: int | None = None) -> AutomorphismGroup:
    maps = all_automorphisms(g, bound)
    index = {m.images: i for i, m in enumerate(maps)}
    table = [[index[f.compose(h).images] for h in maps] for f in maps]
    grp = validate_group(table, name=f"Aut({g.name})")
    return AutomorphismGroup(g, tuple(maps), grp, index)


def all_homomorphisms_to_aut(
    g: FiniteGroup, aut: AutomorphismGroup | None = None, bound: int | None = None
) -> list[tuple[int, ...]]:
    """Every homomorphism G -> Aut(G); each is a tuple of automorphism indices per element."""
    _check_bound(g, bound)
    if aut is None:
        aut = automorphism_group(g, bound)
    return homomorphisms(g, aut.group)


def group_isomorphisms(g: FiniteGroup, h: FiniteGroup) -> Iterable[tuple[int, ...]]:
    """Yield every isomorphism g -> h (element image tuples)."""
    if g.order != h.order or g.order_spectrum() != h.order_spectrum():
        return
    orders_h = [h.element_order(b) for b in h.elements]
    candidates = [[b for b in h.elements if orders_h[b] == g.element_order(s)] for s in g.generators]
    for imgs in itertools.product(*candidates):
        full = extend_homomorphism(g, imgs, h.mul, h.identity)
        if full is not None and len(set(full)) == g.order:
            yield tuple(full)


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return next(iter(group_isomorphisms(g, h)), None) is not None


def small_group_corpus(max_order: int = 8) -> list[FiniteGroup]:
    """Cyclic, elementary abelian, dihedral and quaternion groups up to ``max_order``."""
    corpus = [cyclic(n) for n in range(1, max_order + 1)]
    corpus += [elementary_abelian(k) for k in (2, 3) if 2**k <= max_order]
    corpus += [dihedral(m) for m in (3, 4) if 2 * m <= max_order]
    if max_order >= 8:
        corpus += [quaternion(), direct_product(cyclic(2), cyclic(4))]
    return corpus

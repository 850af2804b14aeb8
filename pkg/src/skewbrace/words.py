"""Reduced words in a free group and automorphisms given by generator images.

Generators are numbered from 1, so ``x1^2*x2^-1`` is the word with
syllables ``((1, 2), (2, -1))``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotAutomorphism, UnknownGenerator

Syllable = tuple[int, int]


def _reduce_into(out: list[Syllable], gen: int, exp: int) -> None:
    if exp == 0:
        return
    if out and out[-1][0] == gen:
        e = out[-1][1] + exp
        if e:
            out[-1] = (gen, e)
        else:
            out.pop()
    else:
        out.append((gen, exp))


class FreeWord:
    """Immutable freely reduced word; the empty word is the identity."""

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[Syllable] = ()):
        out: list[Syllable] = []
        for g, e in syllables:
            _reduce_into(out, int(g), int(e))
        self.syllables: tuple[Syllable, ...] = tuple(out)
        self._hash = hash(self.syllables)

    @classmethod
    def gen(cls, i: int, exp: int = 1) -> "FreeWord":
        return cls(((i, exp),))

    @classmethod
    def letters(cls, letters: Sequence[int]) -> "FreeWord":
        """Build from signed letters: ``2`` is x2, ``-2`` is x2^-1."""
        return cls((abs(c), 1 if c > 0 else -1) for c in letters)

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        text = text.strip()
        if text in ("", "1", "e"):
            return cls()
        sylls = []
        for part in re.split(r"\s*\*\s*", text):
            m = re.fullmatch(r"x(\d+)(?:\^(-?\d+))?", part)
            if m is None:
                raise ValueError(f"cannot parse syllable {part!r}")
            sylls.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(sylls)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.syllables == other.syllables

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "FreeWord"):
        return (self.length(), self.syllables) < (other.length(), other.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __len__(self):
        return len(self.syllables)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return word_multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return word_inverse(self)

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return word_inverse(self) ** (-k)
        out = FreeWord()
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        if not self.syllables:
            return "1"
        return "*".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.syllables)

    def __repr__(self):
        return f"FreeWord({str(self)!r})"

    def length(self) -> int:
        """Letter length (sum of |exponents|)."""
        return sum(abs(e) for _, e in self.syllables)

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.syllables}

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.syllables if g == gen)


def word_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    out = list(u.syllables)
    for g, e in v.syllables:
        _reduce_into(out, g, e)
    w = FreeWord.__new__(FreeWord)
    w.syllables = tuple(out)
    w._hash = hash(w.syllables)
    return w


def word_inverse(u: FreeWord) -> FreeWord:
    w = FreeWord.__new__(FreeWord)
    w.syllables = tuple((g, -e) for g, e in reversed(u.syllables))
    w._hash = hash(w.syllables)
    return w


def word_product(*words: FreeWord) -> FreeWord:
    out = FreeWord()
    for w in words:
        out = word_multiply(out, w)
    return out


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """[a, b] = a^-1 b^-1 a b."""
    return word_product(~a, ~b, a, b)


def log_word(w: FreeWord) -> int:
    """Total exponent sum."""
    return sum(e for _, e in w.syllables)


def apply_endomorphism(w: FreeWord, images: Mapping[int, FreeWord] | Sequence[FreeWord]) -> FreeWord:
    """Substitute generator images into ``w`` and freely reduce.

    ``images`` is a mapping from generator number, or a sequence where
    entry ``i-1`` is the image of ``x_i``.
    """
    out: list[Syllable] = []
    is_map = isinstance(images, Mapping)
    for g, e in w.syllables:
        try:
            if not is_map and g < 1:
                raise IndexError
            img = images[g] if is_map else images[g - 1]
        except (KeyError, IndexError):
            raise UnknownGenerator(f"no image for generator x{g}") from None
        piece = img.syllables if e > 0 else tuple((h, -f) for h, f in reversed(img.syllables))
        for _ in range(abs(e)):
            for h, f in piece:
                _reduce_into(out, h, f)
    return FreeWord(out)


def random_word(rng: random.Random, rank: int, max_syllables: int, max_exp: int = 3) -> FreeWord:
    """Uniform syllable count in [1, L], uniform generator, exponent in [-max_exp, max_exp] minus 0."""
    count = rng.randint(1, max_syllables)
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    return FreeWord((rng.randint(1, rank), rng.choice(exps)) for _ in range(count))


def reduced_words(rank: int, max_length: int) -> list[FreeWord]:
    """Every reduced word of letter length <= ``max_length`` (sorted, identity first)."""
    letters = [g for i in range(1, rank + 1) for g in (i, -i)]
    out = [()]
    frontier = [()]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for c in letters:
                if w and w[-1] == -c:
                    continue
                nxt.append(w + (c,))
        out.extend(nxt)
        frontier = nxt
    return [FreeWord.letters(w) for w in out]


class FreeAutomorphism:
    """Automorphism of F_rank given by generator images, with inverse images.

    The inverse images are checked on construction: both composites must
    fix every generator, which makes the map bijective.
    """

    def __init__(self, rank: int, images: Sequence[FreeWord], inverse_images: Sequence[FreeWord] | None = None,
                 *, check: bool = True):
        self.rank = rank
        self.images = tuple(images)
        if len(self.images) != rank:
            raise ValueError(f"expected {rank} images, got {len(self.images)}")
        self._inverse_images = tuple(inverse_images) if inverse_images is not None else None
        self._powers: dict[int, tuple[FreeWord, ...]] = {0: self.generators(), 1: self.images}
        self._order: int | None | bool = False  # False: not computed yet
        if check and self._inverse_images is not None:
            for i, g in enumerate(self.generators(), start=1):
                if apply_endomorphism(apply_endomorphism(g, self._inverse_images), self.images) != g or \
                        apply_endomorphism(apply_endomorphism(g, self.images), self._inverse_images) != g:
                    raise NotAutomorphism(f"inverse images do not invert x{i}")
        if self._inverse_images is not None:
            self._powers[-1] = self._inverse_images

    def generators(self) -> tuple[FreeWord, ...]:
        return tuple(FreeWord.gen(i) for i in range(1, self.rank + 1))

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        gens = tuple(FreeWord.gen(i) for i in range(1, rank + 1))
        return cls(rank, gens, gens, check=False)

    @classmethod
    def inner(cls, rank: int, a: FreeWord) -> "FreeAutomorphism":
        """b -> a^-1 b a."""
        gens = [FreeWord.gen(i) for i in range(1, rank + 1)]
        return cls(rank, [word_product(~a, g, a) for g in gens], [word_product(a, g, ~a) for g in gens], check=False)

    @classmethod
    def permutation(cls, perm: Sequence[int], invert: bool = False) -> "FreeAutomorphism":
        """x_i -> x_{perm[i-1]} (inverted letters when ``invert``)."""
        rank = len(perm)
        e = -1 if invert else 1
        images = [FreeWord.gen(p, e) for p in perm]
        inv = [None] * rank
        for i, p in enumerate(perm, start=1):
            inv[p - 1] = FreeWord.gen(i, e)
        return cls(rank, images, inv, check=False)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endomorphism(w, self.images)

    def __eq__(self, other):
        return isinstance(other, FreeAutomorphism) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "FreeAutomorphism(" + ", ".join(f"x{i}->{w}" for i, w in enumerate(self.images, 1)) + ")"

    def compose(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """``self`` after ``other``."""
        imgs = [apply_endomorphism(w, self.images) for w in other.images]
        inv = None
        if self._inverse_images is not None and other._inverse_images is not None:
            inv = [apply_endomorphism(w, other._inverse_images) for w in self._inverse_images]
        return FreeAutomorphism(self.rank, imgs, inv, check=False)

    def inverse(self) -> "FreeAutomorphism":
        if self._inverse_images is None:
            raise NotAutomorphism("inverse images not supplied")
        return FreeAutomorphism(self.rank, self._inverse_images, self.images, check=False)

    def is_identity(self) -> bool:
        return self.images == self.generators()

    def power_images(self, k: int) -> tuple[FreeWord, ...]:
        """Generator images of self^k (cached; finite order reduces k)."""
        order = self.order()
        if order is not None:
            k %= order
        if k in self._powers:
            return self._powers[k]
        step = 1 if k > 0 else -1
        if step < 0 and self._inverse_images is None:
            raise NotAutomorphism("negative power needs inverse images")
        j = max((p for p in self._powers if p * step >= 0 and abs(p) <= abs(k)), key=abs)
        cur = self._powers[j]
        base = self._powers[step]
        while j != k:
            cur = tuple(apply_endomorphism(w, base) for w in cur)
            j += step
            self._powers[j] = cur
        return cur

    def power(self, k: int) -> "FreeAutomorphism":
        inv = self.power_images(-k) if self._inverse_images is not None or self.order() is not None else None
        return FreeAutomorphism(self.rank, self.power_images(k), inv, check=False)

    def apply_power(self, w: FreeWord, k: int) -> FreeWord:
        return apply_endomorphism(w, self.power_images(k))

    def order(self, limit: int = 24) -> int | None:
        """Order if it is at most ``limit``, else None (treated as infinite)."""
        if self._order is False:
            self._order = None
            cur = self.images
            gens = self.generators()
            for k in range(1, limit + 1):
                if cur == gens:
                    self._order = k
                    break
                cur = tuple(apply_endomorphism(w, self.images) for w in cur)
        return self._order

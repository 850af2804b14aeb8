import random

import pytest
from hypothesis import given, strategies as st

from skewbrace.errors import NotAutomorphism, UnknownGenerator
from skewbrace.words import (
    FreeAutomorphism,
    FreeWord,
    apply_endomorphism,
    commutator,
    log_word,
    random_word,
    reduced_words,
)

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)
words = letters.map(FreeWord.letters)

x, y = FreeWord.gen(1), FreeWord.gen(2)


def naive_reduce(seq):
    """Cancel adjacent inverse letters until none remain."""
    seq = list(seq)
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] == -seq[i + 1]:
                del seq[i:i + 2]
                changed = True
                break
    return seq


def as_letters(w):
    return [g if e > 0 else -g for g, e in w.syllables for _ in range(abs(e))]


@given(letters)
def test_reduction_matches_naive_cancellation(seq):
    assert as_letters(FreeWord.letters(seq)) == naive_reduce(seq)


@given(words, words, words)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words)
def test_inverse(a):
    assert a * ~a == FreeWord()
    assert ~a * a == FreeWord()


@given(words, words)
def test_log_is_additive(a, b):
    assert log_word(a * b) == log_word(a) + log_word(b)
    assert log_word(~a) == -log_word(a)


def test_log_examples():
    assert log_word(commutator(x, y)) == 0
    assert log_word(FreeWord.parse("x1^2*x2^-1")) == 1


def test_parse_and_print():
    w = FreeWord.parse("x1^2*x2^-1*x2*x3")
    assert str(w) == "x1^2*x3"
    assert FreeWord.parse("1") == FreeWord()
    assert str(FreeWord()) == "1"
    with pytest.raises(ValueError):
        FreeWord.parse("y^2")


def test_commutator_convention():
    assert commutator(x, y) == FreeWord.letters([-1, -2, 1, 2])


def test_apply_endomorphism_mapping_and_sequence():
    images = {1: y, 2: x * x}
    w = FreeWord.parse("x1*x2^-1")
    assert apply_endomorphism(w, images) == y * ~(x * x)
    assert apply_endomorphism(w, [y, x * x]) == y * ~(x * x)


def test_apply_endomorphism_unknown_generator():
    with pytest.raises(UnknownGenerator):
        apply_endomorphism(FreeWord.gen(3), [x, y])
    with pytest.raises(UnknownGenerator):
        apply_endomorphism(FreeWord.gen(0), [x, y])


def test_reduced_word_count():
    # 1 + 4 + 4*3 + 4*9 + 4*27 reduced words of length <= 4 in two generators
    assert len(reduced_words(2, 4)) == 161
    assert len(set(reduced_words(2, 4))) == 161


def test_random_word_is_seeded():
    a = [random_word(random.Random(5), 3, 6) for _ in range(3)]
    b = [random_word(random.Random(5), 3, 6) for _ in range(3)]
    assert a == b


def test_inner_automorphism_power_and_inverse():
    a = FreeWord.parse("x1*x2")
    f = FreeAutomorphism.inner(2, a)
    w = FreeWord.parse("x1^3*x2^-1")
    assert f(w) == ~a * w * a
    assert f.inverse()(f(w)) == w
    assert f.apply_power(w, 3) == ~(a ** 3) * w * a ** 3
    assert f.apply_power(w, -2) == a ** 2 * w * ~(a ** 2)
    assert f.order() is None


def test_permutation_automorphism_order():
    swap = FreeAutomorphism.permutation([2, 1])
    assert swap.order() == 2
    assert swap(x) == y
    inv = FreeAutomorphism.permutation([1, 2], invert=True)
    assert inv(x * y) == ~x * ~y
    assert inv.power(2).is_identity()


def test_bad_inverse_images_rejected():
    with pytest.raises(NotAutomorphism):
        FreeAutomorphism(2, [x * y, y], [x, y])


@given(words, st.integers(-4, 4))
def test_power_images_compose(w, k):
    f = FreeAutomorphism(3, [FreeWord.parse("x1*x2"), FreeWord.gen(2), FreeWord.gen(3)],
                         [FreeWord.parse("x1*x2^-1"), FreeWord.gen(2), FreeWord.gen(3)])
    assert f.apply_power(f.apply_power(w, k), -k) == w

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace.brace import (
    Rejection,
    Strategy,
    check_brace,
    check_brace_axiom,
    check_lambda_circ_homomorphism,
    is_lambda_cyclic,
    is_lambda_homomorphic,
    multiplicative_group,
)
from skewbrace.errors import (
    ImageNotFinite,
    NotAbelian,
    NotHomomorphism,
    NotIndexTwo,
    NotLogPreserving,
    UnsupportedFamily,
)
from skewbrace.groups import cyclic, direct_product, symmetric
from skewbrace.wordbrace import (
    FreeProductFactorization,
    WreathElement,
    even_parity,
    exact_factorization_brace,
    f2_inversion_brace,
    f2_swap_brace,
    f4_ia_brace,
    homogeneous_brace,
    index2_brace,
    parity_kernel_generator_check,
    same_subgroup,
    subgroup_contains,
    verify_f3_semidirect_presentation,
    word_brace_from_lambda,
)
from skewbrace.words import FreeAutomorphism, FreeWord, commutator, random_word, reduced_words

X, Y = FreeWord.gen(1), FreeWord.gen(2)
SAMPLES = Strategy.sampled(1000, 5)


def word(text):
    return FreeWord.parse(text)


# F2 swap brace

def test_swap_products():
    b = f2_swap_brace()
    assert b.circ(X, Y) == X * X
    assert b.circ(Y, X) == Y * Y
    assert b.circ(X * Y, X) == X * Y * X


def test_swap_agrees_with_product_on_parity_kernel():
    b = f2_swap_brace()
    even = [w for w in reduced_words(2, 4) if even_parity(w)]
    assert len(even) == 1 + 12 + 108
    for u, v in itertools.product(even, repeat=2):
        assert b.circ(u, v) == u * v
    assert all(b.in_kernel(u) for u in even)


def test_swap_axioms_sampled():
    b = f2_swap_brace()
    assert check_brace_axiom(b, SAMPLES)
    assert check_lambda_circ_homomorphism(b, SAMPLES)
    assert is_lambda_cyclic(b)


# F2 inversion brace

def test_inversion_presentation():
    v = verify_f3_semidirect_presentation()
    assert v and v.samples == 5


def test_inversion_products():
    b = f2_inversion_brace()
    assert b.circ(X, X) == FreeWord()
    assert b.circ(X, Y) == X * ~Y
    assert b.circ_inv(X) == X
    assert check_brace_axiom(b, SAMPLES)


def test_inversion_kernel_is_parity_kernel():
    b = f2_inversion_brace()
    for w in reduced_words(2, 4):
        assert b.in_kernel(w) == even_parity(w)


def test_parity_generator_check():
    assert parity_kernel_generator_check()


def test_subgroup_membership():
    even = [X * X, X * Y, Y * ~X]
    assert subgroup_contains(even, Y * X)
    assert subgroup_contains(even, Y * Y)
    assert not subgroup_contains(even, X)
    assert subgroup_contains([X * X], X ** 6)
    assert not subgroup_contains([X * X], X ** 3)
    assert not subgroup_contains([commutator(X, Y)], X * Y)
    assert subgroup_contains([X, Y], word("x1^-3*x2*x1^5"))
    assert same_subgroup([X, Y], [X * Y, Y])
    assert not same_subgroup([X * X, Y], [X, Y])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_subgroup_membership_matches_parity(seed):
    w = random_word(random.Random(seed), 2, 5)
    # these generate the even-length subgroup, so membership is a parity test
    assert subgroup_contains([X * Y, X * X, X * ~Y], w) == even_parity(w)


# homogeneous and lambda-defined word braces

def test_homogeneous_inner():
    b = homogeneous_brace(2, FreeAutomorphism.inner(2, X))
    assert b.circ(Y, Y) == Y * ~X * Y * X
    assert check_brace_axiom(b, Strategy.sampled(300, 4))


def test_homogeneous_ia():
    z = FreeWord.gen(3)
    u = commutator(Y, z)
    phi = FreeAutomorphism(3, [X * u, Y, z], [X * ~u, Y, z])
    b = homogeneous_brace(3, phi)
    assert check_brace_axiom(b, Strategy.sampled(300, 4))


def test_homogeneous_rejects_log_change():
    with pytest.raises(NotLogPreserving) as info:
        homogeneous_brace(2, FreeAutomorphism(2, [X * Y, Y], [X * ~Y, Y]))
    assert info.value.generator == 1


def test_word_brace_from_lambda_rejection():
    swap = FreeAutomorphism.permutation([2, 1])
    r = word_brace_from_lambda(2, [FreeAutomorphism.identity(2), swap])
    assert isinstance(r, Rejection) and r.witness == (1, 2)


def test_word_brace_from_lambda_noncommuting():
    phi = FreeAutomorphism(2, [X * Y, Y], [X * ~Y, Y])
    psi = FreeAutomorphism(2, [X, Y * X], [X, Y * ~X])
    with pytest.raises(NotHomomorphism):
        word_brace_from_lambda(2, [phi, psi])


def test_f4_ia():
    b = f4_ia_brace()
    x1, x2, x3 = (FreeWord.gen(i) for i in (1, 2, 3))
    assert b.circ(x1, x1) == x1 * x1 * commutator(x2, x3)
    assert check_brace_axiom(b, Strategy.sampled(300, 4))
    with pytest.raises(ImageNotFinite):
        b.lambda_image_cyclic()


# exact factorizations

def test_f2_factorization_square():
    b = exact_factorization_brace("free_group", n=2)
    assert b.circ(X * Y, X * Y) == X * X * Y * Y


def test_factorization_lambda_is_conjugation_by_b_part():
    rng = random.Random(7)
    for b in (exact_factorization_brace("free_group", n=3),
              exact_factorization_brace("free_product", c_rank=1, b_rank=2)):
        for _ in range(300):
            g, h = b.sample(rng, 5), b.sample(rng, 5)
            c = b.b_part(g)
            assert b.lam(g, h) == ~c * h * c
            assert b.circ(g, b.circ_inv(g)) == FreeWord()


def test_factorization_axioms():
    for b in (exact_factorization_brace("free_group", n=2), exact_factorization_brace("wreath"),
              exact_factorization_brace("free_product", c_rank=2, b_rank=2)):
        assert check_brace_axiom(b, Strategy.sampled(500, 4))


def test_free_product_lambda_homomorphic_only_for_cyclic_b():
    s = Strategy.sampled(300, 4)
    assert is_lambda_homomorphic(FreeProductFactorization(1, 1), s)
    assert not is_lambda_homomorphic(FreeProductFactorization(1, 2), s)


def test_wreath_conjugation_and_split():
    w = exact_factorization_brace("wreath")
    x, y0, y1 = WreathElement.x(), WreathElement.y(0), WreathElement.y(1)
    assert x.inverse() * y0 * x == y1
    g = WreathElement.make({0: 2, 3: -1}, 5)
    a, b = w.split(g)
    assert a * b == g and b == WreathElement.x(5)


def test_wreath_circ_commutative():
    w = exact_factorization_brace("wreath")
    rng = random.Random(3)
    for _ in range(500):
        g, h = w.sample(rng, 4), w.sample(rng, 4)
        assert w.circ(g, h) == w.circ(h, g)


def test_unsupported_family():
    with pytest.raises(UnsupportedFamily):
        exact_factorization_brace("knot")


# index-2 construction

def test_index2_z4():
    a = cyclic(4)
    b = index2_brace(a, [0, 2])
    assert b.circ(1, 1) == 0
    assert [b.lam(1, y) for y in range(4)] == [0, 3, 2, 1]
    assert [b.lam(2, y) for y in range(4)] == [0, 1, 2, 3]
    assert check_brace(b)


def test_index2_errors():
    with pytest.raises(NotIndexTwo):
        index2_brace(cyclic(4), [0])
    with pytest.raises(NotIndexTwo):
        index2_brace(cyclic(4), [0, 1])
    with pytest.raises(NotAbelian):
        index2_brace(symmetric(3), [0, 1, 2])


def test_index2_spectra_differ():
    a = direct_product(cyclic(2), cyclic(4))
    order4 = next(x for x in a.elements if a.element_order(x) == 4)
    first = index2_brace(a, a.closure([order4]))
    second = index2_brace(a, [x for x in a.elements if a.element_order(x) <= 2])
    assert multiplicative_group(first).order_spectrum() == {1: 1, 2: 5, 4: 2}
    assert multiplicative_group(second).order_spectrum() == {1: 1, 2: 7}


def test_index2_products_outside_subgroup_land_in_subgroup():
    a = direct_product(cyclic(2), cyclic(4))
    order4 = next(x for x in a.elements if a.element_order(x) == 4)
    sub = a.closure([order4])
    b = index2_brace(a, sub)
    outside = [x for x in a.elements if x not in sub]
    for x, y in itertools.product(outside, repeat=2):
        assert b.circ(x, y) in sub

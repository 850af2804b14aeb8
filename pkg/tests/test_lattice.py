import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace.brace import (
    Rejection,
    Strategy,
    check_brace_axiom,
    check_lambda_circ_homomorphism,
    is_lambda_cyclic,
    is_lambda_homomorphic,
    is_symmetric,
)
from skewbrace.errors import BadRank, NotHomomorphism, NotUnimodular, NotValidPhi
from skewbrace.intmat import matrix_power
from skewbrace.lattice import (
    CyclicLatticeBrace,
    cyclic_kernel_member,
    cyclic_permutation_brace,
    integer_brace,
    lattice_from_lambda,
    log_vector,
    upper_triangular_example_brace,
    upper_triangular_power,
    validate_phi,
    verify_presentation_relations,
    z2_brace,
    z2_case1_circ,
    z2_case1_inverse,
    z2_case1_matrix,
    z2_case2_circ,
    z2_case2_inverse,
    z2_case2_matrix,
    z2_classify,
)

PARAMS = range(-3, 4)
Z2_BRACES = [z2_brace(f, p) for f in ("case1", "case2") for p in PARAMS]
BOX2 = list(itertools.product(range(-3, 4), repeat=2))

vec2 = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


def test_log_vector():
    assert log_vector((3, -5, 1)) == -1
    assert log_vector((0,)) == 0


# validating phi

@pytest.mark.parametrize("m", [
    [[1, 0], [0, 1]],
    [[2, -1], [1, 0]],
    [[0, 1], [1, 0]],
])
def test_valid_phi_examples(m):
    assert validate_phi(m)


def test_minus_identity_is_not_valid_phi():
    v = validate_phi([[-1, 0], [0, -1]])
    assert not v and v.witness == 1


def test_second_row_witness():
    v = validate_phi([[1, 0], [1, -1]])
    assert not v and v.witness == 2


def test_non_unimodular_phi_raises():
    with pytest.raises(NotUnimodular):
        validate_phi([[2, 0], [0, 1]])


def test_family_matrices_are_valid():
    for p in range(-5, 6):
        assert validate_phi(z2_case1_matrix(p))
        assert validate_phi(z2_case2_matrix(p))


# the two Z^2 families

def test_case1_product_example():
    assert z2_brace("case1", 1).circ((1, 0), (0, 1)) == (2, 0)


def test_case1_inverse_examples():
    assert z2_brace("case1", 1).circ_inv((1, 0)) == (0, -1)
    assert z2_brace("case1", 2).circ_inv((1, 1)) == (7, -9)


def test_case2_examples():
    b = z2_brace("case2", 0)
    assert b.circ((1, 0), (0, 1)) == (3, -1)
    assert b.circ_inv((1, 0)) == (-1, 0)


@pytest.mark.parametrize("p", PARAMS)
def test_closed_forms_match_matrix_law(p):
    c1, c2 = z2_brace("case1", p), z2_brace("case2", p)
    for a in BOX2:
        assert c1.circ_inv(a) == z2_case1_inverse(p, a)
        assert c2.circ_inv(a) == z2_case2_inverse(p, a)
        for b in BOX2:
            assert c1.circ(a, b) == z2_case1_circ(p, a, b)
            assert c2.circ(a, b) == z2_case2_circ(p, a, b)


@pytest.mark.parametrize("b", Z2_BRACES, ids=lambda b: b.name)
def test_z2_axiom_exhaustive_box(b):
    v = check_brace_axiom(b, Strategy.box(3))
    assert v and v.samples == 7 ** 6


@pytest.mark.parametrize("p", range(-4, 5))
@pytest.mark.parametrize("k", range(-4, 5))
def test_matrix_power_closed_forms(p, k):
    assert matrix_power(z2_case1_matrix(p), k) == z2_case1_matrix(k * p)
    expected = z2_case2_matrix(p) if k % 2 else ((1, 0), (0, 1))
    assert matrix_power(z2_case2_matrix(p), k) == expected


def test_classify_trivial():
    c = z2_classify([[1, 0], [0, 1]])
    assert (c.family, c.type_number) == ("Trivial", 1)


@pytest.mark.parametrize("p", [p for p in range(-4, 5) if p])
def test_classify_case1(p):
    c = z2_classify(z2_case1_matrix(p))
    assert (c.family, c.p, c.type_number) == ("Case1", p, 2)
    assert all(c.checks)


@pytest.mark.parametrize("p", range(-4, 5))
def test_classify_case2(p):
    c = z2_classify(z2_case2_matrix(p))
    assert (c.family, c.p, c.mult_group, c.type_number) == ("Case2", p, "KleinBottle", 3)
    assert all(c.checks), [v.check for v in c.checks if not v]


def test_classify_rejects_invalid():
    with pytest.raises(NotValidPhi):
        z2_classify([[-1, 0], [0, -1]])
    with pytest.raises(BadRank):
        z2_classify([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_klein_group_is_not_commutative():
    b = z2_brace("case2", 0)
    assert b.circ((1, 0), (0, 1)) != b.circ((0, 1), (1, 0))


# Z^n constructions

def test_cyclic_permutation_products():
    b = cyclic_permutation_brace(3)
    assert b.circ((1, 0, 0), (1, 0, 0)) == (1, 1, 0)
    assert b.circ((1, 1, 0), (1, 0, 0)) == (1, 1, 1)
    assert b.power((1, 0, 0), 3) == (1, 1, 1)
    assert b.phi_order == 3


def test_cyclic_permutation_bad_rank():
    with pytest.raises(BadRank):
        cyclic_permutation_brace(1)


@pytest.mark.parametrize("n", range(2, 6))
def test_cyclic_presentation(n):
    v = verify_presentation_relations(n)
    assert v, v.witness


def test_presentation_rank_bound():
    with pytest.raises(BadRank):
        verify_presentation_relations(13)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyclic_kernel(n):
    b = cyclic_permutation_brace(n)
    for a in itertools.product(range(-2, 3), repeat=n):
        assert b.in_kernel(a) == cyclic_kernel_member(n, a)


def test_rank3_axiom_box():
    for b in (cyclic_permutation_brace(3), upper_triangular_example_brace(3)):
        assert check_brace_axiom(b, Strategy.box(1))


@pytest.mark.parametrize("n", [4, 5])
def test_higher_rank_axiom_sampled(n):
    for b in (cyclic_permutation_brace(n), upper_triangular_example_brace(n)):
        assert check_brace_axiom(b, Strategy.sampled(400, 4))


def test_upper_triangular_commutative():
    b = upper_triangular_example_brace(3)
    pairs = b._tuples(2, Strategy.sampled(1000, 6))
    assert all(b.circ(x, y) == b.circ(y, x) for x, y in pairs)


def test_upper_triangular_powers():
    b = upper_triangular_example_brace(3)
    assert b.power((1, 0, 0), 3) == (3, 0, 3)
    for n in (2, 3, 4):
        b = upper_triangular_example_brace(n)
        for i in range(n - 1):
            x = tuple(int(j == i) for j in range(n))
            for k in range(6):
                assert b.power(x, k) == upper_triangular_power(n, i, k)


def test_upper_triangular_last_generator_is_central_translation():
    b = upper_triangular_example_brace(3)
    for a in itertools.product(range(-2, 3), repeat=3):
        assert b.circ((0, 0, 1), a) == (a[0], a[1], a[2] + 1)


def test_integer_brace():
    b = integer_brace()
    assert b.circ((1,), (1,)) == (0,)
    assert b.circ((2,), (5,)) == (7,)
    for m in range(-10, 11):
        assert b.circ_inv((m,)) == ((-1) ** (m + 1) * m,)
    assert check_brace_axiom(b, Strategy.box(6))


# lambda structure

ALL_LATTICE = Z2_BRACES + [
    cyclic_permutation_brace(3),
    cyclic_permutation_brace(4),
    upper_triangular_example_brace(2),
    upper_triangular_example_brace(3),
    upper_triangular_example_brace(4),
    integer_brace(),
]
NOT_CYCLIC = {"Z3-upper-triangular", "Z4-upper-triangular"}


@pytest.mark.parametrize("b", ALL_LATTICE, ids=lambda b: b.name)
def test_lambda_cyclic(b):
    assert bool(is_lambda_cyclic(b)) == (b.name not in NOT_CYCLIC)


@pytest.mark.parametrize("b", ALL_LATTICE, ids=lambda b: b.name)
def test_symmetric_and_homomorphic(b):
    s = Strategy.sampled(200, 4)
    assert is_symmetric(b, s)
    assert is_lambda_homomorphic(b, s)
    assert check_lambda_circ_homomorphism(b, s)


def test_lattice_from_lambda_rejects_noncommuting():
    with pytest.raises(NotHomomorphism):
        lattice_from_lambda([[[1, 1], [0, 1]], [[1, 0], [1, 1]]])


def test_lattice_from_lambda_criterion_failure():
    # lambda(x1) = swap, lambda(x2) = id: x2^-1 swap(x2) = x1 - x2 is not in the kernel
    r = lattice_from_lambda([[[0, 1], [1, 0]], [[1, 0], [0, 1]]])
    assert isinstance(r, Rejection)
    assert r.witness is not None


def test_lattice_from_lambda_accepts_power_family():
    b = lattice_from_lambda([z2_case1_matrix(2)] * 2)
    c = z2_brace("case1", 2)
    for x in BOX2[:20]:
        for y in BOX2[:20]:
            assert b.circ(x, y) == c.circ(x, y)


# properties

@settings(max_examples=200, deadline=None)
@given(st.sampled_from(Z2_BRACES), vec2, vec2, vec2)
def test_axiom_property(b, x, y, z):
    assert b.circ(x, b.mul(y, z)) == b.mul(b.mul(b.circ(x, y), b.inv(x)), b.circ(x, z))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(Z2_BRACES), vec2, vec2, vec2)
def test_circ_associative_property(b, x, y, z):
    assert b.circ(b.circ(x, y), z) == b.circ(x, b.circ(y, z))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(Z2_BRACES), vec2)
def test_circ_inverse_property(b, x):
    assert b.circ(x, b.circ_inv(x)) == (0, 0) == b.circ(b.circ_inv(x), x)


@settings(max_examples=100, deadline=None)
@given(vec2, vec2)
def test_log_is_circ_additive(x, y):
    b = CyclicLatticeBrace(z2_case2_matrix(1))
    assert log_vector(b.circ(x, y)) == log_vector(x) + log_vector(y)

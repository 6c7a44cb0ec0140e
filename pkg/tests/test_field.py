import itertools
import random

import pytest

from egrgraphs.errors import DomainError, ParameterError, ResourceError
from egrgraphs.field import (
    Field,
    field_arith,
    field_create,
    is_irreducible,
    prime_power,
    smallest_irreducible,
    suzuki_sigma,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_gf4_modulus_and_alpha():
    f = field_create(4)
    assert f.modulus == (1, 1, 1)
    alpha = 2
    assert f.mul(alpha, alpha) == 3
    assert f.add(alpha, 1) == 3


def test_gf4_inverse_of_alpha_from_table():
    f = field_create(4)
    # brute force: the unique b with alpha * b == 1
    inverse = [b for b in range(4) if f.mul(2, b) == 1]
    assert inverse == [3]
    assert f.inv(2) == 3


def test_gf5_and_gf7():
    f = field_create(5)
    assert f.add(3, 4) == 2
    assert f.mul(2, 3) == 1
    assert field_create(7).inv(3) == 5


@pytest.mark.parametrize("q", [6, 10, 12, 1, 0])
def test_non_prime_power_rejected(q):
    with pytest.raises(ParameterError):
        field_create(q)


def test_size_limit():
    with pytest.raises(ResourceError):
        field_create(2048)


def test_inverse_of_zero():
    with pytest.raises(DomainError):
        field_create(7).inv(0)


def test_frobenius_identity_gf8():
    f = field_create(8)
    assert all(f.pow(x, 8) == x for x in f.elements())


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    f = field_create(q)
    els = list(f.elements())
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.sub(f.add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in els[1:]:
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, q) == a


@pytest.mark.parametrize("q", [27, 32, 49, 64, 81, 125, 243, 256, 512, 729, 1024])
def test_field_axioms_randomized(q, seed):
    f = field_create(q)
    rng = random.Random(seed + q)
    for _ in range(300):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        if a:
            assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, q) == a


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 25, 32, 128, 343, 1024])
def test_multiplicative_group_cyclic(q):
    f = field_create(q)
    assert f.order(f.generator) == q - 1


def test_multiplication_matches_schoolbook_polynomials():
    # independent route: multiply coefficient vectors and reduce by hand
    f = field_create(9)
    p, mod = f.p, f.modulus
    for a, b in itertools.product(range(9), repeat=2):
        ca, cb = f.coeffs(a), f.coeffs(b)
        c0 = ca[0] * cb[0]
        c1 = ca[0] * cb[1] + ca[1] * cb[0]
        c2 = ca[1] * cb[1]
        # x^2 = -(mod[1] x + mod[0])
        r0 = (c0 - c2 * mod[0]) % p
        r1 = (c1 - c2 * mod[1]) % p
        assert f.mul(a, b) == f.element((r0, r1))


def test_labeling_is_deterministic():
    fresh = Field(*prime_power(27))
    assert fresh.mul_table() == field_create(27).mul_table()
    assert Field(2, 3).mul_table() == Field(2, 3).mul_table()


def test_index_coefficient_bijection():
    f = field_create(27)
    assert [f.element(f.coeffs(x)) for x in range(27)] == list(range(27))
    assert f.coeffs(0) == (0, 0, 0) and f.coeffs(1) == (1, 0, 0)


def test_smallest_irreducible_is_lexicographically_first():
    # enumerate all monic cubics over GF(2) in the documented order
    cands = [low + (1,) for low in itertools.product(range(2), repeat=3)]
    irreducible = [c for c in cands if all(
        sum(cc * pow(r, i, 2) for i, cc in enumerate(c)) % 2 for r in range(2))]
    assert smallest_irreducible(2, 3) == irreducible[0]
    assert not is_irreducible((1, 0, 1), 2)  # x^2 + 1 = (x + 1)^2


def test_field_arith_dispatch():
    f = field_create(7)
    assert field_arith(f, "mul", 3, 5) == 1
    assert field_arith(f, "pow", 3, 6) == 1
    with pytest.raises(ParameterError):
        field_arith(f, "frobnicate", 1)


def test_suzuki_sigma_gf8():
    f = field_create(8)
    for x in f.elements():
        assert suzuki_sigma(f, x) == f.pow(x, 4)
        assert suzuki_sigma(f, suzuki_sigma(f, x)) == f.mul(x, x)
    assert suzuki_sigma(f, 0) == 0 and suzuki_sigma(f, 1) == 1


def test_suzuki_sigma_gf32_squares():
    f = field_create(32)
    assert all(suzuki_sigma(f, suzuki_sigma(f, x)) == f.mul(x, x) for x in f.elements())


@pytest.mark.parametrize("q", [4, 2, 16, 9])
def test_suzuki_sigma_rejects_bad_fields(q):
    with pytest.raises(ParameterError):
        suzuki_sigma(field_create(q), 1)

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclodet.fieldcore import (
    FieldError,
    enumerate_nonzero,
    field_inv,
    field_pow,
    field_sqrt,
    irreducible_check,
    is_primitive,
    legendre_symbol,
    make_extension_field,
    make_field,
    make_prime_field,
    power_sum,
    primitive_element,
    quadratic_character,
)
from cyclodet.primes import odd_prime_powers

from oracles import brute_force_irreducible

SMALL_Q = odd_prime_powers(3, 121)


# -- construction -------------------------------------------------------------


def test_prime_field_enumeration():
    F = make_prime_field(7)
    assert [x.code for x in enumerate_nonzero(F)] == [1, 2, 3, 4, 5, 6]
    assert [x.encode() for x in enumerate_nonzero(make_prime_field(3))] == [1, 2]


@pytest.mark.parametrize(
    "p, msg",
    [(2, "even characteristic"), (9, "composite"), (1, "not a prime"), (15, "composite"), (0, "not a prime")],
)
def test_prime_field_rejects(p, msg):
    with pytest.raises(FieldError, match=msg):
        make_prime_field(p)


def test_gf9_modulus_is_x2_plus_1():
    F = make_extension_field(3, 2)
    assert F.modulus == (1, 0, 1)
    assert F.q == 9


def test_gf25_modulus_is_first_irreducible():
    F = make_extension_field(5, 2)
    # Oracle: scan every monic quadratic in lexicographic order with a brute-force factor search.
    first = next(
        list(low) + [1]
        for low in itertools.product(range(5), repeat=2)
        if brute_force_irreducible(5, list(low) + [1])
    )
    assert list(F.modulus) == first == [1, 1, 1]


@pytest.mark.parametrize("p, n", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2), (13, 2), (3, 5)])
def test_extension_modulus_matches_bruteforce(p, n):
    F = make_extension_field(p, n)
    for low in itertools.product(range(p), repeat=n):
        cand = list(low) + [1]
        if brute_force_irreducible(p, cand):
            assert list(F.modulus) == cand
            break


def test_extension_rejects_degree_one_and_size():
    with pytest.raises(FieldError, match="use make_prime_field"):
        make_extension_field(3, 1)
    with pytest.raises(FieldError, match="size bound"):
        make_extension_field(3, 20)
    with pytest.raises(FieldError, match="composite"):
        make_extension_field(9, 2)


def test_size_bound_env_override(monkeypatch):
    monkeypatch.setenv("CYCLODET_MAX_Q", "100")
    with pytest.raises(FieldError, match="size bound"):
        make_extension_field.__wrapped__(11, 2)
    monkeypatch.setenv("CYCLODET_MAX_Q", "200")
    assert make_extension_field.__wrapped__(11, 2).q == 121


def test_extension_deterministic():
    a = make_extension_field.__wrapped__(7, 2)
    b = make_extension_field.__wrapped__(7, 2)
    assert a.modulus == b.modulus and a == b


def test_gf9_enumeration_is_lexicographic():
    F = make_field(9)
    vecs = [x.vector for x in enumerate_nonzero(F)]
    expected = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    assert vecs == expected


# -- irreducibility -----------------------------------------------------------


def test_irreducible_examples():
    assert irreducible_check(3, [1, 0, 1])
    assert not irreducible_check(3, [2, 0, 1])
    for p in (3, 5, 7):
        for c in range(p):
            assert irreducible_check(p, [c, 1])


def test_irreducible_rejects_non_monic():
    with pytest.raises(ValueError, match="monic"):
        irreducible_check(5, [1, 0, 2])


@pytest.mark.parametrize("p, n", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (7, 3)])
def test_irreducible_agrees_with_bruteforce(p, n):
    for low in itertools.product(range(p), repeat=n):
        f = list(low) + [1]
        assert irreducible_check(p, f) == brute_force_irreducible(p, f), f


# -- arithmetic ---------------------------------------------------------------


@pytest.mark.parametrize("q", SMALL_Q)
def test_inverse_and_fermat_exhaustive(q):
    F = make_field(q)
    for x in enumerate_nonzero(F):
        assert x * field_inv(F, x) == 1
        assert field_pow(F, x, q - 1) == 1


@pytest.mark.parametrize("q", [9, 25, 27, 49])
def test_table_mul_matches_polynomial_mul(q):
    F = make_field(q)
    for a in range(q):
        for b in range(q):
            assert F.mul(a, b) == F.ref_mul(a, b)


@pytest.mark.parametrize("q", [9, 27, 25])
def test_field_axioms_exhaustive(q):
    F = make_field(q)
    els = [F.elem(c) for c in range(q)]
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a
    for a, b, c in itertools.product(els[:9], repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [7, 9, 25, 125])
def test_vector_ops_match_scalar(q):
    import numpy as np

    F = make_field(q)
    a = np.arange(q).repeat(q)
    b = np.tile(np.arange(q), q)
    assert list(F.vadd(a, b)) == [F.add(x, y) for x, y in zip(a.tolist(), b.tolist())]
    assert list(F.vsub(a, b)) == [F.sub(x, y) for x, y in zip(a.tolist(), b.tolist())]
    assert list(F.vmul(a, b)) == [F.mul(x, y) for x, y in zip(a.tolist(), b.tolist())]
    for e in (0, 1, 2, (q + 1) // 2, q - 1, 3 * q):
        assert list(F.power_table(e)) == [F.pow(x, e) for x in range(q)]


def test_inverse_examples():
    F = make_prime_field(7)
    assert field_inv(F, F(2)) == 4
    assert field_inv(make_field(9), make_field(9)(1)) == 1
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        field_inv(F, F(0))


def test_pow_examples():
    F = make_prime_field(7)
    assert field_pow(F, F(3), 6) == 1
    assert field_pow(F, F(0), 0) == 1
    assert field_pow(F, F(0), 4) == 0
    G = make_field(27)
    assert field_pow(G, G([0, 1, 0]), 0) == 1


# -- characters ---------------------------------------------------------------


def test_quadratic_character_examples():
    F = make_prime_field(7)
    assert quadratic_character(F, F(0)) == 0
    assert quadratic_character(F, F(2)) == 1
    assert quadratic_character(F, F(3)) == -1


def test_legendre_examples():
    assert legendre_symbol(2, 7) == 1
    assert legendre_symbol(0, 7) == 0
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(-1, 5) == 1
    with pytest.raises(FieldError):
        legendre_symbol(3, 9)


@pytest.mark.parametrize("q", [q for q in SMALL_Q if q <= 49])
def test_character_multiplicative(q):
    F = make_field(q)
    els = enumerate_nonzero(F)
    for x in els:
        for y in els:
            assert quadratic_character(F, x * y) == quadratic_character(F, x) * quadratic_character(F, y)


@pytest.mark.parametrize("q", SMALL_Q)
def test_half_are_squares(q):
    F = make_field(q)
    squares = {(x * x).code for x in enumerate_nonzero(F)}
    chars = [quadratic_character(F, x) for x in enumerate_nonzero(F)]
    assert chars.count(1) == (q - 1) // 2 == len(squares)
    assert all((c == 1) == (x.code in squares) for c, x in zip(chars, enumerate_nonzero(F)))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13, 101, 997]), st.integers(-10**6, 10**6))
def test_legendre_matches_euler_criterion(p, a):
    expected = 0 if a % p == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)
    assert legendre_symbol(a, p) == expected


# -- primitive elements -------------------------------------------------------


def test_primitive_examples():
    assert primitive_element(make_prime_field(7)) == 3
    assert primitive_element(make_prime_field(3)) == 2


@pytest.mark.parametrize("q", SMALL_Q)
def test_primitive_is_first_generator(q):
    F = make_field(q)
    g = primitive_element(F)
    seen = set()
    x = F.one
    for _ in range(q - 1):
        seen.add(x)
        x = F.ref_mul(x, g.code)
    assert len(seen) == q - 1
    assert not any(is_primitive(F, F.elem(c)) for c in range(1, g.code))


# -- power sums and square roots ----------------------------------------------


def test_power_sum_examples():
    F = make_prime_field(7)
    assert power_sum(F, 6) == -1
    assert power_sum(F, 4) == 0
    assert power_sum(F, 0) == -1
    assert power_sum(make_prime_field(3), 1) == 0
    assert power_sum(F, -6) == -1
    assert power_sum(F, -2) == 0


@pytest.mark.parametrize("q", SMALL_Q)
def test_power_sum_law(q):
    F = make_field(q)
    for k in range(3 * (q - 1) + 1):
        expected = -1 if k % (q - 1) == 0 else 0
        assert power_sum(F, k) == expected, k


def test_sqrt_examples():
    F = make_prime_field(7)
    assert field_sqrt(F, F(2)) == 3
    assert field_sqrt(F, F(0)) == 0
    assert field_sqrt(F, F(3)) is None


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27, 49, 81])
def test_sqrt_exists_iff_character_nonnegative(q):
    F = make_field(q)
    for c in range(q):
        x = F.elem(c)
        u = field_sqrt(F, x)
        assert (u is not None) == (quadratic_character(F, x) in (0, 1))
        if u is not None:
            assert u * u == x


def test_encode_decode_roundtrip():
    for q in (7, 9, 27):
        F = make_field(q)
        for c in range(q):
            assert F.decode(F.encode(c)) == c
    assert make_field(9).encode(make_field(9).one) == [1, 0]
    assert make_field(7).encode(5) == 5

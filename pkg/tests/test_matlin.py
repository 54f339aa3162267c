import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclodet.fieldcore import enumerate_nonzero, make_field, make_prime_field
from cyclodet.matlin import (
    ExactMatrix,
    char_poly,
    circulant,
    determinant,
    poly_eval_int,
    rank,
    vandermonde_pair_product,
)

from oracles import cofactor_det, leibniz_det


def fmat(F, rows):
    return ExactMatrix([[F(x) for x in r] for r in rows])


def test_determinant_examples():
    F7 = make_prime_field(7)
    for m in (1, 3, 6):
        assert determinant(fmat(F7, np.eye(m, dtype=int).tolist())) == 1
    assert determinant(fmat(F7, [[1, 2], [3, 4]])) == 5
    assert determinant(fmat(make_prime_field(3), [[0, 1], [1, 0]])) == 2


def test_rank_examples():
    F = make_prime_field(5)
    assert rank(fmat(F, np.eye(4, dtype=int).tolist())) == 4
    assert rank(fmat(F, [[0] * 3] * 3)) == 0
    assert rank(fmat(F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])) == 2


def test_mixed_domains_rejected():
    F, G = make_prime_field(5), make_prime_field(7)
    with pytest.raises(TypeError, match="mixed"):
        ExactMatrix([[F(1), 2], [3, 4]])
    with pytest.raises(TypeError, match="mixed"):
        ExactMatrix([[F(1), G(1)], [F(0), F(1)]])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])


def test_input_not_mutated():
    F = make_prime_field(7)
    M = fmat(F, [[0, 1, 2], [3, 0, 5], [6, 1, 0]])
    before = M.codes.copy()
    determinant(M)
    rank(M)
    assert np.array_equal(M.codes, before)
    assert not M.codes.flags.writeable


@pytest.mark.parametrize("q", [7, 9, 25])
def test_elimination_matches_cofactor(q):
    F = make_field(q)
    rng = random.Random(q)
    for _ in range(40):
        m = rng.randint(1, 5)
        rows = [[rng.randrange(q) for _ in range(m)] for _ in range(m)]
        M = ExactMatrix.from_codes(F, rows)
        d = determinant(M).code
        assert d == cofactor_det(rows, F)
        assert (rank(M) == m) == (d != 0)


def test_elimination_matches_leibniz_singular_cases():
    F = make_field(27)
    rng = random.Random(1)
    for _ in range(20):
        m = rng.randint(2, 5)
        rows = [[rng.randrange(27) for _ in range(m)] for _ in range(m - 1)]
        rows.append([F.add(a, b) for a, b in zip(rows[0], rows[-1])])
        M = ExactMatrix.from_codes(F, rows)
        assert determinant(M) == 0 == leibniz_det(rows, F)
        assert rank(M) < m


@pytest.mark.parametrize("q", [7, 9, 13, 27, 49])
def test_det_invariant_under_simultaneous_permutation(q):
    F = make_field(q)
    rng = random.Random(q)
    for m in (2, 7, 13, 20):
        rows = [[rng.randrange(q) for _ in range(m)] for _ in range(m)]
        M = ExactMatrix.from_codes(F, rows)
        d = determinant(M)
        for _ in range(5):
            perm = list(range(m))
            rng.shuffle(perm)
            assert determinant(M.permuted(perm)) == d


def test_char_poly_examples():
    assert char_poly(ExactMatrix([[0]])) == [0, 1]
    assert char_poly(ExactMatrix([[0, 1], [1, 0]])) == [-1, 0, 1]
    assert char_poly(ExactMatrix([[2, 0], [0, 3]])) == [6, -5, 1]


def test_char_poly_rejects():
    with pytest.raises(TypeError):
        char_poly(fmat(make_prime_field(3), [[1]]))
    with pytest.raises(ValueError, match="bound"):
        char_poly(ExactMatrix(np.eye(51, dtype=int).tolist()))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda m: st.lists(
    st.lists(st.integers(-9, 9), min_size=m, max_size=m), min_size=m, max_size=m)))
def test_cayley_hamilton(rows):
    M = ExactMatrix(rows)
    cp = char_poly(M)
    assert cp[-1] == 1 and len(cp) == M.dim + 1
    assert all(v == 0 for r in poly_eval_int(cp, M) for v in r)


def test_char_poly_matches_sympy():
    rng = random.Random(3)
    t = sympy.Symbol("t")
    for m in range(1, 9):
        rows = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(m)]
        ref = [int(c) for c in sympy.Matrix(rows).charpoly(t).all_coeffs()[::-1]]
        assert char_poly(ExactMatrix(rows)) == ref
        assert determinant(ExactMatrix(rows)) == int(sympy.Matrix(rows).det())


def test_circulant_examples():
    F3 = make_prime_field(3)
    assert circulant([F3(2)]).tolist() == [[2]]
    assert circulant([5, 7]).tolist() == [[5, 7], [7, 5]]
    C = circulant([F3(0), F3(2)])
    assert C.tolist() == [[0, 2], [2, 0]]
    assert determinant(C) == 2
    with pytest.raises(ValueError):
        circulant([])


@pytest.mark.parametrize("m", range(1, 13))
def test_circulant_constant_cyclic_diagonals(m):
    row = list(range(10, 10 + m))
    C = circulant(row)
    for i in range(m):
        for j in range(m):
            assert C[i, j] == row[(j - i) % m]
    F = make_prime_field(13)
    Cf = circulant([F(x) for x in row])
    assert Cf.tolist() == [[x % 13 for x in r] for r in C.tolist()]


def test_vandermonde_pair_product_examples():
    F3 = make_prime_field(3)
    assert vandermonde_pair_product([F3(1), F3(2)]) == 1
    F = make_prime_field(7)
    assert vandermonde_pair_product([F(5)]) == 1
    assert vandermonde_pair_product(enumerate_nonzero(F)) == 1
    with pytest.raises(ValueError):
        vandermonde_pair_product([F(1), F(0)])
    with pytest.raises(ValueError):
        vandermonde_pair_product([F(1), F(1)])


@pytest.mark.parametrize("q", [5, 9, 13, 27])
def test_vandermonde_pair_product_order_free(q):
    F = make_field(q)
    els = enumerate_nonzero(F)
    rng = random.Random(q)
    for _ in range(5):
        rng.shuffle(els)
        assert vandermonde_pair_product(els) == 1

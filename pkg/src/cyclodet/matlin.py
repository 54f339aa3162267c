"""Exact dense linear algebra over finite fields and over the integers."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .fieldcore import Field, FieldElem

CHARPOLY_MAX_DIM = 50


class ExactMatrix:
    """Square matrix over one scalar domain: a :class:`Field`, or Python ints.

    Field matrices keep a read-only numpy array of element codes; integer
    matrices keep a tuple of tuples of arbitrary-precision ints.
    """

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        m = len(rows)
        if m == 0:
            raise ValueError("empty matrix")
        if any(len(r) != m for r in rows):
            raise ValueError("matrix must be square")
        flat = [x for r in rows for x in r]
        if all(isinstance(x, FieldElem) for x in flat):
            field = flat[0].field
            if any(x.field != field for x in flat):
                raise TypeError("mixed scalar domains: entries from different fields")
            codes = np.array([[x.code for x in r] for r in rows], dtype=np.int64)
            self._init_field(field, codes)
        elif all(isinstance(x, (int, np.integer)) and not isinstance(x, bool) for x in flat):
            self.field = None
            self.dim = m
            self._ints = tuple(tuple(int(x) for x in r) for r in rows)
            self._codes = None
        else:
            raise TypeError("mixed scalar domains")

    def _init_field(self, field: Field, codes: np.ndarray) -> None:
        codes = np.array(codes, dtype=np.int64)
        if codes.ndim != 2 or codes.shape[0] != codes.shape[1] or codes.shape[0] == 0:
            raise ValueError("matrix must be square and non-empty")
        if codes.min() < 0 or codes.max() >= field.q:
            raise ValueError("entry codes out of range")
        codes.flags.writeable = False
        self.field = field
        self.dim = codes.shape[0]
        self._codes = codes
        self._ints = None

    @classmethod
    def from_codes(cls, field: Field, codes) -> ExactMatrix:
        M = cls.__new__(cls)
        M._init_field(field, codes)
        return M

    @property
    def is_integer(self) -> bool:
        return self.field is None

    @property
    def codes(self) -> np.ndarray:
        if self._codes is None:
            raise TypeError("integer matrix has no field codes")
        return self._codes

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if self.field is None:
            return self._ints[i][j]
        return FieldElem(self.field, int(self._codes[i, j]))

    def rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    def tolist(self) -> list[list]:
        """Entries as plain ints (integer matrices) or JSON encodings (field matrices)."""
        if self.field is None:
            return [list(r) for r in self._ints]
        return [[self.field.encode(int(c)) for c in r] for r in self._codes]

    def permuted(self, perm: Sequence[int]) -> ExactMatrix:
        """Apply one permutation to rows and columns simultaneously."""
        perm = list(perm)
        if sorted(perm) != list(range(self.dim)):
            raise ValueError("not a permutation")
        if self.field is None:
            return ExactMatrix([[self._ints[i][j] for j in perm] for i in perm])
        idx = np.array(perm)
        return ExactMatrix.from_codes(self.field, self._codes[np.ix_(idx, idx)])

    def is_symmetric(self) -> bool:
        if self.field is None:
            return all(self._ints[i][j] == self._ints[j][i] for i in range(self.dim) for j in range(i))
        return bool(np.array_equal(self._codes, self._codes.T))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.field != other.field or self.dim != other.dim:
            return False
        if self.field is None:
            return self._ints == other._ints
        return bool(np.array_equal(self._codes, other._codes))

    def __repr__(self) -> str:
        domain = "ZZ" if self.field is None else repr(self.field)
        return f"ExactMatrix({self.dim}x{self.dim} over {domain})"


def _eliminate(M: ExactMatrix) -> tuple[int, int]:
    """Row-reduce a copy of M; return (rank, determinant code)."""
    F = M.field
    A = M.codes.copy()
    m = M.dim
    det = F.one
    r = 0
    for c in range(m):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
            det = F.neg(det)
        pv = int(A[r, c])
        det = F.mul(det, pv)
        below = A[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            rows = r + 1 + hit
            factors = F.vmul(below[hit], F.inv(pv))
            update = F.vmul(factors[:, None], A[r, c:][None, :])
            A[rows, c:] = F.vsub(A[rows, c:], update)
        r += 1
    return r, (det if r == m else 0)


def determinant(M: ExactMatrix):
    """det M: a FieldElem for field matrices, an int for integer matrices.

    Field matrices use Gaussian elimination with first-nonzero pivoting;
    integer matrices take the constant term of the Berkowitz polynomial.
    """
    if M.field is None:
        cp = char_poly(M, max_dim=max(M.dim, CHARPOLY_MAX_DIM))
        return cp[0] if M.dim % 2 == 0 else -cp[0]
    _, det = _eliminate(M)
    return FieldElem(M.field, det)


def rank(M: ExactMatrix) -> int:
    if M.field is None:
        raise TypeError("rank is only defined here for field matrices")
    r, _ = _eliminate(M)
    return r


def char_poly(M: ExactMatrix, max_dim: int = CHARPOLY_MAX_DIM) -> list[int]:
    """Coefficients of det(tI - M), constant term first, by Berkowitz's method.

    Division-free, so everything stays in exact integers.
    """
    if M.field is not None:
        raise TypeError("char_poly expects an integer matrix")
    m = M.dim
    if m > max_dim:
        raise ValueError(f"dimension {m} exceeds the char_poly bound {max_dim}")
    A = M._ints
    # vect holds the polynomial of the leading k x k block, highest degree first
    vect = [1, -A[0][0]]
    for k in range(1, m):
        R = A[k][:k]
        sub = [row[:k] for row in A[:k]]
        col = [A[i][k] for i in range(k)]
        toeplitz = [1, -A[k][k]]
        for _ in range(k):
            toeplitz.append(-sum(r * c for r, c in zip(R, col)))
            col = [sum(a * c for a, c in zip(row, col)) for row in sub]
        vect = [
            sum(toeplitz[i - j] * vect[j] for j in range(min(i, k) + 1))
            for i in range(k + 2)
        ]
    return vect[::-1]


def circulant(row: Sequence) -> ExactMatrix:
    """M[i][j] = row[(j - i) mod m]."""
    row = list(row)
    m = len(row)
    if m == 0:
        raise ValueError("empty circulant row")
    if all(isinstance(x, FieldElem) for x in row):
        F = row[0].field
        if any(x.field != F for x in row):
            raise TypeError("mixed scalar domains")
        base = np.array([x.code for x in row], dtype=np.int64)
        idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
        return ExactMatrix.from_codes(F, base[idx])
    return ExactMatrix([[row[(j - i) % m] for j in range(m)] for i in range(m)])


def vandermonde_pair_product(xs: Sequence[FieldElem]) -> FieldElem:
    """Product over i < j of (x_j - x_i) * (1/x_j - 1/x_i)."""
    xs = list(xs)
    if not xs:
        raise ValueError("need at least one element")
    F = xs[0].field
    codes = [F(x).code for x in xs]
    if 0 in codes:
        raise ValueError("entries must be nonzero")
    if len(set(codes)) != len(codes):
        raise ValueError("entries must be pairwise distinct")
    invs = [F.inv(c) for c in codes]
    acc = F.one
    for j in range(len(codes)):
        for i in range(j):
            acc = F.mul(acc, F.mul(F.sub(codes[j], codes[i]), F.sub(invs[j], invs[i])))
    return FieldElem(F, acc)


def poly_eval_int(coeffs: Sequence[int], M: ExactMatrix) -> list[list[int]]:
    """Evaluate an integer polynomial (constant first) at an integer matrix, Horner style."""
    m = M.dim
    A = M._ints
    acc = [[0] * m for _ in range(m)]
    for c in reversed(coeffs):
        acc = [[sum(acc[i][k] * A[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
        for i in range(m):
            acc[i][i] += c
    return acc

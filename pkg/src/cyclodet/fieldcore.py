"""Finite fields GF(p^n) of odd characteristic.

Elements are stored as integer codes in ``range(q)``.  For GF(p) the code is
the residue itself.  For GF(p^n) an element c0 + c1*x + ... + c_{n-1}*x^(n-1)
is coded as ``c0*p^(n-1) + c1*p^(n-2) + ... + c_{n-1}``, so that increasing
codes list the coefficient vectors in lexicographic order with the constant
coefficient most significant.  The canonical enumeration of nonzero elements
is simply codes ``1..q-1``.

Polynomials over GF(p) (moduli, the reference arithmetic) are lists of ints,
lowest degree first.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from .primes import PRIME_BOUND, is_prime, max_q, prime_factors, prime_power


class FieldError(ValueError):
    """Invalid field parameters."""


# -- polynomials over GF(p) -------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    f = _trim([c % p for c in f])
    if not f:
        raise ZeroDivisionError("polynomial division by zero")
    df = len(f) - 1
    lead_inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return poly_mod(prod, f, p)


def poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = poly_mod([1], f, p)
    base = poly_mod(a, f, p)
    while e > 0:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic gcd (empty list when both inputs are zero)."""
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def irreducible_check(p: int, f: Sequence[int]) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for primes l | n."""
    f = _trim([c % p for c in f])
    if len(f) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if f[-1] != 1:
        raise ValueError("polynomial must be monic")
    n = len(f) - 1
    if n == 1:
        return True
    x = [0, 1]

    def frobenius_iterate(times: int) -> list[int]:
        h = x
        for _ in range(times):
            h = poly_powmod(h, p, f, p)
        return h

    if poly_sub(frobenius_iterate(n), x, p):
        return False
    for ell in prime_factors(n):
        diff = poly_sub(frobenius_iterate(n // ell), x, p)
        if len(poly_gcd(diff, f, p)) != 1:
            return False
    return True


# -- fields -----------------------------------------------------------------


class Field:
    """GF(p^n) with a fixed monic irreducible modulus.

    Scalar arithmetic works on integer codes (``add``, ``mul``, ...); the
    ``v*`` methods are the same operations lifted to numpy integer arrays and
    are what the linear algebra uses.  Instances are never mutated after
    construction.
    """

    def __init__(self, p: int, modulus: Sequence[int]):
        modulus = tuple(int(c) % p for c in modulus)
        self.p = p
        self.n = len(modulus) - 1
        self.modulus = modulus
        self.q = p**self.n
        self._one = 1 if self.n == 1 else p ** (self.n - 1)
        if self.n > 1:
            self._init_extension()

    def _init_extension(self) -> None:
        p, n, q = self.p, self.n, self.q
        weights = np.array([p ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % p
        self._weights = weights
        self._digits = digits
        self._digit_tuples = [tuple(int(c) for c in row) for row in digits]
        g = _first_primitive(self)
        exp = [0] * (q - 1)
        cur = self._one
        for i in range(q - 1):
            exp[i] = cur
            cur = self.ref_mul(cur, g)
        log = [0] * q
        for i, c in enumerate(exp):
            log[c] = i
        self._exp = exp
        self._log = log
        self._exp_arr = np.array(exp, dtype=np.int64)
        self._log_arr = np.array(log, dtype=np.int64)
        self._primitive = g

    # representation

    def __repr__(self) -> str:
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __reduce__(self):
        return (Field, (self.p, self.modulus))

    @property
    def is_prime_field(self) -> bool:
        return self.n == 1

    def vector(self, code: int) -> tuple[int, ...]:
        if self.n == 1:
            return (code,)
        return self._digit_tuples[code]

    def from_vector(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        code = 0
        for c in coeffs:
            code = code * self.p + int(c) % self.p
        return code

    def __call__(self, value) -> FieldElem:
        """Coerce an int (into the prime subfield), a coefficient vector or an element."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, self.embed(int(value)))
        return FieldElem(self, self.from_vector(list(value)))

    def elem(self, code: int) -> FieldElem:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElem(self, code)

    def embed(self, k: int) -> int:
        """Code of the integer k mapped into the prime subfield."""
        return (k % self.p) * self._one

    def lift(self, code: int) -> int:
        """Integer representative in [0, p) of a prime-subfield element."""
        if code % self._one:
            raise ValueError("element is not in the prime subfield")
        return code // self._one

    def in_prime_subfield(self, code: int) -> bool:
        return code % self._one == 0

    def encode(self, code: int):
        """JSON form: an int for prime fields, a coefficient list otherwise."""
        if self.n == 1:
            return code
        return list(self.vector(code))

    def decode(self, obj) -> int:
        if self.n == 1:
            if not isinstance(obj, int):
                raise ValueError(f"expected an integer residue, got {obj!r}")
            return obj % self.p
        return self.from_vector(obj)

    # scalar arithmetic on codes

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self._one

    @property
    def minus_one(self) -> int:
        return self.embed(-1)

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._digit_tuples[a], self._digit_tuples[b]
        code = 0
        for x, y in zip(da, db):
            code = code * p + (x + y) % p
        return code

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        p = self.p
        code = 0
        for x in self._digit_tuples[a]:
            code = code * p + (-x) % p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        if self.n == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; 0**0 == 1, negative exponents invert first."""
        if e < 0:
            a, e = self.inv(a), -e
        result = self._one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def ref_mul(self, a: int, b: int) -> int:
        """Multiplication straight from polynomial arithmetic mod the modulus."""
        if self.n == 1:
            return a * b % self.p
        prod = poly_mulmod(list(self.vector(a)), list(self.vector(b)), self.modulus, self.p)
        prod += [0] * (self.n - len(prod))
        return self.from_vector(prod)

    def ref_pow(self, a: int, e: int) -> int:
        if self.n == 1:
            return pow(a, e, self.p)
        out = poly_powmod(list(self.vector(a)), e, self.modulus, self.p)
        out += [0] * (self.n - len(out))
        return self.from_vector(out)

    def sum(self, codes: Iterable[int]) -> int:
        total = 0
        for c in codes:
            total = self.add(total, c)
        return total

    # vectorised arithmetic on numpy code arrays

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return (a + b) % self.p
        d = (self._digits[a] + self._digits[b]) % self.p
        return d @ self._weights

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.n == 1:
            return -a % self.p
        return ((-self._digits[a]) % self.p) @ self._weights

    def vsub(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return (a - b) % self.p
        d = (self._digits[a] - self._digits[b]) % self.p
        return d @ self._weights

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return a * b % self.p
        a, b = np.broadcast_arrays(a, b)
        out = self._exp_arr[(self._log_arr[a] + self._log_arr[b]) % (self.q - 1)]
        out[(a == 0) | (b == 0)] = 0
        return out

    def power_table(self, e: int) -> np.ndarray:
        """Array whose entry x is x**e, for every code x (0**0 == 1)."""
        if e < 0:
            raise ValueError("power_table needs a non-negative exponent")
        q = self.q
        if self.n == 1:
            base = np.arange(q, dtype=np.int64)
            out = np.ones(q, dtype=np.int64)
            while e:
                if e & 1:
                    out = out * base % q
                base = base * base % q
                e >>= 1
            return out
        out = self._exp_arr[(self._log_arr * e) % (q - 1)]
        out[0] = self._one if e == 0 else 0
        return out

    def vpow(self, a, e: int) -> np.ndarray:
        return self.power_table(e)[np.asarray(a, dtype=np.int64)]


class FieldElem:
    """An element of a :class:`Field`, with the usual operators."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = int(code)

    def _coerce(self, other) -> int | None:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return self.field.embed(int(other))
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.field, self.field.div(b, self.code))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.code, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == self.field.embed(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    @property
    def vector(self) -> tuple[int, ...]:
        return self.field.vector(self.code)

    def encode(self):
        return self.field.encode(self.code)

    def __repr__(self) -> str:
        if self.field.n == 1:
            return f"{self.code} (mod {self.field.p})"
        return f"{list(self.vector)} in {self.field!r}"


# -- constructors -----------------------------------------------------------


def _check_odd_prime(p: int) -> None:
    if p < 2:
        raise FieldError(f"p={p} is not a prime")
    if p % 2 == 0:
        raise FieldError(f"even characteristic p={p} is not supported")
    if p >= PRIME_BOUND:
        raise FieldError(f"p={p} exceeds the trial-division bound {PRIME_BOUND}")
    if not is_prime(p):
        raise FieldError(f"p={p} is composite")


@functools.lru_cache(maxsize=None)
def make_prime_field(p: int) -> Field:
    _check_odd_prime(p)
    return Field(p, (0, 1))


@functools.lru_cache(maxsize=None)
def make_extension_field(p: int, n: int) -> Field:
    """GF(p^n) whose modulus is the lexicographically first monic irreducible.

    Candidates are ordered by their coefficient tuples (c0, c1, ..., c_{n-1}),
    constant term first.
    """
    if n == 1:
        raise FieldError("use make_prime_field for n=1")
    if n < 1:
        raise FieldError(f"degree n={n} must be >= 2")
    _check_odd_prime(p)
    bound = max_q()
    if p**n > bound:
        raise FieldError(f"q={p}^{n}={p**n} exceeds the size bound {bound}")
    for low in itertools.product(range(p), repeat=n):
        f = list(low) + [1]
        if low[0] != 0 and irreducible_check(p, f):
            return Field(p, f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def make_field(q: int) -> Field:
    """GF(q) for an odd prime power q."""
    pp = prime_power(q)
    if pp is None:
        raise FieldError(f"q={q} is not a prime power")
    p, n = pp
    if n == 1:
        return make_prime_field(p)
    return make_extension_field(p, n)


# -- field-level operations -------------------------------------------------


def enumerate_nonzero(F: Field) -> list[FieldElem]:
    return [FieldElem(F, c) for c in range(1, F.q)]


def field_inv(F: Field, x: FieldElem) -> FieldElem:
    return FieldElem(F, F.inv(F(x).code))


def field_pow(F: Field, x: FieldElem, e: int) -> FieldElem:
    return FieldElem(F, F.pow(F(x).code, e))


def quadratic_character(F: Field, x: FieldElem | int) -> int:
    code = F(x).code
    if code == 0:
        return 0
    r = F.pow(code, (F.q - 1) // 2)
    if r == F.one:
        return 1
    if r == F.minus_one:
        return -1
    raise AssertionError(f"x^((q-1)/2) = {r} is not +-1")  # pragma: no cover


def legendre_symbol(a: int, p: int) -> int:
    return quadratic_character(make_prime_field(p), a)


def _first_primitive(F: Field) -> int:
    order = F.q - 1
    ells = prime_factors(order) if order > 1 else []
    for c in range(1, F.q):
        if all(F.ref_pow(c, order // ell) != F.one for ell in ells):
            return c
    raise AssertionError("no primitive element")  # pragma: no cover


def primitive_element(F: Field) -> FieldElem:
    """First element of the canonical enumeration generating GF(q)*."""
    if F.n > 1:
        return FieldElem(F, F._primitive)
    return FieldElem(F, _first_primitive(F))


def is_primitive(F: Field, g: FieldElem) -> bool:
    code = F(g).code
    if code == 0:
        return False
    order = F.q - 1
    return all(F.pow(code, order // ell) != F.one for ell in prime_factors(order)) if order > 1 else True


def primitive_elements(F: Field) -> list[FieldElem]:
    """All generators of GF(q)*, in canonical order."""
    return [FieldElem(F, c) for c in range(1, F.q) if is_primitive(F, FieldElem(F, c))]


def power_sum(F: Field, k: int) -> FieldElem:
    """Sum of x**k over all nonzero x, by direct summation."""
    total = 0
    for x in range(1, F.q):
        total = F.add(total, F.pow(x, k))
    return FieldElem(F, total)


def field_sqrt(F: Field, x: FieldElem | int) -> FieldElem | None:
    """First u in canonical order with u*u == x, or None."""
    code = F(x).code
    if code == 0:
        return FieldElem(F, 0)
    for u in range(1, F.q):
        if F.mul(u, u) == code:
            return FieldElem(F, u)
    return None

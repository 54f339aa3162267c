"""Trinomial coefficients: the coefficients of (x + 1 + 1/x)^n.

``binom(n, k)_2`` is the coefficient of x^k, for -n <= k <= n, and the central
one ``T_n = binom(n, 0)_2``.  Rows are computed by repeated convolution with
(1, 1, 1), which never divides and so is safe modulo any prime.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .primes import is_prime


@dataclass(frozen=True)
class TrinomialRow:
    n: int
    coeffs: tuple[int, ...]  # coeffs[k + n] is binom(n, k)_2
    modulus: int | None = None

    def __getitem__(self, k: int) -> int:
        if abs(k) > self.n:
            return 0
        return self.coeffs[k + self.n]

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def central(self) -> int:
        return self.coeffs[self.n]


def _check_modulus(modulus: int | None) -> None:
    if modulus is None:
        return
    if modulus < 3 or modulus % 2 == 0 or not is_prime(modulus):
        raise ValueError(f"modulus must be an odd prime, got {modulus}")


@functools.lru_cache(maxsize=1024)
def trinomial_row(n: int, modulus: int | None = None) -> TrinomialRow:
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_modulus(modulus)
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 2)
        for i, c in enumerate(row):
            nxt[i] += c
            nxt[i + 1] += c
            nxt[i + 2] += c
        if modulus is not None:
            nxt = [c % modulus for c in nxt]
        row = nxt
    return TrinomialRow(n, tuple(row), modulus)


def central_trinomial(n: int, modulus: int | None = None) -> int:
    return trinomial_row(n, modulus).central


def central_trinomial_recurrence(n: int) -> int:
    """Exact T_n from n*T_n = (2n-1)*T_{n-1} + 3(n-1)*T_{n-2}.

    Integers only: the recurrence divides by n, so it is useless mod p.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 1, 1
    if n == 0:
        return 1
    for m in range(2, n + 1):
        prev, cur = cur, ((2 * m - 1) * cur + 3 * (m - 1) * prev) // m
    return cur


def trinomial_coeff(n: int, k: int, modulus: int | None = None) -> int:
    """binom(n, k)_2, zero when |k| > n."""
    return trinomial_row(n, modulus)[k]

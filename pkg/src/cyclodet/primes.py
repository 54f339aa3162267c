"""Trial-division primality, factoring and odd prime-power enumeration.

Everything here is sized for desk-scale inputs (a few million at most).
"""

from __future__ import annotations

import os

DEFAULT_MAX_Q = 2048
PRIME_BOUND = 10**6


def max_q() -> int:
    """Upper bound on field orders, overridable with ``CYCLODET_MAX_Q``."""
    raw = os.environ.get("CYCLODET_MAX_Q")
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CYCLODET_MAX_Q must be an integer, got {raw!r}") from None
    if value < 3:
        raise ValueError("CYCLODET_MAX_Q must be at least 3")
    return value


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def integer_root(x: int, k: int) -> int:
    """Largest r with r**k <= x."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    r = int(round(x ** (1.0 / k)))
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` and p prime, or None."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        r = integer_root(q, k)
        if r >= 2 and r**k == q and is_prime(r):
            return r, k
    return None


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    """All odd prime powers q with lo <= q <= hi, ascending."""
    start = max(lo, 3)
    if start % 2 == 0:
        start += 1
    return [q for q in range(start, hi + 1, 2) if prime_power(q) is not None]


def odd_primes(lo: int, hi: int) -> list[int]:
    start = max(lo, 3)
    if start % 2 == 0:
        start += 1
    return [p for p in range(start, hi + 1, 2) if is_prime(p)]

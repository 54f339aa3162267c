"""Brute-force reference computations used as test oracles."""

import itertools

# Independent oracles.  None of these touch the log/exp tables or the
# numpy elimination used by the package.


def leibniz_det(rows, F):
    """Permutation-expansion determinant using reference polynomial arithmetic."""
    m = len(rows)
    total = 0
    for perm in itertools.permutations(range(m)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        term = F.one
        for i in range(m):
            term = F.ref_mul(term, rows[i][perm[i]])
        if inversions % 2:
            term = F.neg(term)
        total = F.add(total, term)
    return total


def cofactor_det(rows, F):
    """Laplace expansion along the first row."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    total = 0
    for j in range(m):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = F.ref_mul(rows[0][j], cofactor_det(minor, F))
        total = F.add(total, term if j % 2 == 0 else F.neg(term))
    return total


def brute_force_irreducible(p, f):
    """f (low-to-high, monic) is irreducible iff no monic factor of degree 1..deg/2 divides it."""
    from cyclodet.fieldcore import poly_mod

    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(f, list(low) + [1], p):
                return False
    return True


def multinomial_trinomial(n, k):
    """binom(n, k)_2 by counting: choose i factors x, j factors 1/x, the rest 1, i - j = k."""
    from math import factorial

    total = 0
    for j in range(n + 1):
        i = j + k
        rest = n - i - j
        if i < 0 or rest < 0:
            continue
        total += factorial(n) // (factorial(i) * factorial(j) * factorial(rest))
    return total

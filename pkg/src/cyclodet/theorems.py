"""The matrix S_q, its two determinant pipelines, and identity checks.

S_q is the (q-1)x(q-1) matrix over GF(q) with entry (i, j) equal to
s * chi(s), s = a_i^2 + a_i a_j + a_j^2, evaluated as s^((q+1)/2).

Every check returns a :class:`VerificationReport`.  Reports hold JSON-ready
encodings of both compared sides (see ``Field.encode``).
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .fieldcore import (
    Field,
    FieldElem,
    enumerate_nonzero,
    field_sqrt,
    is_primitive,
    legendre_symbol,
    make_field,
    make_prime_field,
    power_sum,
    primitive_element,
    quadratic_character,
)
from .matlin import ExactMatrix, char_poly, circulant, determinant, rank, vandermonde_pair_product
from .primes import is_prime, odd_prime_powers
from .trinomial import trinomial_row

IDENTITIES = (
    "ThmA",
    "ThmB",
    "CorollaryA",
    "ThmA_pipeline",
    "Lemma2_1",
    "Lemma2_2",
    "Lemma3_1",
    "Lemma3_2",
    "Eq3_2",
    "Carlitz",
    "SingularScanEntry",
)

CARLITZ_MAX_P = 31


class PreconditionError(ValueError):
    """The identity's hypotheses do not hold for these parameters."""


@dataclass
class VerificationReport:
    identity: str
    q: int
    p: int
    n: int
    modulus: list[int]
    status: str  # "pass", "fail" or "skipped"
    lhs: Any = None
    rhs: Any = None
    witness: Any = None
    reason: str | None = None
    notes: list[str] = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _report(identity: str, F: Field, **kw) -> VerificationReport:
    return VerificationReport(identity, F.q, F.p, F.n, list(F.modulus), **kw)


def _skipped(identity: str, F: Field, reason: str) -> VerificationReport:
    return _report(identity, F, status="skipped", reason=reason)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def half_up(F: Field) -> int:
    """(q+1)/2, the row index of every trinomial coefficient used here."""
    return (F.q + 1) // 2


def central_T(F: Field) -> int:
    """Code of T_{(q+1)/2} mod p inside F."""
    return F.embed(trinomial_row(half_up(F), F.p).central)


def theorem_b_applies(F: Field) -> bool:
    return F.q > 5 and F.p != 11


# -- matrices ---------------------------------------------------------------


def build_S(F: Field, elements: Sequence[FieldElem] | None = None) -> ExactMatrix:
    """S_q over the canonical enumeration, or over ``elements`` if given."""
    if elements is None:
        a = np.arange(1, F.q, dtype=np.int64)
    else:
        a = np.array([F(x).code for x in elements], dtype=np.int64)
    sq = F.vmul(a, a)
    s = F.vadd(F.vadd(sq[:, None], F.vmul(a[:, None], a[None, :])), sq[None, :])
    return ExactMatrix.from_codes(F, F.vpow(s, half_up(F)))


def build_circulant_row(F: Field, g: FieldElem | None = None) -> list[FieldElem]:
    """t_i = g^(-i) * (g^(2i) + g^i + 1)^((q+1)/2) for 0 <= i <= q-2."""
    if g is None:
        g = primitive_element(F)
    elif not is_primitive(F, g):
        raise ValueError(f"{g!r} is not a primitive element")
    m = half_up(F)
    gc = F(g).code
    row = []
    gi = F.one
    for i in range(F.q - 1):
        base = F.add(F.add(F.mul(gi, gi), gi), F.one)
        row.append(FieldElem(F, F.mul(F.inv(gi), F.pow(base, m))))
        gi = F.mul(gi, gc)
    return row


@functools.lru_cache(maxsize=None)
def det_S(F: Field) -> FieldElem:
    return determinant(build_S(F))


def build_carlitz(p: int) -> ExactMatrix:
    """Integer matrix [((j - i)/p)] for 1 <= i, j <= p-1."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} must be an odd prime")
    return ExactMatrix([[legendre_symbol(j - i, p) for j in range(1, p)] for i in range(1, p)])


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def carlitz_polynomial(p: int) -> list[int]:
    """(t^2 - s*p)^((p-3)/2) * (t^2 - s) with s = (-1)^((p-1)/2); constant term first."""
    s = -1 if p % 4 == 3 else 1
    out = [-s, 0, 1]
    for _ in range((p - 3) // 2):
        out = _int_poly_mul(out, [-s * p, 0, 1])
    return out


def f_polynomial(F: Field) -> list[FieldElem]:
    """Coefficients (degree 0 .. q-2) of the polynomial interpolating (a^2+a+1)^((q+1)/2)."""
    if not theorem_b_applies(F):
        raise PreconditionError(f"needs q > 5 and gcd(q, 22) = 1, got q={F.q}")
    m = half_up(F)
    row = trinomial_row(m, F.p)
    eleven_eighths = F.div(F.embed(11), F.embed(8))
    coeffs: dict[int, int] = {0: eleven_eighths, 1: F.one, 2: eleven_eighths}
    span = (F.q - 5) // 2
    for k in range(-span, span + 1):
        e = k + m
        if e in coeffs:
            raise AssertionError(f"exponent {e} assigned twice")
        coeffs[e] = F.embed(row[k])
    if sorted(coeffs) != list(range(F.q - 1)):
        raise AssertionError("f does not cover degrees 0..q-2")
    return [FieldElem(F, coeffs[e]) for e in range(F.q - 1)]


# -- Theorem A --------------------------------------------------------------


def _square_class_check(F: Field, d: int, c: int) -> tuple[bool, FieldElem | None]:
    """Is d = c * u^2 for some u?  Returns (holds, u)."""
    if c == 0:
        return d == 0, None
    ratio = F.div(d, c)
    if quadratic_character(F, FieldElem(F, ratio)) == -1:
        return False, None
    return True, field_sqrt(F, FieldElem(F, ratio))


@_timed
def thm_A_report(F: Field, include_edge: bool = False) -> VerificationReport:
    """det S_q = T_{(q+1)/2} * u^2 for some u in GF(q)."""
    if F.q == 3 and not include_edge:
        return _skipped("ThmA", F, "edge case q=3 excluded by default; use include_edge")
    d = det_S(F).code
    T = central_T(F)
    ok, u = _square_class_check(F, d, T)
    notes = []
    if F.q == 3:
        notes.append(
            "q=3: (q+1)/2 = q-1, so the alternating row sum also collects the "
            "k = +-(q-1) terms and differs from -T"
        )
    return _report(
        "ThmA", F, status=_status(ok), lhs=F.encode(d), rhs=F.encode(T),
        witness=u.encode() if u is not None else None, notes=notes,
    )


@_timed
def thm_A_pipeline_report(F: Field, g: FieldElem | None = None) -> VerificationReport:
    """Circulant route: symmetry of t_i, sum t_i = -1, alternating sum = -T, equal determinants."""
    row = build_circulant_row(F, g)
    codes = [t.code for t in row]
    m = len(codes)
    notes = []
    symmetric = all(codes[i] == codes[m - i] for i in range(1, m))
    if not symmetric:
        notes.append("t_i != t_{q-1-i} for some i")
    total = F.sum(codes)
    alt = F.sum(c if i % 2 == 0 else F.neg(c) for i, c in enumerate(codes))
    minus_T = F.neg(central_T(F))
    d_circ = determinant(circulant(row)).code
    d_s = det_S(F).code
    ok = symmetric and total == F.minus_one and d_circ == d_s
    if F.q >= 5:
        ok = ok and alt == minus_T
    else:
        notes.append("alternating sum = -T is only claimed for q >= 5; not compared")
    g_used = primitive_element(F) if g is None else F(g)
    return _report(
        "ThmA_pipeline", F, status=_status(ok),
        lhs=[F.encode(total), F.encode(alt), F.encode(d_circ)],
        rhs=[F.encode(F.minus_one), F.encode(minus_T), F.encode(d_s)],
        witness=g_used.encode(), notes=notes,
    )


@_timed
def corollary_A_report(p: int, include_edge: bool = False) -> VerificationReport:
    """(det S_p / p) = (T_{(p+1)/2} / p) whenever p does not divide det S_p."""
    F = make_prime_field(p)
    if p == 3 and not include_edge:
        return _skipped("CorollaryA", F, "edge case q=3 excluded by default; use include_edge")
    d = det_S(F).code
    if d == 0:
        return _skipped("CorollaryA", F, "hypothesis fails: p divides det S_p")
    T = central_T(F)
    ls_det = legendre_symbol(F.lift(d), p)
    ls_T = legendre_symbol(F.lift(T), p)
    return _report("CorollaryA", F, status=_status(ls_det == ls_T), lhs=ls_det, rhs=ls_T)


# -- Theorem B --------------------------------------------------------------


def thm_B_formula(F: Field) -> FieldElem:
    """121/64 * T_{(q+1)/2} * prod_{k=1}^{(q-5)/2} binom((q+1)/2, k)_2^2 in GF(q)."""
    if not theorem_b_applies(F):
        raise PreconditionError(f"needs q > 5 and gcd(q, 22) = 1, got q={F.q}")
    row = trinomial_row(half_up(F), F.p)
    acc = F.mul(F.div(F.embed(121), F.embed(64)), F.embed(row.central))
    for k in range(1, (F.q - 5) // 2 + 1):
        c = F.embed(row[k])
        acc = F.mul(acc, F.mul(c, c))
    return FieldElem(F, acc)


def singular_witness(F: Field) -> int | None:
    """Smallest 0 <= k <= (q-5)/2 with binom((q+1)/2, k)_2 = 0 mod p, if any."""
    row = trinomial_row(half_up(F), F.p)
    for k in range((F.q - 5) // 2 + 1):
        if row[k] == 0:
            return k
    return None


@_timed
def thm_B_report(F: Field) -> VerificationReport:
    if not theorem_b_applies(F):
        return _skipped("ThmB", F, f"needs q > 5 and gcd(q, 22) = 1, got q={F.q}")
    S = build_S(F)
    d = determinant(S).code
    r = rank(S)
    formula = thm_B_formula(F).code
    k = singular_witness(F)
    by_coeff, by_det, by_rank = k is not None, d == 0, r < F.q - 1
    notes = []
    if d != formula:
        notes.append("determinant differs from the closed formula")
    if not (by_coeff == by_det == by_rank):
        notes.append(
            f"singularity disagreement: coefficient={by_coeff} det={by_det} rank={r}/{F.q - 1}"
        )
    if not F.in_prime_subfield(d):
        notes.append("determinant is not in the prime subfield")
    ok = d == formula and by_coeff == by_det == by_rank and F.in_prime_subfield(d)
    return _report(
        "ThmB", F, status=_status(ok), lhs=F.encode(d), rhs=F.encode(formula),
        witness=k, notes=notes,
    )


def singularity_scan(q_min: int, q_max: int, confirm: bool = False) -> list[VerificationReport]:
    """One entry per valid q in range; lhs is the coefficient criterion, rhs the rank test."""
    out = []
    for q in odd_prime_powers(q_min, q_max):
        F = make_field(q)
        if not theorem_b_applies(F):
            continue
        t0 = time.perf_counter()
        k = singular_witness(F)
        flagged = k is not None
        by_rank = rank(build_S(F)) < q - 1 if confirm else None
        ok = by_rank is None or by_rank == flagged
        rep = _report(
            "SingularScanEntry", F, status=_status(ok), lhs=flagged, rhs=by_rank, witness=k,
        )
        rep.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
        out.append(rep)
    return out


# -- lemmas -----------------------------------------------------------------


@_timed
def lemma_2_1_check(row: Sequence[FieldElem]) -> VerificationReport:
    """det C(t) = (sum t_i)(sum (-1)^i t_i) u^2 for even m and t_i = t_{m-i}."""
    row = list(row)
    m = len(row)
    if m == 0 or m % 2:
        raise ValueError("row length must be positive and even")
    F = row[0].field
    codes = [F(t).code for t in row]
    if any(codes[i] != codes[m - i] for i in range(1, m)):
        raise ValueError("row must satisfy t_i = t_{m-i}")
    A = F.sum(codes)
    B = F.sum(c if i % 2 == 0 else F.neg(c) for i, c in enumerate(codes))
    D = determinant(circulant(row)).code
    AB = F.mul(A, B)
    ok, u = _square_class_check(F, D, AB)
    return _report(
        "Lemma2_1", F, status=_status(ok), lhs=F.encode(D), rhs=[F.encode(A), F.encode(B)],
        witness=u.encode() if u is not None else None,
    )


@_timed
def lemma_2_2_check(F: Field, k_max: int | None = None) -> VerificationReport:
    """Power sums over GF(q)*: -1 when (q-1) | k, else 0, for 0 <= k <= k_max."""
    if k_max is None:
        k_max = 3 * (F.q - 1)
    if k_max < F.q - 1:
        raise ValueError("k_max must be at least q-1")
    observed, expected, notes = [], [], []
    ok = True
    for k in range(k_max + 1):
        s = power_sum(F, k).code
        predicted = F.minus_one if k % (F.q - 1) == 0 else 0
        ok = ok and s == predicted
        if s == F.minus_one:
            observed.append(k)
        if predicted:
            expected.append(k)
        if k % (F.p - 1) == 0 and k % (F.q - 1) != 0:
            notes.append(f"k={k}: divisible by p-1 but not q-1; sum is {F.encode(s)}, not -1")
    return _report(
        "Lemma2_2", F, status=_status(ok), lhs=observed, rhs=expected, notes=notes,
    )


def _ordered_pair_product(F: Field, codes: Sequence[int]) -> int:
    acc = F.one
    for j in range(len(codes)):
        for i in range(j):
            acc = F.mul(acc, F.sub(codes[j], codes[i]))
    return acc


@_timed
def lemma_3_1_check(
    F: Field, coeffs: Sequence, xs: Sequence, ys: Sequence
) -> VerificationReport:
    """det[P(x_i y_j)] = prod p_i * prod_{i<j} (x_j - x_i)(y_j - y_i), deg P < n."""
    n = len(coeffs)
    if n == 0 or len(xs) != n or len(ys) != n:
        raise ValueError("coeffs, xs and ys must have the same positive length")
    c = np.array([F(v).code for v in coeffs], dtype=np.int64)
    x = np.array([F(v).code for v in xs], dtype=np.int64)
    y = np.array([F(v).code for v in ys], dtype=np.int64)
    arg = F.vmul(x[:, None], y[None, :])
    val = np.zeros_like(arg)
    for coef in c[::-1]:
        val = F.vadd(F.vmul(val, arg), coef)
    lhs = determinant(ExactMatrix.from_codes(F, val)).code
    rhs = F.one
    for coef in c:
        rhs = F.mul(rhs, int(coef))
    rhs = F.mul(rhs, _ordered_pair_product(F, [int(v) for v in x]))
    rhs = F.mul(rhs, _ordered_pair_product(F, [int(v) for v in y]))
    return _report("Lemma3_1", F, status=_status(lhs == rhs), lhs=F.encode(lhs), rhs=F.encode(rhs))


@_timed
def lemma_3_1_random_report(
    F: Field, trials: int = 100, n_max: int = 8, seed: int = 0
) -> VerificationReport:
    """Seeded random instances of the product formula; lhs counts agreements."""
    rng = random.Random(seed * 1_000_003 + F.q)
    agree = 0
    notes = []
    for t in range(trials):
        n = rng.randint(1, n_max)
        coeffs = [rng.randrange(F.q) for _ in range(n)]
        xs = [rng.randrange(F.q) for _ in range(n)]
        ys = [rng.randrange(F.q) for _ in range(n)]
        rep = lemma_3_1_check(F, [F.elem(v) for v in coeffs], [F.elem(v) for v in xs], [F.elem(v) for v in ys])
        if rep.passed:
            agree += 1
        else:
            notes.append(f"trial {t}: n={n} coeffs={coeffs} xs={xs} ys={ys}")
    return _report(
        "Lemma3_1", F, status=_status(agree == trials), lhs=agree, rhs=trials, notes=notes, seed=seed,
    )


@_timed
def lemma_3_2_check(F: Field) -> VerificationReport:
    """f(a) = (a^2 + a + 1)^((q+1)/2) for every nonzero a."""
    if not theorem_b_applies(F):
        return _skipped("Lemma3_2", F, f"needs q > 5 and gcd(q, 22) = 1, got q={F.q}")
    coeffs = [c.code for c in f_polynomial(F)]
    a = np.arange(1, F.q, dtype=np.int64)
    f_vals = np.zeros_like(a)
    for c in reversed(coeffs):
        f_vals = F.vadd(F.vmul(f_vals, a), c)
    base = F.vadd(F.vadd(F.vmul(a, a), a), F.one)
    powers = F.vpow(base, half_up(F))
    bad = np.flatnonzero(f_vals != powers)
    return _report(
        "Lemma3_2", F, status=_status(bad.size == 0),
        lhs=[F.encode(int(v)) for v in f_vals], rhs=[F.encode(int(v)) for v in powers],
        witness=F.encode(int(a[bad[0]])) if bad.size else None,
    )


@_timed
def eq_3_2_check(F: Field) -> VerificationReport:
    """prod_{i<j} (a_j - a_i)(1/a_j - 1/a_i) = 1 over the whole enumeration."""
    val = vandermonde_pair_product(enumerate_nonzero(F)).code
    return _report("Eq3_2", F, status=_status(val == F.one), lhs=F.encode(val), rhs=F.encode(F.one))


@_timed
def carlitz_check(p: int) -> VerificationReport:
    """char poly of [((j-i)/p)] against (t^2 - s p)^((p-3)/2) (t^2 - s), s = (-1)^((p-1)/2)."""
    if p > CARLITZ_MAX_P:
        raise ValueError(f"p={p} exceeds the Carlitz bound {CARLITZ_MAX_P}")
    got = char_poly(build_carlitz(p))
    want = carlitz_polynomial(p)
    return _report("Carlitz", make_prime_field(p), status=_status(got == want), lhs=got, rhs=want)

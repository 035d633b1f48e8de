"""The identity catalog: every determinant evaluation, congruence, spectral
claim, and conjectured congruence as an executable check.

A check takes a prime in the right residue class (the two random-instance
suites take only a seed) and returns a CheckResult whose witness carries the
computed quantities, or a re-runnable counterexample when it fails.  The
determinant closed forms are verified twice per prime: the assembled
four-parameter expansion is compared coefficient-by-coefficient against the
closed form (a complete proof of the polynomial identity for that prime,
given the expansion theorem), and seeded integer sample points compare the
direct determinant against the closed form numerically.
"""

from __future__ import annotations

import cmath
import math
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Iterable

from .charmat import MatrixKind, build, special_eigvecs, symbol_vector, theta_vector
from .errors import InternalError
from .exactla import (
    IntMatrix,
    IntPoly,
    adjugate_apply,
    charpoly,
    det,
    mdl_check,
    param_det_expand,
    shifted_matrix,
)
from .ntheory import (
    PrimeInvariants,
    factorial_half_mod,
    half_range_sums,
    is_prime,
    legendre_table,
    prime_invariants,
    primes_in_range,
    quad_char_sum,
)
from .realquad import unit_power_coeffs


class CheckId(Enum):
    T11_CHARPOLY_1MOD4 = "T11_CHARPOLY_1MOD4"
    T11_DET_1MOD4 = "T11_DET_1MOD4"
    T11_DET_3MOD4 = "T11_DET_3MOD4"
    T12_I = "T12_I"
    T12_II = "T12_II"
    COR_AFTER_T12 = "COR_AFTER_T12"
    EQ_38II_QP = "EQ_38II_QP"
    T13_DPMOD4 = "T13_DPMOD4"
    CONJ11_DP = "CONJ11_DP"
    L21_QUADSUM = "L21_QUADSUM"
    L22_GRAM = "L22_GRAM"
    L23_EIGVECS = "L23_EIGVECS"
    L24_EIGSPACE = "L24_EIGSPACE"
    L25_AP_NEG = "L25_AP_NEG"
    L25_EIGS = "L25_EIGS"
    ATHETA = "ATHETA"
    EQ_DP_U1AU0 = "EQ_DP_U1AU0"
    L41_SUMS = "L41_SUMS"
    EQ_DCOUNT = "EQ_DCOUNT"
    T31_RANDOM = "T31_RANDOM"
    MDL_RANDOM = "MDL_RANDOM"
    SUN_C31_I = "SUN_C31_I"
    SUN_C31_II = "SUN_C31_II"
    MORDELL = "MORDELL"


#: Checks of open conjectures: a failure here is a mathematical finding, not
#: an implementation bug, and gets its own exit code in the CLI.
CONJECTURE_IDS = frozenset({CheckId.CONJ11_DP})

#: Checks driven purely by seeded random instances; they ignore the prime.
RANDOM_IDS = frozenset({CheckId.T31_RANDOM, CheckId.MDL_RANDOM})


@dataclass
class CheckResult:
    id: CheckId
    p: int | None
    passed: bool
    witness: dict
    elapsed: float


def _rng(seed: int, name: str, p: int | None = None) -> random.Random:
    tag = f"{seed}|{name}" if p is None else f"{seed}|{name}|{p}"
    return random.Random(tag)


def _sample_tuples(rng: random.Random, count: int = 20) -> list[tuple[int, int, int, int]]:
    return [tuple(rng.randint(-9, 9) for _ in range(4)) for _ in range(count)]


def _sign_pow(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=64)
def _table(p: int):
    return legendre_table(p)


@lru_cache(maxsize=32)
def _invariants(p: int) -> PrimeInvariants:
    return prime_invariants(p)


@lru_cache(maxsize=64)
def _aplus(p: int) -> IntMatrix:
    return build(MatrixKind.aplus(), p)


@lru_cache(maxsize=64)
def _aminus(p: int) -> IntMatrix:
    return build(MatrixKind.aminus(), p)


@lru_cache(maxsize=64)
def _aplus_pd(p: int):
    u1 = symbol_vector(p, _table(p))
    return param_det_expand(_aplus(p), u1, u1, seed=p)


@lru_cache(maxsize=64)
def _sun_pd(p: int, plus: bool):
    kind = MatrixKind.sun_half_plus if plus else MatrixKind.sun_half_minus
    base = build(kind(0, 0, 0, 0), p)
    fg = list(_table(p).vals[: (p - 1) // 2 + 1])
    return param_det_expand(base, fg, fg, seed=p)


# ---------------------------------------------------------------------------
# runners; each returns (passed, witness)
# ---------------------------------------------------------------------------


def _run_t11_charpoly(p: int, seed: int):
    want_plus = IntPoly((-1, 0, 1)) * IntPoly((-p, 0, 1)) ** ((p - 5) // 4)
    want_minus = IntPoly((-p, 0, 1)) ** ((p - 1) // 4)
    got_plus = charpoly(_aplus(p))
    got_minus = charpoly(_aminus(p))
    ok = got_plus == want_plus and got_minus == want_minus
    wit = {"charpoly_aplus": str(got_plus), "charpoly_aminus": str(got_minus)}
    if not ok:
        wit["note"] = f"expected {want_plus} and {want_minus}"
    return ok, wit


def _run_t11_det_1mod4(p: int, seed: int):
    two = _table(p).vals[2]
    want_plus = two * p ** ((p - 5) // 4)
    want_minus = two * p ** ((p - 1) // 4)
    dp_, dm = det(_aplus(p)), det(_aminus(p))
    ok = dp_ == want_plus and dm == want_minus
    wit = {"det_aplus": str(dp_), "det_aminus": str(dm)}
    if not ok:
        wit["note"] = f"expected {want_plus} and {want_minus}"
    return ok, wit


def _run_t11_det_3mod4(p: int, seed: int):
    h = _invariants(p).h_neg
    want = _sign_pow((h - 1) // 2) * p ** ((p - 3) // 4)
    dp_, dm = det(_aplus(p)), det(_aminus(p))
    ok = dp_ == dm == want
    wit = {"det_aplus": str(dp_), "det_aminus": str(dm), "h_neg": h}
    if not ok:
        wit["note"] = f"expected both determinants = {want}"
    return ok, wit


def _run_t12_i(p: int, seed: int):
    n = (p - 1) // 2
    pd = _aplus_pd(p)
    m = (-p) ** ((p - 5) // 4)
    want = (-m, 0, n * m, n * m, 0, -n * n * m)
    coeff_ok = pd.basis_coeffs() == tuple(Fraction(c) for c in want)
    base_ok = (
        pd.alpha1 == pd.alpha == pd.alpha4
        and pd.alpha2 == pd.alpha3 == pd.alpha * (1 - n)
    )
    bad = None
    for x, y, z, w in _sample_tuples(_rng(seed, "T12_I", p)):
        direct = det(build(MatrixKind.axyzw(x, y, z, w), p))
        rhs = m * (n * n * w * x - (n * y - 1) * (n * z - 1))
        if direct != rhs:
            bad = {"point": [x, y, z, w], "direct": str(direct), "closed_form": str(rhs)}
            break
    ok = coeff_ok and base_ok and bad is None
    wit = {"alpha": str(pd.alpha), "coeffs_match": coeff_ok, "base_dets_match": base_ok}
    if bad:
        wit["note"] = f"sample mismatch at {bad['point']}"
        wit["counterexample"] = bad
    elif not ok:
        wit["note"] = "coefficient comparison failed"
    return ok, wit


def _t12_ii_closed_form(p: int, d_det: int, c: int, d_p: int, n: int):
    lead = d_det // p  # p^{(p-3)/4} >= p for every p ≡ 3 (mod 4), p > 3
    tail = n + 2 * (d_p - c * c)

    def rhs(x, y, z, w):
        return d_det * (1 - n * y - c * (w + x) + c * c * (w * x - y * z)) + lead * tail * (
            z + n * (w * x - y * z)
        )

    return rhs


def _run_t12_ii(p: int, seed: int):
    inv = _invariants(p)
    n, c, d_p = inv.n, inv.c_p, inv.d_p
    d_det = _sign_pow((inv.h_neg - 1) // 2) * p ** ((p - 3) // 4)
    e = (d_det // p) * (n + 2 * (d_p - c * c))
    pd = _aplus_pd(p)
    want = (d_det, -c * d_det, -n * d_det, e, -c * d_det, -c * c * d_det - n * e)
    coeff_ok = pd.basis_coeffs() == tuple(Fraction(t) for t in want)
    base_ok = (
        pd.alpha == d_det
        and pd.alpha1 == d_det * (1 - c)
        and pd.alpha2 == d_det * (1 - n)
        and pd.alpha3 == d_det + e
        and pd.alpha4 == d_det * (1 - c)
    )
    rhs = _t12_ii_closed_form(p, d_det, c, d_p, n)
    bad = None
    for x, y, z, w in _sample_tuples(_rng(seed, "T12_II", p)):
        direct = det(build(MatrixKind.axyzw(x, y, z, w), p))
        if direct != rhs(x, y, z, w):
            bad = {"point": [x, y, z, w], "direct": str(direct), "closed_form": str(rhs(x, y, z, w))}
            break
    ok = coeff_ok and base_ok and bad is None
    wit = {
        "det": str(d_det),
        "c_p": c,
        "d_p": d_p,
        "coeffs_match": coeff_ok,
        "base_dets_match": base_ok,
    }
    if bad:
        wit["note"] = f"sample mismatch at {bad['point']}"
        wit["counterexample"] = bad
    elif not ok:
        wit["note"] = "coefficient comparison failed"
    return ok, wit


def _run_cor_after_t12(p: int, seed: int):
    inv = _invariants(p)
    n, c = inv.n, inv.c_p
    d_det = _sign_pow((inv.h_neg - 1) // 2) * p ** ((p - 3) // 4)
    pd = _aplus_pd(p)
    base_ok = (
        pd.alpha == d_det
        and pd.alpha1 == pd.alpha4 == d_det * (1 - c)
        and pd.alpha2 == d_det * (1 - n)
    )
    rng = _rng(seed, "COR_AFTER_T12", p)
    bad = None
    for x, y, _, w in _sample_tuples(rng):
        first = det(build(MatrixKind.axyzw(x, y, 0, 0), p))
        second = det(build(MatrixKind.axyzw(0, y, 0, w), p))
        if first != d_det * (1 - c * x - n * y) or second != d_det * (1 - c * w - n * y):
            bad = {"point": [x, y, w], "first": str(first), "second": str(second)}
            break
    ok = base_ok and bad is None
    wit = {"det": str(d_det), "base_dets_match": base_ok}
    if bad:
        wit["note"] = f"sample mismatch at {bad['point']}"
        wit["counterexample"] = bad
    elif not ok:
        wit["note"] = "base determinant relations failed"
    return ok, wit


def _run_eq_38ii_qp(p: int, seed: int):
    inv = _invariants(p)
    n, c, q = inv.n, inv.c_p, inv.q_p
    two = _table(p).vals[2]
    d_det = _sign_pow((inv.h_neg - 1) // 2) * p ** ((p - 3) // 4)
    pd = _aplus_pd(p)
    # restriction of the expansion to z = 0, in the basis {1, x, y, w, wx}
    got = (
        Fraction(pd.alpha),
        Fraction(pd.alpha1 - pd.alpha),
        Fraction(pd.alpha2 - pd.alpha),
        Fraction(pd.alpha4 - pd.alpha),
        -pd.cross,
    )
    want = (
        Fraction(d_det),
        Fraction(-c * d_det),
        Fraction(-n * d_det),
        Fraction(-c * d_det),
        Fraction(d_det) * two * 16 * q / p,
    )
    coeff_ok = got == want

    def rhs(x, y, w):
        return -d_det * (n * y - 1 + c * (w + x)) + Fraction(d_det) * two * 16 * q / p * w * x

    sample_ok = all(
        pd.evaluate(x, y, 0, w) == rhs(x, y, w)
        for x, y, _, w in _sample_tuples(_rng(seed, "EQ_38II_QP", p))
    )
    ok = coeff_ok and sample_ok
    wit = {
        "q_p": f"{q.numerator}/{q.denominator}",
        "q_p_integral": q.denominator == 1,
        "coeffs_match": coeff_ok,
    }
    if not q.denominator == 1:
        wit["note"] = f"finding: q_p = {q} is not an integer"
    if not ok:
        wit["note"] = "closed form with q_p does not match the expansion"
    return ok, wit


def _run_t13(p: int, seed: int):
    inv = _invariants(p)
    ok = (inv.d_p + inv.n) % 4 == 0
    wit = {"d_p": inv.d_p, "n": inv.n}
    if not ok:
        wit["note"] = f"d_p = {inv.d_p} is not ≡ -{inv.n} (mod 4)"
    return ok, wit


def _run_conj11(p: int, seed: int):
    inv = _invariants(p)
    d_p = inv.d_p
    if p % 8 == 1:
        want, mod = 4 * (1 - _sign_pow((p - 1) // 8)), 16
    elif p % 8 == 5:
        want, mod = -2, 16
    else:
        want, mod = _sign_pow((inv.h_neg - 1) // 2) * inv.c_p, 8
    ok = (d_p - want) % mod == 0
    wit = {"d_p": d_p, "residue": d_p % mod, "expected": want % mod, "modulus": mod}
    if not ok:
        wit["note"] = f"counterexample: d_{p} = {d_p} ≢ {want} (mod {mod})"
    return ok, wit


def _run_l21(p: int, seed: int):
    rng = _rng(seed, "L21_QUADSUM", p)
    inv4 = pow(4, -1, p)
    cases = []
    for _ in range(10):  # force the p | b^2 - 4c branch
        b = rng.randint(-2 * p, 2 * p)
        cases.append((b, b * b * inv4 % p + p * rng.randint(-2, 2)))
    cases += [(rng.randint(-2 * p, 2 * p), rng.randint(-2 * p, 2 * p)) for _ in range(190)]
    for b, c in cases:
        got = quad_char_sum(b, c, p)
        want = p - 1 if (b * b - 4 * c) % p == 0 else -1
        if got != want:
            return False, {"note": f"sum {got} != {want} at (b={b}, c={c})"}
    return True, {"samples": len(cases)}


def _run_l22(p: int, seed: int):
    v = _table(p).vals
    n = (p - 1) // 2
    sgn = 1 if p % 4 == 1 else -1
    ap, am = _aplus(p), _aminus(p)
    want_plus = IntMatrix(
        [
            [(p if j == k else 0) - 2 - (1 + sgn) * v[j * k % p] for k in range(1, n + 1)]
            for j in range(1, n + 1)
        ]
    )
    want_minus = IntMatrix(
        [
            [(p if j == k else 0) - (1 - sgn) * v[j * k % p] for k in range(1, n + 1)]
            for j in range(1, n + 1)
        ]
    )
    ok_plus = ap.transpose() @ ap == want_plus
    ok_minus = am.transpose() @ am == want_minus
    ok = ok_plus and ok_minus
    wit = {"gram_plus": ok_plus, "gram_minus": ok_minus}
    if not ok:
        wit["note"] = "Gram identity failed"
    return ok, wit


def _run_l23(p: int, seed: int):
    v1, v2 = special_eigvecs(p)
    ap = _aplus(p)
    ok = (
        any(v1)
        and any(v2)
        and ap.matvec(v1) == v1
        and ap.matvec(v2) == [-t for t in v2]
    )
    wit = {"v1_fixed": ap.matvec(v1) == v1, "v2_negated": ap.matvec(v2) == [-t for t in v2]}
    if not ok:
        wit["note"] = "eigenvector relations failed"
    return ok, wit


def _run_l24(p: int, seed: int):
    v = _table(p).vals
    n = (p - 1) // 2
    sq = _aplus(p) @ _aplus(p)
    for want_sym in (1, -1):
        group = [j for j in range(1, n + 1) if v[j] == want_sym]
        j0 = group[0]
        for ji in group[1:]:
            for r in range(n):
                want = p * ((1 if r == ji - 1 else 0) - (1 if r == j0 - 1 else 0))
                if sq.rows[r][ji - 1] - sq.rows[r][j0 - 1] != want:
                    return False, {
                        "note": f"A+^2 eigen relation failed at indices ({j0}, {ji}), row {r + 1}"
                    }
    return True, {"eigenspace_dim": n - 2}


def _run_l25_ap_neg(p: int, seed: int):
    d = det(build(MatrixKind.ap(), p))
    ok = d < 0
    wit = {"det_ap": str(d)}
    if not ok:
        wit["note"] = f"det = {d} is not negative"
    return ok, wit


def _prime_divisors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int) -> int:
    qs = _prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise InternalError(f"no primitive root mod {p}")


_EIG_PRODUCT_CAP = 60
_EIG_PRODUCT_RTOL = 1e-6


def _run_l25_eigs(p: int, seed: int):
    v = _table(p).vals
    n = (p - 1) // 2
    lam_n = sum(v[(k + 1) % p] for k in range(1, p))  # the one real eigenvalue
    d = det(build(MatrixKind.ap(), p))
    ok_n = lam_n == -1
    ok_sign = d < 0
    wit = {"lambda_n": lam_n, "det_ap": str(d), "product_checked": p <= _EIG_PRODUCT_CAP}
    ok_prod = True
    if p <= _EIG_PRODUCT_CAP:
        g = _primitive_root(p)
        ind = [0] * p
        acc = 1
        for e in range(p - 1):
            ind[acc] = e
            acc = acc * g % p
        tau = 2.0 * math.pi / (p - 1)
        prod = complex(1.0)
        for r in range(1, n + 1):
            lam = sum(
                v[(k + 1) % p] * cmath.exp(1j * tau * (2 * ind[k] * r % (p - 1)))
                for k in range(1, p)
            )
            prod *= lam
        rel = abs(prod - d) / abs(d)
        ok_prod = rel < _EIG_PRODUCT_RTOL
        wit["product_relative_error"] = rel
        wit["primitive_root"] = g
    ok = ok_n and ok_sign and ok_prod
    if not ok:
        wit["note"] = "eigenvalue claims failed"
    return ok, wit


def _run_atheta(p: int, seed: int):
    th = theta_vector(p)
    n = (p - 1) // 2
    got = _aplus(p).matvec(th)
    ok = got == [p] * n
    wit = {"theta_integral": True}
    if not ok:
        wit["note"] = f"A+ theta = {got} instead of {p} * ones"
    return ok, wit


def _run_eq_dp_u1au0(p: int, seed: int):
    inv = _invariants(p)
    n = inv.n
    u1 = symbol_vector(p, _table(p))
    w, d = adjugate_apply(_aplus(p), [1] * n)
    lhs = p * sum(s * wi for s, wi in zip(u1, w))
    rhs = d * (n + 2 * (inv.d_p - inv.c_p**2))
    ok = lhs == rhs
    wit = {"lhs": str(lhs), "rhs": str(rhs)}
    if not ok:
        wit["note"] = "division-free inner product identity failed"
    return ok, wit


def _run_l41(p: int, seed: int):
    s1, s2, sjk = half_range_sums(p)
    want = 2 * s2 if p % 4 == 1 else -s1
    ok = sjk == want
    wit = {"S1": s1, "S2": s2, "SJK": sjk}
    if p % 4 == 1:
        ok = ok and s1 == 0
    if not ok:
        wit["note"] = f"double sum {sjk} != {want}"
    return ok, wit


def _run_eq_dcount(p: int, seed: int):
    inv = _invariants(p)
    v = _table(p).vals
    n = inv.n
    s1 = inv.sum_half
    s2 = sum(k * v[k] for k in range(1, n + 1))
    tail = -2 * s2 if p % 4 == 1 else s1
    want = 4 * inv.N - n * n - n * s1 + tail
    ok = inv.d_p == want
    wit = {"N": inv.N, "d_p": inv.d_p}
    if not ok:
        wit["note"] = f"counting identity gives {want}, d_p = {inv.d_p}"
    return ok, wit


def _random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def _t31_instances(rng: random.Random, count: int):
    for i in range(count):
        n = rng.randint(1, 6)
        while True:
            a = _random_int_matrix(rng, n)
            if det(a) != 0:
                break
        f = [rng.randint(-9, 9) for _ in range(n)]
        g = [rng.randint(-9, 9) for _ in range(n)]
        pd = param_det_expand(a, f, g, seed=i, samples=0)
        for _ in range(20):
            x, y, z, w = (rng.randint(-9, 9) for _ in range(4))
            direct = det(shifted_matrix(a, f, g, x, y, z, w))
            if pd.evaluate(x, y, z, w) != direct:
                return False, {
                    "note": f"expansion mismatch at instance {i}, point {(x, y, z, w)}",
                    "matrix": a.to_lists(),
                    "f": f,
                    "g": g,
                }
    return True, {"instances": count}


def _mdl_instances(rng: random.Random, count: int):
    for i in range(count):
        n = rng.randint(1, 6)
        m = rng.randint(1, 4)
        while True:
            a = _random_int_matrix(rng, n)
            if det(a) != 0:
                break
        u = IntMatrix([[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])
        v = IntMatrix([[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])
        if not mdl_check(a, u, v):
            return False, {
                "note": f"matrix-determinant lemma failed at instance {i}",
                "matrix": a.to_lists(),
                "u": u.to_lists(),
                "v": v.to_lists(),
            }
    return True, {"instances": count}


_DEFAULT_RANDOM_INSTANCES = 200


def t31_random_suite(count: int = 1000, seed: int = 0) -> CheckResult:
    """Seeded random-instance suite for the four-parameter expansion."""
    start = time.perf_counter()
    ok, wit = _t31_instances(_rng(seed, "T31_RANDOM"), count)
    return CheckResult(CheckId.T31_RANDOM, None, ok, wit, time.perf_counter() - start)


def mdl_random_suite(count: int = 1000, seed: int = 0) -> CheckResult:
    """Seeded random-instance suite for |A + U V^T| = |I + V^T A^{-1} U| |A|."""
    start = time.perf_counter()
    ok, wit = _mdl_instances(_rng(seed, "MDL_RANDOM"), count)
    return CheckResult(CheckId.MDL_RANDOM, None, ok, wit, time.perf_counter() - start)


def _run_t31_random(p: int | None, seed: int):
    return _t31_instances(_rng(seed, "T31_RANDOM"), _DEFAULT_RANDOM_INSTANCES)


def _run_mdl_random(p: int | None, seed: int):
    return _mdl_instances(_rng(seed, "MDL_RANDOM"), _DEFAULT_RANDOM_INSTANCES)


def _run_sun(p: int, seed: int, plus: bool):
    name = "SUN_C31_I" if plus else "SUN_C31_II"
    n = (p - 1) // 2
    t = _table(p)
    pd = _sun_pd(p, plus)
    if p % 4 == 1:
        a, b, a2, b2 = unit_power_coeffs(p)
        two = t.vals[2]
        if plus:
            k = Fraction(two * 2**n)
            want = (-a * k, p * b * k, -a * k, -a * k, Fraction(0), -a * k)

            def rhs(x, y, z, w):
                return k * (p * b * x + a * (w * x - (y + 1) * (z + 1)))

        else:
            want = (-a2, two * p * b2, -a2, -a2, Fraction(0), -a2)

            def rhs(x, y, z, w):
                return a2 * (w * x - (y + 1) * (z + 1)) + two * p * b2 * x

    else:
        if plus:
            k = 2**n
            want = tuple(Fraction(c) for c in (k, 0, k, k, 0, k))

            def rhs(x, y, z, w):
                return k * ((y + 1) * (z + 1) - w * x)

        else:
            want = tuple(Fraction(c) for c in (1, 0, 1, -1, 0, -1))

            def rhs(x, y, z, w):
                return w * x + (1 + y) * (1 - z)

    coeff_ok = pd.basis_coeffs() == tuple(want)
    kind = MatrixKind.sun_half_plus if plus else MatrixKind.sun_half_minus
    bad = None
    for x, y, z, w in _sample_tuples(_rng(seed, name, p)):
        direct = det(build(kind(x, y, z, w), p))
        if Fraction(direct) != rhs(x, y, z, w):
            bad = {"point": [x, y, z, w], "direct": str(direct), "closed_form": str(rhs(x, y, z, w))}
            break
    ok = coeff_ok and bad is None
    wit = {"alpha": str(pd.alpha), "coeffs_match": coeff_ok}
    if bad:
        wit["note"] = f"sample mismatch at {bad['point']}"
        wit["counterexample"] = bad
    elif not ok:
        wit["note"] = "coefficient comparison failed"
    return ok, wit


def _run_mordell(p: int, seed: int):
    v = _table(p).vals
    n = (p - 1) // 2
    s = sum(v[1 : n + 1])
    denom = 2 - v[2]
    if s % denom != 0:
        return False, {"note": f"character sum {s} not divisible by {denom}"}
    h = s // denom
    fact = factorial_half_mod(p)
    want = 1 if (h + 1) // 2 % 2 == 0 else p - 1
    ok = fact == want
    wit = {"h_neg": h, "factorial_mod_p": fact}
    if not ok:
        wit["note"] = f"((p-1)/2)! ≡ {fact}, expected {want} (mod {p})"
    return ok, wit


# ---------------------------------------------------------------------------
# registry, check, scan
# ---------------------------------------------------------------------------

_ANY = ("any odd prime", lambda p: True)
_1MOD4 = ("p ≡ 1 (mod 4)", lambda p: p % 4 == 1)
_3MOD4 = ("p ≡ 3 (mod 4)", lambda p: p % 4 == 3)
_3MOD4_GT3 = ("p ≡ 3 (mod 4) with p > 3", lambda p: p % 4 == 3 and p > 3)
_GT3 = ("p > 3", lambda p: p > 3)


@dataclass(frozen=True)
class _Spec:
    requirement: str
    applies: Callable[[int], bool]
    runner: Callable[[int, int], tuple[bool, dict]]
    describes: str


_REGISTRY: dict[CheckId, _Spec] = {
    CheckId.T11_CHARPOLY_1MOD4: _Spec(
        *_1MOD4, _run_t11_charpoly,
        "charpoly(A+) = (x^2-1)(x^2-p)^((p-5)/4), charpoly(A-) = (x^2-p)^((p-1)/4)",
    ),
    CheckId.T11_DET_1MOD4: _Spec(
        *_1MOD4, _run_t11_det_1mod4,
        "|A+| = (2/p) p^((p-5)/4) and |A-| = (2/p) p^((p-1)/4)",
    ),
    CheckId.T11_DET_3MOD4: _Spec(
        *_3MOD4_GT3, _run_t11_det_3mod4,
        "|A+| = |A-| = (-1)^((h(-p)-1)/2) p^((p-3)/4)",
    ),
    CheckId.T12_I: _Spec(
        *_1MOD4, _run_t12_i,
        "4-parameter determinant = (-p)^((p-5)/4) (n^2 wx - (ny-1)(nz-1))",
    ),
    CheckId.T12_II: _Spec(
        *_3MOD4_GT3, _run_t12_ii,
        "4-parameter determinant closed form in c_p and d_p",
    ),
    CheckId.COR_AFTER_T12: _Spec(
        *_3MOD4_GT3, _run_cor_after_t12,
        "two-parameter restrictions (1 - c_p x - n y) and (1 - c_p w - n y)",
    ),
    CheckId.EQ_38II_QP: _Spec(
        *_3MOD4_GT3, _run_eq_38ii_qp,
        "z=0 restriction matches the q_p form, q_p = (2/p)(c_p^2-d_p^2+(d_p+n)^2)/16",
    ),
    CheckId.T13_DPMOD4: _Spec(*_ANY, _run_t13, "d_p ≡ -(p-1)/2 (mod 4)"),
    CheckId.CONJ11_DP: _Spec(
        *_GT3, _run_conj11,
        "conjectured congruence for d_p mod 16 (p ≡ 1 mod 4) / mod 8 (p ≡ 3 mod 4)",
    ),
    CheckId.L21_QUADSUM: _Spec(
        *_ANY, _run_l21,
        "sum ((x^2+bx+c)/p) over x = p-1 if p | b^2-4c else -1",
    ),
    CheckId.L22_GRAM: _Spec(
        *_ANY, _run_l22, "Gram identities for A+^T A+ and A-^T A-"
    ),
    CheckId.L23_EIGVECS: _Spec(
        *_1MOD4, _run_l23, "A+ v1 = v1 and A+ v2 = -v2 for the shifted symbol vectors"
    ),
    CheckId.L24_EIGSPACE: _Spec(
        *_1MOD4, _run_l24,
        "A+^2 fixes e_{s_i} - e_{s_0} differences up to the factor p (dim >= n-2)",
    ),
    CheckId.L25_AP_NEG: _Spec(*_3MOD4, _run_l25_ap_neg, "|A_p| < 0"),
    CheckId.L25_EIGS: _Spec(
        *_3MOD4, _run_l25_eigs,
        "character-sum eigenvalues: lambda_n = -1 and their product matches |A_p|",
    ),
    CheckId.ATHETA: _Spec(*_3MOD4, _run_atheta, "A+ theta = p * (1, ..., 1)^T"),
    CheckId.EQ_DP_U1AU0: _Spec(
        *_3MOD4, _run_eq_dp_u1au0,
        "p u1^T adj(A+) u0 = det(A+) (n + 2(d_p - c_p^2))",
    ),
    CheckId.L41_SUMS: _Spec(
        *_ANY, _run_l41,
        "sum_{j,k<=n} ((j+k)/p) = 2 sum k(k/p) or -sum (k/p) by residue class",
    ),
    CheckId.EQ_DCOUNT: _Spec(
        *_ANY, _run_eq_dcount,
        "d_p = 4N - n^2 - n S1 + (residue-class correction)",
    ),
    CheckId.T31_RANDOM: _Spec(
        "any input (seeded random instances)", lambda p: True, _run_t31_random,
        "four-parameter expansion on random integer matrices",
    ),
    CheckId.MDL_RANDOM: _Spec(
        "any input (seeded random instances)", lambda p: True, _run_mdl_random,
        "matrix-determinant lemma on random integer matrices",
    ),
    CheckId.SUN_C31_I: _Spec(
        *_GT3, lambda p, s: _run_sun(p, s, True),
        "(n+1)-square shifted matrix with ((j+k)/p): unit-coefficient closed form",
    ),
    CheckId.SUN_C31_II: _Spec(
        *_ANY, lambda p, s: _run_sun(p, s, False),
        "(n+1)-square shifted matrix with ((j-k)/p): unit-coefficient closed form",
    ),
    CheckId.MORDELL: _Spec(
        *_3MOD4_GT3, _run_mordell, "((p-1)/2)! ≡ (-1)^((h(-p)+1)/2) (mod p)"
    ),
}


def describe(check_id: CheckId) -> str:
    return _REGISTRY[check_id].describes


def requirement(check_id: CheckId) -> str:
    return _REGISTRY[check_id].requirement


def applicable(check_id: CheckId, p: int) -> bool:
    return check_id in RANDOM_IDS or _REGISTRY[check_id].applies(p)


def check(check_id: CheckId | str, p: int | None = None, seed: int = 0) -> CheckResult:
    """Run one catalog check.  Raises ValueError when p is missing, not an
    odd prime, or in the wrong residue class for the statement."""
    if isinstance(check_id, str):
        try:
            check_id = CheckId[check_id]
        except KeyError:
            raise ValueError(f"unknown check id {check_id!r}") from None
    spec = _REGISTRY[check_id]
    start = time.perf_counter()
    if check_id in RANDOM_IDS:
        ok, wit = spec.runner(p, seed)
        return CheckResult(check_id, None, ok, wit, time.perf_counter() - start)
    if p is None:
        raise ValueError(f"check {check_id.name} needs a prime")
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if not spec.applies(p):
        raise ValueError(f"check {check_id.name} requires {spec.requirement}, got p = {p}")
    ok, wit = spec.runner(p, seed)
    return CheckResult(check_id, p, ok, wit, time.perf_counter() - start)


def exit_code_for(failed_ids: Iterable[CheckId | str]) -> int:
    """0 = all passed, 4 = only conjecture findings, 1 = a proved statement
    failed (implementation bug)."""
    names = {i if isinstance(i, str) else i.name for i in failed_ids}
    if not names:
        return 0
    if names <= {i.name for i in CONJECTURE_IDS}:
        return 4
    return 1


# ---------------------------------------------------------------------------
# range scanning
# ---------------------------------------------------------------------------


@dataclass
class ScanRecord:
    """Everything recorded for one prime: its invariants plus the outcome of
    every applicable requested check (skipped checks are simply absent)."""

    p: int
    invariants: PrimeInvariants
    checks: dict[str, dict]


@dataclass
class ScanSummary:
    primes: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)


def _scan_one(p: int, ids: tuple[str, ...], seed: int) -> ScanRecord:
    inv = _invariants(p)  # shared with the per-check cache in this process
    checks: dict[str, dict] = {}
    for name in ids:
        cid = CheckId[name]
        if not applicable(cid, p):
            continue
        res = check(cid, p, seed)
        entry: dict = {"passed": res.passed}
        note = res.witness.get("note")
        if note:
            entry["note"] = note
        checks[name] = entry
    return ScanRecord(p, inv, checks)


def scan(
    ids: Iterable[CheckId | str],
    p_from: int,
    p_to: int,
    sink: Callable[[ScanRecord], None],
    *,
    seed: int = 0,
    jobs: int | None = 1,
    skip: set[int] | None = None,
) -> ScanSummary:
    """Run the requested checks over every prime in [p_from, p_to].

    Records are delivered to `sink` in ascending order of p, one per prime,
    regardless of `jobs`; a record lists only the checks applicable to its
    prime.  Primes in `skip` (already present in a resumed output) are not
    recomputed.  Because delivery is ordered and incremental, an aborted scan
    leaves a valid prefix that a later resume can extend.
    """
    if not 3 <= p_from <= p_to:
        raise ValueError(f"need 3 <= from <= to, got [{p_from}, {p_to}]")
    names = tuple(
        sorted({i.name if isinstance(i, CheckId) else str(i) for i in ids})
    )
    for name in names:
        if name not in CheckId.__members__:
            raise ValueError(f"unknown check id {name!r}")
    ps = primes_in_range(max(3, p_from), p_to)
    if skip:
        ps = [q for q in ps if q not in skip]
    if jobs is None:
        jobs = os.cpu_count() or 1
    summary = ScanSummary()

    def emit(rec: ScanRecord) -> None:
        summary.primes += 1
        for name in names:
            entry = rec.checks.get(name)
            if entry is None:
                summary.skipped += 1
            elif entry["passed"]:
                summary.passed += 1
            else:
                summary.failed += 1
                summary.failures.append((rec.p, name))
        sink(rec)

    worker = partial(_scan_one, ids=names, seed=seed)
    if jobs > 1 and len(ps) > 1:
        methods = multiprocessing.get_all_start_methods()
        ctx = multiprocessing.get_context("fork" if "fork" in methods else None)
        chunk = max(1, len(ps) // (jobs * 8))
        with ctx.Pool(jobs) as pool:
            for rec in pool.imap(worker, ps, chunksize=chunk):
                emit(rec)
    else:
        for q in ps:
            emit(worker(q))
    return summary

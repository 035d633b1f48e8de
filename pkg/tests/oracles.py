"""Brute-force reference implementations used only by the tests.

Each function here is an independent route to a quantity the library
computes a faster or structurally different way; none of them share code
with the package.
"""

import math


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def euler_legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def dp_double_sum(p: int) -> int:
    """d_p as the literal O(p^2) double sum of ((j^2 + jk)/p)."""
    n = (p - 1) // 2
    return sum(
        euler_legendre(j * j + j * k, p)
        for j in range(1, n + 1)
        for k in range(1, n + 1)
    )


def h_neg_by_forms(p: int) -> int:
    """Class number of discriminant -p (p ≡ 3 mod 4) by counting reduced
    positive-definite forms: |b| <= a <= c, b >= 0 when |b| = a or a = c."""
    count = 0
    a = 1
    while 3 * a * a <= p:
        for b in range(-a, a + 1):
            num = b * b + p
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            count += 1
        a += 1
    return count


def det_cofactor(rows) -> int:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def pell_minimal_pm4(p: int, cap: int = 1_000_000):
    """Smallest (x, y), y >= 1, with x^2 - p y^2 = ±4, or None below cap.
    For a fixed y the -4 branch gives the smaller element, so it is tried
    first; increasing y increases (x + y sqrt(p))/2."""
    for y in range(1, cap + 1):
        for delta in (-4, 4):
            t = p * y * y + delta
            if t >= 0:
                x = math.isqrt(t)
                if x * x == t:
                    return x, y
    return None

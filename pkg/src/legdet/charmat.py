"""Builders for the Legendre-symbol matrices and the special vectors tied to
them.  All entries come from one shared symbol table, so construction is
O(size) after the O(p) table build.

With n = (p-1)/2 and (a/p) the Legendre symbol:

  APlus        [((j+k)/p) + ((j-k)/p)]               1 <= j,k <= n
  AMinus       [((j+k)/p) - ((j-k)/p)]               1 <= j,k <= n
  AXYZW        [x + ((j+k)/p) + ((j-k)/p)
                  + (j/p) y + (k/p) z + (jk/p) w]    1 <= j,k <= n
  AP           [((j^2+jk)/p) + ((j^2-jk)/p)]         1 <= j,k <= n
  SunHalfPlus  [x + ((j+k)/p) + (j/p) y + (k/p) z
                  + (jk/p) w]                        0 <= j,k <= n
  SunHalfMinus same with ((j-k)/p) in place of ((j+k)/p)
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import IntMatrix
from .ntheory import LegendreTable, legendre_table

APLUS = "APlus"
AMINUS = "AMinus"
AXYZW = "AXYZW"
AP = "AP"
SUN_HALF_PLUS = "SunHalfPlus"
SUN_HALF_MINUS = "SunHalfMinus"

_PARAMETRIC = frozenset({AXYZW, SUN_HALF_PLUS, SUN_HALF_MINUS})
_TAGS = frozenset({APLUS, AMINUS, AP}) | _PARAMETRIC


@dataclass(frozen=True)
class MatrixKind:
    """A matrix family tag plus, for the parametric kinds, the integer shift
    parameters (x, y, z, w)."""

    tag: str
    params: tuple[int, int, int, int] | None = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown matrix kind {self.tag!r}")
        if (self.params is not None) != (self.tag in _PARAMETRIC):
            raise ValueError(f"kind {self.tag} and params {self.params} do not match")

    @classmethod
    def aplus(cls) -> "MatrixKind":
        return cls(APLUS)

    @classmethod
    def aminus(cls) -> "MatrixKind":
        return cls(AMINUS)

    @classmethod
    def ap(cls) -> "MatrixKind":
        return cls(AP)

    @classmethod
    def axyzw(cls, x: int, y: int, z: int, w: int) -> "MatrixKind":
        return cls(AXYZW, (x, y, z, w))

    @classmethod
    def sun_half_plus(cls, x: int, y: int, z: int, w: int) -> "MatrixKind":
        return cls(SUN_HALF_PLUS, (x, y, z, w))

    @classmethod
    def sun_half_minus(cls, x: int, y: int, z: int, w: int) -> "MatrixKind":
        return cls(SUN_HALF_MINUS, (x, y, z, w))


def build(kind: MatrixKind, p: int) -> IntMatrix:
    """Construct the requested symbol matrix for the odd prime p."""
    t = legendre_table(p)
    v = t.vals
    n = (p - 1) // 2
    if kind.tag == APLUS:
        return IntMatrix(
            [[v[j + k] + v[(j - k) % p] for k in range(1, n + 1)] for j in range(1, n + 1)]
        )
    if kind.tag == AMINUS:
        return IntMatrix(
            [[v[j + k] - v[(j - k) % p] for k in range(1, n + 1)] for j in range(1, n + 1)]
        )
    if kind.tag == AP:
        return IntMatrix(
            [
                [v[(j * j + j * k) % p] + v[(j * j - j * k) % p] for k in range(1, n + 1)]
                for j in range(1, n + 1)
            ]
        )
    x, y, z, w = kind.params
    if kind.tag == AXYZW:
        return IntMatrix(
            [
                [
                    x + v[j + k] + v[(j - k) % p] + v[j] * y + v[k] * z + v[j * k % p] * w
                    for k in range(1, n + 1)
                ]
                for j in range(1, n + 1)
            ]
        )
    if kind.tag == SUN_HALF_PLUS:
        sym = lambda j, k: v[j + k]
    else:
        sym = lambda j, k: v[(j - k) % p]
    # row/column 0 is computed from the same table: (0/p) = 0 wipes the
    # y, z, w contributions there with no special-casing
    return IntMatrix(
        [
            [
                x + sym(j, k) + v[j] * y + v[k] * z + v[j * k % p] * w
                for k in range(n + 1)
            ]
            for j in range(n + 1)
        ]
    )


def symbol_vector(p: int, table: LegendreTable | None = None) -> list[int]:
    """[(1/p), (2/p), ..., (n/p)] with n = (p-1)/2."""
    t = table or legendre_table(p)
    return list(t.vals[1 : (p - 1) // 2 + 1])


def theta_vector(p: int) -> list[int]:
    """The integer vector theta with APlus(p) @ theta = p * (1, ..., 1)^T,
    defined for primes p ≡ 3 (mod 4) by

        theta_i = sum_{k=1}^{n} (((i+k)/p) - ((i-k)/p) - 2 (k/p)).
    """
    if p % 4 != 3:
        raise ValueError(f"theta vector requires p ≡ 3 (mod 4), got {p}")
    t = legendre_table(p)
    v = t.vals
    n = (p - 1) // 2
    s1 = sum(v[k] for k in range(1, n + 1))
    return [
        sum(v[i + k] - v[(i - k) % p] for k in range(1, n + 1)) - 2 * s1
        for i in range(1, n + 1)
    ]


def special_eigvecs(p: int) -> tuple[list[int], list[int]]:
    """For p ≡ 1 (mod 4): the fixed vectors v1 = ((j/p) - 1)_j and
    v2 = ((j/p) + 1)_j with APlus v1 = v1 and APlus v2 = -v2.  Both are
    nonzero because residues and nonresidues each fill half of 1..n."""
    if p % 4 != 1:
        raise ValueError(f"eigenvector pair requires p ≡ 1 (mod 4), got {p}")
    t = legendre_table(p)
    n = (p - 1) // 2
    half = t.vals[1 : n + 1]
    if sum(1 for s in half if s == 1) != n // 2:
        raise AssertionError("residues do not fill half of 1..n")
    v1 = [s - 1 for s in half]
    v2 = [s + 1 for s in half]
    return v1, v2

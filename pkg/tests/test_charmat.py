import pytest

from legdet.charmat import (
    MatrixKind,
    build,
    special_eigvecs,
    symbol_vector,
    theta_vector,
)
from legdet.ntheory import legendre_table, primes_in_range


def test_aplus_aminus_frozen_p5():
    assert build(MatrixKind.aplus(), 5).to_lists() == [[-1, 0], [0, 1]]
    assert build(MatrixKind.aminus(), 5).to_lists() == [[-1, -2], [-2, 1]]


def test_axyzw_zero_params_equals_aplus():
    for p in primes_in_range(3, 50):
        assert build(MatrixKind.axyzw(0, 0, 0, 0), p) == build(MatrixKind.aplus(), p)


def test_axyzw_entry_formula():
    p = 11
    t = legendre_table(p).vals
    m = build(MatrixKind.axyzw(2, 3, -1, 5), p)
    for j in range(1, 6):
        for k in range(1, 6):
            want = 2 + t[j + k] + t[(j - k) % p] + 3 * t[j] - t[k] + 5 * t[j * k % p]
            assert m.rows[j - 1][k - 1] == want


@pytest.mark.parametrize("p", primes_in_range(3, 200))
def test_symmetry_by_residue_class(p):
    ap = build(MatrixKind.aplus(), p)
    am = build(MatrixKind.aminus(), p)
    if p % 4 == 1:
        assert ap.transpose() == ap
        assert am.transpose() == am
    else:
        assert ap.transpose() == am


@pytest.mark.parametrize("p", primes_in_range(3, 100))
def test_entry_bounds_and_diagonal(p):
    t = legendre_table(p).vals
    for kind in (MatrixKind.aplus(), MatrixKind.aminus()):
        m = build(kind, p)
        assert all(e in (-2, -1, 0, 1, 2) for row in m.rows for e in row)
    ap = build(MatrixKind.aplus(), p)
    for j in range(1, (p - 1) // 2 + 1):
        assert ap.rows[j - 1][j - 1] == t[2 * j % p]


def test_ap_matrix_p7():
    # entries ((j^2+jk)/p) + ((j^2-jk)/p) = (j/p) * aplus entry, row-wise
    p = 7
    t = legendre_table(p).vals
    ap = build(MatrixKind.ap(), p)
    plus = build(MatrixKind.aplus(), p)
    for j in range(1, 4):
        for k in range(1, 4):
            assert ap.rows[j - 1][k - 1] == t[j] * plus.rows[j - 1][k - 1]


def test_sun_half_shapes_and_row0():
    p = 13
    n = (p - 1) // 2
    m = build(MatrixKind.sun_half_plus(4, 1, 2, 3), p)
    assert m.nrows == m.ncols == n + 1
    t = legendre_table(p).vals
    # in row 0 the (j/p) y and (jk/p) w terms vanish since (0/p) = 0
    for k in range(n + 1):
        assert m.rows[0][k] == 4 + t[k] + 2 * t[k]
    mm = build(MatrixKind.sun_half_minus(0, 0, 0, 0), p)
    for j in range(n + 1):
        for k in range(n + 1):
            assert mm.rows[j][k] == t[(j - k) % p]


def test_theta_vector_product():
    for p in (3, 7, 11, 19, 23):
        th = theta_vector(p)
        assert all(isinstance(c, int) for c in th)
        got = build(MatrixKind.aplus(), p).matvec(th)
        assert got == [p] * ((p - 1) // 2)


def test_theta_vector_rejects_1mod4():
    with pytest.raises(ValueError):
        theta_vector(13)


def test_special_eigvecs_frozen_p5():
    v1, v2 = special_eigvecs(5)
    assert v1 == [0, -2]
    assert v2 == [2, 0]


def test_special_eigvec_relations_p13():
    v1, v2 = special_eigvecs(13)
    ap = build(MatrixKind.aplus(), 13)
    assert ap.matvec(v1) == v1
    assert ap.matvec(v2) == [-t for t in v2]


def test_special_eigvecs_rejects_3mod4():
    with pytest.raises(ValueError):
        special_eigvecs(7)


def test_symbol_vector():
    assert symbol_vector(5) == [1, -1]
    assert symbol_vector(7) == [1, 1, -1]


def test_matrix_kind_validation():
    with pytest.raises(ValueError):
        MatrixKind("NoSuch")
    with pytest.raises(ValueError):
        MatrixKind("APlus", (1, 2, 3, 4))
    with pytest.raises(ValueError):
        MatrixKind("AXYZW")
    with pytest.raises(ValueError):
        build(MatrixKind.aplus(), 9)

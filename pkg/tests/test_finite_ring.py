import pytest

from padic_fixvec.budget import BudgetExceededError
from padic_fixvec.finite_ring import (
    LocalFieldParams,
    MatrixModPM,
    _enumerate_parabolic_rows,
    det_int,
    enumerate_gl,
    gl_order,
    in_parabolic,
    is_invertible,
    is_prime,
    parabolic_order,
    prime_power_base,
)


@pytest.mark.parametrize("n,expected", [
    (0, False), (1, False), (2, True), (3, True), (4, False), (9, False),
    (97, True), (91, False), (2 ** 13 - 1, True),
])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("q,expected", [
    (9, (3, 2)), (8, (2, 3)), (7, (7, 1)), (6, None), (1, None), (49, (7, 2)),
    (12, None), (2, (2, 1)),
])
def test_prime_power_base(q, expected):
    assert prime_power_base(q) == expected


def test_local_field_params():
    field = LocalFieldParams(3, 2)
    assert field.q == 9
    assert LocalFieldParams(5).f == 1
    with pytest.raises(ValueError):
        LocalFieldParams(4)
    with pytest.raises(ValueError):
        LocalFieldParams(3, 0)


@pytest.mark.parametrize("n,q,m,expected", [
    (2, 2, 1, 6),
    (2, 3, 2, 3888),
    (1, 5, 2, 20),
    (3, 2, 1, 168),
    (2, 4, 1, (16 - 1) * (16 - 4)),
])
def test_gl_order_values(n, q, m, expected):
    assert gl_order(n, q, m) == expected


def test_gl_order_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gl_order(0, 2, 1)
    with pytest.raises(ValueError):
        gl_order(2, 2, 0)
    with pytest.raises(ValueError):
        gl_order(2, 1, 1)


def test_gl_order_level_ratio():
    for n in (1, 2, 3):
        for q in (2, 3, 5, 9):
            for m in (1, 2, 3):
                assert gl_order(n, q, m + 1) == gl_order(n, q, m) * q ** (n * n)


@pytest.mark.parametrize("partition,q,m,expected", [
    ((1, 1), 3, 1, 12),
    ((2, 1), 2, 1, 24),
    ((3,), 2, 1, 168),
    ((2,), 3, 2, gl_order(2, 3, 2)),
])
def test_parabolic_order_values(partition, q, m, expected):
    assert parabolic_order(partition, q, m) == expected


def test_parabolic_order_rejects_empty_partition():
    with pytest.raises(ValueError):
        parabolic_order((), 2, 1)


def test_matrix_reduces_entries():
    a = MatrixModPM(2, 2, ((5, -1), (4, 1)))
    assert a.rows == ((1, 3), (0, 1))
    assert a.modulus == 4
    assert a.n == 2
    assert a == MatrixModPM(2, 2, ((1, 3), (0, 1)))


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        MatrixModPM(2, 1, ((1, 0),))
    with pytest.raises(ValueError):
        MatrixModPM(2, 0, ((1,),))
    with pytest.raises(ValueError):
        MatrixModPM(6, 1, ((1,),))


def test_matrix_product():
    a = MatrixModPM(3, 2, ((1, 2), (0, 1)))
    b = MatrixModPM(3, 2, ((1, 0), (3, 1)))
    assert (a @ b).rows == ((7, 2), (3, 1))
    with pytest.raises(ValueError):
        a @ MatrixModPM(2, 2, ((1, 0), (0, 1)))


def test_det_int_small_sizes():
    assert det_int(((7,),)) == 7
    assert det_int(((1, 2), (3, 4))) == -2
    assert det_int(((1, 2, 3), (4, 5, 6), (7, 8, 10))) == -3
    # size 4 goes through the cofactor branch
    eye4 = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert det_int(eye4) == 1


def test_det_int_multiplicative_mod_pm():
    rows_a = ((1, 2, 0), (0, 1, 5), (3, 0, 1))
    rows_b = ((2, 1, 1), (0, 3, 0), (1, 0, 4))
    a = MatrixModPM(5, 2, rows_a)
    b = MatrixModPM(5, 2, rows_b)
    assert det_int((a @ b).rows) % 25 == (det_int(rows_a) * det_int(rows_b)) % 25


@pytest.mark.parametrize("rows,p,m,expected", [
    (((1, 0), (0, 1)), 2, 2, True),
    (((0, 0), (0, 0)), 2, 2, False),
    (((1, 0), (0, 2)), 2, 2, False),
    (((1, 1), (1, 2)), 3, 1, True),
])
def test_is_invertible(rows, p, m, expected):
    assert is_invertible(MatrixModPM(p, m, rows)) is expected


def test_in_parabolic():
    eye = MatrixModPM(2, 1, ((1, 0), (0, 1)))
    assert in_parabolic(eye, (1, 1)) is True
    lower = MatrixModPM(2, 1, ((1, 0), (1, 1)))
    assert in_parabolic(lower, (1, 1)) is False
    upper = MatrixModPM(3, 1, ((1, 1), (0, 1)))
    assert in_parabolic(upper, (1, 1)) is True
    with pytest.raises(ValueError):
        in_parabolic(eye, (1, 1, 1))


@pytest.mark.parametrize("n,p,m", [(2, 2, 1), (1, 3, 2), (3, 2, 1), (2, 3, 2)])
def test_enumerate_gl_count(n, p, m):
    mats = list(enumerate_gl(n, p, m))
    assert len(mats) == gl_order(n, p, m)
    assert len(set(mats)) == len(mats)
    assert all(is_invertible(a) for a in mats)


def test_enumerate_gl_is_sorted_stream():
    rows = [a.rows for a in enumerate_gl(2, 2, 1)]
    assert rows == sorted(rows)
    assert rows[0] == ((0, 1), (1, 0))


def test_enumerate_gl_budget():
    with pytest.raises(BudgetExceededError) as info:
        list(enumerate_gl(2, 2, 2, budget=100))
    assert info.value.required == 2 ** 8
    assert "256" in str(info.value)


@pytest.mark.parametrize("partition,p,m", [
    ((1, 1), 3, 1), ((2, 1), 2, 1), ((1, 1), 2, 2), ((1, 1, 1), 2, 1),
])
def test_enumerate_parabolic_count(partition, p, m):
    rows = list(_enumerate_parabolic_rows(partition, p, m))
    assert len(rows) == parabolic_order(partition, p, m)
    assert len(set(rows)) == len(rows)
    pm_mats = [MatrixModPM(p, m, r) for r in rows]
    assert all(in_parabolic(a, partition) for a in pm_mats)
    assert all(is_invertible(a) for a in pm_mats)

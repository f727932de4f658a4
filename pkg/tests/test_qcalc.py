import pytest

from charhopf.qcalc import gauss_binomial, gauss_binomial_quotient, q_factorial, q_int
from charhopf.scalars import var

q = var("q")


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (3, 1 + q + q ** 2)])
def test_q_int(n, expected):
    assert q_int(n, q) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (2, 1 + q), (3, (1 + q) * (1 + q + q ** 2))])
def test_q_factorial(n, expected):
    assert q_factorial(n, q) == expected


def test_gauss_examples():
    assert gauss_binomial(5, 0, q) == 1
    assert gauss_binomial(2, 1, q) == 1 + q
    assert gauss_binomial(4, 2, q) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4


def test_gauss_out_of_range_is_zero():
    assert gauss_binomial(3, -1, q).is_zero()
    assert gauss_binomial(3, 4, q).is_zero()


def test_gauss_stays_polynomial():
    assert all(gauss_binomial(8, k, q).is_polynomial() for k in range(9))


@pytest.mark.parametrize("n", range(1, 11))
def test_pascal_rules_and_symmetry(n):
    for k in range(1, n):
        g = gauss_binomial(n, k, q)
        a, b = gauss_binomial(n - 1, k - 1, q), gauss_binomial(n - 1, k, q)
        assert g == a + b * q ** k
        assert g == a * q ** (n - k) + b
        assert g == gauss_binomial(n, n - k, q)


@pytest.mark.parametrize("n", range(9))
def test_recurrence_matches_quotient(n):
    for k in range(n + 1):
        assert gauss_binomial(n, k, q) == gauss_binomial_quotient(n, k, q)


@pytest.mark.parametrize("k", range(1, 11))
def test_inverse_base(k):
    assert q_int(k, q.inv()) == q ** (1 - k) * q_int(k, q)


def test_base_can_be_any_scalar():
    p = var("p22") ** 2
    assert gauss_binomial(2, 1, p) == 1 + p

import random

import pytest

from charhopf import ParamTable, SkewGroupAlgebra
from charhopf.chargroup import g2_bindings
from charhopf.errors import InhomogeneousBracket, UndefinedScaledElement
from charhopf.scalars import var
from charhopf.verify import random_element

p12, p21, p22 = var("p12"), var("p21"), var("p22")
q = p22


def test_word_hops_group(A):
    assert A.x(2) * A.g(2) == A.g(2) * A.x(2) * p22
    n, k = 5, 2
    lhs = A.x(2) * A.group((1, n - k)) * A.x(2) ** k
    # the group part is unchanged; only the coefficient picks up p21 p22^(n-k)
    assert lhs == A.monomial((1, n - k), (2,) * (k + 1), p21 * p22 ** (n - k))


def test_unit(A):
    a = A.x(1) * A.g(2) + 3 * A.x(2)
    assert a * A.one() == a == A.one() * a


def test_bracket_examples(A):
    x1, x2 = A.x(1), A.x(2)
    assert A.bracket(x1, x2) == x1 * x2 - p12 * x2 * x1
    assert A.bracket(x1 * x2, A.one()).is_zero()
    expected = x1 * x2 ** 2 - p12 * (1 + q) * x2 * x1 * x2 + p12 ** 2 * q * x2 ** 2 * x1
    assert A.bracket(A.bracket(x1, x2), x2) == expected == A.serre_left(1, 2, 2)


def test_bracket_rejects_inhomogeneous(A):
    with pytest.raises(InhomogeneousBracket, match="inhomogeneous bracket operand"):
        A.bracket(A.x(1) + A.x(2), A.x(1))


def test_serre_right(A):
    x1, x2 = A.x(1), A.x(2)
    assert A.serre_right(2, 0, 1) == x1
    assert A.serre_right(2, 1, 1) == x2 * x1 - p21 * x1 * x2
    assert A.serre_right(2, 2, 1) == (x2 ** 2 * x1 - p21 * (1 + q) * x2 * x1 * x2
                                      + p21 ** 2 * q * x1 * x2 ** 2)


def test_equal_indices(A):
    with pytest.raises(ValueError, match="equal indices"):
        A.serre_left(1, 1, 2)


def test_serre_recursion(A):
    for m in range(6):
        assert A.serre_left(1, 2, m + 1) == A.bracket(A.serre_left(1, 2, m), A.x(2))


def test_braced_elements(A):
    assert A.braced_power(2, 1) == A.x(2)
    assert A.braced_power(2, 2) == A.x(2) ** 2 / (1 + q)
    assert A.braced_left(1, 2, 0) == A.x(1)
    assert A.braced_left(1, 2, 1) == A.serre_left(1, 2, 1) / (1 - p12 * p21)
    assert A.braced_right(2, 1, 1) == A.serre_right(2, 1, 1) / (1 - p12 * p21)
    for n in range(5):
        assert A.braced_left(1, 2, n) * A.braced_denominator(1, 2, n) == A.serre_left(1, 2, n)
        assert A.braced_right(2, n, 1) * A.braced_denominator(1, 2, n) == A.serre_right(2, n, 1)


def test_braced_power_at_minus_one():
    B = SkewGroupAlgebra(ParamTable.free(2).substitute({"p22": -1}))
    with pytest.raises(UndefinedScaledElement, match=r"\[2\]_q"):
        B.braced_power(2, 2)


def test_braced_under_g2(G2):
    B, _ = G2
    for n in range(4):
        B.braced_left(1, 2, n)
    assert B.braced_right(2, 2, 1) == B.serre_right(2, 2, 1) / (
        (1 + var("q")) * (1 - var("q") ** -3) * (1 - var("q") ** -2))
    with pytest.raises(UndefinedScaledElement, match="s=3.*1 - q\\^0"):
        B.braced_left(1, 2, 4)


def test_g2_table_equals_substituted_free_table(A, G2):
    B, _ = G2
    assert A.serre_left(1, 2, 3).substitute(g2_bindings(), B) == B.serre_left(1, 2, 3)


def test_associativity_random(A):
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (random_element(A, rng, rng.randint(0, 2), free=False) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_grading_of_products(A):
    a = A.monomial((1, 0), (2, 1)) * A.monomial((0, 2), (2,))
    (g, w), = a.terms
    assert g == (1, 2) and w == (2, 1, 2)


def test_index_out_of_range(A):
    with pytest.raises(IndexError):
        A.x(3)

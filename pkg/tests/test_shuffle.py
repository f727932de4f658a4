import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from charhopf.chargroup import grading
from charhopf.hopf import BraidedTensor
from charhopf.qcalc import q_factorial
from charhopf.scalars import Scalar, var
from charhopf.verify import random_element, words_up_to

p12, p21, q = var("p12"), var("p21"), var("p22")


def brute_shuffle(params, u, v):
    """Interleavings by position sets; a letter b of v placed before a letter a
    of u costs p(b, a)^-1."""
    n = params.n
    out = {}
    m = len(u) + len(v)
    for pos in combinations(range(m), len(u)):
        word = [None] * m
        origin = [None] * m
        ui = iter(u)
        vi = iter(v)
        for i in range(m):
            if i in pos:
                word[i], origin[i] = next(ui), "u"
            else:
                word[i], origin[i] = next(vi), "v"
        c = Scalar.one()
        for i in range(m):
            for j in range(i + 1, m):
                if origin[i] == "v" and origin[j] == "u":
                    c = c * params.bichar(grading((word[i],), n), grading((word[j],), n)).inv()
        key = tuple(word)
        out[key] = out.get(key, Scalar.zero()) + c
    return {k: c for k, c in out.items() if not c.is_zero()}


def test_letters(S):
    assert S.comonomial((1,)) * S.comonomial((2,)) == \
        S.comonomial((1, 2)) + S.comonomial((2, 1), p21.inv())
    w = S.comonomial((1, 2, 2))
    assert w * S.one() == w == S.one() * w


def test_g2_display(G2):
    _, T = G2
    P = T.params
    r = 1 + P.p(2, 2).inv() + P.p(2, 2) ** -2
    expected = (T.comonomial((2, 1, 2, 2, 1))
                + T.comonomial((2, 2, 1, 2, 1), P.p(2, 1).inv() * r)
                + T.comonomial((2, 2, 2, 1, 1), P.p(2, 1) ** -2 * r * (1 + P.p(1, 1).inv())))
    assert T.comonomial((2, 1)) * T.comonomial((2, 2, 1)) == expected


@pytest.mark.parametrize("u", [(), (1,), (2, 1), (1, 2, 2), (2, 1, 1, 2)])
@pytest.mark.parametrize("v", [(), (2,), (1, 2), (2, 2, 1)])
def test_against_brute_force(S, u, v):
    assert S.element(S.shuffle_words(u, v)) == S.element(brute_shuffle(S.params, u, v))


def test_output_degree(S):
    for w, _ in S.shuffle_words((1, 2, 1), (2, 2)).items():
        assert grading(w, 2) == (2, 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.sampled_from((1, 2)), max_size=2), min_size=3, max_size=3))
def test_associative(S, words):
    a, b, c = (S.comonomial(tuple(w)) for w in words)
    assert (a * b) * c == a * (b * c)


def test_deconcatenation(S):
    d = S.deconcatenation(S.comonomial((1, 2)))
    one = Scalar.one()
    assert d == BraidedTensor(S, {((1, 2), ()): one, ((1,), (2,)): one, ((), (1, 2)): one})
    assert S.deconcatenation(S.one()) == BraidedTensor(S, {((), ()): one})


def test_deconcatenation_coassociative(S):
    for w in words_up_to(5):
        t = S.deconcatenation_at({(w,): Scalar.one()}, 0)
        assert S.deconcatenation_at(t, 0).keys() == S.deconcatenation_at(t, 1).keys()


def test_omega_examples(A, S):
    assert S.omega(A.x(2) ** 2) == S.comonomial((2, 2), 1 + q.inv())
    assert S.omega(A.serre_left(1, 2, 1)) == S.comonomial((2, 1), p21.inv() * (1 - p12 * p21))
    assert S.omega(A.one()) == S.one()


@pytest.mark.parametrize("n", range(7))
def test_omega_of_powers(A, S, n):
    w = (2,) * n
    assert S.omega(A.word(w)) == S.comonomial(w, q_factorial(n, q.inv()))
    assert S.omega(A.braced_power(2, n)) == S.comonomial(w, q ** (n * (1 - n) // 2))


@pytest.mark.parametrize("n", range(6))
def test_omega_of_braced_serre(A, S, n):
    scale = q ** (n * (1 - n) // 2)
    assert S.omega(A.braced_left(1, 2, n)) == S.comonomial((2,) * n + (1,), p21 ** -n * scale)
    assert S.omega(A.braced_right(2, n, 1)) == S.comonomial((1,) + (2,) * n, p12 ** -n * scale)


def test_omega_requires_free_element(A, S):
    with pytest.raises(ValueError):
        S.omega(A.g(1) * A.x(1))


def test_products_do_not_mix(A, S):
    with pytest.raises(TypeError):
        S.comonomial((1,)) * A.x(1)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_omega_multiplicative(A, S, seed):
    rng = random.Random(seed)
    da = rng.randint(0, 4)
    a, b = random_element(A, rng, da), random_element(A, rng, 4 - da)
    assert S.omega(a * b) == S.omega(a) * S.omega(b)


@pytest.mark.parametrize("n", range(6))
def test_braided_compat_on_serre(A, S, n):
    assert S.braided_compat_check(A.serre_left(1, 2, n))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_braided_compat_random(A, S, seed):
    assert S.braided_compat_check(random_element(A, random.Random(seed), 4))


def test_shuffle_bracket_inhomogeneous(S):
    from charhopf.errors import InhomogeneousBracket
    with pytest.raises(InhomogeneousBracket):
        S.bracket(S.comonomial((1,)) + S.comonomial((2,)), S.comonomial((1,)))

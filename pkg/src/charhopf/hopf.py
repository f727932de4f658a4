"""Hopf structure of G<X>: tensors, the coproduct and its closed forms.

The coproduct is always computed from the generator values
``Delta(x_i) = x_i (x) 1 + g_i (x) x_i`` and ``Delta(g) = g (x) g``; the closed
forms in :func:`closed_coproduct` are built independently so that comparing
the two is a genuine check.
"""

from __future__ import annotations

from .chargroup import gadd, gneg, grading, identity
from .freealg import SkewElement, SkewGroupAlgebra
from .linear import LinearCombination, accumulate
from .qcalc import gauss_binomial
from .scalars import Scalar, var


class Tensor(LinearCombination):
    """Element of a tensor power of G<X>.

    Keys are tuples of legs, each leg a ``(group, word)`` basis pair; the
    arity is the number of legs (2 for coproduct values, 3 for the
    coassociativity check).
    """

    __slots__ = ()

    @staticmethod
    def order_key(key):
        # right legs first, so u (x) 1 leads as in the displayed formulas
        return tuple((len(w), w, g) for g, w in reversed(key))

    def arity(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return tensor_multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)

    def __repr__(self) -> str:
        return f"Tensor({self})"


class BraidedTensor(LinearCombination):
    """Group-free two-leg tensor ``(word, word) -> Scalar``.

    Used both for braided coproducts in k<X> and for tensors of comonomials;
    ``parent`` tells the two apart.
    """

    __slots__ = ()

    @staticmethod
    def order_key(key):
        w1, w2 = key
        return (len(w2), w2, len(w1), w1)

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)

    def __repr__(self) -> str:
        return f"BraidedTensor({self})"


def tensor(*factors: SkewElement) -> Tensor:
    """``a (x) b (x) ...`` expanded over the factors' terms."""
    algebra = factors[0].parent
    keys = {(): Scalar.one()}
    for f in factors:
        nxt: dict = {}
        for k, c in keys.items():
            for leg, c2 in f.terms.items():
                accumulate(nxt, k + (leg,), c * c2)
        keys = nxt
    return Tensor(algebra, keys)


def tensor_multiply(a: Tensor, b: Tensor) -> Tensor:
    """Legwise product ``(a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2``."""
    algebra = a.parent
    bichar = algebra.params.bichar
    n = algebra.n
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            coeff = ca * cb
            legs = []
            for (g, u), (h, v) in zip(ka, kb):
                if u and any(h):
                    coeff = coeff * bichar(grading(u, n), h)
                legs.append((gadd(g, h), u + v))
            accumulate(out, tuple(legs), coeff)
    return Tensor(algebra, out)


def _word_coproduct(algebra: SkewGroupAlgebra, w: tuple) -> Tensor:
    cache = algebra.delta_cache
    hit = cache.get(w)
    if hit is not None:
        return hit
    n = algebra.n
    e = identity(n)
    if not w:
        out = Tensor(algebra, {((e, ()), (e, ())): Scalar.one()})
    elif len(w) == 1:
        gi = grading(w, n)
        out = Tensor(algebra, {((e, w), (e, ())): Scalar.one(),
                               ((gi, ()), (e, w)): Scalar.one()})
    else:
        out = tensor_multiply(_word_coproduct(algebra, w[:-1]),
                              _word_coproduct(algebra, w[-1:]))
    cache[w] = out
    return out


def coproduct_leg(algebra: SkewGroupAlgebra, g: tuple, w: tuple) -> Tensor:
    """``Delta(g w) = (g (x) g) Delta(w)``."""
    dw = _word_coproduct(algebra, w)
    if not any(g):
        return dw
    out = {}
    for ((g1, w1), (g2, w2)), c in dw.terms.items():
        out[((gadd(g, g1), w1), (gadd(g, g2), w2))] = c
    return Tensor(algebra, out)


def coproduct(a: SkewElement) -> Tensor:
    """The algebra map extending the generator coproducts."""
    algebra = a.parent
    out: dict = {}
    for (g, w), c in a.terms.items():
        for key, c2 in coproduct_leg(algebra, g, w).terms.items():
            accumulate(out, key, c * c2)
    return Tensor(algebra, out)


def coproduct_at(t: Tensor, position: int) -> Tensor:
    """Apply Delta to leg ``position`` of ``t``, raising the arity by one."""
    algebra = t.parent
    out: dict = {}
    for key, c in t.terms.items():
        g, w = key[position]
        for (l1, l2), c2 in coproduct_leg(algebra, g, w).terms.items():
            accumulate(out, key[:position] + (l1, l2) + key[position + 1:], c * c2)
    return Tensor(algebra, out)


def coassociativity_defect(a: SkewElement) -> Tensor:
    """``(Delta (x) id) Delta(a) - (id (x) Delta) Delta(a)``; zero when coassociative."""
    d = coproduct(a)
    return coproduct_at(d, 0) - coproduct_at(d, 1)


# -- the coefficients alpha_k^(n) -------------------------------------------

def _lambda_q(params, i: int, j: int):
    return params.p(i, j) * params.p(j, i), params.p(j, j)


def alpha_closed(params, n: int, k: int, i: int = 1, j: int = 2) -> Scalar:
    """Gauss polynomial in ``q = p_jj`` times ``prod_{s=n-k}^{n-1} (1 - lambda q^s)``."""
    if n < 0 or k < 0 or k > n:
        return Scalar.zero()
    lam, q = _lambda_q(params, i, j)
    out = gauss_binomial(n, k, q)
    for s in range(n - k, n):
        out = out * (1 - lam * q ** s)
    return out


def alpha_recurrent(params, n: int, k: int, i: int = 1, j: int = 2) -> Scalar:
    """alpha by the induction step of the coproduct formula for ``[x_i x_j^n]``.

    ``alpha_k^(m+1) = alpha_{k-1}^(m) (1 - lambda q^(2m-k+1)) + alpha_k^(m) q^k``
    with ``alpha_0^(0) = 1`` and zero outside ``0 <= k <= m``.
    """
    if n < 0 or k < 0 or k > n:
        return Scalar.zero()
    lam, q = _lambda_q(params, i, j)
    row = [Scalar.one()]
    for m in range(n):
        nxt = [Scalar.one()]
        for kk in range(1, m + 2):
            prev_km1 = row[kk - 1]
            prev_k = row[kk] if kk <= m else Scalar.zero()
            nxt.append(prev_km1 * (1 - lam * q ** (2 * m - kk + 1)) + prev_k * q ** kk)
        row = nxt
    return row[k]


def pol_identity_sides(n: int, k: int, lam=None, q=None) -> tuple[Scalar, Scalar]:
    """Both sides of the polynomial identity behind the alpha recurrence.

    ``[n+1,k](1 - lam q^n)`` versus
    ``[n,k-1](1 - lam q^(2n-k+1)) + [n,k](1 - lam q^(n-k)) q^k``.
    """
    lam = var("lambda") if lam is None else Scalar.coerce(lam)
    q = var("q") if q is None else Scalar.coerce(q)
    lhs = gauss_binomial(n + 1, k, q) * (1 - lam * q ** n)
    rhs = (gauss_binomial(n, k - 1, q) * (1 - lam * q ** (2 * n - k + 1))
           + gauss_binomial(n, k, q) * (1 - lam * q ** (n - k)) * q ** k)
    return lhs, rhs


def verify_pol_identity(n: int, k: int) -> bool:
    """Exact check with ``lambda`` and ``q`` free; vacuous outside ``1 <= k <= n+1``."""
    if not 1 <= k <= n + 1:
        return True
    lhs, rhs = pol_identity_sides(n, k)
    return lhs == rhs


# -- closed forms -------------------------------------------------------------

CLOSED_KINDS = ("power", "braced_power", "serre_left", "braced_left",
                "serre_right", "braced_right", "g2_top")


def closed_coproduct(algebra: SkewGroupAlgebra, kind: str, n: int = 0,
                     i: int = 1, j: int = 2) -> Tensor:
    """Right-hand side of a displayed coproduct formula, built term by term.

    ``power``        sum_k [n,k]_q g_j^(n-k) x_j^k (x) x_j^(n-k)
    ``braced_power`` sum_k g_j^(n-k) {x_j^k} (x) {x_j^(n-k)}
    ``serre_left``   [x_i x_j^n] (x) 1 + sum_k alpha_k g_i g_j^(n-k) x_j^k (x) [x_i x_j^(n-k)]
    ``braced_left``  {x_i x_j^n} (x) 1 + sum_k g_i g_j^(n-k) {x_j^k} (x) {x_i x_j^(n-k)}
    ``serre_right``  g_i g_j^n (x) [x_j^n x_i] + sum_k alpha_k g_j^k [x_j^(n-k) x_i] (x) x_j^k
    ``braced_right`` g_i g_j^n (x) {x_j^n x_i} + sum_k g_j^k {x_j^(n-k) x_i} (x) {x_j^k}
    ``g2_top``       the four-sum formula for {x1 x2^3 x1}; ``n`` is ignored
    """
    A = algebra
    P = A.params
    one = A.one()
    gi = A.g(i)
    gj = A.g(j)
    out = Tensor(A, {})
    if kind == "power":
        q = P.p(j, j)
        xj = A.x(j)
        for k in range(n + 1):
            out = out + tensor(gj ** (n - k) * xj ** k, xj ** (n - k)).scale(gauss_binomial(n, k, q))
    elif kind == "braced_power":
        for k in range(n + 1):
            out = out + tensor(gj ** (n - k) * A.braced_power(j, k), A.braced_power(j, n - k))
    elif kind == "serre_left":
        out = tensor(A.serre_left(i, j, n), one)
        for k in range(n + 1):
            out = out + tensor(gi * gj ** (n - k) * A.x(j) ** k,
                               A.serre_left(i, j, n - k)).scale(alpha_closed(P, n, k, i, j))
    elif kind == "braced_left":
        out = tensor(A.braced_left(i, j, n), one)
        for k in range(n + 1):
            out = out + tensor(gi * gj ** (n - k) * A.braced_power(j, k),
                               A.braced_left(i, j, n - k))
    elif kind == "serre_right":
        out = tensor(gi * gj ** n, A.serre_right(j, n, i))
        for k in range(n + 1):
            out = out + tensor(gj ** k * A.serre_right(j, n - k, i),
                               A.x(j) ** k).scale(alpha_closed(P, n, k, i, j))
    elif kind == "braced_right":
        out = tensor(gi * gj ** n, A.braced_right(j, n, i))
        for k in range(n + 1):
            out = out + tensor(gj ** k * A.braced_right(j, n - k, i), A.braced_power(j, k))
    elif kind == "g2_top":
        from .g2 import g2_top_closed_coproduct
        return g2_top_closed_coproduct(A)
    else:
        raise ValueError(f"unknown coproduct kind {kind!r}; expected one of {CLOSED_KINDS}")
    return out


# -- braided coproduct ----------------------------------------------------------

def braided_from_ordinary(a: SkewElement) -> BraidedTensor:
    """``Delta^b(u) = sum u1 gr(u2)^-1 (x) u2`` for ``u`` in k<X>."""
    if not a.is_free():
        raise ValueError("braided coproduct is defined on k<X> (trivial group parts)")
    A = a.parent
    n = A.n
    e = identity(n)
    bichar = A.params.bichar
    out: dict = {}
    for ((g1, w1), (g2, w2)), c in coproduct(a).terms.items():
        if g2 != e or g1 != grading(w2, n):
            raise AssertionError(
                f"coproduct term {(g1, w1)} (x) {(g2, w2)} is not of the form gr(u2) u1 (x) u2")
        accumulate(out, (w1, w2), c * bichar(grading(w1, n), gneg(g1)))
    return BraidedTensor(A, out)


def ordinary_from_braided(b: BraidedTensor, algebra: SkewGroupAlgebra | None = None) -> Tensor:
    """Reattach ``gr(u2)`` to the right of ``u1`` and normal-order it to the left."""
    A = algebra or b.parent
    n = A.n
    e = identity(n)
    bichar = A.params.bichar
    out: dict = {}
    for (w1, w2), c in b.terms.items():
        g = grading(w2, n)
        accumulate(out, ((g, w1), (e, w2)), c * bichar(grading(w1, n), g))
    return Tensor(A, out)


def braided_tensor(a: SkewElement, b: SkewElement) -> BraidedTensor:
    """``a (x) b`` for group-free ``a``, ``b``."""
    if not (a.is_free() and b.is_free()):
        raise ValueError("braided tensor legs must lie in k<X>")
    out: dict = {}
    for (_, w1), c1 in a.terms.items():
        for (_, w2), c2 in b.terms.items():
            accumulate(out, (w1, w2), c1 * c2)
    return BraidedTensor(a.parent, out)

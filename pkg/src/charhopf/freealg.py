"""The skew group algebra G<X>: products, skew brackets, q-Serre polynomials.

Basis elements are pairs ``(g, w)`` read as ``g * w`` with the group part on
the left.  The product moves a word past a group element at the cost of the
character value: ``w h = chi^w(h) h w``.
"""

from __future__ import annotations

from .chargroup import ParamTable, gadd, generator, grading, identity
from .errors import InhomogeneousBracket, UndefinedScaledElement
from .linear import LinearCombination, accumulate
from .qcalc import q_int
from .scalars import Scalar


class SkewElement(LinearCombination):
    """Element of G<X>; ``terms`` maps ``(group, word)`` to Scalars."""

    __slots__ = ()

    @staticmethod
    def order_key(key):
        g, w = key
        return (len(w), w, g)

    def __mul__(self, other):
        if isinstance(other, SkewElement):
            return self.parent.multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in G<X>")
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def is_free(self) -> bool:
        """True when every group part is trivial, i.e. the element lies in k<X>."""
        e = identity(self.parent.n)
        return all(g == e for g, _ in self.terms)

    def degree(self) -> tuple:
        """Common word-degree vector of all terms; raises if inhomogeneous."""
        n = self.parent.n
        degs = {grading(w, n) for _, w in self.terms}
        if len(degs) > 1:
            raise InhomogeneousBracket("inhomogeneous bracket operand")
        if not degs:
            return identity(n)
        return degs.pop()

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)

    def __repr__(self) -> str:
        return f"SkewElement({self})"


class SkewGroupAlgebra:
    """G<X> over a :class:`ParamTable`, with ``G`` free abelian on ``g_1..g_n``."""

    def __init__(self, params: ParamTable | None = None):
        self.params = params if params is not None else ParamTable.free(2)
        self.n = self.params.n
        self.delta_cache: dict = {}

    # -- constructors -----------------------------------------------------
    def element(self, terms: dict) -> SkewElement:
        return SkewElement(self, terms)

    def monomial(self, g=None, w=(), coeff=1) -> SkewElement:
        g = identity(self.n) if g is None else tuple(g)
        c = Scalar.coerce(coeff)
        return SkewElement(self, {} if c.is_zero() else {(g, tuple(w)): c})

    def zero(self) -> SkewElement:
        return SkewElement(self, {})

    def one(self) -> SkewElement:
        return self.monomial()

    def x(self, i: int) -> SkewElement:
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} outside 1..{self.n}")
        return self.monomial(w=(i,))

    def g(self, i: int, power: int = 1) -> SkewElement:
        return self.monomial(g=generator(i, self.n, power))

    def group(self, exps) -> SkewElement:
        return self.monomial(g=tuple(exps))

    def word(self, w) -> SkewElement:
        return self.monomial(w=tuple(w))

    def scalar(self, c) -> SkewElement:
        return self.monomial(coeff=c)

    # -- product ----------------------------------------------------------
    def multiply(self, a: SkewElement, b: SkewElement) -> SkewElement:
        """``(g, u)(h, v) = p(u, h) (g h, u v)`` extended bilinearly."""
        bichar = self.params.bichar
        n = self.n
        out: dict = {}
        for (g, u), c1 in a.terms.items():
            du = grading(u, n)
            for (h, v), c2 in b.terms.items():
                coeff = c1 * c2
                if u and any(h):
                    coeff = coeff * bichar(du, h)
                accumulate(out, (gadd(g, h), u + v), coeff)
        return SkewElement(self, out)

    # -- brackets ---------------------------------------------------------
    def bracket(self, u: SkewElement, v: SkewElement) -> SkewElement:
        """Skew bracket ``[u, v] = u v - p(u, v) v u`` for homogeneous operands."""
        if u.is_zero() or v.is_zero():
            return self.zero()
        pu = self.params.bichar(u.degree(), v.degree())
        return u * v - (v * u).scale(pu)

    def serre_left(self, i: int, j: int, m: int) -> SkewElement:
        """``[x_i x_j^m] = [...[[x_i, x_j], x_j], ..., x_j]``."""
        if i == j:
            raise ValueError("equal indices")
        if m < 0:
            raise ValueError("m must be nonnegative")
        out = self.x(i)
        xj = self.x(j)
        for _ in range(m):
            out = self.bracket(out, xj)
        return out

    def serre_right(self, j: int, m: int, i: int) -> SkewElement:
        """``[x_j^m x_i] = [x_j, [x_j, ... [x_j, x_i]...]]``."""
        if i == j:
            raise ValueError("equal indices")
        if m < 0:
            raise ValueError("m must be nonnegative")
        out = self.x(i)
        xj = self.x(j)
        for _ in range(m):
            out = self.bracket(xj, out)
        return out

    # -- braced (scaled) elements -----------------------------------------
    def _lambda_label(self, i: int, j: int, s: int) -> str:
        p = self.params
        lam = p.p(i, j) * p.p(j, i)
        text = f"1 - p{i}{j}*p{j}{i}*q^{s} (s={s})"
        q = p.q if p.mode == "g2" else None
        if q is not None and lam.is_monomial() and lam.variables() <= {"q"}:
            (mono, _), = lam.num.terms.items()
            e = dict(mono).get("q", 0) + s
            text += f", which is 1 - q^{e}"
        return text

    def braced_factors(self, i: int, j: int, n: int) -> list[Scalar]:
        """Factors ``[k]_q`` (k = 1..n) and ``1 - p_ij p_ji q^s`` (s < n), ``q = p_jj``.

        Raises :class:`UndefinedScaledElement` naming the first zero factor.
        """
        p = self.params
        q = p.p(j, j)
        lam = p.p(i, j) * p.p(j, i)
        out = self._qfact_factors(q, n)
        for s in range(n):
            f = 1 - lam * q ** s
            if f.is_zero():
                raise UndefinedScaledElement(
                    f"undefined scaled element: factor {self._lambda_label(i, j, s)} vanishes")
            out.append(f)
        return out

    @staticmethod
    def _qfact_factors(q: Scalar, n: int) -> list[Scalar]:
        out = []
        for k in range(1, n + 1):
            f = q_int(k, q)
            if f.is_zero():
                raise UndefinedScaledElement(
                    f"undefined scaled element: factor [{k}]_q vanishes")
            out.append(f)
        return out

    def braced_denominator(self, i: int, j: int, n: int) -> Scalar:
        """``[n]_q! * prod_{s<n} (1 - p_ij p_ji q^s)`` with ``q = p_jj``."""
        return _product(self.braced_factors(i, j, n))

    def braced_power(self, i: int, n: int) -> SkewElement:
        """``{x_i^n} = x_i^n / [n]_q!`` with ``q = p_ii``."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        fs = self._qfact_factors(self.params.p(i, i), n)
        return self.word((i,) * n).scale(_product(f.inv() for f in fs))

    def braced_left(self, i: int, j: int, n: int) -> SkewElement:
        inv = _product(f.inv() for f in self.braced_factors(i, j, n))
        return self.serre_left(i, j, n).scale(inv)

    def braced_right(self, j: int, n: int, i: int) -> SkewElement:
        inv = _product(f.inv() for f in self.braced_factors(i, j, n))
        return self.serre_right(j, n, i).scale(inv)

    def __repr__(self) -> str:
        return f"SkewGroupAlgebra({self.params!r})"


def _product(factors) -> Scalar:
    out = Scalar.one()
    for f in factors:
        out = out * f
    return out

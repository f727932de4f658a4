"""The braided shuffle algebra Sh(W) and the homomorphism Omega: k<X> -> Sh(W).

Comonomials ``(z1 z2 ... zm)`` are stored as word tuples, the same carrier as
k<X>, but :class:`ShuffleElement` multiplies by the braided shuffle product,
never by concatenation.  The two element types refuse to mix.
"""

from __future__ import annotations

from .chargroup import ParamTable, grading
from .freealg import SkewElement
from .hopf import BraidedTensor
from .linear import LinearCombination, accumulate
from .scalars import Scalar


class ShuffleElement(LinearCombination):
    """Element of Sh(W); ``terms`` maps comonomials (word tuples) to Scalars."""

    __slots__ = ()

    @staticmethod
    def order_key(key):
        return (len(key), key)

    def __mul__(self, other):
        if isinstance(other, ShuffleElement):
            return self.parent.product(self, other)
        if isinstance(other, LinearCombination):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def degree(self) -> tuple:
        from .errors import InhomogeneousBracket
        degs = {grading(w, self.parent.n) for w in self.terms}
        if len(degs) > 1:
            raise InhomogeneousBracket("inhomogeneous bracket operand")
        return degs.pop() if degs else (0,) * self.parent.n

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)

    def __repr__(self) -> str:
        return f"ShuffleElement({self})"


class ShuffleAlgebra:
    """Sh(W) for the braided space spanned by ``x_1..x_n``.

    The shuffle product of comonomials ``(u)(v)`` sums over interleavings; each
    time a letter ``b`` of ``v`` is placed ahead of a letter ``a`` of ``u`` the
    term picks up ``p(b, a)^-1``.  This is the coefficient convention of the
    braiding ``tau(u (x) v) = p(v, u)^-1 v (x) u``.
    """

    def __init__(self, params: ParamTable | None = None):
        self.params = params if params is not None else ParamTable.free(2)
        self.n = self.params.n
        self._shuffle_cache: dict = {}
        self._omega_cache: dict = {}

    def element(self, terms: dict) -> ShuffleElement:
        return ShuffleElement(self, terms)

    def comonomial(self, w, coeff=1) -> ShuffleElement:
        c = Scalar.coerce(coeff)
        return ShuffleElement(self, {} if c.is_zero() else {tuple(w): c})

    def zero(self) -> ShuffleElement:
        return ShuffleElement(self, {})

    def one(self) -> ShuffleElement:
        return self.comonomial(())

    def _hop(self, b: int, rest: tuple) -> Scalar:
        """``p(x_b, rest)^-1``: letter ``b`` jumping ahead of the word ``rest``."""
        return self.params.bichar(grading((b,), self.n), grading(rest, self.n)).inv()

    def shuffle_words(self, u: tuple, v: tuple) -> dict:
        """``(u)(v)`` as a dict comonomial -> Scalar (memoized)."""
        key = (u, v)
        hit = self._shuffle_cache.get(key)
        if hit is not None:
            return hit
        if not u:
            out = {v: Scalar.one()}
        elif not v:
            out = {u: Scalar.one()}
        else:
            out = {}
            # first letter taken from u: no cost
            for w, c in self.shuffle_words(u[1:], v).items():
                accumulate(out, (u[0],) + w, c)
            # first letter taken from v: it hops over all of u
            hop = self._hop(v[0], u)
            for w, c in self.shuffle_words(u, v[1:]).items():
                accumulate(out, (v[0],) + w, c * hop)
        self._shuffle_cache[key] = out
        return out

    def product(self, a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
        out: dict = {}
        for u, c1 in a.terms.items():
            for v, c2 in b.terms.items():
                c = c1 * c2
                for w, c3 in self.shuffle_words(u, v).items():
                    accumulate(out, w, c * c3)
        return ShuffleElement(self, out)

    def bracket(self, u: ShuffleElement, v: ShuffleElement) -> ShuffleElement:
        """``[u, v] = u v - p(u, v) v u`` with the shuffle product."""
        if u.is_zero() or v.is_zero():
            return self.zero()
        return u * v - (v * u).scale(self.params.bichar(u.degree(), v.degree()))

    # -- coproduct --------------------------------------------------------
    def deconcatenation(self, a: ShuffleElement) -> BraidedTensor:
        """``Delta^b((w)) = sum_{w = w1 w2} (w1) (x) (w2)``."""
        out: dict = {}
        for w, c in a.terms.items():
            for cut in range(len(w) + 1):
                accumulate(out, (w[:cut], w[cut:]), c)
        return BraidedTensor(self, out)

    def deconcatenation_at(self, t: dict, position: int) -> dict:
        """Deconcatenate leg ``position`` of a word-tuple keyed mapping."""
        out: dict = {}
        for key, c in t.items():
            w = key[position]
            for cut in range(len(w) + 1):
                accumulate(out, key[:position] + (w[:cut], w[cut:]) + key[position + 1:], c)
        return out

    # -- Omega --------------------------------------------------------------
    def omega_word(self, w: tuple) -> dict:
        """``Omega(x_{i1} ... x_{im}) = (x_{i1})(x_{i2})...(x_{im})``."""
        hit = self._omega_cache.get(w)
        if hit is not None:
            return hit
        if len(w) <= 1:
            out = {w: Scalar.one()}
        else:
            out = {}
            for u, c in self.omega_word(w[:-1]).items():
                for v, c2 in self.shuffle_words(u, w[-1:]).items():
                    accumulate(out, v, c * c2)
        self._omega_cache[w] = out
        return out

    def omega(self, a: SkewElement) -> ShuffleElement:
        """Image of ``a`` in k<X> under the multiplicative map ``x_i -> (x_i)``."""
        if not a.is_free():
            raise ValueError("Omega is defined on k<X> (trivial group parts)")
        out: dict = {}
        for (_, w), c in a.terms.items():
            for v, c2 in self.omega_word(w).items():
                accumulate(out, v, c * c2)
        return ShuffleElement(self, out)

    def omega_tensor(self, b: BraidedTensor) -> BraidedTensor:
        """``(Omega (x) Omega)`` applied to a group-free tensor over k<X>."""
        out: dict = {}
        for (w1, w2), c in b.terms.items():
            left = self.omega_word(w1)
            right = self.omega_word(w2)
            for u, c1 in left.items():
                for v, c2 in right.items():
                    accumulate(out, (u, v), c * c1 * c2)
        return BraidedTensor(self, out)

    def braided_compat_check(self, a: SkewElement) -> bool:
        """``(Omega (x) Omega) Delta^b(a) == Delta^b(Omega(a))``."""
        from .hopf import braided_from_ordinary
        lhs = self.omega_tensor(braided_from_ordinary(a))
        rhs = self.deconcatenation(self.omega(a))
        return lhs == rhs

    def __repr__(self) -> str:
        return f"ShuffleAlgebra({self.params!r})"

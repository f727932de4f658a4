"""Finitely supported Scalar-valued mappings with vector-space arithmetic."""

from __future__ import annotations

from .scalars import Scalar


def accumulate(terms: dict, key, coeff: Scalar) -> None:
    """``terms[key] += coeff`` in place, dropping zeros."""
    if coeff.is_zero():
        return
    old = terms.get(key)
    if old is None:
        terms[key] = coeff
        return
    new = old + coeff
    if new.is_zero():
        del terms[key]
    else:
        terms[key] = new


class LinearCombination:
    """Base for algebra elements: ``terms`` maps basis keys to nonzero Scalars.

    Subclasses supply the product.  ``parent`` is the owning algebra; two
    elements only compare equal if they share a parent kind.
    """

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms: dict | None = None):
        self.parent = parent
        self.terms = terms if terms is not None else {}

    def _new(self, terms: dict):
        return type(self)(self.parent, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, key) -> Scalar:
        return self.terms.get(key, Scalar.zero())

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            accumulate(out, k, c)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            accumulate(out, k, -c)
        return self._new(out)

    def scale(self, c) -> LinearCombination:
        c = Scalar.coerce(c)
        if c.is_zero():
            return self._new({})
        if c.is_one():
            return self
        out = {}
        for k, v in self.terms.items():
            prod = v * c
            if not prod.is_zero():
                out[k] = prod
        return self._new(out)

    def __rmul__(self, c):
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    def __truediv__(self, c):
        return self.scale(Scalar.coerce(c).inv())

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, LinearCombination) or type(other) is not type(self):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return (self - other).is_zero()
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    @staticmethod
    def order_key(key):
        return key

    def sorted_keys(self) -> list:
        return sorted(self.terms, key=self.order_key)

    def first_difference(self, other):
        """The first basis key (canonical order) where ``self`` and ``other`` differ."""
        diff = self - other
        if diff.is_zero():
            return None
        key = diff.sorted_keys()[0]
        return key, self.coefficient(key), other.coefficient(key)

    def substitute(self, bindings, parent=None):
        """Apply a Scalar substitution to every coefficient."""
        parent = parent or self.parent
        out = {}
        for k, c in self.terms.items():
            accumulate(out, k, c.substitute(bindings))
        return type(self)(parent, out)

"""Exact coefficients: Laurent polynomials and rational functions over Q.

Indeterminates are plain strings (``"p12"``, ``"q"``, ...).  A monomial is a
tuple of ``(name, exponent)`` pairs sorted by name with no zero exponents, so
monomials are hashable and compare lexicographically on names then exponents.

A :class:`Scalar` is a fraction ``num / den`` where ``den`` is kept as a
product of normalized polynomial factors.  No multivariate gcd is taken:
factors are only cancelled when they divide the numerator exactly, and
equality is decided by clearing denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

from .errors import SpecializationError, ZeroDivisorError

Monomial = tuple  # tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        e2 = d.get(name, 0) + e
        if e2:
            d[name] = e2
        else:
            del d[name]
    return tuple(sorted(d.items()))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE_MONO
    return tuple((name, e * k) for name, e in a)


def mono_str(m: Monomial) -> str:
    parts = []
    for name, e in m:
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """Sparse Laurent polynomial with rational coefficients.

    ``terms`` maps monomials to nonzero :class:`~fractions.Fraction` values.
    Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def const(cls, c) -> Poly:
        c = Fraction(c)
        return cls({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> Poly:
        return cls({((name, exp),) if exp else ONE_MONO: Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> Poly:
        return cls({mono: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(ONE_MONO) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[str]:
        return {name for m in self.terms for name, _ in m}

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sort_key(self):
        return tuple(sorted(self.terms.items()))

    def __add__(self, other: Poly) -> Poly:
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            c2 = out.get(m, 0) + c
            if c2:
                out[m] = c2
            else:
                del out[m]
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if not self.terms or not other.terms:
            return Poly()
        if self.is_one():
            return other
        if other.is_one():
            return self
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
        return Poly(out)

    def scale(self, c) -> Poly:
        if not c:
            return Poly()
        return Poly({m: v * c for m, v in self.terms.items()})

    def shift(self, mono: Monomial) -> Poly:
        if not mono:
            return self
        return Poly({mono_mul(m, mono): c for m, c in self.terms.items()})

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial polynomial")
            (m, c), = self.terms.items()
            return Poly({mono_pow(m, k): Fraction(c) ** k})
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def min_exponents(self) -> Monomial:
        """Monomial content: the componentwise minimum exponent."""
        names = self.variables()
        low = {}
        for name in names:
            low[name] = min(dict(m).get(name, 0) for m in self.terms)
        return tuple(sorted((n, e) for n, e in low.items() if e))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def divexact(self, f: Poly) -> Poly | None:
        """Exact quotient ``self / f`` in the Laurent ring, or ``None``.

        ``f`` must have trivial monomial content.  Uses long division with a
        lex order on the shifted (ordinary) polynomials; with a single divisor
        a nonzero remainder proves non-divisibility.
        """
        if not self.terms:
            return Poly()
        shift = self.min_exponents()
        names = sorted(self.variables() | f.variables())
        if not f.variables() <= self.variables():
            return None

        def vec(m, sh):
            d = dict(m)
            s = dict(sh)
            return tuple(d.get(n, 0) - s.get(n, 0) for n in names)

        r = {vec(m, shift): c for m, c in self.terms.items()}
        fv = {vec(m, ()): c for m, c in f.terms.items()}
        lead_f = max(fv)
        cf = fv[lead_f]
        fdeg = sum(lead_f)
        quot = {}
        while r:
            lr = max(r)
            diff = tuple(a - b for a, b in zip(lr, lead_f))
            if min(diff) < 0 or sum(lr) < fdeg:
                return None
            c = r[lr] / cf
            quot[diff] = c
            for mv, cv in fv.items():
                key = tuple(a + b for a, b in zip(diff, mv))
                v = r.get(key, 0) - c * cv
                if v:
                    r[key] = v
                else:
                    r.pop(key, None)
        out = {}
        for v, c in quot.items():
            m = tuple((n, e) for n, e in zip(names, v) if e)
            out[mono_mul(m, shift)] = c
        return Poly(out)

    def substitute(self, bindings: dict[str, Scalar]) -> Scalar:
        total = Scalar.zero()
        cache: dict = {}
        for m, c in self.terms.items():
            term = Scalar.from_poly(Poly.const(c))
            rest = []
            for name, e in m:
                if name in bindings:
                    key = (name, e)
                    if key not in cache:
                        cache[key] = bindings[name] ** e
                    term = term * cache[key]
                else:
                    rest.append((name, e))
            if rest:
                term = term * Scalar.from_poly(Poly.monomial(tuple(rest)))
            total = total + term
        return total

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Poly({poly_str(self)!r})"


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_str(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, m in enumerate(sorted(p.terms)):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = _coeff_str(a)
        elif a == 1:
            body = mono_str(m)
        else:
            body = f"{_coeff_str(a)}*{mono_str(m)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def normalize_factor(p: Poly) -> tuple[Fraction, Monomial, Poly | None]:
    """Split ``p`` as ``c * m * P`` with ``P`` primitive and monomial-free.

    ``P`` has integer coefficients with gcd 1 and a positive first term in the
    canonical order.  Returns ``P = None`` when ``p`` is itself a monomial.
    """
    if not p.terms:
        raise ZeroDivisorError("zero divisor")
    if p.is_monomial():
        (m, c), = p.terms.items()
        return c, m, None
    m = p.min_exponents()
    inv_m = mono_pow(m, -1)
    den_lcm = 1
    num_gcd = 0
    for c in p.terms.values():
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        num_gcd = gcd(num_gcd, c.numerator)
    content = Fraction(num_gcd, den_lcm)
    shifted = {mono_mul(k, inv_m): c for k, c in p.terms.items()}
    if shifted[min(shifted)] < 0:
        content = -content
    return content, m, Poly({k: c / content for k, c in shifted.items()})


class Scalar:
    """Exact rational function ``num / prod(factor ** mult)``.

    ``den`` maps normalized factors to positive multiplicities.  Monomials and
    rational constants never appear in ``den``; they live in ``num``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: dict | None = None):
        self.num = num
        self.den = den if den else {}

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls) -> Scalar:
        return cls(Poly())

    @classmethod
    def one(cls) -> Scalar:
        return cls(Poly.const(1))

    @classmethod
    def const(cls, c) -> Scalar:
        return cls(Poly.const(c))

    @classmethod
    def var(cls, name: str, exp: int = 1) -> Scalar:
        return cls(Poly.var(name, exp))

    @classmethod
    def from_poly(cls, p: Poly) -> Scalar:
        return cls(p)

    @classmethod
    def coerce(cls, x) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls.const(x)
        if isinstance(x, Poly):
            return cls(x)
        if isinstance(x, str):
            return cls.var(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def _make(cls, num: Poly, den: dict) -> Scalar:
        if not num.terms:
            return cls(num)
        if not den:
            return cls(num)
        kept = {}
        for f, k in den.items():
            while k and num.terms:
                q = num.divexact(f)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                kept[f] = k
        if not num.terms:
            return cls(num)
        return cls(num, kept)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms

    def is_one(self) -> bool:
        return not self.den and self.num.is_one()

    def is_polynomial(self) -> bool:
        return not self.den

    def is_monomial(self) -> bool:
        return not self.den and self.num.is_monomial()

    def variables(self) -> set[str]:
        out = self.num.variables()
        for f in self.den:
            out |= f.variables()
        return out

    def den_poly(self) -> Poly:
        out = Poly.const(1)
        for f, k in self.den.items():
            out = out * f ** k
        return out

    def key(self):
        """Representation key (not value-canonical); usable for memo tables."""
        return (self.num, frozenset(self.den.items()))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> Scalar:
        try:
            b = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not b.num.terms:
            return self
        if not self.num.terms:
            return b
        if not self.den and not b.den:
            return Scalar(self.num + b.num)
        if self.den == b.den:
            return Scalar._make(self.num + b.num, dict(self.den))
        lcm = dict(self.den)
        for f, k in b.den.items():
            if lcm.get(f, 0) < k:
                lcm[f] = k
        na = self.num
        nb = b.num
        for f, k in lcm.items():
            ka = k - self.den.get(f, 0)
            kb = k - b.den.get(f, 0)
            if ka:
                na = na * f ** ka
            if kb:
                nb = nb * f ** kb
        return Scalar._make(na + nb, lcm)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.num, self.den)

    def __sub__(self, other) -> Scalar:
        try:
            b = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> Scalar:
        try:
            b = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num.terms or not b.num.terms:
            return Scalar.zero()
        if not self.den and not b.den:
            return Scalar(self.num * b.num)
        den = dict(self.den)
        for f, k in b.den.items():
            den[f] = den.get(f, 0) + k
        return Scalar._make(self.num * b.num, den)

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if not self.num.terms:
            raise ZeroDivisorError("zero divisor")
        c, m, P = normalize_factor(self.num)
        num = Poly.monomial(mono_pow(m, -1), 1 / c)
        for f, k in self.den.items():
            num = num * f ** k
        if P is None:
            return Scalar(num)
        return Scalar._make(num, {P: 1})

    def __truediv__(self, other) -> Scalar:
        try:
            b = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * b.inv()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inv() ** (-k)
        if k == 0:
            return Scalar.one()
        if not self.den:
            return Scalar(self.num ** k)
        return Scalar(self.num ** k, {f: m * k for f, m in self.den.items()})

    def __eq__(self, other) -> bool:
        try:
            b = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == b.den:
            return self.num == b.num
        return (self - b).is_zero()

    __hash__ = None  # equality is by value, representation is not canonical

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- specialization ---------------------------------------------------
    def substitute(self, bindings: dict[str, Scalar]) -> Scalar:
        """Apply the ring homomorphism sending each bound name to its value."""
        if not bindings:
            return self
        bindings = {k: Scalar.coerce(v) for k, v in bindings.items()}
        num = self.num.substitute(bindings)
        for f, k in self.den.items():
            fs = f.substitute(bindings)
            if fs.is_zero():
                raise SpecializationError(
                    f"specialization kills denominator: factor {poly_str(f)} vanishes"
                )
            num = num / fs ** k
        return num

    def leading_sign(self) -> int:
        """Sign of the first numerator term in canonical order (0 for zero)."""
        if not self.num.terms:
            return 0
        return 1 if self.num.terms[min(self.num.terms)] > 0 else -1

    # -- rendering --------------------------------------------------------
    def den_str(self) -> str:
        parts = []
        for f in sorted(self.den, key=Poly.sort_key):
            k = self.den[f]
            parts.append(f"({poly_str(f)})" + (f"^{k}" if k > 1 else ""))
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.den:
            return poly_str(self.num)
        num = poly_str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den) == 1 and next(iter(self.den.values())) == 1:
            return f"{num}/{self.den_str()}"
        return f"{num}/({self.den_str()})"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def var(name: str, exp: int = 1) -> Scalar:
    return Scalar.var(name, exp)


def const(c) -> Scalar:
    return Scalar.const(c)


ZERO = Scalar.zero()
ONE = Scalar.one()

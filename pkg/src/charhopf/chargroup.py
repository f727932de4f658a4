"""Grading group, words and the bimultiplicative form ``p(-, -)``.

The grading group is the free abelian group on ``g_1 .. g_n``; an element is
a plain tuple of ``n`` integer exponents.  A word is a tuple of 1-based
generator indices.  Characters are never stored separately: ``chi^u(g_v)``
is always ``ParamTable.bichar(deg(u), deg(v))``.
"""

from __future__ import annotations

from .scalars import Scalar, var

Word = tuple  # tuple[int, ...], letters are 1-based generator indices
GroupElement = tuple  # tuple[int, ...] of length n


def identity(n: int) -> GroupElement:
    return (0,) * n


def generator(i: int, n: int, power: int = 1) -> GroupElement:
    if not 1 <= i <= n:
        raise IndexError(f"generator index {i} outside 1..{n}")
    return tuple(power if k == i - 1 else 0 for k in range(n))


def grading(w: Word, n: int) -> GroupElement:
    """Degree vector of ``w``; equivalently the exponents of ``gr(w)``."""
    out = [0] * n
    for letter in w:
        out[letter - 1] += 1
    return tuple(out)


def gadd(a: GroupElement, b: GroupElement) -> GroupElement:
    return tuple(x + y for x, y in zip(a, b))


def gneg(a: GroupElement) -> GroupElement:
    return tuple(-x for x in a)


def param_name(i: int, j: int, n: int) -> str:
    return f"p{i}{j}" if n < 10 else f"p{i}_{j}"


class ParamTable:
    """The n x n matrix ``p_ij = chi^i(g_j)`` plus the meaning of ``q``.

    ``mode`` is ``"free"`` (all ``p_ij`` independent, ``q`` is ``p22``) or
    ``"g2"`` (``p11 = q^3``, ``p22 = q``, ``p21 = q^-3 p12^-1``).
    """

    def __init__(self, matrix, mode: str = "free", q: Scalar | None = None):
        self.n = len(matrix)
        self.matrix = [[Scalar.coerce(x) for x in row] for row in matrix]
        for row in self.matrix:
            if len(row) != self.n:
                raise ValueError("parameter matrix must be square")
            for x in row:
                if x.is_zero():
                    raise ValueError("quantization parameters must be nonzero")
        self.mode = mode
        self._q = q
        self._cache: dict = {}

    @classmethod
    def free(cls, n: int = 2) -> ParamTable:
        if n < 1:
            raise ValueError("need at least one generator")
        return cls([[var(param_name(i, j, n)) for j in range(1, n + 1)]
                    for i in range(1, n + 1)])

    @classmethod
    def g2(cls) -> ParamTable:
        q = var("q")
        p12 = var("p12")
        return cls([[q ** 3, p12], [q ** -3 / p12, q]], mode="g2", q=q)

    @property
    def q(self) -> Scalar:
        """The distinguished parameter ``q``; ``p22`` outside G2 mode."""
        if self._q is not None:
            return self._q
        if self.n < 2:
            raise ValueError("q = p22 needs n >= 2")
        return self.matrix[1][1]

    def p(self, i: int, j: int) -> Scalar:
        return self.matrix[i - 1][j - 1]

    def bichar(self, a: GroupElement, b: GroupElement) -> Scalar:
        """``prod p_ij ** (a_i * b_j)`` for degree vectors ``a``, ``b``."""
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = Scalar.one()
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out = out * self.matrix[i][j] ** (ai * bj)
        self._cache[key] = out
        return out

    def bichar_words(self, u: Word, v: Word) -> Scalar:
        return self.bichar(grading(u, self.n), grading(v, self.n))

    def bindings(self) -> dict[str, Scalar]:
        """Substitution taking free-mode names to this table's entries."""
        out = {param_name(i, j, self.n): self.p(i, j)
               for i in range(1, self.n + 1) for j in range(1, self.n + 1)}
        if self._q is not None:
            out["q"] = self._q
        return out

    def substitute(self, bindings) -> ParamTable:
        """New table with every entry specialized; ``q`` follows along."""
        q = self._q.substitute(bindings) if self._q is not None else None
        return ParamTable([[x.substitute(bindings) for x in row] for row in self.matrix],
                          mode=self.mode, q=q)

    def __repr__(self) -> str:
        return f"ParamTable(n={self.n}, mode={self.mode!r})"


def g2_bindings() -> dict[str, Scalar]:
    """``{p11: q^3, p22: q, p21: q^-3 p12^-1}``; survivors are ``q`` and ``p12``."""
    q = var("q")
    return {"p11": q ** 3, "p22": q, "p21": q ** -3 / var("p12")}

"""q-integers, q-factorials and Gauss polynomials over an arbitrary base."""

from __future__ import annotations

from .scalars import Scalar

_pascal_rows: dict = {}


def q_int(n: int, base) -> Scalar:
    """``[n]_base = 1 + base + ... + base^(n-1)``; ``[0] = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    base = Scalar.coerce(base)
    total = Scalar.zero()
    power = Scalar.one()
    for _ in range(n):
        total = total + power
        power = power * base
    return total


def q_factorial(n: int, base) -> Scalar:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    base = Scalar.coerce(base)
    out = Scalar.one()
    for k in range(1, n + 1):
        out = out * q_int(k, base)
    return out


def gauss_binomial(n: int, k: int, base) -> Scalar:
    """Gauss polynomial by the first q-Pascal rule; 0 outside ``0 <= k <= n``.

    Rows are memoized per base, so no division ever happens.
    """
    if n < 0 or k < 0 or k > n:
        return Scalar.zero()
    base = Scalar.coerce(base)
    rows = _pascal_rows.setdefault(base.key(), [[Scalar.one()]])
    while len(rows) <= n:
        prev = rows[-1]
        m = len(prev)  # prev is row m-1
        row = [Scalar.one()]
        power = Scalar.one()
        for j in range(1, m):
            power = power * base
            row.append(prev[j - 1] + power * prev[j])
        row.append(Scalar.one())
        rows.append(row)
    return rows[n][k]


def gauss_binomial_quotient(n: int, k: int, base) -> Scalar:
    """Gauss polynomial straight from the factorial quotient (test oracle)."""
    if n < 0 or k < 0 or k > n:
        return Scalar.zero()
    return q_factorial(n, base) / (q_factorial(k, base) * q_factorial(n - k, base))

"""Text, LaTeX and JSON renderings of engine values, plus JSON re-ingest.

Text output is re-parseable by :mod:`charhopf.parser` for Scalars and
elements of G<X>.  Words are written by juxtaposition with run-length powers
(``x1x2^3x1``), group parts likewise (``g1^2g2^3``).
"""

from __future__ import annotations

import json

from .freealg import SkewElement
from .g2 import VerificationReport
from .hopf import BraidedTensor, Tensor
from .scalars import Poly, Scalar, poly_str
from .shuffle import ShuffleElement


def _runs(w):
    out = []
    for letter in w:
        if out and out[-1][0] == letter:
            out[-1][1] += 1
        else:
            out.append([letter, 1])
    return out


def word_text(w) -> str:
    return "".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in _runs(w))


def group_text(g) -> str:
    return "".join(f"g{i}" + (f"^{e}" if e != 1 else "")
                   for i, e in enumerate(g, start=1) if e)


def leg_text(g, w) -> str:
    return (group_text(g) + word_text(w)) or "1"


def _term_text(coeff: Scalar, body: str) -> str:
    """``coeff*body`` with 1, -1 and single-monomial coefficients inlined."""
    if coeff.is_one():
        return body
    if (-coeff).is_one():
        return "-" + body
    c = str(coeff)
    if not (coeff.is_monomial() or (coeff.is_polynomial() and len(coeff.num.terms) == 1)):
        c = f"({c})"
    if body == "1":
        return c
    return f"{c}*{body}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _key_text(value, key) -> str:
    if isinstance(value, SkewElement):
        return leg_text(*key)
    if isinstance(value, Tensor):
        return " (x) ".join(leg_text(g, w) for g, w in key)
    if isinstance(value, BraidedTensor):
        return " (x) ".join(word_text(w) or "1" for w in key)
    if isinstance(value, ShuffleElement):
        return f"({word_text(key)})" if key else "1"
    raise TypeError(type(value).__name__)


def render_term(value, key) -> str:
    return _key_text(value, key)


def render_text(value) -> str:
    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, VerificationReport):
        line = f"{value.identity}: {value.status} ({value.elapsed:.3f} s)"
        if value.witness:
            line += f"\n  witness: {value.witness}"
        return line
    parts = [_term_text(value.terms[k], _key_text(value, k)) for k in value.sorted_keys()]
    return _join(parts)


# -- LaTeX -----------------------------------------------------------------------

def _exp(e: int) -> str:
    return f"^{e}" if 0 <= e <= 9 else f"^{{{e}}}"


def _latex_name(name: str) -> str:
    if name.startswith("p") and name[1:].isdigit():
        return f"p_{{{name[1:]}}}"
    if name == "lambda":
        return r"\lambda"
    return name


def poly_latex(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, m in enumerate(sorted(p.terms)):
        c = p.terms[m]
        a = abs(c)
        body = "".join(_latex_name(n) + (_exp(e) if e != 1 else "") for n, e in m)
        if a.denominator != 1:
            cs = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
        else:
            cs = str(a.numerator)
        if not body:
            body = cs
        elif a != 1:
            body = cs + body
        sign = "-" if c < 0 else "+"
        out.append(("-" if sign == "-" else "") + body if i == 0 else sign + body)
    return "".join(out)


def scalar_latex(s: Scalar) -> str:
    if not s.den:
        return poly_latex(s.num)
    den = "".join(
        (f"({poly_latex(f)})" + (_exp(k) if k > 1 else ""))
        for f, k in sorted(s.den.items(), key=lambda fk: fk[0].sort_key()))
    if len(s.den) == 1 and next(iter(s.den.values())) == 1:
        den = poly_latex(next(iter(s.den)))
    return rf"\frac{{{poly_latex(s.num)}}}{{{den}}}"


def word_latex(w) -> str:
    return "".join(f"x_{{{i}}}" if i > 9 else f"x_{i}" + (_exp(k) if k > 1 else "")
                   for i, k in _runs(w))


def group_latex(g) -> str:
    return "".join(f"g_{i}" + (_exp(e) if e != 1 else "")
                   for i, e in enumerate(g, start=1) if e)


def _leg_latex(g, w) -> str:
    return (group_latex(g) + word_latex(w)) or "1"


def render_latex(value) -> str:
    if isinstance(value, Scalar):
        return scalar_latex(value)
    if isinstance(value, VerificationReport):
        return rf"\text{{{value.identity}: {value.status}}}"
    parts = []
    for k in value.sorted_keys():
        if isinstance(value, SkewElement):
            body = _leg_latex(*k)
        elif isinstance(value, Tensor):
            body = r"\otimes ".join(_leg_latex(g, w) for g, w in k)
        elif isinstance(value, BraidedTensor):
            body = r"\underline{\otimes} ".join(word_latex(w) or "1" for w in k)
        else:
            body = f"({word_latex(k)})" if k else "1"
        c = value.terms[k]
        if c.is_one():
            term = body
        elif (-c).is_one():
            term = "-" + body
        else:
            cs = scalar_latex(c)
            if c.is_polynomial() and len(c.num.terms) > 1:
                cs = f"({cs})"
            term = cs if body == "1" else cs + body
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# -- JSON ------------------------------------------------------------------------

def scalar_json(s: Scalar) -> dict:
    return {"num": poly_str(s.num), "den": poly_str(s.den_poly())}


def to_json_obj(value) -> dict:
    if isinstance(value, Scalar):
        return scalar_json(value)
    if isinstance(value, VerificationReport):
        return value.to_dict()
    terms = []
    for k in value.sorted_keys():
        c = scalar_json(value.terms[k])
        if isinstance(value, SkewElement):
            g, w = k
            terms.append({"coeff": c, "group": list(g), "word": list(w)})
        elif isinstance(value, Tensor) and len(k) == 2:
            (g1, w1), (g2, w2) = k
            terms.append({"coeff": c, "leftGroup": list(g1), "leftWord": list(w1),
                          "rightGroup": list(g2), "rightWord": list(w2)})
        elif isinstance(value, Tensor):
            terms.append({"coeff": c, "legs": [{"group": list(g), "word": list(w)} for g, w in k]})
        elif isinstance(value, BraidedTensor):
            w1, w2 = k
            terms.append({"coeff": c, "leftWord": list(w1), "rightWord": list(w2)})
        else:
            terms.append({"coeff": c, "word": list(k)})
    kind = {SkewElement: "skew", Tensor: "tensor", BraidedTensor: "braided",
            ShuffleElement: "shuffle"}[type(value)]
    return {"kind": kind, "terms": terms}


def render_json(value) -> str:
    return json.dumps(to_json_obj(value), ensure_ascii=False)


def render(value, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(value)
    if fmt == "latex":
        return render_latex(value)
    if fmt == "json":
        return render_json(value)
    raise ValueError(f"unknown format {fmt!r}")


def _scalar_from_json(obj: dict) -> Scalar:
    from .parser import parse_scalar
    return parse_scalar(obj["num"]) / parse_scalar(obj["den"])


def from_json(data, algebra, shuffle=None):
    """Rebuild a value written by :func:`render_json` (string or parsed dict)."""
    if isinstance(data, str):
        data = json.loads(data)
    kind = data["kind"]
    terms: dict = {}
    for t in data["terms"]:
        c = _scalar_from_json(t["coeff"])
        if kind == "skew":
            key = (tuple(t["group"]), tuple(t["word"]))
        elif kind == "tensor" and "legs" in t:
            key = tuple((tuple(leg["group"]), tuple(leg["word"])) for leg in t["legs"])
        elif kind == "tensor":
            key = ((tuple(t["leftGroup"]), tuple(t["leftWord"])),
                   (tuple(t["rightGroup"]), tuple(t["rightWord"])))
        elif kind == "braided":
            key = (tuple(t["leftWord"]), tuple(t["rightWord"]))
        elif kind == "shuffle":
            key = tuple(t["word"])
        else:
            raise ValueError(f"unknown kind {kind!r}")
        terms[key] = c
    if kind == "skew":
        return SkewElement(algebra, terms)
    if kind == "tensor":
        return Tensor(algebra, terms)
    if kind == "braided":
        return BraidedTensor(algebra, terms)
    return ShuffleElement(shuffle, terms)

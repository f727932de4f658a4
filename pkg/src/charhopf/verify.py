"""Named identity checks, each returning a :class:`VerificationReport`.

Every check compares two independently computed sides exactly.  Closed
coproduct formulas are compared with the generic coproduct, shuffle formulas
with the general interleaving product, and random cases use a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable

from . import g2, hopf
from .chargroup import ParamTable
from .freealg import SkewElement, SkewGroupAlgebra
from .g2 import VerificationReport, _Recorder
from .qcalc import gauss_binomial, q_factorial, q_int
from .scalars import Scalar
from .shuffle import ShuffleAlgebra


@dataclass(frozen=True)
class VerifyOptions:
    max_n: int | None = None
    seed: int = 20240607
    cases: int = 50
    printed: bool = False

    def bound(self, default: int) -> int:
        return default if self.max_n is None else self.max_n


def free_algebras(n: int = 2) -> tuple[SkewGroupAlgebra, ShuffleAlgebra]:
    params = ParamTable.free(n)
    return SkewGroupAlgebra(params), ShuffleAlgebra(params)


def words_up_to(length: int, letters=(1, 2)):
    for m in range(length + 1):
        yield from iproduct(letters, repeat=m)


# -- random elements ----------------------------------------------------------------

def _coefficient_pool(params: ParamTable) -> list[Scalar]:
    p = params.p
    lam = p(1, 2) * p(2, 1)
    return [Scalar.one(), Scalar.const(-1), Scalar.const(2), Scalar.const(Fraction(1, 3)),
            p(1, 2), p(2, 1).inv(), 1 + p(2, 2), p(1, 1) - lam, (1 - lam).inv(),
            p(2, 2) ** 2 / (1 + p(1, 1))]


def random_element(algebra: SkewGroupAlgebra, rng: random.Random, max_deg: int,
                   free: bool = True, max_terms: int = 3) -> SkewElement:
    """Sum of up to ``max_terms`` random monomials of word length <= ``max_deg``."""
    pool = _coefficient_pool(algebra.params)
    out = algebra.zero()
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.choice((1, 2)) for _ in range(rng.randint(0, max_deg)))
        g = None if free else tuple(rng.randint(-1, 2) for _ in range(algebra.n))
        out = out + algebra.monomial(g, w, rng.choice(pool))
    return out


def random_pairs(algebra, rng, cases: int, total: int = 4, free: bool = True):
    for _ in range(cases):
        da = rng.randint(0, total)
        yield (random_element(algebra, rng, da, free),
               random_element(algebra, rng, total - da, free))


# -- coproduct families ---------------------------------------------------------

_FAMILIES = {
    "coSer": ("serre_left", lambda A, n: A.serre_left(1, 2, n)),
    "mon": ("power", lambda A, n: A.word((2,) * n)),
    "ser3": ("braced_power", lambda A, n: A.braced_power(2, n)),
    "mon1": ("braced_left", lambda A, n: A.braced_left(1, 2, n)),
    "coSer4": ("serre_right", lambda A, n: A.serre_right(2, n, 1)),
    "mon2": ("braced_right", lambda A, n: A.braced_right(2, n, 1)),
}


def _family_check(name: str) -> Callable[[VerifyOptions], VerificationReport]:
    kind, build = _FAMILIES[name]

    def run(opts: VerifyOptions) -> VerificationReport:
        rec = _Recorder(name)
        A, _ = free_algebras()
        top = opts.bound(6)
        for n in range(top + 1):
            lhs = hopf.coproduct(build(A, n))
            rhs = hopf.closed_coproduct(A, kind, n)
            if not rec.equal(f"n={n}", lhs, rhs):
                break
        rec.details["range"] = f"0..{top}"
        return rec.report()

    run.__doc__ = f"Generic coproduct against the closed {kind} formula."
    return run


def check_alpha(opts: VerifyOptions) -> VerificationReport:
    """alpha closed form against the recurrence, 0 <= k <= n <= max_n."""
    rec = _Recorder("alpha")
    params = ParamTable.free(2)
    top = opts.bound(8)
    for n in range(top + 1):
        for k in range(n + 1):
            if not rec.equal(f"n={n}, k={k}", hopf.alpha_closed(params, n, k),
                             hopf.alpha_recurrent(params, n, k)):
                return rec.report()
    rec.details["range"] = f"0..{top}"
    return rec.report()


def check_pol(opts: VerifyOptions) -> VerificationReport:
    """The lambda/q polynomial identity with lambda free, then its specialization."""
    rec = _Recorder("pol")
    top = opts.bound(8)
    params = ParamTable.free(2)
    lam = params.p(1, 2) * params.p(2, 1)
    q = params.p(2, 2)
    for n in range(top + 1):
        for k in range(1, n + 2):
            lhs, rhs = hopf.pol_identity_sides(n, k)
            if not rec.equal(f"n={n}, k={k}", lhs, rhs):
                return rec.report()
            lhs, rhs = hopf.pol_identity_sides(n, k, lam, q)
            if not rec.equal(f"n={n}, k={k} at lambda=p12*p21, q=p22", lhs, rhs):
                return rec.report()
    # lambda = 0 is the first q-Pascal rule; the lambda-linear part is the
    # second rule times q^n
    x = Scalar.var("q")
    for n in range(top + 1):
        for k in range(1, n + 1):
            at0, _ = hopf.pol_identity_sides(n, k, 0, x)
            at1, _ = hopf.pol_identity_sides(n, k, 1, x)
            rec.equal(f"lambda=0 slice n={n}, k={k}", at0,
                      gauss_binomial(n, k - 1, x) + gauss_binomial(n, k, x) * x ** k)
            rec.equal(f"lambda-linear slice n={n}, k={k}", at0 - at1,
                      x ** n * (gauss_binomial(n, k - 1, x) * x ** (n + 1 - k)
                                + gauss_binomial(n, k, x)))
    rec.details["range"] = f"0..{top}"
    return rec.report()


def check_qpascal(opts: VerifyOptions) -> VerificationReport:
    """Both q-Pascal rules, symmetry, and the quotient form of the Gauss polynomial."""
    from .qcalc import gauss_binomial_quotient
    rec = _Recorder("qpascal")
    q = Scalar.var("q")
    top = opts.bound(10)
    for n in range(1, top + 1):
        for k in range(1, n):
            g = gauss_binomial(n, k, q)
            a, b = gauss_binomial(n - 1, k - 1, q), gauss_binomial(n - 1, k, q)
            rec.equal(f"first rule n={n}, k={k}", g, a + b * q ** k)
            rec.equal(f"second rule n={n}, k={k}", g, a * q ** (n - k) + b)
            rec.equal(f"symmetry n={n}, k={k}", g, gauss_binomial(n, n - k, q))
            rec.equal(f"quotient n={n}, k={k}", g, gauss_binomial_quotient(n, k, q))
        rec.equal(f"[{n}]_(q^-1) n={n}", q_int(n, q.inv()), q ** (1 - n) * q_int(n, q))
    return rec.report()


# -- shuffle and Omega --------------------------------------------------------------

def check_exm(opts: VerifyOptions) -> VerificationReport:
    """Omega(x2^n) = [n]_{q^-1}! (x2^n) and Omega({x2^n}) = q^{n(1-n)/2} (x2^n)."""
    rec = _Recorder("exm")
    A, S = free_algebras()
    q = A.params.p(2, 2)
    top = opts.bound(6)
    for n in range(top + 1):
        w = (2,) * n
        rec.equal(f"n={n}", S.omega(A.word(w)), S.comonomial(w, q_factorial(n, q.inv())))
        rec.equal(f"braced n={n}", S.omega(A.braced_power(2, n)),
                  S.comonomial(w, q ** (n * (1 - n) // 2)))
    return rec.report()


def check_kmm(opts: VerifyOptions) -> VerificationReport:
    """Omega of [x1 x2^n] and [x2^n x1], raw and braced."""
    rec = _Recorder("kmm")
    A, S = free_algebras()
    P = A.params
    q, p12, p21 = P.p(2, 2), P.p(1, 2), P.p(2, 1)
    top = opts.bound(5)
    for n in range(top + 1):
        prod = Scalar.one()
        for s in range(n):
            prod = prod * (1 - p12 * p21 * q ** s)
        fact = q_factorial(n, q.inv())
        scale = q ** (n * (1 - n) // 2)
        left, right = (2,) * n + (1,), (1,) + (2,) * n
        rec.equal(f"bic1 n={n}", S.omega(A.serre_left(1, 2, n)),
                  S.comonomial(left, fact * p21 ** -n * prod))
        rec.equal(f"bic2 n={n}", S.omega(A.serre_right(2, n, 1)),
                  S.comonomial(right, fact * p12 ** -n * prod))
        rec.equal(f"braced bic1 n={n}", S.omega(A.braced_left(1, 2, n)),
                  S.comonomial(left, p21 ** -n * scale))
        rec.equal(f"braced bic2 n={n}", S.omega(A.braced_right(2, n, 1)),
                  S.comonomial(right, p12 ** -n * scale))
    return rec.report()


def check_spro(opts: VerifyOptions) -> VerificationReport:
    """Single-letter shuffle formulas against the general product."""
    rec = _Recorder("spro")
    _, S = free_algebras()
    bw = S.params.bichar_words
    top = opts.bound(5)
    for w in words_up_to(top):
        for i in (1, 2):
            xi = (i,)
            right = S.zero()
            left = S.zero()
            for cut in range(len(w) + 1):
                u, v = w[:cut], w[cut:]
                right = right + S.comonomial(u + xi + v, bw(xi, v).inv())
                left = left + S.comonomial(u + xi + v, bw(u, xi).inv())
            if not rec.equal(f"(w)(x{i}), w={w}", S.comonomial(w) * S.comonomial(xi), right):
                return rec.report()
            if not rec.equal(f"(x{i})(w), w={w}", S.comonomial(xi) * S.comonomial(w), left):
                return rec.report()
    return rec.report()


def check_proc(opts: VerifyOptions) -> VerificationReport:
    """Bracket formulas [(w),(x_i)] and [(x_i),(w)]."""
    rec = _Recorder("proc")
    _, S = free_algebras()
    bw = S.params.bichar_words
    top = opts.bound(5)
    for w in words_up_to(top):
        for i in (1, 2):
            xi = (i,)
            r1 = S.zero()
            r2 = S.zero()
            for cut in range(len(w) + 1):
                u, v = w[:cut], w[cut:]
                r1 = r1 + S.comonomial(u + xi + v, bw(xi, v).inv() - bw(v, xi))
                r2 = r2 + S.comonomial(u + xi + v, bw(u, xi).inv() - bw(xi, u))
            cw, cx = S.comonomial(w), S.comonomial(xi)
            if not rec.equal(f"proc w={w}, i={i}", S.bracket(cw, cx), r1):
                return rec.report()
            if not rec.equal(f"proc1 w={w}, i={i}", S.bracket(cx, cw), r2):
                return rec.report()
    return rec.report()


def check_shuffle_assoc(opts: VerifyOptions) -> VerificationReport:
    """Associativity of the shuffle product and coassociativity of deconcatenation."""
    rec = _Recorder("shuffle-assoc")
    _, S = free_algebras()
    rng = random.Random(opts.seed)
    for case in range(opts.cases):
        lens = [rng.randint(0, 2) for _ in range(3)]
        a, b, c = (S.comonomial(tuple(rng.choice((1, 2)) for _ in range(m))) for m in lens)
        if not rec.equal(f"case {case}", (a * b) * c, a * (b * c)):
            return rec.report()
    for w in words_up_to(opts.bound(5)):
        left = S.deconcatenation_at(S.deconcatenation_at({(w,): Scalar.one()}, 0), 0)
        right = S.deconcatenation_at(S.deconcatenation_at({(w,): Scalar.one()}, 0), 1)
        rec.check(f"deconcatenation w={w}", _dict_equal(left, right))
    return rec.report()


def _dict_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    zero = Scalar.zero()
    return all(a.get(k, zero) == b.get(k, zero) for k in keys)


def check_omega_mult(opts: VerifyOptions) -> VerificationReport:
    """Omega(ab) = Omega(a) Omega(b) on random pairs of total degree <= 4."""
    rec = _Recorder("omega-mult")
    A, S = free_algebras()
    rng = random.Random(opts.seed)
    for case, (a, b) in enumerate(random_pairs(A, rng, opts.cases)):
        if not rec.equal(f"case {case}: a={a}, b={b}", S.omega(a * b), S.omega(a) * S.omega(b)):
            break
    rec.details["cases"] = opts.cases
    return rec.report()


def check_braided_compat(opts: VerifyOptions) -> VerificationReport:
    """Deconcatenation after Omega equals (Omega (x) Omega) of the braided coproduct."""
    rec = _Recorder("braided-compat")
    A, S = free_algebras()
    rng = random.Random(opts.seed + 1)
    cases = [(f"[x1x2^{n}]", A.serre_left(1, 2, n)) for n in range(opts.bound(5) + 1)]
    cases += [(f"random {c}", random_element(A, rng, 4)) for c in range(opts.cases)]
    for label, a in cases:
        lhs = S.omega_tensor(hopf.braided_from_ordinary(a))
        rhs = S.deconcatenation(S.omega(a))
        if not rec.equal(label, lhs, rhs):
            break
        if not rec.equal(f"{label} round trip", hopf.ordinary_from_braided(
                hopf.braided_from_ordinary(a)), hopf.coproduct(a)):
            break
    rec.details["cases"] = len(cases)
    return rec.report()


def check_delta_mult(opts: VerifyOptions) -> VerificationReport:
    """Delta(ab) = Delta(a) Delta(b) on random elements of G<X>, total degree <= 4."""
    rec = _Recorder("delta-mult")
    A, _ = free_algebras()
    rng = random.Random(opts.seed + 2)
    for case, (a, b) in enumerate(random_pairs(A, rng, opts.cases, free=False)):
        if not rec.equal(f"case {case}: a={a}, b={b}", hopf.coproduct(a * b),
                         hopf.coproduct(a) * hopf.coproduct(b)):
            break
    rec.details["cases"] = opts.cases
    return rec.report()


def check_coassoc(opts: VerifyOptions) -> VerificationReport:
    """(Delta (x) id) Delta = (id (x) Delta) Delta on random elements, degree <= 4."""
    rec = _Recorder("coassoc")
    A, _ = free_algebras()
    rng = random.Random(opts.seed + 3)
    for case in range(opts.cases):
        a = random_element(A, rng, 4, free=False)
        defect = hopf.coassociativity_defect(a)
        if not rec.check(f"case {case}: a={a}", defect.is_zero(),
                         None if defect.is_zero() else f"defect {defect}"):
            break
    rec.details["cases"] = opts.cases
    return rec.report()


# -- G2 ----------------------------------------------------------------------------

def _g2_check(fn) -> Callable[[VerifyOptions], VerificationReport]:
    def run(opts: VerifyOptions) -> VerificationReport:
        return fn(printed=opts.printed)
    run.__doc__ = fn.__doc__
    return run


REGISTRY: dict[str, Callable[[VerifyOptions], VerificationReport]] = {
    **{name: _family_check(name) for name in _FAMILIES},
    "alpha": check_alpha,
    "pol": check_pol,
    "qpascal": check_qpascal,
    "exm": check_exm,
    "kmm": check_kmm,
    "spro": check_spro,
    "proc": check_proc,
    "shuffle-assoc": check_shuffle_assoc,
    "omega-mult": check_omega_mult,
    "braided-compat": check_braided_compat,
    "delta-mult": check_delta_mult,
    "coassoc": check_coassoc,
    "serre-kernel": _g2_check(g2.verify_serre_kernel),
    "leq": _g2_check(g2.verify_lemma_leq),
    "basis-change": _g2_check(g2.verify_basis_change),
    "c5": _g2_check(g2.verify_theorem_c5),
}

IDENTITIES = tuple(REGISTRY)


def run_identity(name: str, opts: VerifyOptions | None = None) -> VerificationReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)} or all")
    return REGISTRY[name](opts or VerifyOptions())


def run_all(opts: VerifyOptions | None = None, names=None) -> list[VerificationReport]:
    opts = opts or VerifyOptions()
    return [run_identity(n, opts) for n in (names or IDENTITIES)]


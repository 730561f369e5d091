"""
Character formulas.  Every evaluator returns e^rho R * ch L as a W-skew
quotient: an Alternant numerator over a W-invariant product of binomials
(1 + e^{-(e_i - d_j)}).  ``extract_character`` turns such a value into ch L.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arcdiag import ArcDiagram, interval_property, lambda_up_and_val, shorten, special_direct, standard_diagram
from .exactring import (
    Alternant,
    DenFactor,
    InexactDivisionError,
    LaurentPoly,
    RationalChar,
    _cancel,
    alternant_quotients_equal,
    den_product,
    divide_binomial,
    exact_divide,
    exp_add,
    exp_from_weight,
    exp_neg,
    exp_sub,
    expand_truncated,
    inversions,
    level,
    oriented_factor,
    skew_symmetrize_alternant,
    straighten,
    weyl_group,
)
from .roots import (
    E,
    PreconditionError,
    RhoWeight,
    Root,
    SimpleRootSystem,
    positive_roots,
    rho,
    s_norm,
    standard_atypical_set,
)
from .weightdiag import enumerate_paths, enumerate_sources, from_weight_diagram, kl_polynomial, to_weight_diagram


class ConsistencyError(ArithmeticError):
    """An internal exactness check failed."""


class CharacterError(ValueError):
    """The value is not e^rho R times a character."""


@dataclass
class FormulaResult:
    """e^rho R * ch L as alt / prod(den)."""

    formula: str
    m: int
    n: int
    alt: Alternant
    den: list
    lambda_rho: RhoWeight | None = None
    pi: SimpleRootSystem | None = None
    S: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def value(self) -> RationalChar:
        return RationalChar(self.alt.to_poly(), self.den)

    def equals(self, other: "FormulaResult") -> bool:
        return alternant_quotients_equal(self.alt, self.den, other.alt, other.den)

    def to_json(self):
        v = self.value
        return {
            "formula": self.formula,
            "m": self.m,
            "n": self.n,
            "pi": self.pi.to_string() if self.pi else None,
            "lambda_rho": self.lambda_rho.to_json() if self.lambda_rho else None,
            "S": [str(r) for r in self.S],
            "value": {
                "num": str(v.num),
                "den": [{"sign": f.sign, "gamma": list(f.gamma)} for f in v.den],
                "unit": list(v.unit),
            },
            "meta": {k: v for k, v in self.meta.items() if isinstance(v, (int, str, bool, list, type(None)))},
        }


def _odd_factor(beta: Root, m: int, n: int):
    """(1 + e^{-beta}) as a (sign, gamma) pair."""
    return (-1, beta.exponent(m, n))


def _symmetrize(num: LaurentPoly, factors, scale: int = 1, divisor: int = 1):
    X = RationalChar.build(num, factors)
    A, Dstar = skew_symmetrize_alternant(X)
    terms = {}
    for e, c in A.terms.items():
        q, r = divmod(c * scale, divisor)
        if r:
            raise ConsistencyError(f"alternating sum not divisible by {divisor}")
        terms[e] = q
    return Alternant(A.m, A.n, terms), Dstar


def _mono(lr: RhoWeight) -> LaurentPoly:
    return LaurentPoly.monomial(lr.m, lr.n, lr.exponent())


def weyl_denominator(pi: SimpleRootSystem) -> RationalChar:
    """e^rho R = e^rho prod(1 - e^-alpha) / prod(1 + e^-beta)."""
    m, n = pi.m, pi.n
    even, odd = positive_roots(pi)
    num = LaurentPoly.monomial(m, n, rho(pi).exponent())
    for a in even:
        num = num * LaurentPoly(m, n, {(0,) * (m + n): 1, exp_neg(a.exponent(m, n)): -1})
    return RationalChar.build(num, [_odd_factor(b, m, n) for b in odd])


def kac_numerator(lr: RhoWeight) -> LaurentPoly:
    """F_W(e^{lambda^rho})."""
    return Alternant.from_poly(_mono(lr)).to_poly()


def kac_result(lr: RhoWeight) -> FormulaResult:
    return FormulaResult("kac", lr.m, lr.n, Alternant.from_poly(_mono(lr)), [], lr)


def kw_from_data(pi: SimpleRootSystem, lr: RhoWeight, S: Sequence[Root], formula="kw") -> FormulaResult:
    """(1/r!) F_W(e^{lambda^rho} / prod_S (1 + e^-beta))."""
    S = list(S)
    alt, den = _kw_quotient(lr, tuple(S))
    return FormulaResult(formula, lr.m, lr.n, alt, list(den), lr, pi, S, {"r": len(S)})


@lru_cache(maxsize=2048)
def _kw_quotient(lr: RhoWeight, S: tuple):
    m, n = lr.m, lr.n
    alt, den = _symmetrize(_mono(lr), [_odd_factor(b, m, n) for b in S], 1, math.factorial(len(S)))
    return alt, tuple(den)


def kw_formula(d: ArcDiagram) -> FormulaResult:
    if not d.is_admissible():
        raise PreconditionError("diagram is not admissible")
    pi, lr, S = d.data()
    return kw_from_data(pi, lr, S)


def _raised_sign(lr: RhoWeight, S: Sequence[Root]):
    up, val = lambda_up_and_val(lr, S)
    k = val(up - lr)
    if k.denominator != 1 or k < 0:
        raise ConsistencyError("raised weight differs by a non-integral or negative amount")
    return up, int(k)


def _require_tc(lr: RhoWeight):
    if not interval_property(standard_diagram(lr)):
        raise PreconditionError("weight is not totally connected")


def su_zhang(lr_st: RhoWeight, S: Sequence[Root] | None = None) -> FormulaResult:
    """((-1)^{|up - lambda^rho|_S} / r!) F_W(e^{up} / prod_S (1 + e^-beta))."""
    _require_tc(lr_st)
    if S is None:
        S = standard_atypical_set(lr_st)
    S = list(S)
    m, n = lr_st.m, lr_st.n
    up, k = _raised_sign(lr_st, S)
    sign = -1 if k % 2 else 1
    alt, den = _symmetrize(_mono(up), [_odd_factor(b, m, n) for b in S], sign, math.factorial(len(S)))
    pi = SimpleRootSystem.standard(m, n)
    return FormulaResult("su_zhang", m, n, alt, den, lr_st, pi, S, {"r": len(S), "valuation": k})


def nested_order(S: Iterable[Root], lr: RhoWeight) -> list[Root]:
    """Standard-order arcs sorted increasingly: innermost (smallest entry) first."""
    return sorted(S, key=lambda r: lr.entry(r.plus))


def nested_formula(lr_st: RhoWeight, S: Sequence[Root] | None = None) -> FormulaResult:
    """(-1)^{|up - lambda^rho|_S} F_W(e^{up} / prod_k (1 - (-1)^k e^{-(beta_1 + ... + beta_k)})).

    Expanding the denominator sums (-1)^{sum m_i} e^{up - sum m_i beta_i} over
    m_1 >= ... >= m_r >= 0; terms with a repeated m_i vanish under F_W, and the
    sign converts |up - nu|_S into |lambda^rho - nu|_S.
    """
    _require_tc(lr_st)
    if S is None:
        S = standard_atypical_set(lr_st)
    m, n = lr_st.m, lr_st.n
    betas = nested_order(S, lr_st)
    up, k = _raised_sign(lr_st, betas)
    sign = -1 if k % 2 else 1
    factors = []
    acc = (0,) * (m + n)
    for i, b in enumerate(betas, start=1):
        acc = exp_add(acc, b.exponent(m, n))
        factors.append(((-1) ** i, acc))
    alt, den = _symmetrize(_mono(up), factors, sign)
    pi = SimpleRootSystem.standard(m, n)
    return FormulaResult("nested", m, n, alt, den, lr_st, pi, betas, {"r": len(betas), "valuation": k})


def stepwise_formula(d: ArcDiagram, step: int | None = None) -> FormulaResult:
    """The raised-weight formula evaluated on one diagram of the shortening sequence."""
    pi, lr, S = d.data()
    m, n = lr.m, lr.n
    up, k = _raised_sign(lr, S)
    sign = -1 if k % 2 else 1
    alt, den = _symmetrize(_mono(up), [_odd_factor(b, m, n) for b in S], sign, math.factorial(len(S)))
    return FormulaResult("stepwise", m, n, alt, den, lr, pi, S, {"r": len(S), "valuation": k, "step": step})


def stepwise_all(lr_st: RhoWeight) -> list[FormulaResult]:
    return [stepwise_formula(d, k) for k, d in enumerate(shorten(standard_diagram(lr_st)))]


# -- determinantal formula ---------------------------------------------------------


@dataclass(frozen=True)
class SpecialShape:
    p: int
    t: int
    q: int
    s: int
    r: int
    z: int | None
    a: tuple
    b: tuple

    @property
    def m(self):
        return self.p + self.t + self.r

    @property
    def n(self):
        return self.q + self.s + self.r


def special_shape(d: ArcDiagram) -> SpecialShape:
    """Read (p, t, q, s, r, z, a, b) off a special diagram."""
    from .arcdiag import is_special

    if not is_special(d):
        raise PreconditionError("diagram is not special")
    spans = d.arc_positions()
    kinds = [d.kind(k) for k in range(len(d))]
    if not spans:
        a = tuple(d.entries[k] for k in range(len(d)) if kinds[k] == E)
        b = tuple(d.entries[k] for k in range(len(d)) if kinds[k] != E)
        return SpecialShape(len(a), 0, 0, len(b), 0, None, a, b)
    lo, hi = spans[0][0], spans[-1][1]
    left = range(0, lo)
    right = range(hi + 1, len(d))
    lb = [d.entries[k] for k in left if kinds[k] == E]
    lx = [d.entries[k] for k in left if kinds[k] != E]
    rb = [d.entries[k] for k in right if kinds[k] == E]
    rx = [d.entries[k] for k in right if kinds[k] != E]
    return SpecialShape(len(lb), len(rb), len(lx), len(rx), len(spans), d.entries[lo], tuple(lb + rb), tuple(lx + rx))


def _z_entry(m, n, i, j, z):
    """x_i^z y_j^z / (1 + (x_i y_j)^-1) as (numerator monomial, factor)."""
    e = [0] * (m + n)
    e[i] = 2 * z
    e[m + j] = 2 * z
    g = [0] * (m + n)
    g[i] = 2
    g[m + j] = 2
    return LaurentPoly.monomial(m, n, tuple(e)), DenFactor(tuple(g), -1)


def _x_mono(m, n, i, k):
    e = [0] * (m + n)
    e[i] = 2 * k
    return LaurentPoly.monomial(m, n, tuple(e))


def _y_mono(m, n, j, k):
    e = [0] * (m + n)
    e[m + j] = 2 * k
    return LaurentPoly.monomial(m, n, tuple(e))


def determinant_matrix(shape: SpecialShape):
    """Entries of [[X, Z], [0, Y]]; Z entries are (numerator, DenFactor) pairs, others LaurentPoly."""
    m, n, r = shape.m, shape.n, shape.r
    N = m + n - r
    rows = []
    for i in range(m):
        row = [_x_mono(m, n, i, shape.a[j]) for j in range(m - r)]
        for j in range(n):
            row.append(_z_entry(m, n, i, j, shape.z) if r else LaurentPoly.zero(m, n))
        rows.append(row)
    for i in range(n - r):
        row = [LaurentPoly.zero(m, n) for _ in range(m - r)]
        row += [_y_mono(m, n, j, shape.b[i]) for j in range(n)]
        rows.append(row)
    assert all(len(rw) == N for rw in rows)
    return rows


def cleared_matrix(shape: SpecialShape):
    """Multiply row i < m by prod_j (1 + (x_i y_j)^-1); returns (polynomial matrix, factors used)."""
    m, n, r = shape.m, shape.n, shape.r
    rows = determinant_matrix(shape)
    if r == 0:
        return rows, []
    out, factors = [], []
    for i, row in enumerate(rows):
        if i >= m:
            out.append(row)
            continue
        fs = [_z_entry(m, n, i, j, 0)[1] for j in range(n)]
        factors.extend(fs)
        full = den_product(fs, m, n)
        new = []
        for j, ent in enumerate(row):
            if isinstance(ent, tuple):
                mono, f = ent
                others = [g for g in fs if g != f]
                new.append(mono * den_product(others, m, n))
            else:
                new.append(ent * full)
        out.append(new)
    return out, factors


def bareiss_det(M: list) -> LaurentPoly:
    """Fraction-free determinant over the Laurent ring (exact divisions)."""
    from .exactring import poly_divide

    A = [list(r) for r in M]
    N = len(A)
    if N == 0:
        raise ValueError("empty matrix")
    m, n = A[0][0].m, A[0][0].n
    sign = 1
    prev = LaurentPoly.one(m, n)
    for k in range(N - 1):
        # full pivoting on the sparsest entry keeps intermediate sizes down
        cands = [(len(A[i][j]), i, j) for i in range(k, N) for j in range(k, N) if not A[i][j].is_zero()]
        if not cands:
            return LaurentPoly.zero(m, n)
        _, pi_, pj = min(cands)
        if pi_ != k:
            A[k], A[pi_] = A[pi_], A[k]
            sign = -sign
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        for i in range(k + 1, N):
            for j in range(k + 1, N):
                A[i][j] = poly_divide(A[k][k] * A[i][j] - A[i][k] * A[k][j], prev)
            A[i][k] = LaurentPoly.zero(m, n)
        prev = A[k][k]
    return A[N - 1][N - 1] * sign


def leibniz_det(M: list) -> LaurentPoly:
    """Plain permutation expansion, used as a cross-check for small matrices."""
    import itertools

    N = len(M)
    m, n = M[0][0].m, M[0][0].n
    total = LaurentPoly.zero(m, n)
    for perm in itertools.permutations(range(N)):
        term = LaurentPoly.one(m, n)
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if term.is_zero():
                break
        if not term.is_zero():
            total = total + (-term if inversions(perm) % 2 else term)
    return total


def block_permutation_sign(shape: SpecialShape) -> tuple[int, int, int]:
    """Lengths of the permutations u, v relating the diagonal product to t_lambda.

    Returns (l(u), l(v), sign).  u moves the r atypical x-variables past the t
    right-hand typical ones; v moves the r atypical y-variables past the q
    left-hand typical ones.
    """
    p, t, q, s, r = shape.p, shape.t, shape.q, shape.s, shape.r
    # target index (in the diagonal product) of each x-variable of t_lambda
    u = list(range(p)) + [p + t + k for k in range(r)] + [p + k for k in range(t)]
    v = [r + k for k in range(q)] + [k for k in range(r)] + [q + r + k for k in range(s)]
    lu, lv = inversions(u), inversions(v)
    return lu, lv, (-1) ** (lu + lv)


def symmetrized_leibniz(shape: SpecialShape) -> FormulaResult:
    """(1/r!) F_W of the diagonal product of [[X, Z], [0, Y]]."""
    m, n, r = shape.m, shape.n, shape.r
    num = LaurentPoly.one(m, n)
    factors = []
    for i in range(m - r):
        num = num * _x_mono(m, n, i, shape.a[i])
    for k in range(r):
        mono, f = _z_entry(m, n, m - r + k, k, shape.z)
        num = num * mono
        factors.append((f.sign, f.gamma))
    for j in range(n - r):
        num = num * _y_mono(m, n, r + j, shape.b[j])
    alt, den = _symmetrize(num, factors, 1, math.factorial(r))
    return FormulaResult("symmetrized_leibniz", m, n, alt, den, meta={"r": r})


def determinant_value(shape: SpecialShape, method: str = "bareiss") -> FormulaResult:
    """det [[X, Z], [0, Y]] as a quotient (no sign applied)."""
    M, factors = cleared_matrix(shape)
    det = bareiss_det(M) if method == "bareiss" else leibniz_det(M)
    alt = Alternant.from_skew(det)
    return FormulaResult("det", shape.m, shape.n, alt, sorted(factors), meta={"r": shape.r})


def block_kw(shape: SpecialShape) -> FormulaResult:
    """(1/r!) F_W(t) with t = e^{lambda^rho} / prod_S (1 + e^{-beta}) in block order."""
    m, n, r, z = shape.m, shape.n, shape.r, shape.z
    p, q = shape.p, shape.q
    xa = list(shape.a[:p]) + [z] * r + list(shape.a[p:])
    yb = list(shape.b[:q]) + [z] * r + list(shape.b[q:])
    num = LaurentPoly.monomial(m, n, exp_from_weight(xa, yb))
    factors = [(-1, _z_entry(m, n, p + k, q + k, 0)[1].gamma) for k in range(r)]
    alt, den = _symmetrize(num, factors, 1, math.factorial(r))
    return FormulaResult("block_kw", m, n, alt, den, meta={"r": r})


def oracle_sign(shape: SpecialShape) -> int:
    """The sign s with symmetrized_leibniz = s * block_kw, found by comparison."""
    sl, kw = symmetrized_leibniz(shape), block_kw(shape)
    if sl.equals(kw):
        return 1
    neg = Alternant(kw.m, kw.n, {e: -c for e, c in kw.alt.terms.items()})
    if alternant_quotients_equal(sl.alt, sl.den, neg, kw.den):
        return -1
    raise ConsistencyError("symmetrized Leibniz sum is not +-1 times the Kac-Wakimoto sum")


def determinantal(d_or_shape, method: str = "bareiss") -> FormulaResult:
    """sign * det [[X, Z], [0, Y]].

    The determinant is checked against the symmetrized Leibniz sum, and the
    sign is the one relating that sum to the Kac-Wakimoto sum.  The sign
    predicted by the block permutation lengths r*t and r*q is recorded beside it.
    """
    shape = d_or_shape if isinstance(d_or_shape, SpecialShape) else special_shape(d_or_shape)
    det = determinant_value(shape, method)
    if not det.equals(symmetrized_leibniz(shape)):
        raise ConsistencyError("determinant differs from the symmetrized Leibniz sum")
    sign = oracle_sign(shape)
    lu, lv, psign = block_permutation_sign(shape)
    printed = (-1) ** (shape.r * (shape.t + shape.q))
    alt = Alternant(det.m, det.n, {e: sign * c for e, c in det.alt.terms.items()})
    meta = {
        "r": shape.r,
        "sign": sign,
        "len_u": lu,
        "len_v": lv,
        "permutation_sign": psign,
        "printed_sign": printed,
        "printed_sign_matches": printed == sign,
    }
    lr = None
    pi = None
    S: list = []
    if isinstance(d_or_shape, ArcDiagram):
        pi, lr, S = d_or_shape.data()
    return FormulaResult("determinantal", shape.m, shape.n, alt, det.den, lr, pi, S, meta)


# -- truncated Kazhdan-Lusztig sum ---------------------------------------------------


def truncated_kl_char(lr_st: RhoWeight, V: int) -> LaurentPoly:
    """Sum over sources mu within valuation V of K_{lambda,mu}(-1) F_W(e^{mu^rho})."""
    Dl = to_weight_diagram(lr_st)
    total = Alternant(lr_st.m, lr_st.n, {})
    terms: dict = {}
    for Dm in enumerate_sources(Dl, V):
        k = kl_polynomial(Dl, Dm)(-1)
        if not k:
            continue
        mu = from_weight_diagram(Dm)
        s, dom = straighten(mu.exponent(), mu.m)
        if s:
            terms[dom] = terms.get(dom, 0) + s * k
    total = Alternant(lr_st.m, lr_st.n, terms)
    return total.to_poly()


def expand_result(fr: FormulaResult, V: int, top: int | None = None) -> LaurentPoly:
    return expand_truncated(fr.value, V, top)


# -- character extraction -------------------------------------------------------------


def extract_character(fr: FormulaResult, pi: SimpleRootSystem | None = None, check: bool = True) -> LaurentPoly:
    """ch L from e^rho R * ch L."""
    pi = pi or fr.pi
    if pi is None:
        raise PreconditionError("a simple root system is needed")
    m, n = fr.m, fr.n
    wd = weyl_denominator(pi)
    # ch L = (alt / den) * (e^unit * oddden) / (e^rho * prod even)
    extra_num, extra_den = _cancel(wd.den, fr.den)
    P = fr.alt.to_poly() * den_product(extra_num, m, n)
    try:
        for f in extra_den:
            P = divide_binomial(P, f.sign, f.gamma)
        even, _ = positive_roots(pi)
        for a in even:
            P = divide_binomial(P, 1, a.exponent(m, n))
    except InexactDivisionError as exc:
        raise CharacterError(f"value is not e^rho R times a character: {exc}") from exc
    P = P.shift(exp_sub(wd.unit, rho(pi).exponent()))
    if check and fr.lambda_rho is not None:
        lam = fr.lambda_rho - rho(pi)
        check_character(P, lam, pi)
    return P


def check_character(P: LaurentPoly, lam: RhoWeight, pi: SimpleRootSystem) -> None:
    if not is_w_invariant(P):
        raise CharacterError("character is not W-invariant")
    top = lam.exponent()
    if P[top] != 1:
        raise CharacterError(f"coefficient at the highest weight is {P[top]}, expected 1")
    for e, c in P.items():
        if c < 0:
            raise CharacterError("negative multiplicity")
        if not in_negative_cone(exp_sub(top, e), pi):
            raise CharacterError("weight outside lambda - Q+")


def is_w_invariant(P: LaurentPoly) -> bool:
    # adjacent transpositions generate W
    m, n = P.m, P.n
    gens = []
    for i in range(m - 1):
        s = list(range(m))
        s[i], s[i + 1] = s[i + 1], s[i]
        gens.append((tuple(s), tuple(range(n))))
    for j in range(n - 1):
        t = list(range(n))
        t[j], t[j + 1] = t[j + 1], t[j]
        gens.append((tuple(range(m)), tuple(t)))
    from .exactring import WeylElement

    return all(P.act(WeylElement(s, t)) == P for s, t in gens)


def in_negative_cone(diff, pi: SimpleRootSystem) -> bool:
    """diff (doubled exponent) is a nonnegative combination of the simple roots of pi."""
    m = pi.m
    coeffs = []
    for kind, idx in pi.order:
        if kind == E:
            coeffs.append(Fraction(diff[idx - 1], 2))
        else:
            coeffs.append(-Fraction(diff[m + idx - 1], 2))
    acc = Fraction(0)
    for c in coeffs[:-1]:
        acc += c
        if acc < 0 or acc.denominator != 1:
            return False
    return acc + coeffs[-1] == 0


def determinant_sign_audit(shape: SpecialShape, xs=None, ys=None) -> dict:
    """Compare det [[X, Z], [0, Y]] with the Kac-Wakimoto sum at a rational point.

    Here x_i = e^{e_i} and y_j = e^{-d_j}.  The Kac-Wakimoto side is
    (1/r!) sum_w sign(w) w(t) with t = e^{lambda^rho} / prod_S (1 + e^{-beta})
    in the block order (left bullets, atypical, right bullets).
    """
    import itertools

    m, n, r, z = shape.m, shape.n, shape.r, shape.z
    xs = [Fraction(2 + k, 1 + 2 * k) for k in range(m)] if xs is None else [Fraction(x) for x in xs]
    ys = [Fraction(3 + 2 * k, 5 + k) for k in range(n)] if ys is None else [Fraction(y) for y in ys]

    def zval(x, y):
        return (x * y) ** z / (1 + 1 / (x * y))

    N = m + n - r
    M = [[Fraction(0)] * N for _ in range(N)]
    for i in range(m):
        for j in range(m - r):
            M[i][j] = xs[i] ** shape.a[j]
        for j in range(n):
            M[i][m - r + j] = zval(xs[i], ys[j]) if r else Fraction(0)
    for i in range(n - r):
        for j in range(n):
            M[m + i][m - r + j] = ys[j] ** shape.b[i]
    det = _fraction_det(M)

    # t_lambda in block order
    p, t, q = shape.p, shape.t, shape.q
    xa = list(shape.a[:p]) + [z] * r + list(shape.a[p:])
    yb = list(shape.b[:q]) + [z] * r + list(shape.b[q:])
    pairs = [(p + k, q + k) for k in range(r)]

    def t_value(X, Y):
        v = Fraction(1)
        for i in range(m):
            v *= X[i] ** xa[i]
        for j in range(n):
            v *= Y[j] ** yb[j]
        for i, j in pairs:
            v /= 1 + 1 / (X[i] * Y[j])
        return v

    kw = Fraction(0)
    for sp in itertools.permutations(range(m)):
        sx = -1 if inversions(sp) % 2 else 1
        X = [xs[sp[i]] for i in range(m)]
        for tp in itertools.permutations(range(n)):
            sy = -1 if inversions(tp) % 2 else 1
            Y = [ys[tp[j]] for j in range(n)]
            kw += sx * sy * t_value(X, Y)
    kw /= math.factorial(r)
    lu, lv, sign = block_permutation_sign(shape)
    ratio = det / kw if kw else None
    return {
        "det": det,
        "kw": kw,
        "ratio": ratio,
        "permutation_sign": sign,
        "printed_sign": (-1) ** (r * (t + q)),
        "consistent": ratio == sign,
    }


def _fraction_det(M) -> Fraction:
    A = [row[:] for row in M]
    N = len(A)
    det = Fraction(1)
    for k in range(N):
        piv = next((i for i in range(k, N) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, N):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, N):
                    A[i][j] -= f * A[k][j]
    return det

"""
Exact arithmetic in the group ring of the gl(m|n) weight lattice.

A monomial e^nu with nu = sum eps_i e_i - sum del_j d_j is written
x_1^eps_1 ... x_m^eps_m y_1^del_1 ... y_n^del_n  (x_i = e^{e_i}, y_j = e^{-d_j}).
Exponents may be half-integers, so every exponent vector is stored as a
tuple of *doubled* integers of length m + n.

Elements of the localization are RationalChar objects
    num / (e^unit * prod (1 - sign * e^{-gamma}))
and are compared by cross-multiplication.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

Exp = tuple  # doubled-integer exponent vector


class DimensionError(ValueError):
    """Operands live over different (m, n)."""


class InexactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""

    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class OrientationError(ValueError):
    """A denominator factor is not oriented for geometric expansion."""


# ----------------------------------------------------------------------------
# exponent vectors


def exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def exp_neg(a: Exp) -> Exp:
    return tuple(-x for x in a)


def exp_scale(k: int, a: Exp) -> Exp:
    return tuple(k * x for x in a)


def exp_from_weight(a: Sequence, b: Sequence) -> Exp:
    """Doubled exponent vector of e^{sum a_i e_i - sum b_j d_j}."""
    out = []
    for v in itertools.chain(a, b):
        d = Fraction(v) * 2
        if d.denominator != 1:
            raise ValueError(f"entry {v} is not a half-integer")
        out.append(int(d))
    return tuple(out)


def exp_to_weight(e: Exp, m: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    vals = tuple(Fraction(x, 2) for x in e)
    return vals[:m], vals[m:]


def level(e: Exp) -> int:
    """Grading used for truncated expansions (doubled units)."""
    return sum(e)


def is_canonical_gamma(gamma: Exp) -> bool:
    return all(x >= 0 for x in gamma) and any(x > 0 for x in gamma)


def expansion_weight(gamma: Exp) -> int:
    """Expansion order contributed by one power of e^{-gamma}.

    A single odd root e_i - d_j has weight 1.
    """
    s = sum(gamma)
    if not is_canonical_gamma(gamma) or s % 4:
        raise OrientationError(f"factor exponent {gamma} cannot be expanded")
    return s // 4


# ----------------------------------------------------------------------------
# Weyl group Sym_m x Sym_n


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


@dataclass(frozen=True)
class WeylElement:
    """w = (sigma, tau) acting by e_i -> e_sigma(i), d_j -> d_tau(j).

    Permutations are 0-based tuples in one-line notation.
    """

    sigma: tuple
    tau: tuple

    @classmethod
    def identity(cls, m, n):
        return cls(tuple(range(m)), tuple(range(n)))

    @property
    def length(self) -> int:
        return inversions(self.sigma) + inversions(self.tau)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act_exp(self, e: Exp) -> Exp:
        m = len(self.sigma)
        out = [0] * len(e)
        for i, s in enumerate(self.sigma):
            out[s] = e[i]
        for j, t in enumerate(self.tau):
            out[m + t] = e[m + j]
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(i) = self(other(i))
        return WeylElement(
            tuple(self.sigma[i] for i in other.sigma),
            tuple(self.tau[j] for j in other.tau),
        )

    def inverse(self) -> "WeylElement":
        sig = [0] * len(self.sigma)
        for i, s in enumerate(self.sigma):
            sig[s] = i
        tau = [0] * len(self.tau)
        for j, t in enumerate(self.tau):
            tau[t] = j
        return WeylElement(tuple(sig), tuple(tau))


@lru_cache(maxsize=None)
def _signed_perms(k: int) -> tuple:
    return tuple((p, -1 if inversions(p) % 2 else 1) for p in itertools.permutations(range(k)))


def weyl_group(m: int, n: int) -> Iterator[WeylElement]:
    for s, _ in _signed_perms(m):
        for t, _ in _signed_perms(n):
            yield WeylElement(s, t)


# ----------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Finitely supported element of Z[weight lattice], immutable."""

    __slots__ = ("m", "n", "_terms", "_hash")

    def __init__(self, m: int, n: int, terms: Mapping[Exp, int] | Iterable = ()):
        self.m = m
        self.n = n
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        d: dict = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != m + n:
                raise DimensionError(f"exponent {e} has length {len(e)}, expected {m + n}")
            d[e] = d.get(e, 0) + c
        self._terms = {e: c for e, c in d.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def _raw(cls, m, n, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.m, obj.n = m, n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, m, n):
        return cls._raw(m, n, {})

    @classmethod
    def one(cls, m, n):
        return cls._raw(m, n, {(0,) * (m + n): 1})

    @classmethod
    def monomial(cls, m, n, e: Exp, c: int = 1):
        return cls(m, n, {tuple(e): c})

    @classmethod
    def from_weight(cls, a, b, c: int = 1):
        return cls.monomial(len(a), len(b), exp_from_weight(a, b), c)

    # container protocol
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, e: Exp) -> int:
        return self._terms.get(tuple(e), 0)

    def coefficient(self, e: Exp) -> int:
        return self._terms.get(tuple(e), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "LaurentPoly"):
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionError(f"ambient mismatch ({self.m}|{self.n}) vs ({other.m}|{other.n})")

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                return self == LaurentPoly.one(self.m, self.n) * other
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, self.n, frozenset(self._terms.items())))
        return self._hash

    # ring operations
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self.m, self.n) * other
        self._check(other)
        d = dict(self._terms)
        for e, c in other._terms.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return LaurentPoly._raw(self.m, self.n, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.m, self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self.m, self.n) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.m, self.n)
            return LaurentPoly._raw(self.m, self.n, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.m, self.n, {e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.one(self.m, self.n)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e: Exp) -> "LaurentPoly":
        """Multiply by the monomial e^e."""
        return LaurentPoly._raw(self.m, self.n, {exp_add(k, e): c for k, c in self._terms.items()})

    def exact_int_div(self, k: int) -> "LaurentPoly":
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise InexactDivisionError(f"coefficient {c} not divisible by {k}")
            out[e] = q
        return LaurentPoly._raw(self.m, self.n, out)

    def act(self, w: WeylElement) -> "LaurentPoly":
        return LaurentPoly._raw(self.m, self.n, {w.act_exp(e): c for e, c in self._terms.items()})

    def restrict(self, pred) -> "LaurentPoly":
        return LaurentPoly._raw(self.m, self.n, {e: c for e, c in self._terms.items() if pred(e)})

    def top_level(self) -> int:
        return max(level(e) for e in self._terms)

    def at_one(self) -> int:
        """Evaluation at x = y = 1."""
        return sum(self._terms.values())

    # printing / parsing
    def var_names(self):
        return [f"x{i + 1}" for i in range(self.m)] + [f"y{j + 1}" for j in range(self.n)]

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self.m}, {self.n}, {str(self)!r})"


def _fmt_exp(d: int) -> str:
    if d % 2 == 0:
        return str(d // 2)
    return f"({d}/2)"


def format_monomial(e: Exp, names) -> str:
    parts = []
    for name, d in zip(names, e):
        if d == 0:
            continue
        parts.append(name if d == 2 else f"{name}^{_fmt_exp(d)}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    names = p.var_names()
    out = []
    for e, c in sorted(p._terms.items(), reverse=True):
        mono = format_monomial(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+(?:\^\(?-?\d+(?:/2)?\)?)?(?:\*[^+\s]+)*)")
_FACTOR_RE = re.compile(r"^([xy])(\d+)(?:\^(?:\((-?\d+)/2\)|(-?\d+)))?$")


def parse_poly(s: str, m: int, n: int) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    s = s.strip()
    if s == "0":
        return LaurentPoly.zero(m, n)
    # split on top-level + and - that separate terms (never inside exponents)
    tokens = re.split(r"\s+([+-])\s+", s)
    signs = ["+"] + tokens[1::2]
    bodies = tokens[0::2]
    terms: dict = {}
    for sg, body in zip(signs, bodies):
        sign = -1 if sg == "-" else 1
        if body.startswith("-"):
            sign, body = -sign, body[1:]
        coeff = 1
        e = [0] * (m + n)
        for f in body.split("*"):
            if f.isdigit():
                coeff *= int(f)
                continue
            mt = _FACTOR_RE.match(f)
            if not mt:
                raise ValueError(f"cannot parse factor {f!r}")
            kind, idx, half, whole = mt.groups()
            pos = int(idx) - 1 + (0 if kind == "x" else m)
            e[pos] += int(half) if half is not None else (2 * int(whole) if whole is not None else 2)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + sign * coeff
    return LaurentPoly(m, n, terms)


def lp_combine(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if (a.m, a.n) != (b.m, b.n):
        raise DimensionError("ambient mismatch")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ----------------------------------------------------------------------------
# denominators


@dataclass(frozen=True, order=True)
class DenFactor:
    """The binomial (1 - sign * e^{-gamma})."""

    gamma: tuple
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not is_canonical_gamma(self.gamma):
            raise OrientationError(f"gamma {self.gamma} is not canonically oriented")

    def as_poly(self, m, n) -> LaurentPoly:
        return LaurentPoly(m, n, {(0,) * (m + n): 1, exp_neg(self.gamma): -self.sign})

    def act(self, w: WeylElement) -> "DenFactor":
        return DenFactor(w.act_exp(self.gamma), self.sign)

    def __str__(self):
        return f"(1 {'-' if self.sign == 1 else '+'} e^-{list(self.gamma)})"


def oriented_factor(sign: int, gamma: Exp):
    """Normalize (1 - sign e^{-gamma}) to (scalar, unit shift, DenFactor).

    1 - s e^{g} = (-s) e^{g} (1 - s e^{-g}), so a reversed factor contributes
    a sign to the numerator and e^{g} to the denominator unit.
    """
    gamma = tuple(gamma)
    if is_canonical_gamma(gamma):
        return 1, (0,) * len(gamma), DenFactor(gamma, sign)
    g = exp_neg(gamma)
    if not is_canonical_gamma(g):
        raise OrientationError(f"gamma {gamma} has mixed signs")
    return -sign, g, DenFactor(g, sign)


class RationalChar:
    """num / (e^unit * prod(den)), immutable; equality is cross-multiplication."""

    __slots__ = ("num", "den", "unit")

    def __init__(self, num: LaurentPoly, den: Iterable[DenFactor] = (), unit: Exp | None = None):
        self.num = num
        self.den = tuple(sorted(den))
        self.unit = tuple(unit) if unit is not None else (0,) * (num.m + num.n)

    @property
    def m(self):
        return self.num.m

    @property
    def n(self):
        return self.num.n

    @classmethod
    def build(cls, num: LaurentPoly, factors: Iterable[tuple[int, Exp]] = (), unit: Exp | None = None):
        """Construct from arbitrarily oriented (sign, gamma) binomials."""
        size = num.m + num.n
        unit = tuple(unit) if unit is not None else (0,) * size
        scalar = 1
        den = []
        for s, g in factors:
            c, shift, f = oriented_factor(s, g)
            scalar *= c
            unit = exp_add(unit, shift)
            den.append(f)
        return cls(num * scalar, den, unit)

    def act(self, w: WeylElement) -> "RationalChar":
        return RationalChar(self.num.act(w), (f.act(w) for f in self.den), w.act_exp(self.unit))

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalChar(self.num * other, self.den, self.unit)
        if isinstance(other, LaurentPoly):
            return RationalChar(self.num * other, self.den, self.unit)
        if isinstance(other, RationalChar):
            return RationalChar(self.num * other.num, self.den + other.den, exp_add(self.unit, other.unit))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return RationalChar(-self.num, self.den, self.unit)

    def __eq__(self, other):
        if not isinstance(other, RationalChar):
            return NotImplemented
        return rc_equal(self, other)

    __hash__ = None

    def __str__(self):
        den = " ".join(str(f) for f in self.den)
        u = ""
        if any(self.unit):
            u = format_monomial(self.unit, self.num.var_names()) + " "
        if not den and not u:
            return str(self.num)
        return f"({self.num}) / ({u}{den})".replace(" )", ")")

    def __repr__(self):
        return f"RationalChar({self})"


def weyl_act(w: WeylElement, X):
    return X.act(w)


def has_reflection_stabilizer(nu: Exp, m: int) -> bool:
    eps, dl = nu[:m], nu[m:]
    return len(set(eps)) < len(eps) or len(set(dl)) < len(dl)


# ----------------------------------------------------------------------------
# division


def divide_binomial(P: LaurentPoly, sign: int, gamma: Exp) -> LaurentPoly:
    """Exact quotient of P by (1 - sign * e^{-gamma}), gamma any nonzero vector.

    Works line by line along gamma: on each coset nu + Z*gamma the problem is
    one-variable synthetic division.
    """
    gamma = tuple(gamma)
    if not any(gamma):
        raise ValueError("gamma must be nonzero")
    # pick a coordinate to order each line by
    k = next(i for i, g in enumerate(gamma) if g)
    gk = gamma[k]
    lines: dict = {}
    for e, c in P._terms.items():
        # t chosen so the base point has k-th coordinate in [0, |gk|)
        t = e[k] // gk if gk > 0 else -(e[k] // -gk)
        base = tuple(x - t * g for x, g in zip(e, gamma))
        lines.setdefault(base, {})[t] = c
    out: dict = {}
    for base, coeffs in lines.items():
        # P restricted to the line: sum_t c_t u^t with u = e^{gamma}; divide by (1 - s u^{-1})
        # Q(u) - s u^{-1} Q(u) = P(u)  =>  q_t = p_t + s q_{t+1}; solve from the top down
        hi = max(coeffs)
        lo = min(coeffs)
        q = {}
        carry = 0
        for t in range(hi, lo - 1, -1):
            cur = coeffs.get(t, 0) + sign * carry if t < hi else coeffs.get(t, 0)
            q[t] = cur
            carry = cur
        # exact iff the term below lo vanishes: the u^{lo-1} coefficient is -s q_lo
        if q[lo] != 0:
            raise InexactDivisionError(
                f"not divisible by (1 {'-' if sign == 1 else '+'} e^-{list(gamma)})",
                factor=(sign, gamma),
            )
        for t, c in q.items():
            if c:
                out[tuple(x + t * g for x, g in zip(base, gamma))] = c
    return LaurentPoly._raw(P.m, P.n, out)


def exact_divide(P: LaurentPoly, D: Iterable[DenFactor] = (), unit: Exp | None = None) -> LaurentPoly:
    """Q with Q * prod(D) * e^unit == P, or InexactDivisionError."""
    Q = P
    for f in D:
        Q = divide_binomial(Q, f.sign, f.gamma)
    if unit is not None:
        Q = Q.shift(exp_neg(unit))
    return Q


def poly_divide(P: LaurentPoly, D: LaurentPoly) -> LaurentPoly:
    """Exact quotient P / D for arbitrary Laurent polynomials.

    Leading-term division in lex order.  Every quotient exponent must lie in
    the coordinate box determined by the supports of P and D, which bounds the
    loop when the division is not exact.
    """
    P._check(D)
    if D.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if P.is_zero():
        return P
    if len(D) == 1:
        (e, c), = D._terms.items()
        return P.exact_int_div(c).shift(exp_neg(e)) if c != 1 else P.shift(exp_neg(e))
    size = P.m + P.n
    lo = [min(e[i] for e in P._terms) - min(e[i] for e in D._terms) for i in range(size)]
    hi = [max(e[i] for e in P._terms) - max(e[i] for e in D._terms) for i in range(size)]
    dlead = max(D._terms)
    dc = D._terms[dlead]
    rest = [(e, c) for e, c in D._terms.items() if e != dlead]
    R = dict(P._terms)
    Q: dict = {}
    while R:
        lead = max(R)
        c = R[lead]
        q, r = divmod(c, dc)
        qe = exp_sub(lead, dlead)
        if r or any(not (lo[i] <= qe[i] <= hi[i]) for i in range(size)):
            raise InexactDivisionError("polynomial division is not exact")
        Q[qe] = q
        del R[lead]
        for e, c2 in rest:
            k = exp_add(qe, e)
            v = R.get(k, 0) - q * c2
            if v:
                R[k] = v
            else:
                R.pop(k, None)
    return LaurentPoly._raw(P.m, P.n, Q)


def _cancel(a: Sequence[DenFactor], b: Sequence[DenFactor]):
    ca, cb = Counter(a), Counter(b)
    common = ca & cb
    return list((ca - common).elements()), list((cb - common).elements())


def den_product(D: Iterable[DenFactor], m: int, n: int) -> LaurentPoly:
    return _den_product(tuple(sorted(D)), m, n)


@lru_cache(maxsize=4096)
def _den_product(D: tuple, m: int, n: int) -> LaurentPoly:
    out = LaurentPoly.one(m, n)
    for f in D:
        out = out * f.as_poly(m, n)
    return out


def rc_equal(A: RationalChar, B: RationalChar) -> bool:
    if (A.m, A.n) != (B.m, B.n):
        raise DimensionError("ambient mismatch")
    da, db = _cancel(A.den, B.den)
    lhs = (A.num * den_product(db, A.m, A.n)).shift(B.unit)
    rhs = (B.num * den_product(da, A.m, A.n)).shift(A.unit)
    return lhs == rhs


# ----------------------------------------------------------------------------
# skew-symmetrization


def straighten(e: Exp, m: int):
    """(sign, dominant exponent) with F_W(e^e) = sign * F_W(e^dominant); sign 0 if F_W vanishes."""
    eps, dl = e[:m], e[m:]
    if len(set(eps)) < len(eps) or len(set(dl)) < len(dl):
        return 0, None
    sign = 1
    for block in (eps, dl):
        if inversions([-x for x in block]) % 2:
            sign = -sign
    return sign, tuple(sorted(eps, reverse=True)) + tuple(sorted(dl, reverse=True))


class Alternant:
    """Compact W-skew-invariant polynomial: sum of c * F_W(e^nu) over dominant nu.

    Here "dominant" means each block strictly decreasing.
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping[Exp, int]):
        self.m, self.n = m, n
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def from_poly(cls, P: LaurentPoly) -> "Alternant":
        """Alternant F_W(P) (P itself need not be skew-invariant)."""
        d: dict = {}
        for e, c in P._terms.items():
            s, dom = straighten(e, P.m)
            if s:
                d[dom] = d.get(dom, 0) + s * c
        return cls(P.m, P.n, d)

    @classmethod
    def from_skew(cls, P: LaurentPoly) -> "Alternant":
        """Alternant equal to P, for P already W-skew-invariant."""
        d: dict = {}
        for e, c in P._terms.items():
            s, dom = straighten(e, P.m)
            if s == 1 and dom == e:
                d[e] = c
        A = cls(P.m, P.n, d)
        if A.to_poly() != P:
            raise ValueError("polynomial is not W-skew-invariant")
        return A

    def times_symmetric(self, S: LaurentPoly) -> "Alternant":
        """F_W(N) * S = F_W(N * S) for W-invariant S."""
        d: dict = {}
        for e, c in self.terms.items():
            for e2, c2 in S._terms.items():
                s, dom = straighten(exp_add(e, e2), self.m)
                if s:
                    d[dom] = d.get(dom, 0) + s * c * c2
        return Alternant(self.m, self.n, d)

    def to_poly(self) -> LaurentPoly:
        d: dict = {}
        m = self.m
        for e, c in self.terms.items():
            for sp, ss in _signed_perms(self.m):
                for tp, ts in _signed_perms(self.n):
                    w = WeylElement(sp, tp)
                    d[w.act_exp(e)] = d.get(w.act_exp(e), 0) + ss * ts * c
        return LaurentPoly(m, self.n, d)

    def __eq__(self, other):
        return isinstance(other, Alternant) and (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"Alternant({self.m}, {self.n}, {len(self.terms)} terms)"


def orbit_denominator(den: Sequence[DenFactor], m: int, n: int) -> list[DenFactor]:
    """Smallest W-invariant multiset containing w(den) for every w."""
    best: Counter = Counter()
    for w in weyl_group(m, n):
        best |= Counter(f.act(w) for f in den)
    return sorted(best.elements())


def skew_symmetrize_alternant(X: RationalChar) -> tuple[Alternant, list[DenFactor]]:
    """F_W(X) as (alternant numerator, W-invariant denominator)."""
    m, n = X.m, X.n
    Dstar = orbit_denominator(X.den, m, n)
    extra, _ = _cancel(Dstar, X.den)
    N0 = (X.num * den_product(extra, m, n)).shift(exp_neg(X.unit))
    return Alternant.from_poly(N0), Dstar


def skew_symmetrize(X: RationalChar) -> RationalChar:
    """F_W(X) = sum_w (-1)^l(w) w(X) over a common W-invariant denominator."""
    A, Dstar = skew_symmetrize_alternant(X)
    return RationalChar(A.to_poly(), Dstar)


def alternant_quotients_equal(A: Alternant, DA: Sequence[DenFactor], B: Alternant, DB: Sequence[DenFactor]) -> bool:
    """A / prod(DA) == B / prod(DB), where both denominators are W-invariant."""
    da, db = _cancel(DA, DB)
    m, n = A.m, A.n
    return A.times_symmetric(den_product(db, m, n)) == B.times_symmetric(den_product(da, m, n))


# ----------------------------------------------------------------------------
# truncated geometric expansion


def expand_truncated(X: RationalChar, V: int, top: int | None = None) -> LaurentPoly:
    """Expand every 1/(1 - s e^{-gamma}) as a geometric series, keep order <= V.

    The order of a monomial e^nu is (top - level(nu)) / 4, where level is the
    sum of doubled exponents and top defaults to the highest level of the
    numerator; one power of e^{-(e_i - d_j)} has order 1.
    """
    if V < 0:
        raise ValueError("V must be nonnegative")
    for f in X.den:
        expansion_weight(f.gamma)
    P = X.num.shift(exp_neg(X.unit))
    if P.is_zero():
        return P
    if top is None:
        top = P.top_level()
    floor = top - 4 * V
    cur = {e: c for e, c in P._terms.items() if level(e) >= floor}
    for f in X.den:
        g, s = f.gamma, f.sign
        nxt: dict = {}
        for e, c in cur.items():
            k = 0
            coeff = c
            e2 = e
            while level(e2) >= floor:
                v = nxt.get(e2, 0) + coeff
                if v:
                    nxt[e2] = v
                else:
                    nxt.pop(e2, None)
                k += 1
                coeff *= s
                e2 = exp_sub(e2, g)
        cur = nxt
    return LaurentPoly._raw(X.m, X.n, cur)

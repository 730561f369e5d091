"""
Root data for gl(m|n).

A set of simple roots is stored as a shuffle order of the symbols
e1..em, d1..dn (``("e", i)`` and ``("d", j)``, 1-based).  Weights are written
lambda = sum a_i e_i - sum b_j d_j, so both a and b are "entries" in the
sense of arc diagrams, and the bilinear form gives (lambda, e_i - d_j) = a_i - b_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactring import exp_from_weight


class RootSystemError(ValueError):
    """Invalid simple root system or root."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class NormalizationError(ValueError):
    """No one-dimensional twist makes the weight integral."""


E, D = "e", "d"


def sym_str(s) -> str:
    return f"{'eps' if s[0] == E else 'del'}{s[1]}"


def _frac(x) -> Fraction:
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise ValueError(f"{x} is not a half-integer")
    return f


@dataclass(frozen=True)
class Root:
    """The root plus - minus, with plus/minus symbols like ("e", 1)."""

    plus: tuple
    minus: tuple

    @property
    def is_odd(self) -> bool:
        return self.plus[0] != self.minus[0]

    @property
    def is_even(self) -> bool:
        return not self.is_odd

    def __neg__(self):
        return Root(self.minus, self.plus)

    def coefficients(self, m: int, n: int):
        """Coefficient vectors (on e_i, on d_j) of the root."""
        ce, cd = [0] * m, [0] * n
        for s, v in ((self.plus, 1), (self.minus, -1)):
            (ce if s[0] == E else cd)[s[1] - 1] += v
        return ce, cd

    def as_entries(self, m: int, n: int):
        """(a, b) of the root in the lambda = sum a e - sum b d convention."""
        ce, cd = self.coefficients(m, n)
        return ce, [-c for c in cd]

    def exponent(self, m: int, n: int):
        a, b = self.as_entries(m, n)
        return exp_from_weight(a, b)

    def norm(self) -> int:
        """(alpha, alpha)."""
        if self.is_odd:
            return 0
        return 2 if self.plus[0] == E else -2

    def __str__(self):
        return f"{sym_str(self.plus)}-{sym_str(self.minus)}"


def odd_root(i: int, j: int) -> Root:
    """e_i - d_j."""
    return Root((E, i), (D, j))


@dataclass(frozen=True)
class RhoWeight:
    """lambda^rho = sum a_i e_i - sum b_j d_j, entries are Fractions."""

    a: tuple
    b: tuple

    def __init__(self, a: Iterable, b: Iterable):
        object.__setattr__(self, "a", tuple(_frac(x) for x in a))
        object.__setattr__(self, "b", tuple(_frac(x) for x in b))

    @property
    def m(self):
        return len(self.a)

    @property
    def n(self):
        return len(self.b)

    def entry(self, s) -> Fraction:
        return self.a[s[1] - 1] if s[0] == E else self.b[s[1] - 1]

    def with_entry(self, s, v) -> "RhoWeight":
        a, b = list(self.a), list(self.b)
        (a if s[0] == E else b)[s[1] - 1] = v
        return RhoWeight(a, b)

    def __add__(self, other: "RhoWeight") -> "RhoWeight":
        return RhoWeight([x + y for x, y in zip(self.a, other.a)], [x + y for x, y in zip(self.b, other.b)])

    def __sub__(self, other: "RhoWeight") -> "RhoWeight":
        return RhoWeight([x - y for x, y in zip(self.a, other.a)], [x - y for x, y in zip(self.b, other.b)])

    def add_root(self, r: Root, k=1) -> "RhoWeight":
        ra, rb = r.as_entries(self.m, self.n)
        return RhoWeight([x + k * y for x, y in zip(self.a, ra)], [x + k * y for x, y in zip(self.b, rb)])

    def pair(self, r: Root) -> Fraction:
        """(lambda, r) under (e_i, e_j) = delta_ij = -(d_i, d_j)."""
        ce, cd = r.coefficients(self.m, self.n)
        return sum(x * c for x, c in zip(self.a, ce)) + sum(y * c for y, c in zip(self.b, cd))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.a + self.b)

    def exponent(self):
        return exp_from_weight(self.a, self.b)

    def as_ints(self):
        if not self.is_integral():
            raise PreconditionError("entries are not integers")
        return [int(x) for x in self.a], [int(x) for x in self.b]

    def to_json(self):
        return {"a": [str(x) for x in self.a], "b": [str(x) for x in self.b]}

    @classmethod
    def from_json(cls, d) -> "RhoWeight":
        return cls([Fraction(x) for x in d["a"]], [Fraction(x) for x in d["b"]])

    def __str__(self):
        return f"a=({', '.join(map(str, self.a))}) b=({', '.join(map(str, self.b))})"


class SimpleRootSystem:
    """Simple roots as the shuffle order T of e- and d-symbols."""

    __slots__ = ("order", "m", "n", "_pos")

    def __init__(self, order: Sequence):
        order = tuple((str(k), int(i)) for k, i in order)
        es = [i for k, i in order if k == E]
        ds = [i for k, i in order if k == D]
        if any(k not in (E, D) for k, _ in order):
            raise RootSystemError("symbols must be e or d")
        if es != list(range(1, len(es) + 1)) or ds != list(range(1, len(ds) + 1)):
            raise RootSystemError("indices must increase along the order")
        self.order = order
        self.m, self.n = len(es), len(ds)
        self._pos = {s: k for k, s in enumerate(order)}

    @classmethod
    def from_string(cls, s: str) -> "SimpleRootSystem":
        s = s.strip()
        if set(s) - {"e", "d"}:
            raise RootSystemError(f"shuffle string {s!r} may only contain e and d")
        ci = {E: 0, D: 0}
        order = []
        for ch in s:
            ci[ch] += 1
            order.append((ch, ci[ch]))
        return cls(order)

    @classmethod
    def standard(cls, m: int, n: int) -> "SimpleRootSystem":
        return cls.from_string(E * m + D * n)

    def to_string(self) -> str:
        return "".join(k for k, _ in self.order)

    def position(self, s) -> int:
        return self._pos[s]

    def is_standard(self) -> bool:
        return self.to_string() == E * self.m + D * self.n

    def simple_roots(self) -> list[Root]:
        return [Root(self.order[k], self.order[k + 1]) for k in range(len(self.order) - 1)]

    def __eq__(self, other):
        return isinstance(other, SimpleRootSystem) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"SimpleRootSystem({self.to_string()!r})"


def positive_roots(pi: SimpleRootSystem) -> tuple[list[Root], list[Root]]:
    """(even positive roots, odd positive roots); g_i - g_j is positive iff i < j."""
    even, odd = [], []
    T = pi.order
    for i in range(len(T)):
        for j in range(i + 1, len(T)):
            r = Root(T[i], T[j])
            (odd if r.is_odd else even).append(r)
    return even, odd


def rho(pi: SimpleRootSystem) -> RhoWeight:
    """Half sum of even positive roots minus half sum of odd positive roots."""
    even, odd = positive_roots(pi)
    a = [Fraction(0)] * pi.m
    b = [Fraction(0)] * pi.n
    for roots, s in ((even, Fraction(1, 2)), (odd, Fraction(-1, 2))):
        for r in roots:
            ra, rb = r.as_entries(pi.m, pi.n)
            a = [x + s * y for x, y in zip(a, ra)]
            b = [x + s * y for x, y in zip(b, rb)]
    return RhoWeight(a, b)


def _check_simple_odd(pi: SimpleRootSystem, beta: Root) -> int:
    if not beta.is_odd:
        raise PreconditionError(f"{beta} is not odd")
    k = pi.position(beta.plus) if beta.plus in pi._pos else None
    if k is None or k + 1 >= len(pi.order) or pi.order[k + 1] != beta.minus:
        raise PreconditionError(f"{beta} is not simple in {pi.to_string()}")
    return k


def odd_reflection(pi: SimpleRootSystem, beta: Root) -> SimpleRootSystem:
    """r_beta pi: swap the two adjacent symbols of beta."""
    k = _check_simple_odd(pi, beta)
    T = list(pi.order)
    T[k], T[k + 1] = T[k + 1], T[k]
    return SimpleRootSystem(T)


def reflect_rho_weight(lr: RhoWeight, beta: Root, pi: SimpleRootSystem) -> RhoWeight:
    """rho-shifted highest weight of the same module after reflecting at beta."""
    _check_simple_odd(pi, beta)
    if lr.entry(beta.plus) != lr.entry(beta.minus):
        return lr
    return lr.add_root(beta)


def weight_plus_rho(lam: RhoWeight, pi: SimpleRootSystem) -> RhoWeight:
    return lam + rho(pi)


def weight_minus_rho(lr: RhoWeight, pi: SimpleRootSystem) -> RhoWeight:
    return lr - rho(pi)


def check_weight(lam: RhoWeight, pi: SimpleRootSystem) -> dict:
    """Dominance flags for the unshifted weight lam (entries a, b)."""
    da = [lam.a[i] - lam.a[i + 1] for i in range(lam.m - 1)]
    db = [lam.b[j + 1] - lam.b[j] for j in range(lam.n - 1)]
    diffs = da + db
    dominant = all(d >= 0 for d in diffs)
    integral = all(d.denominator == 1 for d in diffs)
    lr = lam + rho(pi)
    a, b = lr.a, lr.b
    strict = all(a[i] > a[i + 1] for i in range(len(a) - 1)) and all(b[j] < b[j + 1] for j in range(len(b) - 1))
    return {
        "dominant": dominant,
        "integral": integral,
        "in_PPlus": dominant and integral and lr.is_integral(),
        "rho_strictly_dominant": strict,
    }


def normalize_to_integral(lam: RhoWeight, pi: SimpleRootSystem) -> tuple[RhoWeight, Fraction]:
    """Twist lam by c(sum e - sum d) so that lam^rho has integer entries.

    The twist adds c to every a and every b; c is taken in [0, 1).
    """
    lr = lam + rho(pi)
    fracs = {x - (x.numerator // x.denominator) for x in lr.a + lr.b}
    if len(fracs) > 1:
        raise NormalizationError("entries of lambda^rho are not uniformly offset from the integers")
    f = fracs.pop() if fracs else Fraction(0)
    c = (1 - f) % 1
    return twist(lam, c), c


def twist(lam: RhoWeight, c) -> RhoWeight:
    c = Fraction(c)
    return RhoWeight([x + c for x in lam.a], [y + c for y in lam.b])


def standard_atypical_set(lr: RhoWeight) -> list[Root]:
    """S = {e_i - d_j : a_i = b_j} for a strictly dominant integral standard lambda^rho."""
    if not lr.is_integral():
        raise PreconditionError("entries must be integers")
    a, b = lr.a, lr.b
    if any(a[i] <= a[i + 1] for i in range(len(a) - 1)) or any(b[j] >= b[j + 1] for j in range(len(b) - 1)):
        raise PreconditionError("lambda^rho must be strictly dominant")
    return [odd_root(i + 1, j + 1) for i, x in enumerate(a) for j, y in enumerate(b) if x == y]


def atypicality(lr: RhoWeight) -> int:
    return len(set(lr.a) & set(lr.b))


def raised(lr: RhoWeight, S: Iterable[Root]) -> RhoWeight:
    """Replace every atypical entry by the maximal atypical entry."""
    S = list(S)
    if not S:
        return lr
    syms = {s for r in S for s in (r.plus, r.minus)}
    top = max(lr.entry(s) for s in syms)
    out = lr
    for s in syms:
        out = out.with_entry(s, top)
    return out


def s_norm(nu: RhoWeight, S: Iterable[Root]) -> Fraction:
    """|nu|_S: sum of k_alpha when nu = sum over S of k_alpha * alpha."""
    S = list(S)
    m, n = nu.m, nu.n
    acc = RhoWeight([0] * m, [0] * n)
    total = Fraction(0)
    for r in S:
        sym = r.plus if r.plus[0] == E else r.minus
        k = nu.entry(sym) * (1 if r.plus[0] == E else -1)
        acc = acc.add_root(r, k)
        total += k
    if acc != nu:
        raise PreconditionError("weight is not in the span of S")
    return total

"""
Independent ground truth: covariant weights, supersymmetric Schur functions
by brute-force hook-tableau enumeration, and random test-input generators.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .arcdiag import (
    ArcDiagram,
    apply_move,
    interval_property,
    odd_move,
    special_direct,
    standard_diagram,
)
from .exactring import LaurentPoly, exp_from_weight
from .roots import (
    PreconditionError,
    RhoWeight,
    SimpleRootSystem,
    normalize_to_integral,
    rho,
)


class HookError(ValueError):
    """Partition outside the (m, n)-hook."""


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def in_hook(self, m: int, n: int) -> bool:
        return self.part(m + 1) <= n

    def cells(self):
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(k: int):
    """All partitions of k, largest parts first."""

    def gen(k, cap):
        if k == 0:
            yield ()
            return
        for p in range(min(k, cap), 0, -1):
            for rest in gen(k - p, p):
                yield (p,) + rest

    for p in gen(k, k):
        yield Partition(p)


def hook_partitions(m: int, n: int, max_size: int):
    for k in range(max_size + 1):
        for mu in partitions(k):
            if mu.in_hook(m, n):
                yield mu


def covariant_weight(mu: Partition, m: int, n: int) -> RhoWeight:
    """Highest weight sum mu_i e_i + sum tau_j d_j, tau_j = max(0, mu'_j - m).

    Returned in (a, b) form, where the weight is sum a_i e_i - sum b_j d_j.
    """
    if not mu.in_hook(m, n):
        raise HookError(f"{mu} is not in the ({m},{n})-hook")
    conj = mu.conjugate()
    a = [mu.part(i) for i in range(1, m + 1)]
    tau = [max(0, conj.part(j) - m) for j in range(1, n + 1)]
    return RhoWeight(a, [-t for t in tau])


def hook_tableaux(mu: Partition, m: int, n: int):
    """Yield fillings as dicts cell -> letter; letters 0..m-1 are even, m..m+n-1 odd.

    Even letters: rows weakly, columns strictly increasing.  Odd letters: rows
    strictly, columns weakly increasing.
    """
    cells = mu.cells()
    fill: dict = {}

    def ok(cell, v):
        i, j = cell
        left = fill.get((i, j - 1))
        up = fill.get((i - 1, j))
        if left is not None and (v < left or (v == left and v >= m)):
            return False
        if up is not None and (v < up or (v == up and v < m)):
            return False
        return True

    def rec(k):
        if k == len(cells):
            yield dict(fill)
            return
        c = cells[k]
        for v in range(m + n):
            if ok(c, v):
                fill[c] = v
                yield from rec(k + 1)
                del fill[c]

    yield from rec(0)


def super_schur(mu: Partition, m: int, n: int) -> LaurentPoly:
    """Sum over hook tableaux of prod x_i^{#i} prod e^{d_j * #j'}."""
    if not mu.in_hook(m, n):
        raise HookError(f"{mu} is not in the ({m},{n})-hook")
    terms: dict = {}
    for t in hook_tableaux(mu, m, n):
        cnt = [0] * (m + n)
        for v in t.values():
            cnt[v] += 1
        # e^{d_j} is y_j^{-1}, so an odd letter lowers the y exponent
        e = tuple(2 * c for c in cnt[:m]) + tuple(-2 * c for c in cnt[m:])
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(m, n, terms)


def covariant_character_via(mu: Partition, m: int, n: int, char_of_rho_weight) -> LaurentPoly:
    """ch L(covariant weight) computed by char_of_rho_weight on the integral twist.

    char_of_rho_weight maps an integral standard lambda^rho to ch L; the result
    is untwisted by e^{-c(sum e - sum d)}.
    """
    pi = SimpleRootSystem.standard(m, n)
    lam = covariant_weight(mu, m, n)
    lam_t, c = normalize_to_integral(lam, pi)
    ch = char_of_rho_weight(lam_t + rho(pi))
    return ch.shift(exp_from_weight([-c] * m, [-c] * n))


# -- random inputs ------------------------------------------------------------------


def strictly_dominant_weights(m: int, n: int, lo: int, hi: int):
    """All integral lambda^rho with a strictly decreasing, b strictly increasing, entries in [lo, hi]."""
    for a in itertools.combinations(range(lo, hi + 1), m):
        for b in itertools.combinations(range(lo, hi + 1), n):
            yield RhoWeight(sorted(a, reverse=True), list(b))


def totally_connected_weights(m: int, n: int, lo: int, hi: int):
    for lr in strictly_dominant_weights(m, n, lo, hi):
        if interval_property(standard_diagram(lr)):
            yield lr


def random_tc_weight(rng: random.Random, m: int, n: int, lo: int = 0, hi: int = 8) -> RhoWeight:
    """Uniform over totally connected weights in the window (rejection sampling)."""
    for _ in range(10000):
        lr = random_dominant_weight(rng, m, n, lo, hi)
        if interval_property(standard_diagram(lr)):
            return lr
    raise PreconditionError("no totally connected weight found in window")


def random_typical_weight(rng: random.Random, m: int, n: int, lo: int = 0, hi: int = 8) -> RhoWeight:
    if m + n > hi - lo + 1:
        raise PreconditionError("window too small for a typical weight")
    vals = rng.sample(range(lo, hi + 1), m + n)
    return RhoWeight(sorted(vals[:m], reverse=True), sorted(vals[m:]))


def random_dominant_weight(rng: random.Random, m: int, n: int, lo: int = 0, hi: int = 8) -> RhoWeight:
    a = sorted(rng.sample(range(lo, hi + 1), m), reverse=True)
    b = sorted(rng.sample(range(lo, hi + 1), n))
    return RhoWeight(a, b)


def random_valid_diagram(rng: random.Random, m: int, n: int, steps: int = 10, lo: int = 0, hi: int = 8) -> ArcDiagram:
    """Random odd reflections applied to the standard diagram of a random weight."""
    d = standard_diagram(random_dominant_weight(rng, m, n, lo, hi))
    for _ in range(rng.randint(0, steps)):
        mixed = [k for k in range(len(d) - 1) if d.kind(k) != d.kind(k + 1)]
        if not mixed:
            break
        d = odd_move(d, rng.choice(mixed))
    return d


def applicable_moves(d: ArcDiagram):
    """All (move, position, inverse) triples that apply to d and keep it admissible."""
    out = []
    for move in (1, 2, 3, 4):
        for inv in (False, True):
            for k in range(len(d)):
                try:
                    d2 = apply_move(d, move, k, inverse=inv)
                except (PreconditionError, ValueError):
                    continue
                if d2.is_admissible():
                    out.append((move, k, inv, d2))
    return out


def random_admissible_diagram(rng: random.Random, m: int, n: int, steps: int = 12, lo: int = 0, hi: int = 8) -> ArcDiagram:
    """Random walk of moves starting from a special diagram."""
    d = special_direct(random_tc_weight(rng, m, n, lo, hi))
    for _ in range(rng.randint(0, steps)):
        moves = applicable_moves(d)
        if not moves:
            break
        d = rng.choice(moves)[3]
    return d


def twist_monomial(c: Fraction, m: int, n: int) -> LaurentPoly:
    """e^{c(sum e - sum d)}."""
    return LaurentPoly.monomial(m, n, exp_from_weight([c] * m, [c] * n))

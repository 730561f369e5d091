"""
Weight diagrams on the integer line and right-move paths between them.

A diagram puts "x" at t when t is both an a-entry and a b-entry of the
standard lambda^rho, ">" when t is only an a-entry and "<" when t is only a
b-entry.  Kazhdan-Lusztig polynomials count right-move paths by length.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .exactring import WeylElement
from .roots import PreconditionError, RhoWeight, Root, odd_root

CROSS, GREATER, LESS = "x", ">", "<"


class NoPathError(ValueError):
    """No right path joins the two diagrams."""


@dataclass(frozen=True)
class WeightDiagram:
    symbols: Mapping  # position -> symbol; stored as a sorted tuple of pairs

    def __init__(self, symbols):
        items = tuple(sorted(dict(symbols).items()))
        for _, s in items:
            if s not in (CROSS, GREATER, LESS):
                raise ValueError(f"bad symbol {s!r}")
        object.__setattr__(self, "symbols", dict(items))
        object.__setattr__(self, "_key", items)

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, WeightDiagram) and self._key == other._key

    @property
    def crosses(self) -> tuple:
        return tuple(t for t, s in self._key if s == CROSS)

    @property
    def background(self) -> tuple:
        """The > and < symbols, which right moves never change."""
        return tuple((t, s) for t, s in self._key if s != CROSS)

    def mn(self):
        r = len(self.crosses)
        g = sum(1 for _, s in self._key if s == GREATER)
        l = sum(1 for _, s in self._key if s == LESS)
        return r + g, r + l

    def with_crosses(self, crosses: Iterable[int]) -> "WeightDiagram":
        sym = dict(self.background)
        for t in crosses:
            if t in sym:
                raise ValueError(f"position {t} is occupied")
            sym[t] = CROSS
        return WeightDiagram(sym)

    def to_json(self):
        return {
            "crosses": list(self.crosses),
            "greater": [t for t, s in self._key if s == GREATER],
            "less": [t for t, s in self._key if s == LESS],
        }

    @classmethod
    def from_json(cls, d):
        sym = {int(t): CROSS for t in d.get("crosses", [])}
        sym.update({int(t): GREATER for t in d.get("greater", [])})
        sym.update({int(t): LESS for t in d.get("less", [])})
        return cls(sym)

    def __str__(self):
        from .render import render_weight_diagram

        return render_weight_diagram(self)


def to_weight_diagram(lr_st: RhoWeight) -> WeightDiagram:
    a, b = lr_st.as_ints()
    if len(set(a)) < len(a) or len(set(b)) < len(b):
        raise PreconditionError("entries within a block must be distinct")
    sa, sb = set(a), set(b)
    sym = {t: CROSS for t in sa & sb}
    sym.update({t: GREATER for t in sa - sb})
    sym.update({t: LESS for t in sb - sa})
    return WeightDiagram(sym)


def from_weight_diagram(D: WeightDiagram) -> RhoWeight:
    """Inverse of to_weight_diagram: a decreasing, b increasing."""
    a = sorted((t for t, s in D.symbols.items() if s in (CROSS, GREATER)), reverse=True)
    b = sorted(t for t, s in D.symbols.items() if s in (CROSS, LESS))
    return RhoWeight(a, b)


# -- right moves ----------------------------------------------------------------


def _marks(positions: tuple, occupied_bg: frozenset) -> dict:
    """Mark map {cross position: marked spot}, processing crosses right to left."""
    taken = set(positions) | set(occupied_bg)
    marked: set = set()
    out = {}
    for p in sorted(positions, reverse=True):
        t = p + 1
        while t in taken or t in marked:
            t += 1
        marked.add(t)
        out[p] = t
    return out


def _move(positions: tuple, i: int, bg: frozenset) -> tuple:
    """Apply R_i to identity-tracked cross positions (0-based label i)."""
    mk = _marks(positions, bg)
    lst = list(positions)
    lst[i] = mk[positions[i]]
    return tuple(lst)


def right_move(D: WeightDiagram, i: int) -> WeightDiagram:
    """R_i with crosses labelled 1..r from left to right."""
    cr = D.crosses
    if not 1 <= i <= len(cr):
        raise PreconditionError(f"label {i} out of range 1..{len(cr)}")
    bg = frozenset(t for t, _ in D.background)
    return D.with_crosses(_move(cr, i - 1, bg))


@dataclass(frozen=True)
class RightPath:
    """Labels (i_1, ..., i_k) of R_{i_1} o ... o R_{i_k}; R_{i_k} acts first."""

    moves: tuple

    @property
    def length(self):
        return len(self.moves)

    def __str__(self):
        return " o ".join(f"R{i}" for i in self.moves) or "id"


def enumerate_paths(Dmu: WeightDiagram, Dlam: WeightDiagram) -> set[RightPath]:
    if Dmu.background != Dlam.background or len(Dmu.crosses) != len(Dlam.crosses):
        return set()
    target = frozenset(Dlam.crosses)
    if not target:
        return {RightPath(())}
    top = max(target)
    bg = frozenset(t for t, _ in Dmu.background)
    r = len(target)

    @lru_cache(maxsize=None)
    def search(pos: tuple, maxlabel: int) -> tuple:
        # labels above maxlabel never move again
        if any(pos[k] not in target for k in range(maxlabel + 1, r)):
            return ()
        if any(p > top for p in pos):
            return ()
        found = []
        if frozenset(pos) == target:
            found.append(())
        for i in range(maxlabel, -1, -1):
            nxt = _move(pos, i, bg)
            if nxt[i] > top:
                continue
            for tail in search(nxt, i):
                # time order i, then tail; composition lists later moves first
                found.append(tail + (i + 1,))
        return tuple(found)

    return {RightPath(p) for p in search(tuple(Dmu.crosses), r - 1)}


class KLPoly:
    """Polynomial in q with nonnegative integer coefficients."""

    def __init__(self, coeffs: Mapping[int, int]):
        self.coeffs = {k: v for k, v in sorted(coeffs.items()) if v}

    def __call__(self, q):
        return sum(c * q**k for k, c in self.coeffs.items())

    def __eq__(self, other):
        if isinstance(other, KLPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def is_monomial(self):
        return len(self.coeffs) == 1 and next(iter(self.coeffs.values())) == 1

    def to_json(self):
        return {str(k): v for k, v in self.coeffs.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.coeffs.items(), reverse=True):
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            parts.append(mono if c == 1 else (f"{c}" if k == 0 else f"{c}*{mono}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"KLPoly({self})"


def kl_polynomial(Dlam: WeightDiagram, Dmu: WeightDiagram) -> KLPoly:
    out: dict = {}
    for p in enumerate_paths(Dmu, Dlam):
        out[p.length] = out.get(p.length, 0) + 1
    return KLPoly(out)


def trivial_path(Dlam: WeightDiagram, Dmu: WeightDiagram) -> tuple[RightPath, int]:
    """Path sending the i-th cross of mu to the i-th cross of lambda."""
    if Dmu.background != Dlam.background or len(Dmu.crosses) != len(Dlam.crosses):
        raise NoPathError("diagrams have different backgrounds")
    boxes = Dlam.crosses
    pos = tuple(Dmu.crosses)
    bg = frozenset(t for t, _ in Dmu.background)
    applied = []
    for i in range(len(pos) - 1, -1, -1):
        while pos[i] < boxes[i]:
            pos = _move(pos, i, bg)
            applied.append(i + 1)
        if pos[i] != boxes[i]:
            raise NoPathError(f"cross {i + 1} overshoots its box")
    path = RightPath(tuple(reversed(applied)))
    return path, path.length


def skips_along(Dmu: WeightDiagram, path: RightPath) -> int:
    """Total number of occupied spots jumped over by the moves of a path."""
    pos = tuple(Dmu.crosses)
    bg = frozenset(t for t, _ in Dmu.background)
    total = 0
    for i in reversed(path.moves):
        nxt = _move(pos, i - 1, bg)
        lo, hi = pos[i - 1], nxt[i - 1]
        occupied = set(bg) | set(pos)
        total += sum(1 for t in range(lo + 1, hi) if t in occupied)
        pos = nxt
    return total


def is_totally_connected(lr_st: RhoWeight) -> bool:
    D = to_weight_diagram(lr_st)
    cr = D.crosses
    if len(cr) < 2:
        return True
    return all(t in D.symbols for t in range(cr[0], cr[-1] + 1))


def atypical_slots(lr: RhoWeight):
    """(eps indices, del indices) of atypical entries of a standard lambda^rho (1-based)."""
    common = set(lr.a) & set(lr.b)
    return [i + 1 for i, x in enumerate(lr.a) if x in common], [j + 1 for j, y in enumerate(lr.b) if y in common]


def mu_bar(Dmu: WeightDiagram, Dlam: WeightDiagram, lr_lambda: RhoWeight) -> tuple[RhoWeight, WeylElement]:
    """(mu bar, w) with w(mu^rho) = mu bar."""
    if Dmu.background != Dlam.background or len(Dmu.crosses) != len(Dlam.crosses):
        raise NoPathError("diagrams have different backgrounds")
    mur = from_weight_diagram(Dmu)
    es, ds = atypical_slots(lr_lambda)
    vals = sorted(Dmu.crosses)
    a = list(lr_lambda.a)
    b = list(lr_lambda.b)
    for i, v in zip(es, sorted(vals, reverse=True)):
        a[i - 1] = v
    for j, v in zip(ds, vals):
        b[j - 1] = v
    bar = RhoWeight(a, b)
    sigma = tuple(a.index(x) for x in mur.a)
    tau = tuple(b.index(y) for y in mur.b)
    return bar, WeylElement(sigma, tau)


def standard_arcs(lr: RhoWeight) -> list[Root]:
    es, ds = atypical_slots(lr)
    # the k-th largest eps slot pairs with the k-th largest del slot
    return [odd_root(i, j) for i, j in zip(es, reversed(ds))]


def valuation(lr_lambda: RhoWeight, Dmu: WeightDiagram) -> int:
    """|lambda^rho - mu bar|_S, i.e. the total leftward displacement of crosses."""
    return sum(to_weight_diagram(lr_lambda).crosses) - sum(Dmu.crosses)


def enumerate_sources(Dlam: WeightDiagram, V: int) -> list[WeightDiagram]:
    """All D_mu with a right path to D_lam and valuation at most V.

    Candidates are cross configurations on free spots no further right than
    the last cross of D_lam whose total displacement is in [0, V]; each is
    confirmed by a forward path search.
    """
    cr = Dlam.crosses
    r = len(cr)
    if r == 0:
        return [Dlam]
    bg = {t for t, _ in Dlam.background}
    total = sum(cr)
    top = max(cr)
    lowest = min(cr) - V - r - len(bg) - 1
    free = [t for t in range(lowest, top + 1) if t not in bg]
    out = []

    def rec(k, hi_idx, acc, chosen):
        # choose k more positions from free[:hi_idx], strictly decreasing
        if k == 0:
            if total - V <= acc <= total:
                cand = Dlam.with_crosses(chosen)
                if enumerate_paths(cand, Dlam):
                    out.append(cand)
            return
        for idx in range(hi_idx - 1, k - 2, -1):
            t = free[idx]
            # best case for the rest: the next k-1 largest free spots below t
            rest = sum(free[idx - k + 1 : idx])
            if acc + t + rest < total - V:
                break
            rec(k - 1, idx, acc + t, chosen + [t])

    rec(r, len(free), 0, [])
    return sorted(out, key=lambda D: D.crosses)


def c_lexi(lr_lambda: RhoWeight, S: Iterable[Root], V: int) -> list[RhoWeight]:
    """{lambda^rho - sum n_i beta_i : a_1 - n_1 < ... < a_r - n_r, sum n_i <= V}."""
    S = sorted(S, key=lambda r: lr_lambda.entry(r.plus))
    vals = [lr_lambda.entry(r.plus) for r in S]
    out = []

    def rec(k, prev, used, ns):
        if k == len(S):
            w = lr_lambda
            for r, nk in zip(S, ns):
                w = w.add_root(r, -nk)
            out.append(w)
            return
        for nk in range(0, V - used + 1):
            cur = vals[k] - nk
            if prev is not None and cur <= prev:
                break
            rec(k + 1, cur, used + nk, ns + [nk])

    rec(0, None, 0, [])
    return out

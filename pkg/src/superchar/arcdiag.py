"""
Arc diagrams: a shuffle of nodes (bullet for eps_i, cross for del_j), an
integer entry under each node, and arcs joining equal-entry bullet/cross pairs.

Arcs are stored as (eps index, del index) pairs; whether an arc is of
bullet-cross or cross-bullet type is read off from the node positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .roots import (
    D,
    E,
    PreconditionError,
    RhoWeight,
    Root,
    SimpleRootSystem,
    positive_roots,
    raised,
    rho,
    s_norm,
    standard_atypical_set,
)


class DiagramError(ValueError):
    """An arc diagram invariant is violated; ``invariant`` names it."""

    def __init__(self, invariant: str, msg: str = ""):
        super().__init__(f"{invariant}: {msg}" if msg else invariant)
        self.invariant = invariant


class MoveError(PreconditionError):
    """The local pattern does not match the requested move."""


@dataclass(frozen=True)
class ArcDiagram:
    order: SimpleRootSystem
    entries: tuple
    arcs: frozenset

    # -- basic accessors -------------------------------------------------
    @property
    def m(self):
        return self.order.m

    @property
    def n(self):
        return self.order.n

    def __len__(self):
        return len(self.entries)

    def sym(self, k):
        return self.order.order[k]

    def kind(self, k):
        return self.order.order[k][0]

    def pos(self, s):
        return self.order.position(s)

    def partner(self, k):
        """Position of the node arced to position k, or None."""
        kind, idx = self.sym(k)
        for i, j in self.arcs:
            if kind == E and i == idx:
                return self.pos((D, j))
            if kind == D and j == idx:
                return self.pos((E, i))
        return None

    def is_arced(self, k):
        return self.partner(k) is not None

    def arc_positions(self):
        """Sorted (left, right) position pairs of arcs."""
        out = []
        for i, j in self.arcs:
            p, q = self.pos((E, i)), self.pos((D, j))
            out.append((min(p, q), max(p, q)))
        return sorted(out)

    def is_short(self, arc) -> bool:
        i, j = arc
        return abs(self.pos((E, i)) - self.pos((D, j))) == 1

    def is_admissible(self) -> bool:
        return all(self.is_short(a) for a in self.arcs)

    def rho_weight(self) -> RhoWeight:
        a = [0] * self.m
        b = [0] * self.n
        for k, (kind, idx) in enumerate(self.order.order):
            (a if kind == E else b)[idx - 1] = self.entries[k]
        return RhoWeight(a, b)

    def atypical_set(self) -> list[Root]:
        """S as positive odd roots for this order."""
        out = []
        for i, j in sorted(self.arcs):
            e, d = (E, i), (D, j)
            out.append(Root(e, d) if self.pos(e) < self.pos(d) else Root(d, e))
        return out

    def data(self):
        """Recover (pi, lambda^rho, S)."""
        return self.order, self.rho_weight(), self.atypical_set()

    def atypical_entries(self):
        return sorted(self.entries[k] for p in self.arc_positions() for k in p)

    def to_json(self):
        return {
            "order": self.order.to_string(),
            "entries": list(self.entries),
            "arcs": [list(a) for a in sorted(self.arcs)],
        }

    @classmethod
    def from_json(cls, d) -> "ArcDiagram":
        return make_diagram(SimpleRootSystem.from_string(d["order"]), d["entries"], [tuple(a) for a in d["arcs"]])

    def __str__(self):
        from .render import render_arc_diagram

        return render_arc_diagram(self)


def make_diagram(order: SimpleRootSystem, entries: Sequence[int], arcs: Iterable, check: bool = True) -> ArcDiagram:
    d = ArcDiagram(order, tuple(int(x) for x in entries), frozenset((int(i), int(j)) for i, j in arcs))
    if check:
        validate(d)
    return d


def validate(d: ArcDiagram) -> None:
    """Raise DiagramError naming the first violated invariant."""
    if len(d.entries) != d.m + d.n:
        raise DiagramError("shape", "one entry per node required")
    used_e, used_d = set(), set()
    for i, j in d.arcs:
        if not (1 <= i <= d.m and 1 <= j <= d.n):
            raise DiagramError("shape", f"arc ({i}, {j}) out of range")
        if i in used_e or j in used_d:
            raise DiagramError("disjointness", f"arc ({i}, {j}) shares an endpoint")
        used_e.add(i)
        used_d.add(j)
        if d.entries[d.pos((E, i))] != d.entries[d.pos((D, j))]:
            raise DiagramError("arc endpoints", f"arc ({i}, {j}) joins unequal entries")
    free_e = {d.entries[d.pos((E, i))] for i in range(1, d.m + 1) if i not in used_e}
    free_d = {d.entries[d.pos((D, j))] for j in range(1, d.n + 1) if j not in used_d}
    common = free_e & free_d
    if common:
        raise DiagramError("maximality", f"typical nodes with entry {min(common)} could be joined")
    lam = d.rho_weight() - rho(d.order)
    a, b = lam.a, lam.b
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)) or any(b[j] > b[j + 1] for j in range(len(b) - 1)):
        raise DiagramError("monotonicity", "highest weight is not dominant")


def is_valid(d: ArcDiagram) -> bool:
    try:
        validate(d)
    except DiagramError:
        return False
    return True


def build_arc_diagram(pi: SimpleRootSystem, lr: RhoWeight, S: Iterable[Root]) -> ArcDiagram:
    """Diagram of the data (pi, lambda^rho, S)."""
    _, odd = positive_roots(pi)
    odd = set(odd)
    arcs = []
    for r in S:
        if r not in odd:
            raise DiagramError("orientation", f"{r} is not a positive odd root")
        e = r.plus if r.plus[0] == E else r.minus
        dl = r.minus if r.plus[0] == E else r.plus
        arcs.append((e[1], dl[1]))
    a, b = lr.as_ints()
    entries = [a[i - 1] if k == E else b[i - 1] for k, i in pi.order]
    return make_diagram(pi, entries, arcs)


def standard_diagram(lr: RhoWeight) -> ArcDiagram:
    """Standard-order diagram with its unique arc arrangement."""
    pi = SimpleRootSystem.standard(lr.m, lr.n)
    return build_arc_diagram(pi, lr, standard_atypical_set(lr))


# -- elementary rewriting ---------------------------------------------------


def _swap(d: ArcDiagram, k: int, new_entries=None, arcs=None) -> ArcDiagram:
    T = list(d.order.order)
    T[k], T[k + 1] = T[k + 1], T[k]
    ent = list(d.entries if new_entries is None else new_entries)
    ent[k], ent[k + 1] = ent[k + 1], ent[k]
    arcs = d.arcs if arcs is None else arcs
    # kinds at k and k+1 differ, so labels are preserved by the swap
    return ArcDiagram(SimpleRootSystem(T), tuple(ent), frozenset(arcs))


def _mixed_pair(d: ArcDiagram, k: int):
    if not (0 <= k < len(d) - 1) or d.kind(k) == d.kind(k + 1):
        raise MoveError(f"positions {k}, {k + 1} are not an adjacent bullet/cross pair")


def odd_move(d: ArcDiagram, k: int, check: bool = True) -> ArcDiagram:
    """Odd reflection at the adjacent pair (k, k+1).

    Unequal entries: the nodes swap.  Equal entries: the nodes swap and both
    entries move by +1 (bullet-cross) or -1 (cross-bullet).  The moved nodes
    are then joined by an arc, and if both had other partners, those
    partners are joined to each other.
    """
    _mixed_pair(d, k)
    x, y = d.entries[k], d.entries[k + 1]
    if x != y:
        out = _swap(d, k)
    else:
        step = 1 if d.kind(k) == E else -1
        p, q = d.partner(k), d.partner(k + 1)
        if p is None and q is None:
            raise DiagramError("maximality", "equal adjacent typical entries")
        s1, s2 = d.sym(k), d.sym(k + 1)
        arcs = set(d.arcs)
        for pos in (k, k + 1):
            part = d.partner(pos)
            if part is not None:
                arcs.discard(_arc_of(d, pos, part))
        arcs.add(_arc_of(d, k, k + 1))
        if p is not None and q is not None and p != k + 1:
            arcs.add(_arc_of(d, p, q))
        ent = list(d.entries)
        ent[k] += step
        ent[k + 1] += step
        out = _swap(d, k, ent, arcs)
    if check:
        validate(out)
    return out


def _arc_of(d: ArcDiagram, p: int, q: int):
    sp, sq = d.sym(p), d.sym(q)
    if sp[0] == sq[0]:
        raise DiagramError("shape", "arc must join a bullet and a cross")
    return (sp[1], sq[1]) if sp[0] == E else (sq[1], sp[1])


def _with(d: ArcDiagram, k: int, entries, arcs, check=True) -> ArcDiagram:
    out = _swap(d, k, entries, arcs)
    if check:
        validate(out)
    return out


def _expect(cond, move, pattern):
    if not cond:
        raise MoveError(f"move ({move}) expects {pattern}")


def apply_move(d: ArcDiagram, move: int, k: int, inverse: bool = False, check: bool = True) -> ArcDiagram:
    """Apply one of the four local moves at position k (or its inverse)."""
    e = d.entries
    kinds = "".join("b" if d.kind(p) == E else "x" for p in range(len(d)))

    def pat(p):
        return kinds[k : k + len(p)] == p

    arcs = set(d.arcs)
    if move == 1:
        if not inverse:
            _expect(pat("bx") and e[k] != e[k + 1], 1, "adjacent bullet a, cross b with a != b")
        else:
            _expect(pat("xb") and e[k] != e[k + 1], 1, "adjacent cross b, bullet a with a != b")
        return _with(d, k, None, arcs, check)
    if move == 2:
        if not inverse:
            _expect(pat("bx") and e[k] == e[k + 1] and d.partner(k) == k + 1, 2, "short arc bullet a - cross a")
            step = 1
        else:
            _expect(pat("xb") and e[k] == e[k + 1] and d.partner(k) == k + 1, 2, "short arc cross a+1 - bullet a+1")
            step = -1
        ent = list(e)
        ent[k] += step
        ent[k + 1] += step
        return _with(d, k, ent, arcs, check)
    if move == 3:
        ent = list(e)
        if not inverse:
            _expect(
                pat("bxb") and e[k] == e[k + 1] == e[k + 2] and d.partner(k) == k + 1 and d.partner(k + 2) is None,
                3,
                "bullet a - cross a arc followed by a free bullet a",
            )
            arcs.discard(_arc_of(d, k, k + 1))
            arcs.add(_arc_of(d, k + 2, k + 1))
            ent[k + 1] -= 1
            ent[k + 2] -= 1
        else:
            _expect(
                pat("bbx")
                and e[k] == e[k + 1] + 1 == e[k + 2] + 1
                and d.partner(k + 1) == k + 2
                and d.partner(k) is None,
                3,
                "free bullet a followed by bullet a-1 - cross a-1 arc",
            )
            arcs.discard(_arc_of(d, k + 1, k + 2))
            arcs.add(_arc_of(d, k, k + 2))
            ent[k + 1] += 1
            ent[k + 2] += 1
        return _with(d, k + 1, ent, arcs, check)
    if move == 4:
        ent = list(e)
        if not inverse:
            _expect(
                pat("xbx") and e[k] == e[k + 1] == e[k + 2] and d.partner(k + 1) == k + 2 and d.partner(k) is None,
                4,
                "free cross a followed by bullet a - cross a arc",
            )
            arcs.discard(_arc_of(d, k + 1, k + 2))
            arcs.add(_arc_of(d, k + 1, k))
            ent[k] -= 1
            ent[k + 1] -= 1
        else:
            _expect(
                pat("bxx")
                and e[k] == e[k + 1] == e[k + 2] - 1
                and d.partner(k) == k + 1
                and d.partner(k + 2) is None,
                4,
                "bullet a-1 - cross a-1 arc followed by a free cross a",
            )
            arcs.discard(_arc_of(d, k, k + 1))
            arcs.add(_arc_of(d, k, k + 2))
            ent[k] += 1
            ent[k + 1] += 1
        return _with(d, k, ent, arcs, check)
    raise MoveError(f"unknown move {move}")


# -- predicates -------------------------------------------------------------


def interval_property(d: ArcDiagram) -> bool:
    """Every integer between the least and greatest atypical entry is an entry."""
    atyp = d.atypical_entries()
    if not atyp:
        return True
    present = set(d.entries)
    return all(t in present for t in range(atyp[0], atyp[-1] + 1))


def is_totally_connected(lr: RhoWeight) -> bool:
    """Interval property of the standard diagram of lambda^rho."""
    return interval_property(standard_diagram(lr))


def gaps_between_arcs_are_runs(d: ArcDiagram) -> bool:
    """Between consecutive arcs the nodes are all of one kind with consecutive entries.

    Checked on admissible diagrams after reflecting every arc to bullet-cross type.
    """
    if not d.is_admissible():
        return False
    for i, j in list(d.arcs):
        p = d.pos((E, i))
        if d.kind(p) == E and p + 1 < len(d) and d.partner(p) == p + 1:
            continue
        d = apply_move(d, 2, p - 1, inverse=True, check=False)
    spans = d.arc_positions()
    for (l1, r1), (l2, r2) in zip(spans, spans[1:]):
        mid = list(range(r1 + 1, l2))
        a1, a2 = d.entries[r1], d.entries[l2]
        if not mid:
            if a1 != a2:
                return False
            continue
        kinds = {d.kind(p) for p in mid}
        if len(kinds) != 1:
            return False
        vals = [d.entries[p] for p in mid]
        if kinds == {E}:
            want = list(range(a1, a1 - len(mid), -1))
            if vals != want or a2 != a1 - len(mid):
                return False
        else:
            want = list(range(a1 + 1, a1 + 1 + len(mid)))
            if vals != want or a2 != a1 + len(mid):
                return False
    return True


def is_special(d: ArcDiagram) -> bool:
    """All arcs short, bullet-cross, adjacent; atypicals equal; bullets before crosses at each end."""
    if not is_valid(d) or not d.is_admissible():
        return False
    spans = d.arc_positions()
    if not spans:
        return _ends_sorted(d.entries, [d.kind(p) for p in range(len(d))])
    for l, r in spans:
        if d.kind(l) != E:
            return False
    if any(spans[t + 1][0] != spans[t][1] + 1 for t in range(len(spans) - 1)):
        return False
    if len(set(d.atypical_entries())) != 1:
        return False
    lo, hi = spans[0][0], spans[-1][1]
    kinds = [d.kind(p) for p in range(len(d))]
    return _ends_sorted(d.entries, kinds[:lo]) and _ends_sorted(d.entries, kinds[hi + 1 :])


def _ends_sorted(entries, kinds) -> bool:
    seen_x = False
    for k in kinds:
        if k == D:
            seen_x = True
        elif seen_x:
            return False
    return True


# -- standardization ----------------------------------------------------------


def _require_admissible(d: ArcDiagram):
    validate(d)
    if not d.is_admissible():
        raise PreconditionError("diagram is not admissible (some arc is not short)")


def standardize(d: ArcDiagram, trace: list | None = None) -> ArcDiagram:
    """Move an admissible diagram to the standard order by odd reflections."""
    _require_admissible(d)
    for i, j in sorted(d.arcs):
        p = d.pos((D, j))
        if p + 1 < len(d) and d.partner(p) == p + 1:
            d = odd_move(d, p)
            _log(trace, d)
    # push crosses right, rightmost first
    for j in range(d.n, 0, -1):
        while True:
            p = d.pos((D, j))
            if p + 1 >= len(d) or d.kind(p + 1) != E:
                break
            d = odd_move(d, p)
            _log(trace, d)
    if not d.order.is_standard():
        raise DiagramError("standardize", "did not reach the standard order")
    return d


def _log(trace, d):
    if trace is not None:
        trace.append(d)


# -- shortening algorithm -----------------------------------------------------


def _push_bullet_out(d: ArcDiagram, p: int) -> ArcDiagram:
    """Move the bullet at p right until no arced node lies to its right."""
    while any(d.is_arced(q) for q in range(p + 1, len(d))):
        if d.kind(p + 1) == E:
            raise DiagramError("shortening", "pushed bullet is blocked by a bullet")
        if d.entries[p] == d.entries[p + 1]:
            raise DiagramError("shortening", "push would cross an equal entry")
        d = odd_move(d, p)
        p += 1
    return d


def _push_cross_out(d: ArcDiagram, p: int) -> ArcDiagram:
    """Move the cross at p left until no arced node lies to its left."""
    while any(d.is_arced(q) for q in range(0, p)):
        if d.kind(p - 1) == D:
            raise DiagramError("shortening", "pushed cross is blocked by a cross")
        if d.entries[p] == d.entries[p - 1]:
            raise DiagramError("shortening", "push would cross an equal entry")
        d = odd_move(d, p - 1)
        p -= 1
    return d


def shorten(d: ArcDiagram) -> list[ArcDiagram]:
    """Shortening algorithm from the standard diagram of a totally connected weight.

    Returns the diagrams at each step boundary: the input, the diagram after
    the typical entries below the innermost arc are pushed out, and the
    diagram after each induction step.  The last one is the special diagram.
    """
    validate(d)
    if not d.order.is_standard():
        raise PreconditionError("shorten expects a standard-order diagram")
    if not interval_property(d):
        raise PreconditionError("weight is not totally connected")
    out = [d]
    if not d.arcs:
        return out
    spans = d.arc_positions()
    # innermost arc: rightmost atypical bullet and leftmost atypical cross
    inner_l = max(l for l, _ in spans)
    inner_r = min(r for _, r in spans)
    bullets = [d.sym(p) for p in range(inner_l + 1, inner_r) if d.kind(p) == E]
    crosses = [d.sym(p) for p in range(inner_l + 1, inner_r) if d.kind(p) == D]
    for s in reversed(bullets):
        d = _push_bullet_out(d, d.pos(s))
    for s in crosses:
        d = _push_cross_out(d, d.pos(s))
    out.append(d)
    r = len(d.arcs)
    top = max(d.atypical_entries())
    while True:
        spans = d.arc_positions()
        lo = min(l for l, _ in spans if _is_block_arc(d, l))
        block = _block(d, lo)
        v = d.entries[block[0]]
        if len(block) // 2 == r and v == top:
            break
        if v >= top:
            raise DiagramError("shortening", "block value passed the maximal atypical entry")
        s = v + 1
        L = block[0] - 1 if block[0] > 0 and d.kind(block[0] - 1) == E and d.entries[block[0] - 1] == s else None
        R = block[-1] + 1 if block[-1] + 1 < len(d) and d.kind(block[-1] + 1) == D and d.entries[block[-1] + 1] == s else None
        if L is None and R is None:
            raise PreconditionError("weight is not totally connected")
        syms_L = d.sym(L) if L is not None else None
        syms_R = d.sym(R) if R is not None else None
        if L is not None and R is not None and d.partner(L) != R:
            raise DiagramError("shortening", "outer entries are not joined by an arc")
        # reflect every short arc of the block
        for p in block[::2]:
            d = odd_move(d, p, check=False)
        # rearrange: pair bullets with the cross immediately to their right
        lo_p = d.pos(syms_L) if syms_L else block[0]
        hi_p = d.pos(syms_R) if syms_R else block[-1]
        region = list(range(lo_p, hi_p + 1))
        keep = {a for a in d.arcs if not any(d.pos(x) in region for x in ((E, a[0]), (D, a[1])))}
        new_arcs = set(keep)
        used = set()
        free = []
        for p in region:
            if p in used:
                continue
            if d.kind(p) == E and p + 1 <= hi_p and d.kind(p + 1) == D:
                new_arcs.add(_arc_of(d, p, p + 1))
                used.update((p, p + 1))
            else:
                free.append(d.sym(p))
        d = ArcDiagram(d.order, d.entries, frozenset(new_arcs))
        validate(d)
        for sy in free:
            p = d.pos(sy)
            d = _push_bullet_out(d, p) if sy[0] == E else _push_cross_out(d, p)
        out.append(d)
    return out


def _is_block_arc(d: ArcDiagram, l: int) -> bool:
    return d.kind(l) == E and d.partner(l) == l + 1


def _block(d: ArcDiagram, start: int) -> list[int]:
    """Positions of the maximal run of adjacent short bullet-cross arcs from start."""
    out = []
    p = start
    v = d.entries[start]
    while p + 1 < len(d) and _is_block_arc(d, p) and d.entries[p] == v:
        out.extend((p, p + 1))
        p += 2
    return out


# -- special diagram ------------------------------------------------------------


def special_direct(lr_st: RhoWeight, S: Iterable[Root] | None = None) -> ArcDiagram:
    """Special diagram of a totally connected standard weight, built directly."""
    if S is None:
        S = standard_atypical_set(lr_st)
    S = list(S)
    std = build_arc_diagram(SimpleRootSystem.standard(lr_st.m, lr_st.n), lr_st, S)
    if not interval_property(std):
        raise PreconditionError("weight is not totally connected")
    a, b = lr_st.as_ints()
    if not S:
        return std
    at_e = {r.plus[1] for r in S}
    at_d = {r.minus[1] for r in S}
    z = max(a[i - 1] for i in at_e)
    ta = [a[i] for i in range(len(a)) if i + 1 not in at_e]
    tb = [b[j] for j in range(len(b)) if j + 1 not in at_d]
    left_b = [x for x in ta if x > z]
    right_b = [x for x in ta if x < z]
    left_x = [x for x in tb if x < z]
    right_x = [x for x in tb if x > z]
    r = len(S)
    kinds = E * len(left_b) + D * len(left_x) + (E + D) * r + E * len(right_b) + D * len(right_x)
    entries = left_b + left_x + [z] * (2 * r) + right_b + right_x
    pi = SimpleRootSystem.from_string(kinds)
    base_e = len(left_b)
    base_d = len(left_x)
    arcs = [(base_e + t + 1, base_d + t + 1) for t in range(r)]
    return make_diagram(pi, entries, arcs)


def specialize(d: ArcDiagram, trace: list | None = None) -> ArcDiagram:
    """Reach the special diagram from an admissible one using moves (1)-(4)."""
    _require_admissible(d)
    # (2)^-1 on cross-bullet arcs
    for i, j in sorted(d.arcs):
        p = d.pos((D, j))
        if p + 1 < len(d) and d.partner(p) == p + 1:
            d = apply_move(d, 2, p, inverse=True)
            _log(trace, d)
    # (3)/(4) to close gaps between consecutive arcs
    while True:
        spans = d.arc_positions()
        gap = next(((s1, s2) for s1, s2 in zip(spans, spans[1:]) if s2[0] > s1[1] + 1), None)
        if gap is None:
            break
        (l1, r1), (l2, r2) = gap
        if d.kind(r1 + 1) == E:
            d = apply_move(d, 3, l1)
        else:
            d = apply_move(d, 4, l2 - 1)
        _log(trace, d)
    d = _sort_ends(d, trace)
    if not d.arcs:
        return d
    # transfer typical entries equal to the block value out of the block
    while True:
        spans = d.arc_positions()
        lo, hi = spans[0][0], spans[-1][1]
        a = d.entries[lo]
        r = len(spans)
        if lo > 0 and d.kind(lo - 1) == D and d.entries[lo - 1] == a:
            p = lo - 1
            for _ in range(r):
                d = apply_move(d, 4, p)
                _log(trace, d)
                p += 2
            d = _bubble(d, p, +1, trace)
        elif hi + 1 < len(d) and d.kind(hi + 1) == E and d.entries[hi + 1] == a:
            p = hi - 1
            for _ in range(r):
                d = apply_move(d, 3, p)
                _log(trace, d)
                p -= 2
            d = _bubble(d, p + 2, -1, trace)
        else:
            break
    return d


def _sort_ends(d: ArcDiagram, trace) -> ArcDiagram:
    """Move (1) until bullets precede crosses outside the arc block."""
    changed = True
    while changed:
        changed = False
        spans = d.arc_positions()
        lo = spans[0][0] if spans else len(d)
        hi = spans[-1][1] if spans else len(d)
        for p in list(range(0, lo - 1)) + list(range(hi + 1, len(d) - 1)):
            if d.kind(p) == D and d.kind(p + 1) == E:
                d = apply_move(d, 1, p, inverse=True)
                _log(trace, d)
                changed = True
                break
    return d


def _bubble(d: ArcDiagram, p: int, direction: int, trace) -> ArcDiagram:
    """Move (1) a cross right past bullets (direction +1) or a bullet left past crosses (-1)."""
    if direction > 0:
        while p + 1 < len(d) and d.kind(p + 1) == E:
            d = apply_move(d, 1, p, inverse=True)
            _log(trace, d)
            p += 1
    else:
        while p - 1 >= 0 and d.kind(p - 1) == D:
            d = apply_move(d, 1, p - 1, inverse=True)
            _log(trace, d)
            p -= 1
    return d


def lambda_up_and_val(lr: RhoWeight, S: Iterable[Root]):
    """((lambda^rho) raised, nu -> |nu|_S)."""
    S = list(S)
    return raised(lr, S), (lambda nu: s_norm(nu, S))

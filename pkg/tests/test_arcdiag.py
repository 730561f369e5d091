import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchar.arcdiag import (
    ArcDiagram,
    DiagramError,
    MoveError,
    apply_move,
    build_arc_diagram,
    interval_property,
    is_special,
    is_valid,
    lambda_up_and_val,
    gaps_between_arcs_are_runs,
    make_diagram,
    odd_move,
    shorten,
    special_direct,
    specialize,
    standard_diagram,
    standardize,
    validate,
)
from superchar.oracles import random_admissible_diagram, random_tc_weight, random_valid_diagram
from superchar.render import render_arc_diagram
from superchar.roots import (
    PreconditionError,
    RhoWeight,
    Root,
    SimpleRootSystem,
    odd_reflection,
    odd_root,
    reflect_rho_weight,
)
from superchar.weightdiag import is_totally_connected

seeds = st.integers(0, 10**9)
sizes = st.tuples(st.integers(1, 4), st.integers(1, 4))


def example8():
    pi = SimpleRootSystem.from_string("eededde")
    lr = RhoWeight([7, 5, 5, 2], [5, 6, 7])
    return build_arc_diagram(pi, lr, [odd_root(1, 3), Root(("d", 1), ("e", 3))])


def gl11(entry=0):
    return make_diagram(SimpleRootSystem.standard(1, 1), [entry, entry], [(1, 1)])


class TestConstruction:
    def test_example8(self):
        d = example8()
        assert d.entries == (7, 5, 5, 5, 6, 7, 2)
        assert d.arcs == frozenset({(1, 3), (3, 1)})
        assert interval_property(d)
        assert not d.is_admissible()

    def test_typical_has_no_arcs(self):
        assert standard_diagram(RhoWeight([5, 3], [1, 4])).arcs == frozenset()

    def test_gap_breaks_interval_property(self):
        d = standard_diagram(RhoWeight([5, 3], [3, 5]))
        assert not interval_property(d)

    def test_single_arc_has_interval_property(self):
        assert interval_property(gl11())

    @pytest.mark.parametrize(
        "entries, arcs, invariant",
        [
            ([1, 2], [(1, 1)], "arc endpoints"),
            ([1, 1], [], "maximality"),
            ([0, 1, 1, 1], [(2, 1)], "monotonicity"),
        ],
    )
    def test_invariant_violations(self, entries, arcs, invariant):
        m = 1 if len(entries) == 2 else 2
        pi = SimpleRootSystem.standard(m, len(entries) - m)
        with pytest.raises(DiagramError) as exc:
            make_diagram(pi, entries, arcs)
        assert exc.value.invariant == invariant

    def test_disjointness(self):
        pi = SimpleRootSystem.standard(1, 2)
        with pytest.raises(DiagramError) as exc:
            make_diagram(pi, [1, 1, 1], [(1, 1), (1, 2)])
        assert exc.value.invariant == "disjointness"

    @given(seeds, sizes)
    def test_round_trip(self, seed, mn):
        d = random_valid_diagram(random.Random(seed), *mn)
        assert build_arc_diagram(*d.data()) == d

    def test_json_round_trip(self):
        d = example8()
        assert ArcDiagram.from_json(d.to_json()) == d

    def test_render(self):
        text = render_arc_diagram(gl11())
        assert text.splitlines() == [" [a a]", "  o  x", "  0  0"]


class TestOddMove:
    def test_unequal_swap(self):
        d = standard_diagram(RhoWeight([3], [1]))
        d2 = odd_move(d, 0)
        assert d2.order.to_string() == "de"
        assert d2.entries == (1, 3)

    def test_equal_raises_entries(self):
        d2 = odd_move(gl11(), 0)
        assert d2.order.to_string() == "de"
        assert d2.entries == (1, 1)
        assert d2.arcs == frozenset({(1, 1)})

    def test_involution(self):
        d = gl11(4)
        assert odd_move(odd_move(d, 0), 0) == d

    def test_not_mixed(self):
        with pytest.raises(MoveError):
            odd_move(standard_diagram(RhoWeight([3, 2], [1])), 0)

    @given(seeds, sizes, st.data())
    def test_matches_root_level_reflection(self, seed, mn, data):
        d = random_valid_diagram(random.Random(seed), *mn)
        mixed = [k for k in range(len(d) - 1) if d.kind(k) != d.kind(k + 1)]
        k = data.draw(st.sampled_from(mixed))
        pi, lr, _ = d.data()
        beta = Root(d.sym(k), d.sym(k + 1))
        d2 = odd_move(d, k)
        assert d2.order == odd_reflection(pi, beta)
        assert d2.rho_weight() == reflect_rho_weight(lr, beta, pi)
        back = odd_move(d2, k)
        # order and entries return; the arc set may be a different maximal choice
        assert (back.order, back.entries) == (d.order, d.entries)
        if d.partner(k) == k + 1:
            assert back == d


class TestMoves:
    def test_move2_gl11(self):
        d2 = apply_move(gl11(), 2, 0)
        assert d2.order.to_string() == "de" and d2.entries == (1, 1)
        assert apply_move(d2, 2, 0, inverse=True) == gl11()

    def test_move1_keeps_entries(self):
        d = standard_diagram(RhoWeight([3], [1]))
        d2 = apply_move(d, 1, 0)
        assert sorted(d2.entries) == sorted(d.entries)
        assert d2.arcs == d.arcs

    def test_pattern_mismatch(self):
        with pytest.raises(MoveError):
            apply_move(gl11(), 1, 0)
        with pytest.raises(MoveError):
            apply_move(gl11(), 3, 0)

    @given(seeds, sizes)
    def test_move_then_inverse(self, seed, mn):
        rng = random.Random(seed)
        d = random_admissible_diagram(rng, *mn)
        for move in (1, 2, 3, 4):
            for k in range(len(d)):
                for inv in (False, True):
                    try:
                        d2 = apply_move(d, move, k, inverse=inv)
                    except PreconditionError:
                        continue
                    validate(d2)
                    assert _undo(d2, move, inv) is not None
                    assert d in _undo(d2, move, inv)


def _undo(d2, move, inv):
    out = []
    for k in range(len(d2)):
        try:
            out.append(apply_move(d2, move, k, inverse=not inv))
        except PreconditionError:
            pass
    return out


class TestAlgorithms:
    @given(seeds, sizes)
    def test_shorten_ends_at_special(self, seed, mn):
        lr = random_tc_weight(random.Random(seed), *mn)
        seq = shorten(standard_diagram(lr))
        assert seq[0] == standard_diagram(lr)
        assert seq[-1] == special_direct(lr)
        assert is_special(seq[-1])
        for d in seq:
            validate(d)

    def test_shorten_rejects_non_tc(self):
        with pytest.raises(PreconditionError):
            shorten(standard_diagram(RhoWeight([5, 3], [3, 5])))

    def test_shorten_nested_pair_raises_to_max(self):
        seq = shorten(standard_diagram(RhoWeight([2, 1], [1, 2])))
        assert seq[-1].entries == (2, 2, 2, 2)
        assert seq[-1].order.to_string() == "eded"

    def test_special_direct_typical_is_standard(self):
        lr = RhoWeight([5, 3], [1, 4])
        assert special_direct(lr) == standard_diagram(lr)

    def test_special_direct_gl11(self):
        assert special_direct(RhoWeight([0], [0])) == gl11()

    @given(seeds, sizes)
    def test_specialize_and_standardize(self, seed, mn):
        rng = random.Random(seed)
        d = random_admissible_diagram(rng, *mn)
        assert gaps_between_arcs_are_runs(d)
        st_d = standardize(d)
        assert st_d.order.is_standard()
        assert is_totally_connected(st_d.rho_weight())
        sp = specialize(d)
        assert is_special(sp)
        assert sp == special_direct(st_d.rho_weight())
        assert specialize(sp) == sp

    def test_standardize_gl11_cross_bullet(self):
        d = apply_move(gl11(), 2, 0)
        assert standardize(d) == gl11()

    def test_non_admissible_rejected(self):
        with pytest.raises(PreconditionError):
            standardize(example8())
        with pytest.raises(PreconditionError):
            specialize(example8())

    def test_lambda_up_and_val(self):
        lr = RhoWeight([10, 9, 8, 6, 5, 4], [2, 4, 6, 8])
        S = [odd_root(6, 2), odd_root(4, 3), odd_root(3, 4)]
        up, val = lambda_up_and_val(lr, S)
        assert up.a == (10, 9, 8, 8, 5, 8)
        assert val(up - lr) == 2 + 4
        assert val(RhoWeight([0] * 6, [0] * 4)) == 0

    @given(seeds, sizes)
    def test_raise_amount_orientation(self, seed, mn):
        # each arc contributes its raise, negated for cross-bullet arcs
        d = random_valid_diagram(random.Random(seed), *mn)
        _, lr, S = d.data()
        up, val = lambda_up_and_val(lr, S)
        top = max(d.atypical_entries(), default=0)
        expect = sum((top - d.entries[l]) * (1 if d.kind(l) == "e" else -1) for l, _ in d.arc_positions())
        assert val(up - lr) == expect
        if all(d.kind(l) == "e" for l, _ in d.arc_positions()):
            assert val(up - lr) >= 0

    def test_validity_predicate(self):
        assert is_valid(example8())

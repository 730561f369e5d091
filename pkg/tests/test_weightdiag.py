import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchar.oracles import random_dominant_weight, random_tc_weight
from superchar.render import render_weight_diagram
from superchar.roots import PreconditionError, RhoWeight, odd_root, s_norm, standard_atypical_set
from superchar.weightdiag import (
    NoPathError,
    WeightDiagram,
    c_lexi,
    enumerate_paths,
    enumerate_sources,
    from_weight_diagram,
    is_totally_connected,
    kl_polynomial,
    mu_bar,
    right_move,
    skips_along,
    to_weight_diagram,
    trivial_path,
    valuation,
)

LAM = RhoWeight([10, 9, 8, 6, 5, 4], [2, 4, 6, 8])
MU = RhoWeight([10, 9, 6, 5, 4, 1], [1, 2, 4, 6])
EX11 = RhoWeight([10, 9, 7, 5, 4], [1, 4, 6, 7])

seeds = st.integers(0, 10**9)


class TestDiagrams:
    def test_example11(self):
        D = to_weight_diagram(EX11)
        assert D.to_json() == {"crosses": [4, 7], "greater": [5, 9, 10], "less": [1, 6]}

    def test_example26_lambda(self):
        assert to_weight_diagram(LAM).to_json() == {"crosses": [4, 6, 8], "greater": [5, 9, 10], "less": [2]}

    def test_empty(self):
        D = to_weight_diagram(RhoWeight([], []))
        assert D.crosses == ()
        assert render_weight_diagram(D, (0, 2)).splitlines() == [" . . .", " 0 1 2"]

    def test_render_example11(self):
        top, axis = render_weight_diagram(to_weight_diagram(EX11), (0, 11)).splitlines()
        glyphs = dict(zip(axis.split(), top.split()))
        assert glyphs == {
            "0": ".", "1": "<", "2": ".", "3": ".", "4": "x", "5": ">",
            "6": "<", "7": "x", "8": ".", "9": ">", "10": ">", "11": ".",
        }

    def test_repeated_entries_rejected(self):
        with pytest.raises(PreconditionError):
            to_weight_diagram(RhoWeight([3, 3], [1]))

    @given(seeds, st.integers(0, 4), st.integers(0, 4))
    def test_inverse(self, seed, m, n):
        lr = random_dominant_weight(random.Random(seed), m, n)
        D = to_weight_diagram(lr)
        assert from_weight_diagram(D) == lr
        assert WeightDiagram.from_json(D.to_json()) == D


class TestRightMoves:
    def test_example26(self):
        D = to_weight_diagram(LAM)
        assert right_move(D, 1).crosses == (6, 8, 12)
        assert right_move(D, 2).crosses == (4, 7, 8)
        assert right_move(D, 3).crosses == (4, 6, 11)

    def test_single_cross(self):
        D = WeightDiagram.from_json({"crosses": [0]})
        assert right_move(D, 1).crosses == (1,)

    def test_label_out_of_range(self):
        with pytest.raises((ValueError, IndexError)):
            right_move(to_weight_diagram(LAM), 4)


class TestPaths:
    def test_example28(self):
        Dl, Dm = to_weight_diagram(LAM), to_weight_diagram(MU)
        paths = enumerate_paths(Dm, Dl)
        assert sorted(str(p) for p in paths) == ["R1 o R1 o R2", "R1 o R1 o R2 o R3 o R3"]
        K = kl_polynomial(Dl, Dm)
        assert str(K) == "q^5 + q^3"
        assert K(-1) == -2
        path, length = trivial_path(Dl, Dm)
        assert str(path) == "R1 o R1 o R2 o R3 o R3" and length == 5

    def test_identity(self):
        D = to_weight_diagram(LAM)
        assert [str(p) for p in enumerate_paths(D, D)] == ["id"]
        assert str(kl_polynomial(D, D)) == "1"
        assert trivial_path(D, D)[1] == 0

    def test_unreachable(self):
        Dl, Dm = to_weight_diagram(LAM), to_weight_diagram(MU)
        assert enumerate_paths(Dl, Dm) == set()
        with pytest.raises(NoPathError):
            trivial_path(Dm, Dl)

    def test_total_connectivity(self):
        assert is_totally_connected(EX11)
        assert not is_totally_connected(LAM)
        assert is_totally_connected(RhoWeight([3], [3]))
        assert is_totally_connected(RhoWeight([3], [1]))

    @given(seeds, st.integers(1, 3), st.integers(1, 3))
    def test_trivial_path_is_strictly_longest(self, seed, m, n):
        rng = random.Random(seed)
        lr = random_dominant_weight(rng, m, n)
        Dl = to_weight_diagram(lr)
        for Dm in enumerate_sources(Dl, 4):
            paths = enumerate_paths(Dm, Dl)
            _, length = trivial_path(Dl, Dm)
            others = [len(p.moves) for p in paths if len(p.moves) != length]
            assert all(o < length for o in others)
            assert sum(1 for p in paths if len(p.moves) == length) == 1


class TestMuBar:
    def test_example32(self):
        bar, w = mu_bar(to_weight_diagram(MU), to_weight_diagram(LAM), LAM)
        assert bar == RhoWeight([10, 9, 6, 4, 5, 1], [2, 1, 4, 6])
        assert w.length == 2
        assert w.act_exp(MU.exponent()) == bar.exponent()
        S = [odd_root(6, 2), odd_root(4, 3), odd_root(3, 4)]
        assert s_norm(LAM - bar, S) == 7
        path, length = trivial_path(to_weight_diagram(LAM), to_weight_diagram(MU))
        assert skips_along(to_weight_diagram(MU), path) == 2
        assert valuation(LAM, to_weight_diagram(MU)) == 7

    def test_identity(self):
        D = to_weight_diagram(EX11)
        bar, w = mu_bar(D, D, EX11)
        assert bar == EX11 and w.length == 0

    @given(seeds, st.integers(1, 3), st.integers(1, 3))
    def test_valuation_is_path_length_plus_skips(self, seed, m, n):
        lr = random_tc_weight(random.Random(seed), m, n)
        Dl = to_weight_diagram(lr)
        for Dm in enumerate_sources(Dl, 4):
            bar, w = mu_bar(Dm, Dl, lr)
            path, length = trivial_path(Dl, Dm)
            assert valuation(lr, Dm) == length + w.length
            assert w.length == skips_along(Dm, path)
            assert w.sign == (-1) ** w.length


class TestSources:
    def test_zero_bound(self):
        D = to_weight_diagram(EX11)
        assert enumerate_sources(D, 0) == [D]

    def test_gl11(self):
        lr = RhoWeight([0], [0])
        srcs = enumerate_sources(to_weight_diagram(lr), 2)
        assert [s.crosses for s in srcs] == [(-2,), (-1,), (0,)]
        assert sorted(c_lexi(lr, [odd_root(1, 1)], 2), key=lambda w: w.a) == [
            RhoWeight([-2], [-2]),
            RhoWeight([-1], [-1]),
            RhoWeight([0], [0]),
        ]

    def test_c_lexi_single_arc(self):
        lr = RhoWeight([4, 1], [1])
        out = c_lexi(lr, standard_atypical_set(lr), 3)
        assert len(out) == 4

    @given(seeds, st.integers(1, 3), st.integers(1, 3))
    def test_sources_biject_with_c_lexi(self, seed, m, n):
        lr = random_tc_weight(random.Random(seed), m, n)
        Dl = to_weight_diagram(lr)
        bars = {mu_bar(Dm, Dl, lr)[0] for Dm in enumerate_sources(Dl, 3)}
        # members with a repeated entry are killed by the alternating sum
        lexi = {w for w in c_lexi(lr, standard_atypical_set(lr), 3) if _distinct(w)}
        assert bars == lexi

    @given(seeds, st.integers(1, 3), st.integers(1, 3))
    def test_totally_connected_iff_monomial(self, seed, m, n):
        lr = random_dominant_weight(random.Random(seed), m, n, 0, 6)
        Dl = to_weight_diagram(lr)
        srcs = enumerate_sources(Dl, 4)
        monomial = all(kl_polynomial(Dl, Dm).is_monomial() for Dm in srcs)
        single = all(len(enumerate_paths(Dm, Dl)) == 1 for Dm in srcs)
        assert monomial == single
        if is_totally_connected(lr):
            assert monomial


def _distinct(w):
    return len(set(w.a)) == len(w.a) and len(set(w.b)) == len(w.b)


def test_gap_needs_valuation_beyond_gap():
    # the first two-path source of crosses at 0 and g sits at valuation g + 1
    expected = {2: "q^3 + q", 3: "q^4 + q^2", 5: "q^6 + q^4"}
    for g in (2, 3, 5):
        lr = RhoWeight([g, 0], [0, g])
        Dl = to_weight_diagram(lr)
        assert all(len(enumerate_paths(Dm, Dl)) == 1 for Dm in enumerate_sources(Dl, g))
        two = [Dm for Dm in enumerate_sources(Dl, g + 1) if len(enumerate_paths(Dm, Dl)) > 1]
        assert [Dm.crosses for Dm in two] == [(-1, 0)]
        assert str(kl_polynomial(Dl, two[0])) == expected[g]


@given(seeds, st.integers(1, 2), st.integers(1, 2))
def test_non_tc_has_two_paths_with_enough_valuation(seed, m, n):
    lr = random_dominant_weight(random.Random(seed), m, n, 0, 6)
    Dl = to_weight_diagram(lr)
    multi = any(len(enumerate_paths(Dm, Dl)) > 1 for Dm in enumerate_sources(Dl, 8))
    assert multi == (not is_totally_connected(lr))

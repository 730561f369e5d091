from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchar.roots import (
    NormalizationError,
    PreconditionError,
    RhoWeight,
    Root,
    RootSystemError,
    SimpleRootSystem,
    atypicality,
    check_weight,
    normalize_to_integral,
    odd_reflection,
    odd_root,
    positive_roots,
    raised,
    reflect_rho_weight,
    rho,
    s_norm,
    standard_atypical_set,
    twist,
    weight_minus_rho,
    weight_plus_rho,
)


def shuffles(m, n):
    return st.permutations(["e"] * m + ["d"] * n).map(lambda s: SimpleRootSystem.from_string("".join(s)))


class TestRootSystems:
    def test_round_trip_string(self):
        pi = SimpleRootSystem.from_string("eded")
        assert pi.to_string() == "eded"
        assert (pi.m, pi.n) == (2, 2)
        assert not pi.is_standard()
        assert SimpleRootSystem.standard(2, 2).is_standard()

    def test_bad_string(self):
        with pytest.raises(RootSystemError):
            SimpleRootSystem.from_string("exd")

    @given(shuffles(3, 2))
    def test_positive_root_counts(self, pi):
        even, odd = positive_roots(pi)
        assert len(even) == 3 + 1
        assert len(odd) == 6
        assert len(pi.simple_roots()) == 4

    def test_rho_standard_gl11(self):
        assert rho(SimpleRootSystem.standard(1, 1)) == RhoWeight([Fraction(-1, 2)], [Fraction(-1, 2)])

    @given(shuffles(2, 2))
    def test_rho_pairs_with_simple_roots(self, pi):
        # (rho, alpha) = (alpha, alpha) / 2 for simple alpha
        r = rho(pi)
        for alpha in pi.simple_roots():
            assert r.pair(alpha) == Fraction(alpha.norm(), 2)


class TestOddReflection:
    def test_swaps_adjacent_pair(self):
        pi = SimpleRootSystem.from_string("eded")
        beta = Root(("d", 1), ("e", 2))
        assert odd_reflection(pi, beta).to_string() == "eedd"

    def test_non_simple_rejected(self):
        with pytest.raises(PreconditionError):
            odd_reflection(SimpleRootSystem.standard(2, 2), odd_root(1, 2))

    @given(shuffles(2, 2), st.data())
    def test_reflection_is_an_involution(self, pi, data):
        odd_simple = [r for r in pi.simple_roots() if r.is_odd]
        beta = data.draw(st.sampled_from(odd_simple))
        pi2 = odd_reflection(pi, beta)
        assert odd_reflection(pi2, -beta) == pi

    def test_rho_weight_shift_on_orthogonal(self):
        pi = SimpleRootSystem.from_string("eded")
        beta = Root(("d", 1), ("e", 2))
        lr = RhoWeight([3, 2], [2, 5])
        # (lambda^rho, beta) = 0, so the shifted weight gains beta
        assert reflect_rho_weight(lr, beta, pi) == RhoWeight([3, 1], [1, 5])
        lr = RhoWeight([3, 2], [4, 5])
        assert reflect_rho_weight(lr, beta, pi) == lr

    @given(shuffles(2, 2), st.data())
    def test_shifted_weight_tracks_rho_change(self, pi, data):
        # lambda is fixed when (lambda^rho, beta) != 0, so lambda^rho changes by rho' - rho = beta
        odd_simple = [r for r in pi.simple_roots() if r.is_odd]
        beta = data.draw(st.sampled_from(odd_simple))
        pi2 = odd_reflection(pi, beta)
        assert rho(pi2) - rho(pi) == RhoWeight([0, 0], [0, 0]).add_root(beta)


class TestWeights:
    def test_rho_shift_inverse(self):
        pi = SimpleRootSystem.standard(2, 1)
        lam = RhoWeight([2, 0], [1])
        assert weight_minus_rho(weight_plus_rho(lam, pi), pi) == lam

    def test_check_weight_flags(self):
        pi = SimpleRootSystem.standard(2, 2)
        flags = check_weight(RhoWeight([1, 0], [0, 0]), pi)
        assert flags["dominant"] and flags["integral"]
        # rho is half-integral for gl(2|2), so lambda^rho is not integral
        assert not flags["in_PPlus"]
        assert not check_weight(RhoWeight([0, 1], [0, 0]), pi)["dominant"]

    def test_normalize_to_integral(self):
        pi = SimpleRootSystem.standard(2, 2)
        lam, c = normalize_to_integral(RhoWeight([0, 0], [0, 0]), pi)
        assert c == Fraction(1, 2)
        assert (lam + rho(pi)).is_integral()
        assert twist(RhoWeight([0, 0], [0, 0]), c) == lam

    def test_normalize_rejects_mixed_offsets(self):
        pi = SimpleRootSystem.standard(1, 1)
        with pytest.raises(NormalizationError):
            normalize_to_integral(RhoWeight([Fraction(1, 2)], [0]), pi)

    def test_standard_atypical_set(self):
        lr = RhoWeight([10, 9, 7, 5, 4], [1, 4, 6, 7])
        assert standard_atypical_set(lr) == [odd_root(3, 4), odd_root(5, 2)]
        assert atypicality(lr) == 2

    def test_standard_atypical_set_requires_strict_dominance(self):
        with pytest.raises(PreconditionError):
            standard_atypical_set(RhoWeight([1, 2], [0]))

    def test_raised_and_norm(self):
        lr = RhoWeight([2, 1], [1, 2])
        S = standard_atypical_set(lr)
        up = raised(lr, S)
        assert up == RhoWeight([2, 2], [2, 2])
        assert s_norm(up - lr, S) == 1

    def test_norm_outside_span(self):
        with pytest.raises(PreconditionError):
            s_norm(RhoWeight([1, 0], [0, 0]), [odd_root(1, 1)])

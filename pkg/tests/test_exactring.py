import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchar.exactring import (
    Alternant,
    DenFactor,
    InexactDivisionError,
    LaurentPoly,
    OrientationError,
    RationalChar,
    WeylElement,
    alternant_quotients_equal,
    divide_binomial,
    exact_divide,
    expand_truncated,
    format_poly,
    oriented_factor,
    parse_poly,
    poly_divide,
    rc_equal,
    skew_symmetrize,
    straighten,
    weyl_act,
    weyl_group,
)

M, N = 2, 1


def poly_strategy(m=M, n=N, max_terms=4, lo=-3, hi=3):
    exps = st.tuples(*[st.integers(lo, hi).map(lambda v: 2 * v) for _ in range(m + n)])
    return st.dictionaries(exps, st.integers(-4, 4), max_size=max_terms).map(lambda d: LaurentPoly(m, n, d))


def gamma_strategy(m=M, n=N):
    return st.tuples(*[st.integers(0, 1).map(lambda v: 2 * v) for _ in range(m + n)]).filter(any)


def binomial(m, n, sign, gamma):
    return DenFactor(gamma, sign).as_poly(m, n)


def brute_skew(P):
    out = LaurentPoly.zero(P.m, P.n)
    for w in weyl_group(P.m, P.n):
        out = out + P.act(w) * w.sign
    return out


class TestLaurentPoly:
    @given(poly_strategy(), poly_strategy(), poly_strategy())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == LaurentPoly.zero(M, N)

    @given(poly_strategy())
    def test_format_parse_round_trip(self, p):
        assert parse_poly(format_poly(p), M, N) == p

    def test_half_exponent_formatting(self):
        p = LaurentPoly.monomial(1, 1, (1, 1))
        assert str(p) == "x1^(1/2)*y1^(1/2)"
        assert parse_poly(str(p), 1, 1) == p

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            LaurentPoly.one(1, 1) + LaurentPoly.one(2, 1)

    def test_at_one_and_top_level(self):
        p = LaurentPoly(1, 1, {(2, 0): 3, (0, -2): -1})
        assert p.at_one() == 2
        assert p.top_level() == 2


class TestWeyl:
    def test_group_size_and_signs(self):
        W = list(weyl_group(3, 2))
        assert len(W) == 12
        assert sum(w.sign for w in W) == 0

    def test_action_is_a_homomorphism(self):
        e = (6, 4, 2, 2, 0)
        W = list(weyl_group(3, 2))
        for u, v in itertools.product(W[:6], W[6:]):
            assert (u * v).act_exp(e) == u.act_exp(v.act_exp(e))
            assert (u * v).sign == u.sign * v.sign

    def test_inverse(self):
        for w in weyl_group(3, 1):
            assert (w * w.inverse()) == WeylElement.identity(3, 1)


class TestDivision:
    @given(poly_strategy(), st.sampled_from([1, -1]), gamma_strategy())
    def test_divide_binomial_inverts_multiplication(self, p, sign, gamma):
        q = p * binomial(M, N, sign, gamma)
        assert divide_binomial(q, sign, gamma) == p

    def test_divide_binomial_inexact(self):
        with pytest.raises(InexactDivisionError):
            divide_binomial(LaurentPoly.one(1, 1), -1, (2, 2))

    def test_divide_by_mixed_direction(self):
        # 1 - e^{-(e1 - e2)} has a mixed-sign direction
        g = (2, -2, 0)
        f = LaurentPoly(2, 1, {(0, 0, 0): 1, (-2, 2, 0): -1})
        p = LaurentPoly(2, 1, {(4, 0, 2): 1, (0, 2, 0): -3})
        assert divide_binomial(p * f, 1, g) == p

    @given(poly_strategy(max_terms=3), poly_strategy(max_terms=3))
    def test_poly_divide(self, p, q):
        if q.is_zero():
            return
        assert poly_divide(p * q, q) == p

    def test_exact_divide_with_unit(self):
        f = DenFactor((2, 0, 2), -1)
        p = LaurentPoly(2, 1, {(2, 2, 0): 5})
        num = (p * f.as_poly(2, 1)).shift((2, 0, 0))
        assert exact_divide(num, [f], (2, 0, 0)) == p


class TestDenominators:
    def test_non_canonical_rejected(self):
        with pytest.raises(OrientationError):
            DenFactor((-2, 0, 2), 1)

    @given(st.sampled_from([1, -1]), gamma_strategy())
    def test_oriented_factor_identity(self, sign, gamma):
        neg = tuple(-g for g in gamma)
        scalar, shift, f = oriented_factor(sign, neg)
        lhs = LaurentPoly(M, N, {(0,) * (M + N): 1, gamma: -sign})
        rhs = (f.as_poly(M, N) * scalar).shift(shift)
        assert lhs == rhs

    def test_rc_equal_cancels_common_factor(self):
        f = DenFactor((2, 0, 2), -1)
        p = LaurentPoly(2, 1, {(2, 0, 0): 1, (0, 2, 0): 2})
        assert rc_equal(RationalChar(p * f.as_poly(2, 1), [f, f]), RationalChar(p, [f]))
        assert not rc_equal(RationalChar(p, [f]), RationalChar(p, []))

    def test_build_flips_orientation(self):
        num = LaurentPoly.one(1, 1)
        X = RationalChar.build(num, [(-1, (-2, -2))])
        # 1 / (1 + e^{g}) with g = e1 - d1
        Y = RationalChar(LaurentPoly.one(1, 1), [DenFactor((2, 2), -1)], (2, 2))
        assert rc_equal(X, Y)


class TestAlternant:
    @given(poly_strategy(m=2, n=2))
    def test_from_poly_matches_brute_force(self, p):
        assert Alternant.from_poly(p).to_poly() == brute_skew(p)

    @given(poly_strategy(m=2, n=2))
    def test_from_skew_round_trip(self, p):
        A = Alternant.from_poly(p)
        assert Alternant.from_skew(A.to_poly()) == A

    def test_from_skew_rejects_symmetric(self):
        with pytest.raises(ValueError):
            Alternant.from_skew(LaurentPoly(2, 1, {(2, 0, 0): 1, (0, 2, 0): 1}))

    def test_straighten_sign(self):
        assert straighten((0, 2, 4), 2) == (-1, (2, 0, 4))
        assert straighten((2, 2, 0), 2) == (0, None)

    @given(poly_strategy(m=2, n=1, max_terms=2))
    def test_times_symmetric(self, p):
        s = LaurentPoly(2, 1, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 4})
        assert Alternant.from_poly(p).times_symmetric(s).to_poly() == brute_skew(p) * s

    def test_skew_symmetrize_matches_termwise_sum(self):
        num = LaurentPoly(2, 1, {(4, 0, 2): 1})
        X = RationalChar.build(num, [(-1, (2, 0, 2))])
        total = None
        for w in weyl_group(2, 1):
            term = weyl_act(w, X) * w.sign
            total = term if total is None else _add(total, term)
        assert rc_equal(skew_symmetrize(X), total)

    def test_quotient_equality_agrees_with_rc_equal(self):
        f1, f2 = DenFactor((2, 0, 2), -1), DenFactor((0, 2, 2), -1)
        A = Alternant.from_poly(LaurentPoly(2, 1, {(2, 0, 0): 1}))
        B = A.times_symmetric(f1.as_poly(2, 1) * f2.as_poly(2, 1))
        assert alternant_quotients_equal(A, [], B, [f1, f2])
        assert rc_equal(RationalChar(A.to_poly(), []), RationalChar(B.to_poly(), [f1, f2]))


def _add(X, Y):
    """Sum of two RationalChar values over the product denominator."""
    from superchar.exactring import den_product, exp_add

    m, n = X.m, X.n
    num = X.num * den_product(Y.den, m, n) * LaurentPoly.monomial(m, n, Y.unit)
    num = num + Y.num * den_product(X.den, m, n) * LaurentPoly.monomial(m, n, X.unit)
    return RationalChar(num, X.den + Y.den, exp_add(X.unit, Y.unit))


class TestExpansion:
    def test_geometric_series_gl11(self):
        X = RationalChar(LaurentPoly.one(1, 1), [DenFactor((2, 2), -1)])
        assert str(expand_truncated(X, 3)) == "1 - x1^-1*y1^-1 + x1^-2*y1^-2 - x1^-3*y1^-3"

    def test_zero_order(self):
        X = RationalChar(LaurentPoly.monomial(1, 1, (4, 0)), [DenFactor((2, 2), 1)])
        assert expand_truncated(X, 0) == LaurentPoly.monomial(1, 1, (4, 0))

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            expand_truncated(RationalChar(LaurentPoly.one(1, 1)), -1)

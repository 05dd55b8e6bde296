"""Ramification invariants, Newton polygon M, thresholds, Krasner refinement."""

from fractions import Fraction

import pytest

from hyperval.errors import NoRootFound
from hyperval.padic import OPoly, eis_poly, make_field, valuation
from hyperval.ramification import (
    d_of,
    krasner_refine,
    krasner_refine_detailed,
    m_nu,
    m_nu_at,
    n_threshold,
)


def conjugate_difference_m(field):
    # independent oracle for e = 2: the conjugates are pi and -a1 - pi,
    # so the difference is 2 pi + a1 and M is its valuation over e
    assert field.e == 2
    a1 = field.from_w(field.eis[1])
    diff = field.from_int(2) * field.pi() + a1
    return Fraction(valuation(diff), field.e)


class TestD:
    def test_table(self):
        assert d_of(1, 7) == 1
        assert d_of(2, 2) == 4
        assert d_of(2, 5) == 2
        assert d_of(6, 3) == 12


class TestM:
    def test_q5_sqrt5(self, q5_sqrt5):
        assert m_nu(q5_sqrt5) == Fraction(1, 2)
        assert conjugate_difference_m(q5_sqrt5) == Fraction(1, 2)

    def test_q2_sqrt2(self, q2_sqrt2):
        assert m_nu(q2_sqrt2) == Fraction(3, 2)
        assert conjugate_difference_m(q2_sqrt2) == Fraction(3, 2)

    def test_e1_convention(self, q2):
        assert m_nu(q2) == 0

    def test_uniformizer_independence(self, q2_sqrt2):
        # recompute with pi0 = pi (1 + pi); its minimal polynomial is built
        # from the symmetric functions of the conjugate pair
        K = q2_sqrt2
        pi = K.pi()
        pi0 = pi * (K.one() + pi)
        s1 = -K.from_w(K.eis[1])          # pi + pi'
        s2 = K.from_w(K.eis[0])           # pi pi'
        sum0 = s1 + s1 * s1 - K.from_int(2) * s2
        prod0 = s2 * (K.one() + s1 + s2)
        minpoly = OPoly(K, [prod0, -sum0, K.one()])
        assert minpoly(pi0).is_zero_at_prec()
        assert m_nu_at(K, pi0, minpoly) == m_nu(K)

    def test_e3_tame_matches_direct(self):
        # for X^3 - 2p over Q_p with p != 3, conjugate differences are
        # pi (1 - zeta_3) units times pi: M_int = 1 exactly
        K = make_field(5, 1, 3, [-10, 0, 0, 1], [0, 1], 18)
        assert m_nu(K) == Fraction(1, 3)


class TestThreshold:
    def test_tame_q5_sqrt5(self, q5_sqrt5):
        rep = n_threshold(q5_sqrt5)
        assert rep.tame and rep.n_min_paper == 1 and rep.n_min_conservative == 1
        assert not rep.de_over_e2_violated
        assert rep.d_e == 2

    def test_wild_q2_sqrt2(self, q2_sqrt2):
        rep = n_threshold(q2_sqrt2)
        assert not rep.tame
        assert rep.m_p1 == Fraction(3, 2) and rep.m_int == 3
        assert rep.n_min_paper == 7
        assert rep.n_min_conservative == 13
        assert rep.de_over_e2_violated  # 3/2 > d(2)/4 = 1
        assert rep.de_over_e_ok         # 3/2 <= d(2)/2 = 2

    def test_unramified_tame(self, q2):
        rep = n_threshold(q2)
        assert rep.tame and rep.n_min_paper == 1


class TestKrasnerRefine:
    def test_q5_sqrt5_from_pi_plus_5(self, q5_sqrt5):
        K = q5_sqrt5
        P = eis_poly(K)
        b = K.pi() + K.from_int(5)
        # nu(P(b)) = nu(10 pi + 25) = 3 in the pi normalization
        assert valuation(P(b)) == 3
        c = krasner_refine(P, b, 2)
        assert P(c).is_zero_at_prec()
        assert c == K.pi()

    def test_wild_perturbed_seed(self):
        K = make_field(2, 1, 2, [-2, 0, 1], [0, 1], N=44, n=13)
        P = eis_poly(K)
        b = K.pi() * (K.one() + K.pi() ** 13)
        res = krasner_refine_detailed(P, b, 13)
        c = res["root"]
        assert (c * c) == K.from_int(2)
        assert res["steps"] <= 8

    def test_already_root(self, q2_sqrt2):
        P = eis_poly(q2_sqrt2)
        res = krasner_refine_detailed(P, q2_sqrt2.pi(), 4)
        assert res["steps"] == 0 and res["root"] == q2_sqrt2.pi()

    def test_precondition_failure(self, q2_sqrt2):
        P = eis_poly(q2_sqrt2)
        with pytest.raises(NoRootFound):
            krasner_refine(P, q2_sqrt2.pi() + q2_sqrt2.one(), 4)

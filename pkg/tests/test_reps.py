"""Representative maps and digit expansions."""

import random

import pytest

from hyperval.padic import lift_to_prec, lifts_of, reduce_mod, residue, valuation
from hyperval.reps import (
    cohen_expand,
    digit_assemble,
    digit_expand,
    eta_rep,
    lambda_rep,
    p_power_congruence_check,
)


class TestLambda:
    def test_q5_level1_of_2(self, q5):
        # 2^5 = 32 = 7 mod 25; the other lift 7 gives 7^5 = 16807 = 7 mod 25
        lam = lambda_rep(q5, q5.residue_field.from_int(2), 1)
        assert lam.coeffs[0] == 7
        assert pow(7, 5, 25) == 7

    def test_level0_is_plain_lift(self, q5):
        lam = lambda_rep(q5, q5.residue_field.from_int(3), 0)
        assert lam.coeffs[0] == 3 and lam.prec == 1

    def test_one_maps_to_one(self, q2_sqrt2):
        lam = lambda_rep(q2_sqrt2, q2_sqrt2.residue_field.one(), 3)
        assert lam == reduce_mod(q2_sqrt2.one(), 4)

    def test_lift_independence(self, q5_sqrt5, w_f4):
        rng = random.Random(41)
        for K in (q5_sqrt5, w_f4):
            k = K.residue_field
            for _ in range(50):
                alpha = rng.choice(k.elements())
                l = rng.randrange(0, 4)
                beta = k.frobenius_inverse(alpha, l)
                base = lift_to_prec(K.from_w(beta), K.N)
                lam = lambda_rep(K, alpha, l)
                # perturb the lift by a random element of m
                noise = K.pi() * K.from_int(rng.randrange(0, K.p ** 3))
                other = reduce_mod((base + noise) ** (K.p ** l), l + 1)
                assert other == lam


class TestPPowerCongruence:
    def test_q2_1_vs_3(self, q2):
        report = p_power_congruence_check(q2.from_int(1), q2.from_int(3), 4)
        assert all(m["margin"] >= m["required"] for m in report["margins"])

    def test_q2_sqrt2_1_vs_1_plus_pi(self, q2_sqrt2):
        K = q2_sqrt2
        report = p_power_congruence_check(K.one(), K.one() + K.pi(), 4)
        # (1+pi)^2 - 1 = 2pi + 2 has valuation 2 >= i+1 = 2
        assert report["margins"][0]["margin"] == 2

    def test_equal_elements_trivial(self, q5):
        a = q5.from_int(12)
        report = p_power_congruence_check(a, a, 3)
        assert all(m["margin"] >= a.prec for m in report["margins"])

    def test_precondition(self, q5):
        with pytest.raises(ValueError):
            p_power_congruence_check(q5.from_int(1), q5.from_int(2), 2)

    def test_random_pairs(self, q2_sqrt2):
        rng = random.Random(17)
        K = q2_sqrt2
        for _ in range(100):
            a = K.from_coeffs([rng.randrange(2 ** 8), rng.randrange(2 ** 8)])
            b = a + K.pi() * K.from_coeffs([rng.randrange(2 ** 6), rng.randrange(2 ** 6)])
            p_power_congruence_check(a, b, 4)


class TestEta:
    def test_q5_level1(self, q5):
        cls = eta_rep(q5, q5.residue_field.from_int(2), 1)
        assert cls.gamma == 0 and cls.ucoeffs == (7,)

    def test_eta_matches_lambda_through_class_of(self, q5_sqrt5):
        from hyperval.hyperfield import Hyperfield
        rng = random.Random(4)
        K = q5_sqrt5
        for _ in range(100):
            alpha = rng.choice(K.residue_field.elements())
            l = rng.randrange(0, 3)
            H = Hyperfield(K, l + 1)
            got = eta_rep(K, alpha, l)
            if K.residue_field.is_zero(alpha):
                assert got.is_zero
            else:
                assert got == H.class_of(lambda_rep(K, alpha, l))


class TestDigitExpand:
    def test_q5_ten_level1(self, q5):
        exp = digit_expand(q5.from_int(10), 1)
        k = q5.residue_field
        assert exp.digits == (k.zero(), k.from_int(2))
        back = digit_assemble(q5, exp)
        # assembly is 0 + 7*5 = 35 = 10 mod 25
        assert back == reduce_mod(q5.from_int(10), 2)
        assert back.coeffs[0] == 10

    def test_uniformizer(self, q2_sqrt2):
        K = q2_sqrt2
        exp = digit_expand(K.pi(), 2)
        k = K.residue_field
        assert exp.digits == (k.zero(), k.one(), k.zero())
        assert digit_assemble(K, exp) == reduce_mod(K.pi(), 3)

    def test_round_trip_random(self, q5_sqrt5, q2_sqrt2, w_f4):
        rng = random.Random(23)
        for K in (q5_sqrt5, q2_sqrt2, w_f4):
            for _ in range(170):
                coeffs = [rng.randrange(K.p ** 5) for _ in range(K.e * K.f)]
                a = K.from_coeffs(coeffs)
                l = rng.randrange(0, min(7, K.N - 1))
                exp = digit_expand(a, l)
                assert digit_assemble(K, exp) == reduce_mod(a, l + 1)


class TestCohenExpand:
    def test_q5_matches_digit_expand(self, q5):
        # e=1 collapse: pi = p, the two expansions agree
        a = q5.from_int(10)
        assert cohen_expand(a, 1).digits == digit_expand(a, 1).digits

    def test_q2_sqrt2_a3_l3(self, q2_sqrt2):
        K = q2_sqrt2
        exp = cohen_expand(K.from_int(3), 3)
        assert exp.digit_count() == 2  # s = floor(3/2) = 1
        assert exp.digits == (K.residue_field.one(), K.residue_field.one())
        assert digit_assemble(K, exp) == reduce_mod(K.from_int(3), 4)

    def test_single_digit_one(self, q2_sqrt2):
        exp = cohen_expand(q2_sqrt2.one(), 3)
        assert exp.digits[0] == q2_sqrt2.residue_field.one()
        assert all(q2_sqrt2.residue_field.is_zero(d) for d in exp.digits[1:])

    def test_rejects_non_w_elements(self, q2_sqrt2):
        with pytest.raises(ValueError):
            cohen_expand(q2_sqrt2.pi(), 2)

    def test_round_trip_random_w(self, q2_sqrt2, w_f4):
        rng = random.Random(31)
        for K in (q2_sqrt2, w_f4):
            for _ in range(120):
                w = [rng.randrange(K.p ** 6) for _ in range(K.f)]
                a = K.from_w(tuple(w))
                l = rng.randrange(0, min(7, K.N - 1))
                exp = cohen_expand(a, l)
                assert digit_assemble(K, exp) == reduce_mod(a, l + 1)

    def test_digits_are_plpowers(self, q2_sqrt2):
        # each digit value is the p^l-th power of a ring element
        K = q2_sqrt2
        rng = random.Random(6)
        l = 3
        for _ in range(30):
            a = K.from_w((rng.randrange(2 ** 6),))
            for alpha in cohen_expand(a, l).digits:
                lam = lambda_rep(K, alpha, l)
                root = K.from_w(K.residue_field.frobenius_inverse(alpha, l))
                assert reduce_mod(root ** (K.p ** l), l + 1) == lam

"""Homomorphism presentation, checking, search, and lifting."""

import json
import random

import pytest

from hyperval.errors import (
    NotNormalForm,
    NotTame,
    RestrictionMismatch,
    ThresholdNotMet,
)
from hyperval.hyperfield import HfClass, Hyperfield
from hyperval.morphisms import (
    EmbeddingSpec,
    HomSpec,
    check_hom,
    identity_hom,
    is_bijective,
    krasner_f2_example_report,
    lift_over,
    lift_tame,
    lift_unramified,
    lift_wild,
    search_homs,
    search_isos,
    tame_normal_form,
    unit_group_gens,
    verify_embedding,
    verify_embedding_induces,
    UnitGroup,
)
from hyperval.padic import make_field, render_elem, valuation


class TestUnitGroup:
    def test_q2_level3_is_c2xc2(self, q2):
        pres = unit_group_gens(q2, 3)
        assert pres["order"] == 4
        assert sorted(pres["gen_orders"]) == [2, 2]
        # oracle: (Z/8)^* = {1,3,5,7}, all non-identity elements have order 2
        assert all(pow(u, 2, 8) == 1 for u in (1, 3, 5, 7))

    def test_q5_level1_cyclic(self, q5):
        pres = unit_group_gens(q5, 1)
        assert pres["order"] == 4 and pres["gen_orders"] == [4]

    def test_q2_sqrt2_level2(self, q2_sqrt2):
        pres = unit_group_gens(q2_sqrt2, 2)
        assert pres["order"] == 2 and pres["gen_orders"] == [2]
        assert pres["generators"] == [[1, 1]]  # 1 + pi

    def test_coords_reconstruct(self, q5_sqrt5):
        g = UnitGroup(Hyperfield(q5_sqrt5, 2))
        for u in g.elements[:20]:
            vec = g.coords[u]
            acc = g.identity
            for gen, k in zip(g.generators, vec):
                acc = g.mul(acc, g.power(gen, k))
            assert acc == u

    def test_big_2group(self):
        K = make_field(2, 1, 2, [-2, 0, 1], [0, 1], N=44, n=13)
        g = UnitGroup(Hyperfield(K, 13))
        assert g.order == 2 ** 12
        prod = 1
        for d in g.gen_orders:
            prod *= d
        assert prod == g.order


class TestCheckHom:
    def test_identity_passes(self, q2):
        H = Hyperfield(q2, 1)
        report = check_hom(identity_hom(H))
        assert report["ok"]

    def test_krasner_f2_example(self, q2):
        H = Hyperfield(q2, 1)
        report = krasner_f2_example_report(H)
        status = {c["id"]: c for c in report["conditions"]}
        assert status[1]["status"] == "pass"
        assert status[2]["status"] == "pass"
        assert status[3]["status"] == "pass"
        assert status[4]["status"] == "fail"
        # the explicit witness is the pair ([2], [1])
        assert status[4]["witness"] == "(pi^1 * (1), (1))"

    def test_broken_generator_image_rejected(self, q5):
        H = Hyperfield(q5, 1)
        group = UnitGroup(H)
        gen = group.generators[0]
        bad = {gen: H.one_class()}  # order-4 generator to order-1 image is fine...
        spec = HomSpec(H, H, bad, H.class_of(q5.pi()), _group=group)
        # ...as a monoid map, but it breaks additive containment
        assert not check_hom(spec)["ok"]


class TestSearch:
    def test_self_isos_contain_identity(self, q5_sqrt5):
        H = Hyperfield(q5_sqrt5, 1)
        isos = search_isos(H, H)
        assert len(isos) >= 1
        ident = identity_hom(H)
        assert any(s.sort_key() == ident.sort_key() for s in isos)

    def test_sqrt5_sqrt20_isomorphic(self, q5_sqrt5, q5_sqrt20):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt20, 1)
        isos = search_isos(H1, H2)
        assert len(isos) >= 1
        # cross-check: (sqrt(20)/2)^2 = 5, so the fields really are isomorphic
        assert (20 * pow(2, -2, 5)) % 5 == 5 % 5

    def test_sqrt5_sqrt10_not_isomorphic(self, q5_sqrt5, q5_sqrt10):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt10, 1)
        assert search_homs(H1, H2, over_p=True) == []
        # cross-check: an iso would need w^2 = 2 mod 5, but 2 is not a square
        assert all(pow(w, 2, 5) != 2 for w in range(5))

    def test_search_deterministic(self, q5_sqrt5, q5_sqrt20):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt20, 1)
        a = [json.dumps(s.to_json(), sort_keys=True) for s in search_isos(H1, H2)]
        b = [json.dumps(s.to_json(), sort_keys=True) for s in search_isos(H1, H2)]
        assert a == b


class TestLiftUnramified:
    def test_q2_identity(self, q2):
        H = Hyperfield(q2, 2)
        emb = lift_unramified(identity_hom(H))
        assert emb.apply(q2.from_int(7)) == q2.from_int(7)
        assert verify_embedding(emb)["ok"]

    def test_wf4_self_maps(self, w_f4):
        H = Hyperfield(w_f4, 1)
        homs = search_homs(H, H, over_p=True)
        embs = [lift_unramified(s) for s in homs]
        images = {tuple(e.x_image.coeffs) for e in embs}
        # identity and Frobenius: two distinct embeddings lifting the two homs
        assert len(images) == 2
        for emb, spec in zip(embs, homs):
            assert verify_embedding(emb)["ok"]
            assert verify_embedding_induces(emb, spec, samples=100)["agree"]

    def test_hensel_root_of_h(self, w_f4):
        H = Hyperfield(w_f4, 1)
        emb = lift_unramified(identity_hom(H))
        from hyperval.padic import OPoly
        h = OPoly.from_ints(w_f4, w_f4.h)
        assert h(emb.x_image).is_zero_at_prec()


class TestTameNormalForm:
    def test_already_normal(self, q5_sqrt5):
        K2, pi1 = tame_normal_form(q5_sqrt5)
        assert K2 == q5_sqrt5 and pi1 == q5_sqrt5.pi()

    def test_renormalization(self):
        # X^2 + 5 X - 5 is Eisenstein over Q_5 but not in X^e - pa form
        K = make_field(5, 1, 2, [-5, 5, 1], [0, 1], 16)
        K2, pi1 = tame_normal_form(K)
        assert K2.eis[1] == (0,)
        # pi1 is a root of the renormalized polynomial, inside the old model
        assert (pi1 * pi1 + K.from_w(K.eis[0])).is_zero_at_prec()

    def test_wild_rejected(self, q2_sqrt2):
        K = make_field(2, 1, 2, [-2, 2, 1], [0, 1], 24)
        with pytest.raises(NotNormalForm):
            tame_normal_form(K)


class TestLiftTame:
    def test_identity_gives_pi(self, q5_sqrt5):
        H = Hyperfield(q5_sqrt5, 1)
        emb = lift_tame(identity_hom(H))
        assert emb.pi_image_elem == q5_sqrt5.pi()

    def test_sqrt5_to_sqrt20(self, q5_sqrt5, q5_sqrt20):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt20, 1)
        isos = search_isos(H1, H2)
        emb = lift_tame(isos[0])
        assert emb.pi_image_elem ** 2 == q5_sqrt20.from_int(5)
        assert verify_embedding(emb)["ok"]
        assert verify_embedding_induces(emb, isos[0], samples=100)["agree"]

    def test_negated_pi_image(self, q5_sqrt5):
        H = Hyperfield(q5_sqrt5, 1)
        ident = identity_hom(H)
        neg_pi = H.class_of(-q5_sqrt5.pi())
        spec = HomSpec(H, H, ident.unit_images, neg_pi, _group=ident.group)
        emb = lift_tame(spec)
        assert emb.pi_image_elem == -q5_sqrt5.pi()
        assert emb.pi_image_elem ** 2 == q5_sqrt5.from_int(5)

    def test_deterministic(self, q5_sqrt5, q5_sqrt20):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt20, 1)
        runs = []
        for _ in range(2):
            emb = lift_tame(search_isos(H1, H2)[0])
            runs.append(json.dumps(emb.to_json(), sort_keys=True))
        assert runs[0] == runs[1]

    def test_wild_rejected(self, q2_sqrt2):
        H = Hyperfield(q2_sqrt2, 2)
        with pytest.raises(NotTame):
            lift_tame(identity_hom(H))


@pytest.fixture(scope="module")
def k_wild():
    return make_field(2, 1, 2, [-2, 0, 1], [0, 1], N=44, n=13)


class TestLiftWild:

    def test_below_threshold(self, q2_sqrt2):
        H = Hyperfield(q2_sqrt2, 2)
        with pytest.raises(ThresholdNotMet):
            lift_wild(identity_hom(H))

    def test_identity_recovers_root(self, k_wild):
        H = Hyperfield(k_wild, 13)
        emb = lift_wild(identity_hom(H))
        assert emb.pi_image_elem ** 2 == k_wild.from_int(2)
        report = verify_embedding_induces(emb, identity_hom(H), samples=50)
        assert report["agree"]  # the refined root is pi itself here

    def test_perturbed_representative_still_refines(self, k_wild):
        from hyperval.padic import OPoly, eis_poly
        from hyperval.ramification import krasner_refine_detailed
        b = k_wild.pi() * (k_wild.one() + k_wild.pi() ** 13)
        res = krasner_refine_detailed(eis_poly(k_wild), b, 13)
        assert res["root"] * res["root"] == k_wild.from_int(2)
        assert res["steps"] <= 8


class TestLiftOver:
    def test_qp_base_agrees_with_tame(self, q5, q5_sqrt5, q5_sqrt20):
        H1, H2 = Hyperfield(q5_sqrt5, 1), Hyperfield(q5_sqrt20, 1)
        iso = search_isos(H1, H2)[0]
        phi0 = EmbeddingSpec(q5, q5_sqrt20, None, q5_sqrt20.from_int(5))
        emb = lift_over(phi0, iso)
        direct = lift_tame(iso)
        assert emb.pi_image_elem == direct.pi_image_elem

    def test_restriction_mismatch_guard(self, w_f4):
        # base embedding = Frobenius of W(F_4), hom = identity: incompatible
        H = Hyperfield(w_f4, 1)
        ident = identity_hom(H)
        x = w_f4.x_gen()
        frob_x = -(w_f4.one() + x)  # the other root of x^2 + x + 1
        frob_phi0 = EmbeddingSpec(w_f4, w_f4, frob_x, w_f4.from_int(2))
        with pytest.raises(RestrictionMismatch):
            lift_over(frob_phi0, ident)

    def test_wf4_tower(self, q2, w_f4):
        Hf4 = Hyperfield(w_f4, 1)
        homs = search_homs(Hf4, Hf4, over_p=True)
        phi0 = EmbeddingSpec(q2, w_f4, None, w_f4.from_int(2))
        for spec in homs:
            emb = lift_over(phi0, spec)
            assert verify_embedding_induces(emb, spec, samples=60)["agree"]

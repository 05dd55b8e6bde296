"""Parsers, translation, bounded evaluation, and translation agreement."""

import pytest

from hyperval.errors import FormulaSyntaxError, SortError
from hyperval.hyperfield import Hyperfield
from hyperval.logic import (
    agreement_harness,
    eval_val,
    eval_vhf,
    generate_corpus,
    is_existential,
    is_positive,
    is_positive_existential,
    parse_val,
    parse_vhf,
    render_val,
    render_vhf,
    translate,
    verify_vhf_witness,
)
from hyperval.logic import nodes as N


class TestParseVhf:
    def test_sqrt_phat(self):
        phi = parse_vhf("exists x. x*x = phat")
        assert isinstance(phi, N.LExists)
        assert isinstance(phi.body, N.VEq)

    def test_plus_and_divides(self):
        phi = parse_vhf("plus(x, y, z) and x | y")
        assert isinstance(phi, N.LAnd)
        assert isinstance(phi.left, N.VPlus)
        assert isinstance(phi.right, N.VDivides)

    def test_forall_not_parses_but_is_not_positive(self):
        phi = parse_vhf("forall x. not (x = 0)")
        assert isinstance(phi, N.LForall)
        assert not is_positive(phi)
        assert not is_existential(phi)

    def test_round_trip_canonical(self):
        texts = [
            "exists x. x*x = phat",
            "(plus(x, y, z) and x | y)",
            "exists x. (plus(1, phat, x) or not (x = 1))",
            "forall x. exists y. x*y = 1",
        ]
        for text in texts:
            phi = parse_vhf(text)
            assert render_vhf(parse_vhf(render_vhf(phi))) == render_vhf(phi)

    def test_syntax_error_position(self):
        with pytest.raises(FormulaSyntaxError) as err:
            parse_vhf("exists x x = 1")
        assert err.value.line == 1

    def test_multi_binder(self):
        phi = parse_vhf("exists x, y. x = y")
        assert isinstance(phi, N.LExists) and isinstance(phi.body, N.LExists)


class TestParseVal:
    def test_sorts_inferred(self):
        phi = parse_val("exists x:K. nu(x) <= nu(p) and res(x) = 1")
        assert isinstance(phi, N.LExists) and phi.sort == "K"
        matrix = phi.body
        assert isinstance(matrix.left, N.GLe)
        assert isinstance(matrix.right, N.REq)

    def test_group_var(self):
        phi = parse_val("exists g:G. g = nu(p)")
        assert isinstance(phi.body, N.GEq)

    def test_sort_error(self):
        with pytest.raises(SortError):
            parse_val("exists x:K, a:k. x = a")

    def test_unbound_variable(self):
        with pytest.raises(FormulaSyntaxError):
            parse_val("x = 0")

    def test_round_trip(self):
        texts = [
            "exists x:K. nu(x*x) = nu(p)",
            "exists x:K, y:K. (x + y)*x = 0",
            "exists a:k. a*a = res(p + 1)",
            "exists g:G. (g < nu(p) or g = inf)",
        ]
        for text in texts:
            phi = parse_val(text)
            assert render_val(parse_val(render_val(phi))) == render_val(phi)


class TestTranslate:
    def test_divisibility(self):
        phi = parse_vhf("x | y")
        tr = translate(phi, 2, 1, 2)
        assert isinstance(tr, N.GLe)
        assert render_val(tr) == "nu(x) <= nu(y)"

    def test_plus_shape(self):
        tr = translate(parse_vhf("plus(x, y, z)"), 2, 1, 2)
        assert isinstance(tr, N.LExists)
        text = render_val(tr)
        assert "z = (x*(1 + " in text and "nu(p)" in text

    def test_fragment_preservation(self):
        for phi in generate_corpus(50):
            assert is_positive_existential(phi)
            tr = translate(phi, 2, 1, 2)
            assert is_existential(tr)

    def test_compositional(self):
        a = parse_vhf("x | y")
        b = parse_vhf("plus(x, y, z)")
        both = N.LAnd(a, b)
        tr = translate(both, 3, 1, 1)
        assert isinstance(tr, N.LAnd)
        assert render_val(tr.left) == render_val(translate(a, 3, 1, 1))


class TestEvalVhf:
    def test_sqrt_phat_q5(self, q5):
        H = Hyperfield(q5, 1)
        out = eval_vhf(parse_vhf("exists x. x*x = phat"), H, 6)
        assert out.status == "false_within_radius"
        assert out.radius == 6

    def test_sqrt_phat_q5_sqrt5(self, q5_sqrt5):
        H = Hyperfield(q5_sqrt5, 1)
        out = eval_vhf(parse_vhf("exists x. x*x = phat"), H, 6)
        assert out.status == "true"
        assert out.witness == {"x": "pi^1 * (1)"}

    def test_p_squared_square(self, q5):
        H = Hyperfield(q5, 1)
        out = eval_vhf(parse_vhf("exists x. x*x = phat*phat"), H, 4)
        assert out.status == "true"

    def test_witness_reverifies(self, q2):
        H = Hyperfield(q2, 2)
        phi = parse_vhf("exists x, y. plus(x, y, phat)")
        out = eval_vhf(phi, H, 4)
        assert out.status == "true"
        assert verify_vhf_witness(phi, H, 4, out.witness_values)

    def test_forall_gives_unknown(self, q2):
        H = Hyperfield(q2, 2)
        out = eval_vhf(parse_vhf("forall x. x | x"), H, 3)
        assert out.status == "unknown"

    def test_monotone_in_radius(self, q5_sqrt5):
        H = Hyperfield(q5_sqrt5, 1)
        phi = parse_vhf("exists x. x*x = phat")
        assert eval_vhf(phi, H, 2).status == "true"
        assert eval_vhf(phi, H, 5).status == "true"


class TestEvalVal:
    def test_sqrt_p_mirrors(self, q5, q5_sqrt5):
        phi = parse_vhf("exists x. x*x = phat")
        left = eval_val(translate(phi, 5, 1, 1), q5, 6, 1)
        right = eval_val(translate(phi, 5, 2, 1), q5_sqrt5, 6, 1)
        assert left.status == "false_within_radius"
        assert right.status == "true"

    def test_residue_and_group_atoms(self, q5):
        out = eval_val(parse_val("exists x:K. (res(x) = res(1 + p) and nu(x) = 0)"),
                       q5, 3, 1)
        assert out.status == "true"

    def test_negative_valuation_witness(self, q2):
        out = eval_val(parse_val("exists x:K. nu(x*p) = 0"), q2, 3, 2)
        assert out.status == "true"
        assert "pi^-1" in out.witness["x"]

    def test_radius_guard(self, q2):
        with pytest.raises(ValueError):
            eval_val(parse_val("exists x:K. x = 0"), q2, 1, 2)


class TestAgreement:
    def test_corpus_deterministic(self):
        a = [render_vhf(phi) for phi in generate_corpus(50)]
        b = [render_vhf(phi) for phi in generate_corpus(50)]
        assert a == b and len(set(a)) == 50

    def test_q2_agreement(self, q2):
        report = agreement_harness(generate_corpus(50), q2, n=2, radius=4)
        assert report["disagreements"] == 0
        assert report["definite_pairs"] == 50

    def test_empty_corpus(self, q2):
        report = agreement_harness([], q2)
        assert report["count"] == 0 and report["rows"] == []

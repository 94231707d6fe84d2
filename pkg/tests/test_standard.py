"""The standard method: seed, doubling step, variants, sizes."""

import pytest
from hypothesis import given, settings

from polymf import (
    PolyError,
    Polynomial,
    PolyMatrix,
    STANDARD_VARIANTS,
    SummandList,
    make_factorization,
    monomial_pairs,
    parse_polynomial,
    standard_factorize,
    standard_factorize_polynomial,
    standard_step,
    verify_exact,
)

from conftest import factorizations, nonzero_polynomials


def p(text: str):
    return parse_polynomial(text)


class TestSummandList:
    def test_target_sums_products(self):
        sl = SummandList(((p("x"), p("y")), (p("z"), p("z"))))
        assert sl.target == p("xy + z^2")

    def test_rejects_empty(self):
        with pytest.raises(PolyError):
            SummandList(())

    def test_rejects_zero_products(self):
        with pytest.raises(PolyError):
            SummandList(((p("x"), Polynomial.zero()),))


class TestStandardStep:
    def test_doubles_the_size(self):
        seed = make_factorization(p("xy"), PolyMatrix([[p("x")]]), PolyMatrix([[p("y")]]))
        stepped = standard_step(seed, p("z"), p("z"))
        assert stepped.size == 2
        assert stepped.f == p("xy + z^2")

    @pytest.mark.parametrize("variant", STANDARD_VARIANTS)
    def test_variants_verify(self, variant):
        seed = make_factorization(p("xy"), PolyMatrix([[p("x")]]), PolyMatrix([[p("y")]]))
        stepped = standard_step(seed, p("z"), p("z"), variant)
        assert verify_exact(stepped)[0]

    def test_unknown_variant(self):
        seed = make_factorization(p("xy"), PolyMatrix([[p("x")]]), PolyMatrix([[p("y")]]))
        with pytest.raises(ValueError):
            standard_step(seed, p("z"), p("z"), "v3")

    @given(factorizations(max_steps=1), nonzero_polynomials(), nonzero_polynomials())
    @settings(max_examples=100, deadline=None)
    def test_soundness(self, mf, g, h):
        for variant in STANDARD_VARIANTS:
            stepped = standard_step(mf, g, h, variant, verify="skip")
            assert verify_exact(stepped)[0]
            assert stepped.f == mf.f + g * h


class TestStandardFactorize:
    def test_paper_building_blocks(self):
        h = standard_factorize_polynomial(p("xy + z^2"))
        g = standard_factorize_polynomial(p("xy^2 + x^2z + yz^2"))
        t = standard_factorize_polynomial(p("x^2z + y^2 + y^2z"))
        assert (h.size, g.size, t.size) == (2, 4, 4)

    def test_size_is_two_to_the_k_minus_one(self):
        q = p("x^2 + y^2 + z^2 + xy + yz")
        assert standard_factorize_polynomial(q).size == 2 ** (q.num_terms() - 1)

    def test_variants_agree_on_target(self):
        q = p("xy + yz + zx")
        results = [standard_factorize_polynomial(q, v) for v in STANDARD_VARIANTS]
        assert all(r.f == q for r in results)
        assert len({r.phi for r in results}) == 3  # genuinely different matrices

    def test_zero_polynomial_rejected(self):
        with pytest.raises(PolyError):
            standard_factorize_polynomial(Polynomial.zero())

    def test_duplicate_summands_allowed(self):
        # the formal expansion keeps colliding monomials separate
        sl = monomial_pairs(list(p("xy^2z^2").terms) * 2)
        mf = standard_factorize(sl)
        assert mf.size == 2 and mf.f == p("2xy^2z^2")

    def test_rational_coefficients(self):
        mf = standard_factorize_polynomial(p("1/2 x^2 + 3y^4"))
        assert verify_exact(mf)[0] and mf.size == 2

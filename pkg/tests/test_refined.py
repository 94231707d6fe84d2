"""Summand-reduced inputs: validation, size prediction, the pipelines."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polymf import (
    CapExceededError,
    PolyError,
    ProductGroup,
    SummandReducedPoly,
    ValidationFailure,
    compare_report,
    parse_polynomial,
    predict_sizes,
    run_improved,
    run_refined,
    run_standard,
    validate_summand_reduced,
    verify_exact,
)


def srp(terms, products):
    return SummandReducedPoly.from_strings(terms, products)


class TestModel:
    def test_monomial_counts(self):
        g = ProductGroup((parse_polynomial("xy + z^2"), parse_polynomial("x + y + z")))
        assert g.monomial_counts == (2, 3)

    def test_zero_factor_rejected(self):
        with pytest.raises(PolyError):
            ProductGroup((parse_polynomial("0"),))

    def test_expanded_polynomial(self, part1_srp):
        expanded = part1_srp.expanded_polynomial()
        want = parse_polynomial("zy") + parse_polynomial(
            "xy^2 + x^2z + yz^2"
        ) * parse_polynomial("xy + z^2")
        assert expanded == want

    def test_formal_monomials_keep_collisions(self, part1_srp):
        formal = part1_srp.formal_monomials()
        assert len(formal) == 7  # canonical form merges to 6
        assert part1_srp.expanded_polynomial().num_terms() == 6

    def test_non_monomial_term_rejected_for_pipelines(self):
        bad = srp(["x + y"], [["xy + z^2", "x + y"]])
        with pytest.raises(PolyError):
            bad.monomial_terms()


class TestValidation:
    def test_part1_is_summand_reduced(self, part1_srp):
        assert validate_summand_reduced(part1_srp).ok

    def test_condition1_failure(self):
        report = validate_summand_reduced(srp(["x^7", "-y^5"], []))
        assert report.failed_conditions() == [1, 4]

    def test_condition1_with_no_terms_needs_two_products(self):
        single = srp([], [["xy + z^2", "x + y"]])
        assert 1 in validate_summand_reduced(single).failed_conditions()
        double = srp([], [["xy + z^2", "x + y"], ["x + z", "y + z"]])
        assert 1 not in validate_summand_reduced(double).failed_conditions()

    def test_condition2_failure(self):
        report = validate_summand_reduced(
            srp(["x + y"], [["xy^2 + x^2z + yz^2", "xy + z^2"]])
        )
        assert report.failed_conditions() == [2]

    def test_condition3_failure_telescoping(self):
        report = validate_summand_reduced(
            srp(["zx"], [["x - y", "x^4 + x^3y + x^2y^2 + xy^3 + y^4"]])
        )
        assert 3 in report.failed_conditions()

    def test_condition3_skips_single_factor_groups(self):
        report = validate_summand_reduced(
            srp(["zx"], [["x^5 - y^5"], ["xy^2 + x^2z + yz^2", "xy + z^2"]])
        )
        assert 3 not in report.failed_conditions()

    def test_condition4_failure(self):
        report = validate_summand_reduced(srp(["zx"], [["x + y"]]))
        assert report.failed_conditions() == [4]

    def test_strict_mode_raises(self):
        bad = srp(["x^7", "-y^5"], [])
        with pytest.raises(ValidationFailure):
            run_standard(bad, strict=True, max_monomials=20)

    def test_advisory_by_default(self):
        # not summand-reduced, but the standard pipeline still runs
        bad = srp(["x^2", "y^2"], [])
        assert run_standard(bad).size == 2


class TestPredictSizes:
    def test_part1(self, part1_srp):
        sizes = predict_sizes(part1_srp)
        assert (sizes.standard_size, sizes.improved_size, sizes.refined_size) == (64, 32, 16)
        assert sizes.ratio_refined_vs_standard == 4
        assert sizes.ratio_refined_vs_improved == 2

    def test_two_product_example(self, two_product_srp):
        sizes = predict_sizes(two_product_srp)
        assert sizes.standard_size == 2**15
        assert sizes.improved_size == 2**11
        assert sizes.refined_size == 2**9
        assert sizes.ratio_refined_vs_improved == 4

    def test_part2(self, part2_srp):
        sizes = predict_sizes(part2_srp)
        assert (sizes.standard_size, sizes.improved_size, sizes.refined_size) == (512, 64, 32)
        assert sizes.ratio_refined_vs_standard == 16

    def test_all_single_factor_groups_mean_no_gain(self):
        sizes = predict_sizes(srp(["zx"], [["x + y"], ["y + z"]]))
        assert sizes.ratio_refined_vs_improved == 1
        assert sizes.refined_size == sizes.improved_size

    @given(
        st.integers(0, 2),
        st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=2), min_size=1, max_size=2),
    )
    @settings(max_examples=100)
    def test_ratio_law(self, s, shape):
        # build an srp with prescribed monomial counts from fresh variables
        names = iter(f"v{i}" for i in range(100))
        terms = [next(names) for _ in range(s)]
        products = [
            [" + ".join(next(names) for _ in range(p)) for p in group] for group in shape
        ]
        sizes = predict_sizes(srp(terms, products))
        total_m = sum(len(g) for g in shape)
        assert sizes.improved_size == sizes.refined_size * 2 ** (total_m - len(shape))


class TestPipelines:
    def test_part1_sizes(self, part1_srp):
        r = run_refined(part1_srp)
        i = run_improved(part1_srp)
        s = run_standard(part1_srp)
        assert (r.size, i.size, s.size) == (16, 32, 64)
        assert r.f == i.f == s.f == part1_srp.expanded_polynomial()
        assert verify_exact(r)[0] and verify_exact(i)[0] and verify_exact(s)[0]

    def test_part2_refined(self, part2_srp):
        mf = run_refined(part2_srp)
        assert mf.size == 32
        assert mf.f == part2_srp.expanded_polynomial()
        assert verify_exact(mf)[0]

    def test_sizes_match_predictions(self, part1_srp, part2_srp):
        for candidate in (part1_srp, part2_srp):
            sizes = predict_sizes(candidate)
            assert run_refined(candidate).size == sizes.refined_size
            assert run_improved(candidate).size == sizes.improved_size

    def test_s_zero_branch(self):
        product_only = srp([], [["xy + z^2", "x + y"], ["x + z", "y + z"]])
        sizes = predict_sizes(product_only)
        mf = run_refined(product_only)
        assert mf.size == sizes.refined_size == 2 ** (2 - 1 + 8 - 4)
        assert mf.f == product_only.expanded_polynomial()

    def test_yoshino_variant_changes_matrices_not_target(self, part1_srp):
        a = run_refined(part1_srp, "standard")
        b = run_refined(part1_srp, "v2")
        assert a.f == b.f and a.size == b.size
        assert a.phi != b.phi

    def test_cap_exceeded(self, part2_srp):
        with pytest.raises(CapExceededError) as exc:
            run_standard(part2_srp, max_monomials=5)
        assert exc.value.monomials == 10
        assert exc.value.predicted_size == 512

    def test_trivial_two_monomial_input(self):
        tiny = srp(["z^2"], [["x", "y"]])
        assert run_standard(tiny).size == 2

    def test_pipeline_needs_a_product(self):
        with pytest.raises(ValidationFailure):
            run_refined(srp(["x^2"], []))


class TestCompareReport:
    def test_part1_confirms_predictions(self, part1_srp):
        report, constructed = compare_report(
            part1_srp, methods=("refined", "improved", "standard")
        )
        assert constructed == {"refined": 16, "improved": 32, "standard": 64}
        assert report.standard_size == 64

    def test_capped_pipeline_is_skipped(self, part2_srp):
        report, constructed = compare_report(
            part2_srp, methods=("refined", "standard"), max_monomials=5
        )
        assert constructed == {"refined": 32}
        assert report.standard_size == 512

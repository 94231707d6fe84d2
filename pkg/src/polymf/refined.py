"""Summand-reduced polynomials, size predictors, and the three pipelines.

A summand-reduced input is t_1 + ... + t_s + G_1 + ... + G_l where each
t_i is a monomial and each G_j = g_j1 * ... * g_jm_j is a product of
sums of monomials.  With p_ji the monomial count of g_ji, the closed
forms for the factor sizes are (s >= 1 shown; drop the +s for s = 0):

    standard  2^(sum_j prod_i p_ji + s - 1)
    improved  2^(sum p_ji + s - 1)
    refined   2^(l - 1 + sum p_ji - sum m_j + s)

The pipelines realize these sizes: every g_ji is factored by the
standard method, groups are folded with the reduced (refined) or
plain (improved) multiplicative tensor product, groups are combined
with the additive tensor product, and a monomial part of size 2^(s-1)
joins through one final additive tensor step.

The standard pipeline works on the formal expansion (every product of
picked monomials kept as its own summand, no combining), which is the
expansion the size formulas count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .factorization import MatrixFactorization
from .poly import Monomial, Polynomial, PolyError, parse_polynomial
from .standard import (
    SummandList,
    monomial_pairs,
    standard_factorize,
    standard_factorize_polynomial,
)
from .tensor import mult_tensor, reduced_tensor, yoshino

# Condition-3 checking expands each product; groups beyond this formal
# monomial count are reported as unchecked rather than expanded.
CONDITION3_EXPANSION_CAP = 10**6


class ValidationFailure(PolyError):
    """Raised in strict mode when the summand-reduced conditions fail."""


class CapExceededError(PolyError):
    """The standard pipeline would exceed the construction cap."""

    def __init__(self, monomials: int, predicted_size: int):
        super().__init__(
            f"standard construction skipped: {monomials} formal monomials "
            f"would give size {predicted_size}"
        )
        self.monomials = monomials
        self.predicted_size = predicted_size


@dataclass(frozen=True)
class ProductGroup:
    """One product g_j1 * ... * g_jm_j of sums of monomials."""

    factors: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.factors:
            raise PolyError("product group needs at least one factor")
        if any(f.is_zero() for f in self.factors):
            raise PolyError("product group has a zero factor")

    @property
    def monomial_counts(self) -> tuple[int, ...]:
        """The p_ji: canonical monomial count of each factor."""
        return tuple(f.num_terms() for f in self.factors)

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    def expanded(self) -> Polynomial:
        result = Polynomial.const(1)
        for f in self.factors:
            result = result * f
        return result


@dataclass(frozen=True)
class SummandReducedPoly:
    """The structured input t_1 + ... + t_s + products, before validation.

    Terms are stored as polynomials so that a non-monomial term can be
    reported by the validator instead of rejected at construction.
    """

    terms: tuple[Polynomial, ...]
    products: tuple[ProductGroup, ...]

    @staticmethod
    def from_strings(terms: list[str], products: list[list[str]]) -> "SummandReducedPoly":
        return SummandReducedPoly(
            tuple(parse_polynomial(t) for t in terms),
            tuple(ProductGroup(tuple(parse_polynomial(f) for f in fs)) for fs in products),
        )

    @property
    def s(self) -> int:
        return len(self.terms)

    @property
    def l(self) -> int:
        return len(self.products)

    def monomial_terms(self) -> tuple[Monomial, ...]:
        out = []
        for t in self.terms:
            ms = t.terms
            if len(ms) != 1:
                raise PolyError(f"term {t} is not a single monomial")
            out.append(ms[0])
        return tuple(out)

    def expanded_polynomial(self) -> Polynomial:
        """The target polynomial in canonical form."""
        total = Polynomial.zero()
        for t in self.terms:
            total = total + t
        for g in self.products:
            total = total + g.expanded()
        return total

    def formal_monomials(self) -> list[Monomial]:
        """The uncombined expansion: the s terms plus, per group, every
        product of one monomial from each factor.  Length sum_j prod p_ji + s;
        this is the summand count the standard method operates on."""
        out = list(self.monomial_terms())
        for g in self.products:
            for combo in itertools.product(*(f.terms for f in g.factors)):
                m = combo[0]
                for other in combo[1:]:
                    m = m.times(other)
                out.append(m)
        return out


@dataclass(frozen=True)
class ConditionResult:
    condition: int
    passed: bool
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[ConditionResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failed_conditions(self) -> list[int]:
        return [r.condition for r in self.results if not r.passed]

    def __str__(self) -> str:
        return "\n".join(
            f"condition {r.condition}: {'pass' if r.passed else 'FAIL'} - {r.reason}"
            for r in self.results
        )


def _combo_key(combo) -> tuple:
    m = combo[0]
    for other in combo[1:]:
        m = m.times(other)
    return m.exponents


def validate_summand_reduced(srp: SummandReducedPoly) -> ValidationReport:
    """Check the four defining conditions, each reported with a reason."""
    results = []

    s, l = srp.s, srp.l
    if s == 0:
        ok1 = l >= 2
        reason1 = f"s=0 requires at least two products, found {l}"
    else:
        ok1 = l >= 1
        reason1 = f"s={s} requires at least one product, found {l}"
    results.append(ConditionResult(1, ok1, reason1))

    bad_terms = [str(t) for t in srp.terms if len(t.terms) != 1]
    results.append(
        ConditionResult(
            2,
            not bad_terms,
            "every t_i is a monomial" if not bad_terms else f"non-monomial terms: {bad_terms}",
        )
    )

    # The expanded monomial count is formal (every choice of one monomial
    # per factor is its own summand), except that terms whose coefficients
    # cancel outright do not count as appearing in the expansion.
    ok3, reason3 = True, "every multi-factor product gains monomials when expanded"
    for j, g in enumerate(srp.products):
        if g.num_factors < 2:
            continue
        factor_form_count = sum(g.monomial_counts)
        formal = prod(g.monomial_counts)
        if formal > CONDITION3_EXPANSION_CAP:
            ok3, reason3 = True, (
                f"product {j} too large to expand ({formal} formal monomials); unchecked"
            )
            continue
        surviving_keys = {m.exponents for m in g.expanded().terms}
        expanded_count = sum(
            1
            for combo in itertools.product(*(f.terms for f in g.factors))
            if _combo_key(combo) in surviving_keys
        )
        if expanded_count <= factor_form_count:
            ok3 = False
            reason3 = (
                f"product {j} expands to {expanded_count} monomials, "
                f"not more than the {factor_form_count} in factor form"
            )
            break
    results.append(ConditionResult(3, ok3, reason3))

    ok4 = any(g.num_factors >= 2 for g in srp.products)
    results.append(
        ConditionResult(
            4,
            ok4,
            "some product has at least two factors" if ok4 else "no product has two or more factors",
        )
    )
    return ValidationReport(tuple(results))


@dataclass(frozen=True)
class SizeReport:
    """Closed-form factor sizes for the three pipelines, plus both ratios."""

    standard_size: int
    improved_size: int
    refined_size: int
    ratio_refined_vs_standard: int
    ratio_refined_vs_improved: int

    def to_dict(self) -> dict:
        return {
            "standard_size": self.standard_size,
            "improved_size": self.improved_size,
            "refined_size": self.refined_size,
            "ratio_refined_vs_standard": self.ratio_refined_vs_standard,
            "ratio_refined_vs_improved": self.ratio_refined_vs_improved,
        }


def predict_sizes(srp: SummandReducedPoly) -> SizeReport:
    s, l = srp.s, srp.l
    counts = [g.monomial_counts for g in srp.products]
    sum_prod_p = sum(prod(c) for c in counts)
    sum_p = sum(sum(c) for c in counts)
    sum_m = sum(len(c) for c in counts)
    standard = 2 ** (sum_prod_p + s - 1) if s >= 1 else 2 ** (sum_prod_p - 1)
    improved = 2 ** (sum_p + s - 1) if s >= 1 else 2 ** (sum_p - 1)
    refined = 2 ** (l - 1 + sum_p - sum_m + s) if s >= 1 else 2 ** (l - 1 + sum_p - sum_m)
    return SizeReport(
        standard_size=standard,
        improved_size=improved,
        refined_size=refined,
        ratio_refined_vs_standard=standard // refined,
        ratio_refined_vs_improved=2 ** (sum_m - l),
    )


def _check_valid(srp: SummandReducedPoly, strict: bool) -> None:
    if strict:
        report = validate_summand_reduced(srp)
        if not report.ok:
            raise ValidationFailure(str(report))


def _pipeline(
    srp: SummandReducedPoly,
    product_tensor,
    yvariant: str,
    verify: str,
    strict: bool,
) -> MatrixFactorization:
    _check_valid(srp, strict)
    if srp.l == 0:
        raise ValidationFailure("pipelines need at least one product group")
    group_mfs = []
    for g in srp.products:
        factor_mfs = [standard_factorize_polynomial(f, verify=verify) for f in g.factors]
        mf = factor_mfs[0]
        for nxt in factor_mfs[1:]:
            mf = product_tensor(mf, nxt, verify=verify)
        group_mfs.append(mf)
    combined = group_mfs[0]
    for nxt in group_mfs[1:]:
        combined = yoshino(combined, nxt, yvariant, verify=verify)
    if srp.s >= 1:
        monomial_mf = standard_factorize(monomial_pairs(list(srp.monomial_terms())), verify=verify)
        combined = yoshino(monomial_mf, combined, yvariant, verify=verify)
    return combined


def run_refined(
    srp: SummandReducedPoly,
    yvariant: str = "standard",
    *,
    verify: str = "auto",
    strict: bool = False,
) -> MatrixFactorization:
    """Refined pipeline: reduced multiplicative tensor inside each group."""
    return _pipeline(srp, reduced_tensor, yvariant, verify, strict)


def run_improved(
    srp: SummandReducedPoly,
    yvariant: str = "standard",
    *,
    verify: str = "auto",
    strict: bool = False,
) -> MatrixFactorization:
    """Improved pipeline: plain multiplicative tensor inside each group."""
    return _pipeline(srp, mult_tensor, yvariant, verify, strict)


def run_standard(
    srp: SummandReducedPoly,
    variant: str = "standard",
    *,
    max_monomials: int = 13,
    verify: str = "auto",
    strict: bool = False,
) -> MatrixFactorization:
    """Standard method on the formal expansion of the input.

    Raises CapExceededError (carrying the predicted size) if the formal
    monomial count exceeds max_monomials.
    """
    _check_valid(srp, strict)
    monomials = srp.formal_monomials()
    if len(monomials) > max_monomials:
        raise CapExceededError(len(monomials), 2 ** (len(monomials) - 1))
    return standard_factorize(monomial_pairs(monomials), variant, verify=verify)


def compare_report(
    srp: SummandReducedPoly,
    *,
    methods: tuple[str, ...] = ("refined", "improved"),
    yvariant: str = "standard",
    max_monomials: int = 13,
    verify: str = "auto",
    strict: bool = False,
) -> tuple[SizeReport, dict[str, int]]:
    """Predicted sizes plus constructed-size confirmations for each
    pipeline actually run (a pipeline is skipped, not failed, when its
    construction would blow the cap)."""
    report = predict_sizes(srp)
    constructed: dict[str, int] = {}
    runners = {
        "refined": lambda: run_refined(srp, yvariant, verify=verify, strict=strict),
        "improved": lambda: run_improved(srp, yvariant, verify=verify, strict=strict),
        "standard": lambda: run_standard(
            srp, max_monomials=max_monomials, verify=verify, strict=strict
        ),
    }
    for method in methods:
        try:
            constructed[method] = runners[method]().size
        except CapExceededError:
            pass
    return report, constructed

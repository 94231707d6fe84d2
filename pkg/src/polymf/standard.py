"""The standard method for factoring polynomials, and its two variants.

From a factorization (C, D) of f and a pair of polynomials g, h, one
doubling step produces a factorization of f + g*h:

    ([[C, -g*I], [h*I, D]], [[D, g*I], [-h*I, C]])

Folding steps over a summand list g1*h1 + ... + gk*hk, starting from the
1x1 pair ([g1], [h1]), yields factors of size 2^(k-1).  The variants
permute block rows/columns: v1 swaps the rows of the first matrix and
the columns of the second, v2 the other way around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factorization import MatrixFactorization, make_factorization
from .matrix import PolyMatrix, block2x2, scalar_matrix
from .poly import Monomial, Polynomial, PolyError, split_monomial


@dataclass(frozen=True)
class SummandList:
    """Ordered (g, h) pairs whose products sum to the target polynomial."""

    pairs: tuple[tuple[Polynomial, Polynomial], ...]

    def __post_init__(self):
        if not self.pairs:
            raise PolyError("summand list must be nonempty")
        for g, h in self.pairs:
            if (g * h).is_zero():
                raise PolyError("summand with zero product")

    @property
    def target(self) -> Polynomial:
        total = Polynomial.zero()
        for g, h in self.pairs:
            total = total + g * h
        return total


def standard_step(
    mf: MatrixFactorization,
    g: Polynomial,
    h: Polynomial,
    variant: str = "standard",
    *,
    verify: str = "auto",
) -> MatrixFactorization:
    """One doubling step: a factorization of mf.f + g*h of size 2n."""
    n = mf.size
    c, d = mf.phi, mf.psi
    gi = scalar_matrix(g, n)
    hi = scalar_matrix(h, n)
    if variant == "standard":
        p = block2x2(c, -gi, hi, d)
        q = block2x2(d, gi, -hi, c)
    elif variant == "v1":
        # rows of P interchanged, columns of Q interchanged
        p = block2x2(hi, d, c, -gi)
        q = block2x2(gi, d, c, -hi)
    elif variant == "v2":
        # columns of P interchanged, rows of Q interchanged
        p = block2x2(-gi, c, d, hi)
        q = block2x2(-hi, c, d, gi)
    else:
        raise ValueError(f"unknown standard-method variant {variant!r}")
    return make_factorization(mf.f + g * h, p, q, verify=verify)


def standard_factorize(
    sl: SummandList, variant: str = "standard", *, verify: str = "auto"
) -> MatrixFactorization:
    """Fold standard steps left-to-right from the 1x1 seed ([g1], [h1]).

    Size of the result is 2^(k-1) for k summands.
    """
    (g1, h1), *rest = sl.pairs
    mf = make_factorization(
        g1 * h1,
        PolyMatrix([[g1]]),
        PolyMatrix([[h1]]),
        verify=verify,
    )
    for g, h in rest:
        # only the final result needs verification; intermediate steps are
        # re-verified implicitly by the last one
        mf = standard_step(mf, g, h, variant, verify="skip")
    if rest:
        mf = make_factorization(mf.f, mf.phi, mf.psi, verify=verify)
    return mf


def monomial_pairs(monomials: list[Monomial]) -> SummandList:
    """Split each monomial into a (g, h) pair; sign travels with g."""
    pairs = []
    for m in monomials:
        h1, h2 = split_monomial(m)
        pairs.append((h1.as_polynomial(), h2.as_polynomial()))
    return SummandList(tuple(pairs))


def standard_factorize_polynomial(
    p: Polynomial, variant: str = "standard", *, verify: str = "auto"
) -> MatrixFactorization:
    """Standard method on the canonical expansion of p.

    p is expanded to canonical monomials in canonical order, each is split
    deterministically, and the steps are folded; the result has size
    2^(#canonical monomials - 1).
    """
    if p.is_zero():
        raise PolyError("cannot factor the zero polynomial")
    return standard_factorize(monomial_pairs(list(p.terms)), variant, verify=verify)

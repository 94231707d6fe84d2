"""Shared strategies and fixtures for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from polymf import (
    Monomial,
    Polynomial,
    PolyMatrix,
    SummandReducedPoly,
    make_factorization,
)
from polymf.standard import standard_step

VARS = ("x", "y", "z")


@st.composite
def monomials(draw, max_degree: int = 2) -> Monomial:
    coeff = Fraction(draw(st.integers(-3, 3).filter(bool)))
    names = draw(st.lists(st.sampled_from(VARS), unique=True, max_size=2))
    exps = tuple(sorted((v, draw(st.integers(1, max_degree))) for v in names))
    return Monomial(coeff, exps)


@st.composite
def polynomials(draw, max_terms: int = 3) -> Polynomial:
    ms = draw(st.lists(monomials(), min_size=0, max_size=max_terms))
    return Polynomial.from_monomials(ms)


def nonzero_polynomials(max_terms: int = 2):
    return polynomials(max_terms=max_terms).filter(lambda p: not p.is_zero())


@st.composite
def factorizations(draw, max_steps: int = 2):
    """Random verified factorizations of size 1, 2, or 4 built by the
    standard method; every instance genuinely satisfies phi*psi = f*I."""
    g = draw(nonzero_polynomials())
    h = draw(nonzero_polynomials())
    mf = make_factorization(g * h, PolyMatrix([[g]]), PolyMatrix([[h]]), verify="skip")
    for _ in range(draw(st.integers(0, max_steps))):
        g2 = draw(nonzero_polynomials(max_terms=1))
        h2 = draw(nonzero_polynomials(max_terms=1))
        mf = standard_step(mf, g2, h2, verify="skip")
    return mf


@st.composite
def poly_matrices(draw, rows: int = 2, cols: int = 2) -> PolyMatrix:
    entries = [
        [draw(polynomials(max_terms=1)) for _ in range(cols)] for _ in range(rows)
    ]
    return PolyMatrix(entries, rows, cols)


@pytest.fixture
def part1_srp() -> SummandReducedPoly:
    return SummandReducedPoly.from_strings(
        ["zy"], [["xy^2 + x^2z + yz^2", "xy + z^2"]]
    )


@pytest.fixture
def part2_srp() -> SummandReducedPoly:
    return SummandReducedPoly.from_strings(
        ["x^5y^2"], [["xy^2 + x^2z + yz^2", "x^2z + y^2 + y^2z"]]
    )


@pytest.fixture
def two_product_srp() -> SummandReducedPoly:
    return SummandReducedPoly.from_strings(
        ["zy"],
        [["xy^2 + x^2z + yz^2", "xy + z^2"], ["yz + xy^2 + x^2", "x^3z^2 + yx + y^2"]],
    )

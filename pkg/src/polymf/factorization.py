"""Matrix factorizations of polynomials and their morphisms.

A matrix factorization of f is a pair (phi, psi) of n x n polynomial
matrices with phi*psi = psi*phi = f*I_n.  Factorizations are validated
at construction: exactly up to size EXACT_SIZE_THRESHOLD, by randomized
evaluation at integer points above it (still an exact rational check at
each sampled point, so a reported failure is always genuine).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .matrix import PolyMatrix, MatrixError, identity, mat_mul, scalar_matrix
from .poly import Polynomial

# Constructors verify exactly up to this size and fall back to randomized
# point checks above it; pass verify="exact" to force the full product.
EXACT_SIZE_THRESHOLD = 64
DEFAULT_TRIALS = 8
DEFAULT_SEED = 0
COORDINATE_BOUND = 10**6


class VerificationError(ValueError):
    """The defining identity phi*psi = psi*phi = f*I failed."""


@dataclass(frozen=True)
class MatrixFactorization:
    """A verified pair (phi, psi) with phi*psi = psi*phi = f*I_n."""

    f: Polynomial
    phi: PolyMatrix
    psi: PolyMatrix

    @property
    def size(self) -> int:
        return self.phi.rows

    def to_dict(self) -> dict:
        return {
            "f": str(self.f),
            "size": self.size,
            "phi": [[str(e) for e in row] for row in self.phi.entries],
            "psi": [[str(e) for e in row] for row in self.psi.entries],
        }

    @staticmethod
    def from_dict(data: dict) -> "MatrixFactorization":
        from .matrix import from_strings
        from .poly import parse_polynomial

        mf = MatrixFactorization(
            parse_polynomial(data["f"]),
            from_strings(data["phi"]),
            from_strings(data["psi"]),
        )
        if mf.size != data.get("size", mf.size):
            raise MatrixError("declared size does not match the matrices")
        return mf


def make_factorization(
    f: Polynomial,
    phi: PolyMatrix,
    psi: PolyMatrix,
    *,
    verify: str = "auto",
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> MatrixFactorization:
    """Build a factorization of f, verifying the defining identity.

    verify: "exact", "randomized", "auto" (exact up to the size threshold),
    or "skip" (internal use, for outputs of constructions proven correct
    elsewhere in the call).
    """
    if not phi.is_square or not psi.is_square:
        raise MatrixError("factors must be square")
    if phi.rows != psi.rows:
        raise MatrixError(f"factor size mismatch: {phi.rows} vs {psi.rows}")
    mf = MatrixFactorization(f, phi, psi)
    if verify == "skip":
        return mf
    if verify == "exact" or (verify == "auto" and mf.size <= EXACT_SIZE_THRESHOLD):
        ok, diag = verify_exact(mf)
        if not ok:
            raise VerificationError(diag)
    elif verify in ("auto", "randomized"):
        if not verify_randomized(mf, trials=trials, seed=seed):
            raise VerificationError(
                f"randomized verification failed ({trials} trials, seed {seed})"
            )
    else:
        raise ValueError(f"unknown verify mode: {verify!r}")
    return mf


def verify_exact(mf: MatrixFactorization) -> tuple[bool, str]:
    """Check phi*psi = psi*phi = f*I by exact symbolic products.

    Returns (True, "ok") or (False, diagnostics naming the first
    offending entry and its value).
    """
    target = scalar_matrix(mf.f, mf.size)
    for name, a, b in (("phi*psi", mf.phi, mf.psi), ("psi*phi", mf.psi, mf.phi)):
        product = mat_mul(a, b)
        for i in range(mf.size):
            for j in range(mf.size):
                got = product.entries[i][j]
                want = target.entries[i][j]
                if got != want:
                    return (
                        False,
                        f"{name} entry ({i},{j}) is {got}, expected {want}",
                    )
    return True, "ok"


def verify_randomized(
    mf: MatrixFactorization,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> bool:
    """Check phi*psi = f*I at random integer points, exactly.

    Each trial draws integer coordinates uniformly in
    [-COORDINATE_BOUND, COORDINATE_BOUND], evaluates both factors and f,
    and checks the numeric product identity with exact arithmetic.
    Deterministic given the seed.  Never fails on a valid factorization;
    an invalid one escapes detection at a single point with probability
    at most deg(f)/(2*COORDINATE_BOUND + 1) (Schwartz-Zippel).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    variables = sorted(mf.phi.variables() | mf.psi.variables() | mf.f.variables())
    phi_nz = _nonzero_entries(mf.phi)
    psi_nz = _nonzero_entries(mf.psi)
    for _ in range(trials):
        point = {v: rng.randint(-COORDINATE_BOUND, COORDINATE_BOUND) for v in variables}
        a = [(i, j, e.evaluate(point)) for i, j, e in phi_nz]
        b = [(i, j, e.evaluate(point)) for i, j, e in psi_nz]
        fval = mf.f.evaluate(point)
        if not _product_equals_scalar(mf.size, a, b, fval):
            return False
    return True


def _nonzero_entries(m: PolyMatrix) -> list[tuple[int, int, Polynomial]]:
    return [
        (i, j, e)
        for i, row in enumerate(m.entries)
        for j, e in enumerate(row)
        if e
    ]


# ---------------------------------------------------------------------------
# Exact integer product check.  The numeric matrices at desk scale reach
# size 512 with entries around 10^40, so the product is computed modulo
# enough word-sized primes to exceed a rigorous magnitude bound; equality
# modulo all of them is then exact equality.
# ---------------------------------------------------------------------------


def _small_primes(limit_product: int) -> list[int]:
    primes: list[int] = []
    prod = 1
    candidate = 2**20 - 1
    while prod <= limit_product:
        while not _is_prime(candidate):
            candidate -= 2
        primes.append(candidate)
        prod *= candidate
        candidate -= 2
    return primes


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _product_equals_scalar(
    n: int,
    a: list[tuple[int, int, Fraction]],
    b: list[tuple[int, int, Fraction]],
    c: Fraction,
) -> bool:
    """Exact check that a @ b == c * I for sparse rational n x n matrices."""
    scale = c.denominator
    for _, _, x in a:
        scale = lcm(scale, x.denominator)
    for _, _, x in b:
        scale = lcm(scale, x.denominator)
    ai = [(i, j, int(x * scale)) for i, j, x in a]
    bi = [(i, j, int(x * scale)) for i, j, x in b]
    ci = int(c * scale * scale)
    max_a = max((abs(x) for _, _, x in ai), default=0)
    max_b = max((abs(x) for _, _, x in bi), default=0)
    bound = n * max_a * max_b + abs(ci) + 1
    for p in _small_primes(2 * bound):
        cm = (_mod_matrix(n, ai, p) @ _mod_matrix(n, bi, p)) % p
        want = np.zeros((n, n), dtype=np.int64)
        np.fill_diagonal(want, ci % p)
        if not np.array_equal(cm, want):
            return False
    return True


def _mod_matrix(n: int, entries: list[tuple[int, int, int]], p: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int64)
    for i, j, x in entries:
        m[i, j] = x % p
    return m


# ---------------------------------------------------------------------------
# Morphisms.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    """A pair (alpha, beta) of n2 x n1 matrices between factorizations of
    the same polynomial, satisfying alpha*phi1 = phi2*beta and
    psi2*alpha = beta*psi1."""

    domain: MatrixFactorization
    codomain: MatrixFactorization
    alpha: PolyMatrix
    beta: PolyMatrix


def is_morphism(m: Morphism) -> bool:
    """Check the two commuting-square equations exactly."""
    n1, n2 = m.domain.size, m.codomain.size
    if (m.alpha.rows, m.alpha.cols) != (n2, n1) or (m.beta.rows, m.beta.cols) != (n2, n1):
        raise MatrixError("morphism components have the wrong shape")
    if m.domain.f != m.codomain.f:
        return False
    left = mat_mul(m.alpha, m.domain.phi) == mat_mul(m.codomain.phi, m.beta)
    right = mat_mul(m.codomain.psi, m.alpha) == mat_mul(m.beta, m.domain.psi)
    return left and right


def identity_morphism(x: MatrixFactorization) -> Morphism:
    i = identity(x.size)
    return Morphism(x, x, i, i)


def scalar_morphism(x: MatrixFactorization, h: Polynomial) -> Morphism:
    """(h*I, h*I): always a morphism since scalar matrices commute."""
    s = scalar_matrix(h, x.size)
    return Morphism(x, x, s, s)


def compose(m2: Morphism, m1: Morphism) -> Morphism:
    """Composite (alpha2*alpha1, beta2*beta1); m1 first, then m2."""
    if m1.codomain is not m2.domain and m1.codomain != m2.domain:
        raise MatrixError("codomain of the first morphism must match domain of the second")
    return Morphism(
        m1.domain,
        m2.codomain,
        mat_mul(m2.alpha, m1.alpha),
        mat_mul(m2.beta, m1.beta),
    )

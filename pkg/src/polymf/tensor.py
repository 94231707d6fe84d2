"""Tensor products of matrix factorizations.

Three families of constructions:

* the additive tensor product (with three variants), turning
  factorizations of f and g into one of f + g, of size 2nm;
* the multiplicative tensor product and its variant, producing a
  factorization of f*g of size 2nm;
* the reduced multiplicative tensor product, a single Kronecker pair
  (phi (x) phi', psi (x) psi') of f*g at size nm.

The definitions hold verbatim whether or not the two inputs share
variables, so nothing here rejects overlapping variable sets;
verification is the arbiter.
"""

from __future__ import annotations

from .factorization import (
    MatrixFactorization,
    Morphism,
    make_factorization,
    mat_mul,
)
from .matrix import (
    PolyMatrix,
    block2x2,
    direct_sum,
    identity,
    kron,
    scalar_matrix,
    shuffle_matrix,
)
from .poly import Polynomial

YOSHINO_VARIANTS = ("standard", "v1", "v2", "v3")
STANDARD_VARIANTS = ("standard", "v1", "v2")


def yoshino(
    x: MatrixFactorization,
    y: MatrixFactorization,
    variant: str = "standard",
    *,
    verify: str = "auto",
) -> MatrixFactorization:
    """Additive tensor product: a factorization of f + g of size 2nm."""
    phi, psi, phi2, psi2 = x.phi, x.psi, y.phi, y.psi
    n, m = x.size, y.size
    pk = kron(phi, identity(m))   # phi (x) 1_m
    sk = kron(psi, identity(m))   # psi (x) 1_m
    kp = kron(identity(n), phi2)  # 1_n (x) phi'
    ks = kron(identity(n), psi2)  # 1_n (x) psi'
    if variant == "standard":
        a = block2x2(pk, kp, -ks, sk)
        b = block2x2(sk, -kp, ks, pk)
    elif variant == "v1":
        a = block2x2(kp, sk, pk, -ks)
        b = block2x2(ks, sk, pk, -kp)
    elif variant == "v2":
        a = block2x2(sk, -ks, kp, pk)
        b = block2x2(pk, ks, -kp, sk)
    elif variant == "v3":
        a = block2x2(-ks, pk, sk, kp)
        b = block2x2(-kp, pk, sk, ks)
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {YOSHINO_VARIANTS}")
    return make_factorization(x.f + y.f, a, b, verify=verify)


def mult_tensor(
    x: MatrixFactorization, y: MatrixFactorization, *, verify: str = "auto"
) -> MatrixFactorization:
    """Multiplicative tensor product: duplicated Kronecker blocks, size 2nm."""
    pp = kron(x.phi, y.phi)
    ss = kron(x.psi, y.psi)
    return make_factorization(x.f * y.f, direct_sum(pp, pp), direct_sum(ss, ss), verify=verify)


def mult_tensor_variant(
    x: MatrixFactorization, y: MatrixFactorization, *, verify: str = "auto"
) -> MatrixFactorization:
    """Variant with the Kronecker blocks on the anti-diagonal, size 2nm."""
    pp = kron(x.phi, y.phi)
    ss = kron(x.psi, y.psi)
    nm = pp.rows
    zero = scalar_matrix(Polynomial.zero(), nm)
    return make_factorization(
        x.f * y.f,
        block2x2(zero, pp, pp, zero),
        block2x2(zero, ss, ss, zero),
        verify=verify,
    )


def reduced_tensor(
    x: MatrixFactorization, y: MatrixFactorization, *, verify: str = "auto"
) -> MatrixFactorization:
    """Reduced multiplicative tensor product: a factorization of f*g of
    size nm, with factors (phi (x) phi', psi (x) psi')."""
    return make_factorization(
        x.f * y.f,
        kron(x.phi, y.phi),
        kron(x.psi, y.psi),
        verify=verify,
    )


def direct_sum_factorizations(
    x1: MatrixFactorization, x2: MatrixFactorization, *, verify: str = "auto"
) -> MatrixFactorization:
    """Componentwise direct sum of two factorizations of the same polynomial."""
    if x1.f != x2.f:
        raise ValueError("direct sum requires factorizations of the same polynomial")
    return make_factorization(
        x1.f,
        direct_sum(x1.phi, x2.phi),
        direct_sum(x1.psi, x2.psi),
        verify=verify,
    )


def tensor_morphisms(
    zf: Morphism,
    zg: Morphism,
    *,
    verify: str = "auto",
) -> Morphism:
    """Tensor two morphisms into a morphism between the reduced tensor
    products of their endpoints: ([alpha_f (x) alpha_g], [beta_f (x) beta_g])."""
    domain = reduced_tensor(zf.domain, zg.domain, verify=verify)
    codomain = reduced_tensor(zf.codomain, zg.codomain, verify=verify)
    return Morphism(
        domain,
        codomain,
        kron(zf.alpha, zg.alpha),
        kron(zf.beta, zg.beta),
    )


def commutativity_morphism(
    x: MatrixFactorization, y: MatrixFactorization, *, verify: str = "auto"
) -> Morphism:
    """The morphism from X (x) Y to Y (x) X (reduced tensors) given by
    (phi_Y (x) phi_X, phi_X (x) phi_Y)."""
    domain = reduced_tensor(x, y, verify=verify)
    codomain = reduced_tensor(y, x, verify=verify)
    return Morphism(
        domain,
        codomain,
        kron(y.phi, x.phi),
        kron(x.phi, y.phi),
    )


def shuffle_isomorphism_check(x: MatrixFactorization, y: MatrixFactorization) -> bool:
    """True iff conjugating the factors of X (x) Y by the perfect shuffle
    yields exactly the factors of Y (x) X (reduced tensors)."""
    s = shuffle_matrix(y.size, x.size).matrix
    st = s.transpose()
    for ax, ay in ((x.phi, y.phi), (x.psi, y.psi)):
        if kron(ay, ax) != mat_mul(mat_mul(s, kron(ax, ay)), st):
            return False
    return True

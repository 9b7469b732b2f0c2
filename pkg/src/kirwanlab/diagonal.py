"""The torus-equivariant cohomology of CP^1 and its diagonal classes.

Under the two-torus action, the equivariant cohomology of CP^1 is the
projective-bundle ring Q[t1,t2,u]/((u-t1)(u-t2)); integration along the fiber
sends 1 to 0 and u to -1.  The equivariant diagonal class is assembled by the
Graham matrix method: invert the matrix of fiber integrals of products of a
fiber basis, transpose, and read off the tensor coefficients.

Everything works in the stable (untruncated) ring; an optional truncation
drops monomials beyond a finite approximation level for comparison with the
finite-dimensional models.

The module also composes diagonal-class data of two actions into that of
their product, using the bilinear product formulas; that composer is
validated structurally (degrees, bilinearity, brute-force expansion) since
one of its inputs is not computable in closed form here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import Singular, WrongDegree
from .exactcore import (
    Polynomial,
    QuotientRing,
    add,
    const,
    homogeneous_exponent_sum,
    mul_raw,
    scale,
    sub,
    variable,
    zero,
)
from .hamspace import ManifoldSpec

# Base ring Q[t1, t2] and the bundle ring Q[t1, t2, u] / (u - t1)(u - t2).
BASE_VARS = ("t1", "t2")
BUNDLE_VARS = ("t1", "t2", "u")
TENSOR_VARS = ("t1", "t2", "u_l", "u_r")


def _u_relation(nvars: int, u_index: int) -> Polynomial:
    t1 = variable(nvars, 0)
    t2 = variable(nvars, 1)
    u = variable(nvars, u_index)
    return mul_raw(sub(u, t1), sub(u, t2))


BUNDLE_RING = QuotientRing(BUNDLE_VARS, {2: _u_relation(3, 2)})
TENSOR_RING = QuotientRing(
    TENSOR_VARS, {2: _u_relation(4, 2), 3: _u_relation(4, 3)}
)


def bundle_class(a: Polynomial, b: Polynomial) -> Polynomial:
    """The class a + b*u from two polynomials in t1, t2 (given in 2 variables)."""
    out = zero()
    for m, c in a.items():
        out = add(out, {(m[0], m[1], 0): c})
    for m, c in b.items():
        out = add(out, {(m[0], m[1], 1): c})
    return BUNDLE_RING.normal_form(out)


def split_bundle_class(c: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Inverse of :func:`bundle_class` on canonical (u-degree <= 1) classes."""
    a: Polynomial = {}
    b: Polynomial = {}
    for m, coeff in BUNDLE_RING.normal_form(c).items():
        base = (m[0], m[1])
        if m[2] == 0:
            a[base] = coeff
        else:
            b[base] = coeff
    return a, b


def fiber_integrate(c: Polynomial) -> Polynomial:
    """Integration along the fiber: Q[t1,t2]-linear with 1 -> 0 and u -> -1."""
    _, b = split_bundle_class(c)
    return scale(b, -1)


def tensor_slot(left_u: int, right_u: int, coeff: Polynomial) -> Polynomial:
    """A base-coefficient times ``u^left (x) u^right`` in the tensor-square ring."""
    out: Polynomial = {}
    for m, c in coeff.items():
        out[(m[0], m[1], left_u, right_u)] = c
    return TENSOR_RING.normal_form(out)


def tensor_coefficients(c: Polynomial) -> dict[tuple[int, int], Polynomial]:
    """Coefficients of 1(x)1, u(x)1, 1(x)u, u(x)u of a canonical tensor class."""
    slots: dict[tuple[int, int], Polynomial] = {
        (0, 0): {}, (1, 0): {}, (0, 1): {}, (1, 1): {}
    }
    for m, coeff in TENSOR_RING.normal_form(c).items():
        slots[(m[2], m[3])][(m[0], m[1])] = coeff
    return slots


def graham_matrix() -> list[list[Polynomial]]:
    """Fiber integrals of products of the fiber bases x = (u, 1), y = (1, u)."""
    one = bundle_class(const(2, 1), zero())
    u = bundle_class(zero(), const(2, 1))
    xs = [u, one]
    ys = [one, u]
    return [
        [fiber_integrate(BUNDLE_RING.mul(xi, yj)) for yj in ys] for xi in xs
    ]


def invert_base_2x2(z: list[list[Polynomial]]) -> list[list[Polynomial]]:
    """Inverse of a 2x2 matrix over Q[t1,t2]; needs a nonzero constant determinant."""
    det = sub(mul_raw(z[0][0], z[1][1]), mul_raw(z[0][1], z[1][0]))
    if len(det) != 1 or (0, 0) not in det:
        raise Singular("determinant is not a unit in the base ring")
    inv = Fraction(1) / det[(0, 0)]
    return [
        [scale(z[1][1], inv), scale(z[0][1], -inv)],
        [scale(z[1][0], -inv), scale(z[0][0], inv)],
    ]


def graham_diagonal() -> Polynomial:
    """Equivariant diagonal class: ``(t1+t2)(1x1) - ux1 - 1xu``.

    Assembled from the transposed inverse of the fiber-integral matrix, with
    coefficient (i,j) attached to x_i (x) y_j.
    """
    z = graham_matrix()
    a = invert_base_2x2(z)
    # transpose
    a = [[a[j][i] for j in range(2)] for i in range(2)]
    # x_1 = u, x_2 = 1 on the left; y_1 = 1, y_2 = u on the right
    x_exp = [1, 0]
    y_exp = [0, 1]
    out = zero()
    for i in range(2):
        for j in range(2):
            out = add(out, tensor_slot(x_exp[i], y_exp[j], a[i][j]))
    return TENSOR_RING.normal_form(out)


def shriek(c: Polynomial) -> Polynomial:
    """Image of a bundle class under the equivariant diagonal push-forward.

    Linear over Q[t1,t2] with ``1 -> graham_diagonal()`` and
    ``u -> t1t2 (1x1) - u(x)u``.
    """
    p, q = split_bundle_class(c)
    t1t2 = {(1, 1): Fraction(1)}
    u_image = sub(tensor_slot(0, 0, t1t2), tensor_slot(1, 1, const(2, 1)))
    out = zero()
    if p:
        out = add(out, TENSOR_RING.mul(tensor_slot(0, 0, p), graham_diagonal()))
    if q:
        out = add(out, TENSOR_RING.mul(tensor_slot(0, 0, q), u_image))
    return TENSOR_RING.normal_form(out)


def truncate(p: Polynomial, k: int) -> Polynomial:
    """Drop monomials with t1- or t2-exponent above k (finite-model reduction)."""
    return {m: c for m, c in p.items() if m[0] <= k and m[1] <= k}


# ---------------------------------------------------------------------------
# Tensor squares of product actions and the product composition formulas.
# ---------------------------------------------------------------------------


def square_ring(spec: ManifoldSpec) -> QuotientRing:
    """Two-torus Kunneth ring of M x M: left generators over t1, right over t2."""
    from .exactcore import product_of_linear_factors

    k = spec.num_factors
    base = list(spec.variable_names[1:])
    names = ("t1", "t2") + tuple(f"{v}_l" for v in base) + tuple(f"{v}_r" for v in base)
    nvars = 2 + 2 * k
    relations = {}
    for i, f in enumerate(spec.factors):
        relations[2 + i] = product_of_linear_factors(nvars, 2 + i, 0, f.weights)
        relations[2 + k + i] = product_of_linear_factors(nvars, 2 + k + i, 1, f.weights)
    return QuotientRing(names, relations)


def _embed(
    p: Polynomial, k_from: int, k_total: int, offset: int
) -> Polynomial:
    """Embed a square-ring class of a factor block into the product square ring.

    Left variables land at ``2 + offset``, right variables at
    ``2 + k_total + offset``; the torus parameters stay in place.
    """
    out: Polynomial = {}
    for m, c in p.items():
        exps = [0] * (2 + 2 * k_total)
        exps[0], exps[1] = m[0], m[1]
        for i in range(k_from):
            exps[2 + offset + i] = m[2 + i]
            exps[2 + k_total + offset + i] = m[2 + k_from + i]
        out[tuple(exps)] = c
    return out


def _check_homogeneous(p: Polynomial, degree: int, label: str) -> None:
    if not p:
        return
    s = homogeneous_exponent_sum(p)
    if s is None or 2 * s != degree:
        raise WrongDegree(f"{label} must be homogeneous of degree {degree}")


def compose_product_lambda(
    spec_m: ManifoldSpec,
    spec_n: ManifoldSpec,
    lm1: Polynomial,
    lmu: Polynomial,
    ln1: Polynomial,
    lnu: Polynomial,
) -> tuple[Polynomial, Polynomial]:
    """Diagonal-class data of a product action from that of its factors.

    Inputs live in the square rings of the factors (images of 1 in degree
    2m-2 and of u in degree 2m); outputs live in the square ring of the
    product:

    * ``out1 = (t1+t2) lm1 (x) ln1 - lmu (x) ln1 - lm1 (x) lnu``
    * ``out2 = t1 t2 lm1 (x) ln1 - lmu (x) lnu``
    """
    m, n = spec_m.m, spec_n.m
    _check_homogeneous(lm1, 2 * m - 2, "image of 1 (first factor)")
    _check_homogeneous(lmu, 2 * m, "image of u (first factor)")
    _check_homogeneous(ln1, 2 * n - 2, "image of 1 (second factor)")
    _check_homogeneous(lnu, 2 * n, "image of u (second factor)")

    from .hamspace import ManifoldSpec as _Spec

    product_spec = _Spec(factors=spec_m.factors + spec_n.factors)
    ring = square_ring(product_spec)
    km, kn = spec_m.num_factors, spec_n.num_factors
    k = km + kn

    def emb_m(p: Polynomial) -> Polynomial:
        return _embed(p, km, k, 0)

    def emb_n(p: Polynomial) -> Polynomial:
        return _embed(p, kn, k, km)

    nvars = 2 + 2 * k
    t1 = variable(nvars, 0)
    t2 = variable(nvars, 1)

    pair_11 = mul_raw(emb_m(lm1), emb_n(ln1))
    pair_u1 = mul_raw(emb_m(lmu), emb_n(ln1))
    pair_1u = mul_raw(emb_m(lm1), emb_n(lnu))
    pair_uu = mul_raw(emb_m(lmu), emb_n(lnu))

    out1 = sub(sub(mul_raw(add(t1, t2), pair_11), pair_u1), pair_1u)
    out2 = sub(mul_raw(mul_raw(t1, t2), pair_11), pair_uu)
    return ring.normal_form(out1), ring.normal_form(out2)

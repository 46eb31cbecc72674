"""Polynomial KP tau functions on the partition lattice.

The central evaluator is the generalized bialternant

    s_{lambda,n}([x] | A) = det( p_{lambda_k - k + n}(x_j) )_{n x n} / Delta(x)

whose exponent convention lambda_k - k + n (rather than the paper-adjacent
lambda_k - k + l(lambda)) is forced by the A = 0 limit reproducing classical
Schur polynomials for any n >= l(lambda).

Independent routes used as cross-oracles:

* Jacobi-Trudi determinants over complete homogeneous functions (classical
  and skew Schur functions of a flow vector),
* the basis expansion of the r,p family: s_lambda(t) plus content-weighted
  skew coefficients times smaller Schur functions,
* the Giambelli determinant of hook values.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegeneratePointsError
from .linalg import determinant, vandermonde_product
from .partitions import (Partition, content_product_kp, frobenius,
                         hook_partition, subpartitions)
from .polysys import PolySystem
from .series import FlowVector, RSeq, complete_homogeneous, rat


def schur_classical(lam: Partition, t: FlowVector) -> Fraction:
    """s_lambda(t) by the Jacobi-Trudi determinant det(h_{lambda_i - i + j})."""
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    order = lam.part(1) + ell
    h = complete_homogeneous(t, order)

    def h_at(k):
        return h[k] if 0 <= k <= order else Fraction(0)

    rows = [[h_at(lam.part(i) - i + j) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)]
    return determinant(rows)


def skew_schur(lam: Partition, rho: Partition, t: FlowVector) -> Fraction:
    """s_{lambda/rho}(t) = det(h_{lambda_i - rho_j - i + j}); zero if rho !<= lambda."""
    if not lam.contains(rho):
        return Fraction(0)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    order = lam.part(1) + ell
    h = complete_homogeneous(t, order)

    def h_at(k):
        return h[k] if 0 <= k <= order else Fraction(0)

    rows = [[h_at(lam.part(i) - rho.part(j) - i + j) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)]
    return determinant(rows)


def _check_points(x):
    xs = [rat(v) for v in x]
    if len(set(xs)) != len(xs):
        raise DegeneratePointsError(f"coincident evaluation points in {xs}")
    return xs


def bialternant(lam: Partition, n: int, system: PolySystem, x) -> Fraction:
    """det( p_{lambda_k - k + n}(x_j) ) / Delta(x) with |x| = n.

    Returns 0 when l(lambda) > n, matching the classical Schur function in
    fewer variables than rows.
    """
    xs = _check_points(x)
    if len(xs) != n:
        raise ValueError(f"expected {n} points, got {len(xs)}")
    if len(lam) > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    rows = [[system.p(lam.part(k) - k + n)(xj) for k in range(1, n + 1)]
            for xj in xs]
    return determinant(rows) / vandermonde_product(xs)


def giambelli_check(lam: Partition, n: int, system: PolySystem, x) -> Fraction:
    """det( s_{(alpha_i | beta_j), n} ) over the Frobenius hooks of lambda.

    Agrees with :func:`bialternant`; the agreement is part of the test suite.
    """
    coords = frobenius(lam)
    r = coords.rank
    if r == 0:
        return Fraction(1)
    rows = [[bialternant(hook_partition(coords.arms[i], coords.legs[j]), n, system, x)
             for j in range(r)] for i in range(r)]
    return determinant(rows)


class SchurExpansion:
    """Finite expansion sum_rho c_rho s_rho(t) with rho running over subshapes."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam: Partition, terms: dict):
        self.lam = lam
        self.terms = dict(terms)

    def coefficient(self, rho: Partition) -> Fraction:
        return self.terms.get(rho, Fraction(0))

    def evaluate(self, t: FlowVector) -> Fraction:
        return sum((c * schur_classical(rho, t) for rho, c in self.terms.items()),
                   Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].weight, kv[0].parts))


def expansion_rp(lam: Partition, r: RSeq, p: FlowVector) -> SchurExpansion:
    """Schur-basis expansion of the r,p family tau function.

    coefficient(rho) = r_{lambda/rho} s_{lambda/rho}(p), with the content
    product over the skew cells; the leading term (rho = lambda) is 1.
    """
    terms = {}
    for rho in subpartitions(lam):
        coeff = content_product_kp(lam, rho, r) * skew_schur(lam, rho, p)
        if coeff != 0:
            terms[rho] = coeff
    return SchurExpansion(lam, terms)


def expansion_rp_value(lam: Partition, r: RSeq, p: FlowVector,
                       t: FlowVector) -> Fraction:
    return expansion_rp(lam, r, p).evaluate(t)


def tau_rp_value(lam: Partition, system: PolySystem, t: FlowVector) -> Fraction:
    """Tau value at arbitrary flows for a system with r,p provenance."""
    if system.rp_params is None:
        raise ValueError("tau at arbitrary flows needs an r,p family system")
    r, p = system.rp_params
    return expansion_rp_value(lam, r, p, t)

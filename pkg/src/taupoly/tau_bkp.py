"""Polynomial BKP tau functions on the strict-partition lattice.

Three independent evaluation routes are provided and kept in exact agreement
by the test suite:

* generalized Nimmo Pfaffian ratio at points x (numerator built from the
  honest pairwise vacuum expectation values, in the descending-point word
  order; overall normalization 2^{n+m} fixed once by the classical limit),
* the Pfaffian of two-part values Q_{(a,b)}(t|A) (Schur-Pfaffian analog),
* the expansion over classical Schur Q functions with content-product
  weights (r,p neutral family only).

Classical Q machinery: q_k from exp(2 sum_{odd} t_j z^j), two-row values
Q_{(a,b)} = q_a q_b + 2 sum_{v>=1} (-1)^v q_{a+v} q_{b-v}, the Pfaffian of
two-row values for general strict labels, and the Jozefiak-Pragacz-type
Pfaffian for skew Q functions.

Normalization notes (frozen by regression tests):

* Everything below is in the classical Q convention, the one with
  Q_alpha(t_B | 0) = Q_alpha(t_B).  The scaled convention differs by
  2^{-m} and halved arguments; see :func:`scaled_q_classical`.
* The printed Pfaffian-ratio with monomial columns x^alpha needs the
  correction (-1)^m 2^{l(alpha)} to produce Q_alpha; the correction is
  applied inside :func:`nimmo_classical` and frozen by tests.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegeneratePointsError
from .linalg import (SkewMatrix, bkp_kernel_pfaffian, pfaffian)
from .partitions import StrictPartition, content_product_bkp, strict_subpartitions
from .polysys import PolySystem
from .series import FlowVector, RSeq, q_polynomials, rat


def _q_at(q, k: int) -> Fraction:
    return q[k] if 0 <= k < len(q) else Fraction(0)


def two_row_q(a: int, b: int, q) -> Fraction:
    """Q_{(a,b)} = q_a q_b + 2 sum_{v=1}^{b} (-1)^v q_{a+v} q_{b-v}.

    Defined for arbitrary integers with q_{<0} = 0; vanishes for b < 0 and
    reduces to q_a at b = 0.
    """
    acc = _q_at(q, a) * _q_at(q, b)
    for v in range(1, b + 1):
        term = _q_at(q, a + v) * _q_at(q, b - v)
        if term != 0:
            acc += 2 * (-1) ** (v % 2) * term
    return acc


def q_function_classical(alpha: StrictPartition, t_b: FlowVector) -> Fraction:
    """Classical Q_alpha(t_B) as the Pfaffian of two-row values."""
    parts = alpha.padded_even()
    if not parts:
        return Fraction(1)
    order = 2 * parts[0] + 1
    q = q_polynomials(t_b, order)
    mat = SkewMatrix.from_upper(len(parts),
                                lambda i, j: two_row_q(parts[i], parts[j], q))
    return pfaffian(mat)


def skew_q_classical(lam: StrictPartition, mu: StrictPartition,
                     t_b: FlowVector) -> Fraction:
    """Skew Q_{lam/mu}(t_B) by the Jozefiak-Pragacz-type Pfaffian.

    Block matrix: two-row values Q_{(lam_i, lam_j)} on the first block,
    columns q_{lam_i - mu_{m+1-j}} against the reversed mu parts, zero block
    in the corner; lam is padded with one zero part when the total size is
    odd.  Zero when mu is not contained in lam.
    """
    if not lam.contains(mu):
        return Fraction(0)
    lam_parts = list(lam.parts)
    mu_parts = list(mu.parts)
    if (len(lam_parts) + len(mu_parts)) % 2:
        lam_parts.append(0)
    n, m = len(lam_parts), len(mu_parts)
    if n + m == 0:
        return Fraction(1)
    order = 2 * (lam_parts[0] if lam_parts else 0) + 1
    q = q_polynomials(t_b, order)
    mu_rev = mu_parts[::-1]

    def entry(i, j):
        if j < n:
            return two_row_q(lam_parts[i], lam_parts[j], q)
        if i < n:
            return _q_at(q, lam_parts[i] - mu_rev[j - n])
        return Fraction(0)

    return pfaffian(SkewMatrix.from_upper(n + m, entry))


def scaled_q_classical(alpha: StrictPartition, t_b: FlowVector) -> Fraction:
    """The scaled convention: 2^{-m} Q_alpha(t_B / 2), with 2m padded parts."""
    m = len(alpha.padded_even()) // 2
    return q_function_classical(alpha, t_b.scale(Fraction(1, 2))) / 2 ** m


def _prepare_points(x):
    """Validate points, appending the implicit 0 for odd counts."""
    xs = [rat(v) for v in x]
    if len(xs) % 2:
        xs.append(Fraction(0))
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if xs[a] == xs[b]:
                raise DegeneratePointsError(f"coincident points x = {xs[a]}")
            if xs[a] + xs[b] == 0:
                raise DegeneratePointsError(f"opposite points +-{xs[a]}")
    return xs


def nimmo_classical(alpha: StrictPartition, x) -> Fraction:
    """Classical Nimmo ratio with monomial columns, normalized to Q_alpha.

    Pf of [[M(x), V], [-V^T, 0]] with V_{aj} = x_a^{alpha_j} over Pf(M(x)),
    times the convention correction (-1)^m 2^{l(alpha)} that the classical
    limit forces (frozen by regression against the q-Pfaffian oracle).
    """
    xs = _prepare_points(x)
    parts = alpha.padded_even()
    m = len(parts) // 2
    size = len(xs) + len(parts)

    def entry(i, j):
        if i < len(xs) and j < len(xs):
            return (xs[i] - xs[j]) / (xs[i] + xs[j])
        if i < len(xs):
            return xs[i] ** parts[j - len(xs)]
        return Fraction(0)

    numerator = pfaffian(SkewMatrix.from_upper(size, entry))
    sign = -1 if m % 2 else 1
    return sign * 2 ** len(alpha) * numerator / bkp_kernel_pfaffian(xs)


def h_block(alpha: StrictPartition, system: PolySystem) -> SkewMatrix:
    """Pairing-table matrix of the dressed neutral modes of alpha.

    Entry (j, k) is the vacuum pair expectation of the dressed operators for
    parts alpha_j, alpha_k, computed from the finite mode expansions:
    (1/2) h_{0a} h_{0b} + sum_{v=1}^{b} (-1)^v h_{-v,a} h_{v,b}.
    """
    if not system.neutral or system.classical_v:
        raise ValueError("h_block needs a neutral system with matrix provenance")
    parts = alpha.padded_even()

    def entry(i, j):
        a, b = parts[i], parts[j]
        acc = Fraction(1, 2) * system.g(0, a) * system.g(0, b)
        for v in range(1, b + 1):
            term = system.g(-v, a) * system.g(v, b)
            if term != 0:
                acc += (-1) ** (v % 2) * term
        return acc

    return SkewMatrix.from_upper(len(parts), entry)


def h_block_closed_sum(alpha: StrictPartition, system: PolySystem) -> SkewMatrix:
    """The closed-sum form of the pairing matrix, for cross-checking.

    sum_{i=0}^{b} (-1)^i P_{-i,a} P_{i,b} + P_{0a} P_{0b} with the halved
    zero-row convention; identical to :func:`h_block` entry by entry.
    """
    parts = alpha.padded_even()

    def entry(i, j):
        a, b = parts[i], parts[j]
        acc = system.p_coeff(0, a) * system.p_coeff(0, b)
        for v in range(0, b + 1):
            term = system.p_coeff(-v, a) * system.p_coeff(v, b)
            if term != 0:
                acc += (-1) ** (v % 2) * term
        return acc

    return SkewMatrix.from_upper(len(parts), entry)


def two_part_generalized(a: int, b: int, system: PolySystem, q) -> Fraction:
    """Generalized two-part value Q_{(a,b)}(t|A) from the h window.

    Q_{(a,b)}(t|A) = sum_{l=0}^{b} sum_{k=-l}^{a} h_{ka} h_{lb} Q_{(k,l)}(t),
    with Q_{(k,l)} the two-row extension (zero for l < 0, constant terms from
    negative k).  ``q`` is the q-polynomial list of the flow argument.
    """
    total = Fraction(0)
    for l in range(0, b + 1):
        hlb = system.g(l, b)
        if hlb == 0:
            continue
        for k in range(-l, a + 1):
            hka = system.g(k, a)
            if hka == 0:
                continue
            value = two_row_q(k, l, q)
            if value != 0:
                total += hka * hlb * value
    return total


def schur_pfaffian_analog(alpha: StrictPartition, system: PolySystem,
                          t_b: FlowVector) -> Fraction:
    """Q_alpha(t_B|A) as the Pfaffian of generalized two-part values."""
    if not system.neutral or system.classical_v:
        raise ValueError("needs a neutral system with matrix provenance")
    parts = alpha.padded_even()
    if not parts:
        return Fraction(1)
    order = 2 * parts[0] + 1
    q = q_polynomials(t_b, order)
    mat = SkewMatrix.from_upper(
        len(parts), lambda i, j: two_part_generalized(parts[i], parts[j], system, q))
    return pfaffian(mat)


def nimmo_generalized(alpha: StrictPartition, system: PolySystem, x,
                      h_override: SkewMatrix | None = None) -> Fraction:
    """Q_alpha([x]_B | A) as a Pfaffian ratio at the points x.

    Numerator rows follow the bosonization word order: points in descending
    order (phi(-x_{2n}^{-1}) ... phi(-x_1^{-1})), then the dressed modes of
    alpha.  Entries are the honest pairwise vacuum expectations
    (point-point (1/2)(v-u)/(u+v), point-mode p_{alpha_j}(u|A), mode-mode
    the pairing matrix).  Overall factor 2^{n+m}, fixed by the A = 0 limit.

    An odd point count gets the implicit extra point x = 0.  For systems in
    the classical normalization (interpolation families) the monomial-style
    ratio with correction (-1)^m 2^{l(alpha)} is used instead.
    """
    if not system.neutral:
        raise ValueError("nimmo_generalized needs a neutral system")
    if alpha.part(1) > system.degree:
        raise ValueError(f"system degree {system.degree} < part {alpha.part(1)}")
    xs = _prepare_points(x)
    parts = alpha.padded_even()
    n2, m2 = len(xs), len(parts)
    m = m2 // 2

    if system.classical_v:
        def entry(i, j):
            if i < n2 and j < n2:
                return (xs[i] - xs[j]) / (xs[i] + xs[j])
            if i < n2:
                return system.p(parts[j - n2])(xs[i])
            return Fraction(0)

        numerator = pfaffian(SkewMatrix.from_upper(n2 + m2, entry))
        sign = -1 if m % 2 else 1
        return sign * 2 ** len(alpha) * numerator / bkp_kernel_pfaffian(xs)

    desc = xs[::-1]
    hmat = h_override if h_override is not None else h_block(alpha, system)
    if hmat.n != m2:
        raise ValueError(f"H block must have dimension {m2}, got {hmat.n}")

    def entry(i, j):
        if i < n2 and j < n2:
            return Fraction(1, 2) * (desc[j] - desc[i]) / (desc[i] + desc[j])
        if i < n2:
            return system.p(parts[j - n2])(desc[i])
        return hmat.entry(i - n2, j - n2)

    numerator = pfaffian(SkewMatrix.from_upper(n2 + m2, entry))
    return 2 ** (n2 // 2 + m) * numerator / bkp_kernel_pfaffian(xs)


class QExpansion:
    """Finite expansion sum_beta c_beta Q_beta(t_B) over strict subshapes."""

    __slots__ = ("alpha", "terms")

    def __init__(self, alpha: StrictPartition, terms: dict):
        self.alpha = alpha
        self.terms = dict(terms)

    def coefficient(self, beta: StrictPartition) -> Fraction:
        return self.terms.get(beta, Fraction(0))

    def evaluate(self, t_b: FlowVector) -> Fraction:
        return sum((c * q_function_classical(beta, t_b)
                    for beta, c in self.terms.items()), Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].weight, kv[0].parts))


def expansion_q(alpha: StrictPartition, r: RSeq, p_b: FlowVector) -> QExpansion:
    """Q-basis expansion of the neutral r,p family.

    coefficient(beta) = r^B_{alpha/beta} Q_{alpha/beta}(p_B / 2) with the
    content product over the shifted skew diagram; leading term 1.
    """
    if not p_b.bkp:
        raise ValueError("expansion_q needs a BKP-flagged flow vector")
    half = p_b.scale(Fraction(1, 2))
    terms = {}
    for beta in strict_subpartitions(alpha):
        coeff = content_product_bkp(alpha, beta, r) * skew_q_classical(alpha, beta, half)
        if coeff != 0:
            terms[beta] = coeff
    return QExpansion(alpha, terms)


def expansion_q_value(alpha: StrictPartition, r: RSeq, p_b: FlowVector,
                      t_b: FlowVector) -> Fraction:
    return expansion_q(alpha, r, p_b).evaluate(t_b)


def tau_bkp_value(alpha: StrictPartition, system: PolySystem,
                  t_b: FlowVector) -> Fraction:
    """Q_alpha(t_B|A) at arbitrary flows (Schur-Pfaffian route)."""
    return schur_pfaffian_analog(alpha, system, t_b)

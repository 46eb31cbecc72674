"""KP n-pair and BKP 2n-point correlation functions.

KP side: the correlator of n creation/annihilation field pairs against a
dressed lattice state is a block determinant

    K_{n,lambda}(x, y | A) = (-1)^{sum beta} det [[ N  W ] [ W* g ]]

with the Cauchy-type block N_{ab} = x_a y_b / (y_b - x_a) (the orientation
the pairing <psidag(x^{-1}) psi(y^{-1})> actually has), the polynomial
rectangles W_{aj} = x_a p_{alpha_j}(x_a), (W*)_{ib} = y_b p*_{beta_i}(y_b),
and the dressed pair block g_{ij} = sum_{k=0}^{beta_i} P_{-k-1,alpha_j}
P*_{beta_i,k}.  This is the exact vacuum expectation value of the defining
word; it satisfies

    K = (-1)^n (prod x_a y_a) det(1/(x_a-y_b)) tau_lambda([x]-[y])

exactly (the sign comes with the determinant orientation of the Cauchy
kernel and is covered by the acceptance tests).

BKP side: the block Pfaffian with kernel M_{ab} = (x_a-x_b)/(x_a+x_b),
polynomial columns, and the pairing matrix H; this printed normalization is
what the closed-form two-point examples satisfy verbatim.  The honest
vacuum-expectation normalization (word order, halved kernel) is also
provided, with the exact relation K_vev = 2^{-(n+m)} Pf(M) Q_alpha.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegeneratePointsError
from .linalg import (SkewMatrix, bkp_kernel_pfaffian, cauchy_determinant,
                     determinant, pfaffian)
from .partitions import Partition, StrictPartition, frobenius
from .polysys import PolySystem
from .series import power_sums, rat
from .tau_bkp import _prepare_points, h_block, nimmo_generalized
from .tau_kp import tau_rp_value


def _check_pair_points(x, y):
    xs = [rat(v) for v in x]
    ys = [rat(v) for v in y]
    if len(xs) != len(ys):
        raise ValueError("x and y must have the same length")
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise DegeneratePointsError("repeated coordinates")
    for a in xs:
        for b in ys:
            if a == b:
                raise DegeneratePointsError(f"pole at x = y = {a}")
    return xs, ys


def kp_dressed_pair_block(lam: Partition, system: PolySystem):
    """Honest pair block g_{ij} = sum_{k=0}^{beta_i} P_{-k-1,alpha_j} P*_{beta_i,k}."""
    coords = frobenius(lam)
    rows = []
    for i in range(coords.rank):
        beta = coords.legs[i]
        row = []
        for j in range(coords.rank):
            alpha = coords.arms[j]
            acc = Fraction(0)
            for k in range(beta + 1):
                acc += system.g(-k - 1, alpha) * system.dual_coeff(beta, k)
            row.append(acc)
        rows.append(row)
    return rows


def kp_g_block(lam: Partition, system: PolySystem):
    """The printed G block: (-1)^{beta_i} times the honest pair block."""
    coords = frobenius(lam)
    g = kp_dressed_pair_block(lam, system)
    return [[(-1) ** (coords.legs[i] % 2) * g[i][j] for j in range(coords.rank)]
            for i in range(coords.rank)]


def kp_pair_correlator(lam: Partition, system: PolySystem, x, y) -> Fraction:
    """The n-pair correlator as an (n+r) x (n+r) block determinant."""
    xs, ys = _check_pair_points(x, y)
    n = len(xs)
    coords = frobenius(lam)
    r = coords.rank
    if r and max(coords.arms[0], coords.legs[0]) > system.degree:
        raise ValueError("system degree too small for the Frobenius hooks")
    g = kp_dressed_pair_block(lam, system)
    rows = []
    for a in range(n):
        row = [xs[a] * ys[b] / (ys[b] - xs[a]) for b in range(n)]
        row += [xs[a] * system.p(coords.arms[j])(xs[a]) for j in range(r)]
        rows.append(row)
    for i in range(r):
        row = [ys[b] * system.pstar(coords.legs[i])(ys[b]) for b in range(n)]
        row += [g[i][j] for j in range(r)]
        rows.append(row)
    return coords.sign * determinant(rows)


def kp_correlator_vs_tau(lam: Partition, system: PolySystem, x, y):
    """Both sides of the determinantal correlator identity.

    lhs: the block determinant.  rhs: (-1)^n (prod x_a y_a) Delta(x,y)
    tau_lambda([x]-[y]), the tau side evaluated through the Schur-basis
    expansion of the system's r,p family.
    """
    xs, ys = _check_pair_points(x, y)
    n = len(xs)
    lhs = kp_pair_correlator(lam, system, xs, ys)
    order = max(lam.weight + len(lam) + 1, 1)
    t = power_sums(xs, order) - power_sums(ys, order)
    prefactor = Fraction(1)
    for a in range(n):
        prefactor *= xs[a] * ys[a]
    sign = -1 if n % 2 else 1
    rhs = sign * prefactor * cauchy_determinant(xs, ys) * tau_rp_value(lam, system, t)
    return lhs, rhs


def kp_correlator_polynomial_part(lam: Partition, system: PolySystem, x, y) -> Fraction:
    """K / Delta(x,y): the polynomial part whose coordinate degree is bounded."""
    xs, ys = _check_pair_points(x, y)
    return kp_pair_correlator(lam, system, xs, ys) / cauchy_determinant(xs, ys)


def bkp_point_correlator(alpha: StrictPartition, system: PolySystem, x,
                         h_override: SkewMatrix | None = None) -> Fraction:
    """The 2n-point correlator as the block Pfaffian Pf(M^H_alpha).

    Kernel block M_{ab} = (x_a-x_b)/(x_a+x_b) with points in the given
    (ascending-index) order, columns p_{alpha_j}(x_a|A), pairing block H.
    This normalization satisfies the closed two-point forms verbatim; its
    Pfaffian vanishes for more than 2n parts when H = 0 (rank bound).
    """
    if not system.neutral:
        raise ValueError("bkp_point_correlator needs a neutral system")
    xs = _prepare_points(x)
    parts = alpha.padded_even()
    n2, m2 = len(xs), len(parts)
    if system.classical_v or m2 == 0:
        hmat = SkewMatrix.from_upper(m2, lambda i, j: Fraction(0))
    else:
        hmat = h_override if h_override is not None else h_block(alpha, system)

    def entry(i, j):
        if i < n2 and j < n2:
            return (xs[i] - xs[j]) / (xs[i] + xs[j])
        if i < n2:
            return system.p(parts[j - n2])(xs[i])
        return hmat.entry(i - n2, j - n2)

    return pfaffian(SkewMatrix.from_upper(n2 + m2, entry))


def bkp_vev_correlator(alpha: StrictPartition, system: PolySystem, x) -> Fraction:
    """The honest vacuum-expectation normalization of the 2n-point correlator.

    Equals 2^{-(n+m)} Pf(M(x)) Q_alpha([x]_B | A) exactly.
    """
    xs = _prepare_points(x)
    parts = alpha.padded_even()
    n, m = len(xs) // 2, len(parts) // 2
    q = nimmo_generalized(alpha, system, xs)
    return q * bkp_kernel_pfaffian(xs) / 2 ** (n + m)

import random
from fractions import Fraction as F

import pytest

from taupoly import fock
from taupoly.correlators import (bkp_point_correlator, bkp_vev_correlator,
                                 kp_correlator_polynomial_part,
                                 kp_correlator_vs_tau, kp_dressed_pair_block,
                                 kp_g_block, kp_pair_correlator)
from taupoly.errors import DegeneratePointsError
from taupoly.linalg import bkp_kernel_pfaffian
from taupoly.partitions import Partition, StrictPartition, frobenius, hook_partition
from taupoly.polysys import family_rp, neutral_family, trivial, trivial_neutral
from taupoly.series import FlowVector, interpolate_poly
from taupoly.tau_bkp import h_block, nimmo_generalized
from taupoly.tau_kp import schur_classical, tau_rp_value
from taupoly.verify import (distinct_positive_points, random_flow,
                            random_fraction, random_rseq)


def rp_system(rng, degree, null_negative=False):
    r = random_rseq(rng, -degree - 2, degree + 2)
    p = random_flow(rng, 3)
    return family_rp(r, p, degree, null_negative=null_negative)


def pair_points(rng, n):
    pts = distinct_positive_points(rng, 2 * n)
    return pts[:n], pts[n:]


def test_empty_partition_single_pair():
    x, y = F(2, 3), F(5, 7)
    assert kp_pair_correlator(Partition(), trivial(4), [x], [y]) == x * y / (y - x)


def test_pole_and_coincidence_guards():
    with pytest.raises(DegeneratePointsError):
        kp_pair_correlator(Partition(), trivial(3), [F(1)], [F(1)])
    with pytest.raises(DegeneratePointsError):
        kp_pair_correlator(Partition(), trivial(3), [F(1), F(1)], [F(2), F(3)])


def test_hook_closed_forms():
    # K = gamma xy/(y-x) - (-1)^{beta} xy p_alpha(x) p*_beta(y), with
    # gamma the printed G entry; the (-1)^beta is demanded by the honest
    # vacuum expectation value (see the (1,1) wedge check below)
    rng = random.Random(1)
    x, y = F(3, 2), F(7, 5)
    for arm, leg in ((0, 0), (1, 0), (0, 1), (2, 1), (1, 2)):
        lam = hook_partition(arm, leg)
        system = rp_system(rng, max(arm, leg) + 1)
        value = kp_pair_correlator(lam, system, [x], [y])
        gamma = kp_g_block(lam, system)[0][0]
        sign = -1 if leg % 2 else 1
        closed = gamma * x * y / (y - x) - sign * x * y * \
            system.p(arm)(x) * system.pstar(leg)(y)
        assert value == closed, (arm, leg)


def test_hook_product_form_null_g():
    rng = random.Random(2)
    x, y = F(3, 2), F(7, 5)
    for arm, leg in ((1, 0), (2, 0), (3, 2)):
        lam = hook_partition(arm, leg)
        system = rp_system(rng, max(arm, leg) + 1, null_negative=True)
        assert kp_g_block(lam, system) == [[F(0)]]
        value = kp_pair_correlator(lam, system, [x], [y])
        sign = -1 if leg % 2 else 1
        assert value == -sign * x * y * system.p(arm)(x) * system.pstar(leg)(y)


def test_wedge_state_value_for_column_partition():
    # lambda = (1,1) = hook (0|1) at the trivial system: the honest vacuum
    # expectation value is + x y^2 (direct wedge computation)
    x, y = F(2, 3), F(5, 7)
    assert kp_pair_correlator(Partition([1, 1]), trivial(3), [x], [y]) == x * y * y


def test_rank_vanishing_null_g():
    rng = random.Random(3)
    for parts in ([2, 2], [3, 3, 1], [2, 2, 2]):
        lam = Partition(parts)
        system = rp_system(rng, 6, null_negative=True)
        assert kp_pair_correlator(lam, system, [F(3, 2)], [F(7, 5)]) == 0


def test_g_block_family_closed_form():
    # G_ij = r_{-beta_i} ... r_{alpha_j} s_{(alpha_j|beta_i)}(p)
    rng = random.Random(4)
    deg = 4
    r = random_rseq(rng, -deg - 2, deg + 2)
    p = random_flow(rng, 3)
    system = family_rp(r, p, deg)
    for lam in (Partition([2, 1]), Partition([3, 3]), Partition([4, 2, 1])):
        coords = frobenius(lam)
        block = kp_g_block(lam, system)
        for i in range(coords.rank):
            for j in range(coords.rank):
                hook = hook_partition(coords.arms[j], coords.legs[i])
                expect = r.product(-coords.legs[i], coords.arms[j]) * \
                    schur_classical(hook, p)
                assert block[i][j] == expect


def test_correlator_vs_tau_random():
    rng = random.Random(5)
    for _ in range(12):
        lam = Partition(rng.choice([[], [1], [2, 1], [2, 2], [3, 1], [3, 2, 1]]))
        n = rng.randint(1, 3)
        system = rp_system(rng, max(lam.part(1), len(lam), 1) + 1)
        x, y = pair_points(rng, n)
        lhs, rhs = kp_correlator_vs_tau(lam, system, x, y)
        assert lhs == rhs, (lam, n)


def test_zero_pair_correlator_matches_fock_oracle():
    rng = random.Random(6)
    system = rp_system(rng, 4)
    for parts in ([1], [2, 1], [2, 2], [3, 1, 1]):
        lam = Partition(parts)
        coords = frobenius(lam)
        word = []
        for j in range(coords.rank):
            word.append(fock.dressed(system, coords.arms[j], "psi"))
            word.append(fock.dressed(system, coords.legs[j], "psistar"))
        direct = coords.sign * fock.vev(word, system.window).to_fraction()
        assert direct == kp_pair_correlator(lam, system, [], [])
        assert direct == tau_rp_value(lam, system, FlowVector({}))


def test_degree_bound_per_coordinate():
    # K / Delta(x,y) is a polynomial of degree <= 2n + |lambda| - r in each
    # point coordinate
    rng = random.Random(7)
    for _ in range(6):
        lam = Partition(rng.choice([[1], [2], [2, 1], [2, 2], [3, 1]]))
        n = rng.randint(1, 2)
        rank = frobenius(lam).rank
        bound = 2 * n + lam.weight - rank
        system = rp_system(rng, lam.part(1) + len(lam) + 1)
        x, y = pair_points(rng, n)

        for coord in range(2 * n):
            samples, values = [], []
            base = 61
            while len(samples) < bound + 3:
                candidate = F(base, 7)
                base += 3
                xs, ys = list(x), list(y)
                if coord < n:
                    xs[coord] = candidate
                else:
                    ys[coord - n] = candidate
                try:
                    values.append(kp_correlator_polynomial_part(lam, system, xs, ys))
                except DegeneratePointsError:
                    continue
                samples.append(candidate)
            poly = interpolate_poly(samples, values)
            assert poly.degree <= bound, (lam, n, coord, poly.degree, bound)


def test_bkp_two_point_closed_forms():
    rng = random.Random(8)
    x1, x2 = F(3), F(1)
    assert bkp_point_correlator(StrictPartition(), trivial_neutral(2), [x1, x2]) == \
        (x1 - x2) / (x1 + x2)
    deg = 4
    r = random_rseq(rng, 1, deg + 1)
    p_b = random_flow(rng, 3, odd_only=True)
    full = neutral_family(r, p_b, deg)
    nulled = neutral_family(r, p_b, deg, null_negative=True)
    a1, a2 = 3, 1
    alpha = StrictPartition([a1, a2])
    value0 = bkp_point_correlator(alpha, nulled, [x1, x2])
    assert value0 == nulled.p(a1)(x2) * nulled.p(a2)(x1) - \
        nulled.p(a1)(x1) * nulled.p(a2)(x2)
    sigma = h_block(alpha, full).entry(0, 1)
    value1 = bkp_point_correlator(alpha, full, [x1, x2])
    assert value1 == sigma * (x1 - x2) / (x1 + x2) + \
        full.p(a1)(x2) * full.p(a2)(x1) - full.p(a1)(x1) * full.p(a2)(x2)


def test_bkp_rank_vanishing():
    rng = random.Random(9)
    deg = 4
    nulled = neutral_family(random_rseq(rng, 1, deg + 1),
                            random_flow(rng, 3, odd_only=True), deg,
                            null_negative=True)
    assert bkp_point_correlator(StrictPartition([4, 2, 1]), nulled,
                                [F(3), F(1)]) == 0
    assert bkp_point_correlator(StrictPartition([4, 3, 2, 1]), nulled,
                                [F(3), F(1)]) == 0


def test_bkp_vanishes_at_coincident_points():
    # the full Pfaffian changes sign under a simultaneous swap of two point
    # rows/columns, hence vanishes when two points coincide; guarded upstream
    with pytest.raises(DegeneratePointsError):
        bkp_point_correlator(StrictPartition([1]), trivial_neutral(2), [F(2), F(2)])


def test_bkp_printed_vs_tau_relation_null():
    # with H = 0 the printed block Pfaffian is (-4)^{-m} Pf(M) Q_alpha
    rng = random.Random(10)
    deg = 4
    nulled = neutral_family(random_rseq(rng, 1, deg + 1),
                            random_flow(rng, 3, odd_only=True), deg,
                            null_negative=True)
    for parts, count in (([2, 1], 2), ([3, 1], 4), ([4, 3, 2, 1], 4)):
        alpha = StrictPartition(parts)
        m = len(alpha.padded_even()) // 2
        x = distinct_positive_points(rng, count)
        lhs = bkp_point_correlator(alpha, nulled, x)
        rhs = F(-4) ** -m * bkp_kernel_pfaffian(x) * nimmo_generalized(alpha, nulled, x)
        assert lhs == rhs, (parts, count)


def test_bkp_vev_relation_always():
    # the honest word normalization satisfies 2^{-(n+m)} Pf(M) Q_alpha
    rng = random.Random(11)
    deg = 3
    system = neutral_family(random_rseq(rng, 1, deg + 1),
                            random_flow(rng, 3, odd_only=True), deg)
    alpha = StrictPartition([3, 1])
    x = distinct_positive_points(rng, 4)
    n, m = len(x) // 2, len(alpha.padded_even()) // 2
    vev = bkp_vev_correlator(alpha, system, x)
    q = nimmo_generalized(alpha, system, x)
    assert vev == bkp_kernel_pfaffian(x) * q / 2 ** (n + m)


def test_dressed_pair_block_vs_oracle():
    rng = random.Random(12)
    system = rp_system(rng, 3)
    lam = Partition([2, 2])
    coords = frobenius(lam)
    block = kp_dressed_pair_block(lam, system)
    for i in range(coords.rank):
        for j in range(coords.rank):
            word = [fock.dressed(system, coords.arms[j], "psi"),
                    fock.dressed(system, coords.legs[i], "psistar")]
            assert fock.vev(word, system.window).to_fraction() == block[i][j]

import random
from fractions import Fraction as F

import pytest

from taupoly import fock
from taupoly.errors import WindowError
from taupoly.partitions import Partition, partitions_up_to
from taupoly.polysys import family_rp, neutral_family
from taupoly.series import FlowVector
from taupoly.verify import random_flow, random_fraction, random_rseq, suite_wick

W = 8


def test_scalar_field_arithmetic():
    s = fock.Scalar.inv_sqrt2()
    assert s * s == fock.Scalar(F(1, 2))
    i = fock.Scalar(0, 1)
    assert i * i == fock.Scalar(-1)
    # (1 + 2i + (3+4i)r2)(1/2 - i + 2i r2) expanded by hand
    mixed = fock.Scalar(1, 2, 3, 4) * fock.Scalar(F(1, 2), -1, 0, 2)
    assert mixed == fock.Scalar(F(-27, 2), F(12), F(3, 2), F(1))
    with pytest.raises(ValueError):
        fock.Scalar(0, 1).to_fraction()


def test_vacuum_annihilation():
    vac = fock.FockState.vacuum(W)
    for j in range(1, 4):
        assert fock.apply(fock.psi(-j), vac).is_zero()
        assert fock.apply(fock.psidag(j - 1), vac).is_zero()
    for j in range(1, 4):
        assert fock.apply(fock.phi(-j), vac).is_zero()


def test_window_overflow():
    vac = fock.FockState.vacuum(W)
    with pytest.raises(WindowError):
        fock.apply(fock.psi(W + 1), vac)


def test_field_pairings():
    x = F(2, 3)
    for j in range(0, 4):
        got = fock.vev([fock.psidag_field(x, W), fock.psi(j)], W)
        assert got == fock.Scalar(x ** (j + 1))
    y = F(3, 5)
    for j in range(0, 4):
        got = fock.vev([fock.psi_field(y, W), fock.psidag(-j - 1)], W)
        assert got == fock.Scalar(y ** (j + 1))


def test_neutral_pairing_table():
    for j in range(-4, 5):
        for k in range(-4, 5):
            got = fock.vev([fock.phi(j), fock.phi(k)], W)
            if k > 0:
                expect = fock.Scalar((-1) ** (k % 2) if j == -k else 0)
            elif k == 0:
                expect = fock.Scalar(F(1, 2) if j == 0 else 0)
            else:
                expect = fock.Scalar(0)
            assert got == expect, (j, k)
    assert fock.vev([fock.phi(0), fock.phi(0, minus=True)], W) == fock.Scalar(0, F(1, 2))
    assert fock.vev([fock.phi(0, minus=True), fock.phi(0)], W) == fock.Scalar(0, F(-1, 2))


def test_anticommutators_on_random_states():
    rng = random.Random(3)
    state = fock.FockState.vacuum(W)
    for op in (fock.psi(2), fock.psidag(-1), fock.phi(1), fock.phi(-2, minus=True)):
        state = fock.apply(op, state) + state.scale(random_fraction(rng, 3))
    for j in range(-3, 4):
        for k in range(-3, 4):
            both = fock.apply(fock.psi(j), fock.apply(fock.psidag(k), state)) + \
                fock.apply(fock.psidag(k), fock.apply(fock.psi(j), state))
            assert both == state.scale(1 if j == k else 0)
            neutral = fock.apply(fock.phi(j), fock.apply(fock.phi(k), state)) + \
                fock.apply(fock.phi(k), fock.apply(fock.phi(j), state))
            assert neutral == state.scale((-1) ** (j % 2) if j == -k else 0)
            mixed = fock.apply(fock.phi(j), fock.apply(fock.phi(k, minus=True), state)) + \
                fock.apply(fock.phi(k, minus=True), fock.apply(fock.phi(j), state))
            assert mixed == state.scale(0)


def test_basis_states_match_operator_construction():
    for lam in partitions_up_to(6):
        for n in (-2, 0, 1, 3):
            direct = fock.basis_state(lam, n, W)
            via_ops = fock.basis_state_from_ops(lam, n, W)
            assert direct == via_ops, (lam, n)


def test_odd_word_vanishes():
    assert fock.vev([fock.psi(1), fock.psidag(1), fock.psi(0)], W).is_zero()
    assert fock.vev([fock.phi(2)], W).is_zero()


def test_wick_random_words():
    result = suite_wick(seed=5, size=40, window=W)
    assert result["failed"] == 0


def test_wick_determinant_split_case():
    # words u_1 v_1 ... u_n v_n with u's from psidag span, v's from psi span
    rng = random.Random(9)
    for _ in range(10):
        n = rng.choice([2, 3])
        us = [fock.psidag(rng.randint(-3, 3), random_fraction(rng, 3, nonzero=True))
              for _ in range(n)]
        vs = [fock.psi(rng.randint(-3, 3), random_fraction(rng, 3, nonzero=True))
              for _ in range(n)]
        word = []
        for u, v in zip(us, vs):
            word += [u, v]
        direct = fock.vev(word, W)
        rows = [[fock.vev([u, v], W) for v in vs] for u in us]
        assert direct == fock.determinant_scalar(rows)


def test_dressed_operators_lemma_2_1():
    rng = random.Random(11)
    deg = 3
    system = family_rp(random_rseq(rng, -deg - 2, deg + 2), random_flow(rng, 3), deg)
    x = F(3, 4)
    for j in range(deg + 1):
        forward = fock.vev([fock.psidag_field(x, system.window),
                            fock.dressed(system, j, "psi")], system.window)
        assert forward.to_fraction() / x == system.p(j)(x)
        dual = fock.vev([fock.psi_field(x, system.window),
                         fock.dressed(system, j, "psistar")], system.window)
        assert dual.to_fraction() / x == system.pstar(j)(x)


def test_dressed_operators_lemma_2_2():
    rng = random.Random(13)
    deg = 3
    system = neutral_family(random_rseq(rng, 1, deg + 2),
                            random_flow(rng, 3, odd_only=True), deg)
    x = F(3, 4)
    for j in range(deg + 1):
        value = fock.vev([fock.phi_field(x, system.window),
                          fock.dressed(system, j, "phi")], system.window)
        assert value.to_fraction() == system.p(j)(x)
    assert system.p(0)(x) == F(1, 2)


def test_trivial_dressed_is_single_mode():
    from taupoly.series import RSeq

    system = family_rp(RSeq.zero(-3, 3), FlowVector({}), 2)
    op = fock.dressed(system, 2, "psi")
    nonzero = [t for t in op.terms if not t[2].is_zero()]
    assert len(nonzero) == 1 and nonzero[0][1] == 2

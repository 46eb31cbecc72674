"""Brute-force truncated free-fermion Fock space.

This is the ground-truth oracle behind every Wick-derived determinant and
Pfaffian in the package: states are explicit wedge vectors on a finite mode
window, operators act literally, and vacuum expectation values are read off
as amplitudes.

Scalars live in Q(i, sqrt(2)): the neutral operators carry 1/sqrt(2) and the
minus-type ones an i, so the field extension lets the definitions be realized
literally while every final tau/correlator value is asserted to lie in the
rational subfield.

Mode window: integers -W..W; a basis state is the set of occupied modes, with
the wedge ordered by decreasing mode index and everything below -W implicitly
filled.  The vacuum of charge n occupies all window modes < n.  Operators
whose mode index leaves the window raise WindowError; truncation is loud,
never silent.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import WindowError
from .linalg import pfaffian_generic, perm_sign
from .polysys import PolySystem
from .series import rat

DEFAULT_WINDOW = 16


class Scalar:
    """Element a + b*sqrt(2) of Q(i, sqrt(2)), a and b Gaussian rationals."""

    __slots__ = ("re", "im", "re2", "im2")

    def __init__(self, re=0, im=0, re2=0, im2=0):
        self.re = rat(re)
        self.im = rat(im)
        self.re2 = rat(re2)
        self.im2 = rat(im2)

    @classmethod
    def inv_sqrt2(cls) -> "Scalar":
        """1/sqrt(2) = sqrt(2)/2."""
        return cls(0, 0, Fraction(1, 2), 0)

    @classmethod
    def i_inv_sqrt2(cls) -> "Scalar":
        """i/sqrt(2)."""
        return cls(0, 0, 0, Fraction(1, 2))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im,
                      self.re2 + other.re2, self.im2 + other.im2)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im,
                      self.re2 - other.re2, self.im2 - other.im2)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im, -self.re2, -self.im2)

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re * other, self.im * other,
                          self.re2 * other, self.im2 * other)
        a, b = complex_mul(self.re, self.im, other.re, other.im)
        c, d = complex_mul(self.re2, self.im2, other.re2, other.im2)
        re = a + 2 * c
        im = b + 2 * d
        e, f = complex_mul(self.re, self.im, other.re2, other.im2)
        g, h = complex_mul(self.re2, self.im2, other.re, other.im)
        return Scalar(re, im, e + g, f + h)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        return (self.re == other.re and self.im == other.im
                and self.re2 == other.re2 and self.im2 == other.im2)

    def __hash__(self):
        return hash((self.re, self.im, self.re2, self.im2))

    def is_zero(self) -> bool:
        return not (self.re or self.im or self.re2 or self.im2)

    def is_rational(self) -> bool:
        return not (self.im or self.re2 or self.im2)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"value {self!r} is not rational")
        return self.re

    def __repr__(self):
        return f"Scalar({self.re}, {self.im}i, {self.re2}r2, {self.im2}ir2)"


def complex_mul(a, b, c, d):
    return a * c - b * d, a * d + b * c


ZERO = Scalar()
ONE = Scalar(1)


class LinearOp:
    """Finite linear combination of charged modes psi_j, psidag_j.

    Terms are (kind, mode, coefficient) with kind "psi" or "psidag"; neutral
    operators are expanded into this basis at construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple((kind, int(mode), coeff if isinstance(coeff, Scalar)
                            else Scalar(coeff)) for kind, mode, coeff in terms)

    def __add__(self, other: "LinearOp") -> "LinearOp":
        return LinearOp(self.terms + other.terms)

    def scale(self, c) -> "LinearOp":
        c = c if isinstance(c, Scalar) else Scalar(c)
        return LinearOp([(kind, m, c * v) for kind, m, v in self.terms])

    def max_mode(self) -> int:
        return max((abs(m) for _, m, _ in self.terms), default=0)


def psi(j: int, coeff=1) -> LinearOp:
    return LinearOp([("psi", j, coeff)])


def psidag(j: int, coeff=1) -> LinearOp:
    return LinearOp([("psidag", j, coeff)])


def phi(j: int, minus: bool = False) -> LinearOp:
    """Neutral operator phi^+_j or phi^-_j.

    phi^+_j = (psi_j + (-1)^j psidag_{-j}) / sqrt(2)
    phi^-_j = i (psi_j - (-1)^j psidag_{-j}) / sqrt(2)
    """
    sign = -1 if j % 2 else 1
    if minus:
        c = Scalar.i_inv_sqrt2()
        return LinearOp([("psi", j, c), ("psidag", -j, c * (-sign))])
    c = Scalar.inv_sqrt2()
    return LinearOp([("psi", j, c), ("psidag", -j, c * sign)])


def psidag_field(x, window: int = DEFAULT_WINDOW) -> LinearOp:
    """psidag(x^{-1}) = sum_j psidag_j x^{j+1}, truncated to the window."""
    x = rat(x)
    return LinearOp([("psidag", j, x ** (j + 1)) for j in range(-window, window + 1)])


def psi_field(y, window: int = DEFAULT_WINDOW) -> LinearOp:
    """psi(y^{-1}) = sum_j psi_j y^{-j}, truncated to the window."""
    y = rat(y)
    return LinearOp([("psi", j, y ** (-j)) for j in range(-window, window + 1)])


def phi_field(x, window: int = DEFAULT_WINDOW, minus: bool = False) -> LinearOp:
    """phi(-x^{-1}) = sum_j (-1)^j x^{-j} phi_j, truncated to the window."""
    x = rat(x)
    terms = []
    for j in range(-window, window + 1):
        c = Scalar((-1) ** (j % 2) * x ** (-j))
        for kind, m, v in phi(j, minus=minus).terms:
            terms.append((kind, m, c * v))
    return LinearOp(terms)


def dressed(system: PolySystem, j: int, flavor: str = "psi") -> LinearOp:
    """Group-dressed operator as a finite triangular combination of modes.

    flavor "psi":     psi_j(A)       = sum_{k<=j} g_{kj} psi_k
    flavor "psistar": psi*_{-j-1}(A) = sum_{k>=-j-1} g^{-1}_{-j-1,k} psidag_k
    flavor "phi":     phi_j(A)       = sum_{k<=j} h_{kj} phi_k
    """
    W = system.window
    if not system.has_matrix:
        raise WindowError("dressed operators need a system with matrix provenance")
    if flavor == "psi":
        terms = []
        for k in range(-W, j + 1):
            c = system.g(k, j)
            if c != 0:
                terms.append(("psi", k, Scalar(c)))
        return LinearOp(terms)
    if flavor == "psistar":
        terms = []
        for k in range(-j - 1, W + 1):
            c = system.ginv(-j - 1, k)
            if c != 0:
                terms.append(("psidag", k, Scalar(c)))
        return LinearOp(terms)
    if flavor == "phi":
        op_terms = []
        for k in range(-W, j + 1):
            c = system.g(k, j)
            if c == 0:
                continue
            for kind, m, v in phi(k).terms:
                op_terms.append((kind, m, Scalar(c) * v))
        return LinearOp(op_terms)
    raise ValueError(f"unknown flavor {flavor!r}")


class FockState:
    """Sparse vector over wedge basis states of a finite mode window."""

    __slots__ = ("window", "amps")

    def __init__(self, window: int, amps: dict):
        self.window = window
        self.amps = amps

    @classmethod
    def vacuum(cls, window: int = DEFAULT_WINDOW, charge: int = 0) -> "FockState":
        if charge > window or charge < -window + 1:
            raise WindowError(f"charge {charge} does not fit window {window}")
        occ = frozenset(range(-window, charge))
        return cls(window, {occ: ONE})

    def amplitude(self, occupied) -> Scalar:
        return self.amps.get(frozenset(occupied), ZERO)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.amps.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockState) or self.window != other.window:
            return False
        keys = set(self.amps) | set(other.amps)
        return all(self.amps.get(k, ZERO) == other.amps.get(k, ZERO) for k in keys)

    def __hash__(self):  # pragma: no cover
        raise TypeError("FockState is unhashable")

    def scale(self, c) -> "FockState":
        c = c if isinstance(c, Scalar) else Scalar(c)
        return FockState(self.window, {k: c * v for k, v in self.amps.items()})

    def __add__(self, other: "FockState") -> "FockState":
        if self.window != other.window:
            raise ValueError("window mismatch")
        amps = dict(self.amps)
        for k, v in other.amps.items():
            s = amps.get(k, ZERO) + v
            if s.is_zero():
                amps.pop(k, None)
            else:
                amps[k] = s
        return FockState(self.window, amps)


def apply(op: LinearOp, state: FockState) -> FockState:
    """Left action of a linear operator, with wedge-ordering signs."""
    W = state.window
    out: dict = {}
    for kind, mode, coeff in op.terms:
        if coeff.is_zero():
            continue
        if not -W <= mode <= W:
            raise WindowError(f"mode {mode} outside window [-{W},{W}]")
        for occ, amp in state.amps.items():
            if kind == "psi":
                if mode in occ:
                    continue
                new_occ = occ | {mode}
            else:
                if mode not in occ:
                    continue
                new_occ = occ - {mode}
            sign = -1 if sum(1 for m in occ if m > mode) % 2 else 1
            value = amp * coeff * sign
            key = frozenset(new_occ)
            acc = out.get(key, ZERO) + value
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return FockState(W, out)


def vev(word, window: int = DEFAULT_WINDOW, charge: int = 0) -> Scalar:
    """<charge| w_1 w_2 ... w_n |charge> on the truncated space."""
    state = FockState.vacuum(window, charge)
    vac = next(iter(state.amps))
    for op in reversed(list(word)):
        state = apply(op, state)
    return state.amps.get(vac, ZERO)


def vev_rational(word, window: int = DEFAULT_WINDOW, charge: int = 0) -> Fraction:
    return vev(word, window, charge).to_fraction()


def pair_matrix(word, window: int = DEFAULT_WINDOW):
    """Skew matrix of pairwise VEVs <0| w_i w_j |0> (word order, i < j)."""
    ops = list(word)
    n = len(ops)
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            table[(i, j)] = vev([ops[i], ops[j]], window)
    return table


def wick_check(word, window: int = DEFAULT_WINDOW):
    """Return (direct VEV, Pfaffian of the pairwise-VEV matrix).

    Wick's theorem asserts the two are equal for any word of linear
    operators; odd-length words have direct VEV zero and Pfaffian zero by
    convention.
    """
    ops = list(word)
    direct = vev(ops, window)
    n = len(ops)
    if n % 2:
        return direct, ZERO
    table = pair_matrix(ops, window)

    def entry(i, j):
        return table[(i, j)] if i < j else -table[(j, i)]

    pf = pfaffian_generic(entry, n, ZERO, ONE)
    return direct, pf


def determinant_scalar(rows) -> Scalar:
    """Permutation-sum determinant over the oracle scalar field."""
    import itertools

    n = len(rows)
    total = ZERO
    for perm in itertools.permutations(range(n)):
        term = ONE if perm_sign(perm) == 1 else -ONE
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def basis_state(lam, n: int = 0, window: int = DEFAULT_WINDOW) -> FockState:
    """Wedge basis state with particle positions lambda_i - i + n."""
    parts = list(lam.parts) if hasattr(lam, "parts") else list(lam)
    positions = set()
    i = 1
    for p in parts:
        positions.add(p - i + n)
        i += 1
    m = n - i
    while m >= -window:
        positions.add(m)
        m -= 1
    if min(positions, default=0) < -window or max(positions, default=0) > window:
        raise WindowError("partition does not fit the mode window")
    return FockState(window, {frozenset(positions): ONE})


def basis_state_from_ops(lam, n: int = 0, window: int = DEFAULT_WINDOW) -> FockState:
    """Same state built as (-1)^{sum beta} prod psi_{alpha_j+n} psidag_{-beta_j+n-1} |n>."""
    from .partitions import Partition, frobenius

    lam = lam if isinstance(lam, Partition) else Partition(lam)
    coords = frobenius(lam)
    state = FockState.vacuum(window, charge=n)
    for j in range(coords.rank, 0, -1):
        state = apply(psidag(-coords.legs[j - 1] + n - 1), state)
        state = apply(psi(coords.arms[j - 1] + n), state)
    return state.scale(coords.sign)

"""Exact rational scalars, flow vectors, and truncated generating series.

Every scalar in the package is a fractions.Fraction; floating point appears
nowhere.  Flow variables t = (t_1, t_2, ...) are finitely supported and may
carry a parity flag marking vectors with only odd indices populated (the
convention for the B-type flows t_B = (t_1, t_3, ...)).

The two generating series used everywhere are

    sum_k h_k z^k = exp(sum_j t_j z^j)          (complete homogeneous)
    sum_k q_k z^k = exp(2 sum_{j odd} t_j z^j)  (q-polynomials)

both truncated at a caller-supplied order; all downstream objects are
polynomials of known degree, so the order is always computable up front.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import WindowError


def rat(value) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a Fraction.

    Floats (and decimal strings) are rejected: exactness is a hard contract.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if "." in value or "e" in value or "E" in value:
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Canonical string form: "p" when the denominator is 1, else "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class FlowVector:
    """Finitely supported sequence t_1, t_2, ... of rationals.

    ``bkp=True`` marks a B-type vector; such vectors must have t_{2j} = 0.
    Instances are immutable.
    """

    __slots__ = ("_entries", "bkp")

    def __init__(self, entries=None, bkp: bool = False):
        table = {}
        if entries:
            for j, value in dict(entries).items():
                j = int(j)
                if j < 1:
                    raise ValueError(f"flow index must be >= 1, got {j}")
                value = rat(value)
                if value != 0:
                    table[j] = value
        if bkp and any(j % 2 == 0 for j in table):
            raise ValueError("BKP flow vector has a nonzero even entry")
        self._entries = table
        self.bkp = bkp

    @classmethod
    def from_list(cls, values, bkp: bool = False) -> "FlowVector":
        """Build from [t_1, t_2, ...]."""
        return cls({j + 1: v for j, v in enumerate(values)}, bkp=bkp)

    def get(self, j: int) -> Fraction:
        return self._entries.get(j, Fraction(0))

    def support(self):
        return sorted(self._entries)

    def max_index(self) -> int:
        return max(self._entries, default=0)

    def is_zero(self) -> bool:
        return not self._entries

    def scale(self, c) -> "FlowVector":
        c = rat(c)
        return FlowVector({j: c * v for j, v in self._entries.items()}, bkp=self.bkp)

    def odd_part(self) -> "FlowVector":
        """Restriction to odd indices, flagged as a BKP vector."""
        return FlowVector({j: v for j, v in self._entries.items() if j % 2 == 1},
                          bkp=True)

    def __add__(self, other: "FlowVector") -> "FlowVector":
        table = dict(self._entries)
        for j, v in other._entries.items():
            table[j] = table.get(j, Fraction(0)) + v
        return FlowVector(table, bkp=self.bkp and other.bkp)

    def __sub__(self, other: "FlowVector") -> "FlowVector":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FlowVector)
                and self._entries == other._entries and self.bkp == other.bkp)

    def __hash__(self):
        return hash((frozenset(self._entries.items()), self.bkp))

    def __repr__(self):
        items = ", ".join(f"t{j}={rat_str(v)}" for j, v in sorted(self._entries.items()))
        tag = ", bkp" if self.bkp else ""
        return f"FlowVector({items}{tag})"


def power_sums(x, order: int, odd_only: bool = False) -> FlowVector:
    """Normalized power sums t_j = (1/j) sum_a x_a^j for j = 1..order.

    With ``odd_only`` the even entries are dropped and the result carries the
    BKP parity flag.
    """
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    xs = [rat(a) for a in x]
    table = {}
    powers = list(xs)
    for j in range(1, order + 1):
        if not odd_only or j % 2 == 1:
            table[j] = Fraction(sum(powers), j)
        powers = [p * a for p, a in zip(powers, xs)]
    return FlowVector(table, bkp=odd_only)


def series_mul(a, b, order: int):
    """Coefficients of a(z)*b(z) mod z^{order+1}."""
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if bj != 0:
                out[i + j] += ai * bj
    return out


def series_exp(f, order: int):
    """Coefficients of exp(f(z)) mod z^{order+1}; requires f(0) = 0.

    Uses the recurrence g_n = (1/n) sum_{k=1}^{n} k f_k g_{n-k}.
    """
    if f and f[0] != 0:
        raise ValueError("series_exp needs vanishing constant term")
    g = [Fraction(0)] * (order + 1)
    g[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            fk = f[k] if k < len(f) else Fraction(0)
            if fk != 0:
                acc += k * fk * g[n - k]
        g[n] = acc / n
    return g


def complete_homogeneous(t: FlowVector, k_max: int):
    """h_0..h_{k_max} with sum h_k z^k = exp(sum_j t_j z^j); h_0 = 1."""
    f = [Fraction(0)] * (k_max + 1)
    for j in t.support():
        if j <= k_max:
            f[j] = t.get(j)
    return series_exp(f, k_max)


def q_polynomials(t_b: FlowVector, k_max: int):
    """q_0..q_{k_max} with sum q_k z^k = exp(2 sum_{j odd} t_j z^j); q_0 = 1."""
    if not t_b.bkp:
        raise ValueError("q_polynomials needs a BKP-flagged flow vector")
    return complete_homogeneous(t_b.scale(2), k_max)


def interpolate_poly(xs, ys) -> "Poly":
    """The unique polynomial of degree < len(xs) through the given points.

    Newton divided differences, expanded to monomial coefficients; exact.
    """
    xs = [rat(v) for v in xs]
    ys = [rat(v) for v in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    table = list(ys)
    divided = [table[0]] if n else []
    for k in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + k] - xs[i])
                 for i in range(n - k)]
        divided.append(table[0])
    poly = Poly([divided[-1]]) if n else Poly()
    for k in range(n - 2, -1, -1):
        poly = poly * Poly([-xs[k], 1]) + Poly([divided[k]])
    return poly


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficient index = degree; no trailing zeros are stored (the zero
    polynomial has an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __add__(self, other: "Poly") -> "Poly":
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(size)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = " + ".join(f"{rat_str(c)}*x^{k}" for k, c in enumerate(self.coeffs)
                           if c != 0)
        return f"Poly({terms})"

    @classmethod
    def monomial(cls, k: int) -> "Poly":
        return cls([0] * k + [1])


class RSeq:
    """A rational sequence r_j on a bounded integer window [lo, hi].

    Out-of-window access raises WindowError rather than returning zero:
    silent zeros would mask configuration mistakes.  Missing indices inside
    the window default to zero (the window is what is declared total).
    """

    __slots__ = ("lo", "hi", "_values")

    def __init__(self, values, lo: int, hi: int):
        if lo > hi:
            raise ValueError("empty r-sequence window")
        self.lo = lo
        self.hi = hi
        self._values = {}
        for j, v in dict(values).items():
            j = int(j)
            if not lo <= j <= hi:
                raise WindowError(f"r-sequence value at {j} outside window [{lo},{hi}]")
            self._values[j] = rat(v)

    @classmethod
    def from_function(cls, fn, lo: int, hi: int) -> "RSeq":
        return cls({j: fn(j) for j in range(lo, hi + 1)}, lo, hi)

    @classmethod
    def zero(cls, lo: int, hi: int) -> "RSeq":
        return cls({}, lo, hi)

    def __getitem__(self, j: int) -> Fraction:
        if not self.lo <= j <= self.hi:
            raise WindowError(f"r-sequence index {j} outside window [{self.lo},{self.hi}]")
        return self._values.get(j, Fraction(0))

    def product(self, lo: int, hi: int) -> Fraction:
        """prod_{j=lo}^{hi} r_j (empty product when lo > hi)."""
        acc = Fraction(1)
        for j in range(lo, hi + 1):
            acc *= self[j]
        return acc

    def covers(self, lo: int, hi: int) -> bool:
        return self.lo <= lo and hi <= self.hi

    def shift(self, n: int) -> "RSeq":
        """The reindexed sequence r'_j = r_{j+n} on the window [lo-n, hi-n].

        Shifting by the charge n maps the sector-n lattice point of the r,p
        family onto the sector-0 one.
        """
        return RSeq({j - n: v for j, v in self._values.items()},
                    self.lo - n, self.hi - n)

    def items(self):
        return sorted(self._values.items())

    def __repr__(self):
        return f"RSeq([{self.lo},{self.hi}], {dict(self.items())!r})"

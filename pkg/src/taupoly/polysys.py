"""Monic polynomial systems encoding triangular group elements.

A system holds the forward polynomials p_j(x), the dual polynomials p*_j(y),
and (when the element has matrix provenance) the coefficient window of the
group matrix g and its inverse on integer indices [-W, W].  The forward
coefficients are the N x N block of g, the dual coefficients the negative
block of g^{-1}.

Families provided:

* ``from_strict_upper`` - exponentiate an explicit strictly upper triangular
  window matrix (nilpotent, so the series terminates).
* ``family_rp`` - the two-parameter family with matrix entries
  A_{jk} = p_{k-j} r_{j+1} ... r_k (k > j), for which the whole window of
  g = e^A is available in closed form: g_{kj} = r_{k+1} ... r_j h_{j-k}(p).
* ``laguerre`` / ``double_laguerre`` - the classical specializations
  r_j = -j(z+j) and r_j = -(z+j)(z'+j) with p = (1, 0, 0, ...).
* ``neutral_family`` - the neutral (BKP) analog, driven by odd flows p_B.
  Skew symmetry of the underlying infinite matrix forces the r-sequence to
  extend to negative indices by the mirror rule r_{-u} = r_{u+1}; only the
  positive-index values are free parameters.
* ``interpolation_q`` - p_j(x) = prod_{i<=j} (x - a_i) with the classical
  normalization p_0 = 1 (no matrix provenance, H identically zero).

Neutral systems with matrix provenance follow the convention that the
constant coefficient row is halved: P_{0j} = h_{0j}/2, so p_0 = 1/2.  This is
exactly what the vacuum pair expectation values dictate and is validated
against the Fock oracle in the tests.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import WindowError
from .series import FlowVector, Poly, RSeq, complete_homogeneous, rat, rat_str


def _exp_strictly_upper(entries: dict, sign: int = 1) -> dict:
    """exp(sign*A) for a strictly upper triangular sparse window matrix.

    ``entries`` maps (j, k) with j < k to values; the result maps (j, k) with
    j <= k, diagonal ones omitted (they are all 1).
    """
    a = {key: sign * rat(v) for key, v in entries.items() if v != 0}
    total = dict(a)
    power = dict(a)
    m = 1
    while power:
        m += 1
        nxt: dict = {}
        for (i, k), v in power.items():
            for (k2, j), w in a.items():
                if k2 == k:
                    nxt[(i, j)] = nxt.get((i, j), Fraction(0)) + v * w
        power = {key: v for key, v in nxt.items() if v != 0}
        for key, v in power.items():
            total[key] = total.get(key, Fraction(0)) + v / _factorial(m)
    return {key: v for key, v in total.items() if v != 0}


_FACTORIALS = [Fraction(1)]


def _factorial(n: int) -> Fraction:
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


class WindowTable:
    """Upper triangular coefficient window on [-W, W].

    Entries default to the identity (1 on the diagonal, 0 below); accessing
    an index outside the window raises WindowError.
    """

    __slots__ = ("radius", "_entries")

    def __init__(self, radius: int, entries: dict):
        self.radius = radius
        self._entries = entries

    def get(self, k: int, j: int) -> Fraction:
        W = self.radius
        if not (-W <= k <= W and -W <= j <= W):
            raise WindowError(f"index ({k},{j}) outside window [-{W},{W}]")
        if k == j:
            return Fraction(1)
        if k > j:
            return Fraction(0)
        value = self._entries.get((k, j))
        if value is None:
            return Fraction(0)
        if isinstance(value, WindowError):
            raise value
        return value


def _closed_form_table(radius: int, r: RSeq, hcoeffs, mirror: bool,
                       null_negative: bool) -> WindowTable:
    """Window of g_{kj} = (prod_{u=k+1}^{j} r_u) h_{j-k} in closed form.

    With ``mirror`` the r-sequence is read as r_u for u >= 1 and r_{1-u} for
    u <= 0 (the neutral convention).  Entries whose r-range escapes the
    declared window are stored as WindowError and raised on access.
    """

    def r_at(u: int) -> Fraction:
        if mirror and u <= 0:
            return r[1 - u]
        return r[u]

    entries: dict = {}
    for k in range(-radius, radius + 1):
        if null_negative and k < 0:
            continue
        if null_negative and k == 0 and mirror:
            # neutral null conditions also empty the zero row
            continue
        acc = Fraction(1)
        for j in range(k + 1, radius + 1):
            if acc is not None:
                try:
                    acc = acc * r_at(j)
                except WindowError:
                    acc = None
            if acc is None:
                entries[(k, j)] = WindowError(
                    f"r-sequence window too small for coefficient ({k},{j})")
                continue
            h = hcoeffs[j - k] if j - k < len(hcoeffs) else Fraction(0)
            value = acc * h
            if value != 0:
                entries[(k, j)] = value
    return WindowTable(radius, entries)


class PolySystem:
    """A family {p_j}, {p*_j} of monic polynomials with optional matrix window.

    ``forward[j]`` is p_j, ``dual[j]`` is p*_j (KP systems only).  ``gtable``
    holds the group matrix window (for neutral systems: the h matrix before
    the halved zero row is applied) and ``ginv_table`` its inverse.
    """

    def __init__(self, degree: int, forward, dual=None, *, neutral: bool = False,
                 classical_v: bool = False, gtable: WindowTable | None = None,
                 ginv_table: WindowTable | None = None, descriptor: dict | None = None,
                 rp_params=None):
        self.degree = degree
        self.forward = tuple(forward)
        self.dual = tuple(dual) if dual is not None else None
        self.neutral = neutral
        self.classical_v = classical_v
        self.gtable = gtable
        self.ginv_table = ginv_table
        self.descriptor = descriptor or {}
        self.rp_params = rp_params
        self._validate()

    def _validate(self):
        for j, poly in enumerate(self.forward):
            if j == 0:
                expected = Fraction(1) if (not self.neutral or self.classical_v) \
                    else Fraction(1, 2)
                if poly.coeff(0) != expected or poly.degree > 0:
                    raise ValueError(f"p_0 must be the constant {expected}")
            elif poly.degree != j or poly.coeff(j) != 1:
                raise ValueError(f"p_{j} is not monic of degree {j}")
        if self.dual is not None:
            for j, poly in enumerate(self.dual):
                if poly.degree != j or poly.coeff(j) != 1:
                    raise ValueError(f"p*_{j} is not monic of degree {j}")

    @property
    def has_matrix(self) -> bool:
        return self.gtable is not None

    @property
    def window(self) -> int:
        return self.gtable.radius if self.gtable else 0

    def p(self, j: int) -> Poly:
        if not 0 <= j <= self.degree:
            raise WindowError(f"p_{j} outside degree window 0..{self.degree}")
        return self.forward[j]

    def pstar(self, j: int) -> Poly:
        if self.dual is None:
            raise WindowError("system has no dual polynomials")
        if not 0 <= j <= self.degree:
            raise WindowError(f"p*_{j} outside degree window 0..{self.degree}")
        return self.dual[j]

    def g(self, k: int, j: int) -> Fraction:
        """Group matrix entry g_{kj} (neutral systems: h_{kj})."""
        if self.gtable is None:
            raise WindowError("system has no matrix provenance")
        return self.gtable.get(k, j)

    def ginv(self, k: int, j: int) -> Fraction:
        if self.ginv_table is None:
            raise WindowError("system has no inverse matrix window")
        return self.ginv_table.get(k, j)

    def p_coeff(self, k: int, j: int) -> Fraction:
        """Forward coefficient P_{kj} (neutral convention halves the zero row)."""
        if self.gtable is not None:
            value = self.g(k, j)
            if self.neutral and not self.classical_v and k == 0:
                value = value / 2
            return value
        return self.p(j).coeff(k) if k >= 0 else Fraction(0)

    def dual_coeff(self, j: int, k: int) -> Fraction:
        """Dual coefficient P*_{jk} = g^{-1}_{-j-1,-k-1}."""
        return self.ginv(-j - 1, -k - 1)

    def to_json(self) -> dict:
        if not self.descriptor:
            raise ValueError("system has no JSON descriptor")
        return dict(self.descriptor)


def _forward_from_table(table: WindowTable, degree: int, halve_zero_row: bool):
    polys = []
    for j in range(degree + 1):
        coeffs = []
        for k in range(j + 1):
            c = table.get(k, j)
            if halve_zero_row and k == 0:
                c = c / 2
            coeffs.append(c)
        polys.append(Poly(coeffs))
    return polys


def _dual_from_table(ginv: WindowTable, degree: int):
    polys = []
    for j in range(degree + 1):
        coeffs = [ginv.get(-j - 1, -k - 1) for k in range(j + 1)]
        polys.append(Poly(coeffs))
    return polys


def from_strict_upper(entries, degree: int, window: int | None = None) -> PolySystem:
    """System of a KP group element g = e^A, A strictly upper triangular.

    ``entries`` maps (j, k) index pairs to rational values; all pairs must
    satisfy j < k and fit in the window (default radius degree + 1).
    """
    cleaned = {}
    for (j, k), v in dict(entries).items():
        j, k = int(j), int(k)
        if j >= k:
            raise ValueError(f"entry ({j},{k}) is not strictly upper triangular")
        cleaned[(j, k)] = rat(v)
    radius = window if window is not None else degree + 1
    span = max([abs(i) for key in cleaned for i in key], default=0)
    if span > radius:
        raise WindowError(f"matrix entries reach index {span} > window {radius}")
    if radius < degree + 1:
        raise WindowError(f"window {radius} too small for degree {degree}")
    g = _exp_strictly_upper(cleaned)
    ginv = _exp_strictly_upper(cleaned, sign=-1)
    gtab = WindowTable(radius, g)
    ginv_tab = WindowTable(radius, ginv)
    forward = _forward_from_table(gtab, degree, halve_zero_row=False)
    dual = _dual_from_table(ginv_tab, degree)
    descriptor = {"kind": "matrix", "window": radius,
                  "entries": sorted([j, k, rat_str(v)] for (j, k), v in cleaned.items())}
    return PolySystem(degree, forward, dual, gtable=gtab, ginv_table=ginv_tab,
                      descriptor=descriptor)


def rp_matrix_entries(r: RSeq, p: FlowVector, radius: int) -> dict:
    """Window entries A_{jk} = p_{k-j} r_{j+1} ... r_k of the r,p family."""
    entries = {}
    for j in range(-radius, radius + 1):
        for k in range(j + 1, radius + 1):
            if not r.covers(j + 1, k):
                continue
            value = p.get(k - j) * r.product(j + 1, k)
            if value != 0:
                entries[(j, k)] = value
    return entries


def family_rp(r: RSeq, p: FlowVector, degree: int,
              null_negative: bool = False) -> PolySystem:
    """The r,p family, with the whole coefficient window in closed form.

    ``null_negative`` zeroes the negative rows of the generating matrix,
    which kills the dual dressing and the G block without changing the
    forward polynomials.
    """
    if not r.covers(-degree, degree):
        raise WindowError(f"r-sequence window misses [-{degree},{degree}]")
    radius = degree + 1
    order = 2 * radius + 1
    hp = complete_homogeneous(p, order)
    hm = complete_homogeneous(p.scale(-1), order)
    gtab = _closed_form_table(radius, r, hp, mirror=False, null_negative=null_negative)
    ginv_tab = _closed_form_table(radius, r, hm, mirror=False,
                                  null_negative=null_negative)
    forward = _forward_from_table(gtab, degree, halve_zero_row=False)
    dual = _dual_from_table(ginv_tab, degree)
    descriptor = {"kind": "rp",
                  "r": {"lo": r.lo, "hi": r.hi,
                        "values": {str(j): rat_str(v) for j, v in r.items()}},
                  "p": [rat_str(p.get(j)) for j in range(1, p.max_index() + 1)],
                  "null_negative": null_negative}
    return PolySystem(degree, forward, dual, gtable=gtab, ginv_table=ginv_tab,
                      descriptor=descriptor, rp_params=(r, p))


def t0_flow() -> FlowVector:
    """The flow vector (1, 0, 0, ...)."""
    return FlowVector({1: 1})


def laguerre_rseq(z, lo: int, hi: int) -> RSeq:
    z = rat(z)
    return RSeq.from_function(lambda j: -j * (z + j), lo, hi)


def laguerre(z, degree: int, null_negative: bool = False) -> PolySystem:
    """Monic associated Laguerre system: r_j = -j(z+j), p = (1, 0, 0, ...)."""
    r = laguerre_rseq(z, -degree - 1, degree + 1)
    system = family_rp(r, t0_flow(), degree, null_negative=null_negative)
    system.descriptor = {"kind": "laguerre", "z": rat_str(rat(z))}
    return system


def double_laguerre_rseq(z, zp, lo: int, hi: int) -> RSeq:
    z, zp = rat(z), rat(zp)
    return RSeq.from_function(lambda j: -(z + j) * (zp + j), lo, hi)


def double_laguerre(z, zp, degree: int, null_negative: bool = False) -> PolySystem:
    """Double Laguerre system: r_j = -(z+j)(z'+j), p = (1, 0, 0, ...)."""
    r = double_laguerre_rseq(z, zp, -degree - 1, degree + 1)
    system = family_rp(r, t0_flow(), degree, null_negative=null_negative)
    system.descriptor = {"kind": "double_laguerre", "z": rat_str(rat(z)),
                         "zp": rat_str(rat(zp))}
    return system


def binomial_general(top: Fraction, bottom: Fraction) -> Fraction:
    """C(top, bottom) for rational top with top - bottom a nonnegative integer."""
    diff = top - bottom
    if diff.denominator != 1 or diff < 0:
        raise ValueError("binomial needs top - bottom a nonnegative integer")
    n = int(diff)
    num = Fraction(1)
    for i in range(n):
        num *= top - i
    return num / _factorial(n)


def falling_product(top: Fraction, steps: int) -> Fraction:
    """(top)(top - 1)...(top - steps + 1)."""
    acc = Fraction(1)
    for i in range(steps):
        acc *= top - i
    return acc


def laguerre_closed_form(z, degree: int):
    """Monic Laguerre coefficients (-1)^{j-k} C(j,k) (z+j)(z+j-1)...(z+k+1).

    Equivalently p_j = (-1)^j j! L_j^{(z)}; agrees with the r,p family
    construction coefficient by coefficient.
    """
    z = rat(z)
    polys = []
    for j in range(degree + 1):
        coeffs = []
        for k in range(j + 1):
            sign = -1 if (j - k) % 2 else 1
            coeffs.append(sign * binomial_general(Fraction(j), Fraction(k))
                          * falling_product(z + j, j - k))
        polys.append(Poly(coeffs))
    return polys


def double_laguerre_closed_form(z, zp, degree: int):
    """p_j coefficients (-1)^{j-k} (z+j)...(z+k+1) (z'+j)...(z'+k+1) / (j-k)!."""
    z, zp = rat(z), rat(zp)
    polys = []
    for j in range(degree + 1):
        coeffs = []
        for k in range(j + 1):
            sign = -1 if (j - k) % 2 else 1
            coeffs.append(sign * falling_product(z + j, j - k)
                          * falling_product(zp + j, j - k) / _factorial(j - k))
        polys.append(Poly(coeffs))
    return polys


def neutral_family(r: RSeq, p_b: FlowVector, degree: int,
                   null_negative: bool = False) -> PolySystem:
    """Neutral (BKP) r,p family.

    The h matrix window coincides with the KP closed form for the odd-flow
    vector p_B, with the r-sequence mirrored to negative indices by
    r_{-u} = r_{u+1} (forced by skew symmetry of the underlying matrix).
    Only r_1..r_degree are consumed from ``r``.
    """
    if not p_b.bkp:
        raise ValueError("neutral_family needs a BKP-flagged flow vector")
    if not r.covers(1, degree):
        raise WindowError(f"r-sequence window misses [1,{degree}]")
    radius = degree + 1
    order = 2 * radius + 1
    p_plain = FlowVector({j: p_b.get(j) for j in p_b.support()}, bkp=False)
    hp = complete_homogeneous(p_plain, order)
    gtab = _closed_form_table(radius, r, hp, mirror=True,
                              null_negative=null_negative)
    forward = _forward_from_table(gtab, degree, halve_zero_row=True)
    descriptor = {"kind": "neutral_rp",
                  "r": {"lo": r.lo, "hi": r.hi,
                        "values": {str(j): rat_str(v) for j, v in r.items()}},
                  "pB": [rat_str(p_b.get(j)) for j in range(1, p_b.max_index() + 1)],
                  "null_negative": null_negative}
    return PolySystem(degree, forward, neutral=True, gtable=gtab,
                      descriptor=descriptor, rp_params=(r, p_b))


def interpolation_q(roots, degree: int) -> PolySystem:
    """Interpolation system p_j(x) = prod_{i=1}^{j} (x - a_i), p_0 = 1.

    Classical normalization (no 1/2 constant, no matrix window); used with
    the classical Nimmo-style Pfaffian ratio.
    """
    a = [rat(v) for v in roots]
    if len(a) < degree:
        raise WindowError(f"need {degree} roots for degree {degree}, got {len(a)}")
    polys = [Poly([1])]
    for j in range(1, degree + 1):
        polys.append(polys[-1] * Poly([-a[j - 1], 1]))
    descriptor = {"kind": "interpolation", "roots": [rat_str(v) for v in a]}
    return PolySystem(degree, polys, neutral=True, classical_v=True,
                      descriptor=descriptor)


def trivial(degree: int) -> PolySystem:
    """The identity KP system: p_j = x^j, p*_j = y^j."""
    return from_strict_upper({}, degree)


def trivial_neutral(degree: int) -> PolySystem:
    """The identity neutral system: p_j = x^j for j >= 1, p_0 = 1/2."""
    return neutral_family(RSeq.zero(1, max(degree, 1)), FlowVector({}, bkp=True),
                          degree)


def system_from_json(descriptor: dict, degree: int) -> PolySystem:
    """Rebuild a system from its JSON descriptor at the requested degree."""
    kind = descriptor.get("kind")
    if kind == "matrix":
        entries = {(int(j), int(k)): rat(v) for j, k, v in descriptor["entries"]}
        window = int(descriptor.get("window", degree + 1))
        return from_strict_upper(entries, degree, window=max(window, degree + 1))
    if kind in ("rp", "neutral_rp"):
        rdesc = descriptor["r"]
        r = RSeq({int(j): rat(v) for j, v in rdesc.get("values", {}).items()},
                 int(rdesc["lo"]), int(rdesc["hi"]))
        null = bool(descriptor.get("null_negative", False))
        if kind == "rp":
            p = FlowVector.from_list([rat(v) for v in descriptor.get("p", [])])
            return family_rp(r, p, degree, null_negative=null)
        p_b = FlowVector.from_list([rat(v) for v in descriptor.get("pB", [])]).odd_part()
        return neutral_family(r, p_b, degree, null_negative=null)
    if kind == "laguerre":
        return laguerre(rat(descriptor["z"]), degree)
    if kind == "double_laguerre":
        return double_laguerre(rat(descriptor["z"]), rat(descriptor["zp"]), degree)
    if kind == "interpolation":
        return interpolation_q([rat(v) for v in descriptor["roots"]], degree)
    raise ValueError(f"unknown system kind: {kind!r}")

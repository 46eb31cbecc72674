"""Integer partitions, strict partitions, Frobenius coordinates, content products.

Partitions label the KP tau lattice, strict partitions the BKP one.  Strict
partitions are stored without zero parts; padding to even cardinality happens
only at the Pfaffian boundary (see ``StrictPartition.padded_even``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import RSeq


class Partition:
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError(f"partition parts must be positive: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {ps}")
        self.parts = ps

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("P",) + self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment other <= self."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def frobenius_rank(self) -> int:
        return sum(1 for i in range(1, len(self.parts) + 1) if self.part(i) >= i)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arms alpha_1 > ... > alpha_r >= 0, legs beta_1 > ... > beta_r >= 0.

    sign = (-1)^{sum beta_j}, the sign carried by the fermionic basis state.
    """

    arms: tuple
    legs: tuple
    sign: int

    @property
    def rank(self) -> int:
        return len(self.arms)


def frobenius(lam: Partition) -> FrobeniusCoords:
    """Frobenius coordinates alpha_i = lambda_i - i, beta_i = lambda'_i - i."""
    conj = lam.conjugate()
    r = lam.frobenius_rank()
    arms = tuple(lam.part(i) - i for i in range(1, r + 1))
    legs = tuple(conj.part(i) - i for i in range(1, r + 1))
    sign = -1 if sum(legs) % 2 else 1
    return FrobeniusCoords(arms, legs, sign)


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    """Inverse of :func:`frobenius`."""
    r = coords.rank
    rows = []
    for i in range(r):
        rows.append(coords.arms[i] + i + 1)
    # legs give the column lengths below the diagonal
    max_len = max((coords.legs[i] + i + 1 for i in range(r)), default=0)
    parts = []
    for i in range(1, max_len + 1):
        if i <= r:
            parts.append(rows[i - 1])
        else:
            parts.append(sum(1 for j in range(r) if coords.legs[j] + j + 1 >= i))
    return Partition(parts)


def hook_partition(arm: int, leg: int) -> Partition:
    """The hook (arm | leg) = (arm + 1, 1^leg)."""
    return Partition((arm + 1,) + (1,) * leg)


class StrictPartition:
    """Strictly decreasing tuple of positive integers (zero parts stripped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        if ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(p <= 0 for p in ps):
            raise ValueError(f"strict partition parts must be positive: {ps}")
        if any(ps[i] <= ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"strict partition parts must strictly decrease: {ps}")
        self.parts = ps

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, StrictPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(("S",) + self.parts)

    def __repr__(self):
        return f"StrictPartition{self.parts}"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded_even(self) -> tuple:
        """Parts padded with a single trailing zero to even cardinality 2m."""
        if len(self.parts) % 2:
            return self.parts + (0,)
        return self.parts

    def contains(self, other: "StrictPartition") -> bool:
        """Componentwise containment of shifted diagrams."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))


def content_product_kp(lam: Partition, rho: Partition, r: RSeq) -> Fraction:
    """prod_{i=1}^{l(lam)} prod_{j=rho_i+1}^{lam_i} r_{j-i} over skew cells.

    The index j - i is the cell content.  Empty product = 1.
    """
    if not lam.contains(rho):
        raise ValueError(f"{rho!r} is not contained in {lam!r}")
    acc = Fraction(1)
    for i in range(1, len(lam) + 1):
        for j in range(rho.part(i) + 1, lam.part(i) + 1):
            acc *= r[j - i]
    return acc


def content_product_bkp(alpha: StrictPartition, beta: StrictPartition, r: RSeq) -> Fraction:
    """prod_i prod_{j=beta_i+1}^{alpha_i} r_j over shifted skew diagram rows."""
    if not alpha.contains(beta):
        raise ValueError(f"{beta!r} is not contained in {alpha!r}")
    acc = Fraction(1)
    for i in range(1, len(alpha) + 1):
        acc *= r.product(beta.part(i) + 1, alpha.part(i))
    return acc


def subpartitions(lam: Partition):
    """All partitions contained in the diagram of lam, each exactly once."""

    def rec(i, cap):
        if i > len(lam):
            yield ()
            return
        for p in range(min(lam.part(i), cap), -1, -1):
            if p == 0:
                yield ()
            else:
                for tail in rec(i + 1, p):
                    yield (p,) + tail

    for parts in rec(1, lam.part(1) if len(lam) else 0):
        yield Partition(parts)


def strict_subpartitions(alpha: StrictPartition):
    """All strict partitions contained (componentwise) in alpha."""

    def rec(i, cap):
        if i > len(alpha):
            yield ()
            return
        for p in range(min(alpha.part(i), cap), -1, -1):
            if p == 0:
                yield ()
            else:
                for tail in rec(i + 1, p - 1):
                    yield (p,) + tail

    for parts in rec(1, alpha.part(1) if len(alpha) else 0):
        yield StrictPartition(parts)


def partitions_up_to(max_weight: int, max_length: int | None = None):
    """All partitions with weight <= max_weight (ordered by weight)."""
    for w in range(max_weight + 1):
        yield from partitions_of(w, max_length)


def partitions_of(weight: int, max_length: int | None = None):
    """All partitions of the given weight."""

    def rec(remaining, cap, length):
        if remaining == 0:
            yield ()
            return
        if max_length is not None and length >= max_length:
            return
        for p in range(min(cap, remaining), 0, -1):
            for tail in rec(remaining - p, p, length + 1):
                yield (p,) + tail

    for parts in rec(weight, weight if weight else 1, 0):
        yield Partition(parts)


def strict_partitions_up_to(max_weight: int):
    """All strict partitions with weight <= max_weight."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for p in range(min(cap, remaining), 0, -1):
            for tail in rec(remaining - p, p - 1):
                yield (p,) + tail

    for w in range(max_weight + 1):
        for parts in rec(w, w if w else 1):
            yield StrictPartition(parts)

"""Exact determinants and Pfaffians over the rationals, plus the structured
matrices (Vandermonde, Cauchy kernel, rational BKP kernel M) used by the
tau-function and correlator formulas.

The elimination kernels each come with an independent brute-force oracle
(permutation sum, perfect-matching sum) so every identity in the package can
be checked against a second, structurally different computation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DegeneratePointsError
from .series import rat


def determinant(rows) -> Fraction:
    """Exact determinant by fraction elimination with row pivoting."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    a = [[rat(v) for v in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            f = a[r][col] * inv
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return det


def determinant_permanent_oracle(rows) -> Fraction:
    """Signed permutation sum; factorial cost, for cross-checks only."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = perm_sign(perm)
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += sign * term
    return total


def perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


class SkewMatrix:
    """Dense skew-symmetric matrix; antisymmetry is enforced at construction."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        n = len(rows)
        a = [[rat(v) for v in r] for r in rows]
        if any(len(r) != n for r in a):
            raise ValueError("skew matrix must be square")
        for i in range(n):
            if a[i][i] != 0:
                raise ValueError("skew matrix needs a zero diagonal")
            for j in range(i + 1, n):
                if a[i][j] != -a[j][i]:
                    raise ValueError("matrix is not antisymmetric")
        self.n = n
        self.rows = a

    @classmethod
    def from_upper(cls, n: int, entry) -> "SkewMatrix":
        """Build from a function entry(i, j) giving the (i < j) entries."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rat(entry(i, j))
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def swap(self, i: int, j: int) -> "SkewMatrix":
        """Simultaneous row and column swap (flips the Pfaffian's sign)."""
        order = list(range(self.n))
        order[i], order[j] = order[j], order[i]
        return SkewMatrix([[self.rows[a][b] for b in order] for a in order])


def pfaffian(skew) -> Fraction:
    """Exact Pfaffian by skew elimination with pivot search and sign tracking.

    Accepts a SkewMatrix or a raw list of rows; odd dimension is an error.
    """
    if isinstance(skew, SkewMatrix):
        a = [row[:] for row in skew.rows]
    else:
        a = [row[:] for row in SkewMatrix(skew).rows]
    n = len(a)
    if n % 2:
        raise ValueError("Pfaffian needs even dimension")
    result = Fraction(1)
    for k in range(0, n, 2):
        pivot = next((p for p in range(k + 1, n) if a[k][p] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k + 1:
            for row in a:
                row[k + 1], row[pivot] = row[pivot], row[k + 1]
            a[k + 1], a[pivot] = a[pivot], a[k + 1]
            result = -result
        piv = a[k][k + 1]
        result *= piv
        # Schur-complement update of the trailing block
        for i in range(k + 2, n):
            for j in range(i + 1, n):
                a[i][j] += (a[k][j] * a[k + 1][i] - a[k][i] * a[k + 1][j]) / piv
                a[j][i] = -a[i][j]
    return result


def perfect_matchings(indices):
    """All perfect matchings of an even index list, as tuples of pairs."""
    items = list(indices)
    if not items:
        yield ()
        return
    first = items[0]
    for pos in range(1, len(items)):
        rest = items[1:pos] + items[pos + 1:]
        for tail in perfect_matchings(rest):
            yield ((first, items[pos]),) + tail


def matching_sign(matching) -> int:
    """Sign of the permutation (a_1 b_1 a_2 b_2 ...) built from the matching."""
    flat = [v for pair in matching for v in pair]
    ranks = {v: i for i, v in enumerate(sorted(flat))}
    return perm_sign(tuple(ranks[v] for v in flat))


def pfaffian_matching_oracle(skew, max_dim: int = 12) -> Fraction:
    """Pfaffian as the signed sum over perfect matchings (factorial-ish cost)."""
    if isinstance(skew, SkewMatrix):
        a = skew.rows
    else:
        a = SkewMatrix(skew).rows
    n = len(a)
    if n % 2:
        raise ValueError("Pfaffian needs even dimension")
    if n > max_dim:
        raise ValueError(f"matching oracle limited to dimension {max_dim}")
    total = Fraction(0)
    for matching in perfect_matchings(range(n)):
        term = Fraction(matching_sign(matching))
        for i, j in matching:
            term *= a[i][j]
            if term == 0:
                break
        total += term
    return total


def pfaffian_generic(entries, n, zero, one):
    """Matching-sum Pfaffian over an arbitrary commutative ring.

    ``entries(i, j)`` supplies the (i < j) entries; used by the Fock-space
    oracle whose scalars live in Q(i, sqrt(2)).
    """
    if n % 2:
        return zero
    total = zero
    for matching in perfect_matchings(range(n)):
        term = one if matching_sign(matching) == 1 else -one
        for i, j in matching:
            term = term * entries(i, j)
        total = total + term
    return total


def vandermonde_product(x) -> Fraction:
    """Delta(x) = prod_{j<k} (x_j - x_k)."""
    xs = [rat(v) for v in x]
    acc = Fraction(1)
    for j in range(len(xs)):
        for k in range(j + 1, len(xs)):
            acc *= xs[j] - xs[k]
    return acc


def cauchy_block(x, y):
    """The n x n kernel block with entries x_a y_b / (x_a - y_b)."""
    xs = [rat(v) for v in x]
    ys = [rat(v) for v in y]
    rows = []
    for a in xs:
        row = []
        for b in ys:
            if a == b:
                raise DegeneratePointsError(f"pole at x = y = {a}")
            row.append(a * b / (a - b))
        rows.append(row)
    return rows


def cauchy_determinant(x, y) -> Fraction:
    """det(1/(x_a - y_b)) via the closed product formula.

    Equals (-1)^{n(n-1)/2} Delta(x) Delta(y) / prod_{a,b} (x_a - y_b);
    the equality with the raw determinant is covered by tests.
    """
    xs = [rat(v) for v in x]
    ys = [rat(v) for v in y]
    n = len(xs)
    if len(ys) != n:
        raise ValueError("point lists must have equal length")
    if len(set(xs)) != n or len(set(ys)) != n:
        raise DegeneratePointsError("repeated coordinates")
    denom = Fraction(1)
    for a in xs:
        for b in ys:
            if a == b:
                raise DegeneratePointsError(f"pole at x = y = {a}")
            denom *= a - b
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * vandermonde_product(xs) * vandermonde_product(ys) / denom


def bkp_kernel_matrix(x) -> SkewMatrix:
    """The skew matrix M(x) with entries (x_a - x_b)/(x_a + x_b).

    Points must be pairwise distinct with no pair summing to zero.
    """
    xs = [rat(v) for v in x]
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if xs[a] == xs[b]:
                raise DegeneratePointsError(f"coincident points x = {xs[a]}")
            if xs[a] + xs[b] == 0:
                raise DegeneratePointsError(f"opposite points +-{xs[a]}")
    return SkewMatrix.from_upper(len(xs),
                                 lambda i, j: (xs[i] - xs[j]) / (xs[i] + xs[j]))


def bkp_kernel_pfaffian(x) -> Fraction:
    """Closed form Pf(M(x)) = prod_{a<b} (x_a - x_b)/(x_a + x_b)."""
    xs = [rat(v) for v in x]
    acc = Fraction(1)
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            if xs[a] + xs[b] == 0:
                raise DegeneratePointsError(f"opposite points +-{xs[a]}")
            acc *= (xs[a] - xs[b]) / (xs[a] + xs[b])
    return acc

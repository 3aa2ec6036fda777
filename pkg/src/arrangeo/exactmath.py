"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Vectors are tuples of fractions and matrices are
tuples of row tuples; nothing here ever produces a float.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, RankDeficiencyError, SingularError

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]
QMatrix = tuple  # tuple[QVector, ...]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Ints are accepted as a convenience; floats and decimal strings are not.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(entries: Iterable) -> QVector:
    return tuple(Fraction(e) if not isinstance(e, str) else parse_rational(e) for e in entries)


def matrix(rows: Iterable[Iterable]) -> QMatrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix")
    return out


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> QMatrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def transpose(M: Sequence[Sequence]) -> QMatrix:
    return tuple(zip(*M)) if M else ()


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> QVector:
    return tuple(c * a for a in u)


def neg(u: Sequence) -> QVector:
    return tuple(-a for a in u)


def matvec(M: Sequence[Sequence], v: Sequence) -> QVector:
    return tuple(dot(row, v) for row in M)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> QMatrix:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def mat_add(A, B) -> QMatrix:
    return tuple(add(r, s) for r, s in zip(A, B))


def mat_sub(A, B) -> QMatrix:
    return tuple(sub(r, s) for r, s in zip(A, B))


def _integer_rows(M: Sequence[Sequence]) -> tuple[list[list[int]], Fraction]:
    """Scale every row to integers; return the rows and the product of the scale factors."""
    rows = []
    factor = Fraction(1)
    for row in M:
        lcm = 1
        for x in row:
            lcm = lcm * Fraction(x).denominator // math.gcd(lcm, Fraction(x).denominator)
        rows.append([int(Fraction(x) * lcm) for x in row])
        factor *= lcm
    return rows, factor


def _bareiss(rows: list[list[int]], ncols: int | None = None) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination in place.

    Eliminates over the first ``ncols`` columns (all by default).  Returns the
    echelon rows, the pivot columns and the sign of the row permutation.
    """
    n = len(rows)
    width = len(rows[0]) if rows else 0
    ncols = width if ncols is None else ncols
    sign = 1
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == n:
            break
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, n):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, width):
                ri[j] = (piv * ri[j] - f * rows[r][j]) // prev
            ri[c] = 0
        # rows above r untouched; entries left of c in row r remain zero
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def det(M: Sequence[Sequence]) -> Fraction:
    """Determinant by Bareiss elimination on an integer-scaled copy."""
    n, cols = shape(M)
    if n != cols:
        raise DimensionError(f"determinant of a non-square {n}x{cols} matrix")
    if n == 0:
        return Fraction(1)
    rows, factor = _integer_rows(M)
    rows, pivots, sign = _bareiss(rows)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1]) / factor


def det_cofactor(M: Sequence[Sequence]) -> Fraction:
    """Laplace expansion along the first row; exponential, used as an oracle."""
    n, cols = shape(M)
    if n != cols:
        raise DimensionError(f"determinant of a non-square {n}x{cols} matrix")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * Fraction(M[0][j]) * det_cofactor(minor)
    return total


def rank(M: Sequence[Sequence]) -> int:
    if not M or not M[0]:
        return 0
    rows, _ = _integer_rows(M)
    _, pivots, _ = _bareiss(rows)
    return len(pivots)


def solve_unique(A: Sequence[Sequence], b: Sequence) -> QVector:
    """Solve ``A x = b`` for square invertible ``A``."""
    n, cols = shape(A)
    if n != cols:
        raise DimensionError(f"solve_unique needs a square matrix, got {n}x{cols}")
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    aug, _ = _integer_rows([tuple(row) + (bi,) for row, bi in zip(A, b)])
    aug, pivots, _ = _bareiss(aug, ncols=n)
    if len(pivots) < n:
        raise SingularError("singular system")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(aug[i][n])
        for j in range(i + 1, n):
            s -= aug[i][j] * x[j]
        x[i] = s / aug[i][i]
    return tuple(x)


def inverse(A: Sequence[Sequence]) -> QMatrix:
    n, cols = shape(A)
    if n != cols:
        raise DimensionError(f"inverse of a non-square {n}x{cols} matrix")
    columns = [solve_unique(A, e) for e in identity(n)]
    return transpose(columns)


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and its pivot columns."""
    R = [[Fraction(x) for x in row] for row in M]
    nrows, ncols = shape(R)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def normalize_integer(v: Sequence) -> QVector:
    """Scale to integer entries with content 1 and first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    if not any(v):
        return tuple(v)
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def kernel_basis(M: Sequence[Sequence], ncols: int | None = None) -> list[QVector]:
    """Basis of the right null space, each generator normalized.

    ``ncols`` is only needed when ``M`` has no rows.
    """
    if not M:
        n = ncols or 0
        return [normalize_integer(e) for e in identity(n)]
    R, pivots = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(normalize_integer(v))
    return basis


def projector_pair(basis: Sequence[Sequence]) -> tuple[QMatrix, QMatrix]:
    """Orthogonal projectors onto ``span(basis)`` and its orthogonal complement.

    With ``T`` the matrix whose rows are the basis vectors,
    ``P = T^t (T T^t)^{-1} T`` and ``Q = I - P``.  Only field operations are
    used, so the result is exact.
    """
    T = matrix(basis)
    if not T:
        raise RankDeficiencyError("empty basis")
    k, n = shape(T)
    if rank(T) < k:
        raise RankDeficiencyError("basis vectors are linearly dependent")
    Tt = transpose(T)
    gram_inv = inverse(matmul(T, Tt))
    P = matmul(matmul(Tt, gram_inv), T)
    Q = mat_sub(identity(n), P)
    return P, Q

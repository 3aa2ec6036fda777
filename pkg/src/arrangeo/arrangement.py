"""Hyperplane arrangements in general position.

Subscripts are 1-based everywhere they are visible (subsets, witnesses,
reports).  A subset is always a sorted tuple of subscripts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import exactmath as qm
from .errors import DimensionError, GeneralPositionError, GeometryError, SingularError


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{x : a . x = b}``."""

    a: tuple
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", qm.vector(self.a))
        b = qm.parse_rational(self.b) if isinstance(self.b, str) else Fraction(self.b)
        object.__setattr__(self, "b", b)
        if not any(self.a):
            raise GeometryError("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.a)

    def value(self, x) -> Fraction:
        """Signed residual ``a . x - b``."""
        return qm.dot(self.a, x) - self.b

    def scaled(self, c) -> "Hyperplane":
        return Hyperplane(qm.scale(Fraction(c), self.a), Fraction(c) * self.b)


@dataclass(frozen=True)
class Arrangement:
    m: int
    hyperplanes: tuple

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        if self.m < 1:
            raise DimensionError("dimension must be positive")
        for h in hs:
            if h.dim != self.m:
                raise DimensionError(f"hyperplane of dimension {h.dim} in an arrangement of dimension {self.m}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], offsets: Sequence) -> "Arrangement":
        hs = tuple(Hyperplane(tuple(a), b) for a, b in zip(rows, offsets))
        if not hs:
            raise DimensionError("cannot infer dimension of an empty arrangement")
        return cls(hs[0].dim, hs)

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> tuple:
        return tuple(h.a for h in self.hyperplanes)

    @property
    def offsets(self) -> tuple:
        return tuple(h.b for h in self.hyperplanes)

    def __getitem__(self, i: int) -> Hyperplane:
        """1-based access."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.hyperplanes[i - 1]

    def with_offsets(self, offsets: Sequence) -> "Arrangement":
        return Arrangement(self.m, tuple(Hyperplane(h.a, b) for h, b in zip(self.hyperplanes, offsets)))

    def appended(self, h: Hyperplane) -> "Arrangement":
        return Arrangement(self.m, self.hyperplanes + (h,))

    def without(self, i: int) -> "Arrangement":
        return Arrangement(self.m, self.hyperplanes[: i - 1] + self.hyperplanes[i:])

    def permuted(self, perm: Sequence[int]) -> "Arrangement":
        """Relabel so that old hyperplane ``i`` becomes new hyperplane ``perm[i-1]``."""
        new = [None] * self.n
        for i, j in enumerate(perm):
            new[j - 1] = self.hyperplanes[i]
        return Arrangement(self.m, tuple(new))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object = None
    reason: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Flat:
    """Intersection of the hyperplanes in ``subscripts``."""

    subscripts: tuple
    point: tuple
    directions: tuple

    @property
    def dim(self) -> int:
        return len(self.directions)


def _subsets(n: int, k: int):
    return combinations(range(1, n + 1), k)


def _consistent(rows, rhs) -> bool:
    return qm.rank(rows) == qm.rank([tuple(r) + (c,) for r, c in zip(rows, rhs)])


def validate_general_position(arr: Arrangement) -> Verdict:
    """Check both general-position conditions.

    Every r <= m normals must be independent and no m+1 hyperplanes may share
    a point.  Subsets are scanned by size and then lexicographically, so the
    witness is the smallest violating subset.
    """
    n, m = arr.n, arr.m
    for r in range(1, min(n, m + 1) + 1):
        for S in _subsets(n, r):
            rows = [arr[i].a for i in S]
            if r <= m:
                if qm.rank(rows) < r:
                    return Verdict(False, S, f"normals of {S} are linearly dependent")
            elif _consistent(rows, [arr[i].b for i in S]):
                return Verdict(False, S, f"hyperplanes {S} share a common point")
    return Verdict(True)


def require_valid(arr: Arrangement) -> None:
    verdict = validate_general_position(arr)
    if not verdict:
        raise GeneralPositionError(verdict.reason, verdict.witness)


def flat(arr: Arrangement, S: Sequence[int]) -> Flat:
    S = tuple(sorted(S))
    rows = [arr[i].a for i in S]
    rhs = [arr[i].b for i in S]
    directions = tuple(qm.kernel_basis(rows, ncols=arr.m))
    if len(directions) != arr.m - len(S):
        raise GeneralPositionError(f"hyperplanes {S} are not independent", S)
    point = _particular_solution(rows, rhs, arr.m)
    return Flat(S, point, directions)


def _particular_solution(rows, rhs, m):
    if not rows:
        return tuple(Fraction(0) for _ in range(m))
    R, pivots = qm.rref([tuple(r) + (c,) for r, c in zip(rows, rhs)])
    if m in pivots:
        raise GeneralPositionError("inconsistent system")
    x = [Fraction(0)] * m
    for row, p in zip(R, pivots):
        x[p] = row[m]
    return tuple(x)


def skeleton(arr: Arrangement, k: int) -> list[Flat]:
    """All flats cut out by exactly ``k`` hyperplanes, in lexicographic order."""
    if not 1 <= k <= arr.m:
        raise ValueError(f"k must lie in 1..{arr.m}")
    require_valid(arr)
    return [flat(arr, S) for S in _subsets(arr.n, k)]


def vertex_point(arr: Arrangement, S: Sequence[int]) -> tuple:
    S = tuple(sorted(S))
    if len(S) != arr.m:
        raise ValueError(f"a vertex needs {arr.m} subscripts, got {len(S)}")
    try:
        return qm.solve_unique([arr[i].a for i in S], [arr[i].b for i in S])
    except SingularError as exc:
        raise GeneralPositionError(f"hyperplanes {S} do not meet in a point", S) from exc


def vertices(arr: Arrangement) -> dict:
    """Map every m-subset to its vertex."""
    return {S: vertex_point(arr, S) for S in _subsets(arr.n, arr.m)}


def _line_parameter(p, base, direction) -> Fraction:
    d = qm.sub(p, base)
    # exact since p - base is a multiple of direction
    j = next(i for i, x in enumerate(direction) if x != 0)
    return d[j] / direction[j]


def central_of_three(p, q, r) -> int:
    """Index (0, 1 or 2) of the point lying between the other two."""
    pts = [qm.vector(p), qm.vector(q), qm.vector(r)]
    if pts[0] == pts[1] or pts[1] == pts[2] or pts[0] == pts[2]:
        raise GeometryError("points must be pairwise distinct")
    direction = qm.sub(pts[1], pts[0])
    other = qm.sub(pts[2], pts[0])
    if qm.rank([direction, other]) != 1:
        raise GeometryError("points are not collinear")
    t = [_line_parameter(x, pts[0], direction) for x in pts]
    order = sorted(range(3), key=lambda i: t[i])
    return order[1]


def line_direction(arr: Arrangement, S: Sequence[int]) -> tuple:
    """Normalized direction of the line cut out by an (m-1)-subset."""
    S = tuple(sorted(S))
    if len(S) != arr.m - 1:
        raise ValueError(f"a line needs {arr.m - 1} subscripts, got {len(S)}")
    basis = qm.kernel_basis([arr[i].a for i in S], ncols=arr.m)
    if len(basis) != 1:
        raise GeneralPositionError(f"hyperplanes {S} are not independent", S)
    return basis[0]


def order_on_line(arr: Arrangement, S: Sequence[int]) -> list[tuple]:
    """Vertices on the line ``L_S`` (as m-subsets) sorted along its normalized direction."""
    S = tuple(sorted(S))
    direction = line_direction(arr, S)
    keyed = []
    for j in range(1, arr.n + 1):
        if j in S:
            continue
        V = tuple(sorted(S + (j,)))
        keyed.append((qm.dot(vertex_point(arr, V), direction), V))
    keyed.sort()
    for (t1, V1), (t2, V2) in zip(keyed, keyed[1:]):
        if t1 == t2:
            raise GeneralPositionError(f"vertices {V1} and {V2} coincide", tuple(sorted(set(V1) | set(V2))))
    return [V for _, V in keyed]

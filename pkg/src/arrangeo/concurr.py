"""The concurrency arrangement of an arrangement.

For every (m+1)-subset ``S`` of hyperplanes there is a hyperplane ``M_S``
through the origin of Q^n in the offset variables ``y``: the determinant of
the coefficient rows of ``S`` bordered by the column ``y_S``.  The offsets
``b`` of the arrangement lie in one open cone of these hyperplanes, and
arrangements whose offsets share a cone are isomorphic with identical
subscripts.  The coefficient matrix is taken as loaded; it is never
rescaled.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import exactmath as qm
from .arrangement import Arrangement, require_valid, vertex_point
from .errors import DegeneracyError, GeneralPositionError, GeometryError
from .fourier_motzkin import feasible
from .parallel import pmap


def concurrency_normal(rows: Sequence[Sequence], S: Sequence[int]) -> tuple:
    """Cofactor expansion of the bordered determinant along its last column."""
    rows = [qm.vector(r) for r in rows]
    n = len(rows)
    S = tuple(S)
    m = len(rows[0])
    if len(S) != m + 1:
        raise ValueError(f"a concurrency hyperplane needs {m + 1} subscripts")
    normal = [Fraction(0)] * n
    for k, i in enumerate(S):
        minor = [rows[j - 1] for j in S if j != i]
        d = qm.det(minor)
        if d == 0:
            raise GeneralPositionError(f"normals of {tuple(j for j in S if j != i)} are dependent",
                                       tuple(j for j in S if j != i))
        normal[i - 1] = (-1) ** (k + m) * d
    return tuple(normal)


def concurrency_normals(arr: Arrangement) -> dict:
    return {S: concurrency_normal(arr.normals, S) for S in combinations(range(1, arr.n + 1), arr.m + 1)}


@dataclass(frozen=True)
class ConeSignature:
    signs: dict
    b: tuple

    def lines(self) -> list[str]:
        return [",".join(map(str, S)) + ":" + ("+" if s > 0 else "-") for S, s in sorted(self.signs.items())]

    def differs_on(self, other: "ConeSignature") -> list:
        return sorted(S for S in self.signs if self.signs[S] != other.signs[S])


def cone_signature(arr: Arrangement) -> ConeSignature:
    normals = concurrency_normals(arr)
    b = arr.offsets
    signs = {}
    for S, nrm in normals.items():
        v = qm.dot(nrm, b)
        if v == 0:
            raise DegeneracyError(f"hyperplanes {S} are concurrent; offsets lie on a concurrency hyperplane")
        signs[S] = 1 if v > 0 else -1
    return ConeSignature(signs, tuple(b))


def simplex_polyhedralities(arr: Arrangement) -> list:
    """(m+1)-subsets whose simplex is a region of the whole arrangement."""
    require_valid(arr)
    out = []
    for S in combinations(range(1, arr.n + 1), arr.m + 1):
        verts = [vertex_point(arr, V) for V in combinations(S, arr.m)]
        if all(_one_side(arr[j], verts) for j in range(1, arr.n + 1) if j not in S):
            out.append(S)
    return out


def _one_side(h, points) -> bool:
    vals = [h.value(p) for p in points]
    return all(v > 0 for v in vals) or all(v < 0 for v in vals)


def _flipped_rows(normals: dict, signs: dict, S) -> list:
    return [(qm.scale(-signs[T] if T == S else signs[T], nrm), Fraction(0), True) for T, nrm in normals.items()]


def _in_cone(rows, y) -> bool:
    return all(qm.dot(a, y) > 0 for a, _, _ in rows)


def _reflect(b, nrm) -> tuple:
    return qm.sub(b, qm.scale(2 * qm.dot(nrm, b) / qm.dot(nrm, nrm), nrm))


def _adjacent_witness(arr: Arrangement, S, normals=None, sig=None):
    normals = concurrency_normals(arr) if normals is None else normals
    sig = cone_signature(arr) if sig is None else sig
    rows = _flipped_rows(normals, sig.signs, S)
    guess = _reflect(sig.b, normals[S])
    if _in_cone(rows, guess):
        return guess
    return feasible(rows, arr.n)


def cone_facets(arr: Arrangement) -> list:
    """Concurrency hyperplanes bounding the cone of the offsets in codimension one.

    ``M_S`` is a facet iff flipping its sign alone leaves a nonempty open cone.
    """
    require_valid(arr)
    normals = concurrency_normals(arr)
    sig = cone_signature(arr)
    found = pmap(partial(_adjacent_witness, arr, normals=normals, sig=sig), list(normals))
    return [S for S, w in zip(normals, found) if w is not None]


def cross_facet(arr: Arrangement, S: Sequence[int], max_halvings: int = 32) -> Arrangement:
    """Move the offsets across the facet ``M_S`` into the adjacent cone.

    Tries the mirror image of ``b`` in ``M_S`` first, then pulls the overshoot
    back towards the facet, and finally falls back to an exact witness of the
    adjacent cone.
    """
    S = tuple(sorted(S))
    normals = concurrency_normals(arr)
    if S not in normals:
        raise GeometryError(f"{S} is not an (m+1)-subset")
    sig = cone_signature(arr)
    rows = _flipped_rows(normals, sig.signs, S)
    nrm = normals[S]
    b = sig.b
    step = qm.dot(nrm, b) / qm.dot(nrm, nrm)
    overshoot = Fraction(1)
    for _ in range(max_halvings):
        guess = qm.sub(b, qm.scale((1 + overshoot) * step, nrm))
        if _in_cone(rows, guess):
            return arr.with_offsets(guess)
        overshoot /= 2
    w = feasible(rows, arr.n)
    if w is None:
        raise GeometryError(f"{S} is not a facet of the cone of the offsets")
    return arr.with_offsets(w)


def predicted_swaps(arr: Arrangement, S: Sequence[int]) -> dict:
    """For each line inside ``S``, the two vertices that trade places."""
    S = tuple(sorted(S))
    out = {}
    for A in combinations(S, arr.m - 1):
        j, k = (i for i in S if i not in A)
        out[A] = (tuple(sorted(A + (j,))), tuple(sorted(A + (k,))))
    return out


def region_count_bound(n: int, m: int) -> int:
    """Upper bound on the number of cones of the concurrency arrangement."""
    from math import comb

    h = comb(n, m + 1)
    return sum(comb(h, i) for i in range(n + 1)) - (comb(h - 1, n) if h >= 1 else 0)

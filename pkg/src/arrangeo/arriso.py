"""Isomorphism of arrangements via preservation of central vertices.

A betweenness record says: on the line cut out by the (m-1)-subset ``S``,
among three of its vertices (each an m-subset containing ``S``) the vertex
``middle`` lies between the other two.  Two arrangements are isomorphic
under a relabeling of the hyperplanes exactly when the relabeling carries
records to records.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .arrangement import Arrangement, Verdict, order_on_line, require_valid
from .errors import CapacityError, DimensionError
from .normsys import extract_normal_system, find_cpb

MAX_SEARCH = 9


def betweenness_table(arr: Arrangement) -> dict:
    """Map ``(S, frozenset({A, B, C}))`` to the middle vertex ``B``."""
    require_valid(arr)
    table = {}
    if arr.n < arr.m + 2:
        return table
    for S in combinations(range(1, arr.n + 1), arr.m - 1):
        order = order_on_line(arr, S)
        for a, b, c in combinations(range(len(order)), 3):
            table[(S, frozenset((order[a], order[b], order[c])))] = order[b]
    return table


def _relabel(subset, phi) -> tuple:
    return tuple(sorted(phi[i - 1] for i in subset))


def _check(t1: dict, t2: dict, phi: Sequence[int]) -> Verdict:
    for (S, trio), middle in t1.items():
        key = (_relabel(S, phi), frozenset(_relabel(V, phi) for V in trio))
        if t2.get(key) != _relabel(middle, phi):
            return Verdict(False, (S, tuple(sorted(trio)), middle), "central vertex not preserved")
    return Verdict(True)


def is_isomorphism(arr1: Arrangement, arr2: Arrangement, phi: Sequence[int]) -> Verdict:
    """``phi[i-1]`` is the image of hyperplane ``i``."""
    if arr1.n != arr2.n or arr1.m != arr2.m:
        raise DimensionError("arrangements differ in size or dimension")
    phi = tuple(phi)
    if sorted(phi) != list(range(1, arr1.n + 1)):
        raise ValueError(f"not a permutation of 1..{arr1.n}: {phi}")
    return _check(betweenness_table(arr1), betweenness_table(arr2), phi)


def line_orders_agree(arr1: Arrangement, arr2: Arrangement, phi: Sequence[int]) -> bool:
    """Compare full vertex sequences on every line, up to reversal."""
    for S in combinations(range(1, arr1.n + 1), arr1.m - 1):
        mapped = [_relabel(V, phi) for V in order_on_line(arr1, S)]
        target = order_on_line(arr2, _relabel(S, phi))
        if mapped != target and mapped[::-1] != target:
            return False
    return True


def _fingerprints(table: dict, n: int) -> list:
    # how often each hyperplane makes the central vertex, and how often it sits on the line
    middle = [0] * n
    on_line = [0] * n
    for (S, _), mid in table.items():
        for i in mid:
            if i not in S:
                middle[i - 1] += 1
        for i in S:
            on_line[i - 1] += 1
    return list(zip(middle, on_line))


def find_isomorphism(arr1: Arrangement, arr2: Arrangement, limit: int = MAX_SEARCH):
    """Some relabeling that is an isomorphism, or ``None``."""
    if arr1.n != arr2.n or arr1.m != arr2.m:
        return None
    n = arr1.n
    if n > limit:
        raise CapacityError(f"isomorphism search is limited to {limit} hyperplanes")
    t1, t2 = betweenness_table(arr1), betweenness_table(arr2)
    if len(t1) != len(t2):
        return None
    f1, f2 = _fingerprints(t1, n), _fingerprints(t2, n)
    if sorted(f1) != sorted(f2):
        return None
    pending = {i: [] for i in range(1, n + 1)}
    for key, mid in t1.items():
        S, trio = key
        support = set(S).union(*trio)
        pending[max(support)].append((key, mid))

    phi = [0] * n
    used = set()

    def ok(i):
        for (S, trio), mid in pending[i]:
            key = (_relabel(S, phi), frozenset(_relabel(V, phi) for V in trio))
            if t2.get(key) != _relabel(mid, phi):
                return False
        return True

    def extend(i):
        if i > n:
            return True
        for j in range(1, n + 1):
            if j in used or f1[i - 1] != f2[j - 1]:
                continue
            phi[i - 1] = j
            if ok(i):
                used.add(j)
                if extend(i + 1):
                    return True
                used.discard(j)
            phi[i - 1] = 0
        return False

    return tuple(phi) if extend(1) else None


def translation_equivalent(arr1: Arrangement, arr2: Arrangement) -> Verdict:
    """Isomorphic after translating hyperplanes iff the normal systems admit a CPB."""
    if arr1.n != arr2.n or arr1.m != arr2.m:
        return Verdict(False, None, "size mismatch")
    delta = find_cpb(extract_normal_system(arr1), extract_normal_system(arr2))
    if delta is None:
        return Verdict(False, None, "normal systems are not isomorphic")
    return Verdict(True, delta)


def central_by_sign_flip(normals: Sequence[Sequence], far) -> int:
    """Index (0, 1 or 2) of the line whose coefficient changes sign.

    The far normal is written over each pair of the three planar normals;
    every line takes part in two of these decompositions, and for exactly
    one line the two coefficients have opposite signs.  When the far line is
    at infinity for the other three, this line carries the central point.
    """
    from . import exactmath as qm

    normals = [qm.vector(v) for v in normals]
    if len(normals) != 3 or any(len(v) != 2 for v in normals):
        raise DimensionError("need three normals in the plane")
    far = qm.vector(far)
    signs = {}
    for i, j in combinations(range(3), 2):
        M = qm.transpose([normals[i], normals[j]])
        x, y = qm.solve_unique(M, far)
        if x == 0 or y == 0:
            raise ValueError("far normal is parallel to one of the lines")
        signs.setdefault(i, []).append(x > 0)
        signs.setdefault(j, []).append(y > 0)
    flipped = [k for k in range(3) if signs[k][0] != signs[k][1]]
    if len(flipped) != 1:
        raise ValueError("normals are not in general position")
    return flipped[0]

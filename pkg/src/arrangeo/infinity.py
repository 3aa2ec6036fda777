"""Hyperplanes at infinity and infinity arrangements."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import exactmath as qm
from .arrangement import Arrangement, Hyperplane, require_valid, vertices
from .errors import GeneralPositionError
from .normsys import is_maximally_independent


def add_at_infinity(arr: Arrangement, direction: Sequence, margin=1) -> Hyperplane:
    """Hyperplane ``direction . x = max_v (direction . v) + margin`` over all vertices."""
    d = qm.vector(direction)
    if not any(d):
        raise GeneralPositionError("direction must be nonzero")
    verdict = is_maximally_independent(arr.normals + (d,), arr.m)
    if not verdict:
        raise GeneralPositionError(f"direction is not generic: {verdict.reason}", verdict.witness)
    values = [qm.dot(d, v) for v in vertices(arr).values()]
    top = max(values) if values else Fraction(0)
    h = Hyperplane(d, top + Fraction(margin))
    require_valid(arr.appended(h))
    return h


def is_at_infinity(arr: Arrangement, h: Hyperplane) -> bool:
    """All vertices of ``arr`` on one closed side of ``h``."""
    vals = [h.value(v) for v in vertices(arr).values()]
    return all(v <= 0 for v in vals) or all(v >= 0 for v in vals)


def chart(h: Hyperplane):
    """Base point and direction basis of ``h``.

    The base point solves ``a . x = b`` using only the first nonzero
    coordinate of ``a``; directions are the normalized kernel of ``a``.
    """
    j = next(i for i, x in enumerate(h.a) if x != 0)
    base = tuple(h.b / h.a[j] if i == j else Fraction(0) for i in range(h.dim))
    return base, tuple(qm.kernel_basis([h.a]))


def induced_arrangement(arr: Arrangement, h: Hyperplane, base=None, directions=None) -> Arrangement:
    """Traces ``h ∩ H_i`` written in coordinates of a chart of ``h``."""
    if arr.m < 2:
        raise ValueError("need dimension at least two")
    if base is None or directions is None:
        base, directions = chart(h)
    base = qm.vector(base)
    directions = tuple(qm.vector(d) for d in directions)
    if h.value(base) != 0 or any(qm.dot(h.a, d) != 0 for d in directions) or qm.rank(directions) != arr.m - 1:
        raise ValueError("not a chart of the hyperplane")
    traces = []
    for g in arr.hyperplanes:
        a = tuple(qm.dot(g.a, d) for d in directions)
        if not any(a):
            raise GeneralPositionError("a hyperplane is parallel to the hyperplane at infinity")
        traces.append(Hyperplane(a, g.b - qm.dot(g.a, base)))
    induced = Arrangement(arr.m - 1, tuple(traces))
    require_valid(induced)
    return induced


def is_infinity_arrangement(arr: Arrangement):
    """A build order (1-based, first to last) or ``None``.

    Searches from the back: the last hyperplane must be at infinity for all
    the others, and what remains must again be buildable.
    """
    n = arr.n

    @lru_cache(maxsize=None)
    def order(remaining: frozenset):
        if len(remaining) <= 1:
            return tuple(sorted(remaining))
        for last in sorted(remaining):
            rest = sorted(remaining - {last})
            sub = Arrangement(arr.m, tuple(arr[i] for i in rest))
            if is_at_infinity(sub, arr[last]):
                prefix = order(frozenset(rest))
                if prefix is not None:
                    return prefix + (last,)
        return None

    return order(frozenset(range(1, n + 1)))


def is_build_order(arr: Arrangement, sigma: Sequence[int]) -> bool:
    for l in range(1, len(sigma)):
        sub = Arrangement(arr.m, tuple(arr[i] for i in sigma[:l]))
        if not is_at_infinity(sub, arr[sigma[l]]):
            return False
    return True


def build_by_infinity(base: Arrangement, directions: Sequence[Sequence]) -> Arrangement:
    arr = base
    for d in directions:
        arr = arr.appended(add_at_infinity(arr, d))
    return arr


def brute_force_infinity_orders(arr: Arrangement) -> list:
    from itertools import permutations

    return [p for p in permutations(range(1, arr.n + 1)) if is_build_order(arr, p)]

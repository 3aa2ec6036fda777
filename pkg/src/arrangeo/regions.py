"""Open regions of an arrangement, named by sign vectors.

The sign vector ``s`` stands for ``{x : s_i (a_i . x - b_i) > 0 for all i}``.
Signs are stored as +1 / -1 and printed as ``+`` / ``-``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial as partial_fn
from fractions import Fraction
from math import comb
from typing import Sequence

from . import exactmath as qm
from .arrangement import Arrangement, require_valid
from .errors import CapacityError, GeometryError
from .fourier_motzkin import feasible
from .parallel import pmap

MAX_HYPERPLANES = 20


def sign_string(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def parse_signs(text: str) -> tuple:
    if any(c not in "+-" for c in text):
        raise ValueError(f"sign vector must use only '+' and '-': {text!r}")
    return tuple(1 if c == "+" else -1 for c in text)


@dataclass(frozen=True)
class Region:
    signs: tuple
    nonempty: bool
    bounded: bool
    witness: tuple | None = None

    @property
    def label(self) -> str:
        return sign_string(self.signs)


def feasible_strict(rows):
    """Witness for ``{x : sign (a . x - b) > 0}`` over all rows, or ``None``.

    Each row is ``(a, b, sign)`` with ``sign`` in {+1, -1}.
    """
    rows = list(rows)
    if not rows:
        return None
    dim = len(rows[0][0])
    cons = []
    for a, b, s in rows:
        if len(a) != dim:
            raise ValueError("rows must have equal dimension")
        s = 1 if s > 0 else -1
        cons.append((tuple(s * Fraction(x) for x in a), s * Fraction(b), True))
    return feasible(cons, dim)


def _rows(arr: Arrangement, signs):
    return [(h.a, h.b, s) for h, s in zip(arr.hyperplanes, signs)]


def region_witness(arr: Arrangement, signs: Sequence[int]):
    return feasible_strict(_rows(arr, signs))


def region_bounded(arr: Arrangement, signs: Sequence[int], check_nonempty: bool = True) -> bool:
    """Bounded iff the recession cone ``{d : s_i a_i . d >= 0}`` is ``{0}``."""
    if check_nonempty and region_witness(arr, signs) is None:
        raise GeometryError(f"region {sign_string(signs)} is empty")
    if qm.rank(arr.normals) < arr.m:
        return False  # a common direction of all hyperplanes is a recession direction
    cone = [(qm.scale(s, h.a), Fraction(0), False) for h, s in zip(arr.hyperplanes, signs)]
    # with spanning normals a nonzero cone direction makes the summed row positive
    total = [Fraction(0)] * arr.m
    for a, _, _ in cone:
        total = qm.add(total, a)
    cone.append((tuple(total), Fraction(1), False))
    return feasible(cone, arr.m) is None


def enumerate_regions(arr: Arrangement, limit: int = MAX_HYPERPLANES) -> list[Region]:
    """All nonempty open regions, lexicographic in their sign vectors with + before -.

    Hyperplanes are inserted one at a time and only surviving partial sign
    vectors are extended, which visits about twice as many candidates as
    there are regions instead of all ``2**n``.
    """
    if arr.n > limit:
        raise CapacityError(f"{arr.n} hyperplanes exceeds the enumeration budget of {limit}")
    require_valid(arr)
    partial = {(): None}
    for k in range(arr.n):
        head = Arrangement(arr.m, arr.hyperplanes[: k + 1])
        grown = {}
        for p in partial:
            for s in (1, -1):
                w = region_witness(head, p + (s,))
                if w is not None:
                    grown[p + (s,)] = w
        partial = grown
    ordered = sorted(partial, key=lambda p: tuple(0 if s > 0 else 1 for s in p))
    bounded = pmap(partial_fn(region_bounded, arr, check_nonempty=False), ordered)
    return [Region(signs, True, b, partial[signs]) for signs, b in zip(ordered, bounded)]


def count_formula(n: int, m: int) -> tuple[int, int, int]:
    """Closed-form (total, bounded, unbounded) region counts for generic arrangements."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    total = sum(comb(n, i) for i in range(m + 1))
    bounded = comb(n - 1, m) if n >= 1 else 0
    unbounded = sum(comb(n, i) for i in range(m)) + (comb(n - 1, m - 1) if n >= 1 else 0)
    return total, bounded, unbounded


def region_counts(regions: Sequence[Region]) -> tuple[int, int, int]:
    bounded = sum(1 for r in regions if r.bounded)
    return len(regions), bounded, len(regions) - bounded

"""Seeded random instances for tests and experiment scripts."""
from __future__ import annotations

import random
from fractions import Fraction

from .arrangement import Arrangement, Hyperplane, validate_general_position
from .errors import GeneralPositionError
from .normsys import NormalSystem, is_maximally_independent


def random_vector(rng: random.Random, m: int, lo: int = -9, hi: int = 9) -> tuple:
    while True:
        v = tuple(Fraction(rng.randint(lo, hi)) for _ in range(m))
        if any(v):
            return v


def random_normals(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9, tries: int = 1000) -> tuple:
    for _ in range(tries):
        vs = tuple(random_vector(rng, m, lo, hi) for _ in range(n))
        if is_maximally_independent(vs, m):
            return vs
    raise GeneralPositionError(f"no generic normals found for n={n}, m={m}")


def random_offsets_for(rng: random.Random, normals, lo: int = -9, hi: int = 9, tries: int = 1000) -> Arrangement:
    """Valid arrangement with the given normals and random integer offsets."""
    m = len(normals[0])
    for _ in range(tries):
        arr = Arrangement(m, tuple(Hyperplane(a, rng.randint(lo, hi)) for a in normals))
        if validate_general_position(arr):
            return arr
    raise GeneralPositionError("no generic offsets found")


def random_arrangement(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9, tries: int = 1000) -> Arrangement:
    for _ in range(tries):
        try:
            return random_offsets_for(rng, random_normals(rng, n, m, lo, hi), lo, hi, tries=50)
        except GeneralPositionError:
            continue
    raise GeneralPositionError(f"no generic arrangement found for n={n}, m={m}")


def random_normal_system(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9) -> NormalSystem:
    return NormalSystem(m, random_normals(rng, n, m, lo, hi))


def random_map(rng: random.Random, n: int):
    from .normsys import AntipodalMap

    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return AntipodalMap(tuple(perm), tuple(rng.random() < 0.5 for _ in range(n)))


def relabel_normal_system(ns: NormalSystem, delta):
    """Move line ``i`` to position ``delta.perm[i-1]``.

    Returns the new system and the map that really carries ``ns`` onto it.
    Representatives are renormalized, so the flips of ``delta`` cancel out and
    the returned map has none.
    """
    from .normsys import AntipodalMap

    reps = [None] * ns.n
    for i, v in enumerate(ns.reps, start=1):
        j, s = delta((i, 1))
        reps[j - 1] = v if s > 0 else tuple(-x for x in v)
    return NormalSystem(ns.m, tuple(reps)), AntipodalMap(delta.perm, (False,) * ns.n)

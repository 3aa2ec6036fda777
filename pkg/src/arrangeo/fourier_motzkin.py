"""Exact feasibility of mixed strict / non-strict linear systems.

A constraint ``(a, b, strict)`` reads ``a . x > b`` when ``strict`` is true and
``a . x >= b`` otherwise.  Strict rows are handled by a slack variable ``t``:
every strict row becomes ``a . x - t >= b`` and ``t <= 1`` is added, so the
original system is feasible iff the relaxed one admits ``t > 0``.  All
eliminations are then over non-strict inequalities, which is what makes the
Chernikov history rule safe to apply.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Constraint = tuple  # (coeffs: tuple[Fraction, ...], rhs: Fraction, strict: bool)


class _Row:
    # integer coefficients and bound, jointly primitive
    __slots__ = ("a", "b", "hist", "key", "bound")

    def __init__(self, a, b, hist):
        g = 0
        for x in a:
            g = math.gcd(g, x)
        ga = g
        g = math.gcd(g, b)
        if g > 1:
            a = tuple(x // g for x in a)
            b //= g
            ga //= g
        self.a = a
        self.b = b
        self.hist = hist
        # rows with parallel coefficient vectors share a key; ``bound`` ranks them
        if ga:
            self.key = tuple(x // ga for x in a)
            self.bound = Fraction(b, ga)
        else:
            self.key = a
            self.bound = Fraction(b)


def _integer_row(a, b) -> tuple:
    vals = [Fraction(x) for x in a] + [Fraction(b)]
    lcm = 1
    for x in vals:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vals]
    return tuple(ints[:-1]), ints[-1]


def _insert(bucket: dict, row: _Row) -> None:
    # among parallel rows only the tightest bound matters
    old = bucket.get(row.key)
    if old is None or row.bound > old.bound or (row.bound == old.bound and len(row.hist) < len(old.hist)):
        bucket[row.key] = row


def feasible(constraints: Sequence[Constraint], dim: int | None = None):
    """Return an exact witness point, or ``None`` when the system is empty.

    Every derived row is a valid consequence, so an empty verdict is always
    sound.  A witness is checked against the input; if history pruning ever
    dropped a needed row the elimination is redone without pruning.
    """
    constraints = list(constraints)
    if dim is None:
        if not constraints:
            raise ValueError("dimension needed for an empty system")
        dim = len(constraints[0][0])
    witness = _solve(constraints, dim, prune=True)
    if witness is not None and not _satisfies(constraints, witness):
        witness = _solve(constraints, dim, prune=False)
        assert witness is None or _satisfies(constraints, witness)
    return witness


def _satisfies(constraints, x) -> bool:
    for a, b, strict in constraints:
        val = sum((Fraction(ai) * xi for ai, xi in zip(a, x)), Fraction(0))
        if not ((val > b) if strict else (val >= b)):
            return False
    return True


def _solve(constraints, dim, prune):
    has_strict = any(c[2] for c in constraints)
    width = dim + 1  # last column is the slack t
    rows = {}
    for idx, (a, b, strict) in enumerate(constraints):
        if len(a) != dim:
            raise ValueError("constraint rows have unequal dimension")
        ia, ib = _integer_row(a, b)
        slack = -1 if strict else 0
        _insert(rows, _Row(ia + (slack,), ib, frozenset([idx])))
    _insert(rows, _Row((0,) * dim + (-1,), -1, frozenset([len(constraints)])))

    levels = []  # constraint lists before each elimination, for back-substitution
    current = list(rows.values())
    for k in range(dim - 1, -1, -1):
        levels.append((k, current))
        eliminated = dim - k
        pos, neg, nxt = [], [], {}
        for r in current:
            c = r.a[k]
            if c > 0:
                pos.append(r)
            elif c < 0:
                neg.append(r)
            else:
                _insert(nxt, r)
        for p in pos:
            for q in neg:
                hist = p.hist | q.hist
                if prune and len(hist) > eliminated + 1:
                    continue
                lam, mu = -q.a[k], p.a[k]
                a = tuple(lam * x + mu * y for x, y in zip(p.a, q.a))
                _insert(nxt, _Row(a, lam * p.b + mu * q.b, hist))
        current = list(nxt.values())

    # only t remains: rows read c * t >= e
    lo, hi = None, None
    for r in current:
        c = r.a[dim]
        if c == 0:
            if r.b > 0:
                return None
        elif c > 0:
            v = Fraction(r.b, c)
            lo = v if lo is None else max(lo, v)
        else:
            v = Fraction(r.b, c)
            hi = v if hi is None else min(hi, v)
    if lo is not None and hi is not None and lo > hi:
        return None
    if has_strict:
        if hi is None or hi <= 0:
            return None
        t = hi
    else:
        t = _pick(lo, hi)

    x = [Fraction(0)] * dim + [t]
    for k, rows_k in reversed(levels):
        lo, hi = None, None
        for r in rows_k:
            c = r.a[k]
            if c == 0:
                continue
            rest = sum((r.a[j] * x[j] for j in range(width) if j != k), Fraction(0))
            v = (r.b - rest) / c
            if c > 0:
                lo = v if lo is None else max(lo, v)
            else:
                hi = v if hi is None else min(hi, v)
        x[k] = _pick(lo, hi)
    return tuple(x[:dim])


def _pick(lo, hi) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return min(Fraction(0), hi) if hi >= 0 else hi
    if hi is None:
        return max(Fraction(0), lo) if lo <= 0 else lo
    if lo <= 0 <= hi:
        return Fraction(0)
    return (lo + hi) / 2

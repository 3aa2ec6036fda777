"""Normal systems and convex positive bijections.

A signed vector of a normal system is written ``(i, s)``: line ``i``
(1-based) with sign ``s`` in {+1, -1}, standing for ``s * reps[i-1]``.

Two routes decide whether an antipodal map is a convex positive bijection:
:func:`is_cpb` enumerates every base and every vector literally, while the
search in :func:`find_cpb` compares the sign patterns of the unique linear
relation on each (m+1)-set of lines.  The two agree because a vector is a
positive combination of a base exactly when the relation on those m+1 lines,
written over the signed vectors involved, has all coefficients of one sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb
from typing import Sequence

from . import exactmath as qm
from .arrangement import Arrangement, Verdict
from .errors import DimensionError, GeneralPositionError, SingularError


@dataclass(frozen=True)
class NormalSystem:
    m: int
    reps: tuple

    def __post_init__(self):
        reps = tuple(qm.normalize_integer(qm.vector(v)) for v in self.reps)
        for v in reps:
            if len(v) != self.m:
                raise DimensionError(f"vector of length {len(v)} in a normal system of dimension {self.m}")
            if not any(v):
                raise GeneralPositionError("zero vector in a normal system")
        object.__setattr__(self, "reps", reps)
        verdict = is_maximally_independent(reps, self.m)
        if not verdict:
            raise GeneralPositionError(verdict.reason, verdict.witness)

    @property
    def n(self) -> int:
        return len(self.reps)

    def vec(self, signed) -> tuple:
        i, s = signed
        v = self.reps[i - 1]
        return v if s > 0 else qm.neg(v)


@dataclass(frozen=True)
class AntipodalMap:
    """``delta(v_i) = -w_perm(i)`` when ``flips[i-1]`` else ``w_perm(i)``."""

    perm: tuple
    flips: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "flips", tuple(bool(f) for f in self.flips))
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")
        if len(self.flips) != len(self.perm):
            raise ValueError("perm and flips differ in length")

    @classmethod
    def identity(cls, n: int) -> "AntipodalMap":
        return cls(tuple(range(1, n + 1)), (False,) * n)

    def __call__(self, signed):
        i, s = signed
        return self.perm[i - 1], (-s if self.flips[i - 1] else s)

    def negated(self) -> "AntipodalMap":
        return AntipodalMap(self.perm, tuple(not f for f in self.flips))

    def inverse(self) -> "AntipodalMap":
        perm = [0] * len(self.perm)
        flips = [False] * len(self.perm)
        for i, (j, f) in enumerate(zip(self.perm, self.flips), start=1):
            perm[j - 1] = i
            flips[j - 1] = f
        return AntipodalMap(tuple(perm), tuple(flips))

    def then(self, other: "AntipodalMap") -> "AntipodalMap":
        """Composition: apply ``self`` first, then ``other``."""
        perm = tuple(other.perm[j - 1] for j in self.perm)
        flips = tuple(f != other.flips[j - 1] for j, f in zip(self.perm, self.flips))
        return AntipodalMap(perm, flips)

    @property
    def flip_string(self) -> str:
        return "".join("-" if f else "+" for f in self.flips)


def extract_normal_system(arr: Arrangement) -> NormalSystem:
    return NormalSystem(arr.m, arr.normals)


def is_maximally_independent(vectors: Sequence[Sequence], m: int | None = None) -> Verdict:
    """Every subset of at most ``m`` vectors must be independent.

    The witness is the smallest violating subset (1-based).
    """
    vectors = [qm.vector(v) for v in vectors]
    if m is None:
        m = len(vectors[0]) if vectors else 0
    for r in range(1, min(m, len(vectors)) + 1):
        for S in combinations(range(1, len(vectors) + 1), r):
            if qm.rank([vectors[i - 1] for i in S]) < r:
                return Verdict(False, S, f"vectors {S} are linearly dependent")
    return Verdict(True)


def _coefficients(base: Sequence[Sequence], u: Sequence):
    # base vectors are the columns
    return qm.solve_unique(qm.transpose(base), u)


def positive_combo(base: Sequence[Sequence], u: Sequence):
    """Coefficients of ``u`` in ``base`` if all are strictly positive, else ``None``."""
    coeffs = _coefficients([qm.vector(b) for b in base], qm.vector(u))
    return coeffs if all(c > 0 for c in coeffs) else None


def is_normal_simple_base(ns: NormalSystem, base: Sequence) -> Verdict:
    """``base`` is a list of ``m`` signed vectors ``(i, s)``."""
    base = [tuple(b) for b in base]
    if len(base) != ns.m:
        return Verdict(False, None, f"a base needs {ns.m} vectors")
    lines = [i for i, _ in base]
    if len(set(lines)) != len(lines):
        return Verdict(False, None, "not a basis: repeated line")
    vecs = [ns.vec(b) for b in base]
    if qm.rank(vecs) < ns.m:
        return Verdict(False, None, "not a basis")
    for j in range(1, ns.n + 1):
        if j in lines:
            continue  # -w has coefficient -1 on w
        for s in (1, -1):
            coeffs = _coefficients(vecs, ns.vec((j, s)))
            if all(c >= 0 for c in coeffs):
                return Verdict(False, (j, s), f"{(j, s)} is a non-negative combination of the base")
    return Verdict(True)


def _coefficient_table(ns: NormalSystem) -> dict:
    """``table[L][j]``: coefficients of ``reps[j]`` in the basis of lines ``L``."""
    table = {}
    for L in combinations(range(1, ns.n + 1), ns.m):
        cols = [ns.reps[i - 1] for i in L]
        try:
            table[L] = {j: _coefficients(cols, ns.reps[j - 1]) for j in range(1, ns.n + 1)}
        except SingularError as exc:
            raise GeneralPositionError(f"lines {L} do not form a basis", L) from exc
    return table


def _is_positive(table, base, u) -> bool:
    order = sorted(range(len(base)), key=lambda k: base[k][0])
    L = tuple(base[k][0] for k in order)
    j, t = u
    coeffs = table[L][j]
    return all(t * c * base[k][1] > 0 for c, k in zip(coeffs, order))


def is_cpb(ns1: NormalSystem, ns2: NormalSystem, delta: AntipodalMap) -> Verdict:
    """Check the convex positive condition for every base and every vector.

    Bases are taken up to global negation (the first vector keeps sign +),
    which loses nothing because negating both the base and ``u`` preserves
    positivity.  The witness is ``(base, u)`` in signed notation.
    """
    if ns1.m != ns2.m or ns1.n != ns2.n or len(delta.perm) != ns1.n:
        raise DimensionError("normal systems and map must agree in size and dimension")
    t1, t2 = _coefficient_table(ns1), _coefficient_table(ns2)
    for L in combinations(range(1, ns1.n + 1), ns1.m):
        for tail in product((1, -1), repeat=ns1.m - 1):
            base = list(zip(L, (1,) + tail))
            image = [delta(b) for b in base]
            for j in range(1, ns1.n + 1):
                for t in (1, -1):
                    u = (j, t)
                    if _is_positive(t1, base, u) != _is_positive(t2, image, delta(u)):
                        return Verdict(False, (tuple(base), u), "positivity not preserved")
    return Verdict(True)


def circuit_signs(ns: NormalSystem) -> dict:
    """Sign pattern of the relation on every (m+1)-set of lines, first entry +."""
    out = {}
    for S in combinations(range(1, ns.n + 1), ns.m + 1):
        ker = qm.kernel_basis(qm.transpose([ns.reps[i - 1] for i in S]))
        if len(ker) != 1 or any(c == 0 for c in ker[0]):
            raise GeneralPositionError(f"lines {S} are not in general position", S)
        out[S] = tuple(1 if c > 0 else -1 for c in ker[0])
    return out


def _circuit_ok(c1, c2, S, delta_perm, delta_sign) -> bool:
    image = [delta_perm[i] for i in S]
    T = tuple(sorted(image))
    pattern = c2[T]
    pos = {line: k for k, line in enumerate(T)}
    ratio = None
    for k, i in enumerate(S):
        r = c1[S][k] * delta_sign[i] * pattern[pos[delta_perm[i]]]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


def pair_profile(ns: NormalSystem, circuits: dict | None = None) -> dict:
    """For each pair of lines, how many relations give their vectors equal signs.

    Reorienting one of the two lines replaces the count ``d`` by ``N - d``
    with ``N = C(n-2, m-1)``.  In dimension three ``d`` is the degree of the
    compatible-pairs vertex ``{v_i, v_j}``.
    """
    circuits = circuit_signs(ns) if circuits is None else circuits
    prof = {P: 0 for P in combinations(range(1, ns.n + 1), 2)}
    for S, sg in circuits.items():
        for (a, sa), (b, sb) in combinations(zip(S, sg), 2):
            if sa == sb:
                prof[(a, b)] += 1
    return prof


def line_fingerprints(ns: NormalSystem, circuits: dict | None = None) -> list:
    prof = pair_profile(ns, circuits)
    total = comb(ns.n - 2, ns.m - 1) if ns.n >= 2 else 0
    per_line = {i: [] for i in range(1, ns.n + 1)}
    for (a, b), d in prof.items():
        key = min(d, total - d)
        per_line[a].append(key)
        per_line[b].append(key)
    return [tuple(sorted(per_line[i])) for i in range(1, ns.n + 1)]


def find_cpb(ns1: NormalSystem, ns2: NormalSystem, identity_subscripts: bool = False):
    """Search for a convex positive bijection, or return ``None``.

    Lines of ``ns1`` are assigned in order.  Candidates for an image line must
    match its per-line fingerprint, and each assignment is checked against
    every relation on already-assigned lines.  The first line keeps sign +
    since ``-delta`` is a CPB whenever ``delta`` is.  With
    ``identity_subscripts`` only the signs are searched.
    """
    if ns1.m != ns2.m or ns1.n != ns2.n:
        return None
    n, m = ns1.n, ns1.m
    if n == 0:
        return AntipodalMap((), ())
    if m == 3 and not identity_subscripts:
        from .compat3d import build_graph, degree_profile

        if degree_profile(build_graph(ns1)) != degree_profile(build_graph(ns2)):
            return None
    c1, c2 = circuit_signs(ns1), circuit_signs(ns2)
    f1, f2 = line_fingerprints(ns1, c1), line_fingerprints(ns2, c2)
    if sorted(f1) != sorted(f2):
        return None
    by_last = {i: [] for i in range(1, n + 1)}
    for S in c1:
        by_last[S[-1]].append(S)

    perm: dict = {}
    sign: dict = {}
    used = set()

    def extend(i):
        if i > n:
            return True
        targets = [i] if identity_subscripts else range(1, n + 1)
        for j in targets:
            if j in used or f1[i - 1] != f2[j - 1]:
                continue
            for s in ((1,) if i == 1 else (1, -1)):
                perm[i], sign[i] = j, s
                if all(_circuit_ok(c1, c2, S, perm, sign) for S in by_last[i]):
                    used.add(j)
                    if extend(i + 1):
                        return True
                    used.discard(j)
                del perm[i], sign[i]
        return False

    if not extend(1):
        return None
    return AntipodalMap(tuple(perm[i] for i in range(1, n + 1)), tuple(sign[i] < 0 for i in range(1, n + 1)))


def find_cpb_bruteforce(ns1: NormalSystem, ns2: NormalSystem):
    """Exhaustive search certified by :func:`is_cpb`; tiny inputs only."""
    if ns1.m != ns2.m or ns1.n != ns2.n:
        return None
    n = ns1.n
    for perm in permutations(range(1, n + 1)):
        for flips in product((False, True), repeat=n):
            delta = AntipodalMap(perm, flips)
            if is_cpb(ns1, ns2, delta):
                return delta
    return None

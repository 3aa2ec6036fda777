"""Graph of compatible pairs of a normal system in three dimensions.

A vertex is an unordered pair of signed vectors on two different lines,
stored canonically as ``(i, s, j, t)`` with ``i < j``.  Two vertices are
adjacent when the open positive cones they span meet, i.e. when
``a x1 + b y1 = c x2 + d y2`` has a solution with ``a, b, c, d > 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from . import exactmath as qm
from .errors import DimensionError
from .fourier_motzkin import feasible
from .normsys import AntipodalMap, NormalSystem, circuit_signs


def vertex(x, y) -> tuple:
    """Canonical name of the pair of signed vectors ``x = (i, s)``, ``y = (j, t)``."""
    (i, s), (j, t) = sorted([tuple(x), tuple(y)])
    if i == j:
        raise ValueError("a vertex needs two different lines")
    return (i, s, j, t)


def vertex_label(v) -> str:
    i, s, j, t = v
    return "{" + f"{'' if s > 0 else '-'}u{i},{'' if t > 0 else '-'}u{j}" + "}"


def positive_relation(x1, y1, x2, y2):
    """Positive ``(a, b, c, d)`` with ``a x1 + b y1 = c x2 + d y2``, or ``None``."""
    cols = [qm.vector(x1), qm.vector(y1), qm.neg(qm.vector(x2)), qm.neg(qm.vector(y2))]
    for c in cols:
        if len(c) != 3:
            raise DimensionError("compatible pairs are defined in dimension three")
    M = qm.transpose(cols)
    ker = qm.kernel_basis(M)
    if len(ker) == 1:
        g = ker[0]
        if all(c > 0 for c in g):
            return g
        if all(c < 0 for c in g):
            return qm.neg(g)
        return None
    # a larger kernel only arises from shared lines; decide positivity directly
    cons = []
    for row in M:
        cons.append((row, Fraction(0), False))
        cons.append((qm.neg(row), Fraction(0), False))
    for k in range(4):
        e = tuple(Fraction(int(k == j)) for j in range(4))
        cons.append((e, Fraction(0), True))
    w = feasible(cons, 4)
    return None if w is None else qm.normalize_integer(w)


def are_compatible(ns: NormalSystem, p1, p2) -> bool:
    """``p1``, ``p2`` are vertices ``(i, s, j, t)`` of the graph of ``ns``."""
    if ns.m != 3:
        raise DimensionError("compatible pairs are defined in dimension three")
    if tuple(p1) == tuple(p2):
        raise ValueError("a vertex is not compared with itself")
    i, s, j, t = p1
    k, r, l, q = p2
    return positive_relation(ns.vec((i, s)), ns.vec((j, t)), ns.vec((k, r)), ns.vec((l, q))) is not None


@dataclass(frozen=True)
class CompatGraph:
    n: int
    vertices: tuple
    adjacency: dict

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v) -> frozenset:
        return self.adjacency[v]

    @property
    def edges(self) -> list:
        return sorted((u, v) for u in self.vertices for v in self.adjacency[u] if u < v)


def graph_vertices(n: int) -> tuple:
    return tuple((i, s, j, t) for i, j in combinations(range(1, n + 1), 2) for s in (1, -1) for t in (1, -1))


def build_graph(ns: NormalSystem) -> CompatGraph:
    """Edges read off the relation on each 4-set of lines.

    Splitting a relation with signs ``sg`` into two pairs gives the edge
    ``{sg_p v_p, sg_q v_q} ~ {-sg_r v_r, -sg_s v_s}`` and its negative; pairs
    sharing a line are never adjacent since any three lines are independent.
    """
    if ns.m != 3:
        raise DimensionError("compatible pairs are defined in dimension three")
    verts = graph_vertices(ns.n)
    adj = {v: set() for v in verts}
    for S, sg in circuit_signs(ns).items():
        signed = dict(zip(S, sg))
        for p, q in combinations(S, 2):
            r, t = (k for k in S if k not in (p, q))
            for e in (1, -1):
                a = vertex((p, e * signed[p]), (q, e * signed[q]))
                b = vertex((r, -e * signed[r]), (t, -e * signed[t]))
                adj[a].add(b)
                adj[b].add(a)
    return CompatGraph(ns.n, verts, {v: frozenset(a) for v, a in adj.items()})


def build_graph_pairwise(ns: NormalSystem) -> CompatGraph:
    """Same graph, testing every pair of vertices with :func:`are_compatible`."""
    if ns.m != 3:
        raise DimensionError("compatible pairs are defined in dimension three")
    verts = graph_vertices(ns.n)
    adj = {v: set() for v in verts}
    for p, q in combinations(verts, 2):
        if are_compatible(ns, p, q):
            adj[p].add(q)
            adj[q].add(p)
    return CompatGraph(ns.n, verts, {v: frozenset(a) for v, a in adj.items()})


def degree_profile(G: CompatGraph) -> tuple:
    return tuple(sorted(G.degree(v) for v in G.vertices))


def induced_vertex(delta: AntipodalMap, v) -> tuple:
    i, s, j, t = v
    return vertex(delta((i, s)), delta((j, t)))


def induces_isomorphism(G1: CompatGraph, G2: CompatGraph, delta: AntipodalMap) -> bool:
    for u in G1.vertices:
        image = {induced_vertex(delta, w) for w in G1.adjacency[u]}
        if image != set(G2.adjacency[induced_vertex(delta, u)]):
            return False
    return True


def _line_signature(G: CompatGraph, n: int) -> list:
    sig = {i: [] for i in range(1, n + 1)}
    for v in G.vertices:
        sig[v[0]].append(G.degree(v))
        sig[v[2]].append(G.degree(v))
    return [tuple(sorted(sig[i])) for i in range(1, n + 1)]


def find_graph_isomorphism(G1: CompatGraph, G2: CompatGraph):
    """An antipodal map inducing an isomorphism ``G1 -> G2``, or ``None``."""
    if G1.n != G2.n:
        return None
    if degree_profile(G1) != degree_profile(G2):
        return None
    n = G1.n
    sig1, sig2 = _line_signature(G1, n), _line_signature(G2, n)
    if sorted(sig1) != sorted(sig2):
        return None
    perm: dict = {}
    sign: dict = {}
    used = set()

    def image(v):
        i, s, j, t = v
        return vertex((perm[i], s * sign[i]), (perm[j], t * sign[j]))

    def consistent(i):
        assigned = set(perm.values())
        for v in G1.vertices:
            if i not in (v[0], v[2]) or v[0] not in perm or v[2] not in perm:
                continue
            v2 = image(v)
            if G1.degree(v) != G2.degree(v2):
                return False
            forward = {image(w) for w in G1.adjacency[v] if w[0] in perm and w[2] in perm}
            backward = {w for w in G2.adjacency[v2] if w[0] in assigned and w[2] in assigned}
            if forward != backward:
                return False
        return True

    def extend(i):
        if i > n:
            return True
        for j in range(1, n + 1):
            if j in used or sig1[i - 1] != sig2[j - 1]:
                continue
            for s in ((1,) if i == 1 else (1, -1)):
                perm[i], sign[i] = j, s
                if consistent(i):
                    used.add(j)
                    if extend(i + 1):
                        return True
                    used.discard(j)
                del perm[i], sign[i]
        return False

    if not extend(1):
        return None
    delta = AntipodalMap(tuple(perm[i] for i in range(1, n + 1)), tuple(sign[i] < 0 for i in range(1, n + 1)))
    return delta if induces_isomorphism(G1, G2, delta) else None


def graphs_compatible(G1: CompatGraph, G2: CompatGraph) -> bool:
    return find_graph_isomorphism(G1, G2) is not None

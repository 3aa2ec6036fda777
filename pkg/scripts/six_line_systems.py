"""Check the two six-line normal systems in Q^3 and compare their graphs of compatible pairs.

Prints every printed relation with its exact counterpart, the degree profile
of both graphs, the two distinguished vertices of the first graph, and the
outcome of the isomorphism searches.
"""
import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from arrangeo import exactmath as qm  # noqa: E402
from arrangeo.compat3d import build_graph, degree_profile, graphs_compatible, vertex, vertex_label  # noqa: E402
from arrangeo.normsys import NormalSystem, find_cpb  # noqa: E402
from six_lines import RELATIONS_1, RELATIONS_2, U1, U2  # noqa: E402


def check_relations(name, U, rels):
    bad = 0
    for k, (lhs, rhs, value) in enumerate(rels, start=1):
        subs = sorted(set(lhs) | set(rhs))
        printed = tuple(Fraction(lhs.get(i, 0) - rhs.get(i, 0)) for i in subs)
        (kv,) = qm.kernel_basis(qm.transpose([qm.vector(U[i - 1]) for i in subs]))
        ratio = printed[0] / kv[0]
        ok = qm.scale(ratio, kv) == printed and ratio != 0
        bad += not ok
        exact = " ".join(f"{int(c)}*u{i}" for c, i in zip(kv, subs))
        print(f"  {name} ({k:2d}) lines {subs}: {'ok' if ok else 'MISMATCH'}  exact relation {exact} = 0")
    return bad


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    ns1 = NormalSystem(3, tuple(tuple(Fraction(x) for x in v) for v in U1))
    ns2 = NormalSystem(3, tuple(tuple(Fraction(x) for x in v) for v in U2))
    print("printed relations:")
    bad = check_relations("U1", U1, RELATIONS_1) + check_relations("U2", U2, RELATIONS_2)
    print(f"  {bad} mismatching coefficient vectors")
    G1, G2 = build_graph(ns1), build_graph(ns2)
    for name, G in (("G1", G1), ("G2", G2)):
        prof = degree_profile(G)
        counts = {d: prof.count(d) for d in sorted(set(prof))}
        print(f"{name}: {len(G.vertices)} vertices, {len(G.edges)} edges, degree counts {counts}")
    for v in (vertex((1, -1), (2, 1)), vertex((1, -1), (5, -1))):
        nbrs = ", ".join(sorted(vertex_label(w) for w in G1.neighbors(v)))
        print(f"G1 {vertex_label(v)}: degree {G1.degree(v)}, neighbours {nbrs}")
    print(f"graphs isomorphic: {graphs_compatible(G1, G2)}")
    print(f"convex positive bijection: {find_cpb(ns1, ns2)}")


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: 0 success / predicate true, 1 predicate false, 2 error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import arriso, compat3d, concurr, infinity, normsys, regions
from .arrangement import skeleton, validate_general_position, vertices
from .errors import ArrangeoError
from .exactmath import format_rational
from .io import (
    arrangement_to_dict,
    dumps,
    normal_system_to_dict,
    parse_arrangement,
    parse_normal_system,
)

SCHEMA = 1


class UsageError(ArrangeoError):
    pass


def _vec(v) -> list:
    return [format_rational(x) for x in v]


def _vec_text(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _subset_text(S) -> str:
    return "{" + ",".join(map(str, S)) + "}"


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


class Report:
    """Collects text lines and a JSON payload; prints one of them."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict = {"schema": SCHEMA, "command": command}

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def emit(self, as_json: bool, out) -> None:
        if as_json:
            out.write(dumps(self.data))
        else:
            out.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def cmd_validate(args, rep):
    arr = parse_arrangement(args.file, validate=False)
    verdict = validate_general_position(arr)
    rep.data.update(valid=verdict.ok, witness=list(verdict.witness) if verdict.witness else None)
    if verdict:
        rep.say(f"valid: {arr.n} hyperplanes in general position in dimension {arr.m}")
        return 0
    rep.say(f"invalid: {verdict.reason} (witness {_subset_text(verdict.witness)})")
    return 1


def cmd_vertices(args, rep):
    arr = parse_arrangement(args.file)
    vs = vertices(arr)
    rep.data["vertices"] = [{"subset": list(S), "point": _vec(p)} for S, p in vs.items()]
    for S, p in vs.items():
        rep.say(f"{_subset_text(S)} {_vec_text(p)}")
    return 0


def cmd_skeleton(args, rep):
    arr = parse_arrangement(args.file)
    flats = skeleton(arr, args.k)
    rep.data["flats"] = [
        {"subset": list(f.subscripts), "point": _vec(f.point), "directions": [_vec(d) for d in f.directions]}
        for f in flats
    ]
    for f in flats:
        dirs = " ".join(_vec_text(d) for d in f.directions) or "-"
        rep.say(f"{_subset_text(f.subscripts)} point {_vec_text(f.point)} directions {dirs}")
    return 0


def cmd_regions(args, rep):
    arr = parse_arrangement(args.file)
    found = regions.enumerate_regions(arr)
    total, bounded, unbounded = regions.region_counts(found)
    expected = regions.count_formula(arr.n, arr.m)
    rep.data.update(
        total=total,
        bounded=bounded,
        unbounded=unbounded,
        formula={"total": expected[0], "bounded": expected[1], "unbounded": expected[2]},
        regions=[
            {"signs": r.label, "bounded": r.bounded, "witness": _vec(r.witness)} for r in found
        ],
    )
    rep.say(f"{total} regions ({bounded} bounded, {unbounded} unbounded)")
    for r in found:
        rep.say(f"{r.label} {'bounded' if r.bounded else 'unbounded'} {_vec_text(r.witness)}")
    return 0


def cmd_iso(args, rep):
    arr1, arr2 = parse_arrangement(args.file1), parse_arrangement(args.file2)
    if args.perm:
        phi = _int_list(args.perm)
        verdict = arriso.is_isomorphism(arr1, arr2, phi)
        rep.data.update(isomorphic=verdict.ok, perm=list(phi))
        if verdict:
            rep.say(f"isomorphic under {','.join(map(str, phi))}")
            return 0
        S, trio, middle = verdict.witness
        rep.data["witness"] = {"line": list(S), "vertices": [list(V) for V in trio], "middle": list(middle)}
        rep.say(f"not an isomorphism: on line {_subset_text(S)} the central vertex {_subset_text(middle)} is not preserved")
        return 1
    phi = arriso.find_isomorphism(arr1, arr2)
    rep.data.update(isomorphic=phi is not None, perm=list(phi) if phi else None)
    if phi is None:
        rep.say("not isomorphic")
        return 1
    rep.say(f"isomorphic under {','.join(map(str, phi))}")
    return 0


def _cpb_data(delta):
    return {"perm": list(delta.perm), "flips": delta.flip_string}


def cmd_translation_iso(args, rep):
    arr1, arr2 = parse_arrangement(args.file1), parse_arrangement(args.file2)
    verdict = arriso.translation_equivalent(arr1, arr2)
    rep.data.update(equivalent=verdict.ok, cpb=_cpb_data(verdict.witness) if verdict else None)
    if verdict:
        d = verdict.witness
        rep.say(f"isomorphic up to translation; cpb perm {','.join(map(str, d.perm))} flips {d.flip_string}")
        return 0
    rep.say("not isomorphic up to translation")
    return 1


def cmd_ns_extract(args, rep):
    ns = normsys.extract_normal_system(parse_arrangement(args.file))
    rep.data.update(normal_system_to_dict(ns))
    rep.lines.append(dumps(normal_system_to_dict(ns)).rstrip("\n"))
    return 0


def _flips(text: str, n: int) -> tuple:
    if text is None:
        return (False,) * n
    if len(text) != n or any(c not in "+-" for c in text):
        raise UsageError(f"--flips must be a +/- string of length {n}")
    return tuple(c == "-" for c in text)


def cmd_ns_check_cpb(args, rep):
    ns1, ns2 = parse_normal_system(args.file1), parse_normal_system(args.file2)
    perm = _int_list(args.perm) if args.perm else tuple(range(1, ns1.n + 1))
    try:
        delta = normsys.AntipodalMap(perm, _flips(args.flips, ns1.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict = normsys.is_cpb(ns1, ns2, delta)
    rep.data.update(cpb=verdict.ok, map=_cpb_data(delta))
    if verdict:
        rep.say("convex positive bijection")
        return 0
    base, u = verdict.witness
    rep.data["witness"] = {"base": [list(b) for b in base], "vector": list(u)}
    rep.say(f"not a convex positive bijection: base {list(base)} vector {u}")
    return 1


def cmd_ns_iso(args, rep):
    ns1, ns2 = parse_normal_system(args.file1), parse_normal_system(args.file2)
    delta = normsys.find_cpb(ns1, ns2)
    rep.data.update(isomorphic=delta is not None, cpb=_cpb_data(delta) if delta else None)
    if delta is None:
        rep.say("not isomorphic")
        return 1
    rep.say(f"isomorphic; cpb perm {','.join(map(str, delta.perm))} flips {delta.flip_string}")
    return 0


def cmd_concurrency(args, rep):
    arr = parse_arrangement(args.file)
    what = args.what
    if what == "normals":
        normals = concurr.concurrency_normals(arr)
        rep.data["normals"] = [{"subset": list(S), "normal": _vec(v)} for S, v in normals.items()]
        for S, v in normals.items():
            rep.say(f"{_subset_text(S)} {_vec_text(v)}")
    elif what == "signature":
        sig = concurr.cone_signature(arr)
        rep.data["signature"] = sig.lines()
        rep.lines.extend(sig.lines())
    elif what in ("facets", "simplices"):
        subsets = concurr.cone_facets(arr) if what == "facets" else concurr.simplex_polyhedralities(arr)
        rep.data[what] = [list(S) for S in subsets]
        rep.data["count"] = len(subsets)
        rep.say(f"{len(subsets)} {what}")
        rep.lines.extend(_subset_text(S) for S in subsets)
    elif what == "cross":
        if not args.subset:
            raise UsageError("concurrency cross needs --subset")
        S = tuple(sorted(_int_list(args.subset)))
        if S not in concurr.cone_facets(arr):
            raise UsageError(f"{_subset_text(S)} is not a facet of the offset cone")
        moved = concurr.cross_facet(arr, S)
        rep.data["arrangement"] = arrangement_to_dict(moved)
        rep.lines.append(dumps(arrangement_to_dict(moved)).rstrip("\n"))
    return 0


def _pick_hyperplane(arr, index):
    i = arr.n if index is None else index
    if not 1 <= i <= arr.n:
        raise UsageError(f"hyperplane index {i} out of range 1..{arr.n}")
    return i, arr.without(i), arr[i]


def cmd_infinity(args, rep):
    arr = parse_arrangement(args.file)
    what = args.what
    if what == "add":
        if not args.direction:
            raise UsageError("infinity add needs --direction")
        from .exactmath import parse_rational

        try:
            d = tuple(parse_rational(x.strip()) for x in args.direction.split(","))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if len(d) != arr.m:
            raise UsageError(f"direction needs {arr.m} entries")
        ext = arr.appended(infinity.add_at_infinity(arr, d))
        rep.data["arrangement"] = arrangement_to_dict(ext)
        rep.lines.append(dumps(arrangement_to_dict(ext)).rstrip("\n"))
        return 0
    if what == "check":
        i, rest, h = _pick_hyperplane(arr, args.index)
        ok = infinity.is_at_infinity(rest, h)
        rep.data.update(index=i, at_infinity=ok)
        rep.say(f"hyperplane {i} is {'' if ok else 'not '}at infinity")
        return 0 if ok else 1
    if what == "order":
        sigma = infinity.is_infinity_arrangement(arr)
        rep.data["order"] = list(sigma) if sigma is not None else None
        rep.say(",".join(map(str, sigma)) if sigma is not None else "none")
        return 0 if sigma is not None else 1
    if what == "induce":
        i, rest, h = _pick_hyperplane(arr, args.index)
        induced = infinity.induced_arrangement(rest, h)
        rep.data["arrangement"] = arrangement_to_dict(induced)
        rep.lines.append(dumps(arrangement_to_dict(induced)).rstrip("\n"))
        return 0
    raise UsageError(what)


def cmd_compat(args, rep):
    ns = parse_normal_system(args.file)
    G = compat3d.build_graph(ns)
    label = compat3d.vertex_label
    rep.data.update(vertices=len(G.vertices), edges=len(G.edges))
    if args.dot:
        rep.say("graph compatible_pairs {")
        for v in G.vertices:
            rep.say(f'  "{label(v)}";')
        for u, v in G.edges:
            rep.say(f'  "{label(u)}" -- "{label(v)}";')
        rep.say("}")
        rep.data["dot"] = "\n".join(rep.lines)
    elif args.edges:
        rep.data["edge_list"] = [[label(u), label(v)] for u, v in G.edges]
        rep.lines.extend(f"{label(u)} -- {label(v)}" for u, v in G.edges)
    else:
        rep.data["degrees"] = {label(v): G.degree(v) for v in G.vertices}
        rep.data["profile"] = list(compat3d.degree_profile(G))
        rep.say(f"{len(G.vertices)} vertices, {len(G.edges)} edges")
        rep.lines.extend(f"{label(v)} {G.degree(v)}" for v in G.vertices)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    p = argparse.ArgumentParser(prog="arrangeo", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, files=("file",)):
        sp = sub.add_parser(name, help=help_, parents=[common])
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check general position")
    add("vertices", cmd_vertices, "list all vertices")
    add("skeleton", cmd_skeleton, "list the flats cut out by k hyperplanes").add_argument("--k", type=int, default=1)
    add("regions", cmd_regions, "enumerate regions")
    add("iso", cmd_iso, "arrangement isomorphism", ("file1", "file2")).add_argument("--perm")
    add("translation-iso", cmd_translation_iso, "isomorphism up to translation", ("file1", "file2"))

    ns = sub.add_parser("ns", help="normal systems", parents=[common])
    ns_sub = ns.add_subparsers(dest="ns_command", required=True)
    sp = ns_sub.add_parser("extract", parents=[common])
    sp.add_argument("file")
    sp.set_defaults(func=cmd_ns_extract)
    sp = ns_sub.add_parser("check-cpb", parents=[common])
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--perm")
    sp.add_argument("--flips")
    sp.set_defaults(func=cmd_ns_check_cpb)
    sp = ns_sub.add_parser("iso", parents=[common])
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.set_defaults(func=cmd_ns_iso)

    sp = sub.add_parser("concurrency", help="concurrency arrangement", parents=[common])
    sp.add_argument("what", choices=["normals", "signature", "facets", "simplices", "cross"])
    sp.add_argument("file")
    sp.add_argument("--subset")
    sp.set_defaults(func=cmd_concurrency)

    sp = sub.add_parser("infinity", help="hyperplanes at infinity", parents=[common])
    sp.add_argument("what", choices=["add", "check", "order", "induce"])
    sp.add_argument("file")
    sp.add_argument("--direction")
    sp.add_argument("--index", type=int)
    sp.set_defaults(func=cmd_infinity)

    sp = sub.add_parser("compat", help="graph of compatible pairs (dimension three)", parents=[common])
    sp.add_argument("what", choices=["graph"])
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--degrees", action="store_true")
    g.add_argument("--edges", action="store_true")
    g.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_compat)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    command = args.command + (f" {args.ns_command}" if args.command == "ns" else "")
    rep = Report(command)
    try:
        code = args.func(args, rep)
    except (ArrangeoError, OSError, ValueError) as exc:
        if args.json:
            out.write(dumps({"schema": SCHEMA, "command": command, "error": str(exc)}))
        err.write(f"error: {exc}\n")
        return 2
    rep.emit(args.json, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

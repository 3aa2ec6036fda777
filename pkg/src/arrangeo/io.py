"""JSON file formats.

Arrangement: ``{"m": 2, "hyperplanes": [{"a": ["1", "0"], "b": "0"}, ...]}``
Normal system: ``{"m": 3, "vectors": [["1", "0", "0"], ...]}``

Rationals are strings ``"p"`` or ``"p/q"``; plain JSON integers are accepted
on input.  Output always uses strings.
"""
from __future__ import annotations

import json
from pathlib import Path

from .arrangement import Arrangement, Hyperplane, require_valid
from .errors import ArrangeoError
from .exactmath import format_rational, parse_rational
from .normsys import NormalSystem, extract_normal_system


class FormatError(ArrangeoError, ValueError):
    pass


def _load(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return data


def _dimension(data, where) -> int:
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise FormatError(f"{where}: 'm' must be a positive integer")
    return m


def _rationals(values, m, where):
    if not isinstance(values, list) or len(values) != m:
        raise FormatError(f"{where}: expected a list of {m} rationals")
    try:
        return tuple(parse_rational(v) for v in values)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def arrangement_from_dict(data: dict, where: str = "arrangement", validate: bool = True) -> Arrangement:
    m = _dimension(data, where)
    hs = data.get("hyperplanes")
    if not isinstance(hs, list):
        raise FormatError(f"{where}: 'hyperplanes' must be a list")
    out = []
    for k, h in enumerate(hs, start=1):
        loc = f"{where}: hyperplane {k}"
        if not isinstance(h, dict) or "a" not in h or "b" not in h:
            raise FormatError(f"{loc}: needs keys 'a' and 'b'")
        a = _rationals(h["a"], m, loc)
        try:
            b = parse_rational(h["b"])
        except ValueError as exc:
            raise FormatError(f"{loc}: {exc}") from exc
        if not any(a):
            raise FormatError(f"{loc}: normal is zero")
        out.append(Hyperplane(a, b))
    arr = Arrangement(m, tuple(out))
    if validate:
        require_valid(arr)
    return arr


def normal_system_from_dict(data: dict, where: str = "normal system") -> NormalSystem:
    if "hyperplanes" in data:
        return extract_normal_system(arrangement_from_dict(data, where))
    m = _dimension(data, where)
    vs = data.get("vectors")
    if not isinstance(vs, list):
        raise FormatError(f"{where}: 'vectors' must be a list")
    return NormalSystem(m, tuple(_rationals(v, m, f"{where}: vector {k}") for k, v in enumerate(vs, start=1)))


def parse_arrangement(path, validate: bool = True) -> Arrangement:
    return arrangement_from_dict(_load(path), str(path), validate)


def parse_normal_system(path) -> NormalSystem:
    """Reads a normal-system file, or extracts the system of an arrangement file."""
    return normal_system_from_dict(_load(path), str(path))


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "m": arr.m,
        "hyperplanes": [{"a": [format_rational(x) for x in h.a], "b": format_rational(h.b)} for h in arr.hyperplanes],
    }


def normal_system_to_dict(ns: NormalSystem) -> dict:
    return {"m": ns.m, "vectors": [[format_rational(x) for x in v] for v in ns.reps]}


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_arrangement(arr: Arrangement, path) -> None:
    Path(path).write_text(dumps(arrangement_to_dict(arr)))

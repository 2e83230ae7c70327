"""On-disk format for geometric types.

A type file is a UTF-8 JSON object::

    {
      "format_version": "1",
      "n": 1,
      "hv": [[2, 2]],
      "rho": [[1, 1], [1, 2]],
      "epsilon": [1, 1]
    }

``rho`` and ``epsilon`` are listed over horizontal labels in lexicographic
``(i, j)`` order.  Indices are 1-based.
"""

from __future__ import annotations

import json
from pathlib import Path

from .codes import parse_bicode, parse_onesided  # noqa: F401  (re-exported)
from .core import GeometricType, validate
from .errors import InvalidGeometricType, ParseError

FORMAT_VERSION = "1"


def type_to_dict(T: GeometricType) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "n": T.n,
        "hv": [list(p) for p in T.hv],
        "rho": [list(t) for t in T.rho],
        "epsilon": list(T.eps),
    }


def dumps(T: GeometricType) -> str:
    d = type_to_dict(T)
    lines = [f"  {json.dumps(key)}: {json.dumps(val, separators=(', ', ': '))}" for key, val in d.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads_raw(text: str) -> dict:
    """Parse a type file into a raw candidate quadruple (not yet validated)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("type file must hold a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    missing = [key for key in ("n", "hv", "rho", "epsilon") if key not in data]
    if missing:
        raise ParseError(f"missing fields: {', '.join(missing)}")
    return {"n": data["n"], "hv": data["hv"], "rho": data["rho"], "eps": data["epsilon"]}


def loads(text: str) -> GeometricType:
    raw = loads_raw(text)
    report = validate(raw)
    if not report.ok:
        raise InvalidGeometricType(report)
    return GeometricType(raw["n"], raw["hv"], raw["rho"], raw["eps"])


def read_type(path) -> GeometricType:
    return loads(Path(path).read_text(encoding="utf-8"))


def write_type(T: GeometricType, path):
    Path(path).write_text(dumps(T), encoding="utf-8")

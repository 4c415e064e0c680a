"""Network documents and analysis reports.

A network document is a JSON object::

    {"vertices": 3, "edges": [[1, 2, 1.0], [2, 3, 1.0]],
     "reference": 1, "scale": 1.0, "adjacency_mode": false}

``reference``, ``scale`` and ``adjacency_mode`` are optional.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Union

from .errors import SpinNetworkError
from .network import SpinNetwork, from_edge_list

SIGNIFICANT_DIGITS = 12


class NetworkDocumentError(SpinNetworkError, ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"field {field!r}: {message}")


def parse_document(text: str) -> SpinNetwork:
    """Parse a JSON network document into a validated network."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkDocumentError("<document>", f"not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise NetworkDocumentError("<document>", "top level must be an object")

    unknown = set(doc) - {"vertices", "edges", "reference", "scale", "adjacency_mode"}
    if unknown:
        raise NetworkDocumentError(sorted(unknown)[0], "unknown field")

    n = doc.get("vertices")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NetworkDocumentError("vertices", f"expected a positive integer, got {n!r}")

    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise NetworkDocumentError("edges", "expected a list of [i, j, J] triples")
    for idx, edge in enumerate(edges):
        if (
            not isinstance(edge, list)
            or len(edge) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in edge[:2])
            or isinstance(edge[2], bool)
            or not isinstance(edge[2], (int, float))
        ):
            raise NetworkDocumentError(f"edges[{idx}]", f"expected [i, j, J], got {edge!r}")

    reference = doc.get("reference", 1)
    if isinstance(reference, bool) or not isinstance(reference, int):
        raise NetworkDocumentError("reference", f"expected an integer, got {reference!r}")
    scale = doc.get("scale", 1.0)
    if isinstance(scale, bool) or not isinstance(scale, (int, float)):
        raise NetworkDocumentError("scale", f"expected a real number, got {scale!r}")
    mode = doc.get("adjacency_mode", False)
    if not isinstance(mode, bool):
        raise NetworkDocumentError("adjacency_mode", f"expected true or false, got {mode!r}")

    return from_edge_list(n, [tuple(e) for e in edges], reference, float(scale), mode)


def load_document(path: Union[str, Path]) -> SpinNetwork:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def dump_document(net: SpinNetwork) -> str:
    """Serialise a network; :func:`parse_document` inverts this exactly."""
    doc = {
        "vertices": net.vertex_count,
        "edges": [[i, j, c] for i, j, c in net.edges],
        "reference": net.reference,
        "scale": net.scale,
        "adjacency_mode": net.adjacency_mode,
    }
    return json.dumps(doc, indent=2) + "\n"


def round_sig(x: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    if not math.isfinite(x):
        return x
    # +0.0 folds negative zero
    return float(f"{x:.{digits}g}") + 0.0


def _rounded(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    if hasattr(obj, "item"):
        return _rounded(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dump_report(report: dict) -> str:
    """Deterministic JSON: insertion-ordered keys, floats at 12 significant digits."""
    return json.dumps(_rounded(report), indent=2) + "\n"

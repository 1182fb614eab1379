"""JSON file formats for graphs and certificates.

Graph files carry either a co-chain encoding (fields ``l_size``, ``m_size``,
``thresholds``) or a general graph (fields ``n``, ``edges``); the reader
detects which by the fields present.  Certificate files carry the method
tag, the hitting edge list, the packing triangle list, both sizes, and the
verification flags, all in canonical sorted order so files diff cleanly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .certify import Certificate
from .graphs import CoChainGraph, GeneralGraph, build_cochain

AnyGraph = Union[CoChainGraph, GeneralGraph]


class GraphFormatError(ValueError):
    """The file is valid JSON but not a recognized graph document."""


def write_cochain(path: str | Path, g: CoChainGraph) -> None:
    doc = {
        "l_size": g.l_size,
        "m_size": g.m_size,
        "thresholds": list(g.thresholds),
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def write_general(path: str | Path, g: GeneralGraph) -> None:
    doc = {"n": g.n, "edges": [list(e) for e in g.edge_list()]}
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def read_graph(path: str | Path) -> AnyGraph:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError(f"{path}: expected a JSON object")
    if {"l_size", "m_size", "thresholds"} <= doc.keys():
        try:
            return build_cochain(doc["l_size"], doc["m_size"], doc["thresholds"])
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"{path}: bad co-chain document ({exc})") from exc
    if {"n", "edges"} <= doc.keys():
        try:
            return GeneralGraph.from_edges(doc["n"], (tuple(e) for e in doc["edges"]))
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"{path}: bad graph document ({exc})") from exc
    raise GraphFormatError(
        f"{path}: need fields l_size/m_size/thresholds or n/edges"
    )


def certificate_document(cert: Certificate) -> dict:
    return {
        "method": cert.method,
        "h_size": cert.h_size,
        "p_size": cert.p_size,
        "ratio_ok": cert.ratio_ok,
        "hitting_valid": True,
        "packing_valid": True,
        "hitting": [list(e) for e in cert.hitting.sorted_edges()],
        "packing": [list(t) for t in cert.packing.sorted_triangles()],
    }


def write_certificate(path: str | Path, cert: Certificate) -> None:
    Path(path).write_text(json.dumps(certificate_document(cert), indent=2) + "\n")


def read_certificate(path: str | Path) -> dict:
    doc = json.loads(Path(path).read_text())
    required = {"method", "h_size", "p_size", "ratio_ok", "hitting", "packing"}
    if not required <= doc.keys():
        raise GraphFormatError(f"{path}: missing certificate fields")
    return doc

"""JSON documents for graphs, certificates and verification reports, plus DOT export.

Graph documents use 0-based vertices with each edge written as [u, v], u < v.
Colours and colour sets inside certificate documents are 1-based, matching
the {1..m} convention used for Kneser and circular colourings.
"""

from __future__ import annotations

import json
import platform
import sys
from fractions import Fraction
from pathlib import Path

from .graph import Graph, make_graph

GRAPH_FORMAT = "graphpowers-graph"
GRAPH_VERSION = 1
REPORT_SCHEMA_VERSION = 1


def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def graph_to_dict(g: Graph) -> dict:
    doc = {
        "format": GRAPH_FORMAT,
        "version": GRAPH_VERSION,
        "name": g.name,
        "order": g.order,
        "edges": [[u, v] for u, v in g.sorted_edges()],
    }
    if g.labels is not None:
        doc["labels"] = {str(v): lab for v, lab in enumerate(g.labels)}
    if g.symmetry:
        doc["symmetry"] = g.symmetry
    return doc


def graph_from_dict(doc: dict) -> Graph:
    if doc.get("format") != GRAPH_FORMAT:
        raise ValueError(f"not a graph document (format={doc.get('format')!r})")
    if doc.get("version") != GRAPH_VERSION:
        raise ValueError(f"unsupported graph document version {doc.get('version')!r}")
    order = int(doc["order"])
    labels = None
    if doc.get("labels") is not None:
        raw = doc["labels"]
        labels = [raw.get(str(v), str(v)) for v in range(order)]
    for e in doc["edges"]:
        if len(e) != 2:
            raise ValueError(f"edge {e!r} is not a pair")
    return make_graph(order, (tuple(e) for e in doc["edges"]), labels,
                      name=doc.get("name", ""), symmetry=doc.get("symmetry"))


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=1)


def loads_graph(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def save_graph(g: Graph, path) -> None:
    Path(path).write_text(dumps_graph(g) + "\n")


def load_graph(path) -> Graph:
    if str(path) == "-":
        return loads_graph(sys.stdin.read())
    return loads_graph(Path(path).read_text())


def to_dot(g: Graph) -> str:
    name = (g.name or "G").replace('"', "'")
    lines = [f'graph "{name}" {{']
    for v in range(g.order):
        lab = g.label(v).replace('"', "'")
        lines.append(f'  {v} [label="{lab}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def environment_note() -> str:
    return f"python {platform.python_version()} on {platform.platform()}"


def report_to_dict(report, parameters: dict | None = None) -> dict:
    from . import __version__

    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool_version": __version__,
        "environment": environment_note(),
        "parameters": parameters or {},
        "summary": {
            "records": len(report.records),
            "failed": len(report.failures),
            "inconclusive": len(report.inconclusive),
        },
        "records": report.to_dicts(),
    }


def save_report(report, path, parameters: dict | None = None) -> None:
    Path(path).write_text(json.dumps(report_to_dict(report, parameters), indent=1) + "\n")

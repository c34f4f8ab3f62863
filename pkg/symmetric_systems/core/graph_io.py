"""
Graph interchange format: reading and writing systems as JSON.

    {"n": 6, "edges": [[0, 5], ...], "labels": [...],
     "generators": [[...], ...], "meta": {...}}

``labels``, ``generators`` and ``meta`` are optional.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

from symmetric_systems.core.errors import ConstructionError, GraphFormatError, InvalidPermutation
from symmetric_systems.core.graph import SystemGraph
from symmetric_systems.core.group import GeneratorSet, Permutation

logger = logging.getLogger(__name__)


def _is_index(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def graph_to_dict(graph: SystemGraph, generators: Optional[GeneratorSet] = None) -> dict:
    """Serialise a graph with keys in a fixed order."""
    data = {
        "n": graph.vertex_count,
        "edges": [[u, v] for u, v in graph.edges()],
    }
    if graph.labels is not None:
        data["labels"] = list(graph.labels)
    if generators is not None:
        data["generators"] = [list(g.images) for g in generators]
    if graph.meta is not None:
        data["meta"] = graph.meta
    return data


def graph_from_dict(data: dict) -> Tuple[SystemGraph, Optional[GeneratorSet]]:
    """Load a graph (and its generators, if present) from parsed JSON."""
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    n = data.get("n")
    if not _is_index(n) or n < 1:
        raise GraphFormatError(f"field 'n' must be a positive integer, got {n!r}")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("field 'edges' must be an array of [u, v] pairs")
    for edge in edges:
        if not (isinstance(edge, list) and len(edge) == 2 and all(_is_index(x) for x in edge)):
            raise GraphFormatError(f"malformed edge {edge!r}")
        if edge[0] >= edge[1]:
            raise GraphFormatError(f"edge {edge!r} must be written as [u, v] with u < v")
    labels = data.get("labels")
    if labels is not None and not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
        raise GraphFormatError("field 'labels' must be an array of strings")
    meta = data.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise GraphFormatError("field 'meta' must be an object")
    try:
        graph = SystemGraph.from_edges(n, edges, labels=labels, meta=meta)
    except ConstructionError as e:
        raise GraphFormatError(str(e)) from e

    generators = None
    raw_gens = data.get("generators")
    if raw_gens:
        if not isinstance(raw_gens, list) or not all(
            isinstance(images, list) and all(_is_index(x) for x in images) for images in raw_gens
        ):
            raise GraphFormatError("field 'generators' must be an array of integer image arrays")
        try:
            gens = [Permutation(tuple(images)) for images in raw_gens]
            generators = GeneratorSet(n, tuple(gens))
        except (InvalidPermutation, TypeError) as e:
            raise GraphFormatError(f"invalid generators: {e}") from e
    return graph, generators


def dumps_graph(graph: SystemGraph, generators: Optional[GeneratorSet] = None) -> str:
    return json.dumps(graph_to_dict(graph, generators), indent=2, ensure_ascii=False)


def save_graph(path: str, graph: SystemGraph, generators: Optional[GeneratorSet] = None) -> str:
    filepath = Path(path)
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(dumps_graph(graph, generators))
        f.write("\n")
    logger.info("Saved graph with %d vertices to %s", graph.vertex_count, filepath)
    return str(filepath)


def load_graph(path: str) -> Tuple[SystemGraph, Optional[GeneratorSet]]:
    """Load from a file path, or from standard input when ``path`` is ``-``."""
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise GraphFormatError(f"could not parse graph JSON from {path}: {e}") from e
    except OSError as e:
        raise GraphFormatError(f"could not read {path}: {e}") from e
    return graph_from_dict(data)

"""File formats: exact distance tables, edge lists, JSON documents.

Every numeric value rides through Fraction, never float. CSV distance
entries and JSON number literals are converted from their decimal text
directly (json's parse_float hands us the raw literal), so what the
file says is exactly what the relation sees. Serialized fractions use
the n/d form of str(Fraction).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .closure import AdditiveClosure, Cover
from .complexes import SimplicialComplex, explicit_complex
from .relations import FiniteSpace, Relation, SemiPseudometric, graph_relation

SCHEMA = "1"


class ParseError(ValueError):
    """Input file rejected; carries the one-based line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class SpaceDocument:
    """One parsed input: a space plus one kind of structure on it.

    kind is one of distance, graph, closure, complex; exactly the
    matching payload field is populated. cover_sets may accompany a
    closure document.
    """

    kind: str
    labels: tuple[str, ...]
    distances: tuple[tuple[Fraction, ...], ...] | None = None
    edges: tuple[tuple[int, int], ...] | None = None
    directed: bool = False
    neighborhoods: tuple[tuple[int, ...], ...] | None = None
    simplices: tuple[tuple[int, ...], ...] | None = None
    cover_sets: tuple[tuple[int, ...], ...] | None = None

    def space(self) -> FiniteSpace:
        return FiniteSpace(self.labels)


def _fraction(text: str, line: int | None = None) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact number: {text.strip()!r}", line) from exc


# --------------------------------------------------------------------------
# distance tables as CSV


def parse_distance_csv(text: str) -> SpaceDocument:
    """Square table: header row of labels, rows led by their own label.

    Entries are decimal or n/d strings, parsed exactly. The table must
    be symmetric with a zero diagonal, which conversion enforces.
    """
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError("empty distance table")
    header = [c.strip() for c in rows[0]]
    if header and header[0] == "":
        header = header[1:]
    if not header:
        raise ParseError("header row names no points", 1)
    if len(set(header)) != len(header):
        raise ParseError("duplicate labels in header", 1)
    n = len(header)
    if len(rows) - 1 != n:
        raise ParseError(f"expected {n} data rows, found {len(rows) - 1}")
    table = []
    for i, row in enumerate(rows[1:], start=2):
        cells = [c.strip() for c in row]
        if len(cells) != n + 1:
            raise ParseError(f"expected {n + 1} cells, found {len(cells)}", i)
        if cells[0] != header[i - 2]:
            raise ParseError(f"row label {cells[0]!r} does not match header {header[i - 2]!r}", i)
        table.append(tuple(_fraction(c, i) for c in cells[1:]))
    return SpaceDocument(kind="distance", labels=tuple(header), distances=tuple(table))


def serialize_distance_csv(doc: SpaceDocument) -> str:
    if doc.kind != "distance" or doc.distances is None:
        raise ValueError("not a distance document")
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow([""] + list(doc.labels))
    for label, row in zip(doc.labels, doc.distances):
        w.writerow([label] + [str(v) for v in row])
    return out.getvalue()


def document_to_metric(doc: SpaceDocument) -> SemiPseudometric:
    if doc.kind != "distance" or doc.distances is None:
        raise ValueError("not a distance document")
    try:
        return SemiPseudometric(doc.space(), doc.distances)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# --------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> SpaceDocument:
    """Whitespace-separated edges, one per line.

    "a b" is an undirected edge, "a -> b" a directed one; a single
    label on a line declares an isolated point. Any arrow anywhere
    makes the whole document directed, and plain edges then stand for
    both directions. Comments start with #.
    """
    lines = text.splitlines()
    parsed = []
    directed = False
    for no, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) == 1:
            parsed.append((no, tokens[0], None, False))
        elif len(tokens) == 2:
            parsed.append((no, tokens[0], tokens[1], False))
        elif len(tokens) == 3 and tokens[1] == "->":
            parsed.append((no, tokens[0], tokens[2], True))
            directed = True
        else:
            raise ParseError(f"cannot read edge {body!r}", no)
    labels: list[str] = []
    index: dict[str, int] = {}

    def point(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    edges: list[tuple[int, int]] = []
    for no, a, b, arrow in parsed:
        i = point(a)
        if b is None:
            continue
        j = point(b)
        if arrow:
            edges.append((i, j))
        elif directed:
            edges.extend([(i, j), (j, i)])
        else:
            edges.append((i, j))
    if not labels:
        raise ParseError("edge list names no points")
    # Plain edges may predate the first arrow; mirror them once the
    # document turns out to be directed.
    if directed:
        seen = set(edges)
        for no, a, b, arrow in parsed:
            if b is not None and not arrow:
                i, j = index[a], index[b]
                if (j, i) not in seen:
                    edges.append((j, i))
                    seen.add((j, i))
    return SpaceDocument(kind="graph", labels=tuple(labels), edges=tuple(edges),
                         directed=directed)


def serialize_edge_list(doc: SpaceDocument) -> str:
    if doc.kind != "graph" or doc.edges is None:
        raise ValueError("not a graph document")
    lines = []
    touched = set()
    for i, j in doc.edges:
        touched.update((i, j))
        if doc.directed:
            lines.append(f"{doc.labels[i]} -> {doc.labels[j]}")
        else:
            lines.append(f"{doc.labels[i]} {doc.labels[j]}")
    for i, label in enumerate(doc.labels):
        if i not in touched:
            lines.append(label)
    return "\n".join(lines) + "\n"


def document_to_relation(doc: SpaceDocument) -> Relation:
    if doc.kind != "graph" or doc.edges is None:
        raise ValueError("not a graph document")
    return graph_relation(doc.edges, doc.space(), directed=doc.directed)


# --------------------------------------------------------------------------
# JSON documents


def _expect(cond: bool, message: str):
    if not cond:
        raise ParseError(message)


def parse_space_json(text: str) -> SpaceDocument:
    """JSON form of any document kind; floats arrive as exact Fractions."""
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", exc.lineno) from exc
    _expect(isinstance(data, dict), "top level must be an object")
    kind = data.get("kind")
    _expect(kind in ("distance", "graph", "closure", "complex"),
            f"unknown document kind {kind!r}")
    labels = data.get("labels")
    _expect(isinstance(labels, list) and labels and all(isinstance(l, str) for l in labels),
            "labels must be a nonempty list of strings")
    labels = tuple(labels)
    n = len(labels)

    def index_list(values, what):
        _expect(isinstance(values, list), f"{what} must be a list")
        out = []
        for v in values:
            _expect(isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n,
                    f"{what} entry {v!r} is not a point index")
            out.append(v)
        return tuple(out)

    if kind == "distance":
        table = data.get("distances")
        _expect(isinstance(table, list) and len(table) == n, "distances must be an n x n table")
        rows = []
        for row in table:
            _expect(isinstance(row, list) and len(row) == n, "distances must be an n x n table")
            vals = []
            for v in row:
                if isinstance(v, str):
                    vals.append(_fraction(v))
                elif isinstance(v, (int, Fraction)) and not isinstance(v, bool):
                    vals.append(Fraction(v))
                else:
                    raise ParseError(f"distance entry {v!r} is not a number")
            rows.append(tuple(vals))
        return SpaceDocument(kind="distance", labels=labels, distances=tuple(rows))

    if kind == "graph":
        edges = data.get("edges")
        _expect(isinstance(edges, list), "edges must be a list of pairs")
        pairs = []
        for e in edges:
            _expect(isinstance(e, list) and len(e) == 2, f"edge {e!r} is not a pair")
            pairs.append(tuple(index_list(e, "edge")))
        directed = data.get("directed", False)
        _expect(isinstance(directed, bool), "directed must be a boolean")
        return SpaceDocument(kind="graph", labels=labels, edges=tuple(pairs),
                             directed=directed)

    if kind == "closure":
        nbhd = data.get("neighborhoods")
        _expect(isinstance(nbhd, list) and len(nbhd) == n,
                "neighborhoods must list one set per point")
        hoods = tuple(tuple(sorted(set(index_list(h, "neighborhood")))) for h in nbhd)
        cover = data.get("cover")
        cover_sets = None
        if cover is not None:
            _expect(isinstance(cover, list) and cover, "cover must be a nonempty list of sets")
            cover_sets = tuple(tuple(sorted(set(index_list(s, "cover set")))) for s in cover)
        return SpaceDocument(kind="closure", labels=labels, neighborhoods=hoods,
                             cover_sets=cover_sets)

    tops = data.get("simplices")
    _expect(isinstance(tops, list), "simplices must be a list of vertex lists")
    simplices = tuple(tuple(sorted(set(index_list(s, "simplex")))) for s in tops)
    _expect(all(simplices), "simplices must be nonempty")
    return SpaceDocument(kind="complex", labels=labels, simplices=simplices)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_jsonable(v) for v in sorted(obj)]
    return obj


def serialize_space_json(doc: SpaceDocument) -> str:
    body: dict = {"schema": SCHEMA, "kind": doc.kind, "labels": list(doc.labels)}
    if doc.kind == "distance":
        body["distances"] = _jsonable(doc.distances)
    elif doc.kind == "graph":
        body["edges"] = _jsonable(doc.edges)
        body["directed"] = doc.directed
    elif doc.kind == "closure":
        body["neighborhoods"] = _jsonable(doc.neighborhoods)
        if doc.cover_sets is not None:
            body["cover"] = _jsonable(doc.cover_sets)
    else:
        body["simplices"] = _jsonable(doc.simplices)
    return json.dumps(body, indent=2) + "\n"


def document_to_closure(doc: SpaceDocument) -> AdditiveClosure:
    if doc.kind != "closure" or doc.neighborhoods is None:
        raise ValueError("not a closure document")
    try:
        return AdditiveClosure(doc.space(), tuple(frozenset(h) for h in doc.neighborhoods))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def document_cover(doc: SpaceDocument) -> Cover:
    if doc.cover_sets is None:
        raise ParseError("document carries no cover")
    try:
        return Cover(doc.space(), tuple(frozenset(s) for s in doc.cover_sets))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def document_to_complex(doc: SpaceDocument, max_dim: int | None = None) -> SimplicialComplex:
    if doc.kind != "complex" or doc.simplices is None:
        raise ValueError("not a complex document")
    try:
        return explicit_complex(doc.space(), doc.simplices, max_dim=max_dim)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_document(text: str, fmt: str) -> SpaceDocument:
    """Dispatch on a format name: csv, edges, or json."""
    if fmt == "csv":
        return parse_distance_csv(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "json":
        return parse_space_json(text)
    raise ParseError(f"unknown input format {fmt!r}")


def guess_format(path: str) -> str:
    lowered = path.lower()
    if lowered.endswith(".csv"):
        return "csv"
    if lowered.endswith(".json"):
        return "json"
    return "edges"


# --------------------------------------------------------------------------
# result documents


def result_document(command: str, parameters: dict, results: dict) -> dict:
    """Envelope for machine-readable command output; field order is fixed."""
    return {
        "schema": SCHEMA,
        "tool": "vrips",
        "version": __version__,
        "command": command,
        "generated_at": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        "parameters": _jsonable(parameters),
        "results": _jsonable(results),
    }


def serialize_result(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_result(text: str) -> dict:
    return json.loads(text, parse_float=Fraction)


def results_equal(a: dict, b: dict) -> bool:
    """Equality of result documents, ignoring the timestamp."""
    trimmed = [{k: v for k, v in d.items() if k != "generated_at"} for d in (a, b)]
    return trimmed[0] == trimmed[1]

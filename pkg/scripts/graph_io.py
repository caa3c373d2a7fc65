"""Text formats: graphs, triplets, explicit models and equivalence classes.

Graph file:

    nodes a b c d
    # comment
    b -> a
    a -- c

Model file:

    model a b c
    a | c | b

Serialization is canonical (nodes in label order, then lines, then arrows
sorted by tail and head), so parse -> serialize is the identity on
serialized text.
"""
import re

from scripts.depmodel import ExplicitModel
from scripts.errors import ChainGraphError, ParseError
from scripts.hybrid_graph import LABEL_RE, HybridGraph, build_graph
from scripts.separation import Triplet

TOKEN_RE = re.compile(r"\S+")
EDGE_TOKENS = ("->", "<-", "--")
CLASS_SEPARATOR = "---"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokens(line: str) -> list:
    """(column, token) pairs, columns 1-based."""
    return [(m.start() + 1, m.group()) for m in TOKEN_RE.finditer(_strip_comment(line))]


def _content_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if tokens:
            yield number, line, tokens


def _header_labels(tokens, keyword, number) -> list:
    column, head = tokens[0]
    if head != keyword:
        raise ParseError(f"expected '{keyword}' header, got {head!r}", number, column)
    labels = []
    for column, label in tokens[1:]:
        if not LABEL_RE.fullmatch(label):
            raise ParseError(f"invalid node label {label!r}", number, column)
        labels.append(label)
    if not labels:
        raise ParseError(f"'{keyword}' header lists no nodes", number, column)
    return labels


# ======================
# GRAPHS
# ======================

def parse_graph(text: str) -> HybridGraph:
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError("empty graph file, expected a 'nodes' line", 1)
    number, _, tokens = first
    labels = _header_labels(tokens, "nodes", number)

    specs = []
    for number, _, tokens in lines:
        if len(tokens) != 3:
            raise ParseError("expected '<u> -> <v>' or '<u> -- <v>'", number, tokens[0][0])
        (cu, u), (ck, kind), (cv, v) = tokens
        if kind not in EDGE_TOKENS:
            raise ParseError(f"unknown edge token {kind!r}", number, ck)
        for column, label in ((cu, u), (cv, v)):
            if not LABEL_RE.fullmatch(label):
                raise ParseError(f"invalid node label {label!r}", number, column)
        specs.append((number, cu, (u, v, kind)))

    # validate edges one at a time so an error keeps its line number
    try:
        graph = build_graph(labels)
    except ChainGraphError as exc:
        raise ParseError(str(exc), 1) from exc
    accepted = []
    for number, column, spec in specs:
        try:
            build_graph(labels, accepted + [spec])
        except ChainGraphError as exc:
            raise ParseError(str(exc), number, column) from exc
        accepted.append(spec)
    return build_graph(labels, accepted) if accepted else graph


def serialize_graph(graph: HybridGraph) -> str:
    out = ["nodes " + " ".join(graph.nodes)]
    out.extend(f"{u} -- {v}" for u, v in graph.lines())
    out.extend(f"{tail} -> {head}" for tail, head in graph.arrows())
    return "\n".join(out) + "\n"


def serialize_class(members) -> str:
    return (CLASS_SEPARATOR + "\n").join(serialize_graph(m) for m in members)


def read_graph(path) -> HybridGraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


# ======================
# TRIPLETS
# ======================

def _label_list(part: str, number: int, column: int) -> list:
    labels = [item.strip() for item in part.split(",")] if part.strip() else []
    for label in labels:
        if not LABEL_RE.fullmatch(label):
            raise ParseError(f"invalid node label {label!r}", number, column)
    return labels


def parse_triplet(text: str, line: int = 1) -> Triplet:
    """`X | Y | Z` with comma-separated labels; Z (and its bar) may be omitted."""
    parts = text.split("|")
    if len(parts) not in (2, 3):
        raise ParseError("triplet must read 'X | Y | Z'", line)
    columns = [1]
    for part in parts[:-1]:
        columns.append(columns[-1] + len(part) + 1)
    x, y = (_label_list(p, line, c) for p, c in zip(parts[:2], columns[:2]))
    z = _label_list(parts[2], line, columns[2]) if len(parts) == 3 else []
    try:
        return Triplet(x, y, z)
    except ChainGraphError as exc:
        raise ParseError(str(exc), line) from exc


def format_triplet(triplet: Triplet) -> str:
    return str(triplet)


# ======================
# MODELS
# ======================

def parse_model(text: str) -> ExplicitModel:
    lines = _content_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError("empty model file, expected a 'model' line", 1)
    number, _, tokens = first
    labels = _header_labels(tokens, "model", number)
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate node in model header", number)
    known = set(labels)

    listed = []
    for number, line, tokens in lines:
        triplet = parse_triplet(_strip_comment(line).strip(), number)
        unknown = triplet.nodes - known
        if unknown:
            raise ParseError("unknown node(s): " + ", ".join(sorted(unknown)), number,
                             tokens[0][0])
        listed.append(triplet)
    return ExplicitModel(labels, listed)


def serialize_model(model: ExplicitModel) -> str:
    out = ["model " + " ".join(model.nodes)]
    out.extend(str(t) for t in sorted(model.listed, key=Triplet.sort_key))
    return "\n".join(out) + "\n"


def read_model(path) -> ExplicitModel:
    with open(path, encoding="utf-8") as handle:
        return parse_model(handle.read())

import sys

from scripts.graph_io import serialize_graph
from scripts.ui.dot_render import write_dot


def add_dot_argument(parser):
    parser.add_argument("--dot", metavar="PATH", help="also write a DOT rendering to PATH")


def emit_graph(graph, args) -> None:
    sys.stdout.write(serialize_graph(graph))
    if getattr(args, "dot", None):
        write_dot(graph, args.dot)


def emit_lines(lines) -> None:
    for line in lines:
        sys.stdout.write(f"{line}\n")


def trace_to_stderr(event) -> None:
    sys.stderr.write(f"trace {event}\n")

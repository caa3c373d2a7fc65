from scripts.graph_io import read_graph
from scripts.hybrid_graph import component_chain, components
from scripts.ui.output import emit_lines

HELP = "Connectivity components of FILE, one per line."


def add_arguments(parser):
    parser.add_argument("file", help="graph file")
    parser.add_argument("--chain", action="store_true",
                        help="list components in chain order (requires a chain graph)")


def render(args) -> int:
    graph = read_graph(args.file)
    if args.chain:
        blocks = component_chain(graph).blocks
    else:
        blocks = components(graph)
    emit_lines(" ".join(sorted(block)) for block in blocks)
    return 0

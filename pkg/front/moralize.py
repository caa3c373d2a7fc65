from scripts.graph_io import read_graph
from scripts.separation import moral_graph, moral_graph_component_variant
from scripts.ui.output import add_dot_argument, emit_graph

HELP = "Moral graph of the chain graph in FILE."


def add_arguments(parser):
    parser.add_argument("file", help="chain graph file")
    parser.add_argument("--components", action="store_true",
                        help="join parents per connectivity component instead of per complex")
    add_dot_argument(parser)


def render(args) -> int:
    graph = read_graph(args.file)
    if args.components:
        emit_graph(moral_graph_component_variant(graph), args)
    else:
        emit_graph(moral_graph(graph), args)
    return 0

from scripts.complexes import enumerate_complexes
from scripts.graph_io import read_graph
from scripts.hybrid_graph import require_chain_graph
from scripts.ui.output import emit_lines

HELP = "Complexes of the chain graph in FILE."


def add_arguments(parser):
    parser.add_argument("file", help="chain graph file")


def render(args) -> int:
    graph = read_graph(args.file)
    require_chain_graph(graph)
    emit_lines(enumerate_complexes(graph))
    return 0

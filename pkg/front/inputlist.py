from scripts.depmodel import input_list
from scripts.graph_io import format_triplet, read_graph
from scripts.hybrid_graph import component_chain
from scripts.ui.output import emit_lines

HELP = "Input list of the chain graph in FILE along its component chain."


def add_arguments(parser):
    parser.add_argument("file", help="chain graph file")


def render(args) -> int:
    graph = read_graph(args.file)
    emit_lines(format_triplet(t) for t in input_list(graph, component_chain(graph)))
    return 0

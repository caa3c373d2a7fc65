from scripts.graph_io import read_graph
from scripts.hybrid_graph import directed_pseudocycle

HELP = "Is FILE a chain graph?"


def add_arguments(parser):
    parser.add_argument("file", help="graph file")


def render(args) -> int:
    graph = read_graph(args.file)
    cycle = directed_pseudocycle(graph)
    if cycle is None:
        print("CHAIN GRAPH")
        return 0
    print("NOT A CHAIN GRAPH")
    print("directed pseudocycle: " + " ".join(cycle))
    return 1

from scripts.graph_io import parse_triplet, read_graph
from scripts.separation import is_represented

HELP = "Is <X, Y | Z> represented in the chain graph? Exit 1 when not."


def add_arguments(parser):
    parser.add_argument("file", help="chain graph file")
    parser.add_argument("triplet", help="triplet 'X|Y|Z', comma-separated labels")
    parser.add_argument("--criterion", choices=("moral", "c"), default="moral")


def render(args) -> int:
    graph = read_graph(args.file)
    triplet = parse_triplet(args.triplet)
    if is_represented(graph, triplet, args.criterion):
        print("SEPARATED")
        return 0
    print("CONNECTED")
    return 1

from scripts.complexes import markov_equivalent
from scripts.graph_io import read_graph

HELP = "Are the chain graphs in FILE1 and FILE2 Markov equivalent? Exit 1 when not."


def add_arguments(parser):
    parser.add_argument("first", metavar="FILE1")
    parser.add_argument("second", metavar="FILE2")


def render(args) -> int:
    if markov_equivalent(read_graph(args.first), read_graph(args.second)):
        print("EQUIVALENT")
        return 0
    print("NOT EQUIVALENT")
    return 1

from scripts.complexes import pattern_of
from scripts.graph_io import read_graph, read_model
from scripts.recovery import recover_pattern
from scripts.ui.output import add_dot_argument, emit_graph, trace_to_stderr

HELP = "Pattern of a chain graph FILE, or recovered from an explicit model."


def add_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("file", nargs="?", help="chain graph file")
    source.add_argument("--model", metavar="MODELFILE", help="explicit dependency model file")
    parser.add_argument("--trace", action="store_true", help="print directings to stderr")
    add_dot_argument(parser)


def render(args) -> int:
    if args.model:
        model = read_model(args.model)
        model.validate()
        trace = trace_to_stderr if args.trace else None
        emit_graph(recover_pattern(model, trace=trace), args)
    else:
        emit_graph(pattern_of(read_graph(args.file)), args)
    return 0

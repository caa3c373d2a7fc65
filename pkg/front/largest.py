from scripts.errors import ChainGraphError
from scripts.graph_io import read_graph
from scripts.recovery import DEFAULT_RULE_ORDER, RULES, recover_largest
from scripts.ui.output import add_dot_argument, emit_graph, trace_to_stderr

HELP = "Largest chain graph of the class whose pattern is in FILE."


def add_arguments(parser):
    parser.add_argument("file", help="pattern file")
    parser.add_argument("--rule-order", default=",".join(DEFAULT_RULE_ORDER),
                        help="comma-separated order of " + ", ".join(RULES))
    parser.add_argument("--trace", action="store_true", help="print bans and directings to stderr")
    add_dot_argument(parser)


def render(args) -> int:
    pattern = read_graph(args.file)
    order = tuple(name.strip() for name in args.rule_order.split(",") if name.strip())
    unknown = [name for name in order if name not in RULES]
    if unknown:
        raise ChainGraphError("unknown rule(s): " + ", ".join(unknown))
    trace = trace_to_stderr if args.trace else None
    emit_graph(recover_largest(pattern, rule_order=order, trace=trace), args)
    return 0

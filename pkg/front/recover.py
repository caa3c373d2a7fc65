from scripts.complexes import largest_cg_oracle, pattern_of
from scripts.depmodel import CGBackedModel
from scripts.errors import ChainGraphError
from scripts.graph_io import read_graph, read_model
from scripts.recovery import recover_largest, recover_pattern
from scripts.ui.output import add_dot_argument, emit_graph, trace_to_stderr

HELP = "End-to-end recovery: dependency model -> pattern -> largest chain graph."


def add_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--from-cg", metavar="FILE", help="use the model induced by a chain graph")
    source.add_argument("--model", metavar="MODELFILE", help="explicit dependency model file")
    parser.add_argument("--criterion", choices=("moral", "c"), default="moral",
                        help="criterion of the chain-graph backed model")
    parser.add_argument("--verify", action="store_true",
                        help="compare against pattern_of and the brute-force largest chain graph")
    parser.add_argument("--trace", action="store_true", help="print recovery steps to stderr")
    add_dot_argument(parser)


def render(args) -> int:
    if args.verify and not args.from_cg:
        raise ChainGraphError("--verify needs --from-cg")
    trace = trace_to_stderr if args.trace else None
    source = None
    if args.from_cg:
        source = read_graph(args.from_cg)
        model = CGBackedModel(source, criterion=args.criterion)
    else:
        model = read_model(args.model)
        model.validate()

    pattern = recover_pattern(model, trace=trace)
    largest = recover_largest(pattern, trace=trace)
    emit_graph(largest, args)

    if not args.verify:
        return 0
    ok = pattern == pattern_of(source) and largest == largest_cg_oracle(source)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1

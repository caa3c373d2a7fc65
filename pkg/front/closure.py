from scripts.depmodel import ExplicitModel, graphoid_closure, semigraphoid_closure
from scripts.graph_io import format_triplet, read_model, serialize_model
from scripts.separation import Triplet
from scripts.ui.output import emit_lines

HELP = "Graphoid (or semigraphoid) closure of the triplets listed in MODELFILE."


def add_arguments(parser):
    parser.add_argument("model", metavar="MODELFILE")
    parser.add_argument("--semigraphoid", action="store_true", help="omit the intersection axiom")
    parser.add_argument("--as-model", action="store_true",
                        help="print the closure as a model file")


def render(args) -> int:
    model = read_model(args.model)
    if args.semigraphoid:
        closure = semigraphoid_closure(model.listed, model.nodes)
    else:
        closure = graphoid_closure(model.listed, model.nodes)
    if args.as_model:
        emit_lines([serialize_model(ExplicitModel(model.nodes, closure)).rstrip("\n")])
    else:
        emit_lines(format_triplet(t) for t in sorted(closure, key=Triplet.sort_key))
    return 0

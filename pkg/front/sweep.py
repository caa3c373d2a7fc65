import sys

from scripts.report import smart_table
from scripts.sweep import PROPERTIES, run_sweep

HELP = "Run property checks over all (or random) chain graphs on N nodes."


def add_arguments(parser):
    parser.add_argument("nodes", type=int, metavar="N")
    parser.add_argument("--samples", type=int, default=None,
                        help="random family of this size instead of the exhaustive one")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--property", action="append", choices=sorted(PROPERTIES),
                        dest="properties", help="restrict to a property (repeatable)")


def render(args) -> int:
    table = run_sweep(args.nodes, properties=args.properties, samples=args.samples,
                      seed=args.seed)
    sys.stdout.write(smart_table(table, "sweep"))
    return 1 if table["mismatches"].sum() else 0

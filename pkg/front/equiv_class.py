import sys

import pandas as pd

from scripts.complexes import equivalence_class, largest_cg_oracle
from scripts.graph_io import read_graph, serialize_class
from scripts.report import smart_table

HELP = "Markov equivalence class of the chain graph in FILE."


def add_arguments(parser):
    parser.add_argument("file", help="chain graph file")
    parser.add_argument("--summary", action="store_true",
                        help="print a table of the members instead of the graphs")


def summary_frame(members, largest) -> pd.DataFrame:
    rows = []
    for index, member in enumerate(members, start=1):
        rows.append({
            "member": index,
            "arrows": len(member.arrows()),
            "lines": len(member.lines()),
            "largest": member == largest,
            "edges": " ".join(f"{u}{kind.value}{v}" for u, v, kind in member.edges),
        })
    return pd.DataFrame(rows, columns=["member", "arrows", "lines", "largest", "edges"])


def render(args) -> int:
    graph = read_graph(args.file)
    members = equivalence_class(graph)
    if args.summary:
        sys.stdout.write(smart_table(summary_frame(members, largest_cg_oracle(graph)),
                                     "class_summary"))
    else:
        sys.stdout.write(serialize_class(members))
    return 0

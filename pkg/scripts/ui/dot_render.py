import pydot

from scripts.hybrid_graph import HybridGraph


def render_dot(graph: HybridGraph, name: str = "G") -> pydot.Dot:
    dot = pydot.Dot(name, graph_type="digraph")
    for node in graph.nodes:
        dot.add_node(pydot.Node(node, shape="ellipse"))

    # lines first, drawn without heads
    for u, v in graph.lines():
        dot.add_edge(pydot.Edge(u, v, dir="none"))
    for tail, head in graph.arrows():
        dot.add_edge(pydot.Edge(tail, head))

    return dot


def dot_source(graph: HybridGraph, name: str = "G") -> str:
    return render_dot(graph, name).to_string()


def write_dot(graph: HybridGraph, path, name: str = "G") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dot_source(graph, name))

"""
Graphviz DOT export of tableau graphs.
"""
from epitab.tableau.graph import NodeKind, TableauGraph

STAGES = ('pretableau', 'initial', 'final')


def _gvquote(text: str) -> str:
    return '"{}"'.format(text.replace('\\', '\\\\').replace('"', r'\"'))


def _node_name(node_id: int) -> str:
    return f"n{node_id}"


def export_dot(graph: TableauGraph, stage: str = 'final') -> str:
    """
    Render a tableau graph as a DOT digraph.

    Prestates are dashed boxes and states solid boxes, both labeled with their
    formula sets. Double edges are drawn as unlabeled double lines; marked
    edges carry their formula.

    Args:
        graph: Tableau graph of any phase
        stage: Phase name used as the graph name

    Returns:
        DOT source text, deterministic for a given graph
    """
    if stage not in STAGES:
        raise ValueError(f"Unknown tableau stage: {stage}. Choose from: {STAGES}")

    lines = [f"digraph {stage} {{", "  node [shape=box fontname=monospace];"]
    for node in graph.nodes():
        prefix = "pre" if node.kind is NodeKind.PRESTATE else "state"
        label = _gvquote(f"{prefix}{node.id}: {node.formulas.render()}")
        style = " style=dashed" if node.kind is NodeKind.PRESTATE else ""
        lines.append(f"  {_node_name(node.id)} [label={label}{style}];")

    for source, target in graph.double_edges():
        lines.append(f'  {_node_name(source)} -> {_node_name(target)} [color="black:black"];')

    for edge in graph.marked_edges():
        lines.append(
            f"  {_node_name(edge.source)} -> {_node_name(edge.target)} "
            f"[label={_gvquote(str(edge.label))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"

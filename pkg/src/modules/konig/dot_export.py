"""
König representation as a graphviz graph: edge nodes are boxes, vertex nodes circles, removed vertices dashed.

    python -m src.main konig instance.hgr --edges x,y,z --remove 1,2 > konig.gv
    dot -Tpng -O konig.gv
"""
from src.services.hypergraph import Hypergraph
from src.services.matching import KonigGraph


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def edge_node(h: Hypergraph, d: int) -> str:
    return _quote(f'edge:{h.label(d)}')


def vertex_node(vertex: int) -> str:
    # 1-based, as in instance files
    return _quote(f'vertex:{vertex + 1}')


def export_konig_dot(h: Hypergraph, k: KonigGraph) -> str:
    removed = k.removed
    edges = sorted(k.left, key=h.label)

    lines = ['graph konig {']
    for d in edges:
        lines.append(f'\t{edge_node(h, d)} [label={_quote(h.label(d))}, shape=box];')
    for vertex in k.right:
        style = ', style=dashed' if vertex in removed else ''
        lines.append(f'\t{vertex_node(vertex)} [label="{vertex + 1}", shape=circle{style}];')
    for d in edges:
        for vertex in h.sorted_edges[d]:
            lines.append(f'\t{edge_node(h, d)} -- {vertex_node(vertex)};')
    lines.append('}')
    return '\n'.join(lines) + '\n'

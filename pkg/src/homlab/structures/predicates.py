"""Structural predicates of digraphs, computed with networkx."""

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

import networkx as nx

from homlab.structures.structure import Structure


def to_networkx(g: Structure) -> nx.DiGraph:
    """The digraph as a networkx DiGraph on nodes 0..n-1 (loops kept)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(g.elements)
    graph.add_edges_from(g.edges)
    return graph


def weak_components(g: Structure) -> List[List[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    components = [sorted(c) for c in nx.weakly_connected_components(to_networkx(g))]
    return sorted(components)


def two_colouring(g: Structure) -> Optional[Dict[int, int]]:
    """A proper 2-colouring of the undirected shadow, or None if there is none.

    Colours are normalised so that the smallest vertex of each component gets 0.
    """
    shadow = to_networkx(g).to_undirected()
    if nx.number_of_selfloops(shadow):
        return None
    colouring: Dict[int, int] = {}
    for component in sorted(sorted(c) for c in nx.connected_components(shadow)):
        sub = shadow.subgraph(component)
        try:
            colours = nx.bipartite.color(sub)
        except nx.NetworkXError:
            return None
        flip = colours[component[0]]
        colouring.update({v: c ^ flip for v, c in colours.items()})
    return dict(sorted(colouring.items()))


def odd_cycle(g: Structure) -> Optional[List[int]]:
    """An odd cycle of the undirected shadow as a vertex list, or None if it is bipartite.

    A loop at v is returned as [v].
    """
    loops = loop_vertices(g)
    if loops:
        return [loops[0]]
    shadow = to_networkx(g).to_undirected()
    for component in sorted(sorted(c) for c in nx.connected_components(shadow)):
        root = component[0]
        depth = nx.single_source_shortest_path_length(shadow, root)
        parent = dict(nx.bfs_predecessors(shadow, root))
        for u, v in sorted(shadow.subgraph(component).edges()):
            if depth[u] != depth[v]:
                continue
            left, right = [u], [v]
            while left[-1] != right[-1]:
                left.append(parent[left[-1]])
                right.append(parent[right[-1]])
            return left + right[-2::-1]
    return None


def loop_vertices(g: Structure) -> List[int]:
    return sorted(u for u, v in g.edges if u == v)


def has_directed_cycle(g: Structure) -> bool:
    """True iff the digraph contains a directed cycle (loops count)."""
    return not nx.is_directed_acyclic_graph(to_networkx(g))


@dataclass(frozen=True)
class StructurePredicates:
    has_loop: bool
    is_symmetric: bool
    is_bipartite: bool
    is_smooth: bool
    is_disjoint_union_of_directed_cycles: bool

    def as_dict(self) -> Dict[str, bool]:
        return asdict(self)


def structure_predicates(g: Structure) -> StructurePredicates:
    """Compute the basic shape flags of a digraph.

    Bipartiteness refers to the undirected shadow; a loop makes a digraph
    non-bipartite. Smooth means every vertex has an in- and an out-neighbour.
    """
    graph = to_networkx(g)
    edges = g.edges
    in_degrees = dict(graph.in_degree())
    out_degrees = dict(graph.out_degree())
    return StructurePredicates(
        has_loop=nx.number_of_selfloops(graph) > 0,
        is_symmetric=all((v, u) in edges for u, v in edges),
        is_bipartite=two_colouring(g) is not None,
        is_smooth=all(in_degrees[v] > 0 and out_degrees[v] > 0 for v in graph),
        is_disjoint_union_of_directed_cycles=all(
            in_degrees[v] == 1 and out_degrees[v] == 1 for v in graph
        ),
    )

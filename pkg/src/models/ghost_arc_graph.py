from dataclasses import dataclass
from typing import Dict, Tuple

import networkx as nx


@dataclass(frozen=True)
class GhostArcGraph:
    """
    Graph on the negative boundary components of one compressionbody whose
    edges are its ghost arcs.

    Attributes
    ----------
    vertices : tuple[str, ...]
        Negative boundary surface ids
    edges : tuple[tuple[str, str], ...]
        Ghost arcs as unordered pairs; loops and repeated pairs allowed
    """
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]


    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


    def degrees(self) -> Dict[str, int]:
        # A loop contributes 2 to the degree of its vertex
        degrees = {vertex: 0 for vertex in self.vertices}
        for a, b in self.edges:
            degrees[a] = degrees.get(a, 0) + 1
            degrees[b] = degrees.get(b, 0) + 1
        return degrees


    @property
    def isolated_vertex_count(self) -> int:
        return sum(1 for degree in self.degrees().values() if degree == 0)


    @property
    def leaf_count(self) -> int:
        return sum(1 for degree in self.degrees().values() if degree == 1)


    @property
    def component_count(self) -> int:
        if not self.vertices:
            return 0
        return nx.number_connected_components(self.to_networkx())


    def is_connected(self) -> bool:
        return self.component_count == 1

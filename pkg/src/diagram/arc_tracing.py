from collections import Counter
from dataclasses import dataclass, field
from itertools import count
from typing import Dict, List, Tuple

import networkx as nx

from exceptions.exceptions import TracingException
from models.compressionbody import normalize_edge

PLUS = "plus"
MINUS = "minus"


@dataclass
class TracedArcs:
    bridge_arcs: int = 0
    vertical_arcs: Dict[str, int] = field(default_factory=dict)
    ghost_edges: List[Tuple[str, str]] = field(default_factory=list)
    core_loops: int = 0
    pocket_trees: int = 0


class ArcTracer:
    """
    Concatenates pieces of T into arcs, loops and trees.

    Pieces are edges between nodes. Terminal nodes sit on the positive
    boundary or on a negative component of the body being assembled, junction
    nodes glue exactly two pieces together, and vertex nodes are interior
    vertices of pocket trees. After all pieces are added every junction must
    have degree 2.
    """


    def __init__(self):
        self.graph = nx.MultiGraph()
        self._ids = count()


    def terminal(self, surface_id: str = None) -> tuple:
        node = ("terminal", next(self._ids))
        if surface_id is None:
            self.graph.add_node(node, kind=PLUS)
        else:
            self.graph.add_node(node, kind=MINUS, surface=surface_id)
        return node


    def junction(self) -> tuple:
        node = ("junction", next(self._ids))
        self.graph.add_node(node, kind="junction")
        return node


    def vertex(self) -> tuple:
        node = ("vertex", next(self._ids))
        self.graph.add_node(node, kind="vertex")
        return node


    def piece(self, a: tuple, b: tuple):
        self.graph.add_edge(a, b)


    def summarize(self) -> TracedArcs:
        for node, data in self.graph.nodes(data=True):
            degree = self.graph.degree(node)
            if data["kind"] == "junction" and degree != 2:
                raise TracingException(f"junction {node[1]} has {degree} pieces, expected 2")
            if data["kind"] in (PLUS, MINUS) and degree != 1:
                raise TracingException(f"terminal {node[1]} has {degree} pieces, expected 1")
            if data["kind"] == "vertex" and degree != 3:
                raise TracingException(f"tree vertex {node[1]} has {degree} legs, expected 3")

        traced = TracedArcs()
        vertical = Counter()
        for component in nx.connected_components(self.graph):
            kinds = [self.graph.nodes[node]["kind"] for node in component]
            terminals = [node for node in component if self.graph.nodes[node]["kind"] in (PLUS, MINUS)]
            if "vertex" in kinds:
                # A pocket tree must have all three legs on the positive boundary
                if kinds.count("vertex") != 1 or any(self.graph.nodes[t]["kind"] != PLUS for t in terminals):
                    raise TracingException("tree with a leg off the positive boundary")
                traced.pocket_trees += 1
                continue
            if not terminals:
                traced.core_loops += 1
                continue
            a, b = (self.graph.nodes[t] for t in terminals)
            if a["kind"] == PLUS and b["kind"] == PLUS:
                traced.bridge_arcs += 1
            elif a["kind"] == PLUS or b["kind"] == PLUS:
                vertical[b["surface"] if a["kind"] == PLUS else a["surface"]] += 1
            else:
                traced.ghost_edges.append(normalize_edge(a["surface"], b["surface"]))
        traced.vertical_arcs = dict(vertical)
        traced.ghost_edges.sort()
        return traced

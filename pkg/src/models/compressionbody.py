from dataclasses import dataclass, field, replace
from typing import Dict, Tuple

from models.ghost_arc_graph import GhostArcGraph


def normalize_edge(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Compressionbody:
    """
    Combinatorial summary of a v.p.-compressionbody.

    A body is described by its positive boundary, its negative boundary
    components and counts of the arc types of T inside it: bridge arcs with both
    ends on the positive boundary, vertical arcs running from the positive
    boundary to a negative component, ghost arcs joining negative components,
    and core loops. Pocket trees are three-legged trees parallel to the positive
    boundary, used when capping trivalent summing spheres.

    Attributes
    ----------
    id : str
        Identifier unique within the diagram
    plus_id : str
        Surface id of the positive boundary (a thick surface)
    minus_ids : tuple[str, ...]
        Sorted surface ids of the negative boundary (thin or boundary surfaces)
    bridge_arcs : int
        Number of bridge arcs
    vertical_arcs : dict[str, int]
        Vertical arc count per negative component, with an entry for every one
    ghost_edges : tuple[tuple[str, str], ...]
        Ghost arcs as sorted pairs of negative component ids
    core_loops : int
        Number of core loops
    pocket_trees : int
        Number of boundary parallel trees with one interior vertex
    """
    id: str
    plus_id: str
    minus_ids: Tuple[str, ...] = field(default_factory=tuple)
    bridge_arcs: int = 0
    vertical_arcs: Dict[str, int] = field(default_factory=dict)
    ghost_edges: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)
    core_loops: int = 0
    pocket_trees: int = 0


    def __post_init__(self):
        minus_ids = tuple(sorted(self.minus_ids))
        vertical = {surface_id: 0 for surface_id in minus_ids}
        vertical.update({key: int(value) for key, value in self.vertical_arcs.items()})
        edges = tuple(sorted(normalize_edge(a, b) for a, b in self.ghost_edges))
        object.__setattr__(self, "minus_ids", minus_ids)
        object.__setattr__(self, "vertical_arcs", dict(sorted(vertical.items())))
        object.__setattr__(self, "ghost_edges", edges)


    def __hash__(self):
        return hash((self.id, self.plus_id, self.minus_ids, self.bridge_arcs,
                     tuple(self.vertical_arcs.items()), self.ghost_edges,
                     self.core_loops, self.pocket_trees))


    @property
    def vertical_total(self) -> int:
        return sum(self.vertical_arcs.values())


    @property
    def ghost_count(self) -> int:
        return len(self.ghost_edges)


    @property
    def arc_count(self) -> int:
        return self.bridge_arcs + self.vertical_total + self.ghost_count


    @property
    def plus_endpoints(self) -> int:
        return 2 * self.bridge_arcs + self.vertical_total + 3 * self.pocket_trees


    def minus_endpoints(self, surface_id: str) -> int:
        ghost_ends = sum((a == surface_id) + (b == surface_id) for a, b in self.ghost_edges)
        return self.vertical_arcs.get(surface_id, 0) + ghost_ends


    def ghost_graph(self) -> GhostArcGraph:
        return GhostArcGraph(vertices=self.minus_ids, edges=self.ghost_edges)


    def renamed(self, surface_map: Dict[str, str] = None, body_id: str = None) -> "Compressionbody":
        surface_map = surface_map or {}
        rename = lambda surface_id: surface_map.get(surface_id, surface_id)
        return replace(
            self,
            id=body_id if body_id is not None else self.id,
            plus_id=rename(self.plus_id),
            minus_ids=tuple(rename(s) for s in self.minus_ids),
            vertical_arcs={rename(s): count for s, count in self.vertical_arcs.items()},
            ghost_edges=tuple((rename(a), rename(b)) for a, b in self.ghost_edges),
        )


    def __str__(self):
        return f"{self.id}(plus={self.plus_id}, minus={list(self.minus_ids)})"

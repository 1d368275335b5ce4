from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from models.compressionbody import Compressionbody
from models.graph_pair_meta import GraphPairMeta
from models.surface import SurfaceComp, SurfaceRole


@dataclass(frozen=True)
class Diagram:
    """
    A multiple v.p.-bridge surface for a (3-manifold, graph) pair.

    The diagram lists the thick, thin and boundary surface components, the
    v.p.-compressionbodies they cut the pair into, and a transverse orientation
    recorded per thick or thin surface as the ordered pair of bodies the flow
    leaves and enters. Diagrams are values: every operation returns a new one.

    Attributes
    ----------
    meta : GraphPairMeta
        Data and user assertions about the pair (M, T)
    surfaces : dict[str, SurfaceComp]
        Surface components by id
    bodies : dict[str, Compressionbody]
        Compressionbodies by id
    orientation : dict[str, tuple[str, str]]
        For each thick or thin surface, the (source body, target body) pair
    """
    meta: GraphPairMeta = field(default_factory=GraphPairMeta)
    surfaces: Dict[str, SurfaceComp] = field(default_factory=dict)
    bodies: Dict[str, Compressionbody] = field(default_factory=dict)
    orientation: Dict[str, Tuple[str, str]] = field(default_factory=dict)


    def __post_init__(self):
        object.__setattr__(self, "surfaces", dict(sorted(self.surfaces.items())))
        object.__setattr__(self, "bodies", dict(sorted(self.bodies.items())))
        object.__setattr__(self, "orientation", {k: tuple(v) for k, v in sorted(self.orientation.items())})


    @classmethod
    def build(cls, meta: GraphPairMeta, surfaces: Iterable[SurfaceComp], bodies: Iterable[Compressionbody],
              orientation: Dict[str, Tuple[str, str]]) -> "Diagram":
        return cls(meta=meta, surfaces={s.id: s for s in surfaces}, bodies={b.id: b for b in bodies},
                   orientation=dict(orientation))


    def surfaces_with_role(self, role: SurfaceRole) -> List[SurfaceComp]:
        return [surface for surface in self.surfaces.values() if surface.role == role]


    @property
    def thick_surfaces(self) -> List[SurfaceComp]:
        return self.surfaces_with_role(SurfaceRole.THICK)


    @property
    def thin_surfaces(self) -> List[SurfaceComp]:
        return self.surfaces_with_role(SurfaceRole.THIN)


    @property
    def boundary_surfaces(self) -> List[SurfaceComp]:
        return self.surfaces_with_role(SurfaceRole.BOUNDARY)


    @property
    def boundary_surface_ids(self) -> List[str]:
        return [surface.id for surface in self.boundary_surfaces]


    def bodies_with_plus(self, surface_id: str) -> List[Compressionbody]:
        return [body for body in self.bodies.values() if body.plus_id == surface_id]


    def bodies_with_minus(self, surface_id: str) -> List[Compressionbody]:
        return [body for body in self.bodies.values() if surface_id in body.minus_ids]


    def adjacent_bodies(self, surface_id: str) -> List[Compressionbody]:
        return self.bodies_with_plus(surface_id) + self.bodies_with_minus(surface_id)


    def other_body(self, surface_id: str, body_id: str) -> Optional[Compressionbody]:
        for body in self.adjacent_bodies(surface_id):
            if body.id != body_id:
                return body
        return None


    def body_points_up(self, body_id: str) -> Optional[bool]:
        """
        Direction of the flow through a body.

        Returns True when the flow leaves the body through its positive
        boundary, False when it enters there, and None if unrecorded.
        """
        body = self.bodies[body_id]
        pair = self.orientation.get(body.plus_id)
        if pair is None:
            return None
        return pair[0] == body_id


    def orientation_digraph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.bodies)
        for surface_id, (source, target) in self.orientation.items():
            graph.add_edge(source, target, surface=surface_id)
        return graph


    def with_changes(self, surfaces: Dict[str, SurfaceComp] = None, bodies: Dict[str, Compressionbody] = None,
                     orientation: Dict[str, Tuple[str, str]] = None, meta: GraphPairMeta = None) -> "Diagram":
        return replace(
            self,
            meta=meta if meta is not None else self.meta,
            surfaces=surfaces if surfaces is not None else dict(self.surfaces),
            bodies=bodies if bodies is not None else dict(self.bodies),
            orientation=orientation if orientation is not None else dict(self.orientation),
        )


    def __str__(self):
        return f"Diagram({len(self.surfaces)} surfaces, {len(self.bodies)} bodies)"

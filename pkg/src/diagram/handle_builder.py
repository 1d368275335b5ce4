from dataclasses import dataclass
from typing import Dict, List, Optional

import networkx as nx

from exceptions.exceptions import *
from diagram.arc_tracing import ArcTracer
from diagram.diagram_validation import DiagramValidation
from models.compressionbody import Compressionbody
from models.handle_presentation import HandlePresentation, OneHandle, ZeroHandle, ZeroHandleKind
from models.surface import SurfaceComp, SurfacePart, SurfaceRole


@dataclass(frozen=True)
class DerivedSummary:
    """
    A compressionbody summary read off a handle presentation, together with
    the (genus, punctures) data of its boundary components.
    """
    body: Compressionbody
    plus: SurfacePart
    minus: Dict[str, SurfacePart]


    def surfaces(self) -> Dict[str, SurfaceComp]:
        surfaces = {self.body.plus_id: SurfaceComp(self.body.plus_id, self.plus.genus, self.plus.punctures, SurfaceRole.THICK)}
        for surface_id, part in self.minus.items():
            surfaces[surface_id] = SurfaceComp(surface_id, part.genus, part.punctures, SurfaceRole.THIN)
        return surfaces


def _component_count(presentation: HandlePresentation) -> int:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(presentation.zero_handles)))
    graph.add_edges_from(handle.ends for handle in presentation.one_handles)
    return nx.number_connected_components(graph)


def derive_summary(presentation: HandlePresentation, body_id: str = "C", plus_id: str = "plus") -> DerivedSummary:
    """
    Read the compressionbody summary off a handle presentation.

    The positive boundary comes from Euler characteristic bookkeeping; the arc
    decorations come from tracing the arcs of the 0-handles through the cores
    of the cored 1-handles.

    Parameters
    ----------
    presentation : HandlePresentation
        0-handles and 1-handles of the body
    body_id : str
        Id given to the resulting body
    plus_id : str
        Id given to its positive boundary

    Returns
    -------
    DerivedSummary
        The body with its boundary data

    Raises
    ------
    DanglingEndpointException
        A cored handle binds a missing or already bound endpoint
    DisconnectedBodyException
        The handles do not form a connected body
    NegativeGenusException
        The positive boundary is not a closed orientable surface
    """
    zero_handles = presentation.zero_handles
    components = _component_count(presentation)
    if components != 1:
        raise DisconnectedBodyException(components)

    tracer = ArcTracer()
    ends = {}
    minus = {}
    for z, handle in enumerate(zero_handles):
        for e in range(handle.endpoint_count):
            ends[(z, e)] = tracer.junction()
        if handle.kind == ZeroHandleKind.TRIVIAL_BALL_ARC:
            tracer.piece(ends[(z, 0)], ends[(z, 1)])
        elif handle.kind == ZeroHandleKind.TRIVIAL_BALL_TREE:
            vertex = tracer.vertex()
            for e in range(3):
                tracer.piece(vertex, ends[(z, e)])
        elif handle.kind == ZeroHandleKind.PRODUCT:
            if handle.surface_id in minus:
                raise DuplicateIdException("surface", handle.surface_id)
            minus[handle.surface_id] = SurfacePart(handle.genus, handle.strands)
            for e in range(handle.strands):
                tracer.piece(ends[(z, e)], tracer.terminal(handle.surface_id))

    bound = set()
    cored = 0
    for index, handle in enumerate(presentation.one_handles):
        if not handle.cored:
            continue
        if handle.endpoint_bindings is None:
            raise DanglingEndpointException(index, "cored handle without endpoint bindings")
        sites = [(handle.ends[0], handle.endpoint_bindings[0]), (handle.ends[1], handle.endpoint_bindings[1])]
        for site in sites:
            if site not in ends:
                raise DanglingEndpointException(index, f"zero-handle {site[0]} has no endpoint {site[1]}")
            if site in bound:
                raise DanglingEndpointException(index, f"endpoint {site[1]} of zero-handle {site[0]} is already bound")
        if sites[0] == sites[1]:
            raise DanglingEndpointException(index, "both feet bind the same endpoint")
        bound.update(sites)
        tracer.piece(ends[sites[0]], ends[sites[1]])
        cored += 1

    # Unbound endpoints are punctures of the positive boundary
    for site, node in ends.items():
        if site not in bound:
            tracer.piece(node, tracer.terminal())

    euler = sum(handle.top_euler_characteristic for handle in zero_handles) - 2 * len(presentation.one_handles)
    if euler > 2 or (2 - euler) % 2:
        raise NegativeGenusException(euler)
    punctures = len(ends) - 2 * cored

    traced = tracer.summarize()
    body = Compressionbody(
        id=body_id,
        plus_id=plus_id,
        minus_ids=tuple(minus),
        bridge_arcs=traced.bridge_arcs,
        vertical_arcs=traced.vertical_arcs,
        ghost_edges=tuple(traced.ghost_edges),
        core_loops=traced.core_loops,
        pocket_trees=traced.pocket_trees,
    )
    return DerivedSummary(body=body, plus=SurfacePart((2 - euler) // 2, punctures), minus=minus)


def witness(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> Optional[HandlePresentation]:
    """
    Build a handle presentation realizing a summary.

    Products carry the vertical and ghost strands, ghost arcs become cored
    1-handles between strands, bridge arcs and core loops get trivial balls of
    their own, components are joined by plain 1-handles and the remaining
    genus is added by self-attached plain 1-handles.

    Returns
    -------
    Optional[HandlePresentation]
        None when the genus of the positive boundary is below what the
        construction needs
    """
    zero_handles: List[ZeroHandle] = []
    one_handles: List[OneHandle] = []
    next_strand = {}
    product_index = {}

    for surface_id in body.minus_ids:
        product_index[surface_id] = len(zero_handles)
        next_strand[surface_id] = 0
        zero_handles.append(ZeroHandle(ZeroHandleKind.PRODUCT, surface_id=surface_id,
                                       genus=surfaces[surface_id].genus, strands=body.minus_endpoints(surface_id)))

    # Vertical strands come first on each product, ghost strands after them
    for surface_id in body.minus_ids:
        next_strand[surface_id] = body.vertical_arcs.get(surface_id, 0)
    for a, b in body.ghost_edges:
        end_a = next_strand[a]
        next_strand[a] += 1
        end_b = next_strand[b]
        next_strand[b] += 1
        one_handles.append(OneHandle((product_index[a], product_index[b]), cored=True, endpoint_bindings=(end_a, end_b)))

    for _ in range(body.bridge_arcs):
        zero_handles.append(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC))
    for _ in range(body.core_loops):
        z = len(zero_handles)
        zero_handles.append(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC))
        one_handles.append(OneHandle((z, z), cored=True, endpoint_bindings=(0, 1)))
    for _ in range(body.pocket_trees):
        zero_handles.append(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_TREE))
    if not zero_handles:
        zero_handles.append(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_EMPTY))

    graph = nx.Graph()
    graph.add_nodes_from(range(len(zero_handles)))
    graph.add_edges_from(handle.ends for handle in one_handles)
    representatives = sorted(min(component) for component in nx.connected_components(graph))
    for left, right in zip(representatives, representatives[1:]):
        one_handles.append(OneHandle((left, right)))

    euler = sum(handle.top_euler_characteristic for handle in zero_handles) - 2 * len(one_handles)
    extra = surfaces[body.plus_id].genus - (2 - euler) // 2
    if extra < 0:
        return None
    one_handles.extend(OneHandle((0, 0)) for _ in range(extra))
    return HandlePresentation(zero_handles=tuple(zero_handles), one_handles=tuple(one_handles))


def realizable(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> bool:
    if not DiagramValidation.validate_body_in(body, surfaces).is_valid:
        return False
    return witness(body, surfaces) is not None

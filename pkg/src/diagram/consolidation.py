from typing import Dict, List, Optional, Tuple

from exceptions.exceptions import *
from diagram.arc_tracing import ArcTracer
from diagram.diagram_validation import DiagramValidation
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.surface import SurfaceComp, SurfaceRole

MOVE = "consolidate"


def is_trivial_product(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> bool:
    """
    Whether a body is a product of its positive boundary with an interval
    meeting T only in vertical arcs.
    """
    if len(body.minus_ids) != 1:
        return False
    plus, minus = surfaces[body.plus_id], surfaces[body.minus_ids[0]]
    return (plus.genus == minus.genus and plus.punctures == minus.punctures
            and body.vertical_arcs.get(minus.id, 0) == minus.punctures
            and not (body.bridge_arcs or body.ghost_edges or body.core_loops or body.pocket_trees))


def consolidation_pair(diagram: Diagram, thin_id: str, thick_id: str) -> Optional[Tuple[str, str, str]]:
    """
    Bodies involved in consolidating a thin and a thick surface.

    Returns
    -------
    Optional[tuple[str, str, str]]
        (product, upper, lower) body ids: the trivial product between the two
        surfaces, the other body at the thick surface and the other body at
        the thin surface. None when the pair does not bound a trivial product
        or the outer bodies coincide.
    """
    thin, thick = diagram.surfaces.get(thin_id), diagram.surfaces.get(thick_id)
    if thin is None or thick is None or thin.role != SurfaceRole.THIN or thick.role != SurfaceRole.THICK:
        return None
    for product in diagram.bodies_with_plus(thick_id):
        if product.minus_ids != (thin_id,) or not is_trivial_product(product, diagram.surfaces):
            continue
        upper = diagram.other_body(thick_id, product.id)
        lower = diagram.other_body(thin_id, product.id)
        if upper is None or lower is None or upper.id == lower.id:
            return None
        return product.id, upper.id, lower.id
    return None


def merge_through(lower: Compressionbody, upper: Compressionbody, thin_id: str) -> Compressionbody:
    """
    Glue the upper body to the lower body through a trivial product over ``thin_id``.

    Stubs of the lower body at the thin surface (vertical arcs first, then
    ghost arc ends) are matched in order with stubs of the upper body at its
    positive boundary (vertical arcs grouped by surface, then both ends of
    each bridge arc, then pocket tree legs), and the arcs are traced through.

    Raises
    ------
    TracingException
        The stubs do not match up or a pocket tree would end on a negative surface
    """
    tracer = ArcTracer()
    lower_stubs: List[tuple] = []
    upper_stubs: List[tuple] = []

    for _ in range(lower.vertical_arcs.get(thin_id, 0)):
        stub = tracer.junction()
        tracer.piece(tracer.terminal(), stub)
        lower_stubs.append(stub)
    kept_ghosts = []
    for a, b in lower.ghost_edges:
        if thin_id not in (a, b):
            kept_ghosts.append((a, b))
            continue
        first = tracer.junction()
        lower_stubs.append(first)
        if a == b:
            second = tracer.junction()
            lower_stubs.append(second)
            tracer.piece(first, second)
        else:
            tracer.piece(first, tracer.terminal(b if a == thin_id else a))

    for surface_id in upper.minus_ids:
        for _ in range(upper.vertical_arcs.get(surface_id, 0)):
            stub = tracer.junction()
            tracer.piece(stub, tracer.terminal(surface_id))
            upper_stubs.append(stub)
    for _ in range(upper.bridge_arcs):
        first, second = tracer.junction(), tracer.junction()
        tracer.piece(first, second)
        upper_stubs.extend((first, second))
    for _ in range(upper.pocket_trees):
        vertex = tracer.vertex()
        for _ in range(3):
            stub = tracer.junction()
            tracer.piece(vertex, stub)
            upper_stubs.append(stub)

    if len(lower_stubs) != len(upper_stubs):
        raise TracingException(f"{len(lower_stubs)} stubs below {thin_id} against {len(upper_stubs)} above")
    for below, above in zip(lower_stubs, upper_stubs):
        tracer.piece(below, above)
    traced = tracer.summarize()

    vertical = {s: v for s, v in lower.vertical_arcs.items() if s != thin_id}
    for surface_id, count in traced.vertical_arcs.items():
        vertical[surface_id] = vertical.get(surface_id, 0) + count
    return Compressionbody(
        id=lower.id,
        plus_id=lower.plus_id,
        minus_ids=tuple(s for s in lower.minus_ids if s != thin_id) + upper.minus_ids,
        bridge_arcs=lower.bridge_arcs + traced.bridge_arcs,
        vertical_arcs=vertical,
        ghost_edges=tuple(kept_ghosts) + upper.ghost_edges + tuple(traced.ghost_edges),
        core_loops=lower.core_loops + upper.core_loops + traced.core_loops,
        pocket_trees=lower.pocket_trees + traced.pocket_trees,
    )


def consolidate(diagram: Diagram, thin_id: str, thick_id: str) -> Diagram:
    """
    Delete a thin and a thick surface cobounding a trivial product body.

    The product and the body beyond the thick surface are absorbed into the
    body beyond the thin surface, which keeps its id.

    Raises
    ------
    InvalidMoveException
        The surfaces do not cobound a trivial product between two distinct bodies
    """
    pair = consolidation_pair(diagram, thin_id, thick_id)
    if pair is None:
        raise InvalidMoveException(MOVE, f"{thin_id} and {thick_id} do not cobound a trivial product between distinct bodies")
    product_id, upper_id, lower_id = pair
    try:
        merged = merge_through(diagram.bodies[lower_id], diagram.bodies[upper_id], thin_id)
    except TracingException as e:
        raise InvalidMoveException(MOVE, e.message)

    surfaces = {k: v for k, v in diagram.surfaces.items() if k not in (thin_id, thick_id)}
    bodies = {k: v for k, v in diagram.bodies.items() if k not in (product_id, upper_id, lower_id)}
    bodies[lower_id] = merged
    orientation = {}
    for surface_id, pair in diagram.orientation.items():
        if surface_id in (thin_id, thick_id):
            continue
        orientation[surface_id] = tuple(lower_id if b == upper_id else b for b in pair)

    result = diagram.with_changes(surfaces=surfaces, bodies=bodies, orientation=orientation)
    report = DiagramValidation.validate_diagram(result)
    if not report.is_valid:
        raise InvalidMoveException(MOVE, report.first().message)
    return result


def consolidation_candidates(diagram: Diagram) -> List[Tuple[str, str]]:
    """
    All (thin, thick) pairs that can be consolidated, in id order.
    """
    candidates = []
    for body in diagram.bodies.values():
        if len(body.minus_ids) == 1 and consolidation_pair(diagram, body.minus_ids[0], body.plus_id) is not None:
            candidates.append((body.minus_ids[0], body.plus_id))
    return sorted(candidates)

"""
Untelescoping of one thick surface along a weak reducing pair of discs.

The thick surface H sits between its source body A and target body B. The
disc D- lies in A and meets T in j points, D+ lies in B and meets T in i
points. H is replaced by three surfaces: H- (H compressed along D-), the thin
surface F (H compressed along both) and H+ (H compressed along D+). The flow
runs A1 -> H- -> A2 -> F -> B2 -> H+ -> B1.

When a disc separates H, part 0 of its split is the side away from the other
disc: X for D- and Z for D+. The remaining punctures of H lie on the middle
region Y. F consists of F_X (only if D- separates), F_Y and F_Z (only if D+
separates).
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from exceptions.exceptions import *
from diagram.diagram_validation import DiagramValidation
from models.compressionbody import Compressionbody, normalize_edge
from models.diagram import Diagram
from models.move_spec import Decorations, UntelescopeSpec
from models.surface import SurfaceComp, SurfacePart, SurfaceRole
from utils.helper_functions import fresh_id

MOVE = "untelescope"


@dataclass(frozen=True)
class RegionModel:
    """
    Genus and puncture counts of the regions X, Y, Z of the thick surface.
    """
    genus: int
    punctures: int
    gx: int
    x: int
    gz: int
    z: int
    separating_minus: bool
    separating_plus: bool


    @property
    def gy(self) -> int:
        return self.genus - self.gx - self.gz - (0 if self.separating_minus else 1) - (0 if self.separating_plus else 1)


    @property
    def y(self) -> int:
        return self.punctures - self.x - self.z


def _check_split(parts: Tuple[SurfacePart, ...], thick: SurfaceComp, count: int, name: str):
    if len(parts) not in (1, 2):
        raise InvalidMoveException(MOVE, f"{name} must have 1 or 2 parts, got {len(parts)}")
    if any(part.genus < 0 or part.punctures < 0 for part in parts):
        raise InvalidMoveException(MOVE, f"{name} has a negative genus or puncture count")
    euler = sum(part.euler_characteristic for part in parts)
    punctures = sum(part.punctures for part in parts)
    if euler != thick.euler_characteristic + 2:
        raise InvalidMoveException(MOVE, f"{name} has euler characteristic {euler}, expected {thick.euler_characteristic + 2}")
    if punctures != thick.punctures + 2 * count:
        raise InvalidMoveException(MOVE, f"{name} has {punctures} punctures, expected {thick.punctures + 2 * count}")
    if len(parts) == 2 and any(part.punctures < count for part in parts):
        raise InvalidMoveException(MOVE, f"{name} part misses the scar of the disc")


def region_model(spec: UntelescopeSpec, thick: SurfaceComp) -> RegionModel:
    """
    Check the conservation laws of a certificate and read off its regions.

    Raises
    ------
    InvalidMoveException
        The splits do not come from compressing the thick surface
    """
    if spec.i not in (0, 1) or spec.j not in (0, 1):
        raise InvalidMoveException(MOVE, f"disc puncture counts must be 0 or 1, got i={spec.i} j={spec.j}")
    _check_split(spec.split_minus, thick, spec.j, "split_minus")
    _check_split(spec.split_plus, thick, spec.i, "split_plus")
    model = RegionModel(
        genus=thick.genus,
        punctures=thick.punctures,
        gx=spec.split_minus[0].genus if spec.separating_minus else 0,
        x=spec.split_minus[0].punctures - spec.j if spec.separating_minus else 0,
        gz=spec.split_plus[0].genus if spec.separating_plus else 0,
        z=spec.split_plus[0].punctures - spec.i if spec.separating_plus else 0,
        separating_minus=spec.separating_minus,
        separating_plus=spec.separating_plus,
    )
    if model.gy < 0 or model.y < 0:
        raise InvalidMoveException(MOVE, "the two compressions overlap: the middle region has negative genus or punctures")
    return model


def derived_f(model: RegionModel, i: int, j: int) -> List[Tuple[str, SurfacePart]]:
    parts = []
    if model.separating_minus:
        parts.append(("X", SurfacePart(model.gx, model.x + j)))
    y = model.y + j * (1 if model.separating_minus else 2) + i * (1 if model.separating_plus else 2)
    parts.append(("Y", SurfacePart(model.gy, y)))
    if model.separating_plus:
        parts.append(("Z", SurfacePart(model.gz, model.z + i)))
    return parts


def _check_disconnected_f(spec: UntelescopeSpec, thick: SurfaceComp):
    euler = sum(part.euler_characteristic for part in spec.split_f)
    punctures = sum(part.punctures for part in spec.split_f)
    if euler != thick.euler_characteristic + 4 or punctures != thick.punctures + 2 * spec.i + 2 * spec.j:
        raise InvalidMoveException(MOVE, "split_f does not come from compressing along both discs")
    if any(part.genus < 0 or part.punctures < spec.i + spec.j for part in spec.split_f):
        raise InvalidMoveException(MOVE, "split_f part misses the scars of the discs")


def cut_decorations(body: Compressionbody, count: int) -> Optional[Decorations]:
    """
    Decorations of a body after cutting it along a disc meeting T ``count`` times.

    A bridge or vertical arc is cut when there is one (one more bridge arc),
    otherwise a ghost arc (one more vertical arc at each end), otherwise a
    core loop (it becomes a bridge arc). Returns None when there is nothing
    to cut.
    """
    decorations = Decorations.of(body)
    if count == 0:
        return decorations
    if body.bridge_arcs + body.vertical_total > 0:
        return Decorations(body.minus_ids, body.bridge_arcs + 1, dict(body.vertical_arcs), body.ghost_edges,
                           body.core_loops, body.pocket_trees)
    if body.ghost_edges:
        a, b = body.ghost_edges[0]
        vertical = dict(body.vertical_arcs)
        vertical[a] += 1
        vertical[b] += 1
        return Decorations(body.minus_ids, body.bridge_arcs, vertical, body.ghost_edges[1:],
                           body.core_loops, body.pocket_trees)
    if body.core_loops:
        return Decorations(body.minus_ids, body.bridge_arcs + 1, dict(body.vertical_arcs), body.ghost_edges,
                           body.core_loops - 1, body.pocket_trees)
    return None


def _subsets(items: Tuple[str, ...]):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def canonical_pieces(body: Compressionbody, count: int, part_ids: List[str],
                     surfaces: Dict[str, SurfaceComp]) -> Optional[List[Decorations]]:
    """
    First feasible distribution of a body's decorations over the pieces cut
    off by a compression, in a deterministic order.

    Parameters
    ----------
    body : Compressionbody
        The old body containing the compressing disc
    count : int
        Number of points in which the disc meets T
    part_ids : list[str]
        Ids of the new positive boundaries, part 0 first
    surfaces : dict[str, SurfaceComp]
        Surfaces including the new parts

    Returns
    -------
    Optional[list[Decorations]]
        One entry per part, or None when no distribution passes validation
    """
    cut = cut_decorations(body, count)
    if cut is None:
        return None
    if len(part_ids) == 1:
        pieces = [Decorations(body.minus_ids, cut.bridge_arcs, cut.vertical_arcs, cut.ghost_edges,
                              cut.core_loops, cut.pocket_trees)]
        return pieces if _pieces_valid(pieces, part_ids, surfaces) else None

    target = surfaces[part_ids[0]].punctures
    for subset in _subsets(body.minus_ids):
        inside = set(subset)
        if any((a in inside) != (b in inside) for a, b in cut.ghost_edges):
            continue
        vertical0 = {s: cut.vertical_arcs[s] for s in subset}
        remaining = target - sum(vertical0.values())
        for pockets0 in range(cut.pocket_trees + 1):
            rest = remaining - 3 * pockets0
            if rest < 0 or rest % 2 or rest // 2 > cut.bridge_arcs:
                continue
            bridges0 = rest // 2
            ghosts0 = tuple(edge for edge in cut.ghost_edges if edge[0] in inside)
            outside = tuple(s for s in body.minus_ids if s not in inside)
            pieces = [
                Decorations(tuple(subset), bridges0, vertical0, ghosts0, 0, pockets0),
                Decorations(outside, cut.bridge_arcs - bridges0, {s: cut.vertical_arcs[s] for s in outside},
                            tuple(edge for edge in cut.ghost_edges if edge[0] not in inside),
                            cut.core_loops, cut.pocket_trees - pockets0),
            ]
            if _pieces_valid(pieces, part_ids, surfaces):
                return pieces
    return None


def _pieces_valid(pieces: List[Decorations], part_ids: List[str], surfaces: Dict[str, SurfaceComp]) -> bool:
    for piece, part_id in zip(pieces, part_ids):
        body = piece.to_body("piece", part_id)
        if not DiagramValidation.validate_body_in(body, surfaces).is_valid:
            return False
    return True


def check_pieces(body: Compressionbody, pieces: Tuple[Decorations, ...], count: int, parts: int):
    """
    Conservation laws of a user supplied distribution.

    Raises
    ------
    InvalidMoveException
        The pieces do not partition the negative boundary, or the arc and
        pocket counts do not match a compression meeting T ``count`` times
    """
    if len(pieces) != parts:
        raise InvalidMoveException(MOVE, f"body {body.id} needs {parts} pieces, got {len(pieces)}")
    minus = [s for piece in pieces for s in (piece.minus_ids or ())]
    if sorted(minus) != sorted(body.minus_ids):
        raise InvalidMoveException(MOVE, f"pieces of {body.id} do not partition its negative boundary")
    arcs = sum(p.bridge_arcs + sum(p.vertical_arcs.values()) + len(p.ghost_edges) for p in pieces)
    loops = sum(p.core_loops for p in pieces)
    if sum(p.pocket_trees for p in pieces) != body.pocket_trees:
        raise InvalidMoveException(MOVE, f"pieces of {body.id} do not conserve pocket trees")
    kept = loops == body.core_loops and arcs == body.arc_count + count
    looped = count == 1 and loops == body.core_loops - 1 and arcs == body.arc_count + 1
    if not (kept or looped):
        raise InvalidMoveException(MOVE, f"pieces of {body.id} do not conserve arcs and loops")


def untelescope(diagram: Diagram, spec: UntelescopeSpec, track_width: bool = False) -> Diagram:
    """
    Apply an untelescoping certificate.

    Parameters
    ----------
    diagram : Diagram
        A valid diagram
    spec : UntelescopeSpec
        The certificate
    track_width : bool
        Forbid compressions along two nonseparating discs whose union separates

    Returns
    -------
    Diagram
        The diagram with the thick surface replaced by H-, F and H+

    Raises
    ------
    UnknownIdException
        The thick surface does not exist
    InvalidMoveException
        The certificate breaks a conservation law or the result is not valid
    """
    thick = diagram.surfaces.get(spec.thick_id)
    if thick is None:
        raise UnknownIdException("surface", spec.thick_id)
    if thick.role != SurfaceRole.THICK:
        raise InvalidMoveException(MOVE, f"{spec.thick_id} is not a thick surface")
    source_id, target_id = diagram.orientation[spec.thick_id]
    source, target = diagram.bodies[source_id], diagram.bodies[target_id]
    model = region_model(spec, thick)

    if diagram.meta.irreducible_flag:
        separated = [part for split in (spec.split_minus, spec.split_plus) if len(split) == 2 for part in split]
        for part in separated:
            if part.is_sphere() and part.punctures < 2:
                raise InvalidMoveException(MOVE, "a separating compression leaves a sphere meeting T in fewer than two points")

    f_parts = derived_f(model, spec.i, spec.j)
    disconnected = False
    if spec.split_f:
        expected = sorted((p.genus, p.punctures) for _, p in f_parts)
        given = sorted((p.genus, p.punctures) for p in spec.split_f)
        if given != expected:
            if model.separating_minus or model.separating_plus or len(spec.split_f) != 2:
                raise InvalidMoveException(MOVE, f"split_f {given} does not match the compressions, expected {expected}")
            _check_disconnected_f(spec, thick)
            disconnected = True
    if disconnected and track_width:
        raise InvalidMoveException(MOVE, "two nonseparating discs whose union separates cannot be used while tracking width")

    taken = set(diagram.surfaces) | set(diagram.bodies)
    taken.discard(spec.thick_id)
    taken.discard(source_id)
    taken.discard(target_id)
    surfaces = {k: v for k, v in diagram.surfaces.items() if k != spec.thick_id}

    minus_ids = [fresh_id(f"{spec.thick_id}.m{k}", taken) for k in range(len(spec.split_minus))]
    plus_ids = [fresh_id(f"{spec.thick_id}.p{k}", taken) for k in range(len(spec.split_plus))]
    for part_id, part in zip(minus_ids, spec.split_minus):
        surfaces[part_id] = SurfaceComp(part_id, part.genus, part.punctures, SurfaceRole.THICK)
    for part_id, part in zip(plus_ids, spec.split_plus):
        surfaces[part_id] = SurfaceComp(part_id, part.genus, part.punctures, SurfaceRole.THICK)

    if disconnected:
        f_parts = [(f"F{k}", part) for k, part in enumerate(spec.split_f)]
    f_ids = {}
    for k, (region, part) in enumerate(f_parts):
        f_ids[region] = fresh_id(f"{spec.thick_id}.f{k}", taken)
        surfaces[f_ids[region]] = SurfaceComp(f_ids[region], part.genus, part.punctures, SurfaceRole.THIN)

    # Outer pieces of the two old bodies
    source_pieces = spec.source_pieces
    if source_pieces:
        check_pieces(source, source_pieces, spec.j, len(minus_ids))
    else:
        source_pieces = canonical_pieces(source, spec.j, minus_ids, surfaces)
        if source_pieces is None:
            raise InvalidMoveException(MOVE, f"no distribution of the arcs of {source_id} fits {list(spec.split_minus)}")
    target_pieces = spec.target_pieces
    if target_pieces:
        check_pieces(target, target_pieces, spec.i, len(plus_ids))
    else:
        target_pieces = canonical_pieces(target, spec.i, plus_ids, surfaces)
        if target_pieces is None:
            raise InvalidMoveException(MOVE, f"no distribution of the arcs of {target_id} fits {list(spec.split_plus)}")

    bodies = {k: v for k, v in diagram.bodies.items() if k not in (source_id, target_id)}
    orientation = {k: v for k, v in diagram.orientation.items() if k != spec.thick_id}
    home = {source_id: {}, target_id: {}}
    a1_ids, b1_ids = [], []
    for k, (piece, part_id) in enumerate(zip(source_pieces, minus_ids)):
        body_id = fresh_id(f"{source_id}.{k}", taken)
        bodies[body_id] = piece.to_body(body_id, part_id)
        a1_ids.append(body_id)
        home[source_id].update({s: body_id for s in bodies[body_id].minus_ids})
    for k, (piece, part_id) in enumerate(zip(target_pieces, plus_ids)):
        body_id = fresh_id(f"{target_id}.{k}", taken)
        bodies[body_id] = piece.to_body(body_id, part_id)
        b1_ids.append(body_id)
        home[target_id].update({s: body_id for s in bodies[body_id].minus_ids})

    # Middle pieces between H-, F and H+
    a2 = []
    b2 = []
    i, j = spec.i, spec.j
    if disconnected:
        f0, f1 = f_ids["F0"], f_ids["F1"]
        y = [part.punctures - i - j for _, part in f_parts]
        a2.append((minus_ids[0], (f0, f1), {f0: y[0] + j, f1: y[1] + j}, [(f0, f1)] * i))
        b2.append((plus_ids[0], (f0, f1), {f0: y[0] + i, f1: y[1] + i}, [(f0, f1)] * j))
    else:
        fy = f_ids["Y"]
        c_minus = 1 if model.separating_minus else 2
        c_plus = 1 if model.separating_plus else 2
        main_minus = minus_ids[-1]
        main_plus = plus_ids[-1]
        if model.separating_minus:
            fx = f_ids["X"]
            a2.append((minus_ids[0], (fx,), {fx: model.x + j}, []))
        if model.separating_plus:
            fz = f_ids["Z"]
            a2.append((main_minus, (fy, fz), {fz: model.z, fy: model.y + j * c_minus}, [(fy, fz)] * i))
        else:
            a2.append((main_minus, (fy,), {fy: model.y + j * c_minus}, [(fy, fy)] * i))
        if model.separating_minus:
            b2.append((main_plus, (f_ids["X"], fy), {f_ids["X"]: model.x, fy: model.y + i * c_plus},
                       [(f_ids["X"], fy)] * j))
        else:
            b2.append((main_plus, (fy,), {fy: model.y + i * c_plus}, [(fy, fy)] * j))
        if model.separating_plus:
            b2.append((plus_ids[0], (f_ids["Z"],), {f_ids["Z"]: model.z + i}, []))

    f_owner = {}
    for prefix, pieces, owner in (("a", a2, "A"), ("b", b2, "B")):
        for k, (plus_id, minus, vertical, ghosts) in enumerate(pieces):
            body_id = fresh_id(f"{spec.thick_id}.{prefix}{k}", taken)
            bodies[body_id] = Compressionbody(id=body_id, plus_id=plus_id, minus_ids=minus, vertical_arcs=vertical,
                                              ghost_edges=tuple(normalize_edge(a, b) for a, b in ghosts))
            for surface_id in minus:
                f_owner[(owner, surface_id)] = body_id
            if owner == "A":
                orientation[plus_id] = (a1_ids[minus_ids.index(plus_id)], body_id)
            else:
                orientation[plus_id] = (body_id, b1_ids[plus_ids.index(plus_id)])
    for f_id in f_ids.values():
        orientation[f_id] = (f_owner[("A", f_id)], f_owner[("B", f_id)])

    for surface_id, (src, tgt) in list(orientation.items()):
        src = home[source_id].get(surface_id, src) if src == source_id else src
        src = home[target_id].get(surface_id, src) if src == target_id else src
        tgt = home[source_id].get(surface_id, tgt) if tgt == source_id else tgt
        tgt = home[target_id].get(surface_id, tgt) if tgt == target_id else tgt
        orientation[surface_id] = (src, tgt)

    result = diagram.with_changes(surfaces=surfaces, bodies=bodies, orientation=orientation)
    report = DiagramValidation.validate_diagram(result)
    if not report.is_valid:
        raise InvalidMoveException(MOVE, report.first().message)
    return result

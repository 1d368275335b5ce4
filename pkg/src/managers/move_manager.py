from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from exceptions.exceptions import *
from diagram.consolidation import consolidate, consolidation_candidates, is_trivial_product
from diagram.diagram_validation import DiagramValidation
from diagram.untelescoping import untelescope
from events.events import EventType
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import TKind
from models.lint_report import LintReport
from models.move_spec import Decorations, DestabilizationKind, MoveKind, MoveSpec, UntelescopeSpec
from models.surface import SurfaceComp, SurfacePart, SurfaceRole
from utils.helper_functions import format_number
from utils.logger import TraceLogger

EVENT_TYPES = {
    MoveKind.UNTELESCOPE: EventType.UNTELESCOPED,
    MoveKind.CONSOLIDATE: EventType.CONSOLIDATED,
    MoveKind.DESTABILIZE: EventType.DESTABILIZED,
    MoveKind.UNPERTURB: EventType.UNPERTURBED,
    MoveKind.REMOVE_REMOVABLE_ARC: EventType.REMOVABLE_ARC_REMOVED,
}


class MoveManager:
    """
    Applies rewrite moves to diagrams.

    Moves are certificate driven: the caller supplies the split and
    decoration data a geometric disc would determine, and the manager checks
    every conservation law, rebuilds the affected bodies and validates the
    result. Apart from bare untelescoping, every move is checked not to
    increase netchi or netext, and width when the width hypotheses hold.

    Attributes
    ----------
    event_manager : EventManager
        Receives one event per applied primitive move
    track_width : Optional[bool]
        Forces width tracking on or off; by default it follows the width
        hypotheses of each diagram
    """


    def __init__(self, event_manager: EventManager = None, track_width: Optional[bool] = None):
        self.event_manager = event_manager if event_manager is not None else EventManager()
        self.track_width = track_width


    def tracks_width(self, diagram: Diagram) -> bool:
        if self.track_width is not None:
            return self.track_width
        return diagram.meta.width_hypothesis(surface.genus for surface in diagram.thick_surfaces)


    def apply_move(self, diagram: Diagram, move: MoveSpec) -> Diagram:
        """
        Apply one move to a valid diagram.

        Parameters
        ----------
        diagram : Diagram
            A valid diagram
        move : MoveSpec
            The move with its certificate

        Returns
        -------
        Diagram
            The resulting valid diagram

        Raises
        ------
        InvalidDiagramException
            The input diagram is not valid
        InvalidMoveException
            The certificate is inconsistent or the result is not valid
        MonotonicityViolationException
            The move increased a quantity it must not increase
        """
        DiagramValidation.require_valid(diagram)
        TraceLogger.trace(f"applying {move}")
        if move.kind == MoveKind.UNTELESCOPE:
            result = untelescope(diagram, move.untelescope, self.tracks_width(diagram))
            self._assert_monotone(str(move), diagram, result, width=False)
        else:
            if move.kind == MoveKind.CONSOLIDATE:
                result = consolidate(diagram, move.thin_id, move.thick_id)
            elif move.kind == MoveKind.DESTABILIZE:
                result = self._destabilize(diagram, move)
            else:
                result = self._unperturb(diagram, move)
            self._assert_monotone(str(move), diagram, result, width=self.tracks_width(diagram))
        self._register(EVENT_TYPES[move.kind], result, move=str(move))
        return result


    def _register(self, event_type: EventType, diagram: Diagram, **kwargs):
        self.event_manager.register_event(event_type, netext=InvariantManager.netext(diagram),
                                          width=InvariantManager.width(diagram),
                                          netchi=InvariantManager.netchi(diagram), **kwargs)


    @staticmethod
    def _assert_monotone(name: str, before: Diagram, after: Diagram, width: bool):
        quantities = [("netchi", InvariantManager.netchi), ("netext", InvariantManager.netext)]
        if width:
            quantities.append(("width", InvariantManager.width))
        for quantity, compute in quantities:
            old, new = compute(before), compute(after)
            if new > old:
                raise MonotonicityViolationException(name, quantity, format_number(old), format_number(new))


    @staticmethod
    def _thick(diagram: Diagram, thick_id: str, move: str) -> SurfaceComp:
        thick = diagram.surfaces.get(thick_id)
        if thick is None:
            raise UnknownIdException("surface", thick_id)
        if thick.role != SurfaceRole.THICK:
            raise InvalidMoveException(move, f"{thick_id} is not a thick surface")
        return thick


    @staticmethod
    def _check_new_thick(diagram: Diagram, part: SurfacePart, move: str):
        if diagram.meta.irreducible_flag and part.is_sphere() and part.punctures < 2:
            raise InvalidMoveException(move, "the thick surface would become a sphere meeting T in fewer than two points")


    @staticmethod
    def _rebuild(diagram: Diagram, move: str, surfaces: Dict[str, SurfaceComp],
                 bodies: Dict[str, Compressionbody]) -> Diagram:
        result = diagram.with_changes(surfaces=surfaces, bodies=bodies)
        report = DiagramValidation.validate_diagram(result)
        if not report.is_valid:
            raise InvalidMoveException(move, report.first().message)
        return result


    @staticmethod
    def _decorated(body: Compressionbody, overrides: Dict[str, Decorations], default: Decorations) -> Compressionbody:
        decorations = overrides.get(body.id, default)
        minus_ids = decorations.minus_ids if decorations.minus_ids is not None else default.minus_ids
        return decorations.to_body(body.id, body.plus_id, minus_ids)


    @staticmethod
    def _with_bridges(decorations: Decorations, delta: int) -> Decorations:
        return Decorations(decorations.minus_ids, decorations.bridge_arcs + delta, dict(decorations.vertical_arcs),
                           decorations.ghost_edges, decorations.core_loops, decorations.pocket_trees)


    def _destabilize(self, diagram: Diagram, move: MoveSpec) -> Diagram:
        """
        Compress the thick surface along a disc on one side.

        Plain destabilizations lower the genus, meridional ones lower the genus
        and add two punctures. Boundary variants split the compressed surface
        into a kept component and a discarded component parallel to a boundary
        component of M, which then passes to the body on the other side.
        Meridional variants add one bridge arc on each side unless overridden.
        """
        name = f"destabilize[{move.destabilization.value}]"
        thick = self._thick(diagram, move.thick_id, name)
        kind = move.destabilization
        meridional = 1 if kind.is_meridional else 0
        overrides = move.override_map
        adjacent = diagram.bodies_with_plus(thick.id)
        for body_id in overrides:
            if body_id not in (body.id for body in adjacent):
                raise InvalidMoveException(name, f"override for {body_id}, which is not adjacent to {thick.id}")
        defaults = {body.id: Decorations.of(body) for body in adjacent}

        if not kind.discards_component:
            if thick.genus < 1:
                raise InvalidMoveException(name, f"{thick.id} has genus 0")
            new_part = SurfacePart(thick.genus - 1, thick.punctures + 2 * meridional)
        else:
            if move.keep is None or move.discard is None:
                raise InvalidMoveException(name, "boundary destabilizations need keep and discard parts")
            if move.keep.genus + move.discard.genus != thick.genus:
                raise InvalidMoveException(name, "keep and discard genera do not add up to the thick genus")
            if move.keep.punctures + move.discard.punctures != thick.punctures + 2 * meridional:
                raise InvalidMoveException(name, "keep and discard punctures do not match the compression")
            holder = self._boundary_holder(diagram, adjacent, move.discard, name)
            if kind.is_ghost and not holder[0].ghost_edges:
                raise InvalidMoveException(name, f"body {holder[0].id} has no ghost arc")
            new_part = move.keep
            defaults.update(self._pass_boundary(diagram, adjacent, holder, overrides, name))
        self._check_new_thick(diagram, new_part, name)

        if meridional:
            defaults = {body_id: self._with_bridges(d, 1) for body_id, d in defaults.items()}
        surfaces = dict(diagram.surfaces)
        surfaces[thick.id] = thick.with_part(new_part)
        bodies = dict(diagram.bodies)
        for body in adjacent:
            bodies[body.id] = self._decorated(body, overrides, defaults[body.id])
        return self._rebuild(diagram, name, surfaces, bodies)


    @staticmethod
    def _boundary_holder(diagram: Diagram, adjacent: List[Compressionbody], discard: SurfacePart,
                         name: str) -> Tuple[Compressionbody, SurfaceComp]:
        for body in adjacent:
            for surface_id in body.minus_ids:
                surface = diagram.surfaces[surface_id]
                if surface.role == SurfaceRole.BOUNDARY and surface.part == discard:
                    return body, surface
        raise InvalidMoveException(name, f"no adjacent body has a boundary component of type {discard}")


    @staticmethod
    def _pass_boundary(diagram: Diagram, adjacent: List[Compressionbody], holder: Tuple[Compressionbody, SurfaceComp],
                       overrides: Dict[str, Decorations], name: str) -> Dict[str, Decorations]:
        body, boundary = holder
        other = next(b for b in adjacent if b.id != body.id)
        if body.id not in overrides and any(boundary.id in edge for edge in body.ghost_edges):
            raise InvalidMoveException(name, f"ghost arcs at {boundary.id} need a set.{body.id}= override")
        kept = tuple(s for s in body.minus_ids if s != boundary.id)
        source = Decorations(kept, body.bridge_arcs, {s: body.vertical_arcs[s] for s in kept}, body.ghost_edges,
                             body.core_loops, body.pocket_trees)
        vertical = dict(other.vertical_arcs)
        vertical[boundary.id] = boundary.punctures
        target = Decorations(other.minus_ids + (boundary.id,), other.bridge_arcs, vertical, other.ghost_edges,
                             other.core_loops, other.pocket_trees)
        return {body.id: source, other.id: target}


    def _unperturb(self, diagram: Diagram, move: MoveSpec) -> Diagram:
        """
        Remove two punctures of the thick surface.

        Unperturbing cancels a pair of bridge arcs on opposite sides; removing
        a removable arc also needs the body opposite the arc to be more than a
        ball. Both default to one bridge arc fewer on each side.
        """
        name = move.kind.value
        thick = self._thick(diagram, move.thick_id, name)
        if thick.punctures < 2:
            raise InvalidMoveException(name, f"{thick.id} has fewer than two punctures")
        adjacent = diagram.bodies_with_plus(thick.id)
        side_id = move.side
        if side_id is None:
            side_id = next((body.id for body in adjacent if body.bridge_arcs > 0), adjacent[0].id)
        if side_id not in (body.id for body in adjacent):
            raise InvalidMoveException(name, f"body {side_id} is not adjacent to {thick.id}")
        overrides = move.override_map
        opposite = next(body for body in adjacent if body.id != side_id)
        if move.kind == MoveKind.REMOVE_REMOVABLE_ARC and not opposite.minus_ids and thick.genus == 0:
            raise InvalidMoveException(name, f"body {opposite.id} opposite the arc is a ball")
        for body in adjacent:
            if body.id not in overrides and body.bridge_arcs < 1:
                raise InvalidMoveException(name, f"body {body.id} has no bridge arc to remove")
        new_part = SurfacePart(thick.genus, thick.punctures - 2)
        self._check_new_thick(diagram, new_part, name)

        surfaces = dict(diagram.surfaces)
        surfaces[thick.id] = thick.with_part(new_part)
        bodies = dict(diagram.bodies)
        for body in adjacent:
            bodies[body.id] = self._decorated(body, overrides, self._with_bridges(Decorations.of(body), -1))
        return self._rebuild(diagram, name, surfaces, bodies)


    def elementary_thinning_steps(self, diagram: Diagram, spec: UntelescopeSpec) -> Tuple[Diagram, List[MoveSpec]]:
        """
        Untelescope, then consolidate the trivial products it created.

        Products between two new surfaces go first, then products between a
        new thick surface and an old thin surface.

        Returns
        -------
        tuple[Diagram, list[MoveSpec]]
            The thinned diagram and the primitive moves that were applied
        """
        move = MoveSpec.untelescoping(spec)
        result = self.apply_move(diagram, move)
        applied = [move]
        new_ids = set(result.surfaces) - set(diagram.surfaces)
        while True:
            candidates = [pair for pair in consolidation_candidates(result) if pair[1] in new_ids]
            if not candidates:
                break
            candidates.sort(key=lambda pair: (pair[0] not in new_ids, pair))
            step = MoveSpec.consolidation(*candidates[0])
            result = self.apply_move(result, step)
            applied.append(step)
        self._assert_monotone(f"elementary thinning of {spec.thick_id}", diagram, result,
                              width=self.tracks_width(diagram))
        return result, applied


    def elementary_thinning(self, diagram: Diagram, spec: UntelescopeSpec) -> Diagram:
        return self.elementary_thinning_steps(diagram, spec)[0]


    def extended_thinning_steps(self, diagram: Diagram, script: List[MoveSpec]) -> Tuple[Diagram, List[MoveSpec]]:
        """
        Run an extended thinning script.

        Every untelescope in the script is expanded into an elementary
        thinning; the other entries are applied as they are.

        Parameters
        ----------
        diagram : Diagram
            A valid diagram
        script : list[MoveSpec]
            Moves, beginning with an untelescope

        Returns
        -------
        tuple[Diagram, list[MoveSpec]]
            The final diagram and every primitive move applied

        Raises
        ------
        EmptyScriptException
            The script is empty or does not begin with an untelescope
        """
        if not script or script[0].kind != MoveKind.UNTELESCOPE:
            raise EmptyScriptException()
        self._register(EventType.THINNING_STARTED, diagram, count=len(script))
        applied = []
        for move in script:
            if move.kind == MoveKind.UNTELESCOPE:
                diagram, steps = self.elementary_thinning_steps(diagram, move.untelescope)
                applied.extend(steps)
            else:
                diagram = self.apply_move(diagram, move)
                applied.append(move)
        self._register(EventType.THINNING_FINISHED, diagram)
        return diagram, applied


    def extended_thinning(self, diagram: Diagram, script: List[MoveSpec]) -> Diagram:
        return self.extended_thinning_steps(diagram, script)[0]


    @staticmethod
    def locally_thin_lint(diagram: Diagram) -> LintReport:
        """
        Check the combinatorial necessary conditions for local thinness.

        Returns
        -------
        LintReport
            Failing conditions, plus the geometric conditions left to the user
        """
        DiagramValidation.require_valid(diagram)
        report = LintReport(asserted=["thick surfaces are sc-strongly irreducible",
                                      "thin surfaces are c-essential"])
        if diagram.meta.t_kind != TKind.EMPTY:
            for surface in diagram.thick_surfaces + diagram.thin_surfaces:
                if surface.is_unpunctured_sphere():
                    report.issues.append(f"{surface.role.value} surface {surface.id} is a sphere disjoint from T")
        consolidable = set(consolidation_candidates(diagram))
        for body in diagram.bodies.values():
            if not is_trivial_product(body, diagram.surfaces):
                continue
            thin_id = body.minus_ids[0]
            if diagram.surfaces[thin_id].role != SurfaceRole.THIN:
                continue
            if (thin_id, body.plus_id) in consolidable:
                report.issues.append(f"consolidation of {thin_id} and {body.plus_id} applies")
            else:
                report.issues.append(f"trivial product body {body.id} lies against thin surface {thin_id}")
        return report


    @staticmethod
    def split_shapes(thick: SurfaceComp, count: int) -> Iterator[Tuple[SurfacePart, ...]]:
        """
        Splits of a thick surface compressed along a disc meeting T ``count``
        times: the nonseparating one first, then separating ones whose parts
        are not spheres meeting T in fewer than two points.
        """
        if thick.genus >= 1:
            yield (SurfacePart(thick.genus - 1, thick.punctures + 2 * count),)
        for genus, punctures in product(range(thick.genus + 1), range(thick.punctures + 1)):
            first = SurfacePart(genus, punctures + count)
            second = SurfacePart(thick.genus - genus, thick.punctures - punctures + count)
            if any(part.is_sphere() and part.punctures < 2 for part in (first, second)):
                continue
            yield first, second


    def untelescope_candidates(self, diagram: Diagram) -> Iterator[UntelescopeSpec]:
        for thick in diagram.thick_surfaces:
            for i, j in product((0, 1), repeat=2):
                if thick.punctures == 0 and (i or j):
                    continue
                for split_minus in self.split_shapes(thick, j):
                    for split_plus in self.split_shapes(thick, i):
                        yield UntelescopeSpec(thick.id, i, j, split_plus=split_plus, split_minus=split_minus)


    def reduction_candidates(self, diagram: Diagram) -> List[MoveSpec]:
        """
        Consolidations, unperturbings and destabilizations with default
        decorations, in a deterministic order.
        """
        moves = [MoveSpec.consolidation(thin_id, thick_id) for thin_id, thick_id in consolidation_candidates(diagram)]
        for thick in diagram.thick_surfaces:
            adjacent = diagram.bodies_with_plus(thick.id)
            if thick.punctures >= 2 and all(body.bridge_arcs >= 1 for body in adjacent):
                moves.append(MoveSpec.unperturb(thick.id))
            if thick.genus >= 1:
                moves.append(MoveSpec.destabilize(DestabilizationKind.PLAIN, thick.id))
                moves.append(MoveSpec.destabilize(DestabilizationKind.MERIDIONAL, thick.id))
        return moves

from typing import Dict, List, Optional

import networkx as nx

from exceptions.exceptions import *
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import TKind
from models.surface import SurfaceComp, SurfaceRole
from models.validation_report import ValidationReport


class DiagramValidation:
    """
    Static validation class for compressionbody summaries and diagrams.

    Every check returns None when it passes or the exception describing the
    violated invariant. The aggregate validators collect those into a
    ValidationReport and never raise.
    """


    @staticmethod
    def handle_count_bound(body: Compressionbody, minus_genera: Dict[str, int]) -> int:
        """
        Smallest genus of the positive boundary the handle construction allows.

        Each ghost graph component needs one product piece, ghost arcs are
        cored 1-handles, components are joined by plain 1-handles and every
        core loop uses a 1-handle of its own.

        Parameters
        ----------
        body : Compressionbody
            The summary
        minus_genera : dict[str, int]
            Genus of each negative boundary component

        Returns
        -------
        int
            Lower bound on the genus of the positive boundary
        """
        minus_count = len(body.minus_ids)
        components = body.ghost_graph().component_count if minus_count else 0
        genus_sum = sum(minus_genera[surface_id] for surface_id in body.minus_ids)
        return genus_sum + body.ghost_count - minus_count + components + body.core_loops


    @staticmethod
    def validate_references(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> List[VPBridgeException]:
        violations = []
        # Check that every surface the body names exists
        for surface_id in (body.plus_id, *body.minus_ids):
            if surface_id not in surfaces:
                violations.append(UnknownIdException("surface", surface_id))
        # A surface is one component of the negative boundary, listed once
        for surface_id in sorted({s for s in body.minus_ids if body.minus_ids.count(s) > 1}):
            violations.append(DuplicateIdException("minus surface", f"{surface_id} in body {body.id}"))
        # Check that arc records only mention negative boundary components
        for surface_id in body.vertical_arcs:
            if surface_id not in body.minus_ids:
                violations.append(GhostGraphException(body.id, surface_id))
        for a, b in body.ghost_edges:
            for surface_id in (a, b):
                if surface_id not in body.minus_ids:
                    violations.append(GhostGraphException(body.id, surface_id))
        return violations


    @staticmethod
    def validate_counts(body: Compressionbody) -> Optional[VPBridgeException]:
        # Check that no arc count is negative
        for name, value in (("bridge", body.bridge_arcs), ("loops", body.core_loops), ("pockets", body.pocket_trees)):
            if value < 0:
                return NegativeCountException(body.id, name, value)
        for surface_id, value in body.vertical_arcs.items():
            if value < 0:
                return NegativeCountException(body.id, f"vertical[{surface_id}]", value)
        return None


    @staticmethod
    def validate_roles(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> List[VPBridgeException]:
        violations = []
        plus = surfaces[body.plus_id]
        # Check that the positive boundary is thick
        if plus.role != SurfaceRole.THICK:
            violations.append(RoleMismatchException(body.id, plus.id, plus.role.value, "positive boundary"))
        # Check that negative components are thin or boundary surfaces
        for surface_id in body.minus_ids:
            surface = surfaces[surface_id]
            if surface.role == SurfaceRole.THICK:
                violations.append(RoleMismatchException(body.id, surface_id, surface.role.value, "negative boundary"))
        return violations


    @staticmethod
    def validate_bookkeeping(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> List[VPBridgeException]:
        violations = []
        plus = surfaces[body.plus_id]
        # Check punctures on the positive boundary
        if plus.punctures != body.plus_endpoints:
            violations.append(PunctureBookkeepingException(body.id, plus.id, plus.punctures, body.plus_endpoints))
        # Check punctures on every negative component
        for surface_id in body.minus_ids:
            expected = surfaces[surface_id].punctures
            found = body.minus_endpoints(surface_id)
            if expected != found:
                violations.append(PunctureBookkeepingException(body.id, surface_id, expected, found))
        return violations


    @staticmethod
    def validate_genus(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> Optional[VPBridgeException]:
        # Check the handle-count lower bound on the genus of the positive boundary
        minus_genera = {surface_id: surfaces[surface_id].genus for surface_id in body.minus_ids}
        bound = DiagramValidation.handle_count_bound(body, minus_genera)
        genus = surfaces[body.plus_id].genus
        if genus < bound:
            return GenusFeasibilityException(body.id, genus, bound)
        return None


    @staticmethod
    def validate_once_punctured(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> Optional[VPBridgeException]:
        # Check that no negative component is a once-punctured sphere
        for surface_id in body.minus_ids:
            surface = surfaces[surface_id]
            if surface.genus == 0 and surface.punctures == 1:
                return OncePuncturedSphereException(body.id, surface_id)
        return None


    @staticmethod
    def validate_body(body: Compressionbody, ctx: Diagram) -> ValidationReport:
        return DiagramValidation.validate_body_in(body, ctx.surfaces, ctx.meta.t_kind)


    @staticmethod
    def validate_body_in(body: Compressionbody, surfaces: Dict[str, SurfaceComp],
                         t_kind: TKind = TKind.GRAPH) -> ValidationReport:
        report = ValidationReport()
        report.extend(DiagramValidation.validate_references(body, surfaces))
        if not report.is_valid:
            return report
        report.add(DiagramValidation.validate_counts(body))
        report.extend(DiagramValidation.validate_roles(body, surfaces))
        report.extend(DiagramValidation.validate_bookkeeping(body, surfaces))
        report.add(DiagramValidation.validate_genus(body, surfaces))
        report.add(DiagramValidation.validate_once_punctured(body, surfaces))
        # Check that pocket trees only occur for graphs
        if body.pocket_trees and t_kind != TKind.GRAPH:
            report.add(PocketTreeException(body.id))
        return report


    @staticmethod
    def validate_meta(diagram: Diagram) -> List[VPBridgeException]:
        violations = []
        meta = diagram.meta
        # Check that no vertex has valence 2 or less
        for valence in meta.vertex_valences:
            if valence < 3:
                violations.append(RunningAssumptionException(f"vertex of valence {valence}"))
        # Check that no boundary sphere meets T in two or fewer points
        for surface in diagram.boundary_surfaces:
            if surface.genus == 0 and surface.punctures <= 2:
                violations.append(RunningAssumptionException(f"boundary sphere {surface.id} has {surface.punctures} punctures"))
        # Check that drilled surfaces are boundary spheres
        for surface in diagram.surfaces.values():
            if surface.drilled and (surface.role != SurfaceRole.BOUNDARY or surface.genus != 0):
                violations.append(RoleMismatchException("-", surface.id, surface.role.value, "drilled vertex sphere"))
            if surface.genus < 0 or surface.punctures < 0:
                violations.append(NegativeCountException(surface.id, "genus/punctures", (surface.genus, surface.punctures)))
        # Check that an empty T meets nothing
        if meta.t_kind == TKind.EMPTY and any(s.punctures for s in diagram.surfaces.values()):
            violations.append(RunningAssumptionException("t_kind=empty but some surface is punctured"))
        # Check that recorded valences match drilled spheres and pocket trees
        found = sorted([s.punctures for s in diagram.surfaces.values() if s.drilled]
                       + [3] * sum(body.pocket_trees for body in diagram.bodies.values()))
        if list(meta.vertex_valences) != found:
            violations.append(VertexValenceException(list(meta.vertex_valences), found))
        return violations


    @staticmethod
    def validate_incidence(diagram: Diagram) -> List[VPBridgeException]:
        violations = []
        for surface in diagram.surfaces.values():
            plus_count = len(diagram.bodies_with_plus(surface.id))
            minus_count = len(diagram.bodies_with_minus(surface.id))
            # Check the number of adjacent bodies for each role
            if surface.role == SurfaceRole.THICK and (plus_count != 2 or minus_count != 0):
                violations.append(IncidenceException(surface.id, "thick", 2, plus_count + minus_count))
            elif surface.role == SurfaceRole.THIN and (minus_count != 2 or plus_count != 0):
                violations.append(IncidenceException(surface.id, "thin", 2, plus_count + minus_count))
            elif surface.role == SurfaceRole.BOUNDARY and (minus_count != 1 or plus_count != 0):
                violations.append(IncidenceException(surface.id, "boundary", 1, plus_count + minus_count))
        return violations


    @staticmethod
    def validate_orientation(diagram: Diagram) -> List[VPBridgeException]:
        violations = []
        for surface in diagram.surfaces.values():
            pair = diagram.orientation.get(surface.id)
            # Check that thick and thin surfaces carry an orientation and boundary ones do not
            if surface.role == SurfaceRole.BOUNDARY:
                if pair is not None:
                    violations.append(OrientationException(f"boundary surface {surface.id} is oriented"))
                continue
            if pair is None:
                violations.append(OrientationException(f"surface {surface.id} has no orientation"))
                continue
            adjacent = sorted(body.id for body in diagram.adjacent_bodies(surface.id))
            # Check that the orientation joins the two adjacent bodies
            if sorted(pair) != adjacent or pair[0] == pair[1]:
                violations.append(OrientationException(f"surface {surface.id} is oriented {pair[0]} -> {pair[1]} but lies between {adjacent}"))
        for surface_id in diagram.orientation:
            if surface_id not in diagram.surfaces:
                violations.append(UnknownIdException("surface", surface_id))
        if violations:
            return violations

        # Check coherence: the flow crosses each body from one side to the other
        for body in diagram.bodies.values():
            points_up = diagram.body_points_up(body.id)
            for surface_id in body.minus_ids:
                pair = diagram.orientation.get(surface_id)
                if pair is None:
                    continue
                incoming = pair[1] == body.id
                if incoming != points_up:
                    violations.append(OrientationException(f"body {body.id} is not an oriented cobordism at {surface_id}"))
        return violations


    @staticmethod
    def validate_acyclic(diagram: Diagram) -> Optional[VPBridgeException]:
        # Check that the orientation digraph has no directed cycle
        try:
            cycle = nx.find_cycle(diagram.orientation_digraph(), orientation="original")
        except nx.NetworkXNoCycle:
            return None
        return ClosedFlowLineException([edge[0] for edge in cycle] + [cycle[0][0]])


    @staticmethod
    def validate_diagram(diagram: Diagram) -> ValidationReport:
        report = ValidationReport()
        report.extend(DiagramValidation.validate_meta(diagram))
        # Body checks need every reference to resolve
        for body in diagram.bodies.values():
            report.merge(DiagramValidation.validate_body(body, diagram))
        if not report.is_valid:
            return report
        report.extend(DiagramValidation.validate_incidence(diagram))
        if not report.is_valid:
            return report
        report.extend(DiagramValidation.validate_orientation(diagram))
        if not report.is_valid:
            return report
        report.add(DiagramValidation.validate_acyclic(diagram))
        return report


    @staticmethod
    def require_valid(diagram: Diagram) -> Diagram:
        report = DiagramValidation.validate_diagram(diagram)
        if not report.is_valid:
            raise InvalidDiagramException(report)
        return diagram

from dataclasses import replace
from fractions import Fraction
from typing import Dict, List, Set, Tuple

import networkx as nx

from exceptions.exceptions import *
from diagram.arc_tracing import ArcTracer
from diagram.consolidation import is_trivial_product
from diagram.diagram_validation import DiagramValidation
from events.events import EventType
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import GraphPairMeta, TKind
from models.invariant_report import IdentityCheck
from models.sum_point import FactorizationResult, SumPoint
from models.surface import SurfaceComp, SurfaceRole
from utils.helper_functions import fresh_id, half

T_KIND_ORDER = [TKind.EMPTY, TKind.LINK, TKind.GRAPH]


class SumManager:
    """
    Connected sums and trivalent vertex sums of diagrams, and their inverse.

    Gluing opens a small sphere around a point of each summand and identifies
    the two spheres into one thin surface. Factoring cuts along thin spheres
    meeting T in two or three points and caps the scars.
    """


    def __init__(self, event_manager: EventManager = None):
        self.event_manager = event_manager if event_manager is not None else EventManager()


    @staticmethod
    def flip(diagram: Diagram) -> Diagram:
        """
        Reverse the transverse orientation of every thick and thin surface.
        """
        return diagram.with_changes(orientation={s: (target, source) for s, (source, target) in diagram.orientation.items()})


    @staticmethod
    def prefixed(diagram: Diagram, prefix: str) -> Diagram:
        surface_map = {s: prefix + s for s in diagram.surfaces}
        body_map = {b: prefix + b for b in diagram.bodies}
        return Diagram(
            meta=diagram.meta,
            surfaces={surface_map[s]: replace(surface, id=surface_map[s]) for s, surface in diagram.surfaces.items()},
            bodies={body_map[b]: body.renamed(surface_map, body_map[b]) for b, body in diagram.bodies.items()},
            orientation={surface_map[s]: (body_map[a], body_map[b]) for s, (a, b) in diagram.orientation.items()},
        )


    @staticmethod
    def merged_meta(meta1: GraphPairMeta, meta2: GraphPairMeta, valences) -> GraphPairMeta:
        t_kind = max(meta1.t_kind, meta2.t_kind, key=T_KIND_ORDER.index)
        if t_kind == TKind.GRAPH and not valences:
            t_kind = TKind.LINK
        bound = None
        if meta1.heegaard_genus_bound is not None and meta2.heegaard_genus_bound is not None:
            bound = meta1.heegaard_genus_bound + meta2.heegaard_genus_bound
        return GraphPairMeta(
            t_kind=t_kind,
            vertex_valences=tuple(valences),
            irreducible_flag=meta1.irreducible_flag and meta2.irreducible_flag,
            every_sphere_separates_flag=meta1.every_sphere_separates_flag and meta2.every_sphere_separates_flag,
            every_surface_separates_flag=meta1.every_surface_separates_flag and meta2.every_surface_separates_flag,
            heegaard_genus_bound=bound,
        )


    @staticmethod
    def open_point(diagram: Diagram, point: SumPoint, sphere_id: str) -> Tuple[Dict[str, SurfaceComp], Compressionbody, List[int]]:
        """
        Remove a neighborhood of a summing point, leaving a sphere in the
        negative boundary of the host body.

        Returns
        -------
        tuple[dict[str, SurfaceComp], Compressionbody, list[int]]
            Remaining surfaces, the rebuilt host body and the remaining vertex valences

        Raises
        ------
        InvalidSumPointException
            The host has no decoration of the named kind
        """
        point.check()
        body = diagram.bodies.get(point.body_id)
        if body is None:
            raise UnknownIdException("body", point.body_id)
        surfaces = dict(diagram.surfaces)
        valences = list(diagram.meta.vertex_valences)
        cut, argument = point.cut_kind, point.cut_argument
        minus = body.minus_ids + (sphere_id,)
        vertical = dict(body.vertical_arcs)
        ghosts = list(body.ghost_edges)
        bridges, loops, pockets = body.bridge_arcs, body.core_loops, body.pocket_trees

        if point.kind == 2:
            if cut == "bridge":
                if bridges < 1:
                    raise InvalidSumPointException(body.id, "no bridge arc")
                bridges -= 1
                vertical[sphere_id] = 2
            elif cut == "vertical":
                if vertical.get(argument, 0) < 1:
                    raise InvalidSumPointException(body.id, f"no vertical arc to {argument}")
                vertical[argument] -= 1
                vertical[sphere_id] = 1
                ghosts.append((sphere_id, argument))
            elif cut == "ghost":
                if not argument.isdigit() or int(argument) >= len(ghosts):
                    raise InvalidSumPointException(body.id, f"no ghost arc {argument}")
                a, b = ghosts.pop(int(argument))
                ghosts.extend(((sphere_id, a), (sphere_id, b)))
            else:
                if loops < 1:
                    raise InvalidSumPointException(body.id, "no core loop")
                loops -= 1
                ghosts.append((sphere_id, sphere_id))
        else:
            if diagram.meta.t_kind != TKind.GRAPH or 3 not in valences:
                raise InvalidSumPointException(body.id, "trivalent vertex sums need a graph with a trivalent vertex")
            if cut == "pocket":
                if pockets < 1:
                    raise InvalidSumPointException(body.id, "no pocket tree")
                pockets -= 1
                vertical[sphere_id] = 3
            else:
                drilled = surfaces.get(argument)
                if argument not in body.minus_ids or drilled is None or not drilled.drilled or drilled.punctures != 3:
                    raise InvalidSumPointException(body.id, f"{argument} is not a drilled trivalent vertex of the body")
                del surfaces[argument]
                minus = tuple(s for s in minus if s != argument)
                vertical[sphere_id] = vertical.pop(argument)
                ghosts = [tuple(sphere_id if s == argument else s for s in edge) for edge in ghosts]
            valences.remove(3)

        host = Compressionbody(id=body.id, plus_id=body.plus_id, minus_ids=minus, bridge_arcs=bridges,
                               vertical_arcs=vertical, ghost_edges=tuple(ghosts), core_loops=loops, pocket_trees=pockets)
        return surfaces, host, valences


    def glue(self, diagram1: Diagram, point1: SumPoint, diagram2: Diagram, point2: SumPoint) -> Diagram:
        """
        Sum two diagrams at two points along a new thin sphere.

        Parameters
        ----------
        diagram1, diagram2 : Diagram
            Valid summands
        point1, point2 : SumPoint
            Summing points of the same kind

        Returns
        -------
        Diagram
            The sum, with the second summand flipped when both hosts point
            the same way, and ids prefixed with ``a.`` and ``b.`` when they collide

        Raises
        ------
        KindMismatchException
            The points have different kinds
        InvalidSumPointException
            A point does not lie on a usable decoration
        """
        if point1.kind != point2.kind:
            raise KindMismatchException(point1.kind, point2.kind)
        DiagramValidation.require_valid(diagram1)
        DiagramValidation.require_valid(diagram2)
        ids1 = set(diagram1.surfaces) | set(diagram1.bodies)
        ids2 = set(diagram2.surfaces) | set(diagram2.bodies)
        if ids1 & ids2:
            diagram1, diagram2 = self.prefixed(diagram1, "a."), self.prefixed(diagram2, "b.")
            point1 = replace(point1, body_id="a." + point1.body_id,
                             cut=self._prefixed_cut(point1, "a."))
            point2 = replace(point2, body_id="b." + point2.body_id,
                             cut=self._prefixed_cut(point2, "b."))
            ids1 = set(diagram1.surfaces) | set(diagram1.bodies)
            ids2 = set(diagram2.surfaces) | set(diagram2.bodies)
        for diagram, point in ((diagram1, point1), (diagram2, point2)):
            if point.body_id not in diagram.bodies:
                raise UnknownIdException("body", point.body_id)

        up1 = diagram1.body_points_up(point1.body_id)
        if up1 == diagram2.body_points_up(point2.body_id):
            diagram2 = self.flip(diagram2)
        sphere_id = fresh_id("P", ids1 | ids2)
        surfaces1, host1, valences1 = self.open_point(diagram1, point1, sphere_id)
        surfaces2, host2, valences2 = self.open_point(diagram2, point2, sphere_id)

        surfaces = {**surfaces1, **surfaces2}
        surfaces[sphere_id] = SurfaceComp(sphere_id, 0, point1.kind, SurfaceRole.THIN)
        bodies = {**diagram1.bodies, **diagram2.bodies}
        bodies[host1.id] = host1
        bodies[host2.id] = host2
        orientation = {**diagram1.orientation, **diagram2.orientation}
        orientation[sphere_id] = (host2.id, host1.id) if up1 else (host1.id, host2.id)
        meta = self.merged_meta(diagram1.meta, diagram2.meta, valences1 + valences2)

        result = Diagram(meta=meta, surfaces=surfaces, bodies=bodies, orientation=orientation)
        report = DiagramValidation.validate_diagram(result)
        if not report.is_valid:
            raise InvalidSumPointException(host1.id, report.first().message)
        self.event_manager.register_event(EventType.DIAGRAMS_GLUED, netext=InvariantManager.netext(result),
                                          width=InvariantManager.width(result), netchi=InvariantManager.netchi(result))
        return result


    @staticmethod
    def _prefixed_cut(point: SumPoint, prefix: str) -> str:
        if point.cut_kind in ("vertical", "drilled"):
            return f"{point.cut_kind}:{prefix}{point.cut_argument}"
        return point.cut


    @staticmethod
    def cap_twice_punctured(body: Compressionbody, scar_id: str) -> Compressionbody:
        """
        Cap a twice-punctured scar with a ball containing one arc, joining the
        two arcs of the body that end on it.
        """
        tracer = ArcTracer()
        stubs = []
        for _ in range(body.vertical_arcs.get(scar_id, 0)):
            stub = tracer.junction()
            tracer.piece(tracer.terminal(), stub)
            stubs.append(stub)
        kept = []
        for a, b in body.ghost_edges:
            if scar_id not in (a, b):
                kept.append((a, b))
            elif a == b:
                first, second = tracer.junction(), tracer.junction()
                tracer.piece(first, second)
                stubs.extend((first, second))
            else:
                stub = tracer.junction()
                tracer.piece(stub, tracer.terminal(b if a == scar_id else a))
                stubs.append(stub)
        if len(stubs) != 2:
            raise TracingException(f"scar {scar_id} has {len(stubs)} arc ends, expected 2")
        tracer.piece(stubs[0], stubs[1])
        traced = tracer.summarize()

        vertical = {s: v for s, v in body.vertical_arcs.items() if s != scar_id}
        for surface_id, count in traced.vertical_arcs.items():
            vertical[surface_id] = vertical.get(surface_id, 0) + count
        return Compressionbody(
            id=body.id,
            plus_id=body.plus_id,
            minus_ids=tuple(s for s in body.minus_ids if s != scar_id),
            bridge_arcs=body.bridge_arcs + traced.bridge_arcs,
            vertical_arcs=vertical,
            ghost_edges=tuple(kept) + tuple(traced.ghost_edges),
            core_loops=body.core_loops + traced.core_loops,
            pocket_trees=body.pocket_trees,
        )


    @staticmethod
    def _cut_open(diagram: Diagram, cuts: List[str]) -> Diagram:
        """
        Cut along the given thin spheres and cap every scar. The result is a
        possibly disconnected diagram whose meta is recomputed per factor later.
        """
        surfaces = dict(diagram.surfaces)
        bodies = dict(diagram.bodies)
        orientation = dict(diagram.orientation)
        for sphere_id in cuts:
            sphere = surfaces.pop(sphere_id)
            del orientation[sphere_id]
            for body in [b for b in bodies.values() if sphere_id in b.minus_ids]:
                if sphere.punctures == 2:
                    bodies[body.id] = SumManager.cap_twice_punctured(body, sphere_id)
                    continue
                scar_id = f"{sphere_id}.{body.id}"
                scar = SurfaceComp(scar_id, 0, 3, SurfaceRole.BOUNDARY, drilled=True)
                host = body.renamed({sphere_id: scar_id})
                if is_trivial_product(host, {**surfaces, scar_id: scar}):
                    host = Compressionbody(id=body.id, plus_id=body.plus_id, pocket_trees=1)
                else:
                    surfaces[scar_id] = scar
                bodies[body.id] = host
        return Diagram(meta=diagram.meta, surfaces=surfaces, bodies=bodies, orientation=orientation)


    @staticmethod
    def _body_graph(diagram: Diagram) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(diagram.bodies)
        for surface_id, (source, target) in diagram.orientation.items():
            graph.add_edge(source, target, key=surface_id)
        return graph


    @staticmethod
    def _factor(diagram: Diagram, body_ids: Set[str], t_kind: TKind) -> Diagram:
        bodies = {b: diagram.bodies[b] for b in body_ids}
        surface_ids = set()
        for body in bodies.values():
            surface_ids.add(body.plus_id)
            surface_ids.update(body.minus_ids)
        surfaces = {s: diagram.surfaces[s] for s in surface_ids}
        valences = [s.punctures for s in surfaces.values() if s.drilled]
        valences += [3] * sum(body.pocket_trees for body in bodies.values())
        if valences:
            t_kind = TKind.GRAPH
        elif t_kind == TKind.GRAPH:
            t_kind = TKind.LINK
        meta = GraphPairMeta(
            t_kind=t_kind,
            vertex_valences=tuple(valences),
            irreducible_flag=diagram.meta.irreducible_flag,
            every_sphere_separates_flag=diagram.meta.every_sphere_separates_flag,
            every_surface_separates_flag=diagram.meta.every_surface_separates_flag,
        )
        orientation = {s: pair for s, pair in diagram.orientation.items() if s in surface_ids}
        return Diagram(meta=meta, surfaces=surfaces, bodies=bodies, orientation=orientation)


    @staticmethod
    def is_trivial_factor(factor: Diagram) -> bool:
        """
        Whether a factor is an unknot in the 3-sphere or a trivial theta graph,
        judged from its invariants.
        """
        netext = InvariantManager.netext(factor)
        valences = factor.meta.vertex_valences
        outer = [s for s in factor.boundary_surfaces if not s.drilled]
        if outer:
            return False
        if not valences and netext == 0 and all(s.is_sphere() for s in factor.thick_surfaces):
            return True
        return valences == (3, 3) and netext == half(1)


    def _components(self, diagram: Diagram, cuts: List[str]) -> Tuple[Diagram, List[Set[str]]]:
        opened = self._cut_open(diagram, cuts)
        components = sorted(nx.connected_components(self._body_graph(opened)), key=min)
        return opened, components


    def split_prime(self, diagram: Diagram) -> FactorizationResult:
        """
        Cut a diagram into prime factors along thin summing spheres.

        Thin spheres meeting T in two or three points are cut in id order when
        they separate. Scars meeting T twice are capped with a ball containing
        one arc; scars meeting T three times become drilled vertex spheres, or
        a ball with a pocket tree when the host is a product over the scar.
        Cuts next to a trivial factor are undone until no trivial factor is
        left next to a cut.

        Raises
        ------
        PreconditionException
            The irreducible flag is absent or the diagram fails the local thinness lint
        """
        DiagramValidation.require_valid(diagram)
        if not diagram.meta.irreducible_flag:
            raise PreconditionException("split_prime", "the irreducible flag")
        lint = MoveManager.locally_thin_lint(diagram)
        if not lint.passes:
            raise PreconditionException("split_prime", f"a diagram passing the local thinness lint ({lint.issues[0]})")

        graph = self._body_graph(diagram)
        cuts = []
        for sphere in diagram.thin_surfaces:
            if not sphere.is_sphere() or sphere.punctures not in (2, 3):
                continue
            trial = graph.copy()
            trial.remove_edge(*diagram.orientation[sphere.id], key=sphere.id)
            if not nx.has_path(trial, *diagram.orientation[sphere.id]):
                cuts.append(sphere.id)
                graph = trial

        while True:
            opened, components = self._components(diagram, cuts)
            absorbed = False
            for component in components:
                incident = sorted(s for s in cuts if any(b in component for b in diagram.orientation[s]))
                if incident and self.is_trivial_factor(self._factor(opened, component, diagram.meta.t_kind)):
                    cuts.remove(incident[0])
                    absorbed = True
                    break
            if not absorbed:
                break

        opened, components = self._components(diagram, cuts)
        result = FactorizationResult()
        index = {}
        for k, component in enumerate(components):
            result.factors.append(self._factor(opened, component, diagram.meta.t_kind))
            result.dual_tree.add_node(k)
            index.update({b: k for b in component})
        for sphere_id in cuts:
            source, target = diagram.orientation[sphere_id]
            kind = diagram.surfaces[sphere_id].punctures
            result.dual_tree.add_edge(index[source], index[target], sphere=sphere_id, kind=kind)
            if kind == 2:
                result.p2 += 1
            else:
                result.p3 += 1
        self.event_manager.register_event(EventType.DIAGRAM_SPLIT, count=len(result.factors))
        return result


    @staticmethod
    def additivity_check(parts: List[Diagram], whole: Diagram, p2: int, p3: int) -> List[IdentityCheck]:
        """
        Compare the invariants of a sum with those of its summands.

        Returns
        -------
        list[IdentityCheck]
            netext and width lose p3/2, netchi gains 2 per summing sphere
        """
        correction = half(p3)
        netext = sum((InvariantManager.netext(p) for p in parts), Fraction(0)) - correction
        width = sum((InvariantManager.width(p) for p in parts), Fraction(0)) - correction
        netchi = sum(InvariantManager.netchi(p) for p in parts) + 2 * (p2 + p3)
        checks = []
        for name, lhs, rhs in (("netext", InvariantManager.netext(whole), netext),
                               ("width", InvariantManager.width(whole), width),
                               ("netchi", InvariantManager.netchi(whole), netchi)):
            checks.append(IdentityCheck(name, lhs == rhs, Fraction(lhs), Fraction(rhs), kind="additivity"))
        return checks

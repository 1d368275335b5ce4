from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match
from tqdm import tqdm

from exceptions.exceptions import *
from diagram.diagram_validation import DiagramValidation
from diagram.handle_builder import witness
from events.events import EventType
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from models.compressionbody import Compressionbody, normalize_edge
from models.diagram import Diagram
from models.graph_pair_meta import TKind
from models.handle_presentation import HandlePresentation, ZeroHandleKind
from models.invariant_report import DeltaZeroClass
from models.move_spec import MoveSpec
from models.search_budget import SearchBudget
from models.search_result import EnumeratedBody, SearchResult
from models.surface import SurfaceComp, SurfaceRole
from utils.helper_functions import format_number
from utils.logger import TraceLogger

ENUMERATION_CAPS = (4, 8, 4)
NODE_MATCH = categorical_node_match("label", None)
EDGE_MATCH = categorical_edge_match("label", None)


def witness_class(presentation: HandlePresentation) -> DeltaZeroClass:
    """
    Read the extent-neutral type of a body off the handles realizing it.
    """
    kinds = [handle.kind for handle in presentation.zero_handles]
    one_handles = presentation.one_handles
    if kinds == [ZeroHandleKind.TRIVIAL_BALL_ARC]:
        if not one_handles:
            return DeltaZeroClass.BALL_ARC
        if len(one_handles) == 1 and one_handles[0].cored:
            return DeltaZeroClass.SOLID_TORUS_CORE
    if kinds == [ZeroHandleKind.TRIVIAL_BALL_EMPTY] and len(one_handles) == 1 and not one_handles[0].cored:
        return DeltaZeroClass.SOLID_TORUS_EMPTY
    if kinds and all(kind == ZeroHandleKind.PRODUCT for kind in kinds) and all(h.cored for h in one_handles):
        return DeltaZeroClass.VERTICAL_GHOST_TYPE4
    return DeltaZeroClass.NOT_DELTA_ZERO


def diagram_graph(diagram: Diagram) -> nx.Graph:
    """
    Labelled incidence graph of a diagram; isomorphic diagrams give
    isomorphic graphs.
    """
    graph = nx.Graph()
    for surface in diagram.surfaces.values():
        graph.add_node(("s", surface.id), label=f"s:{surface.role.value}:{surface.genus}:{surface.punctures}:{surface.drilled}")
    for body in diagram.bodies.values():
        node = ("b", body.id)
        graph.add_node(node, label=f"b:{body.bridge_arcs}:{body.core_loops}:{body.pocket_trees}")
        graph.add_edge(node, ("s", body.plus_id), label=f"plus:{diagram.body_points_up(body.id)}")
        for surface_id in body.minus_ids:
            pair = diagram.orientation.get(surface_id)
            source = None if pair is None else pair[0] == body.id
            graph.add_edge(node, ("s", surface_id), label=f"minus:{body.vertical_arcs[surface_id]}:{source}")
        for k, (a, b) in enumerate(body.ghost_edges):
            ghost = ("g", body.id, k)
            graph.add_node(ghost, label="ghost")
            graph.add_edge(ghost, node, label="in")
            if a == b:
                graph.add_edge(ghost, ("s", a), label="ghost:2")
            else:
                graph.add_edge(ghost, ("s", a), label="ghost:1")
                graph.add_edge(ghost, ("s", b), label="ghost:1")
    return graph


class CanonicalStore:
    """
    Diagrams seen so far, up to isomorphism.

    Diagrams are bucketed by meta data and a Weisfeiler-Lehman hash of their
    incidence graph; within a bucket exact isomorphism decides.
    """


    def __init__(self):
        self.buckets: Dict[tuple, List[nx.Graph]] = {}
        self.count = 0


    def insert(self, diagram: Diagram) -> Optional[str]:
        """
        Insert a diagram unless an isomorphic one is stored.

        Returns
        -------
        Optional[str]
            The hash of the diagram, or None when it was already present
        """
        graph = diagram_graph(diagram)
        digest = nx.weisfeiler_lehman_graph_hash(graph, node_attr="label", edge_attr="label")
        bucket = self.buckets.setdefault((diagram.meta, digest), [])
        for other in bucket:
            if nx.is_isomorphic(graph, other, node_match=NODE_MATCH, edge_match=EDGE_MATCH):
                return None
        bucket.append(graph)
        self.count += 1
        return digest


def expand(diagram: Diagram, track_width: bool) -> List[Tuple[List[MoveSpec], Diagram]]:
    """
    Every diagram one step away: elementary thinnings along the untelescope
    candidates, then the reducing moves with default decorations.
    """
    manager = MoveManager(track_width=track_width)
    results = []
    for spec in manager.untelescope_candidates(diagram):
        try:
            child, steps = manager.elementary_thinning_steps(diagram, spec)
        except VPBridgeException:
            continue
        results.append((steps, child))
    for move in manager.reduction_candidates(diagram):
        try:
            child = manager.apply_move(diagram, move)
        except VPBridgeException:
            continue
        results.append(([move], child))
    return results


@dataclass
class SearchNode:
    diagram: Diagram
    script: List[MoveSpec] = field(default_factory=list)
    digest: str = ""


    @property
    def rank(self) -> tuple:
        return (InvariantManager.netext(self.diagram), InvariantManager.width(self.diagram),
                InvariantManager.netchi(self.diagram), len(self.script), self.digest)


class SearchManager:
    """
    Bounded exploration of diagrams.

    Provides the brute-force body enumeration used as an oracle for the
    extent difference results, and a beam search over move scripts whose
    results are upper bounds only.
    """


    def __init__(self, event_manager: EventManager = None):
        self.event_manager = event_manager if event_manager is not None else EventManager()


    @staticmethod
    def _ghost_multisets(minus_ids: Tuple[str, ...], max_edges: int):
        pairs = [normalize_edge(a, b) for k, a in enumerate(minus_ids) for b in minus_ids[k:]]
        for size in range(max_edges + 1):
            yield from combinations_with_replacement(pairs, size)


    @staticmethod
    def enumerate_bodies(limits: Tuple[int, int, int] = (2, 6, 3)) -> List[EnumeratedBody]:
        """
        Enumerate compressionbody summaries with 1-manifold decorations.

        Components of the negative boundary with equal genus are listed with
        non-decreasing (vertical, ghost degree) data, so every summary appears
        up to relabelling at least once.

        Parameters
        ----------
        limits : tuple[int, int, int]
            Largest genus, number of punctures on any boundary component, and
            number of negative boundary components

        Returns
        -------
        list[EnumeratedBody]
            Every summary passing body validation, with its witness

        Raises
        ------
        LimitsTooLargeException
            A limit exceeds the enumeration guard
        """
        if any(limit > cap for limit, cap in zip(limits, ENUMERATION_CAPS)):
            raise LimitsTooLargeException(tuple(limits), ENUMERATION_CAPS)
        max_genus, max_punctures, max_minus = limits
        found = []
        for plus_genus, count in product(range(max_genus + 1), range(max_minus + 1)):
            minus_ids = tuple(f"m{k}" for k in range(count))
            for genera in combinations_with_replacement(range(max_genus + 1), count):
                if sum(genera) > plus_genus:
                    continue
                max_edges = plus_genus - sum(genera) + max(count - 1, 0)
                for ghosts in SearchManager._ghost_multisets(minus_ids, max_edges):
                    found.extend(SearchManager._bodies_for(plus_genus, minus_ids, genera, ghosts, max_punctures))
        return found


    @staticmethod
    def _bodies_for(plus_genus: int, minus_ids: Tuple[str, ...], genera: Tuple[int, ...],
                    ghosts: tuple, max_punctures: int) -> List[EnumeratedBody]:
        degree = {surface_id: 0 for surface_id in minus_ids}
        for a, b in ghosts:
            degree[a] += 1
            degree[b] += 1
        if any(value > max_punctures for value in degree.values()):
            return []
        candidate = Compressionbody("C", "plus", minus_ids, ghost_edges=ghosts)
        bound = DiagramValidation.handle_count_bound(candidate, dict(zip(minus_ids, genera)))
        if bound > plus_genus:
            return []

        found = []
        for verticals in product(*(range(max_punctures - degree[s] + 1) for s in minus_ids)):
            keys = [(genera[k], verticals[k], degree[s]) for k, s in enumerate(minus_ids)]
            if any(keys[k][0] == keys[k + 1][0] and keys[k] > keys[k + 1] for k in range(len(keys) - 1)):
                continue
            if sum(verticals) > max_punctures:
                continue
            for loops, bridges in product(range(plus_genus - bound + 1),
                                          range((max_punctures - sum(verticals)) // 2 + 1)):
                body = Compressionbody("C", "plus", minus_ids, bridge_arcs=bridges,
                                       vertical_arcs=dict(zip(minus_ids, verticals)), ghost_edges=ghosts,
                                       core_loops=loops)
                surfaces = {"plus": SurfaceComp("plus", plus_genus, body.plus_endpoints, SurfaceRole.THICK)}
                for k, surface_id in enumerate(minus_ids):
                    surfaces[surface_id] = SurfaceComp(surface_id, genera[k], body.minus_endpoints(surface_id),
                                                       SurfaceRole.THIN)
                if any(surface.punctures > max_punctures for surface in surfaces.values()):
                    continue
                if not DiagramValidation.validate_body_in(body, surfaces, TKind.LINK).is_valid:
                    continue
                presentation = witness(body, surfaces)
                label = witness_class(presentation) if presentation is not None else DeltaZeroClass.NOT_DELTA_ZERO
                found.append(EnumeratedBody(body, surfaces, presentation, label))
        return found


    def _expand_frontier(self, frontier: List[SearchNode], track_width: bool, budget: SearchBudget, depth: int):
        description = f"Depth {depth}"
        if not budget.parallel:
            return [expand(node.diagram, track_width)
                    for node in tqdm(frontier, desc=description, disable=TraceLogger.quiet)]

        expansions = [None] * len(frontier)
        with ProcessPoolExecutor(max_workers=budget.num_workers) as executor:
            futures = {executor.submit(expand, node.diagram, track_width): index for index, node in enumerate(frontier)}
            for future in tqdm(as_completed(futures), total=len(futures), desc=description, disable=TraceLogger.quiet):
                expansions[futures[future]] = future.result()
        return expansions


    def minimize(self, diagram: Diagram, budget: SearchBudget) -> SearchResult:
        """
        Beam search for a diagram with smaller net extent and width.

        Each step is an elementary thinning or a reducing move. Children whose
        netchi exceeds the cap are dropped, isomorphic diagrams are visited
        once, and the ``beam_width`` best children by (netext, width, netchi,
        script length, hash) survive each depth.

        Parameters
        ----------
        diagram : Diagram
            A valid start diagram within the netchi cap
        budget : SearchBudget
            Depth, diagram and netchi limits

        Returns
        -------
        SearchResult
            Best diagram and the script reaching it; ``exhausted`` is set when
            the diagram budget ran out

        Raises
        ------
        BudgetException
            The start diagram exceeds the netchi cap, or width tracking was
            requested without the width hypotheses
        """
        DiagramValidation.require_valid(diagram)
        netchi = InvariantManager.netchi(diagram)
        if not budget.admits(netchi):
            raise BudgetException(f"netchi {format_number(netchi)} of the start diagram exceeds the cap {budget.netchi_cap}")
        if budget.width_tracking and not diagram.meta.width_hypothesis(s.genus for s in diagram.thick_surfaces):
            raise BudgetException("width tracking needs the irreducible and separation flags")

        store = CanonicalStore()
        start = SearchNode(diagram, [], store.insert(diagram))
        best, frontier = start, [start]
        reached, exhausted = 0, False
        self.event_manager.register_event(EventType.SEARCH_STARTED, netext=InvariantManager.netext(diagram),
                                          width=InvariantManager.width(diagram), netchi=netchi)

        for depth in range(1, budget.max_depth + 1):
            children = []
            for node, results in zip(frontier, self._expand_frontier(frontier, budget.width_tracking, budget, depth)):
                for steps, child in results:
                    if not budget.admits(InvariantManager.netchi(child)):
                        continue
                    if store.count >= budget.max_diagrams:
                        exhausted = True
                        break
                    digest = store.insert(child)
                    if digest is not None:
                        children.append(SearchNode(child, node.script + steps, digest))
                if exhausted:
                    break

            reached = depth
            children.sort(key=lambda n: n.rank)
            if children and children[0].rank[:3] < best.rank[:3]:
                best = children[0]
                self.event_manager.register_event(EventType.SEARCH_IMPROVED, depth=depth,
                                                  netext=InvariantManager.netext(best.diagram),
                                                  width=InvariantManager.width(best.diagram),
                                                  netchi=InvariantManager.netchi(best.diagram))
            frontier = children[:budget.beam_width]
            self.event_manager.register_event(EventType.SEARCH_DEPTH_FINISHED, depth=depth, count=len(frontier))
            if exhausted:
                self.event_manager.register_event(EventType.SEARCH_EXHAUSTED, depth=depth, count=store.count)
                break
            if not frontier:
                break

        report = InvariantManager.invariants(best.diagram)
        self.event_manager.register_event(EventType.SEARCH_FINISHED, netext=report.netext, width=report.width,
                                          netchi=report.netchi, count=store.count)
        return SearchResult(best=best.diagram, script=best.script, report=report, visited=store.count,
                            depth=reached, exhausted=exhausted)

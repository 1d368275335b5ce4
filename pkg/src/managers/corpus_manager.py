from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from exceptions.exceptions import *
from managers.move_manager import MoveManager
from managers.sum_manager import SumManager
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import GraphPairMeta, TKind
from models.move_spec import MoveKind, MoveSpec, UntelescopeSpec
from models.sum_point import SumPoint
from models.surface import SurfaceComp, SurfaceRole


@dataclass
class GlueTree:
    """
    A sum of random summands, glued one at a time onto the growing whole.
    """
    whole: Diagram
    parts: List[Diagram] = field(default_factory=list)
    p2: int = 0
    p3: int = 0


class CorpusManager:
    """
    Seeded random diagrams, untelescope certificates, thinning scripts and
    glue trees for property suites and regression corpora.

    Attributes
    ----------
    rng : np.random.Generator
        Source of every random choice
    """


    def __init__(self, seed: int = 0):
        self.rng = np.random.default_rng(seed)


    def _flags_meta(self, t_kind: TKind, valences=(), flags: bool = True) -> GraphPairMeta:
        return GraphPairMeta(t_kind=t_kind, vertex_valences=tuple(valences), irreducible_flag=flags,
                             every_sphere_separates_flag=flags, every_surface_separates_flag=flags)


    def bridge_diagram(self, genus: int, bridges: int, flags: bool = True) -> Diagram:
        """A (genus, bridges)-position of a link: one thick surface between two handlebodies."""
        thick = SurfaceComp("H", genus, 2 * bridges, SurfaceRole.THICK)
        bodies = [Compressionbody("A", "H", bridge_arcs=bridges), Compressionbody("B", "H", bridge_arcs=bridges)]
        return Diagram.build(self._flags_meta(TKind.LINK, flags=flags), [thick], bodies, {"H": ("A", "B")})


    def theta_diagram(self, genus: int, bridges: int, flags: bool = True) -> Diagram:
        """A theta graph in bridge position, with one pocket tree on each side."""
        thick = SurfaceComp("H", genus, 2 * bridges + 3, SurfaceRole.THICK)
        bodies = [Compressionbody("A", "H", bridge_arcs=bridges, pocket_trees=1),
                  Compressionbody("B", "H", bridge_arcs=bridges, pocket_trees=1)]
        return Diagram.build(self._flags_meta(TKind.GRAPH, (3, 3), flags), [thick], bodies, {"H": ("A", "B")})


    def boundary_diagram(self, genus: int, boundary_genus: int, verticals: int, bridges: int,
                         flags: bool = True) -> Diagram:
        """
        A Heegaard surface of a manifold with one boundary component, which
        the link meets in ``verticals`` points.
        """
        thick = SurfaceComp("H", genus, 2 * bridges + verticals, SurfaceRole.THICK)
        boundary = SurfaceComp("dM", boundary_genus, verticals, SurfaceRole.BOUNDARY)
        bodies = [Compressionbody("A", "H", bridge_arcs=bridges + verticals // 2),
                  Compressionbody("B", "H", ("dM",), bridge_arcs=bridges, vertical_arcs={"dM": verticals})]
        return Diagram.build(self._flags_meta(TKind.LINK, flags=flags), [thick, boundary], bodies, {"H": ("A", "B")})


    def stacked_spheres(self, thick_punctures: List[int], thin_punctures: List[int], flags: bool = True) -> Diagram:
        """
        A knot in the 3-sphere cut by a stack of spheres, flowing from the
        bottom ball ``V0`` up to the top ball.

        Thick sphere ``H<k>`` lies between bodies ``V<2k-2>`` and ``V<2k-1>``,
        thin sphere ``t<k>`` between ``V<2k-1>`` and ``V<2k>``.
        """
        if len(thin_punctures) != len(thick_punctures) - 1:
            raise DegenerateInputException("a stack needs one thin sphere fewer than thick spheres")
        surfaces, bodies, orientation = [], [], {}
        for k, punctures in enumerate(thick_punctures, start=1):
            thick_id = f"H{k}"
            surfaces.append(SurfaceComp(thick_id, 0, punctures, SurfaceRole.THICK))
            below, above = f"V{2 * k - 2}", f"V{2 * k - 1}"
            orientation[thick_id] = (below, above)
            for body_id, thin_index in ((below, k - 1), (above, k)):
                if 1 <= thin_index <= len(thin_punctures):
                    thin = thin_punctures[thin_index - 1]
                    bodies.append(Compressionbody(body_id, thick_id, (f"t{thin_index}",),
                                                  bridge_arcs=(punctures - thin) // 2,
                                                  vertical_arcs={f"t{thin_index}": thin}))
                else:
                    bodies.append(Compressionbody(body_id, thick_id, bridge_arcs=punctures // 2))
        for k, punctures in enumerate(thin_punctures, start=1):
            surfaces.append(SurfaceComp(f"t{k}", 0, punctures, SurfaceRole.THIN))
            orientation[f"t{k}"] = (f"V{2 * k - 1}", f"V{2 * k}")
        return Diagram.build(self._flags_meta(TKind.LINK, flags=flags), surfaces, bodies, orientation)


    @staticmethod
    def braid_closure_diagram() -> Diagram:
        """
        A 2-strand braid closure in S^1 x S^2 with net extent 0.

        Two trivial ball bodies and two twice-punctured balls; each of the
        latter carries one vertical arc to each thin sphere and one ghost arc
        between them. No sphere separates, so no flags are set.
        """
        surfaces = [SurfaceComp("H1", 0, 2, SurfaceRole.THICK), SurfaceComp("H2", 0, 2, SurfaceRole.THICK),
                    SurfaceComp("t1", 0, 2, SurfaceRole.THIN), SurfaceComp("t2", 0, 2, SurfaceRole.THIN)]
        holed = dict(minus_ids=("t1", "t2"), vertical_arcs={"t1": 1, "t2": 1}, ghost_edges=(("t1", "t2"),))
        bodies = [Compressionbody("B1", "H1", bridge_arcs=1), Compressionbody("C1", "H1", **holed),
                  Compressionbody("C2", "H2", **holed), Compressionbody("B2", "H2", bridge_arcs=1)]
        orientation = {"H1": ("B1", "C1"), "t1": ("C1", "C2"), "t2": ("C1", "C2"), "H2": ("C2", "B2")}
        return Diagram.build(GraphPairMeta(t_kind=TKind.LINK), surfaces, bodies, orientation)


    def random_base(self, flags: bool = True) -> Diagram:
        """
        A random single-thick-surface diagram: a link, a theta graph, or a
        link in a manifold with torus or sphere boundary.
        """
        genus = int(self.rng.integers(0, 3))
        bridges = int(self.rng.integers(1, 4))
        shape = int(self.rng.integers(0, 3))
        if shape == 1:
            return self.theta_diagram(genus, bridges, flags)
        if shape == 2:
            if genus >= 1:
                return self.boundary_diagram(genus, 1, 2 * int(self.rng.integers(0, 2)), bridges, flags)
            return self.boundary_diagram(genus, 0, 4, bridges, flags)
        return self.bridge_diagram(genus, max(bridges, 2 - genus), flags)


    def untelescope_specs(self, diagram: Diagram) -> List[UntelescopeSpec]:
        specs = list(MoveManager().untelescope_candidates(diagram))
        return [specs[k] for k in self.rng.permutation(len(specs))]


    def random_untelescope(self, diagram: Diagram,
                           track_width: bool = False) -> Optional[Tuple[UntelescopeSpec, Diagram]]:
        """
        A random untelescope the engine accepts, with its result; None when
        no candidate certificate applies.
        """
        manager = MoveManager(track_width=track_width)
        for spec in self.untelescope_specs(diagram):
            try:
                return spec, manager.apply_move(diagram, MoveSpec.untelescoping(spec))
            except VPBridgeException:
                continue
        return None


    def random_diagram(self, steps: int = 2, flags: bool = True) -> Diagram:
        """
        A random base diagram after up to ``steps`` random untelescopes or
        elementary thinnings.
        """
        diagram = self.random_base(flags)
        manager = MoveManager(track_width=False)
        for _ in range(steps):
            found = self.random_untelescope(diagram)
            if found is None:
                break
            spec, untelescoped = found
            if self.rng.random() < 0.5:
                diagram = untelescoped
                continue
            try:
                diagram = manager.elementary_thinning(diagram, spec)
            except VPBridgeException:
                diagram = untelescoped
        return diagram


    def random_script(self, diagram: Diagram, length: int = 3) -> List[MoveSpec]:
        """
        A random extended thinning script for ``diagram``.

        The script starts with an untelescope; every entry is checked by
        running it, so the script replays under the same width tracking.
        """
        manager = MoveManager()
        script = []
        for _ in range(length):
            moves = [MoveSpec.untelescoping(spec) for spec in self.untelescope_specs(diagram)]
            if script:
                moves += manager.reduction_candidates(diagram)
                moves = [moves[k] for k in self.rng.permutation(len(moves))]
            for move in moves:
                try:
                    if move.kind == MoveKind.UNTELESCOPE:
                        diagram = manager.elementary_thinning(diagram, move.untelescope)
                    else:
                        diagram = manager.apply_move(diagram, move)
                except VPBridgeException:
                    continue
                script.append(move)
                break
            else:
                break
        return script


    def _points(self, diagram: Diagram, kind: int) -> List[SumPoint]:
        if kind == 2:
            return [SumPoint(body.id, 2, "bridge") for body in diagram.bodies.values() if body.bridge_arcs]
        if diagram.meta.t_kind != TKind.GRAPH or 3 not in diagram.meta.vertex_valences:
            return []
        return [SumPoint(body.id, 3, "pocket") for body in diagram.bodies.values() if body.pocket_trees]


    def _choice(self, items: list):
        return items[int(self.rng.integers(0, len(items)))]


    def random_glue_tree(self, parts: int = 3) -> GlueTree:
        """
        Glue ``parts`` random nontrivial summands into one diagram.

        Each summand is a bridge diagram or a theta graph with at least two
        bridge arcs per side, glued along a twice-punctured sphere, or along a
        thrice-punctured one when both sides still carry a pocket tree.
        """
        sums = SumManager()
        first = self._summand()
        tree = GlueTree(whole=first, parts=[first])
        for _ in range(parts - 1):
            part = self._summand()
            kind = 3 if self.rng.random() < 0.5 else 2
            if not (self._points(tree.whole, 3) and self._points(part, 3)):
                kind = 2
            tree.whole = sums.glue(tree.whole, self._choice(self._points(tree.whole, kind)),
                                   part, self._choice(self._points(part, kind)))
            tree.parts.append(part)
            if kind == 2:
                tree.p2 += 1
            else:
                tree.p3 += 1
        return tree


    def _summand(self) -> Diagram:
        genus = int(self.rng.integers(0, 2))
        bridges = int(self.rng.integers(2, 4))
        if self.rng.random() < 0.5:
            return self.theta_diagram(genus, bridges)
        return self.bridge_diagram(genus, bridges)

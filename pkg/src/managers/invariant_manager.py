from fractions import Fraction
from typing import Dict, List, Tuple

from exceptions.exceptions import *
from diagram.diagram_validation import DiagramValidation
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import TKind
from models.invariant_report import DeltaZeroClass, EqualityResult, IdentityCheck, InvariantReport, NonnegativityResult
from models.lint_report import LintReport
from models.surface import SurfaceComp, euler_characteristic, ext, ext_squared
from utils.helper_functions import half


class InvariantManager:
    """
    Computes the invariants of diagrams and bodies.

    All quantities are exact: extents are half-integers held as Fractions.
    Drilled vertex spheres count as negative boundary of the bodies they
    bound, and every pocket tree counts as a drilled trivalent sphere.
    """

    POCKET_EXTENT = Fraction(1, 2)


    @staticmethod
    def ext(surfaces) -> Fraction:
        return ext(surfaces)


    @staticmethod
    def netext(diagram: Diagram) -> Fraction:
        return ext(diagram.thick_surfaces) - ext(diagram.thin_surfaces)


    @staticmethod
    def width(diagram: Diagram) -> Fraction:
        return 2 * (ext_squared(diagram.thick_surfaces) - ext_squared(diagram.thin_surfaces))


    @staticmethod
    def netchi(diagram: Diagram) -> int:
        return -euler_characteristic(diagram.thick_surfaces) + euler_characteristic(diagram.thin_surfaces)


    @staticmethod
    def gabai_width(diagram: Diagram):
        """
        Half the difference of the squared puncture counts of thick and thin
        surfaces, defined only when every thick and thin surface is a sphere.
        """
        surfaces = diagram.thick_surfaces + diagram.thin_surfaces
        if not all(surface.is_sphere() for surface in surfaces):
            return None
        thick = sum(surface.punctures ** 2 for surface in diagram.thick_surfaces)
        thin = sum(surface.punctures ** 2 for surface in diagram.thin_surfaces)
        return half(thick - thin)


    @staticmethod
    def delta(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> Fraction:
        """
        Extent difference ext(plus) - ext(minus) of a body.

        Parameters
        ----------
        body : Compressionbody
            The summary
        surfaces : dict[str, SurfaceComp]
            Surfaces the summary refers to

        Returns
        -------
        Fraction
            The extent difference, with each pocket tree counted as a drilled
            trivalent sphere of extent 1/2
        """
        minus = ext(surfaces[surface_id] for surface_id in body.minus_ids)
        return surfaces[body.plus_id].extent - minus - body.pocket_trees * InvariantManager.POCKET_EXTENT


    @staticmethod
    def is_empty_ball(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> bool:
        plus = surfaces[body.plus_id]
        return plus.is_unpunctured_sphere() and not body.minus_ids and body.pocket_trees == 0


    @staticmethod
    def invariants(diagram: Diagram) -> InvariantReport:
        """
        Compute the invariant report of a valid diagram.

        Raises
        ------
        InvalidDiagramException
            The diagram violates an invariant of the core model
        """
        DiagramValidation.require_valid(diagram)
        return InvariantReport(
            netext=InvariantManager.netext(diagram),
            width=InvariantManager.width(diagram),
            netchi=InvariantManager.netchi(diagram),
            gabai_width=InvariantManager.gabai_width(diagram),
            delta_by_body={body_id: InvariantManager.delta(body, diagram.surfaces)
                           for body_id, body in diagram.bodies.items()},
        )


    @staticmethod
    def classify_delta_zero(body: Compressionbody, surfaces: Dict[str, SurfaceComp]) -> DeltaZeroClass:
        """
        Decide which of the four extent-neutral body types a body is.

        Parameters
        ----------
        body : Compressionbody
            A summary with delta 0
        surfaces : dict[str, SurfaceComp]
            Surfaces the summary refers to

        Returns
        -------
        DeltaZeroClass
            ball_arc, solid_torus_empty, solid_torus_core, vertical_ghost_type4,
            or not_delta_zero when the decorations contradict delta 0

        Raises
        ------
        DeltaNonZeroException
            The body has nonzero delta
        HypothesisViolatedException
            The body has pocket trees or a once-punctured sphere in its negative boundary
        """
        if body.pocket_trees:
            raise HypothesisViolatedException(body.id, "pocket trees are not 1-manifold decorations")
        for surface_id in body.minus_ids:
            surface = surfaces[surface_id]
            if surface.is_sphere() and surface.punctures == 1:
                raise HypothesisViolatedException(body.id, f"negative boundary {surface_id} is a once-punctured sphere")
        delta = InvariantManager.delta(body, surfaces)
        if delta != 0:
            raise DeltaNonZeroException(body.id, delta)

        plus = surfaces[body.plus_id]
        if not body.minus_ids:
            if plus.genus == 0 and body.bridge_arcs == 1 and body.core_loops == 0:
                return DeltaZeroClass.BALL_ARC
            if plus.genus == 1 and body.bridge_arcs == 0:
                if body.core_loops == 0:
                    return DeltaZeroClass.SOLID_TORUS_EMPTY
                if body.core_loops == 1:
                    return DeltaZeroClass.SOLID_TORUS_CORE
            return DeltaZeroClass.NOT_DELTA_ZERO

        if body.bridge_arcs or body.core_loops or not body.ghost_graph().is_connected:
            return DeltaZeroClass.NOT_DELTA_ZERO
        minus_genus = sum(surfaces[surface_id].genus for surface_id in body.minus_ids)
        if plus.genus == minus_genus + body.ghost_count - (len(body.minus_ids) - 1):
            return DeltaZeroClass.VERTICAL_GHOST_TYPE4
        return DeltaZeroClass.NOT_DELTA_ZERO


    @staticmethod
    def chunks(diagram: Diagram) -> List[Tuple[str, Tuple[str, ...]]]:
        """
        Pairs of bodies meeting along a thick surface, keyed by that surface.
        """
        return [(surface.id, tuple(body.id for body in diagram.bodies_with_plus(surface.id)))
                for surface in diagram.thick_surfaces]


    @staticmethod
    def _vertex_terms(diagram: Diagram) -> Tuple[Fraction, Fraction]:
        valences = diagram.meta.vertex_valences
        linear = sum((half(n - 2) for n in valences), Fraction(0))
        square = sum((Fraction((n - 2) ** 2, 4) for n in valences), Fraction(0))
        return linear, square


    @staticmethod
    def check_identities(diagram: Diagram) -> List[IdentityCheck]:
        """
        Evaluate both sides of the global extent and width identities.

        The net extent identity and its width analogue are always checked.
        The chunk identity is checked when the pair has no boundary and T is
        a link. The Euler characteristic lint compares every thick and thin
        component against netchi and is reported with kind 'lint'.

        Parameters
        ----------
        diagram : Diagram
            A valid diagram

        Returns
        -------
        list[IdentityCheck]
            One entry per evaluated identity or lint
        """
        surfaces = diagram.surfaces
        outer = [surface for surface in diagram.boundary_surfaces if not surface.drilled]
        linear, square = InvariantManager._vertex_terms(diagram)
        netext = InvariantManager.netext(diagram)
        deltas = {body_id: InvariantManager.delta(body, surfaces) for body_id, body in diagram.bodies.items()}

        checks = []
        lhs = 2 * netext - ext(outer) - linear
        rhs = sum(deltas.values(), Fraction(0))
        checks.append(IdentityCheck("net_extent", lhs == rhs, lhs, rhs))

        lhs = InvariantManager.width(diagram) - ext_squared(outer) - square
        rhs = Fraction(0)
        for body in diagram.bodies.values():
            rhs += surfaces[body.plus_id].extent ** 2
            rhs -= ext_squared(surfaces[surface_id] for surface_id in body.minus_ids)
            rhs -= Fraction(body.pocket_trees, 4)
        checks.append(IdentityCheck("width", lhs == rhs, lhs, rhs))

        if not diagram.boundary_surfaces and diagram.meta.t_kind == TKind.LINK:
            lhs = 2 * netext
            rhs = sum((deltas[body_id] for _, pair in InvariantManager.chunks(diagram) for body_id in pair), Fraction(0))
            checks.append(IdentityCheck("chunks", lhs == rhs, lhs, rhs))

        components = diagram.thick_surfaces + diagram.thin_surfaces
        if components:
            netchi = InvariantManager.netchi(diagram)
            worst = max(-surface.euler_characteristic for surface in components)
            checks.append(IdentityCheck("component_euler", worst <= netchi, Fraction(worst), Fraction(netchi), kind="lint"))
        return checks


    @staticmethod
    def nonnegativity_bound(diagram: Diagram) -> NonnegativityResult:
        """
        Lower bound on netext from the boundary of M and the vertices of T.

        The bound is half the extent of the boundary after drilling out the
        vertices of T. When the width hypotheses hold and no thick or thin
        sphere meets T in fewer than two points, w >= netext is checked too.

        Raises
        ------
        PreconditionException
            The irreducible flag is absent or some body is an empty ball
        """
        DiagramValidation.require_valid(diagram)
        if not diagram.meta.irreducible_flag:
            raise PreconditionException("nonnegativity_bound", "the irreducible flag")
        for body in diagram.bodies.values():
            if InvariantManager.is_empty_ball(body, diagram.surfaces):
                raise PreconditionException("nonnegativity_bound", f"no empty ball bodies, found {body.id}")

        outer = [surface for surface in diagram.boundary_surfaces if not surface.drilled]
        linear, _ = InvariantManager._vertex_terms(diagram)
        bound = half(ext(outer) + linear)
        netext = InvariantManager.netext(diagram)

        components = diagram.thick_surfaces + diagram.thin_surfaces
        width_checked = (diagram.meta.width_hypothesis(surface.genus for surface in diagram.thick_surfaces)
                         and all(surface.extent >= 0 for surface in components))
        width_satisfied = not width_checked or InvariantManager.width(diagram) >= netext
        return NonnegativityResult(bound=bound, satisfied=netext >= bound,
                                   width_checked=width_checked, width_satisfied=width_satisfied)


    @staticmethod
    def equality_check(diagram: Diagram, lint: LintReport) -> EqualityResult:
        """
        Check what a locally thin diagram attaining the nonnegativity bound
        must satisfy.

        When the lint passes and netext, or w/2 under the width hypotheses,
        equals the bound, every body has delta 0 and, for links, is one of
        the four extent-neutral types. Net extent 0 on a link with every
        sphere separating leaves only the unknot, and net extent 1 on a
        closed knot leaves (1,1)-knots, 2-bridge when netchi <= -2.

        Parameters
        ----------
        diagram : Diagram
            A valid diagram with the irreducible flag
        lint : LintReport
            The locally thin lint of the same diagram

        Returns
        -------
        EqualityResult
            The equality case and the classifications that apply

        Raises
        ------
        PreconditionException
            The irreducible flag is absent or some body is an empty ball
        """
        nonnegativity = InvariantManager.nonnegativity_bound(diagram)
        meta = diagram.meta
        netext = InvariantManager.netext(diagram)
        result = EqualityResult()
        if not lint.passes:
            return result

        if netext == nonnegativity.bound:
            result.attained_by = "netext"
        elif (nonnegativity.width_checked and meta.t_kind != TKind.GRAPH
              and InvariantManager.width(diagram) == 2 * nonnegativity.bound):
            result.attained_by = "width"

        if result.attained_by is not None:
            for body_id, body in sorted(diagram.bodies.items()):
                delta = InvariantManager.delta(body, diagram.surfaces)
                if delta != 0:
                    result.violations.append(f"{body_id} has delta {delta}")
                    continue
                if meta.t_kind == TKind.GRAPH:
                    result.classes[body_id] = None
                    continue
                kind = InvariantManager.classify_delta_zero(body, diagram.surfaces)
                result.classes[body_id] = kind
                if kind == DeltaZeroClass.NOT_DELTA_ZERO:
                    result.violations.append(f"{body_id} is none of the extent-neutral types")

        closed_link = meta.t_kind == TKind.LINK and not diagram.boundary_surfaces
        if result.attained_by is not None and netext == 0 and meta.t_kind == TKind.LINK \
                and meta.every_sphere_separates_flag:
            result.unknot = (len(diagram.bodies) == 2
                             and all(kind == DeltaZeroClass.BALL_ARC for kind in result.classes.values()))
        if netext == 1 and closed_link and meta.every_surface_separates_flag:
            netchi = InvariantManager.netchi(diagram)
            if netchi <= -2:
                result.netext_one = "2-bridge"
            elif netchi <= 0:
                result.netext_one = "(1,1)"
        return result


    @staticmethod
    def thinning_extents(x, i: int, j: int, x_minus, x_plus) -> Tuple[Fraction, Fraction, Fraction]:
        """
        Extents of the new thick surfaces and the new thin surface after an
        elementary thinning.

        Parameters
        ----------
        x : Fraction
            Extent of the thick surface being thinned
        i, j : int
            1 when the disc on that side is a cut disc, 0 for a compressing disc
        x_minus, x_plus : Fraction
            Extents of the consolidated components below and above

        Returns
        -------
        tuple[Fraction, Fraction, Fraction]
            (new upper thick extent, new lower thick extent, new thin extent)
        """
        x = Fraction(x)
        upper = x + i - 1 - x_plus
        lower = x + j - 1 - x_minus
        thin = x + i + j - 2 - x_plus - x_minus
        return upper, lower, thin


    @staticmethod
    def width_algebra(x, i: int, j: int, x_minus, x_plus) -> Tuple[Fraction, Fraction]:
        """
        Both sides of the quadratic identity behind width monotonicity.
        """
        upper, lower, thin = InvariantManager.thinning_extents(x, i, j, x_minus, x_plus)
        lhs = upper ** 2 + lower ** 2 - thin ** 2
        rhs = Fraction(x) ** 2 - 2 * ((j - 1) - Fraction(x_minus)) * ((i - 1) - Fraction(x_plus))
        return lhs, rhs


    @staticmethod
    def width_change(x, i: int, j: int, x_minus, x_plus) -> Fraction:
        """
        Change in width when one thick surface of extent x is replaced by the
        two thick and one thin surface of an elementary thinning.
        """
        lhs, _ = InvariantManager.width_algebra(x, i, j, x_minus, x_plus)
        return 2 * (lhs - Fraction(x) ** 2)

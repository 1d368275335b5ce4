import pytest

from exceptions.exceptions import *
from conftest import data_path
from diagram.diagram_format import format_diagram, parse_diagram, parse_moves, read_diagram
from diagram.diagram_validation import DiagramValidation
from diagram.handle_builder import derive_summary, realizable, witness
from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.graph_pair_meta import GraphPairMeta, TKind
from models.handle_presentation import HandlePresentation, OneHandle, ZeroHandle, ZeroHandleKind
from models.move_spec import MoveKind
from models.surface import SurfaceComp, SurfaceRole

EXAMPLES = ["unknot", "two_bridge", "section7_H", "section7_H_prime", "netext0ce", "theta"]

UNKNOT_TEXT = """\
meta tkind=link valences=[] flags=irr,ssep,csep gbound=0
surface H role=thick genus=0 punctures=2
body A plus=H minus=[] bridge=1 vertical={} ghost=[] loops=0 pockets=0
body B plus=H minus=[] bridge=1 vertical={} ghost=[] loops=0 pockets=0
orient H A B
"""


def first_violation(diagram: Diagram):
    return DiagramValidation.validate_diagram(diagram).first()


@pytest.mark.parametrize("name", EXAMPLES)
def test_example_diagrams_are_valid(name):
    assert DiagramValidation.validate_diagram(read_diagram(data_path(name))).is_valid


def test_closed_flow_line_is_rejected():
    assert isinstance(first_violation(read_diagram(data_path("closed_flow_line"))), ClosedFlowLineException)


def test_require_valid_raises_with_report():
    diagram = parse_diagram(UNKNOT_TEXT.replace("bridge=1 vertical={} ghost=[] loops=0 pockets=0\nbody B",
                                                "bridge=2 vertical={} ghost=[] loops=0 pockets=0\nbody B"))
    with pytest.raises(InvalidDiagramException):
        DiagramValidation.require_valid(diagram)


def test_repeated_minus_surface_is_rejected():
    surfaces = {"H": SurfaceComp("H", 1, 4, SurfaceRole.THICK), "t": SurfaceComp("t", 0, 2, SurfaceRole.THIN)}
    body = Compressionbody("C", "H", ("t", "t"), vertical_arcs={"t": 2})
    violations = DiagramValidation.validate_references(body, surfaces)
    assert [type(v) for v in violations] == [DuplicateIdException]
    assert "t in body C" in violations[0].message


def test_puncture_bookkeeping(corpus):
    diagram = corpus.bridge_diagram(0, 2)
    bodies = dict(diagram.bodies)
    bodies["A"] = Compressionbody("A", "H", bridge_arcs=1)
    assert isinstance(first_violation(diagram.with_changes(bodies=bodies)), PunctureBookkeepingException)


def test_genus_feasibility(corpus):
    diagram = corpus.bridge_diagram(0, 1)
    bodies = dict(diagram.bodies)
    bodies["A"] = Compressionbody("A", "H", bridge_arcs=1, core_loops=1)
    assert isinstance(first_violation(diagram.with_changes(bodies=bodies)), GenusFeasibilityException)


def test_once_punctured_sphere_in_negative_boundary():
    surfaces = {"H": SurfaceComp("H", 0, 1, SurfaceRole.THICK), "s": SurfaceComp("s", 0, 1, SurfaceRole.THIN)}
    body = Compressionbody("C", "H", ("s",), vertical_arcs={"s": 1})
    violations = DiagramValidation.validate_body_in(body, surfaces, TKind.LINK).violations
    assert any(isinstance(violation, OncePuncturedSphereException) for violation in violations)


def test_boundary_sphere_running_assumption(corpus):
    assert isinstance(first_violation(corpus.boundary_diagram(0, 0, 2, 1)), RunningAssumptionException)
    assert DiagramValidation.validate_diagram(corpus.boundary_diagram(0, 0, 4, 1)).is_valid


def test_pocket_trees_need_a_graph(theta):
    diagram = Diagram(meta=GraphPairMeta(t_kind=TKind.LINK, vertex_valences=(3, 3)), surfaces=theta.surfaces,
                      bodies=theta.bodies, orientation=theta.orientation)
    violations = DiagramValidation.validate_diagram(diagram).violations
    assert any(isinstance(violation, PocketTreeException) for violation in violations)


def test_vertex_valences_must_match(theta):
    diagram = Diagram(meta=GraphPairMeta(t_kind=TKind.GRAPH, vertex_valences=(3,)), surfaces=theta.surfaces,
                      bodies=theta.bodies, orientation=theta.orientation)
    assert isinstance(first_violation(diagram), VertexValenceException)


def test_thick_surface_needs_two_bodies(unknot):
    bodies = {"A": unknot.bodies["A"]}
    assert isinstance(first_violation(unknot.with_changes(bodies=bodies)), IncidenceException)


def test_unknown_surface_reference(unknot):
    bodies = dict(unknot.bodies)
    bodies["B"] = Compressionbody("B", "missing", bridge_arcs=1)
    assert isinstance(first_violation(unknot.with_changes(bodies=bodies)), UnknownIdException)


def test_ghost_graph_of_braid_closure_body(netext0ce):
    graph = netext0ce.bodies["C1"].ghost_graph()
    assert graph.is_connected()
    assert graph.degrees() == {"t1": 1, "t2": 1}
    assert graph.leaf_count == 2 and graph.isolated_vertex_count == 0


@pytest.mark.parametrize("name", EXAMPLES)
def test_witness_realizes_every_body(name):
    diagram = read_diagram(data_path(name))
    for body in diagram.bodies.values():
        presentation = witness(body, diagram.surfaces)
        assert presentation is not None
        derived = derive_summary(presentation, body.id, body.plus_id)
        assert derived.body == body
        assert derived.plus == diagram.surfaces[body.plus_id].part


def test_unrealizable_body():
    surfaces = {"H": SurfaceComp("H", 0, 0, SurfaceRole.THICK)}
    assert not realizable(Compressionbody("A", "H", core_loops=1), surfaces)


class TestTextFormat:

    def test_parse_unknot(self):
        diagram = parse_diagram(UNKNOT_TEXT)
        assert diagram.meta.flags == ("irr", "ssep", "csep")
        assert diagram.meta.heegaard_genus_bound == 0
        assert diagram.orientation == {"H": ("A", "B")}
        assert diagram.bodies["A"].bridge_arcs == 1

    @pytest.mark.parametrize("name", EXAMPLES)
    def test_format_is_stable(self, name):
        text = format_diagram(read_diagram(data_path(name)))
        assert format_diagram(parse_diagram(text)) == text

    def test_comments_and_spacing(self):
        text = "# header\n" + UNKNOT_TEXT.replace("genus=0", "genus = 0") + "   # trailing\n"
        assert parse_diagram(text) == parse_diagram(UNKNOT_TEXT)

    @pytest.mark.parametrize("line, fragment", [
        ("blob H", "unknown record"),
        ("surface H genus=0 punctures=2", "missing role"),
        ("surface H role=middle genus=0 punctures=2", "unknown role"),
        ("body A plus=H minus=[t", "unbalanced"),
        ("meta tkind=knot", "unknown tkind"),
        ("orient H A", "orient record"),
    ])
    def test_parse_errors_carry_line_numbers(self, line, fragment):
        with pytest.raises(DiagramParseException) as info:
            parse_diagram("# first\n" + line + "\n")
        assert info.value.line_no == 2
        assert "line 2" in info.value.message
        assert fragment in info.value.message

    def test_empty_values_stay_empty(self):
        text = UNKNOT_TEXT.replace("flags=irr,ssep,csep gbound=0", "flags= gbound=")
        meta = parse_diagram(text).meta
        assert meta.flags == ()
        assert meta.heegaard_genus_bound is None

    def test_empty_value_before_key(self):
        with pytest.raises(DiagramParseException) as info:
            parse_diagram(UNKNOT_TEXT.replace("genus=0 punctures=2", "genus= punctures=2", 1))
        assert info.value.line_no == 2
        assert "genus must be an integer" in info.value.message

    def test_duplicate_surface(self):
        with pytest.raises(DiagramParseException) as info:
            parse_diagram(UNKNOT_TEXT + "surface H role=thick genus=0 punctures=2\n")
        assert info.value.line_no == 6

    def test_parse_moves(self):
        moves = parse_moves("consolidate thin=t1 thick=H2\n\nunperturb thick=H side=A\n"
                            "destabilize kind=meridional thick=H\n")
        assert [move.kind for move in moves] == [MoveKind.CONSOLIDATE, MoveKind.UNPERTURB, MoveKind.DESTABILIZE]
        assert moves[1].side == "A"

    def test_unknown_move(self):
        with pytest.raises(DiagramParseException) as info:
            parse_moves("consolidate thin=t1 thick=H2\nstabilize thick=H\n")
        assert info.value.line_no == 2


class TestHandlePresentations:

    def test_disconnected_presentation(self):
        presentation = HandlePresentation(zero_handles=(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC),
                                                        ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC)))
        with pytest.raises(DisconnectedBodyException):
            derive_summary(presentation)

    def test_cored_handle_needs_bindings(self):
        presentation = HandlePresentation(zero_handles=(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC),),
                                          one_handles=(OneHandle((0, 0), cored=True),))
        with pytest.raises(DanglingEndpointException):
            derive_summary(presentation)

    @pytest.mark.parametrize("bindings", [(0, 0), (0, 1), (1, 0), (1, 1)])
    def test_cored_handle_joins_two_balls(self, bindings):
        presentation = HandlePresentation(zero_handles=(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC),
                                                        ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC)),
                                          one_handles=(OneHandle((0, 1), cored=True, endpoint_bindings=bindings),))
        derived = derive_summary(presentation)
        assert derived.plus.genus == 0 and derived.plus.punctures == 2
        assert derived.body.bridge_arcs == 1
        assert derived.body.core_loops == 0 and derived.body.minus_ids == ()

    def test_solid_torus_with_core(self):
        presentation = HandlePresentation(zero_handles=(ZeroHandle(ZeroHandleKind.TRIVIAL_BALL_ARC),),
                                          one_handles=(OneHandle((0, 0), cored=True, endpoint_bindings=(0, 1)),))
        derived = derive_summary(presentation)
        assert derived.body.core_loops == 1 and derived.body.bridge_arcs == 0
        assert derived.plus.genus == 1 and derived.plus.punctures == 0

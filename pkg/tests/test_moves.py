import pytest
from hypothesis import given, settings, strategies as st

from exceptions.exceptions import *
from diagram.consolidation import consolidation_candidates, is_trivial_product
from diagram.diagram_validation import DiagramValidation
from events.events import EventType
from managers.corpus_manager import CorpusManager
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from models.move_spec import DestabilizationKind, MoveKind, MoveSpec


def quantities(diagram):
    return InvariantManager.netchi(diagram), InvariantManager.netext(diagram), InvariantManager.width(diagram)


def test_consolidation_of_trivial_product(corpus):
    stack = corpus.stacked_spheres([4, 4], [4])
    assert is_trivial_product(stack.bodies["V1"], stack.surfaces)
    assert consolidation_candidates(stack) == [("t1", "H1"), ("t1", "H2")]
    result = MoveManager().apply_move(stack, MoveSpec.consolidation("t1", "H1"))
    assert set(result.surfaces) == {"H2"}
    assert result.bodies["V2"].bridge_arcs == 2
    assert result.orientation == {"H2": ("V2", "V3")}
    assert InvariantManager.netext(result) == InvariantManager.netext(stack) == 1
    assert InvariantManager.width(result) == 2


def test_consolidation_needs_trivial_product(section7_h):
    with pytest.raises(InvalidMoveException):
        MoveManager().apply_move(section7_h, MoveSpec.consolidation("t1", "H1"))


def test_plain_destabilization(corpus):
    diagram = corpus.bridge_diagram(1, 1)
    result = MoveManager().apply_move(diagram, MoveSpec.destabilize(DestabilizationKind.PLAIN, "H"))
    assert result.surfaces["H"].part == corpus.bridge_diagram(0, 1).surfaces["H"].part
    assert quantities(result) == (-2, 0, 0)


def test_meridional_destabilization_adds_bridges(corpus):
    diagram = corpus.bridge_diagram(1, 1)
    result = MoveManager().apply_move(diagram, MoveSpec.destabilize(DestabilizationKind.MERIDIONAL, "H"))
    assert result.surfaces["H"].punctures == 4
    assert all(body.bridge_arcs == 2 for body in result.bodies.values())
    assert InvariantManager.netext(result) == InvariantManager.netext(diagram)


def test_destabilization_needs_genus(unknot):
    with pytest.raises(InvalidMoveException):
        MoveManager().apply_move(unknot, MoveSpec.destabilize(DestabilizationKind.PLAIN, "H"))


def test_boundary_destabilization_needs_parts(corpus):
    diagram = corpus.boundary_diagram(1, 1, 0, 1)
    with pytest.raises(InvalidMoveException):
        MoveManager().apply_move(diagram, MoveSpec.destabilize(DestabilizationKind.BOUNDARY, "H"))


def test_unperturb_two_bridge_to_unknot(two_bridge, unknot):
    result = MoveManager().apply_move(two_bridge, MoveSpec.unperturb("H"))
    assert result == unknot


def test_unperturb_keeps_thick_spheres_twice_punctured(unknot):
    with pytest.raises(InvalidMoveException):
        MoveManager().apply_move(unknot, MoveSpec.unperturb("H"))


def test_removable_arc_needs_more_than_a_ball(two_bridge):
    with pytest.raises(InvalidMoveException):
        MoveManager().apply_move(two_bridge, MoveSpec.remove_removable_arc("H"))


def test_moves_reject_unknown_thick_surface(unknot):
    with pytest.raises(UnknownIdException):
        MoveManager().apply_move(unknot, MoveSpec.unperturb("H9"))


def test_moves_reject_invalid_input(unknot):
    bodies = {"A": unknot.bodies["A"]}
    with pytest.raises(InvalidDiagramException):
        MoveManager().apply_move(unknot.with_changes(bodies=bodies), MoveSpec.unperturb("H"))


def test_moves_register_events(two_bridge):
    events = EventManager()
    MoveManager(events).apply_move(two_bridge, MoveSpec.unperturb("H"))
    event = events.get_event()
    assert event.type == EventType.UNPERTURBED
    assert event.netext == 0 and event.width == 0
    assert "unperturb" in event.description


def test_elementary_thinning_of_stack(section7_h):
    manager = MoveManager()
    thinned, steps = None, []
    for spec in manager.untelescope_candidates(section7_h):
        try:
            thinned, steps = manager.elementary_thinning_steps(section7_h, spec)
            break
        except VPBridgeException:
            continue
    assert thinned is not None
    assert steps[0].kind == MoveKind.UNTELESCOPE
    assert all(step.kind == MoveKind.CONSOLIDATE for step in steps[1:])
    assert InvariantManager.netext(thinned) == 10
    assert InvariantManager.width(thinned) <= 92
    assert DiagramValidation.validate_diagram(thinned).is_valid


def test_extended_thinning_needs_leading_untelescope(two_bridge):
    manager = MoveManager()
    with pytest.raises(EmptyScriptException):
        manager.extended_thinning(two_bridge, [])
    with pytest.raises(EmptyScriptException):
        manager.extended_thinning(two_bridge, [MoveSpec.unperturb("H")])


def test_extended_thinning_replays_random_script(corpus):
    diagram = corpus.random_diagram()
    script = corpus.random_script(diagram)
    if not script:
        pytest.skip("no thinning applies to the drawn diagram")
    events = EventManager()
    result, applied = MoveManager(events).extended_thinning_steps(diagram, script)
    assert len(applied) >= len(script)
    assert events.get_events_by_type(EventType.THINNING_FINISHED)
    assert InvariantManager.netext(result) <= InvariantManager.netext(diagram)


def test_lint_flags_spheres_disjoint_from_t(corpus):
    report = MoveManager.locally_thin_lint(corpus.bridge_diagram(0, 0))
    assert not report.passes
    assert report.asserted


def test_lint_flags_consolidable_products(corpus):
    report = MoveManager.locally_thin_lint(corpus.stacked_spheres([4, 4], [4]))
    assert any("consolidation of t1" in issue for issue in report.issues)


def test_lint_passes_on_stack(section7_h):
    assert MoveManager.locally_thin_lint(section7_h).passes


def test_split_shapes_skip_small_spheres(unknot):
    shapes = list(MoveManager.split_shapes(unknot.surfaces["H"], 0))
    assert shapes == []
    shapes = list(MoveManager.split_shapes(unknot.surfaces["H"], 1))
    assert all(part.punctures >= 2 for split in shapes for part in split)


@pytest.mark.slow
def test_untelescoping_preserves_netext_and_netchi(corpus):
    checked = 0
    while checked < 10000:
        diagram = corpus.random_diagram(steps=1)
        found = corpus.random_untelescope(diagram, track_width=bool(corpus.rng.random() < 0.5))
        if found is None:
            continue
        _, result = found
        assert InvariantManager.netext(result) == InvariantManager.netext(diagram)
        assert InvariantManager.netchi(result) == InvariantManager.netchi(diagram)
        checked += 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.booleans())
def test_random_untelescope_keeps_netext_and_netchi(seed, track_width):
    corpus = CorpusManager(seed)
    diagram = corpus.random_diagram(steps=1)
    found = corpus.random_untelescope(diagram, track_width=track_width)
    if found is None:
        return
    _, result = found
    assert DiagramValidation.validate_diagram(result).is_valid
    assert InvariantManager.netext(result) == InvariantManager.netext(diagram)
    assert InvariantManager.netchi(result) == InvariantManager.netchi(diagram)


@pytest.mark.slow
def test_thinning_scripts_are_monotone(corpus):
    manager = MoveManager()
    scripts = 0
    while scripts < 1000:
        diagram = corpus.random_diagram(steps=1)
        script = corpus.random_script(diagram, length=3)
        if not script:
            continue
        assert manager.tracks_width(diagram)
        for move in script:
            before = quantities(diagram)
            if move.kind == MoveKind.UNTELESCOPE:
                diagram = manager.elementary_thinning(diagram, move.untelescope)
            else:
                diagram = manager.apply_move(diagram, move)
            after = quantities(diagram)
            assert all(new <= old for new, old in zip(after, before)), (str(move), before, after)
        scripts += 1


def test_event_listeners_and_history(two_bridge):
    events = EventManager(max_recent_events=2)
    seen = []
    events.add_listener(seen.append)
    events.register_event(EventType.SEARCH_STARTED, netext=1, width=2, netchi=-2)
    MoveManager(events).apply_move(two_bridge, MoveSpec.unperturb("H"))
    events.register_event(EventType.SEARCH_FINISHED, count=1)
    assert [event.type for event in seen] == [EventType.SEARCH_STARTED, EventType.UNPERTURBED,
                                              EventType.SEARCH_FINISHED]
    assert events.recent_events == seen[1:]
    assert events.get_events_by_type(EventType.UNPERTURBED) == [seen[1]]
    assert events.get_event() is seen[0]

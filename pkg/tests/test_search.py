from collections import Counter

import pytest
from pydantic import ValidationError

from exceptions.exceptions import *
from events.events import EventType
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.search_manager import CanonicalStore, SearchManager, diagram_graph
from managers.sum_manager import SumManager
from models.invariant_report import DeltaZeroClass
from models.move_spec import MoveKind
from models.search_budget import SearchBudget


def test_enumerate_smallest_bodies():
    bodies = SearchManager.enumerate_bodies((0, 2, 0))
    assert len(bodies) == 2
    classes = Counter(body.witness_class for body in bodies)
    assert classes == Counter({DeltaZeroClass.BALL_ARC: 1, DeltaZeroClass.NOT_DELTA_ZERO: 1})
    assert all(body.realizable for body in bodies)


def test_enumeration_guard():
    with pytest.raises(LimitsTooLargeException):
        SearchManager.enumerate_bodies((5, 1, 1))


def check_enumerated(bodies):
    empty_balls = 0
    for entry in bodies:
        delta = InvariantManager.delta(entry.body, entry.surfaces)
        if InvariantManager.is_empty_ball(entry.body, entry.surfaces):
            empty_balls += 1
            assert delta == -1
            continue
        assert delta >= 0, entry.body
        if delta == 0:
            assert InvariantManager.classify_delta_zero(entry.body, entry.surfaces) == entry.witness_class, entry.body
        else:
            assert entry.witness_class == DeltaZeroClass.NOT_DELTA_ZERO
    assert empty_balls == 1


def test_delta_is_nonnegative_on_small_bodies():
    bodies = SearchManager.enumerate_bodies((1, 4, 2))
    check_enumerated(bodies)
    classes = {entry.witness_class for entry in bodies}
    assert DeltaZeroClass.SOLID_TORUS_CORE in classes
    assert DeltaZeroClass.VERTICAL_GHOST_TYPE4 in classes


@pytest.mark.slow
def test_delta_is_nonnegative_on_default_enumeration():
    check_enumerated(SearchManager.enumerate_bodies())


def test_canonical_store_identifies_isomorphic_diagrams(section7_h, two_bridge):
    store = CanonicalStore()
    assert store.insert(section7_h) is not None
    assert store.insert(SumManager.prefixed(section7_h, "x.")) is None
    assert store.insert(two_bridge) is not None
    assert store.insert(SumManager.flip(two_bridge)) is None
    assert store.count == 2


def test_incidence_graph_labels(netext0ce):
    graph = diagram_graph(netext0ce)
    ghosts = [node for node, label in graph.nodes(data="label") if label == "ghost"]
    assert len(ghosts) == 2
    assert graph.nodes[("s", "t1")]["label"] == "s:thin:0:2:False"


def test_minimize_unknot_finds_nothing(unknot):
    events = EventManager()
    result = SearchManager(events).minimize(unknot, SearchBudget(max_depth=1))
    assert result.script == []
    assert result.best == unknot
    assert result.lines()[-1] == "upper_bound=yes"
    assert events.get_events_by_type(EventType.SEARCH_STARTED)
    assert events.get_events_by_type(EventType.SEARCH_FINISHED)
    assert not events.get_events_by_type(EventType.SEARCH_IMPROVED)


def test_minimize_two_bridge_unperturbs(two_bridge):
    result = SearchManager().minimize(two_bridge, SearchBudget(max_depth=1))
    assert result.report.netext == 0
    assert [move.kind for move in result.script] == [MoveKind.UNPERTURB]
    assert not result.exhausted


def test_minimize_stops_at_diagram_budget(two_bridge):
    events = EventManager()
    result = SearchManager(events).minimize(two_bridge, SearchBudget(max_depth=2, max_diagrams=1))
    assert result.exhausted
    assert result.best == two_bridge
    assert events.get_events_by_type(EventType.SEARCH_EXHAUSTED)


def test_minimize_rejects_start_above_cap(corpus):
    with pytest.raises(BudgetException):
        SearchManager().minimize(corpus.bridge_diagram(2, 1), SearchBudget(netchi_cap=0))


def test_width_tracking_needs_flags(corpus):
    with pytest.raises(BudgetException):
        SearchManager().minimize(corpus.bridge_diagram(0, 2, flags=False), SearchBudget(width_tracking=True))


def test_budget_validation():
    with pytest.raises(ValidationError):
        SearchBudget(netchi_cap=0, heegaard_genus_bound=2)
    with pytest.raises(ValidationError):
        SearchBudget(max_depth=0)
    assert SearchBudget(netchi_cap=2, heegaard_genus_bound=2).admits(2)
    assert not SearchBudget(netchi_cap=2).admits(3)


def test_parallel_expansion_matches_serial(two_bridge):
    serial = SearchManager().minimize(two_bridge, SearchBudget(max_depth=1))
    parallel = SearchManager().minimize(two_bridge, SearchBudget(max_depth=1, parallel=True, num_workers=2))
    assert parallel.best == serial.best
    assert parallel.visited == serial.visited


@pytest.mark.slow
def test_search_thins_stack_below_alternative(section7_h):
    result = SearchManager().minimize(section7_h, SearchBudget(max_depth=2, beam_width=8, width_tracking=True))
    assert result.report.width <= 74
    assert result.report.netext <= 10

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exceptions.exceptions import *
from diagram.diagram_format import parse_diagram
from diagram.diagram_validation import DiagramValidation
from events.events import EventType
from managers.corpus_manager import CorpusManager
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.sum_manager import SumManager
from models.compressionbody import Compressionbody
from models.sum_point import SumPoint

# Theta graph whose bridge sphere cuts off a pocket tree on each side
TRIPOD = """\
meta tkind=graph valences=[3,3] flags=irr,ssep,csep gbound=0
surface H role=thick genus=0 punctures=3
body A plus=H minus=[] bridge=0 vertical={} ghost=[] loops=0 pockets=1
body B plus=H minus=[] bridge=0 vertical={} ghost=[] loops=0 pockets=1
orient H A B
"""


def test_glue_two_bridge_knots(two_bridge):
    events = EventManager()
    whole = SumManager(events).glue(two_bridge, SumPoint("A", 2), two_bridge, SumPoint("A", 2))
    assert DiagramValidation.validate_diagram(whole).is_valid
    assert {"a.H", "b.H", "P"} <= set(whole.surfaces)
    assert whole.surfaces["P"].punctures == 2
    assert InvariantManager.netext(whole) == 2
    assert InvariantManager.width(whole) == 4
    assert InvariantManager.netchi(whole) == -2
    assert events.get_events_by_type(EventType.DIAGRAMS_GLUED)


def test_glued_sum_splits_back(two_bridge):
    sums = SumManager()
    whole = sums.glue(two_bridge, SumPoint("A", 2), two_bridge, SumPoint("B", 2))
    result = sums.split_prime(whole)
    assert (len(result.factors), result.p2, result.p3) == (2, 1, 0)
    assert [InvariantManager.netext(f) for f in result.factors] == [1, 1]
    assert result.dual_tree.number_of_edges() == 1


def test_theta_graphs_sum_at_trivalent_vertex(theta):
    sums = SumManager()
    whole = sums.glue(theta, SumPoint("A", 3, "pocket"), theta, SumPoint("A", 3, "pocket"))
    assert InvariantManager.netext(whole) == Fraction(5, 2)
    assert whole.meta.vertex_valences == (3, 3)
    assert all(check.holds for check in sums.additivity_check([theta, theta], whole, 0, 1))
    result = sums.split_prime(whole)
    assert (len(result.factors), result.p2, result.p3) == (2, 0, 1)


def test_summing_with_the_unknot_keeps_invariants(two_bridge, unknot):
    whole = SumManager().glue(two_bridge, SumPoint("A", 2), unknot, SumPoint("A", 2))
    assert DiagramValidation.validate_diagram(whole).is_valid
    assert InvariantManager.netext(whole) == InvariantManager.netext(two_bridge) == 1
    assert InvariantManager.width(whole) == InvariantManager.width(two_bridge) == 2
    assert InvariantManager.netchi(whole) == InvariantManager.netchi(two_bridge)


def test_cap_twice_punctured_scar(two_bridge):
    whole = SumManager().glue(two_bridge, SumPoint("A", 2), two_bridge, SumPoint("A", 2))
    host = whole.bodies["a.A"]
    assert (host.minus_ids, host.bridge_arcs, host.vertical_arcs) == (("P",), 1, {"P": 2})
    capped = SumManager.cap_twice_punctured(host, "P")
    assert capped == Compressionbody("a.A", "a.H", bridge_arcs=2)
    with pytest.raises(TracingException):
        SumManager.cap_twice_punctured(Compressionbody("C", "H", ("P",), vertical_arcs={"P": 3}), "P")


def test_cut_open_caps_trivalent_scars(theta):
    tripod = parse_diagram(TRIPOD)
    whole = SumManager().glue(theta, SumPoint("A", 3, "pocket"), tripod, SumPoint("A", 3, "pocket"))
    cut = SumManager._cut_open(whole, ["P"])
    assert "P" not in cut.surfaces
    # The tripod side is a product over the sphere and collapses to a pocket tree
    assert cut.bodies["b.A"] == Compressionbody("b.A", "b.H", pocket_trees=1)
    assert DiagramValidation.validate_body(cut.bodies["b.A"], cut).is_valid
    # The theta side keeps its bridge arc and gets a drilled scar
    scar = cut.surfaces["P.a.A"]
    assert scar.drilled and scar.punctures == 3
    assert cut.bodies["a.A"].vertical_arcs == {"P.a.A": 3}
    assert DiagramValidation.validate_body(cut.bodies["a.A"], cut).is_valid


def test_kind_mismatch(two_bridge, theta):
    with pytest.raises(KindMismatchException):
        SumManager().glue(two_bridge, SumPoint("A", 2), theta, SumPoint("A", 3, "pocket"))


def test_sum_point_needs_a_decoration(two_bridge):
    with pytest.raises(InvalidSumPointException):
        SumManager().glue(two_bridge, SumPoint("A", 2, "loop"), two_bridge, SumPoint("A", 2))


def test_trivalent_sum_needs_a_graph(two_bridge, theta):
    with pytest.raises(InvalidSumPointException):
        SumManager().glue(two_bridge, SumPoint("A", 3, "pocket"), theta, SumPoint("A", 3, "pocket"))


def test_sum_point_parsing():
    assert SumPoint.parse("A", 2) == SumPoint("A", 2, "bridge")
    assert SumPoint.parse("B:vertical:t1", 2).cut_argument == "t1"
    assert SumPoint.parse("C", 3).cut == "pocket"
    with pytest.raises(InvalidSumPointException):
        SumPoint("A", 4).check()


def test_flip_is_an_involution(section7_h, netext0ce):
    for diagram in (section7_h, netext0ce):
        flipped = SumManager.flip(diagram)
        assert DiagramValidation.validate_diagram(flipped).is_valid
        assert flipped.orientation != diagram.orientation
        assert SumManager.flip(flipped) == diagram
        assert InvariantManager.netext(flipped) == InvariantManager.netext(diagram)
        assert InvariantManager.width(flipped) == InvariantManager.width(diagram)
        assert InvariantManager.netchi(flipped) == InvariantManager.netchi(diagram)


def test_split_prime_needs_irreducible_flag(corpus):
    with pytest.raises(PreconditionException):
        SumManager().split_prime(corpus.bridge_diagram(0, 2, flags=False))


def test_split_prime_needs_lint(corpus):
    with pytest.raises(PreconditionException):
        SumManager().split_prime(corpus.stacked_spheres([4, 4], [4]))


def test_prime_diagram_is_one_factor(section7_h):
    result = SumManager().split_prime(section7_h)
    assert (len(result.factors), result.p2, result.p3) == (1, 0, 0)


def test_additivity_over_random_glue_trees(corpus):
    sums = SumManager()
    for _ in range(100):
        tree = corpus.random_glue_tree(parts=int(corpus.rng.integers(2, 5)))
        checks = sums.additivity_check(tree.parts, tree.whole, tree.p2, tree.p3)
        assert all(check.holds for check in checks), [check.line() for check in checks]
        result = sums.split_prime(tree.whole)
        assert (result.p2, result.p3) == (tree.p2, tree.p3)
        assert Counter(InvariantManager.netext(f) for f in result.factors) == \
            Counter(InvariantManager.netext(p) for p in tree.parts)


seeds = st.integers(0, 2 ** 32 - 1)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_flip_keeps_invariants_of_random_diagrams(seed):
    diagram = CorpusManager(seed).random_diagram(steps=1)
    flipped = SumManager.flip(diagram)
    assert DiagramValidation.validate_diagram(flipped).is_valid
    assert SumManager.flip(flipped) == diagram
    assert InvariantManager.netext(flipped) == InvariantManager.netext(diagram)
    assert InvariantManager.width(flipped) == InvariantManager.width(diagram)
    assert InvariantManager.netchi(flipped) == InvariantManager.netchi(diagram)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(2, 4))
def test_glue_trees_are_additive(seed, parts):
    sums = SumManager()
    tree = CorpusManager(seed).random_glue_tree(parts=parts)
    checks = sums.additivity_check(tree.parts, tree.whole, tree.p2, tree.p3)
    assert all(check.holds for check in checks), [check.line() for check in checks]
    result = sums.split_prime(tree.whole)
    assert (result.p2, result.p3) == (tree.p2, tree.p3)

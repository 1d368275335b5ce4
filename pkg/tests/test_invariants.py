from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exceptions.exceptions import DeltaNonZeroException, HypothesisViolatedException, PreconditionException
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from models.compressionbody import Compressionbody
from models.invariant_report import DeltaZeroClass
from models.surface import SurfaceComp, SurfaceRole

half_integers = st.integers(-20, 40).map(lambda n: Fraction(n, 2))


def surfaces_of(*surfaces):
    return {surface.id: surface for surface in surfaces}


def test_unknot_invariants(unknot):
    report = InvariantManager.invariants(unknot)
    assert report.netext == 0
    assert report.width == 0
    assert report.netchi == -2
    assert report.delta_by_body == {"A": 0, "B": 0}


def test_two_bridge_invariants(two_bridge):
    assert InvariantManager.netext(two_bridge) == 1
    assert InvariantManager.width(two_bridge) == 2
    assert InvariantManager.gabai_width(two_bridge) == 8


def test_stacked_sphere_invariants(section7_h, section7_h_prime):
    assert InvariantManager.netext(section7_h) == 10
    assert InvariantManager.width(section7_h) == 92
    assert InvariantManager.netext(section7_h_prime) == 9
    assert InvariantManager.width(section7_h_prime) == 74


def test_corpus_stack_matches_data_file(corpus, section7_h):
    stack = corpus.stacked_spheres([10, 10, 10], [4, 4])
    assert InvariantManager.width(stack) == InvariantManager.width(section7_h)
    assert InvariantManager.gabai_width(stack) == Fraction(3 * 100 - 2 * 16, 2)


def test_theta_has_half_integer_extent(theta):
    assert InvariantManager.netext(theta) == Fraction(3, 2)
    assert InvariantManager.width(theta) == Fraction(9, 2)
    assert InvariantManager.gabai_width(theta) == Fraction(25, 2)


def test_gabai_width_needs_spheres(corpus):
    assert InvariantManager.gabai_width(corpus.bridge_diagram(1, 1)) is None


@pytest.mark.parametrize("name", ["unknot", "two_bridge", "section7_h", "section7_h_prime", "netext0ce", "theta"])
def test_identities_hold_on_examples(name, request):
    diagram = request.getfixturevalue(name)
    checks = InvariantManager.check_identities(diagram)
    assert all(check.holds for check in checks if check.kind == "identity")
    assert {"net_extent", "width"} <= {check.name for check in checks}


def test_chunk_identity_skipped_for_graphs(theta, unknot):
    assert "chunks" not in {check.name for check in InvariantManager.check_identities(theta)}
    assert "chunks" in {check.name for check in InvariantManager.check_identities(unknot)}


def test_braid_closure_has_zero_net_extent(netext0ce):
    assert InvariantManager.netext(netext0ce) == 0
    assert all(delta == 0 for delta in InvariantManager.invariants(netext0ce).delta_by_body.values())


def test_nonnegativity_bound(unknot, theta, section7_h):
    result = InvariantManager.nonnegativity_bound(unknot)
    assert result.bound == 0 and result.satisfied
    assert InvariantManager.nonnegativity_bound(theta).bound == Fraction(1, 2)
    stacked = InvariantManager.nonnegativity_bound(section7_h)
    assert stacked.width_checked and stacked.width_satisfied


def test_nonnegativity_needs_irreducible_flag(corpus):
    with pytest.raises(PreconditionException):
        InvariantManager.nonnegativity_bound(corpus.bridge_diagram(0, 1, flags=False))


def test_nonnegativity_rejects_empty_ball(corpus):
    with pytest.raises(PreconditionException):
        InvariantManager.nonnegativity_bound(corpus.bridge_diagram(0, 0))


class TestEqualityCase:

    def check(self, diagram):
        return InvariantManager.equality_check(diagram, MoveManager.locally_thin_lint(diagram))

    def test_unknot_attains_the_bound(self, unknot):
        result = self.check(unknot)
        assert result.attained_by == "netext"
        assert result.holds
        assert result.classes == {"A": DeltaZeroClass.BALL_ARC, "B": DeltaZeroClass.BALL_ARC}
        assert result.unknot is True
        assert result.netext_one is None

    def test_braid_closure_bodies_are_extent_neutral(self, netext0ce):
        diagram = netext0ce.with_changes(meta=replace(netext0ce.meta, irreducible_flag=True))
        result = self.check(diagram)
        assert result.attained_by == "netext"
        assert result.holds
        assert result.classes == {"B1": DeltaZeroClass.BALL_ARC, "B2": DeltaZeroClass.BALL_ARC,
                                  "C1": DeltaZeroClass.VERTICAL_GHOST_TYPE4,
                                  "C2": DeltaZeroClass.VERTICAL_GHOST_TYPE4}
        # spheres need not separate here, so unknot detection does not apply
        assert result.unknot is None

    def test_braid_closure_is_no_unknot_when_spheres_separate(self, netext0ce):
        meta = replace(netext0ce.meta, irreducible_flag=True, every_sphere_separates_flag=True)
        result = self.check(netext0ce.with_changes(meta=meta))
        assert result.unknot is False
        assert any(line.startswith("unknot no") for line in result.lines())

    def test_two_bridge_is_above_the_bound(self, two_bridge):
        result = self.check(two_bridge)
        assert result.attained_by is None
        assert result.classes == {}
        assert result.netext_one == "2-bridge"
        assert result.lines()[0] == "equality attained=no"

    def test_lint_failure_skips_the_equality_case(self, corpus):
        stack = corpus.stacked_spheres([2, 2], [2])
        assert InvariantManager.netext(stack) == 0
        assert self.check(stack).attained_by is None

    def test_theta_is_above_the_bound(self, theta):
        assert self.check(theta).attained_by is None

    def test_needs_irreducible_flag(self, netext0ce):
        with pytest.raises(PreconditionException):
            self.check(netext0ce)


class TestDeltaZeroClassifier:

    def test_ball_arc(self):
        body = Compressionbody("A", "H", bridge_arcs=1)
        surfaces = surfaces_of(SurfaceComp("H", 0, 2, SurfaceRole.THICK))
        assert InvariantManager.classify_delta_zero(body, surfaces) == DeltaZeroClass.BALL_ARC

    def test_solid_tori(self):
        surfaces = surfaces_of(SurfaceComp("H", 1, 0, SurfaceRole.THICK))
        empty = Compressionbody("A", "H")
        cored = Compressionbody("A", "H", core_loops=1)
        assert InvariantManager.classify_delta_zero(empty, surfaces) == DeltaZeroClass.SOLID_TORUS_EMPTY
        assert InvariantManager.classify_delta_zero(cored, surfaces) == DeltaZeroClass.SOLID_TORUS_CORE

    def test_vertical_ghost(self, netext0ce):
        body = netext0ce.bodies["C1"]
        assert InvariantManager.classify_delta_zero(body, netext0ce.surfaces) == DeltaZeroClass.VERTICAL_GHOST_TYPE4

    def test_nonzero_delta_raises(self, two_bridge):
        with pytest.raises(DeltaNonZeroException):
            InvariantManager.classify_delta_zero(two_bridge.bodies["A"], two_bridge.surfaces)

    def test_pocket_trees_raise(self, theta):
        with pytest.raises(HypothesisViolatedException):
            InvariantManager.classify_delta_zero(theta.bodies["A"], theta.surfaces)

    def test_twice_cored_torus_is_not_delta_zero(self):
        surfaces = surfaces_of(SurfaceComp("H", 1, 0, SurfaceRole.THICK))
        body = Compressionbody("A", "H", core_loops=2)
        assert InvariantManager.classify_delta_zero(body, surfaces) == DeltaZeroClass.NOT_DELTA_ZERO


def test_width_algebra_spot_value():
    lhs, rhs = InvariantManager.width_algebra(4, 1, 0, 0, 1)
    assert lhs == rhs == 14


@given(half_integers, st.integers(0, 1), st.integers(0, 1), half_integers, half_integers)
def test_width_algebra_identity(x, i, j, x_minus, x_plus):
    lhs, rhs = InvariantManager.width_algebra(x, i, j, x_minus, x_plus)
    assert lhs == rhs


@given(half_integers, st.integers(0, 1), st.integers(0, 1), st.integers(0, 20).map(lambda n: Fraction(n, 2)),
       st.integers(0, 20).map(lambda n: Fraction(n, 2)))
def test_width_does_not_grow_for_nonnegative_remainders(x, i, j, x_minus, x_plus):
    upper, lower, thin = InvariantManager.thinning_extents(x, i, j, x_minus, x_plus)
    assert upper + lower - thin == x
    assert InvariantManager.width_change(x, i, j, x_minus, x_plus) <= 0


@pytest.mark.slow
def test_identities_hold_on_random_corpus(corpus):
    for _ in range(1000):
        diagram = corpus.random_diagram(steps=2)
        checks = InvariantManager.check_identities(diagram)
        failed = [check.line() for check in checks if check.kind == "identity" and not check.holds]
        assert not failed, failed

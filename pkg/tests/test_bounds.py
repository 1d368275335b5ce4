from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from exceptions.exceptions import DegenerateInputException
from managers.bounds_manager import BoundsManager
from models.summand_profile import SummandProfile


@pytest.mark.parametrize("genus, bridges, expected", [
    (0, 1, (0, 0, 0)),
    (0, 2, (1, 1, 1)),
    (0, 3, (2, 2, 2)),
    (1, 1, (1, 1, 0)),
    (1, 2, (2, 2, 1)),
    (2, 0, (1, 0, 0)),
    (3, 1, (3, 2, 0)),
])
def test_morimoto_table(genus, bridges, expected):
    assert BoundsManager.morimoto_bounds(genus, bridges) == expected


@pytest.mark.parametrize("genus, bridges", [(0, 0), (-1, 2), (1, -1)])
def test_morimoto_rejects_degenerate_input(genus, bridges):
    with pytest.raises(DegenerateInputException):
        BoundsManager.morimoto_bounds(genus, bridges)


@given(st.integers(0, 20), st.integers(0, 20))
def test_morimoto_is_monotone_in_bridges(genus, bridges):
    if genus == 0 and bridges == 0:
        bridges = 1
    low = BoundsManager.morimoto_bounds(genus, bridges)
    high = BoundsManager.morimoto_bounds(genus, bridges + 1)
    assert all(a <= b for a, b in zip(low, high))
    assert low[1] <= low[0] and low[2] <= low[0]


def test_tunnel_bounds_single_summand():
    assert BoundsManager.tunnel_bounds(SummandProfile(n=1, tunnel_numbers=[1])) == (1, 1)


def test_tunnel_bounds_with_small_summands():
    profile = SummandProfile(n=3, j=2, tunnel_numbers=[1, 2, 1])
    assert BoundsManager.tunnel_bounds(profile) == (1 + 3, 2 + 4)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6), st.data())
def test_tunnel_lower_never_exceeds_upper(tunnels, data):
    j = data.draw(st.integers(0, len(tunnels)))
    lower, upper = BoundsManager.tunnel_bounds(SummandProfile(n=len(tunnels), j=j, tunnel_numbers=tunnels))
    assert lower <= upper


def test_summand_profile_rejects_bad_counts():
    with pytest.raises(ValidationError):
        SummandProfile(n=2, j=3, tunnel_numbers=[1, 1])
    with pytest.raises(ValidationError):
        SummandProfile(n=2, tunnel_numbers=[1])
    with pytest.raises(ValidationError):
        SummandProfile(n=0, tunnel_numbers=[])


def test_schubert_bound_takes_integer_part():
    assert BoundsManager.schubert_bound(1) == 1
    assert BoundsManager.schubert_bound(Fraction(5, 2)) == 2


def test_minimization_floor():
    assert BoundsManager.minimization_floor(0) == -2
    assert BoundsManager.minimization_floor(3) == 4


def test_superadditivity_holds_for_additive_sum():
    checks = {check.name: check for check in BoundsManager.bridge_superadditivity_check(0, 3, [(0, 2), (0, 2)],
                                                                                        [True, True])}
    assert checks["superadditivity"].holds
    assert checks["bridge_sum"].holds
    assert checks["doll"].holds
    assert "genus_split" not in checks


def test_superadditivity_flags_violations():
    checks = {check.name: check for check in BoundsManager.bridge_superadditivity_check(1, 1, [(1, 2), (1, 2)])}
    assert not checks["superadditivity"].holds
    assert not checks["genus_split"].holds
    assert "bridge_sum" not in checks

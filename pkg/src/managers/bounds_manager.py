from fractions import Fraction
from math import ceil
from typing import List, Optional, Tuple

from exceptions.exceptions import DegenerateInputException
from models.invariant_report import IdentityCheck
from models.summand_profile import SummandProfile


class BoundsManager:
    """
    Closed-form consequences of additivity for classical knot invariants.

    These evaluate formulas only; nothing checks that the inputs describe
    actual knots.
    """


    @staticmethod
    def tunnel_bounds(profile: SummandProfile) -> Tuple[int, int]:
        """
        Bounds on the tunnel number of a composite knot.

        Parameters
        ----------
        profile : SummandProfile
            Tunnel numbers of the summands, m-small ones first

        Returns
        -------
        tuple[int, int]
            (n - j + sum of the m-small tunnel numbers, n - 1 + sum of all tunnel numbers)
        """
        lower = (profile.n - profile.j) + sum(profile.tunnel_numbers[:profile.j])
        upper = (profile.n - 1) + sum(profile.tunnel_numbers)
        return lower, upper


    @staticmethod
    def morimoto_bounds(genus: int, bridges: int) -> Tuple[int, int, int]:
        """
        Summand counts for a knot with a (g, b)-decomposition.

        Returns
        -------
        tuple[int, int, int]
            The maximum number of prime summands, and when that maximum is
            reached, the least number of summands with (1,1)-decompositions
            and the least number of 2-bridge summands

        Raises
        ------
        DegenerateInputException
            (g, b) is (0, 0) or negative
        """
        if genus < 0 or bridges < 0:
            raise DegenerateInputException(f"(g, b) = ({genus}, {bridges}) has a negative entry")
        if genus == 0 and bridges == 0:
            raise DegenerateInputException("(g, b) = (0, 0) carries no knot")
        max_summands = genus + bridges - 1
        min_11 = max(0, ceil(Fraction(genus, 2) + bridges - 1))
        min_2bridge = max(0, bridges - 1)
        return max_summands, min_11, min_2bridge


    @staticmethod
    def schubert_bound(netext) -> int:
        """At most netext prime summands for a knot with a certificate of that net extent."""
        return int(Fraction(netext))


    @staticmethod
    def doll_upper_bound(b1: int, b2: int) -> int:
        return max(b1, 1) + max(b2, 1) - 1


    @staticmethod
    def minimization_floor(genus: int) -> int:
        """Smallest admissible netchi cap for a pair of Heegaard genus ``genus``."""
        return 2 * genus - 2


    @staticmethod
    def bridge_superadditivity_check(genus: int, bridge_number: int, parts: List[Tuple[int, int]],
                                     tunnel_flags: Optional[List[bool]] = None) -> List[IdentityCheck]:
        """
        Check superadditivity of genus-g bridge number over summands.

        Parameters
        ----------
        genus : int
            Genus g of the bridge surface of the sum
        bridge_number : int
            b_g of the sum
        parts : list[tuple[int, int]]
            (g_i, b_{g_i}) of each summand
        tunnel_flags : Optional[list[bool]]
            For each summand, whether t(K_i) >= g_i is asserted

        Returns
        -------
        list[IdentityCheck]
            The inequality, and for two flagged summands the equality
            b_g = b_{g1} + b_{g2} - 1
        """
        lhs = sum(g + b - 1 for g, b in parts)
        rhs = genus + bridge_number - 1
        checks = [IdentityCheck("superadditivity", lhs <= rhs, Fraction(lhs), Fraction(rhs), kind="inequality")]
        if sum(g for g, _ in parts) > genus:
            checks.append(IdentityCheck("genus_split", False, Fraction(sum(g for g, _ in parts)), Fraction(genus),
                                        kind="inequality"))
        if len(parts) == 2 and tunnel_flags is not None and all(tunnel_flags):
            expected = parts[0][1] + parts[1][1] - 1
            checks.append(IdentityCheck("bridge_sum", bridge_number == expected, Fraction(bridge_number),
                                        Fraction(expected)))
        if len(parts) == 2:
            bound = BoundsManager.doll_upper_bound(parts[0][1], parts[1][1])
            checks.append(IdentityCheck("doll", bridge_number <= bound, Fraction(bridge_number), Fraction(bound),
                                        kind="inequality"))
        return checks

from fractions import Fraction
from typing import Dict, List

from exceptions.exceptions import *
from managers.bounds_manager import BoundsManager
from managers.corpus_manager import CorpusManager
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from managers.search_manager import SearchManager
from managers.sum_manager import SumManager
from models.demo_case import DemoCase
from models.diagram import Diagram
from models.search_budget import SearchBudget
from models.sum_point import SumPoint
from models.summand_profile import SummandProfile
from diagram.diagram_validation import DiagramValidation


class DemoManager:
    """
    Worked examples reproducing known numbers; each prints PASS or FAIL.
    """


    def __init__(self):
        self.corpus = CorpusManager()
        self.cases: Dict[str, DemoCase] = {case.name: case for case in (
            DemoCase("section7", self.section7,
                     {"width_H": 92, "netext_H": 10, "width_H_prime": 74, "netext_H_prime": 9,
                      "thinned_netext": 10, "thinned_width_at_most_74": True},
                     "two concentric-stack positions of one knot, widths 92 and 74"),
            DemoCase("unknot", self.unknot,
                     {"netext": 0, "width": 0, "nonnegativity_bound": 0, "improved": False},
                     "one thick twice-punctured sphere between two trivial balls"),
            DemoCase("two_bridge", self.two_bridge,
                     {"netext": 1, "width": 2, "schubert_bound": 1},
                     "a 2-bridge certificate bounds the summand count by 1"),
            DemoCase("netext0ce", self.netext0ce,
                     {"valid": True, "netext": 0, "identities_hold": True},
                     "braid closure in S^1 x S^2 with net extent 0"),
            DemoCase("theta_sum", self.theta_sum,
                     {"netext": Fraction(5, 2), "additivity_holds": True, "factors": 2, "p3": 1},
                     "trivalent vertex sum of two theta graphs loses one half of net extent"),
            DemoCase("morimoto", self.morimoto,
                     {"g0_b3": (2, 2, 2), "g1_b2": (2, 2, 1), "tunnel_n1_t1": (1, 1)},
                     "summand counts from (g, b)-decompositions and tunnel numbers"),
        )}


    def run(self, name: str = "all") -> List[str]:
        """
        Run one case, or every case for ``all``.

        Raises
        ------
        UnknownIdException
            No case has that name
        """
        if name == "all":
            return [line for case in self.cases.values() for line in case.check()]
        if name not in self.cases:
            raise UnknownIdException("demo case", name)
        return self.cases[name].check()


    @staticmethod
    def passed(lines: List[str]) -> bool:
        return not any(line.endswith(" FAIL") for line in lines)


    @staticmethod
    def greedy_thinning(diagram: Diagram, thick_ids: List[str]) -> Diagram:
        """
        Thin each named thick surface in turn with the elementary thinning of
        least resulting width.
        """
        manager = MoveManager()
        for thick_id in thick_ids:
            best = None
            for spec in manager.untelescope_candidates(diagram):
                if spec.thick_id != thick_id:
                    continue
                try:
                    thinned = manager.elementary_thinning(diagram, spec)
                except VPBridgeException:
                    continue
                if best is None or InvariantManager.width(thinned) < InvariantManager.width(best):
                    best = thinned
            if best is not None:
                diagram = best
        return diagram


    def section7(self) -> dict:
        stack = self.corpus.stacked_spheres([10, 10, 10], [4, 4])
        thinner_stack = self.corpus.stacked_spheres([6, 10, 10, 6], [4, 4, 4])
        thinned = self.greedy_thinning(stack, ["H1", "H3"])
        return {
            "width_H": InvariantManager.width(stack),
            "netext_H": InvariantManager.netext(stack),
            "width_H_prime": InvariantManager.width(thinner_stack),
            "netext_H_prime": InvariantManager.netext(thinner_stack),
            "thinned_netext": InvariantManager.netext(thinned),
            "thinned_width_at_most_74": InvariantManager.width(thinned) <= 74,
            "thinned_width": InvariantManager.width(thinned),
        }


    def unknot(self) -> dict:
        diagram = self.corpus.bridge_diagram(0, 1)
        result = SearchManager().minimize(diagram, SearchBudget(max_depth=1))
        return {
            "netext": InvariantManager.netext(diagram),
            "width": InvariantManager.width(diagram),
            "nonnegativity_bound": InvariantManager.nonnegativity_bound(diagram).bound,
            "improved": bool(result.script),
        }


    def two_bridge(self) -> dict:
        diagram = self.corpus.bridge_diagram(0, 2)
        netext = InvariantManager.netext(diagram)
        return {"netext": netext, "width": InvariantManager.width(diagram),
                "schubert_bound": BoundsManager.schubert_bound(netext)}


    def netext0ce(self) -> dict:
        diagram = self.corpus.braid_closure_diagram()
        checks = InvariantManager.check_identities(diagram)
        return {"valid": DiagramValidation.validate_diagram(diagram).is_valid,
                "netext": InvariantManager.netext(diagram),
                "identities_hold": all(check.holds for check in checks if check.kind == "identity")}


    def theta_sum(self) -> dict:
        sums = SumManager()
        theta = self.corpus.theta_diagram(0, 1)
        whole = sums.glue(theta, SumPoint("A", 3, "pocket"), theta, SumPoint("A", 3, "pocket"))
        factored = sums.split_prime(whole)
        checks = sums.additivity_check([theta, theta], whole, 0, 1)
        return {"netext": InvariantManager.netext(whole),
                "additivity_holds": all(check.holds for check in checks),
                "factors": len(factored.factors), "p3": factored.p3}


    @staticmethod
    def morimoto() -> dict:
        return {"g0_b3": BoundsManager.morimoto_bounds(0, 3),
                "g1_b2": BoundsManager.morimoto_bounds(1, 2),
                "tunnel_n1_t1": BoundsManager.tunnel_bounds(SummandProfile(n=1, tunnel_numbers=[1]))}

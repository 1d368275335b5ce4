from dataclasses import dataclass, field
from typing import List

import networkx as nx

from exceptions.exceptions import InvalidSumPointException
from models.diagram import Diagram

CUTS_2 = ("bridge", "vertical", "ghost", "loop")
CUTS_3 = ("drilled", "pocket")


@dataclass(frozen=True)
class SumPoint:
    """
    Point of a diagram at which it is summed with another one.

    Attributes
    ----------
    body_id : str
        Body containing the point
    kind : int
        Number of punctures of the summing sphere, 2 or 3
    cut : str
        Decoration the point lies on: ``bridge``, ``vertical:<sid>``,
        ``ghost:<k>`` or ``loop`` for kind 2; ``drilled:<sid>`` or ``pocket``
        for kind 3
    side : int
        1 or 2, which summand the point belongs to
    """
    body_id: str
    kind: int
    cut: str = "bridge"
    side: int = 1


    @classmethod
    def parse(cls, text: str, kind: int, side: int = 1) -> "SumPoint":
        """
        Read ``<body>`` or ``<body>:<cut>``; the cut defaults to ``bridge``
        for kind 2 and ``pocket`` for kind 3.
        """
        body_id, _, cut = text.partition(":")
        if not cut:
            cut = "bridge" if kind == 2 else "pocket"
        return cls(body_id=body_id, kind=kind, cut=cut, side=side)


    @property
    def cut_kind(self) -> str:
        return self.cut.split(":", 1)[0]


    @property
    def cut_argument(self) -> str:
        _, _, argument = self.cut.partition(":")
        return argument


    def check(self):
        if self.kind not in (2, 3):
            raise InvalidSumPointException(self.body_id, f"kind must be 2 or 3, got {self.kind}")
        allowed = CUTS_2 if self.kind == 2 else CUTS_3
        if self.cut_kind not in allowed:
            raise InvalidSumPointException(self.body_id, f"cut {self.cut} is not one of {', '.join(allowed)}")


    def __str__(self):
        return f"{self.body_id}:{self.cut}"


@dataclass
class FactorizationResult:
    """
    Factors of a diagram cut along thin summing spheres.

    Attributes
    ----------
    factors : list[Diagram]
        Capped factors
    p2 : int
        Number of twice-punctured summing spheres
    p3 : int
        Number of thrice-punctured summing spheres
    dual_tree : nx.Graph
        Tree on factor indices with one edge per summing sphere
    """
    factors: List[Diagram] = field(default_factory=list)
    p2: int = 0
    p3: int = 0
    dual_tree: nx.Graph = field(default_factory=nx.Graph)


    def summary_line(self) -> str:
        return f"factors={len(self.factors)} p2={self.p2} p3={self.p3}"

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple


class TKind(Enum):
    EMPTY = "empty"
    LINK = "link"
    GRAPH = "graph"


@dataclass(frozen=True)
class GraphPairMeta:
    """
    Global data of the (3-manifold, graph) pair carried by a diagram.

    The three flags and the Heegaard genus bound are user assertions about the
    pair; the engine never derives them.

    Attributes
    ----------
    t_kind : TKind
        Whether T is empty, a link, or a graph with interior vertices
    vertex_valences : tuple[int, ...]
        Sorted valences of the interior vertices of T
    irreducible_flag : bool
        M is irreducible and T is irreducible (no sphere meeting T once)
    every_sphere_separates_flag : bool
        Every sphere in M separates
    every_surface_separates_flag : bool
        Every closed surface in M separates
    heegaard_genus_bound : Optional[int]
        Asserted Heegaard genus g(M)
    """
    t_kind: TKind = TKind.LINK
    vertex_valences: Tuple[int, ...] = field(default_factory=tuple)
    irreducible_flag: bool = False
    every_sphere_separates_flag: bool = False
    every_surface_separates_flag: bool = False
    heegaard_genus_bound: Optional[int] = None


    def __post_init__(self):
        object.__setattr__(self, "vertex_valences", tuple(sorted(self.vertex_valences)))


    @property
    def flags(self) -> Tuple[str, ...]:
        names = []
        if self.irreducible_flag:
            names.append("irr")
        if self.every_sphere_separates_flag:
            names.append("ssep")
        if self.every_surface_separates_flag:
            names.append("csep")
        return tuple(names)


    def width_hypothesis(self, thick_genera) -> bool:
        """
        Whether the width monotonicity hypotheses hold.

        Requires an irreducible T, every sphere separating, and either every
        closed surface separating or every thick surface of genus at most 2.
        """
        if not (self.irreducible_flag and self.every_sphere_separates_flag):
            return False
        return self.every_surface_separates_flag or all(genus <= 2 for genus in thick_genera)


    def with_valences(self, valences) -> "GraphPairMeta":
        t_kind = self.t_kind
        if valences and t_kind != TKind.GRAPH:
            t_kind = TKind.GRAPH
        return GraphPairMeta(
            t_kind=t_kind,
            vertex_valences=tuple(valences),
            irreducible_flag=self.irreducible_flag,
            every_sphere_separates_flag=self.every_sphere_separates_flag,
            every_surface_separates_flag=self.every_surface_separates_flag,
            heegaard_genus_bound=self.heegaard_genus_bound,
        )

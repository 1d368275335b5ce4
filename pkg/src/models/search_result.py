from dataclasses import dataclass, field
from typing import Dict, List, Optional

from models.compressionbody import Compressionbody
from models.diagram import Diagram
from models.handle_presentation import HandlePresentation
from models.invariant_report import DeltaZeroClass, InvariantReport
from models.move_spec import MoveSpec
from models.surface import SurfaceComp


@dataclass(frozen=True)
class EnumeratedBody:
    """
    A summary produced by body enumeration.

    ``witness`` is None when the handle construction cannot realize the
    summary; ``witness_class`` is the extent-neutral type read off the witness.
    """
    body: Compressionbody
    surfaces: Dict[str, SurfaceComp]
    witness: Optional[HandlePresentation]
    witness_class: DeltaZeroClass = DeltaZeroClass.NOT_DELTA_ZERO


    @property
    def realizable(self) -> bool:
        return self.witness is not None


@dataclass
class SearchResult:
    """
    Outcome of a bounded minimization.

    The invariants of ``best`` are upper bounds for the minima over all
    multiple v.p.-bridge surfaces of the pair, never the minima themselves.

    Attributes
    ----------
    best : Diagram
        Best diagram found
    script : list[MoveSpec]
        Primitive moves taking the start diagram to ``best``
    report : InvariantReport
        Invariants of ``best``
    visited : int
        Distinct diagrams seen
    depth : int
        Deepest level expanded
    exhausted : bool
        The diagram budget ran out before the depth limit
    """
    best: Diagram
    script: List[MoveSpec] = field(default_factory=list)
    report: Optional[InvariantReport] = None
    visited: int = 0
    depth: int = 0
    exhausted: bool = False


    def lines(self):
        lines = self.report.lines()[:4] if self.report is not None else []
        lines += [f"moves     {len(self.script)}",
                  f"visited   {self.visited}",
                  f"depth     {self.depth}",
                  f"exhausted {'yes' if self.exhausted else 'no'}",
                  "upper_bound=yes"]
        return lines

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from utils.helper_functions import format_number


class DeltaZeroClass(Enum):
    BALL_ARC = "ball_arc"
    SOLID_TORUS_EMPTY = "solid_torus_empty"
    SOLID_TORUS_CORE = "solid_torus_core"
    VERTICAL_GHOST_TYPE4 = "vertical_ghost_type4"
    NOT_DELTA_ZERO = "not_delta_zero"


@dataclass(frozen=True)
class IdentityCheck:
    """
    Both sides of one global identity evaluated on a diagram.

    Lints are necessary conditions for reduced diagrams; they are reported but
    do not decide whether the identities hold.
    """
    name: str
    holds: bool
    lhs: Fraction
    rhs: Fraction
    kind: str = "identity"


    def line(self) -> str:
        return (f"{self.kind} {self.name} holds={'yes' if self.holds else 'no'} "
                f"lhs={format_number(self.lhs)} rhs={format_number(self.rhs)}")


@dataclass
class InvariantReport:
    """
    Invariants of a diagram.

    Attributes
    ----------
    netext : Fraction
        ext(thick) - ext(thin)
    width : Fraction
        2 (sum of ext^2 over thick - sum of ext^2 over thin)
    netchi : int
        -chi(thick) + chi(thin)
    gabai_width : Optional[Fraction]
        Half the difference of squared puncture sums, when every surface is a sphere
    delta_by_body : dict[str, Fraction]
        Extent difference of every body
    identity_checks : list[IdentityCheck]
        Filled in when identities are requested
    """
    netext: Fraction
    width: Fraction
    netchi: int
    gabai_width: Optional[Fraction] = None
    delta_by_body: Dict[str, Fraction] = field(default_factory=dict)
    identity_checks: List[IdentityCheck] = field(default_factory=list)


    @property
    def identities_hold(self) -> bool:
        return all(check.holds for check in self.identity_checks if check.kind == "identity")


    def lines(self) -> List[str]:
        rows = [("netext", format_number(self.netext)),
                ("width", format_number(self.width)),
                ("netchi", format_number(self.netchi)),
                ("gabai_width", format_number(self.gabai_width))]
        rows += [(f"delta[{body_id}]", format_number(value)) for body_id, value in sorted(self.delta_by_body.items())]
        pad = max(len(key) for key, _ in rows)
        lines = [f"{key.ljust(pad)}  {value}" for key, value in rows]
        lines += [check.line() for check in self.identity_checks]
        return lines


@dataclass(frozen=True)
class NonnegativityResult:
    bound: Fraction
    satisfied: bool
    width_checked: bool = False
    width_satisfied: bool = True


@dataclass
class EqualityResult:
    """
    Consequences of a locally thin diagram attaining the nonnegativity bound.

    Attributes
    ----------
    attained_by : Optional[str]
        ``netext`` or ``width`` when the lint passes and that quantity attains
        the bound, None otherwise
    classes : dict[str, Optional[DeltaZeroClass]]
        Extent-neutral type of every body when the bound is attained; None
        for bodies of a graph, which are only checked for delta 0
    violations : list[str]
        Bodies contradicting the equality case
    unknot : Optional[bool]
        With net extent 0 on a link where every sphere separates, whether the
        diagram is two ball-arc bodies on one sphere; None when not applicable
    netext_one : Optional[str]
        ``(1,1)`` or ``2-bridge`` for a closed knot diagram of net extent 1
    """
    attained_by: Optional[str] = None
    classes: Dict[str, Optional[DeltaZeroClass]] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    unknot: Optional[bool] = None
    netext_one: Optional[str] = None


    @property
    def holds(self) -> bool:
        return not self.violations


    def lines(self) -> List[str]:
        if self.attained_by is None:
            lines = ["equality attained=no"]
        else:
            lines = [f"equality attained={self.attained_by} holds={'yes' if self.holds else 'no'}"]
            lines += [f"class[{body_id}] {'n/a' if kind is None else kind.value}"
                      for body_id, kind in sorted(self.classes.items())]
            lines += [f"violation {violation}" for violation in self.violations]
        if self.unknot is not None:
            lines.append(f"unknot {'yes' if self.unknot else 'no'} assuming no (lens space, core loop), "
                         f"(lens space, Hopf link), (S^3, Hopf link) or (solid torus, core loop) summand")
        if self.netext_one is not None:
            lines.append(f"netext_one {self.netext_one} assuming a knot of minimal net extent "
                         f"with no (lens space, core loop) summand")
        return lines

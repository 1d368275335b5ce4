from dataclasses import dataclass, field
from typing import List


@dataclass
class LintReport:
    """
    Necessary conditions for a locally thin diagram.

    Attributes
    ----------
    issues : list[str]
        Combinatorial conditions that fail
    asserted : list[str]
        Geometric conditions the engine cannot check and leaves to the user
    """
    issues: List[str] = field(default_factory=list)
    asserted: List[str] = field(default_factory=list)


    @property
    def passes(self) -> bool:
        return not self.issues


    def lines(self) -> List[str]:
        lines = [f"lint {'pass' if self.passes else 'fail'}"]
        lines += [f"issue {issue}" for issue in self.issues]
        lines += [f"asserted {condition}" for condition in self.asserted]
        return lines

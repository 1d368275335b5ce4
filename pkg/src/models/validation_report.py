from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from exceptions.exceptions import VPBridgeException


@dataclass
class ValidationReport:
    """Ordered list of violated invariants; an empty report means valid."""
    violations: List[VPBridgeException] = field(default_factory=list)


    def add(self, violation: Optional[VPBridgeException]):
        if violation is not None:
            self.violations.append(violation)


    def extend(self, violations: Iterable[Optional[VPBridgeException]]):
        for violation in violations:
            self.add(violation)


    def merge(self, other: "ValidationReport"):
        self.violations.extend(other.violations)


    def first(self) -> Optional[VPBridgeException]:
        return self.violations[0] if self.violations else None


    @property
    def is_valid(self) -> bool:
        return not self.violations


    def lines(self) -> List[str]:
        return [violation.message for violation in self.violations]

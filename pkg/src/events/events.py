from enum import Enum, auto
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from utils.helper_functions import format_number


class EventType(Enum):
    # Move Events
    UNTELESCOPED = auto()
    CONSOLIDATED = auto()
    DESTABILIZED = auto()
    UNPERTURBED = auto()
    REMOVABLE_ARC_REMOVED = auto()

    # Script Events
    THINNING_STARTED = auto()
    THINNING_FINISHED = auto()

    # Sum Events
    DIAGRAMS_GLUED = auto()
    DIAGRAM_SPLIT = auto()

    # Search Events
    SEARCH_STARTED = auto()
    SEARCH_DEPTH_FINISHED = auto()
    SEARCH_IMPROVED = auto()
    SEARCH_EXHAUSTED = auto()
    SEARCH_FINISHED = auto()


@dataclass
class Event:
    """
    Event class to represent engine steps.

    Attributes:
        type: The type of event that occurred.
        move: Optional text of the move that was applied.
        netext: Optional net extent after the step.
        width: Optional width after the step.
        netchi: Optional net Euler characteristic after the step.
        depth: Optional search depth.
        count: Optional count (frontier size, diagrams visited, parts).
        description: Human-readable description of what happened.
        additional_data: Dictionary for any other event-specific data.
    """
    type: EventType
    move: Optional[str] = None
    netext: Optional[Fraction] = None
    width: Optional[Fraction] = None
    netchi: Optional[int] = None
    depth: Optional[int] = None
    count: Optional[int] = None
    description: str = ""
    additional_data: Dict[str, Any] = None

    def __post_init__(self):
        if self.additional_data is None:
            self.additional_data = {}

        if not self.description:
            self.description = self._generate_description()

    def invariants_text(self) -> str:
        if self.netext is None:
            return ""
        return f" [netext={format_number(self.netext)} width={format_number(self.width)} netchi={format_number(self.netchi)}]"

    def _generate_description(self) -> str:
        """Generate a human-readable description of the event based on its type and data."""
        state = self.invariants_text()
        descriptions = {
            EventType.UNTELESCOPED: f"untelescoped: {self.move}{state}",
            EventType.CONSOLIDATED: f"consolidated: {self.move}{state}",
            EventType.DESTABILIZED: f"destabilized: {self.move}{state}",
            EventType.UNPERTURBED: f"unperturbed: {self.move}{state}",
            EventType.REMOVABLE_ARC_REMOVED: f"removed removable arc: {self.move}{state}",

            EventType.THINNING_STARTED: f"thinning script with {self.count} moves started{state}",
            EventType.THINNING_FINISHED: f"thinning script finished{state}",

            EventType.DIAGRAMS_GLUED: f"glued two diagrams{state}",
            EventType.DIAGRAM_SPLIT: f"split into {self.count} prime factors",

            EventType.SEARCH_STARTED: f"search started{state}",
            EventType.SEARCH_DEPTH_FINISHED: f"depth {self.depth} finished with frontier {self.count}",
            EventType.SEARCH_IMPROVED: f"improved at depth {self.depth}{state}",
            EventType.SEARCH_EXHAUSTED: f"search stopped after {self.count} diagrams",
            EventType.SEARCH_FINISHED: f"search finished{state}",
        }
        return descriptions.get(self.type, f"Event: {self.type}")

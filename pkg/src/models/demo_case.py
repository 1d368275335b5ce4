from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from utils.helper_functions import format_number


@dataclass
class DemoCase:
    """
    A self-checking worked example.

    Attributes
    ----------
    name : str
        Name used on the command line
    run : Callable[[], Dict[str, Any]]
        Builds the diagrams of the example and returns the computed values
    expected : Dict[str, Any]
        Values the run must reproduce exactly
    source : str
        Where the expected values come from
    """
    name: str
    run: Callable[[], Dict[str, Any]]
    expected: Dict[str, Any] = field(default_factory=dict)
    source: str = ""


    def check(self) -> List[str]:
        """Run the example and return one line per expected value, then PASS or FAIL."""
        found = self.run()
        lines, passed = [], True
        for key, value in self.expected.items():
            ok = found.get(key) == value
            passed = passed and ok
            lines.append(f"{self.name} {key}={_text(found.get(key))} expected={_text(value)} {'ok' if ok else 'MISMATCH'}")
        lines += [f"{self.name} {key}={_text(value)}" for key, value in found.items() if key not in self.expected]
        lines.append(f"{self.name} {'PASS' if passed else 'FAIL'}")
        return lines


def _text(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, tuple):
        return ",".join(_text(item) for item in value)
    if isinstance(value, int) or hasattr(value, "denominator"):
        return format_number(value)
    return str(value)

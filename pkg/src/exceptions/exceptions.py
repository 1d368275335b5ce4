class VPBridgeException(Exception):
    """Base class for all vpbridge engine exceptions."""
    pass


class DiagramParseException(VPBridgeException):
    """Raised when a diagram or move file line cannot be parsed."""

    def __init__(self, line_no: int, detail: str):
        self.line_no = line_no
        self.message = f"Parse error on line {line_no}: {detail}"
        super().__init__(self.message)


class UnknownIdException(VPBridgeException):
    """Raised when a record references a surface or body id that does not exist."""

    def __init__(self, kind: str, identifier: str):
        self.message = f"Unknown {kind} id {identifier}"
        super().__init__(self.message)


class DuplicateIdException(VPBridgeException):
    """Raised when a surface or body id is declared twice."""

    def __init__(self, kind: str, identifier: str):
        self.message = f"Duplicate {kind} id {identifier}"
        super().__init__(self.message)


class NegativeCountException(VPBridgeException):
    """Raised when a genus, puncture or arc count is negative."""

    def __init__(self, owner: str, field: str, value):
        self.message = f"{owner}: {field} must be non-negative, got {value}"
        super().__init__(self.message)


class RunningAssumptionException(VPBridgeException):
    """Raised when a boundary sphere meets T in two or fewer points, or a vertex has valence below three."""

    def __init__(self, detail: str):
        self.message = f"Running assumption violated: {detail}"
        super().__init__(self.message)


class PunctureBookkeepingException(VPBridgeException):
    """Raised when arc endpoints do not account for the punctures of a surface."""

    def __init__(self, body_id: str, surface_id: str, expected: int, found: int):
        self.message = f"Body {body_id}: surface {surface_id} has {expected} punctures but arcs supply {found} endpoints"
        super().__init__(self.message)


class GenusFeasibilityException(VPBridgeException):
    """Raised when the genus of the positive boundary is below the handle-count lower bound."""

    def __init__(self, body_id: str, genus: int, bound: int):
        self.message = f"Body {body_id}: genus of positive boundary is {genus}, handle construction needs at least {bound}"
        super().__init__(self.message)


class OncePuncturedSphereException(VPBridgeException):
    """Raised when a negative boundary component is a once-punctured sphere."""

    def __init__(self, body_id: str, surface_id: str):
        self.message = f"Body {body_id}: negative boundary {surface_id} is a once-punctured sphere"
        super().__init__(self.message)


class GhostGraphException(VPBridgeException):
    """Raised when a ghost arc joins surfaces outside the negative boundary of its body."""

    def __init__(self, body_id: str, surface_id: str):
        self.message = f"Body {body_id}: ghost arc endpoint {surface_id} is not a negative boundary component"
        super().__init__(self.message)


class PocketTreeException(VPBridgeException):
    """Raised when pocket trees appear outside a graph pair."""

    def __init__(self, body_id: str):
        self.message = f"Body {body_id}: pocket trees require t_kind=graph"
        super().__init__(self.message)


class IncidenceException(VPBridgeException):
    """Raised when a surface is adjacent to the wrong number of bodies for its role."""

    def __init__(self, surface_id: str, role: str, expected: int, found: int):
        self.message = f"Surface {surface_id} ({role}) must be adjacent to {expected} bodies, found {found}"
        super().__init__(self.message)


class RoleMismatchException(VPBridgeException):
    """Raised when a body uses a surface in a position its role forbids."""

    def __init__(self, body_id: str, surface_id: str, role: str, position: str):
        self.message = f"Body {body_id}: {role} surface {surface_id} cannot be used as {position}"
        super().__init__(self.message)


class OrientationException(VPBridgeException):
    """Raised when transverse orientation records are missing or incoherent."""

    def __init__(self, detail: str):
        self.message = f"Orientation: {detail}"
        super().__init__(self.message)


class ClosedFlowLineException(VPBridgeException):
    """Raised when the orientation digraph on bodies has a directed cycle."""

    def __init__(self, cycle: list):
        self.message = f"Closed flow line through bodies {' -> '.join(cycle)}"
        super().__init__(self.message)


class VertexValenceException(VPBridgeException):
    """Raised when the recorded vertex valences disagree with drilled spheres and pocket trees."""

    def __init__(self, recorded: list, found: list):
        self.message = f"Vertex valences {recorded} do not match drilled spheres and pocket trees {found}"
        super().__init__(self.message)


class InvalidDiagramException(VPBridgeException):
    """Raised when an operation requires a valid diagram and receives an invalid one."""

    def __init__(self, report):
        self.report = report
        first = report.first()
        self.message = f"Invalid diagram: {first.message if first is not None else 'unknown violation'}"
        super().__init__(self.message)


class DanglingEndpointException(VPBridgeException):
    """Raised when a cored 1-handle binds an endpoint that is missing or already used."""

    def __init__(self, handle_index: int, detail: str):
        self.message = f"Cored 1-handle {handle_index}: {detail}"
        super().__init__(self.message)


class DisconnectedBodyException(VPBridgeException):
    """Raised when a handle presentation does not yield a connected body."""

    def __init__(self, components: int):
        self.message = f"Handle presentation has {components} components, expected 1"
        super().__init__(self.message)


class NegativeGenusException(VPBridgeException):
    """Raised when Euler characteristic bookkeeping yields a negative or fractional genus."""

    def __init__(self, euler_characteristic: int):
        self.message = f"Derived positive boundary has Euler characteristic {euler_characteristic}, not a closed orientable surface"
        super().__init__(self.message)


class InvalidMoveException(VPBridgeException):
    """Raised when a move certificate fails its variant-specific checks."""

    def __init__(self, move: str, detail: str):
        self.message = f"Invalid {move}: {detail}"
        super().__init__(self.message)


class MonotonicityViolationException(VPBridgeException):
    """Raised when a move increases a quantity it must not increase."""

    def __init__(self, move: str, quantity: str, before, after):
        self.message = f"{move} increased {quantity} from {before} to {after}"
        super().__init__(self.message)


class EmptyScriptException(VPBridgeException):
    """Raised when an extended thinning script has no opening elementary thinning."""

    def __init__(self):
        self.message = "Extended thinning script must begin with an untelescope"
        super().__init__(self.message)


class KindMismatchException(VPBridgeException):
    """Raised when two summing points have different kinds."""

    def __init__(self, kind1: int, kind2: int):
        self.message = f"Summing points have kinds {kind1} and {kind2}"
        super().__init__(self.message)


class InvalidSumPointException(VPBridgeException):
    """Raised when a summing point does not name a usable arc or vertex."""

    def __init__(self, body_id: str, detail: str):
        self.message = f"Summing point in body {body_id}: {detail}"
        super().__init__(self.message)


class PreconditionException(VPBridgeException):
    """Raised when a user-asserted flag required by an operation is not set."""

    def __init__(self, operation: str, detail: str):
        self.message = f"{operation} requires {detail}"
        super().__init__(self.message)


class DeltaNonZeroException(VPBridgeException):
    """Raised when the delta-zero classifier receives a body with nonzero delta."""

    def __init__(self, body_id: str, delta):
        self.message = f"Body {body_id} has delta {delta}, expected 0"
        super().__init__(self.message)


class HypothesisViolatedException(VPBridgeException):
    """Raised when a body breaks the hypotheses of the delta-zero classification."""

    def __init__(self, body_id: str, detail: str):
        self.message = f"Body {body_id}: {detail}"
        super().__init__(self.message)


class LimitsTooLargeException(VPBridgeException):
    """Raised when enumeration limits exceed the guard."""

    def __init__(self, limits: tuple, cap: tuple):
        self.message = f"Enumeration limits {limits} exceed the guard of {cap}"
        super().__init__(self.message)


class DegenerateInputException(VPBridgeException):
    """Raised when a closed-form bound receives a degenerate input."""

    def __init__(self, detail: str):
        self.message = f"Degenerate input: {detail}"
        super().__init__(self.message)


class BudgetException(VPBridgeException):
    """Raised when a search budget is inconsistent with the starting diagram."""

    def __init__(self, detail: str):
        self.message = f"Search budget: {detail}"
        super().__init__(self.message)


class TracingException(VPBridgeException):
    """Raised when traced pieces do not close up into arcs, loops and pocket trees."""

    def __init__(self, detail: str):
        self.message = f"Arc tracing: {detail}"
        super().__init__(self.message)

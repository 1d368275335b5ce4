from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple


class ZeroHandleKind(Enum):
    TRIVIAL_BALL_EMPTY = "trivial_ball_empty"
    TRIVIAL_BALL_ARC = "trivial_ball_arc"
    TRIVIAL_BALL_TREE = "trivial_ball_tree"
    PRODUCT = "product"


@dataclass(frozen=True)
class ZeroHandle:
    """
    A building block of a v.p.-compressionbody.

    Trivial balls carry no graph, one boundary parallel arc, or one three-legged
    tree. A product is F x I over a negative boundary component F with a number
    of vertical strands.

    Attributes
    ----------
    kind : ZeroHandleKind
        Type of the block
    surface_id : Optional[str]
        Negative boundary component of a product
    genus : int
        Genus of that component (products only)
    strands : int
        Vertical strand count (products only)
    """
    kind: ZeroHandleKind
    surface_id: Optional[str] = None
    genus: int = 0
    strands: int = 0


    @property
    def endpoint_count(self) -> int:
        if self.kind == ZeroHandleKind.TRIVIAL_BALL_ARC:
            return 2
        if self.kind == ZeroHandleKind.TRIVIAL_BALL_TREE:
            return 3
        if self.kind == ZeroHandleKind.PRODUCT:
            return self.strands
        return 0


    @property
    def top_euler_characteristic(self) -> int:
        if self.kind == ZeroHandleKind.PRODUCT:
            return 2 - 2 * self.genus
        return 2


@dataclass(frozen=True)
class OneHandle:
    """
    A 1-handle attached to the tops of zero-handles.

    Attributes
    ----------
    ends : tuple[int, int]
        Indices of the zero-handles the feet lie on (equal for a self-attachment)
    cored : bool
        Whether the core of the handle is part of T
    endpoint_bindings : Optional[tuple[int, int]]
        For cored handles, the graph endpoint index on each end's top joined by the core
    """
    ends: Tuple[int, int]
    cored: bool = False
    endpoint_bindings: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class HandlePresentation:
    zero_handles: Tuple[ZeroHandle, ...] = field(default_factory=tuple)
    one_handles: Tuple[OneHandle, ...] = field(default_factory=tuple)
